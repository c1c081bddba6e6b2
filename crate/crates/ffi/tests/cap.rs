//! Own process: the carrier cap is global.

use std::ffi::{CStr, CString};
use std::ptr;

use modrad_ffi::*;

#[test]
fn carrier_cap_is_enforced() {
    unsafe {
        modrad_set_carrier_cap(8);
        let mut obj = ptr::null_mut();
        let status = modrad_eval(CString::new("Zn(9)").unwrap().as_ptr(), &mut obj);
        modrad_set_carrier_cap(0);
        assert_eq!(status, ModradStatus::EvalError);
        assert!(CStr::from_ptr(modrad_last_error_message())
            .to_str()
            .unwrap()
            .contains("cap"));
    }
}
