//! Process-wide caps that keep the exhaustive loops tractable.
//!
//! The carrier cap defaults to 4096 and can be overridden with the
//! `MODRAD_CAP` environment variable or [`set_carrier_cap`].

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_CARRIER_CAP: usize = 4096;
pub const DEFAULT_IDEAL_CAP: usize = 10_000;
pub const DEFAULT_SUBMODULE_CAP: usize = 20_000;

static CARRIER_OVERRIDE: AtomicUsize = AtomicUsize::new(0);
static ENV_CAP: OnceLock<usize> = OnceLock::new();

pub fn carrier_cap() -> usize {
    match CARRIER_OVERRIDE.load(Ordering::Relaxed) {
        0 => *ENV_CAP.get_or_init(|| {
            std::env::var("MODRAD_CAP")
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .filter(|&v: &usize| v > 0)
                .unwrap_or(DEFAULT_CARRIER_CAP)
        }),
        n => n,
    }
}

/// Overrides the carrier cap for the rest of the process. `0` restores the
/// environment/default value.
pub fn set_carrier_cap(cap: usize) {
    CARRIER_OVERRIDE.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_carrier(what: &'static str, actual: usize) -> Result<()> {
    let limit = carrier_cap();
    if actual > limit {
        return Err(Error::CapExceeded {
            what,
            limit,
            actual,
        });
    }
    Ok(())
}
