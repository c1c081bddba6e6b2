//! Finite-model workbench for radicals, residuals and quasi J-submodules of
//! modules over finite commutative rings.

pub mod cli;
pub mod constructions;
pub mod coords;
pub mod elemset;
pub mod error;
pub mod harness;
pub mod limits;
pub mod module;
pub mod ring;
pub mod verdict;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use verdict::{Entry, Reason, Verdict, Witness};
