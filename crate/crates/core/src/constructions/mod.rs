//! Derived structures: quotients and projections, idealizations `R(+)M`,
//! localizations, and closed-form facts about ideals of ℤ.

mod idealization;
mod localization;
mod maps;

use crate::elemset::ElemSet;
use crate::module::Module;
use crate::ring::{integer_ideal_predicate, IdealKind};
use crate::verdict::Verdict;

pub use idealization::{idealization, pair_ideal, Idealization};
pub use localization::{
    localize_module, localize_ring, LocalizedModule, LocalizedRing, MultiplicativeSet,
};
pub use maps::{product_with_projections, quotient_module, MapKind, ModuleMap};

/// `Z_N(M) = {r : rm ∈ N for some m ∉ N}`.
pub fn submodule_zero_divisor_set(module: &Module, n: &ElemSet) -> ElemSet {
    ElemSet::from_indices(
        module.ring().size(),
        module.scalars().filter(|&r| {
            module
                .elements()
                .any(|m| !n.contains(m) && n.contains(module.act(r, m)))
        }),
    )
}

/// Predicates of the submodule `nℤ` of the ℤ-module ℤ, which coincide with
/// those of the ideal `nℤ` since `(nℤ:ℤ) = nℤ`, `M-rad(nℤ) = rad(n)ℤ` and
/// `J(ℤ) = 0`.
pub fn symbolic_z_ideal_predicate(n: u64, kind: IdealKind) -> Verdict {
    integer_ideal_predicate(n, kind)
}
