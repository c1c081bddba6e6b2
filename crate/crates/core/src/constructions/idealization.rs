use std::sync::Arc;

use crate::coords::Coords;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{ideal_times, Module};
use crate::ring::{radical_of_ideal, Ideal, Ring};

/// `R(+)M`, the ring on `R×M` with `(r₁,m₁)(r₂,m₂) = (r₁r₂, r₁m₂+r₂m₁)`.
/// The pair `(r, m)` has index `r·|M| + m`.
#[derive(Debug, Clone)]
pub struct Idealization {
    ring: Arc<Ring>,
    base: Arc<Ring>,
    module: Arc<Module>,
}

/// Builds `R(+)M` and checks `J(R(+)M) = J(R)(+)M`. A ℤ-module is first
/// read as a module over `ℤ_e`, `e` its exponent.
pub fn idealization(module: &Arc<Module>) -> Result<Idealization> {
    let module = if module.ring().is_integer_adapter() {
        integer_surrogate(module)?
    } else {
        module.clone()
    };
    let base = module.ring().clone();
    let (q, k) = (base.size(), module.size());
    let size = q.saturating_mul(k);
    crate::limits::check_carrier("idealization carrier", size)?;
    let idx = |r: usize, m: usize| (r * k + m) as u32;
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for a in 0..size {
        let (r1, m1) = (a / k, a % k);
        for b in 0..size {
            let (r2, m2) = (b / k, b % k);
            add.push(idx(base.add(r1, r2), module.add(m1, m2)));
            let m = module.add(module.act(r1, m2), module.act(r2, m1));
            mul.push(idx(base.mul(r1, r2), m));
        }
    }
    let names = (0..size)
        .map(|a| format!("({},{})", base.name(a / k), module.name(a % k)))
        .collect();
    let coords = Coords::product(&[base.coords(), module.coords()], &[q, k]);
    let label = format!("{}(+){}", base.label(), module.label());
    let ring = Ring::from_tables(
        size,
        add,
        mul,
        idx(base.zero(), module.zero()) as usize,
        idx(base.one(), module.zero()) as usize,
        Some(names),
        Some(coords),
        Some(label),
    )?;
    let out = Idealization { ring, base, module };
    out.verify_jacobson_identity()?;
    Ok(out)
}

/// The same abelian group as a module over `ℤ_e`.
fn integer_surrogate(module: &Arc<Module>) -> Result<Arc<Module>> {
    let e = module.exponent();
    if e < 2 {
        return Err(Error::ZeroModule("idealization of the zero ℤ-module"));
    }
    let ring = Ring::residue(&[e])?;
    let k = module.size();
    let mut add = Vec::with_capacity(k * k);
    for a in module.elements() {
        for b in module.elements() {
            add.push(module.add(a, b) as u32);
        }
    }
    let mut action = Vec::with_capacity(e as usize * k);
    for r in 0..e as usize {
        for m in module.elements() {
            action.push(module.act(r, m) as u32);
        }
    }
    Module::assemble(
        ring,
        k,
        module.zero(),
        add,
        action,
        module.names().to_vec(),
        module.coords().clone(),
        module.label().to_string(),
    )
}

impl Idealization {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn module(&self) -> &Arc<Module> {
        &self.module
    }

    pub fn pair(&self, r: usize, m: usize) -> usize {
        r * self.module.size() + m
    }

    /// `A(+)B = {(a, b) : a ∈ A, b ∈ B}` as an element set.
    pub fn pairs(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.ring.size(),
            a.iter()
                .flat_map(|r| b.iter().map(move |m| self.pair(r, m))),
        )
    }

    /// `J(R(+)M) = J(R)(+)M`.
    pub fn verify_jacobson_identity(&self) -> Result<()> {
        let lhs = self.ring.invariants()?.jacobson.clone();
        let rhs = self.pairs(&self.base.invariants()?.jacobson, &self.module.full());
        if lhs != rhs {
            return Err(Error::IdentityViolation {
                identity: "J(R(+)M) = J(R)(+)M",
                detail: format!(
                    "{} has {} elements, expected {}",
                    self.ring.label(),
                    lhs.count(),
                    rhs.count()
                ),
            });
        }
        Ok(())
    }

    /// `√(I(+)N) = √I(+)M` for a pair ideal.
    pub fn verify_radical_identity(&self, ideal: &Ideal, n: &ElemSet) -> Result<()> {
        let p = self.pair_ideal(ideal, n)?;
        let lhs = radical_of_ideal(&self.ring, &p);
        let rhs = self.pairs(
            radical_of_ideal(&self.base, ideal).elements(),
            &self.module.full(),
        );
        if lhs.elements() != &rhs {
            return Err(Error::IdentityViolation {
                identity: "√(I(+)N) = √I(+)M",
                detail: format!(
                    "I={}, N={}",
                    ideal.display(&self.base),
                    self.module.display_set(n)
                ),
            });
        }
        Ok(())
    }

    /// `I(+)N`, an ideal iff `IM ⊆ N`.
    pub fn pair_ideal(&self, ideal: &Ideal, n: &ElemSet) -> Result<Ideal> {
        if !ideal_times(&self.module, ideal, &self.module.full()).is_subset(n) {
            return Err(Error::NotPairIdeal);
        }
        let set = self.pairs(ideal.elements(), n);
        Ok(Ideal::from_set(&self.ring, set))
    }
}

/// Free-standing form of [`Idealization::pair_ideal`].
pub fn pair_ideal(ring: &Idealization, ideal: &Ideal, n: &ElemSet) -> Result<Ideal> {
    ring.pair_ideal(ideal, n)
}
