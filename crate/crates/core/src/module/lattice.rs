use std::collections::HashSet;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::Ideal;

use super::predicates::prime_verdict;
use super::{Module, Submodule};

/// Smallest submodule containing `gens`.
pub fn submodule_generated(module: &Module, gens: &[usize]) -> Result<Submodule> {
    for &g in gens {
        module.check_element(g)?;
    }
    let seed = ElemSet::from_indices(module.size(), gens.iter().copied());
    Ok(Submodule::new(module.span_of(&seed), Some(gens.to_vec())))
}

/// Every submodule, smallest first, each with a minimal-length generator
/// list.
pub fn all_submodules(module: &Module) -> Result<Arc<Vec<Submodule>>> {
    module
        .caches
        .lattice
        .get_or_init(|| enumerate(module, limits::DEFAULT_SUBMODULE_CAP).map(Arc::new))
        .clone()
}

fn enumerate(module: &Module, cap: usize) -> Result<Vec<Submodule>> {
    let cyclics: Vec<ElemSet> = module.elements().map(|m| module.cyclic(m)).collect();
    let zero = module.zero_submodule();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(zero.clone());
    let mut found = vec![(zero, Vec::<usize>::new())];
    let mut level = vec![0usize];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &idx in &level {
            let (set, gens) = found[idx].clone();
            for x in module.elements() {
                if set.contains(x) {
                    continue;
                }
                let bigger = module.sum(&set, &cyclics[x]);
                if seen.insert(bigger.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "submodule lattice",
                            limit: cap,
                            actual: seen.len(),
                        });
                    }
                    let mut g = gens.clone();
                    g.push(x);
                    next.push(found.len());
                    found.push((bigger, g));
                }
            }
        }
        level = next;
    }
    let mut subs: Vec<Submodule> = found
        .into_iter()
        .map(|(set, gens)| Submodule::new(set, Some(gens)))
        .collect();
    subs.sort_by(|a, b| (a.elements.count(), &a.elements).cmp(&(b.elements.count(), &b.elements)));
    Ok(subs)
}

/// `(N:M) = {r : rM ⊆ N}`; for ℤ-modules the symbolic `nℤ`.
pub fn residual_ideal(module: &Module, n: &ElemSet) -> Ideal {
    let ring = module.ring();
    let set = ElemSet::from_indices(
        ring.size(),
        module
            .scalars()
            .filter(|&r| module.elements().all(|m| n.contains(module.act(r, m)))),
    );
    Ideal::from_set(ring, set)
}

/// `I·N`, the submodule generated by `{an : a ∈ I, n ∈ N}`.
pub fn ideal_times(module: &Module, ideal: &Ideal, n: &ElemSet) -> ElemSet {
    let mut seed = ElemSet::empty(module.size());
    for a in ideal.elements().iter() {
        for m in n.iter() {
            seed.insert(module.act(a, m));
        }
    }
    module.additive_span(&seed)
}

/// `[N:_M I] = {m : Im ⊆ N}`.
pub fn colon_submodule(module: &Module, n: &ElemSet, ideal: &Ideal) -> ElemSet {
    colon_scalars(module, n, ideal.elements())
}

fn colon_scalars(module: &Module, n: &ElemSet, scalars: &ElemSet) -> ElemSet {
    ElemSet::from_indices(
        module.size(),
        module
            .elements()
            .filter(|&m| scalars.iter().all(|r| n.contains(module.act(r, m)))),
    )
}

/// `(N:_M S) = {m : Sm ⊆ N}` for a nonempty set of scalars.
pub fn colon_by_set(module: &Module, n: &ElemSet, scalars: &ElemSet) -> Result<ElemSet> {
    if scalars.is_empty() {
        return Err(Error::EmptyScalarSet);
    }
    Ok(colon_scalars(module, n, scalars))
}

fn proper_lattice(module: &Module) -> Result<Vec<ElemSet>> {
    Ok(all_submodules(module)?
        .iter()
        .filter(|s| !s.elements.is_full())
        .map(|s| s.elements.clone())
        .collect())
}

impl Module {
    /// All prime submodules.
    pub fn prime_submodules(&self) -> Result<Arc<Vec<ElemSet>>> {
        self.caches
            .primes
            .get_or_init(|| {
                let subs = proper_lattice(self)?;
                Ok(Arc::new(
                    subs.into_iter()
                        .filter(|n| prime_verdict(self, n).holds)
                        .collect(),
                ))
            })
            .clone()
    }

    /// All maximal submodules.
    pub fn maximal_submodules(&self) -> Result<Arc<Vec<ElemSet>>> {
        self.caches
            .maximals
            .get_or_init(|| {
                let subs = proper_lattice(self)?;
                let max = subs
                    .iter()
                    .filter(|a| !subs.iter().any(|b| b != *a && a.is_subset(b)))
                    .cloned()
                    .collect();
                Ok(Arc::new(max))
            })
            .clone()
    }
}

fn intersect_over(module: &Module, family: &[ElemSet], n: &ElemSet) -> ElemSet {
    family
        .iter()
        .filter(|p| n.is_subset(p))
        .fold(module.full(), |acc, p| acc.intersection(p))
}

/// `M-rad(N)`: intersection of the prime submodules containing `N`, or `M`
/// when there are none.
pub fn m_rad(module: &Module, n: &ElemSet) -> Result<ElemSet> {
    if let Some(hit) = module.caches.m_rad.lock().unwrap().get(n) {
        return Ok(hit.clone());
    }
    let primes = module.prime_submodules()?;
    let rad = intersect_over(module, &primes, n);
    module
        .caches
        .m_rad
        .lock()
        .unwrap()
        .insert(n.clone(), rad.clone());
    Ok(rad)
}

/// `J(N)`: intersection of the maximal submodules containing `N`, or `M`
/// when there are none.
pub fn j_over(module: &Module, n: &ElemSet) -> Result<ElemSet> {
    Ok(intersect_over(module, &module.maximal_submodules()?, n))
}

/// Module-level invariants. Scalar sets are over the ring carrier; for
/// ℤ-modules each residue stands for its whole class.
#[derive(Debug, Clone)]
pub struct ModuleInvariants {
    /// `(0:M)`.
    pub annihilator: Ideal,
    /// `Z(M) = {r : rm = 0 for some m ≠ 0}`.
    pub zero_divisors: ElemSet,
    /// `NZ(M) = {r : rm = 0 for some m ∉ Nil(M)}`.
    pub nz: ElemSet,
    /// `T(M) = {m : ann_R(m) ≠ 0}`.
    pub torsion: ElemSet,
    /// `Nil(M)`, the intersection of all prime submodules.
    pub nil: ElemSet,
    /// `J(M)`, the intersection of all maximal submodules.
    pub jacobson: ElemSet,
    /// `J(R)M`.
    pub jr_submodule: ElemSet,
    /// `(J(R)M:M)`.
    pub jr_ideal: Ideal,
}

pub fn module_invariants(module: &Module) -> Result<&ModuleInvariants> {
    module
        .caches
        .invariants
        .get_or_init(|| compute_invariants(module))
        .as_ref()
        .map_err(Clone::clone)
}

fn compute_invariants(module: &Module) -> Result<ModuleInvariants> {
    let ring = module.ring();
    let q = ring.size();
    let nil = m_rad(module, &module.zero_submodule())?;
    let jacobson = j_over(module, &module.zero_submodule())?;
    let zero = module.zero();
    let killed_by = |r: usize, m: usize| module.act(r, m) == zero;
    let zero_divisors = ElemSet::from_indices(
        q,
        module
            .scalars()
            .filter(|&r| module.elements().any(|m| m != zero && killed_by(r, m))),
    );
    let nz = ElemSet::from_indices(
        q,
        module.scalars().filter(|&r| {
            module
                .elements()
                .any(|m| !nil.contains(m) && killed_by(r, m))
        }),
    );
    // ann_ℤ(m) = ord(m)ℤ is never zero on a finite module.
    let torsion = if ring.is_integer_adapter() {
        module.full()
    } else {
        ElemSet::from_indices(
            module.size(),
            module.elements().filter(|&m| {
                module
                    .scalars()
                    .any(|r| r != ring.zero() && killed_by(r, m))
            }),
        )
    };
    let jr_submodule = ideal_times(module, &ring.jacobson()?, &module.full());
    Ok(ModuleInvariants {
        annihilator: residual_ideal(module, &module.zero_submodule()),
        zero_divisors,
        nz,
        torsion,
        nil,
        jacobson,
        jr_ideal: residual_ideal(module, &jr_submodule),
        jr_submodule,
    })
}
