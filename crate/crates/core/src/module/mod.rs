//! Finite unital modules with explicit scalar action.
//!
//! The action table has one row per scalar of the ring carrier. For modules
//! over the integer adapter the rows are the residues `0..e` of the adapter's
//! period `e`, a multiple of the module exponent, so quantifying over rows is
//! the same as quantifying over ℤ.

mod lattice;
mod predicates;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coords::Coords;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::{lcm, residue_digits, residue_name, span, Ideal, Ring};

pub use lattice::{
    all_submodules, colon_by_set, colon_submodule, ideal_times, j_over, m_rad, module_invariants,
    residual_ideal, submodule_generated, ModuleInvariants,
};
pub use predicates::{
    is_faithful, is_multiplication, presimplifiable, quasi_j_maximal_set, replay_submodule_witness,
    submodule_predicate, submodule_product, PresimpKind, SubmoduleKind,
};

/// A submodule as its element set, with the generators it was built from
/// when known.
#[derive(Clone)]
pub struct Submodule {
    elements: ElemSet,
    generators: Option<Vec<usize>>,
}

impl Submodule {
    pub(crate) fn new(elements: ElemSet, generators: Option<Vec<usize>>) -> Self {
        Submodule {
            elements,
            generators,
        }
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn into_elements(self) -> ElemSet {
        self.elements
    }

    /// Generators; a greedy ascending list when none were recorded.
    pub fn generators(&self, module: &Module) -> Vec<usize> {
        match &self.generators {
            Some(g) => g.clone(),
            None => module.greedy_generators(&self.elements),
        }
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Submodule {}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule({:?})", self.elements)
    }
}

#[derive(Default)]
struct Caches {
    lattice: OnceLock<Result<Arc<Vec<Submodule>>>>,
    primes: OnceLock<Result<Arc<Vec<ElemSet>>>>,
    maximals: OnceLock<Result<Arc<Vec<ElemSet>>>>,
    m_rad: Mutex<HashMap<ElemSet, ElemSet>>,
    invariants: OnceLock<Result<ModuleInvariants>>,
}

pub struct Module {
    ring: Arc<Ring>,
    size: usize,
    zero: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    action: Vec<u32>,
    exponent: u64,
    names: Vec<String>,
    coords: Coords,
    label: String,
    caches: Caches,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("label", &self.label)
            .field("ring", &self.ring.label())
            .field("size", &self.size)
            .finish()
    }
}

/// `R/I` as an `R`-module; `I = 0` gives `R` over itself.
pub fn make_cyclic_module(ring: &Arc<Ring>, ideal: &Ideal) -> Result<Arc<Module>> {
    if ring.is_integer_adapter() {
        return Err(Error::IntegerAdapter("make_cyclic_module"));
    }
    let set = ideal.elements();
    let n = ring.size();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in ring.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for i in set.iter() {
            coset_of[ring.add(x, i)] = idx;
        }
    }
    let size = reps.len();
    let mut add = Vec::with_capacity(size * size);
    for &a in &reps {
        for &b in &reps {
            add.push(coset_of[ring.add(a, b)] as u32);
        }
    }
    let mut action = Vec::with_capacity(n * size);
    for r in ring.elements() {
        for &a in &reps {
            action.push(coset_of[ring.mul(r, a)] as u32);
        }
    }
    let plain = ideal.is_zero();
    let names = reps
        .iter()
        .map(|&x| match ring.kind() {
            crate::ring::RingKind::ResidueProduct { moduli } if !plain => {
                residue_name(&residue_digits(moduli, x), true)
            }
            _ if plain => ring.name(x).to_string(),
            _ => format!("{}+I", ring.name(x)),
        })
        .collect();
    let coords = ring.coords().then(|x| coset_of[x]);
    let label = if plain {
        ring.label().to_string()
    } else {
        format!("{}/{}", ring.label(), ideal.display(ring))
    };
    Module::assemble(
        ring.clone(),
        size,
        coset_of[ring.zero()],
        add,
        action,
        names,
        coords,
        label,
    )
}

/// The ℤ-module `ℤ_{d₁}×…×ℤ_{d_k}` over the integer adapter of period
/// `lcm(dᵢ)`.
pub fn make_integer_module(factors: &[u64]) -> Result<Arc<Module>> {
    if factors.is_empty() {
        return Err(Error::ZeroModule("make_integer_module needs a factor"));
    }
    if let Some(&d) = factors.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidModulus(d));
    }
    let size = factors
        .iter()
        .try_fold(1u64, |a, &d| a.checked_mul(d))
        .unwrap_or(u64::MAX);
    limits::check_carrier(
        "module carrier",
        usize::try_from(size).unwrap_or(usize::MAX),
    )?;
    let size = size as usize;
    let period = factors.iter().fold(1, |a, &d| lcm(a, d));
    let ring = Ring::integers(period)?;
    let digits: Vec<Vec<u64>> = (0..size).map(|i| residue_digits(factors, i)).collect();
    let compose = |d: &[u64]| {
        d.iter()
            .zip(factors)
            .fold(0usize, |acc, (&v, &m)| acc * m as usize + v as usize)
    };
    let mut add = Vec::with_capacity(size * size);
    for a in &digits {
        for b in &digits {
            let s: Vec<u64> = a
                .iter()
                .zip(b)
                .zip(factors)
                .map(|((x, y), m)| (x + y) % m)
                .collect();
            add.push(compose(&s) as u32);
        }
    }
    let mut action = Vec::with_capacity(period as usize * size);
    for r in 0..period {
        for a in &digits {
            let s: Vec<u64> = a.iter().zip(factors).map(|(x, m)| r * x % m).collect();
            action.push(compose(&s) as u32);
        }
    }
    let names = digits.iter().map(|d| residue_name(d, true)).collect();
    let label = factors
        .iter()
        .map(|d| format!("Z{d}"))
        .collect::<Vec<_>>()
        .join("x");
    Module::assemble(
        ring,
        size,
        0,
        add,
        action,
        names,
        Coords::identity(factors.to_vec()),
        label,
    )
}

fn product_size(parts: &[Arc<Module>]) -> Result<usize> {
    let size = parts
        .iter()
        .try_fold(1usize, |a, m| a.checked_mul(m.size))
        .unwrap_or(usize::MAX);
    limits::check_carrier("module carrier", size)?;
    Ok(size)
}

fn split(sizes: &[usize], mut x: usize) -> Vec<usize> {
    let mut d = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        d[i] = x % sizes[i];
        x /= sizes[i];
    }
    d
}

fn join(sizes: &[usize], d: &[usize]) -> usize {
    d.iter().zip(sizes).fold(0, |acc, (&v, &s)| acc * s + v)
}

/// `M₁×…×M_k` over a common scalar ring. ℤ-modules may have different
/// periods; the product uses their lcm.
pub fn product_module(parts: &[Arc<Module>]) -> Result<Arc<Module>> {
    if parts.is_empty() {
        return Err(Error::ZeroModule("product_module needs a factor"));
    }
    let all_integer = parts.iter().all(|m| m.ring.is_integer_adapter());
    let ring = if all_integer {
        let period = parts
            .iter()
            .fold(1, |a, m| lcm(a, m.ring.period().unwrap()));
        Ring::integers(period)?
    } else {
        let first = &parts[0].ring;
        if parts.iter().any(|m| m.ring.as_ref() != first.as_ref()) {
            return Err(Error::RingMismatch);
        }
        first.clone()
    };
    let q = ring.size();
    assemble_product(
        ring,
        parts,
        |i, r| {
            let p = parts[i].ring.size();
            if all_integer {
                r % p
            } else {
                r
            }
        },
        q,
    )
}

/// `M₁×…×M_k` over `R₁×…×R_k`, each factor ring acting on its own
/// component.
pub fn product_module_over_product_ring(parts: &[Arc<Module>]) -> Result<Arc<Module>> {
    if parts.is_empty() {
        return Err(Error::ZeroModule("product_module needs a factor"));
    }
    let rings: Vec<Arc<Ring>> = parts.iter().map(|m| m.ring.clone()).collect();
    let ring = Ring::product(&rings)?;
    let ring_sizes: Vec<usize> = rings.iter().map(|r| r.size()).collect();
    let q = ring.size();
    assemble_product(ring, parts, |i, r| split(&ring_sizes, r)[i], q)
}

fn assemble_product(
    ring: Arc<Ring>,
    parts: &[Arc<Module>],
    scalar: impl Fn(usize, usize) -> usize,
    q: usize,
) -> Result<Arc<Module>> {
    let size = product_size(parts)?;
    let sizes: Vec<usize> = parts.iter().map(|m| m.size).collect();
    let digits: Vec<Vec<usize>> = (0..size).map(|x| split(&sizes, x)).collect();
    let mut add = Vec::with_capacity(size * size);
    for a in &digits {
        for b in &digits {
            let s: Vec<usize> = (0..parts.len()).map(|i| parts[i].add(a[i], b[i])).collect();
            add.push(join(&sizes, &s) as u32);
        }
    }
    let mut action = Vec::with_capacity(q * size);
    for r in 0..q {
        let local: Vec<usize> = (0..parts.len()).map(|i| scalar(i, r)).collect();
        for a in &digits {
            let s: Vec<usize> = (0..parts.len())
                .map(|i| parts[i].act(local[i], a[i]))
                .collect();
            action.push(join(&sizes, &s) as u32);
        }
    }
    let names = digits
        .iter()
        .map(|d| {
            let inner: Vec<&str> = d
                .iter()
                .enumerate()
                .map(|(i, &v)| parts[i].name(v))
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let zero = join(&sizes, &parts.iter().map(|m| m.zero).collect::<Vec<_>>());
    let coords = Coords::product(&parts.iter().map(|m| &m.coords).collect::<Vec<_>>(), &sizes);
    let label = parts
        .iter()
        .map(|m| m.label.clone())
        .collect::<Vec<_>>()
        .join("x");
    Module::assemble(ring, size, zero, add, action, names, coords, label)
}

impl Module {
    /// Builds a module from tables produced by a trusted construction:
    /// negation and exponent are derived, the axioms are not re-checked
    /// (see [`Module::check_axioms`]).
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        ring: Arc<Ring>,
        size: usize,
        zero: usize,
        add: Vec<u32>,
        action: Vec<u32>,
        names: Vec<String>,
        coords: Coords,
        label: String,
    ) -> Result<Arc<Module>> {
        limits::check_carrier("module carrier", size)?;
        debug_assert_eq!(add.len(), size * size);
        debug_assert_eq!(action.len(), ring.size() * size);
        let mut neg = vec![0u32; size];
        for x in 0..size {
            match (0..size).find(|&y| add[x * size + y] as usize == zero) {
                Some(y) => neg[x] = y as u32,
                None => {
                    return Err(Error::ModuleAxiomViolation {
                        law: "additive inverse",
                        witness: format!("m={x}"),
                    })
                }
            }
        }
        let mut module = Module {
            ring,
            size,
            zero,
            add,
            neg,
            action,
            exponent: 1,
            names,
            coords,
            label,
            caches: Caches::default(),
        };
        module.exponent = (0..size).fold(1, |acc, m| lcm(acc, module.additive_order(m)));
        Ok(Arc::new(module))
    }

    /// Builds a module from explicit tables after checking every module
    /// axiom exhaustively.
    pub fn from_tables(
        ring: Arc<Ring>,
        size: usize,
        zero: usize,
        add: Vec<u32>,
        action: Vec<u32>,
    ) -> Result<Arc<Module>> {
        if size == 0 || zero >= size {
            return Err(Error::BadElement { index: zero, size });
        }
        for (table, expected) in [(&add, size * size), (&action, ring.size() * size)] {
            if table.len() != expected {
                return Err(Error::BadTable {
                    expected,
                    actual: table.len(),
                });
            }
            if let Some(&bad) = table.iter().find(|&&v| v as usize >= size) {
                return Err(Error::BadElement {
                    index: bad as usize,
                    size,
                });
            }
        }
        let names = (0..size).map(|i| i.to_string()).collect();
        let module = Module::assemble(
            ring,
            size,
            zero,
            add,
            action,
            names,
            Coords::identity(vec![size as u64]),
            format!("T{size}"),
        )?;
        module.check_axioms()?;
        Ok(module)
    }

    /// Exhaustive check of the abelian-group and module axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let fail =
            |law: &'static str, w: String| Err(Error::ModuleAxiomViolation { law, witness: w });
        let ring = &self.ring;
        for x in self.elements() {
            if self.add(x, self.zero) != x {
                return fail("additive identity", format!("m={x}"));
            }
            if self.act(ring.one(), x) != x {
                return fail("unital action", format!("m={x}"));
            }
            for y in self.elements() {
                if self.add(x, y) != self.add(y, x) {
                    return fail("additive commutativity", format!("m={x}, n={y}"));
                }
                for z in self.elements() {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return fail("additive associativity", format!("m={x}, n={y}, k={z}"));
                    }
                }
            }
        }
        // The adapter's rows are residues of ℤ, whose ring laws hold on
        // representatives, so the same loops apply.
        for r in ring.elements() {
            for s in ring.elements() {
                let rs = ring.mul(r, s);
                let r_plus_s = ring.add(r, s);
                for x in self.elements() {
                    if self.act(rs, x) != self.act(r, self.act(s, x)) {
                        return fail("multiplicative action", format!("r={r}, s={s}, m={x}"));
                    }
                    if self.act(r_plus_s, x) != self.add(self.act(r, x), self.act(s, x)) {
                        return fail("scalar distributivity", format!("r={r}, s={s}, m={x}"));
                    }
                }
            }
            for x in self.elements() {
                for y in self.elements() {
                    if self.act(r, self.add(x, y)) != self.add(self.act(r, x), self.act(r, y)) {
                        return fail("module distributivity", format!("r={r}, m={x}, n={y}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// Smallest `e ≥ 1` with `e·m = 0` for every `m`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn element_from_coords(&self, coords: &[i64]) -> Option<usize> {
        self.coords.element(coords)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn scalars(&self) -> std::ops::Range<usize> {
        self.ring.elements()
    }

    pub fn is_zero_module(&self) -> bool {
        self.size == 1
    }

    pub fn check_element(&self, m: usize) -> Result<()> {
        if m >= self.size {
            return Err(Error::BadElement {
                index: m,
                size: self.size,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `r·m`.
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m] as usize
    }

    fn additive_order(&self, m: usize) -> u64 {
        let mut k = 1;
        let mut x = m;
        while x != self.zero {
            x = self.add(x, m);
            k += 1;
        }
        k
    }

    pub fn zero_submodule(&self) -> ElemSet {
        ElemSet::from_indices(self.size, [self.zero])
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.size)
    }

    /// Additive closure of `seed` ∪ {0}.
    pub(crate) fn additive_span(&self, seed: &ElemSet) -> ElemSet {
        span(self.size, self.zero, seed, |a, b| self.add(a, b))
    }

    /// `Rm = {rm : r ∈ R}`.
    pub fn cyclic(&self, m: usize) -> ElemSet {
        ElemSet::from_indices(self.size, self.scalars().map(|r| self.act(r, m)))
    }

    /// Smallest submodule containing `seed`.
    pub fn span_of(&self, seed: &ElemSet) -> ElemSet {
        let mut orbit = ElemSet::empty(self.size);
        for m in seed.iter() {
            for r in self.scalars() {
                orbit.insert(self.act(r, m));
            }
        }
        self.additive_span(&orbit)
    }

    pub fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// `r·S = {rs : s ∈ S}`.
    pub fn scale(&self, r: usize, set: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.size, set.iter().map(|m| self.act(r, m)))
    }

    /// Whether `set` is closed under addition and the scalar action and
    /// contains zero.
    pub fn is_submodule(&self, set: &ElemSet) -> bool {
        set.contains(self.zero)
            && set.iter().all(|x| {
                set.iter().all(|y| set.contains(self.add(x, y)))
                    && self.scalars().all(|r| set.contains(self.act(r, x)))
            })
    }

    pub(crate) fn greedy_generators(&self, set: &ElemSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut spanned = self.zero_submodule();
        for x in set.iter() {
            if !spanned.contains(x) {
                gens.push(x);
                spanned = self.sum(&spanned, &self.cyclic(x));
            }
        }
        gens
    }

    /// `0`, or `⟨g₁,…⟩` with display names of greedy generators.
    pub fn display_set(&self, set: &ElemSet) -> String {
        if set.count() == 1 && set.contains(self.zero) {
            return "0".into();
        }
        let gens = self.greedy_generators(set);
        format!(
            "⟨{}⟩",
            gens.iter()
                .map(|&g| self.name(g))
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ideal_generated;

    #[test]
    fn cyclic_quotients() {
        let r = Ring::residue(&[12]).unwrap();
        let m = make_cyclic_module(&r, &r.zero_ideal()).unwrap();
        assert_eq!(m.size(), 12);
        let four = ideal_generated(&r, &[4]).unwrap();
        let q = make_cyclic_module(&r, &four).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.name(1), "1\u{304}");
        q.check_axioms().unwrap();
        let z = make_cyclic_module(
            &Ring::residue(&[4]).unwrap(),
            &Ring::residue(&[4]).unwrap().unit_ideal(),
        )
        .unwrap();
        assert!(z.is_zero_module());
    }

    #[test]
    fn integer_modules_and_products() {
        let m = make_integer_module(&[4, 9]).unwrap();
        assert_eq!(m.exponent(), 36);
        assert_eq!(m.ring().period(), Some(36));
        m.check_axioms().unwrap();
        let a = make_integer_module(&[4]).unwrap();
        let b = make_integer_module(&[9]).unwrap();
        let p = product_module(&[a, b]).unwrap();
        assert_eq!(p.size(), 36);
        assert_eq!(p.ring().period(), Some(36));
        p.check_axioms().unwrap();
        assert_eq!(
            p.name(p.element_from_coords(&[1, 0]).unwrap()),
            "(1\u{304},0\u{304})"
        );
        let z4 = Ring::residue(&[4]).unwrap();
        let z6 = Ring::residue(&[6]).unwrap();
        let m4 = make_cyclic_module(&z4, &z4.zero_ideal()).unwrap();
        let m6 = make_cyclic_module(&z6, &z6.zero_ideal()).unwrap();
        assert_eq!(
            product_module(&[m4.clone(), m6.clone()]).unwrap_err(),
            Error::RingMismatch
        );
        let mixed = product_module_over_product_ring(&[m4, m6]).unwrap();
        assert_eq!(mixed.ring().size(), 24);
        mixed.check_axioms().unwrap();
    }
}
