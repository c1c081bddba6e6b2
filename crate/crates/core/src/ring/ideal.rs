use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;

use super::{gcd, integer_radical, lcm, Ring};

/// An ideal, stored as its element set.
///
/// Ideals of the integer adapter are symbolic `nℤ`; their element set is the
/// image `nℤ + eℤ` in the residues modulo the period `e`, which is what acting
/// on a module needs, while [`Ideal::contains`] answers whether a whole
/// residue class lies inside `nℤ`.
#[derive(Clone)]
pub struct Ideal {
    elements: ElemSet,
    generators: Option<Vec<usize>>,
    symbolic: Option<u64>,
}

impl Ideal {
    pub(crate) fn from_set(ring: &Ring, elements: ElemSet) -> Ideal {
        debug_assert_eq!(elements.universe(), ring.size());
        if let Some(e) = ring.period() {
            // Least positive residue; `{0}` is the trace of `eℤ`.
            let n = elements.iter().find(|&r| r != 0).unwrap_or(e as usize) as u64;
            return Ideal::integer(n, e);
        }
        Ideal {
            elements,
            generators: None,
            symbolic: None,
        }
    }

    pub(crate) fn with_generators(mut self, generators: Vec<usize>) -> Ideal {
        self.generators = Some(generators);
        self
    }

    /// `nℤ` seen through residues modulo `period`.
    pub fn integer(n: u64, period: u64) -> Ideal {
        let e = period as usize;
        let g = gcd(n, period) as usize;
        let elements = ElemSet::from_indices(e, (0..e).filter(|r| r % g.max(1) == 0));
        Ideal {
            elements,
            generators: Some(if n == 0 {
                vec![]
            } else {
                vec![(n % period) as usize]
            }),
            symbolic: Some(n),
        }
    }

    /// The element set; for ℤ, the residues meeting `nℤ`.
    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    /// `n` for a symbolic ideal `nℤ` of the integer adapter.
    pub fn symbolic(&self) -> Option<u64> {
        self.symbolic
    }

    /// Whether scalar `r` lies in the ideal; for the integer adapter, whether
    /// the whole class `r + eℤ` does.
    pub fn contains(&self, r: usize) -> bool {
        match self.symbolic {
            Some(n) => {
                let e = self.elements.universe() as u64;
                n != 0 && e.is_multiple_of(n) && (r as u64).is_multiple_of(n)
            }
            None => self.elements.contains(r),
        }
    }

    /// Scalars `r` for which [`Ideal::contains`] holds.
    pub fn interior(&self) -> ElemSet {
        match self.symbolic {
            Some(_) => ElemSet::from_indices(
                self.elements.universe(),
                (0..self.elements.universe()).filter(|&r| self.contains(r)),
            ),
            None => self.elements.clone(),
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        match (self.symbolic, other.symbolic) {
            (Some(n), Some(m)) => {
                if m == 0 {
                    n == 0
                } else {
                    n % m == 0
                }
            }
            _ => self.elements.is_subset(&other.elements),
        }
    }

    /// Whether every scalar of `set` (each read as a residue class for ℤ)
    /// lies in the ideal.
    pub fn contains_all(&self, set: &ElemSet) -> bool {
        set.iter().all(|r| self.contains(r))
    }

    pub fn is_proper(&self) -> bool {
        match self.symbolic {
            Some(n) => n != 1,
            None => !self.elements.is_full(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self.symbolic {
            Some(n) => n == 0,
            None => self.elements.count() == 1,
        }
    }

    pub fn generators(&self, ring: &Ring) -> Vec<usize> {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        let mut gens = Vec::new();
        let mut span = ring.zero_ideal().elements;
        for x in self.elements.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = sum_sets(ring, &span, &principal(ring, x));
            }
        }
        gens
    }

    pub fn display(&self, ring: &Ring) -> String {
        if let Some(n) = self.symbolic {
            return if n == 0 {
                "0".into()
            } else {
                format!("{n}ℤ")
            };
        }
        if self.is_zero() {
            return "0".into();
        }
        let gens = self.generators(ring);
        format!(
            "⟨{}⟩",
            gens.iter()
                .map(|&g| ring.name(g))
                .collect::<Vec<_>>()
                .join(",")
        )
    }

    pub fn product(ring: &Ring, a: &Ideal, b: &Ideal) -> Ideal {
        if let (Some(n), Some(m), Some(e)) = (a.symbolic, b.symbolic, ring.period()) {
            return Ideal::integer(n * m, e);
        }
        let mut seed = ElemSet::empty(ring.size());
        for x in a.elements.iter() {
            for y in b.elements.iter() {
                seed.insert(ring.mul(x, y));
            }
        }
        Ideal::from_set(ring, ring.additive_closure(&seed))
    }

    pub fn intersection(ring: &Ring, a: &Ideal, b: &Ideal) -> Ideal {
        if let (Some(n), Some(m), Some(e)) = (a.symbolic, b.symbolic, ring.period()) {
            let l = if n == 0 || m == 0 { 0 } else { lcm(n, m) };
            return Ideal::integer(l, e);
        }
        Ideal::from_set(ring, a.elements.intersection(&b.elements))
    }

    /// `(a : b) = {r : r·b ⊆ a}`.
    pub fn quotient(ring: &Ring, a: &Ideal, b: &Ideal) -> Ideal {
        if let (Some(n), Some(m), Some(e)) = (a.symbolic, b.symbolic, ring.period()) {
            let q = match (n, m) {
                (_, 0) => 1,
                (0, _) => 0,
                _ => n / gcd(n, m),
            };
            return Ideal::integer(q, e);
        }
        let set = ElemSet::from_indices(
            ring.size(),
            ring.elements().filter(|&r| {
                b.elements
                    .iter()
                    .all(|x| a.elements.contains(ring.mul(r, x)))
            }),
        );
        Ideal::from_set(ring, set)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        match (self.symbolic, other.symbolic) {
            (Some(n), Some(m)) => n == m,
            _ => self.elements == other.elements,
        }
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.symbolic {
            Some(n) => n.hash(state),
            None => self.elements.hash(state),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.symbolic {
            Some(n) => write!(f, "Ideal({n}ℤ)"),
            None => write!(f, "Ideal({:?})", self.elements),
        }
    }
}

fn principal(ring: &Ring, x: usize) -> ElemSet {
    ElemSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, x)))
}

fn sum_sets(ring: &Ring, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(ring.size());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Smallest ideal containing `gens`.
pub fn ideal_generated(ring: &Ring, gens: &[usize]) -> Result<Ideal> {
    for &g in gens {
        ring.check_element(g)?;
    }
    if let Some(e) = ring.period() {
        let n = gens.iter().fold(0u64, |acc, &g| gcd(acc, g as u64));
        return Ok(Ideal::integer(n, e));
    }
    let mut set = ElemSet::from_indices(ring.size(), [ring.zero()]);
    for &g in gens {
        if !set.contains(g) {
            set = sum_sets(ring, &set, &principal(ring, g));
        }
    }
    Ok(Ideal::from_set(ring, set).with_generators(gens.to_vec()))
}

/// Every ideal of a finite ring, smallest first, each carrying a generator
/// list of minimal length (lexicographically least among those).
pub fn all_ideals(ring: &Ring) -> Result<Arc<Vec<Ideal>>> {
    if ring.is_integer_adapter() {
        return Err(Error::IntegerAdapter("all_ideals"));
    }
    ring.cached_lattice(|| enumerate_ideals(ring, limits::DEFAULT_IDEAL_CAP))
}

fn enumerate_ideals(ring: &Ring, cap: usize) -> Result<Vec<Ideal>> {
    let principals: Vec<ElemSet> = ring.elements().map(|x| principal(ring, x)).collect();
    let zero = ring.zero_ideal().elements;
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(zero.clone());
    let mut found = vec![(zero, Vec::<usize>::new())];
    let mut level = vec![0usize];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &idx in &level {
            let (set, gens) = found[idx].clone();
            for x in ring.elements() {
                if set.contains(x) {
                    continue;
                }
                let bigger = sum_sets(ring, &set, &principals[x]);
                if seen.insert(bigger.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "ideal lattice",
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
    let mut ideals: Vec<Ideal> = found
        .into_iter()
        .map(|(set, gens)| Ideal::from_set(ring, set).with_generators(gens))
        .collect();
    ideals
        .sort_by(|a, b| (a.elements.count(), &a.elements).cmp(&(b.elements.count(), &b.elements)));
    Ok(ideals)
}

/// `√I = {x : xᵏ ∈ I for some k ≥ 1}`.
pub fn radical_of_ideal(ring: &Ring, ideal: &Ideal) -> Ideal {
    if let (Some(n), Some(e)) = (ideal.symbolic, ring.period()) {
        return Ideal::integer(integer_radical(n), e);
    }
    let set = ElemSet::from_indices(
        ring.size(),
        ring.elements().filter(|&x| {
            let mut p = x;
            for _ in 0..ring.size() {
                if ideal.elements.contains(p) {
                    return true;
                }
                p = ring.mul(p, x);
            }
            false
        }),
    );
    Ideal::from_set(ring, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_membership_is_classwise() {
        let four = Ideal::integer(4, 4);
        assert!(four.contains(0));
        assert!(!four.contains(2));
        let zero = Ideal::integer(0, 4);
        assert!(!zero.contains(0));
        assert_eq!(zero.elements().to_vec(), vec![0]);
        let two = Ideal::integer(2, 4);
        assert!(four.is_subset(&two));
        assert!(zero.is_subset(&four));
        assert!(!two.is_subset(&zero));
        assert_eq!(two.display(&Ring::integers(4).unwrap()), "2ℤ");
    }

    #[test]
    fn from_set_recovers_symbolic_generator() {
        let z = Ring::integers(12).unwrap();
        let set = ElemSet::from_indices(12, [0, 4, 8]);
        assert_eq!(Ideal::from_set(&z, set).symbolic(), Some(4));
        let set = ElemSet::from_indices(12, [0]);
        assert_eq!(Ideal::from_set(&z, set).symbolic(), Some(12));
    }
}
