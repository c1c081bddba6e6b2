//! Finite commutative rings with identity, and the symbolic integer adapter.
//!
//! Elements are indices into a carrier `0..size`. Residue-product rings
//! compute their arithmetic from residue vectors, table rings carry explicit
//! addition and multiplication tables. The integer adapter stands for ℤ acting
//! on a finite module of exponent `period`: scalar `r` is the residue class
//! `r + period·ℤ`, and ideals of ℤ are kept symbolically as `nℤ`.

mod ideal;
mod predicates;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::coords::Coords;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;

pub use ideal::{all_ideals, ideal_generated, radical_of_ideal, Ideal};
pub use predicates::{
    ideal_predicate, ideal_zero_divisor_set, integer_ideal_predicate, replay_ideal_witness,
    IdealKind,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    ResidueProduct { moduli: Vec<u64> },
    Table,
    IntegerAdapter { period: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Arith {
    Residue {
        moduli: Vec<u64>,
        strides: Vec<usize>,
    },
    Tables {
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
    },
}

/// Ring-level invariants of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingInvariants {
    pub units: ElemSet,
    pub jacobson: ElemSet,
    pub nilradical: ElemSet,
    pub zero_divisors: ElemSet,
    pub regular: ElemSet,
}

pub struct Ring {
    kind: RingKind,
    size: usize,
    zero: usize,
    one: usize,
    arith: Arith,
    names: Vec<String>,
    coords: Coords,
    label: String,
    lattice: OnceLock<Result<Arc<Vec<Ideal>>>>,
    invariants: OnceLock<Result<RingInvariants>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.label)
            .field("kind", &self.kind)
            .field("size", &self.size)
            .finish()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.arith == other.arith
    }
}

impl Eq for Ring {}

/// Builds `ℤ_{m₁}×…×ℤ_{m_k}`; element `i` is the residue vector of `i` in
/// mixed radix with the first component most significant.
pub fn make_residue_ring(moduli: &[u64]) -> Result<Arc<Ring>> {
    Ring::residue(moduli)
}

/// Builds a ring from explicit tables after checking every commutative-ring
/// axiom exhaustively.
pub fn make_table_ring(
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: usize,
    one: usize,
) -> Result<Arc<Ring>> {
    Ring::from_tables(size, add, mul, zero, one, None, None, None)
}

/// Units, Jacobson radical, nilradical, zero-divisors and regular elements.
pub fn ring_invariants(ring: &Ring) -> Result<&RingInvariants> {
    ring.invariants()
}

impl Ring {
    pub fn residue(moduli: &[u64]) -> Result<Arc<Ring>> {
        if moduli.is_empty() {
            return Err(Error::ZeroRing);
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidModulus(m));
        }
        let size = moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .unwrap_or(u64::MAX);
        limits::check_carrier("ring carrier", usize::try_from(size).unwrap_or(usize::MAX))?;
        let size = size as usize;
        let names = (0..size)
            .map(|i| residue_name(&residue_digits(moduli, i), false))
            .collect();
        let label = moduli
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("x");
        Ok(Arc::new(Ring {
            kind: RingKind::ResidueProduct {
                moduli: moduli.to_vec(),
            },
            size,
            zero: 0,
            one: residue_one(moduli),
            arith: residue_arith(moduli),
            names,
            coords: Coords::identity(moduli.to_vec()),
            label,
            lattice: OnceLock::new(),
            invariants: OnceLock::new(),
        }))
    }

    /// ℤ acting through residues modulo `period` (a multiple of the exponent
    /// of every module it acts on).
    pub fn integers(period: u64) -> Result<Arc<Ring>> {
        if period == 0 {
            return Err(Error::InvalidModulus(0));
        }
        limits::check_carrier("integer adapter period", period as usize)?;
        let size = period as usize;
        Ok(Arc::new(Ring {
            kind: RingKind::IntegerAdapter { period },
            size,
            zero: 0,
            one: 1 % size,
            arith: residue_arith(&[period]),
            names: (0..size).map(|i| i.to_string()).collect(),
            coords: Coords::identity(vec![period]),
            label: "Z".to_string(),
            lattice: OnceLock::new(),
            invariants: OnceLock::new(),
        }))
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        names: Option<Vec<String>>,
        coords: Option<Coords>,
        label: Option<String>,
    ) -> Result<Arc<Ring>> {
        limits::check_carrier("ring carrier", size)?;
        if size == 0 {
            return Err(Error::ZeroRing);
        }
        for table in [&add, &mul] {
            if table.len() != size * size {
                return Err(Error::BadTable {
                    expected: size * size,
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
        for idx in [zero, one] {
            if idx >= size {
                return Err(Error::BadElement { index: idx, size });
            }
        }
        if zero == one {
            return Err(Error::ZeroRing);
        }
        let neg = check_ring_axioms(size, &add, &mul, zero, one)?;
        Ok(Arc::new(Ring {
            kind: RingKind::Table,
            size,
            zero,
            one,
            arith: Arith::Tables { add, mul, neg },
            names: names.unwrap_or_else(|| (0..size).map(|i| i.to_string()).collect()),
            coords: coords.unwrap_or_else(|| Coords::identity(vec![size as u64])),
            label: label.unwrap_or_else(|| format!("T{size}")),
            lattice: OnceLock::new(),
            invariants: OnceLock::new(),
        }))
    }

    /// Direct product of rings, first factor most significant.
    pub fn product(parts: &[Arc<Ring>]) -> Result<Arc<Ring>> {
        if parts.is_empty() {
            return Err(Error::ZeroRing);
        }
        if parts.iter().any(|r| r.is_integer_adapter()) {
            return Err(Error::IntegerAdapter("ring product"));
        }
        if parts.len() == 1 {
            return Ok(parts[0].clone());
        }
        if let Some(moduli) = parts
            .iter()
            .map(|r| match &r.kind {
                RingKind::ResidueProduct { moduli } => Some(moduli.clone()),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
        {
            return Ring::residue(&moduli.concat());
        }
        let sizes: Vec<usize> = parts.iter().map(|r| r.size).collect();
        let size = sizes
            .iter()
            .try_fold(1usize, |a, &b| a.checked_mul(b))
            .unwrap_or(usize::MAX);
        limits::check_carrier("ring carrier", size)?;
        let digits = |mut x: usize| {
            let mut d = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                d[i] = x % sizes[i];
                x /= sizes[i];
            }
            d
        };
        let compose = |d: &[usize]| d.iter().zip(&sizes).fold(0, |acc, (&v, &s)| acc * s + v);
        let all: Vec<Vec<usize>> = (0..size).map(digits).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &all {
            for b in &all {
                let s: Vec<usize> = (0..parts.len()).map(|i| parts[i].add(a[i], b[i])).collect();
                let p: Vec<usize> = (0..parts.len()).map(|i| parts[i].mul(a[i], b[i])).collect();
                add.push(compose(&s) as u32);
                mul.push(compose(&p) as u32);
            }
        }
        let zero = compose(&parts.iter().map(|r| r.zero).collect::<Vec<_>>());
        let one = compose(&parts.iter().map(|r| r.one).collect::<Vec<_>>());
        let names = all
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
        let coords = Coords::product(&parts.iter().map(|r| &r.coords).collect::<Vec<_>>(), &sizes);
        let label = parts
            .iter()
            .map(|r| r.label.clone())
            .collect::<Vec<_>>()
            .join("x");
        Ring::from_tables(
            size,
            add,
            mul,
            zero,
            one,
            Some(names),
            Some(coords),
            Some(label),
        )
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn is_integer_adapter(&self) -> bool {
        matches!(self.kind, RingKind::IntegerAdapter { .. })
    }

    /// The period of the integer adapter.
    pub fn period(&self) -> Option<u64> {
        match self.kind {
            RingKind::IntegerAdapter { period } => Some(period),
            _ => None,
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn element_from_coords(&self, coords: &[i64]) -> Option<usize> {
        self.coords.element(coords)
    }

    pub fn check_element(&self, i: usize) -> Result<()> {
        if i >= self.size {
            return Err(Error::BadElement {
                index: i,
                size: self.size,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.arith {
            Arith::Residue { moduli, strides } => {
                if moduli.len() == 1 {
                    return (a + b) % self.size;
                }
                let mut out = 0;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let m = m as usize;
                    out += ((a / s % m + b / s % m) % m) * s;
                }
                out
            }
            Arith::Tables { add, .. } => add[a * self.size + b] as usize,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.arith {
            Arith::Residue { moduli, strides } => {
                if moduli.len() == 1 {
                    return a * b % self.size;
                }
                let mut out = 0;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let m = m as usize;
                    out += ((a / s % m) * (b / s % m) % m) * s;
                }
                out
            }
            Arith::Tables { mul, .. } => mul[a * self.size + b] as usize,
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        match &self.arith {
            Arith::Residue { moduli, strides } => {
                let mut out = 0;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let m = m as usize;
                    out += ((m - a / s % m) % m) * s;
                }
                out
            }
            Arith::Tables { neg, .. } => neg[a] as usize,
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Additive closure of `seed` ∪ {0}.
    pub(crate) fn additive_closure(&self, seed: &ElemSet) -> ElemSet {
        span(self.size, self.zero, seed, |a, b| self.add(a, b))
    }

    pub fn invariants(&self) -> Result<&RingInvariants> {
        if self.is_integer_adapter() {
            return Err(Error::IntegerAdapter("ring_invariants"));
        }
        self.invariants
            .get_or_init(|| self.compute_invariants())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_invariants(&self) -> Result<RingInvariants> {
        let n = self.size;
        let units = ElemSet::from_indices(
            n,
            self.elements()
                .filter(|&x| self.elements().any(|y| self.mul(x, y) == self.one)),
        );
        let nilradical = ElemSet::from_indices(
            n,
            self.elements().filter(|&x| {
                let mut p = x;
                for _ in 0..n {
                    if p == self.zero {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                p == self.zero
            }),
        );
        let zero_divisors = ElemSet::from_indices(
            n,
            self.elements().filter(|&x| {
                self.elements()
                    .any(|y| y != self.zero && self.mul(x, y) == self.zero)
            }),
        );
        let regular = zero_divisors.complement();
        let lattice = all_ideals(self)?;
        let mut jacobson = ElemSet::full(n);
        for m in lattice.iter().filter(|i| is_maximal_in(i, &lattice)) {
            jacobson = jacobson.intersection(m.elements());
        }
        Ok(RingInvariants {
            units,
            jacobson,
            nilradical,
            zero_divisors,
            regular,
        })
    }

    pub(crate) fn cached_lattice(
        &self,
        build: impl FnOnce() -> Result<Vec<Ideal>>,
    ) -> Result<Arc<Vec<Ideal>>> {
        self.lattice.get_or_init(|| build().map(Arc::new)).clone()
    }

    pub fn zero_ideal(&self) -> Ideal {
        match self.period() {
            Some(e) => Ideal::integer(0, e),
            None => Ideal::from_set(self, ElemSet::from_indices(self.size, [self.zero])),
        }
    }

    pub fn unit_ideal(&self) -> Ideal {
        match self.period() {
            Some(e) => Ideal::integer(1, e),
            None => Ideal::from_set(self, ElemSet::full(self.size)),
        }
    }

    /// `J(R)`; for ℤ this is the zero ideal.
    pub fn jacobson(&self) -> Result<Ideal> {
        match self.period() {
            Some(_) => Ok(self.zero_ideal()),
            None => Ok(Ideal::from_set(self, self.invariants()?.jacobson.clone())),
        }
    }

    /// `N(R)`; for ℤ this is the zero ideal.
    pub fn nilradical(&self) -> Result<Ideal> {
        match self.period() {
            Some(_) => Ok(self.zero_ideal()),
            None => Ok(Ideal::from_set(self, self.invariants()?.nilradical.clone())),
        }
    }

    /// Scalars that represent at least one regular element. For ℤ every
    /// residue class contains a nonzero integer.
    pub fn regular_representatives(&self) -> Result<ElemSet> {
        match self.period() {
            Some(_) => Ok(ElemSet::full(self.size)),
            None => Ok(self.invariants()?.regular.clone()),
        }
    }

    /// Whether `Ann(a) = 0` holds for scalar `a`. In ℤ this means `a ≠ 0`,
    /// which every residue class satisfies for some representative.
    pub fn has_zero_annihilator(&self, a: usize) -> bool {
        match self.period() {
            Some(_) => true,
            None => self
                .elements()
                .all(|y| y == self.zero || self.mul(a, y) != self.zero),
        }
    }
}

fn is_maximal_in(ideal: &Ideal, lattice: &[Ideal]) -> bool {
    ideal.is_proper()
        && !lattice.iter().any(|other| {
            other.is_proper()
                && other.elements() != ideal.elements()
                && ideal.elements().is_subset(other.elements())
        })
}

/// Closure of `{zero} ∪ seed` under a binary operation.
pub(crate) fn span(
    size: usize,
    zero: usize,
    seed: &ElemSet,
    op: impl Fn(usize, usize) -> usize,
) -> ElemSet {
    let gens: Vec<usize> = seed.iter().collect();
    let mut set = ElemSet::empty(size);
    set.insert(zero);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = op(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

fn residue_arith(moduli: &[u64]) -> Arith {
    let mut strides = vec![1usize; moduli.len()];
    for i in (0..moduli.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * moduli[i + 1] as usize;
    }
    Arith::Residue {
        moduli: moduli.to_vec(),
        strides,
    }
}

fn residue_one(moduli: &[u64]) -> usize {
    let mut one = 0usize;
    for &m in moduli {
        one = one * m as usize + 1;
    }
    one
}

pub(crate) fn residue_digits(moduli: &[u64], mut i: usize) -> Vec<u64> {
    let mut d = vec![0; moduli.len()];
    for k in (0..moduli.len()).rev() {
        d[k] = (i % moduli[k] as usize) as u64;
        i /= moduli[k] as usize;
    }
    d
}

/// `k`, `(a,b)`, or with `bar` the residue notation `k̄`.
pub(crate) fn residue_name(digits: &[u64], bar: bool) -> String {
    let show = |d: &u64| {
        if bar {
            format!("{d}\u{0304}")
        } else {
            d.to_string()
        }
    };
    if digits.len() == 1 {
        show(&digits[0])
    } else {
        format!(
            "({})",
            digits.iter().map(show).collect::<Vec<_>>().join(",")
        )
    }
}

/// Exhaustive check of the commutative-ring axioms; returns the negation
/// table on success.
fn check_ring_axioms(
    size: usize,
    add: &[u32],
    mul: &[u32],
    zero: usize,
    one: usize,
) -> Result<Vec<u32>> {
    let a = |x: usize, y: usize| add[x * size + y] as usize;
    let m = |x: usize, y: usize| mul[x * size + y] as usize;
    let fail = |law: &'static str, w: String| Err(Error::AxiomViolation { law, witness: w });
    for x in 0..size {
        if a(x, zero) != x {
            return fail("additive identity", format!("x={x}"));
        }
        if m(x, one) != x {
            return fail("multiplicative identity", format!("x={x}"));
        }
        for y in 0..size {
            if a(x, y) != a(y, x) {
                return fail("additive commutativity", format!("x={x}, y={y}"));
            }
            if m(x, y) != m(y, x) {
                return fail("multiplicative commutativity", format!("x={x}, y={y}"));
            }
        }
    }
    let mut neg = vec![0u32; size];
    for (x, slot) in neg.iter_mut().enumerate() {
        match (0..size).find(|&y| a(x, y) == zero) {
            Some(y) => *slot = y as u32,
            None => return fail("additive inverse", format!("x={x}")),
        }
    }
    for x in 0..size {
        for y in 0..size {
            let xy = a(x, y);
            let mxy = m(x, y);
            for z in 0..size {
                if a(xy, z) != a(x, a(y, z)) {
                    return fail("additive associativity", format!("x={x}, y={y}, z={z}"));
                }
                if m(mxy, z) != m(x, m(y, z)) {
                    return fail(
                        "multiplicative associativity",
                        format!("x={x}, y={y}, z={z}"),
                    );
                }
                if m(x, a(y, z)) != a(mxy, m(x, z)) {
                    return fail("distributivity", format!("x={x}, y={y}, z={z}"));
                }
            }
        }
    }
    Ok(neg)
}

pub(crate) fn integer_radical(mut n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut rad = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
