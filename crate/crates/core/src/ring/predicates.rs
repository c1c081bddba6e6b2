use std::fmt;
use std::str::FromStr;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::verdict::{Entry, Reason, Verdict, Witness};

use super::{integer_radical, radical_of_ideal, Ideal, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Prime,
    Maximal,
    Primary,
    QuasiPrimary,
    J,
    QuasiJ,
    N,
    R,
}

impl IdealKind {
    pub const ALL: [IdealKind; 8] = [
        IdealKind::Prime,
        IdealKind::Maximal,
        IdealKind::Primary,
        IdealKind::QuasiPrimary,
        IdealKind::J,
        IdealKind::QuasiJ,
        IdealKind::N,
        IdealKind::R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Prime => "prime",
            IdealKind::Maximal => "maximal",
            IdealKind::Primary => "primary",
            IdealKind::QuasiPrimary => "quasi_primary",
            IdealKind::J => "J",
            IdealKind::QuasiJ => "quasi_J",
            IdealKind::N => "n",
            IdealKind::R => "r",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown ideal predicate `{s}`"))
    }
}

fn pair(a: usize, b: usize) -> Witness {
    Witness::counterexample(vec![("a", Entry::Scalar(a)), ("b", Entry::Scalar(b))])
}

/// First `(a, b)` in scan order with `guard(a)`, `ab ∈ I` and `b ∉ target`.
fn scan_pairs(
    ring: &Ring,
    ideal: &Ideal,
    guard: impl Fn(usize) -> bool,
    target: &ElemSet,
) -> Verdict {
    for a in ring.elements().filter(|&a| guard(a)) {
        for b in ring.elements() {
            if ideal.elements().contains(ring.mul(a, b)) && !target.contains(b) {
                return Verdict::no(pair(a, b));
            }
        }
    }
    Verdict::yes()
}

/// Decides whether `ideal` has property `kind`, by exhaustive scan over
/// element pairs. Improper ideals give a degenerate false verdict.
pub fn ideal_predicate(ring: &Ring, ideal: &Ideal, kind: IdealKind) -> Result<Verdict> {
    if let Some(n) = ideal.symbolic() {
        return Ok(integer_ideal_predicate(n, kind));
    }
    if !ideal.is_proper() {
        return Ok(Verdict::improper());
    }
    let set = ideal.elements();
    Ok(match kind {
        IdealKind::Prime => scan_pairs(ring, ideal, |a| !set.contains(a), set),
        IdealKind::Primary => {
            let rad = radical_of_ideal(ring, ideal);
            scan_pairs(ring, ideal, |a| !set.contains(a), rad.elements())
        }
        IdealKind::QuasiPrimary => {
            ideal_predicate(ring, &radical_of_ideal(ring, ideal), IdealKind::Primary)?
        }
        IdealKind::J => {
            let jac = ring.invariants()?.jacobson.clone();
            scan_pairs(ring, ideal, |a| !jac.contains(a), set)
        }
        IdealKind::QuasiJ => ideal_predicate(ring, &radical_of_ideal(ring, ideal), IdealKind::J)?,
        IdealKind::N => {
            let nil = ring.invariants()?.nilradical.clone();
            scan_pairs(ring, ideal, |a| !nil.contains(a), set)
        }
        IdealKind::R => scan_pairs(ring, ideal, |a| ring.has_zero_annihilator(a), set),
        IdealKind::Maximal => {
            for x in ring.elements().filter(|&x| !set.contains(x)) {
                let mut sum = ElemSet::empty(ring.size());
                for i in set.iter() {
                    for r in ring.elements() {
                        sum.insert(ring.add(i, ring.mul(r, x)));
                    }
                }
                if !sum.is_full() {
                    return Ok(Verdict::no(Witness::counterexample(vec![(
                        "x",
                        Entry::Scalar(x),
                    )])));
                }
            }
            Verdict::yes()
        }
    })
}

fn in_nz(n: u64, x: u64) -> bool {
    if n == 0 {
        x == 0
    } else {
        x.is_multiple_of(n)
    }
}

fn least_prime_factor(n: u64) -> u64 {
    (2..)
        .find(|p| p * p > n || n.is_multiple_of(*p))
        .map(|p| if p * p > n { n } else { p })
        .unwrap()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && least_prime_factor(n) == n
}

/// Full power of the least prime dividing `n` (`n ≥ 2`).
fn leading_prime_power(n: u64) -> u64 {
    let p = least_prime_factor(n);
    let mut q = 1;
    while n.is_multiple_of(q * p) {
        q *= p;
    }
    q
}

fn is_prime_power(n: u64) -> bool {
    n >= 2 && leading_prime_power(n) == n
}

/// Closed-form predicates for the ideal `nℤ` of ℤ. Witness scalars are the
/// integers themselves.
pub fn integer_ideal_predicate(n: u64, kind: IdealKind) -> Verdict {
    if n == 1 {
        return Verdict::improper();
    }
    let rad = integer_radical(n);
    match kind {
        IdealKind::Prime => Verdict::from_bool(n == 0 || is_prime(n), || {
            let p = least_prime_factor(n);
            pair(p as usize, (n / p) as usize)
        }),
        IdealKind::Maximal => Verdict::from_bool(is_prime(n), || {
            let x = if n == 0 { 2 } else { least_prime_factor(n) };
            Witness::counterexample(vec![("x", Entry::Scalar(x as usize))])
        }),
        IdealKind::Primary => Verdict::from_bool(n == 0 || is_prime_power(n), || {
            let q = leading_prime_power(n);
            pair(q as usize, (n / q) as usize)
        }),
        IdealKind::QuasiPrimary => Verdict::from_bool(n == 0 || is_prime_power(n), || {
            let p = least_prime_factor(rad);
            pair(p as usize, (rad / p) as usize)
        }),
        // J(ℤ) = N(ℤ) = 0 and Ann(a) = 0 for a ≠ 0, so all three reduce to
        // `ab ∈ I, a ≠ 0 ⇒ b ∈ I`, which only 0 satisfies; (n, 1) is the
        // witness otherwise.
        IdealKind::J | IdealKind::N | IdealKind::R => {
            Verdict::from_bool(n == 0, || pair(n as usize, 1))
        }
        IdealKind::QuasiJ => Verdict::from_bool(n == 0, || pair(rad as usize, 1)),
    }
}

/// Re-checks that a witness returned by [`ideal_predicate`] violates the
/// defining formula.
pub fn replay_ideal_witness(
    ring: &Ring,
    ideal: &Ideal,
    kind: IdealKind,
    witness: &Witness,
) -> Result<bool> {
    if witness.reason != Reason::Counterexample {
        return Ok(!ideal.is_proper());
    }
    if let Some(n) = ideal.symbolic() {
        return Ok(replay_integer(n, kind, witness));
    }
    let set = ideal.elements();
    match kind {
        IdealKind::QuasiJ | IdealKind::QuasiPrimary => {
            let base = if kind == IdealKind::QuasiJ {
                IdealKind::J
            } else {
                IdealKind::Primary
            };
            replay_ideal_witness(ring, &radical_of_ideal(ring, ideal), base, witness)
        }
        IdealKind::Maximal => {
            let Some(x) = witness.scalar("x") else {
                return Ok(false);
            };
            if x >= ring.size() || set.contains(x) {
                return Ok(false);
            }
            let gens: Vec<usize> = set.iter().chain([x]).collect();
            Ok(super::ideal_generated(ring, &gens)?.is_proper())
        }
        _ => {
            let (Some(a), Some(b)) = (witness.scalar("a"), witness.scalar("b")) else {
                return Ok(false);
            };
            if a >= ring.size() || b >= ring.size() {
                return Ok(false);
            }
            let guard = match kind {
                IdealKind::Prime | IdealKind::Primary => !set.contains(a),
                IdealKind::J => !ring.invariants()?.jacobson.contains(a),
                IdealKind::N => !ring.invariants()?.nilradical.contains(a),
                IdealKind::R => ring.has_zero_annihilator(a),
                _ => unreachable!(),
            };
            let target = if kind == IdealKind::Primary {
                radical_of_ideal(ring, ideal).elements().clone()
            } else {
                set.clone()
            };
            Ok(guard && set.contains(ring.mul(a, b)) && !target.contains(b))
        }
    }
}

fn replay_integer(n: u64, kind: IdealKind, w: &Witness) -> bool {
    let rad = integer_radical(n);
    if kind == IdealKind::Maximal {
        return w.scalar("x").is_some_and(|x| {
            let x = x as u64;
            !in_nz(n, x) && super::gcd(n, x) != 1
        });
    }
    let (Some(a), Some(b)) = (w.scalar("a"), w.scalar("b")) else {
        return false;
    };
    let (a, b) = (a as u64, b as u64);
    match kind {
        IdealKind::Prime => in_nz(n, a * b) && !in_nz(n, a) && !in_nz(n, b),
        IdealKind::Primary => in_nz(n, a * b) && !in_nz(n, a) && !in_nz(rad, b),
        IdealKind::QuasiPrimary => {
            in_nz(rad, a * b) && !in_nz(rad, a) && !in_nz(integer_radical(rad), b)
        }
        IdealKind::J | IdealKind::N | IdealKind::R => a != 0 && in_nz(n, a * b) && !in_nz(n, b),
        IdealKind::QuasiJ => a != 0 && in_nz(rad, a * b) && !in_nz(rad, b),
        IdealKind::Maximal => unreachable!(),
    }
}

/// `Z_I(R) = {r : rs ∈ I for some s ∉ I}`.
pub fn ideal_zero_divisor_set(ring: &Ring, ideal: &Ideal) -> Result<ElemSet> {
    if ring.is_integer_adapter() {
        return Err(Error::IntegerAdapter("ideal_zero_divisor_set"));
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let set = ideal.elements();
    Ok(ElemSet::from_indices(
        ring.size(),
        ring.elements().filter(|&r| {
            ring.elements()
                .any(|s| !set.contains(s) && set.contains(ring.mul(r, s)))
        }),
    ))
}
