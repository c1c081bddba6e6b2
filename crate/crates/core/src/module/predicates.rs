use std::fmt;
use std::str::FromStr;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::{radical_of_ideal, Ideal};
use crate::verdict::{Entry, Reason, Verdict, Witness};

use super::lattice::{all_submodules, ideal_times, m_rad, module_invariants, residual_ideal};
use super::Module;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubmoduleKind {
    Prime,
    Primary,
    QuasiPrimary,
    J,
    QuasiJ,
    R,
    Sr,
    Pure,
    Divisible,
    Small,
}

impl SubmoduleKind {
    pub const ALL: [SubmoduleKind; 10] = [
        SubmoduleKind::Prime,
        SubmoduleKind::Primary,
        SubmoduleKind::QuasiPrimary,
        SubmoduleKind::J,
        SubmoduleKind::QuasiJ,
        SubmoduleKind::R,
        SubmoduleKind::Sr,
        SubmoduleKind::Pure,
        SubmoduleKind::Divisible,
        SubmoduleKind::Small,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubmoduleKind::Prime => "prime",
            SubmoduleKind::Primary => "primary",
            SubmoduleKind::QuasiPrimary => "quasi_primary",
            SubmoduleKind::J => "J",
            SubmoduleKind::QuasiJ => "quasi_J",
            SubmoduleKind::R => "r",
            SubmoduleKind::Sr => "sr",
            SubmoduleKind::Pure => "pure",
            SubmoduleKind::Divisible => "divisible",
            SubmoduleKind::Small => "small",
        }
    }
}

impl fmt::Display for SubmoduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubmoduleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SubmoduleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown submodule predicate `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresimpKind {
    Plain,
    Quasi,
    J,
    QuasiJ,
}

impl PresimpKind {
    pub const ALL: [PresimpKind; 4] = [
        PresimpKind::Plain,
        PresimpKind::Quasi,
        PresimpKind::J,
        PresimpKind::QuasiJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresimpKind::Plain => "plain",
            PresimpKind::Quasi => "quasi",
            PresimpKind::J => "J",
            PresimpKind::QuasiJ => "quasi_J",
        }
    }
}

impl FromStr for PresimpKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PresimpKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown presimplifiable variant `{s}`"))
    }
}

fn rm_witness(r: usize, m: usize) -> Witness {
    Witness::counterexample(vec![("r", Entry::Scalar(r)), ("m", Entry::Element(m))])
}

/// First `(r, m)`, scalars then elements ascending, with `guard(r)`,
/// `rm ∈ N` and `bad(r, m)`.
fn scan(
    module: &Module,
    n: &ElemSet,
    guard: impl Fn(usize) -> bool,
    bad: impl Fn(usize, usize) -> bool,
) -> Verdict {
    for r in module.scalars().filter(|&r| guard(r)) {
        for m in module.elements() {
            if n.contains(module.act(r, m)) && bad(r, m) {
                return Verdict::no(rm_witness(r, m));
            }
        }
    }
    Verdict::yes()
}

fn degenerate(module: &Module, n: &ElemSet) -> Option<Verdict> {
    if module.is_zero_module() {
        Some(Verdict::no(Witness::degenerate(Reason::ZeroModule)))
    } else if n.is_full() {
        Some(Verdict::improper())
    } else {
        None
    }
}

pub(crate) fn prime_verdict(module: &Module, n: &ElemSet) -> Verdict {
    if let Some(v) = degenerate(module, n) {
        return v;
    }
    let res = residual_ideal(module, n);
    scan(module, n, |r| !res.contains(r), |_, m| !n.contains(m))
}

/// Whether `ann_M(a) = 0`, i.e. `a` acts injectively.
fn acts_injectively(module: &Module, a: usize) -> bool {
    module
        .elements()
        .all(|m| m == module.zero() || module.act(a, m) != module.zero())
}

/// Whether `ann_R(m) = 0`. Never true over ℤ for a finite module.
fn annihilator_is_zero(module: &Module, m: usize) -> bool {
    let ring = module.ring();
    !ring.is_integer_adapter()
        && module
            .scalars()
            .all(|r| r == ring.zero() || module.act(r, m) != module.zero())
}

/// Decides a submodule predicate by exhaustive scan. The submodule must be
/// proper and the module nonzero; otherwise the verdict is a labeled
/// degenerate false.
pub fn submodule_predicate(module: &Module, n: &ElemSet, kind: SubmoduleKind) -> Result<Verdict> {
    if let Some(v) = degenerate(module, n) {
        return Ok(v);
    }
    let ring = module.ring();
    Ok(match kind {
        SubmoduleKind::Prime => prime_verdict(module, n),
        SubmoduleKind::Primary => {
            let rad = radical_of_ideal(ring, &residual_ideal(module, n));
            scan(module, n, |r| !rad.contains(r), |_, m| !n.contains(m))
        }
        SubmoduleKind::QuasiPrimary => {
            let rad = radical_of_ideal(ring, &residual_ideal(module, n));
            let mrad = m_rad(module, n)?;
            scan(module, n, |r| !rad.contains(r), |_, m| !mrad.contains(m))
        }
        SubmoduleKind::J => {
            let jr = &module_invariants(module)?.jr_ideal;
            scan(module, n, |r| !jr.contains(r), |_, m| !n.contains(m))
        }
        SubmoduleKind::QuasiJ => {
            let jr = &module_invariants(module)?.jr_ideal;
            let mrad = m_rad(module, n)?;
            scan(module, n, |r| !jr.contains(r), |_, m| !mrad.contains(m))
        }
        SubmoduleKind::R => scan(
            module,
            n,
            |a| acts_injectively(module, a),
            |_, m| !n.contains(m),
        ),
        SubmoduleKind::Sr => {
            let res = residual_ideal(module, n);
            scan(
                module,
                n,
                |a| !res.contains(a),
                |_, m| annihilator_is_zero(module, m),
            )
        }
        SubmoduleKind::Pure => {
            let full = module.full();
            for r in module.scalars() {
                let rm = module.scale(r, &full).intersection(n);
                let rn = module.scale(r, n);
                if let Some(m) = rm.difference(&rn).first() {
                    return Ok(Verdict::no(rm_witness(r, m)));
                }
            }
            Verdict::yes()
        }
        SubmoduleKind::Divisible => {
            let regular = ring.regular_representatives()?;
            for r in regular.iter() {
                let rn = module.scale(r, n);
                if let Some(m) = n.difference(&rn).first() {
                    return Ok(Verdict::no(rm_witness(r, m)));
                }
            }
            Verdict::yes()
        }
        SubmoduleKind::Small => {
            let full = module.full();
            for k in all_submodules(module)?.iter() {
                if !k.elements().is_full() && module.sum(n, k.elements()) == full {
                    return Ok(Verdict::no(Witness::counterexample(vec![(
                        "K",
                        Entry::Submodule(k.elements().clone()),
                    )])));
                }
            }
            Verdict::yes()
        }
    })
}

/// Re-checks that a witness from [`submodule_predicate`] violates the
/// defining formula.
pub fn replay_submodule_witness(
    module: &Module,
    n: &ElemSet,
    kind: SubmoduleKind,
    witness: &Witness,
) -> Result<bool> {
    match witness.reason {
        Reason::ZeroModule => return Ok(module.is_zero_module()),
        Reason::Improper => return Ok(n.is_full()),
        Reason::Counterexample => {}
    }
    let ring = module.ring();
    if kind == SubmoduleKind::Small {
        let Some(k) = witness.submodule("K") else {
            return Ok(false);
        };
        return Ok(module.is_submodule(k) && !k.is_full() && module.sum(n, k).is_full());
    }
    let (Some(r), Some(m)) = (witness.scalar("r"), witness.element("m")) else {
        return Ok(false);
    };
    if r >= ring.size() || m >= module.size() {
        return Ok(false);
    }
    let rm_in = n.contains(module.act(r, m));
    Ok(match kind {
        SubmoduleKind::Prime => rm_in && !n.contains(m) && !residual_ideal(module, n).contains(r),
        SubmoduleKind::Primary => {
            let rad = radical_of_ideal(ring, &residual_ideal(module, n));
            rm_in && !n.contains(m) && !rad.contains(r)
        }
        SubmoduleKind::QuasiPrimary => {
            let rad = radical_of_ideal(ring, &residual_ideal(module, n));
            rm_in && !m_rad(module, n)?.contains(m) && !rad.contains(r)
        }
        SubmoduleKind::J => {
            rm_in && !n.contains(m) && !module_invariants(module)?.jr_ideal.contains(r)
        }
        SubmoduleKind::QuasiJ => {
            rm_in
                && !m_rad(module, n)?.contains(m)
                && !module_invariants(module)?.jr_ideal.contains(r)
        }
        SubmoduleKind::R => rm_in && acts_injectively(module, r) && !n.contains(m),
        SubmoduleKind::Sr => {
            rm_in && annihilator_is_zero(module, m) && !residual_ideal(module, n).contains(r)
        }
        SubmoduleKind::Pure => {
            let in_rm = module.elements().any(|x| module.act(r, x) == m);
            let in_rn = n.iter().any(|x| module.act(r, x) == m);
            n.contains(m) && in_rm && !in_rn
        }
        SubmoduleKind::Divisible => {
            ring.regular_representatives()?.contains(r)
                && n.contains(m)
                && !n.iter().any(|x| module.act(r, x) == m)
        }
        SubmoduleKind::Small => unreachable!(),
    })
}

/// The containment defining each presimplifiable variant: `Z(M)` or `NZ(M)`
/// inside `J(R)` or `(J(R)M:M)`.
pub fn presimplifiable(module: &Module, kind: PresimpKind) -> Result<Verdict> {
    if module.is_zero_module() {
        return Err(Error::ZeroModule("presimplifiable"));
    }
    let inv = module_invariants(module)?;
    let jac = module.ring().jacobson()?;
    let (source, target): (&ElemSet, &Ideal) = match kind {
        PresimpKind::Plain => (&inv.zero_divisors, &jac),
        PresimpKind::Quasi => (&inv.nz, &jac),
        PresimpKind::J => (&inv.zero_divisors, &inv.jr_ideal),
        PresimpKind::QuasiJ => (&inv.nz, &inv.jr_ideal),
    };
    Ok(match source.iter().find(|&r| !target.contains(r)) {
        None => Verdict::yes(),
        Some(r) => Verdict::no(Witness::counterexample(vec![("r", Entry::Scalar(r))])),
    })
}

/// Whether every submodule satisfies `N = (N:M)M`.
pub fn is_multiplication(module: &Module) -> Result<Verdict> {
    let full = module.full();
    for s in all_submodules(module)?.iter() {
        let n = s.elements();
        if &ideal_times(module, &residual_ideal(module, n), &full) != n {
            return Ok(Verdict::no(Witness::counterexample(vec![(
                "N",
                Entry::Submodule(n.clone()),
            )])));
        }
    }
    Ok(Verdict::yes())
}

/// Whether `(0:M) = 0`.
pub fn is_faithful(module: &Module) -> bool {
    residual_ideal(module, &module.zero_submodule()).is_zero()
}

/// `NK = ((N:M)(K:M))M` in a multiplication module.
pub fn submodule_product(module: &Module, n: &ElemSet, k: &ElemSet) -> Result<ElemSet> {
    if !is_multiplication(module)?.holds {
        return Err(Error::NotMultiplication);
    }
    let ring = module.ring();
    let ideal = Ideal::product(ring, &residual_ideal(module, n), &residual_ideal(module, k));
    Ok(ideal_times(module, &ideal, &module.full()))
}

/// The maximal elements, under inclusion, of the quasi J-submodules.
pub fn quasi_j_maximal_set(module: &Module) -> Result<Vec<ElemSet>> {
    let mut qj = Vec::new();
    for s in all_submodules(module)?.iter() {
        if submodule_predicate(module, s.elements(), SubmoduleKind::QuasiJ)?.holds {
            qj.push(s.elements().clone());
        }
    }
    Ok(qj
        .iter()
        .filter(|a| !qj.iter().any(|b| b != *a && a.is_subset(b)))
        .cloned()
        .collect())
}
