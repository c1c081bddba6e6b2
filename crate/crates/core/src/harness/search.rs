//! Searches for instances refuting implications that do not hold in
//! general.

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{
    m_rad, make_integer_module, module_invariants, presimplifiable, replay_submodule_witness,
    residual_ideal, submodule_predicate, Module, PresimpKind, SubmoduleKind as K,
};
use crate::ring::{
    ideal_predicate, integer_ideal_predicate, replay_ideal_witness, Ideal, IdealKind, Ring,
};

use super::claims::{lattice, proper};
use super::corpus::{Corpus, Family};

pub struct SearchTarget {
    pub id: &'static str,
    pub anchor: &'static str,
    pub description: &'static str,
    /// Why the finite corpus cannot contain an instance, when that is known.
    pub absent: Option<&'static str>,
}

static TARGETS: &[SearchTarget] = &[
    SearchTarget {
        id: "quasiJ⇒J",
        anchor: "is not a J-submodule since",
        description: "a quasi J-submodule that is not a J-submodule",
        absent: None,
    },
    SearchTarget {
        id: "product-of-quasiJ⇒quasiJ",
        anchor: "need not be a quasi J-submodule",
        description: "quasi J-submodules N₁, N₂ with N₁×N₂ not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "prod.2-unrestricted",
        anchor: "M₁×M₂×⋯×N_j×⋯×M_k is a quasi J-submodule of M",
        description: "N_j quasi J in M_j with M₁×⋯×N_j×⋯×M_k not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "quasiPrimary⇒quasiJ",
        anchor: "which is clearly not a quasi J-submodule",
        description: "a quasi primary submodule that is not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "prime⇒quasiJ",
        anchor: "is a prime submodule of the ℤ-module ℤ which is not a (quasi) J-submodule",
        description: "a prime submodule that is not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "quasiJ⇒prime",
        anchor: "which is not an r-submodule, an sr-submodule or a prime submodule",
        description: "a quasi J-submodule that is not prime",
        absent: None,
    },
    SearchTarget {
        id: "quasiJ⇒r",
        anchor: "which is not an r-submodule, an sr-submodule or a prime submodule",
        description: "a quasi J-submodule that is not an r-submodule",
        absent: Some("a scalar acting injectively on a finite module permutes it and maps each submodule onto itself, so every proper submodule of a finite module is an r-submodule"),
    },
    SearchTarget {
        id: "quasiJ⇒sr",
        anchor: "which is not an r-submodule, an sr-submodule or a prime submodule",
        description: "a quasi J-submodule that is not an sr-submodule",
        absent: None,
    },
    SearchTarget {
        id: "r⇒quasiJ",
        anchor: "is an r-submodule and sr-submodule of the ℤ-module ℤ₆",
        description: "an r-submodule that is not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "sr⇒quasiJ",
        anchor: "is an r-submodule and sr-submodule of the ℤ-module ℤ₆",
        description: "an sr-submodule that is not quasi J",
        absent: None,
    },
    SearchTarget {
        id: "thm3-without-fgfm",
        anchor: "is not a J-submodule since for example",
        description: "outside finitely generated faithful multiplication modules: N quasi J with M-rad(N) not J",
        absent: None,
    },
    SearchTarget {
        id: "thm1.2-without-fgfm",
        anchor: "but N is not a quasi J-submodule of M",
        description: "outside finitely generated faithful multiplication modules: N quasi J and (N:M) quasi J disagree",
        absent: None,
    },
    SearchTarget {
        id: "idealization-descent",
        anchor: "0̄ is not quasi J-submodule of ℤ₆",
        description: "I(+)N quasi J in R(+)M while N is not quasi J in M",
        absent: None,
    },
    SearchTarget {
        id: "Jpresimp⇒presimp",
        anchor: "is a J-presimplifiable module that is not presimplifiable",
        description: "a J-presimplifiable module that is not presimplifiable",
        absent: None,
    },
    SearchTarget {
        id: "qJpresimp⇒Jpresimp",
        anchor: "is a quasi J-presimplifiable that is not J-presimplifiable",
        description: "a quasi J-presimplifiable module that is not J-presimplifiable",
        absent: None,
    },
];

pub fn search_targets() -> &'static [SearchTarget] {
    TARGETS
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Found {
    pub instance: String,
    pub witness: String,
    /// The witness was re-checked against the defining formula.
    pub replayed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub target: String,
    pub anchor: String,
    pub found: Option<Found>,
    pub note: Option<String>,
}

fn describe(m: &Module, n: &ElemSet) -> String {
    format!(
        "M={} over {}, N={}",
        m.label(),
        m.ring().label(),
        m.display_set(n)
    )
}

/// The first `(M, N)` where `keep` holds and `refute` is false, reported with
/// the witness of `refute`, evaluated on `on(N)`.
fn first_submodule(
    corpus: &Corpus,
    modules: impl Fn(Family, &Module) -> bool,
    mut keep: impl FnMut(&Module, &ElemSet) -> Result<bool>,
    refute: K,
    on: impl Fn(&Module, &ElemSet) -> Result<ElemSet>,
) -> Result<Option<Found>> {
    for e in &corpus.modules {
        let m = &e.module;
        if m.is_zero_module() || !modules(e.family, m) {
            continue;
        }
        for n in proper(&lattice(m)?) {
            if !keep(m, &n)? {
                continue;
            }
            let target = on(m, &n)?;
            let v = submodule_predicate(m, &target, refute)?;
            if let Some(w) = v.witness {
                return Ok(Some(Found {
                    instance: describe(m, &n),
                    witness: w.render(m),
                    replayed: replay_submodule_witness(m, &target, refute, &w)?,
                }));
            }
        }
    }
    Ok(None)
}

fn holds(kind: K) -> impl FnMut(&Module, &ElemSet) -> Result<bool> {
    move |m, n| Ok(submodule_predicate(m, n, kind)?.holds)
}

fn same(_: &Module, n: &ElemSet) -> Result<ElemSet> {
    Ok(n.clone())
}

fn any_module(_: Family, _: &Module) -> bool {
    true
}

fn symbolic(n: u64, keep: IdealKind, refute: IdealKind) -> Result<Option<Found>> {
    if !integer_ideal_predicate(n, keep).holds {
        return Ok(None);
    }
    let v = integer_ideal_predicate(n, refute);
    let Some(w) = v.witness else { return Ok(None) };
    let period = n.max(2) * 2;
    let ring = Ring::integers(period)?;
    let ideal = Ideal::integer(n, period);
    Ok(Some(Found {
        instance: format!(
            "N={}≤ℤ over ℤ",
            if n == 0 {
                "0".into()
            } else {
                format!("{n}ℤ")
            }
        ),
        witness: w.render_scalars(&ring),
        replayed: replay_ideal_witness(&ring, &ideal, refute, &w)?,
    }))
}

fn product_search(corpus: &Corpus) -> Result<Option<Found>> {
    for p in &corpus.products {
        if p.parts.len() != 2 {
            continue;
        }
        let qjs: Vec<Vec<ElemSet>> = p
            .parts
            .iter()
            .map(|m| {
                let mut out = Vec::new();
                for n in proper(&lattice(m)?) {
                    if submodule_predicate(m, &n, K::QuasiJ)?.holds {
                        out.push(n);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        for a in &qjs[0] {
            for b in &qjs[1] {
                let m = &p.product;
                let n = ElemSet::from_indices(
                    m.size(),
                    m.elements().filter(|&x| {
                        a.contains(p.projections[0].apply(x))
                            && b.contains(p.projections[1].apply(x))
                    }),
                );
                let v = submodule_predicate(m, &n, K::QuasiJ)?;
                if let Some(w) = v.witness {
                    return Ok(Some(Found {
                        instance: format!(
                            "M={} over {}, N={}×{}",
                            m.label(),
                            m.ring().label(),
                            p.parts[0].display_set(a),
                            p.parts[1].display_set(b)
                        ),
                        witness: w.render(m),
                        replayed: replay_submodule_witness(m, &n, K::QuasiJ, &w)?,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn factor_search(corpus: &Corpus) -> Result<Option<Found>> {
    for p in &corpus.products {
        let m = &p.product;
        for (j, mj) in p.parts.iter().enumerate() {
            for nj in proper(&lattice(mj)?) {
                if !submodule_predicate(mj, &nj, K::QuasiJ)?.holds {
                    continue;
                }
                let n = ElemSet::from_indices(
                    m.size(),
                    m.elements()
                        .filter(|&x| nj.contains(p.projections[j].apply(x))),
                );
                let v = submodule_predicate(m, &n, K::QuasiJ)?;
                if let Some(w) = v.witness {
                    return Ok(Some(Found {
                        instance: format!(
                            "M={} over {}, j={}, N_j={}",
                            m.label(),
                            m.ring().label(),
                            j + 1,
                            mj.display_set(&nj)
                        ),
                        witness: w.render(m),
                        replayed: replay_submodule_witness(m, &n, K::QuasiJ, &w)?,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn thm1_2_search(corpus: &Corpus) -> Result<Option<Found>> {
    for e in &corpus.modules {
        let m = &e.module;
        if m.is_zero_module() || e.is_fgfm() {
            continue;
        }
        for n in proper(&lattice(m)?) {
            let sub = submodule_predicate(m, &n, K::QuasiJ)?;
            let res = residual_ideal(m, &n);
            let ideal = ideal_predicate(m.ring(), &res, IdealKind::QuasiJ)?;
            if sub.holds == ideal.holds {
                continue;
            }
            let (text, replayed) = match (&sub.witness, &ideal.witness) {
                (Some(w), _) => (
                    format!("N not quasi J: {}", w.render(m)),
                    replay_submodule_witness(m, &n, K::QuasiJ, w)?,
                ),
                (None, Some(w)) => (
                    format!("(N:M) not quasi J: {}", w.render_scalars(m.ring())),
                    replay_ideal_witness(m.ring(), &res, IdealKind::QuasiJ, w)?,
                ),
                (None, None) => unreachable!("verdicts differ"),
            };
            return Ok(Some(Found {
                instance: format!("{}, (N:M)={}", describe(m, &n), res.display(m.ring())),
                witness: text,
                replayed,
            }));
        }
    }
    Ok(None)
}

fn idealization_search(corpus: &Corpus) -> Result<Option<Found>> {
    for x in &corpus.idealizations {
        let m = x.module();
        let full = m.full();
        for i in crate::ring::all_ideals(x.base())?.iter() {
            let im = crate::module::ideal_times(m, i, &full);
            for n in proper(&lattice(m)?).into_iter().filter(|n| im.is_subset(n)) {
                let pair = x.pair_ideal(i, &n)?;
                if !ideal_predicate(x.ring(), &pair, IdealKind::QuasiJ)?.holds {
                    continue;
                }
                let v = submodule_predicate(m, &n, K::QuasiJ)?;
                if let Some(w) = v.witness {
                    return Ok(Some(Found {
                        instance: format!(
                            "R(+)M={}, I={}, N={}",
                            x.ring().label(),
                            i.display(x.base()),
                            m.display_set(&n)
                        ),
                        witness: w.render(m),
                        replayed: replay_submodule_witness(m, &n, K::QuasiJ, &w)?,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// `0(+)0̄` in `ℤ(+)ℤ₆`: the ideal `0` of ℤ is quasi J, so the pair ideal is
/// quasi J, while `0̄` is not quasi J in the ℤ-module ℤ₆.
fn integer_descent() -> Result<Option<Found>> {
    if !integer_ideal_predicate(0, IdealKind::QuasiJ).holds {
        return Ok(None);
    }
    let m = make_integer_module(&[6])?;
    let zero = m.zero_submodule();
    let v = submodule_predicate(&m, &zero, K::QuasiJ)?;
    let Some(w) = v.witness else { return Ok(None) };
    Ok(Some(Found {
        instance: "R(+)M=ℤ(+)ℤ₆, I=0, N=0̄".into(),
        witness: w.render(&m),
        replayed: replay_submodule_witness(&m, &zero, K::QuasiJ, &w)?,
    }))
}

fn presimp_search(
    corpus: &Corpus,
    keep: PresimpKind,
    refute: PresimpKind,
) -> Result<Option<Found>> {
    for e in &corpus.modules {
        let m = &e.module;
        if m.is_zero_module() || !presimplifiable(m, keep)?.holds {
            continue;
        }
        let v = presimplifiable(m, refute)?;
        let Some(w) = v.witness else { continue };
        let r = w.scalar("r").expect("presimplifiable witness binds r");
        let inv = module_invariants(m)?;
        let jac = m.ring().jacobson()?;
        let replayed = match refute {
            PresimpKind::Plain => inv.zero_divisors.contains(r) && !jac.contains(r),
            PresimpKind::Quasi => inv.nz.contains(r) && !jac.contains(r),
            PresimpKind::J => inv.zero_divisors.contains(r) && !inv.jr_ideal.contains(r),
            PresimpKind::QuasiJ => inv.nz.contains(r) && !inv.jr_ideal.contains(r),
        };
        return Ok(Some(Found {
            instance: format!("M={} over {}", m.label(), m.ring().label()),
            witness: w.render(m),
            replayed,
        }));
    }
    Ok(None)
}

pub fn search_counterexample(id: &str, corpus: &Corpus) -> Result<SearchResult> {
    let target = TARGETS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTarget(id.to_string()))?;
    let mut note = None;
    let found = match id {
        "quasiJ⇒J" => first_submodule(corpus, any_module, holds(K::QuasiJ), K::J, same)?,
        "product-of-quasiJ⇒quasiJ" => product_search(corpus)?,
        "prod.2-unrestricted" => factor_search(corpus)?,
        "quasiPrimary⇒quasiJ" => symbolic(2, IdealKind::QuasiPrimary, IdealKind::QuasiJ)?,
        "prime⇒quasiJ" => symbolic(2, IdealKind::Prime, IdealKind::QuasiJ)?,
        "quasiJ⇒prime" => first_submodule(corpus, any_module, holds(K::QuasiJ), K::Prime, same)?,
        "quasiJ⇒r" => first_submodule(corpus, any_module, holds(K::QuasiJ), K::R, same)?,
        "quasiJ⇒sr" => first_submodule(corpus, any_module, holds(K::QuasiJ), K::Sr, same)?,
        "r⇒quasiJ" => first_submodule(corpus, any_module, holds(K::R), K::QuasiJ, same)?,
        "sr⇒quasiJ" => first_submodule(corpus, any_module, holds(K::Sr), K::QuasiJ, same)?,
        "thm3-without-fgfm" => first_submodule(
            corpus,
            |family, m| family != Family::OverItself || !crate::module::is_faithful(m),
            holds(K::QuasiJ),
            K::J,
            m_rad,
        )?,
        "thm1.2-without-fgfm" => {
            note = Some("the ℤ-module ℤ×ℤ with N=2ℤ×0 is infinite and is not searched".into());
            thm1_2_search(corpus)?
        }
        "idealization-descent" => match idealization_search(corpus)? {
            Some(f) => Some(f),
            None => {
                note = Some(
                    "no finite idealization in the corpus refutes descent; reported instance combines the ideal 0 of ℤ with the ℤ-module ℤ₆"
                        .into(),
                );
                integer_descent()?
            }
        },
        "Jpresimp⇒presimp" => presimp_search(corpus, PresimpKind::J, PresimpKind::Plain)?,
        "qJpresimp⇒Jpresimp" => presimp_search(corpus, PresimpKind::QuasiJ, PresimpKind::J)?,
        _ => unreachable!("target table and dispatch agree"),
    };
    if found.is_none() && note.is_none() {
        note = Some(target.absent.unwrap_or("no instance in the corpus").into());
    }
    Ok(SearchResult {
        target: target.id.to_string(),
        anchor: target.anchor.to_string(),
        found,
        note,
    })
}
