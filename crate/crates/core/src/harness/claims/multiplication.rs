//! Claims about finitely generated faithful multiplication modules. Over a
//! finite ring every module is finitely generated, so the filter is
//! `is_multiplication ∧ (0:M) = 0`.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{
    colon_by_set, colon_submodule, ideal_times, j_over, m_rad, module_invariants, residual_ideal,
    Module, SubmoduleKind as K,
};
use crate::ring::{radical_of_ideal, Ideal, IdealKind, Ring};

use super::super::corpus::{ring_ideals, Corpus, ModuleEntry};
use super::super::{sample, Tally, TUPLE_CAP};
use super::{at, flag, ideal_holds, lattice, proper, qj, sub_holds};

fn fgfm(c: &Corpus) -> impl Iterator<Item = &Module> {
    c.modules
        .iter()
        .filter(|e: &&ModuleEntry| !e.module.is_zero_module() && e.is_fgfm())
        .map(|e| e.module.as_ref())
}

fn with_ideal(m: &Module, subs: &[(&str, &ElemSet)], i: &Ideal) -> String {
    format!("{}, I={}", at(m, subs), i.display(m.ring()))
}

/// `NK = ((N:M)(K:M))M`.
fn mult_product(m: &Module, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let ring = m.ring();
    let ideal = Ideal::product(ring, &residual_ideal(m, a), &residual_ideal(m, b));
    ideal_times(m, &ideal, &m.full())
}

pub(crate) fn lem9(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let full = m.full();
        let ideals = ring_ideals(ring)?;
        for n in proper(&lattice(m)?) {
            let res = residual_ideal(m, &n);
            let rad_ok = m_rad(m, &n)? == ideal_times(m, &radical_of_ideal(ring, &res), &full);
            for i in &ideals {
                t.case(
                    true,
                    || with_ideal(m, &[("N", &n)], i),
                    || {
                        if !rad_ok {
                            return Ok(Some("M-rad(N) ≠ √(N:M)M".into()));
                        }
                        if &residual_ideal(m, &ideal_times(m, i, &full)) != i {
                            return Ok(Some("(IM:M) ≠ I".into()));
                        }
                        let lhs = residual_ideal(m, &ideal_times(m, i, &n));
                        Ok(flag(lhs != Ideal::product(ring, i, &res), || {
                            "(IN:M) ≠ I(N:M)".into()
                        }))
                    },
                )?;
            }
        }
    }
    Ok(())
}

pub(crate) fn thm1_1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let full = m.full();
        for i in ring_ideals(m.ring())? {
            let lhs = ideal_holds(m.ring(), &i, IdealKind::QuasiJ)?;
            let rhs = qj(m, &ideal_times(m, &i, &full))?;
            t.equiv(|| with_ideal(m, &[], &i), &[("I", lhs), ("IM", rhs)])?;
        }
    }
    Ok(())
}

pub(crate) fn thm1_2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        for n in lattice(m)? {
            let lhs = qj(m, &n)?;
            let rhs = ideal_holds(m.ring(), &residual_ideal(m, &n), IdealKind::QuasiJ)?;
            t.equiv(|| at(m, &[("N", &n)]), &[("N", lhs), ("(N:M)", rhs)])?;
        }
    }
    Ok(())
}

pub(crate) fn thm1_3(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let full = m.full();
        let mut images = Vec::new();
        for i in ring_ideals(m.ring())? {
            if ideal_holds(m.ring(), &i, IdealKind::QuasiJ)? {
                images.push(ideal_times(m, &i, &full));
            }
        }
        for n in lattice(m)? {
            let lhs = qj(m, &n)?;
            t.equiv(
                || at(m, &[("N", &n)]),
                &[("N", lhs), ("N=IM", images.contains(&n))],
            )?;
        }
    }
    Ok(())
}

pub(crate) fn thm1_4(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let lat = lattice(m)?;
        for i in ring_ideals(m.ring())? {
            let qi = ideal_holds(m.ring(), &i, IdealKind::QuasiJ)?;
            for n in &lat {
                let hyp = qi && qj(m, n)?;
                t.case(
                    hyp,
                    || with_ideal(m, &[("N", n)], &i),
                    || {
                        Ok(flag(!qj(m, &ideal_times(m, &i, n))?, || {
                            "IN is not quasi J".into()
                        }))
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn is_faithful_ideal(ring: &Ring, i: &Ideal) -> bool {
    Ideal::quotient(ring, &ring.zero_ideal(), i).is_zero()
}

/// Whether every ideal `J ⊆ I` equals `(J:I)I`.
fn is_multiplication_ideal(ring: &Ring, ideals: &[Ideal], i: &Ideal) -> bool {
    ideals
        .iter()
        .filter(|j| j.is_subset(i))
        .all(|j| &Ideal::product(ring, &Ideal::quotient(ring, j, i), i) == j)
}

fn faithful_multiplication_ideals(ring: &Ring) -> Result<(Vec<Ideal>, Vec<bool>)> {
    let ideals = ring_ideals(ring)?;
    let flags = ideals
        .iter()
        .map(|i| is_faithful_ideal(ring, i) && is_multiplication_ideal(ring, &ideals, i))
        .collect();
    Ok((ideals, flags))
}

/// The harness can only form `IM` as a module when `IM = M`.
fn require_unit(ring: &Ring, i: &Ideal) -> Result<()> {
    if i.is_proper() {
        return Err(Error::IdentityViolation {
            identity: "faithful ideals of a finite ring are the unit ideal",
            detail: format!("{} in {}", i.display(ring), ring.label()),
        });
    }
    Ok(())
}

pub(crate) fn in_claim(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let lat = lattice(m)?;
        let (ideals, fm) = faithful_multiplication_ideals(ring)?;
        for (i, &ok) in ideals.iter().zip(&fm) {
            let trivial = !i.is_proper();
            let rad = radical_of_ideal(ring, i);
            let rad_mult = is_multiplication_ideal(ring, &ideals, &rad);
            for n in &lat {
                let hyp1 = ok && sub_holds(m, &ideal_times(m, i, n), K::J)?;
                t.case_with(
                    hyp1,
                    trivial,
                    || with_ideal(m, &[("N", n)], i),
                    || {
                        let ok = ideal_holds(ring, i, IdealKind::J)? || sub_holds(m, n, K::J)?;
                        Ok(flag(!ok, || "neither I is J nor N is J".into()))
                    },
                )?;
                let hyp2 = ok && rad_mult && qj(m, &ideal_times(m, &rad, n))?;
                t.case_with(
                    hyp2,
                    trivial,
                    || with_ideal(m, &[("N", n)], i),
                    || {
                        let ok = ideal_holds(ring, i, IdealKind::QuasiJ)? || qj(m, n)?;
                        Ok(flag(!ok, || "neither I nor N is quasi J".into()))
                    },
                )?;
            }
        }
    }
    Ok(())
}

pub(crate) fn thm3(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let jac = ring.jacobson()?;
        let outside: Vec<usize> = ring.elements().filter(|&r| !jac.contains(r)).collect();
        for n in proper(&lattice(m)?) {
            let rad = m_rad(m, &n)?;
            let f1 = qj(m, &n)?;
            let f2 = qj(m, &rad)?;
            let f3 = sub_holds(m, &rad, K::J)?;
            let mut f4 = true;
            for &r in &outside {
                let single = ElemSet::from_indices(ring.size(), [r]);
                if colon_by_set(m, &rad, &single)? != rad {
                    f4 = false;
                    break;
                }
            }
            t.equiv(
                || at(m, &[("N", &n)]),
                &[("(1)", f1), ("(2)", f2), ("(3)", f3), ("(4)", f4)],
            )?;
        }
    }
    Ok(())
}

pub(crate) fn prop7(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        for n in lattice(m)? {
            let res = residual_ideal(m, &n);
            let rad = radical_of_ideal(ring, &res);
            let sides = [
                ("(1)", qj(m, &n)?),
                ("(2)", ideal_holds(ring, &rad, IdealKind::J)?),
                ("(3)", ideal_holds(ring, &rad, IdealKind::QuasiJ)?),
                ("(4)", ideal_holds(ring, &res, IdealKind::QuasiJ)?),
            ];
            t.equiv(|| at(m, &[("N", &n)]), &sides)?;
        }
    }
    Ok(())
}

pub(crate) fn ikil_2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let jr = &module_invariants(m)?.jr_ideal;
        let lat = lattice(m)?;
        for i in ring_ideals(m.ring())?
            .into_iter()
            .filter(|i| !i.is_subset(jr))
        {
            for n in &lat {
                t.case(
                    qj(m, &ideal_times(m, &i, n))?,
                    || with_ideal(m, &[("N", n)], &i),
                    || Ok(flag(!qj(m, n)?, || "N is not quasi J".into())),
                )?;
            }
        }
    }
    Ok(())
}

pub(crate) fn lem2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let lat = lattice(m)?;
        let (ideals, fm) = faithful_multiplication_ideals(ring)?;
        for (i, &ok) in ideals.iter().zip(&fm) {
            if ok {
                require_unit(ring, i)?;
            }
            for n in &lat {
                t.case_with(
                    ok,
                    true,
                    || with_ideal(m, &[("N", n)], i),
                    || {
                        let inner = m_rad(m, &colon_submodule(m, n, i))?;
                        if m_rad(m, n)? != ideal_times(m, i, &inner) {
                            return Ok(Some("(IM)-rad(N) ≠ I(M-rad(N:_M I))".into()));
                        }
                        let back = colon_submodule(m, &ideal_times(m, i, n), i);
                        Ok(flag(&back != n, || "N ≠ (IN:_M I)".into()))
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn is_local(ring: &Ring) -> Result<bool> {
    let inv = ring.invariants()?;
    Ok(inv.jacobson == inv.units.complement())
}

pub(crate) fn colon_i(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let local = is_local(ring)?;
        let lat = lattice(m)?;
        let (ideals, fm) = faithful_multiplication_ideals(ring)?;
        for (i, &ok) in ideals.iter().zip(&fm) {
            if ok {
                require_unit(ring, i)?;
            }
            for n in proper(&lat) {
                let colon = colon_submodule(m, &n, i);
                let forward = ok && qj(m, &n)?;
                t.case_with(
                    forward,
                    true,
                    || with_ideal(m, &[("N", &n)], i),
                    || Ok(flag(!qj(m, &colon)?, || "(N:_M I) is not quasi J".into())),
                )?;
                let backward = ok && local && qj(m, &colon)?;
                t.case_with(
                    backward,
                    true,
                    || with_ideal(m, &[("N", &n)], i),
                    || Ok(flag(!qj(m, &n)?, || "converse fails".into())),
                )?;
            }
        }
    }
    Ok(())
}

pub(crate) fn small(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        for n in proper(&lattice(m)?) {
            t.case(
                qj(m, &n)?,
                || at(m, &[("N", &n)]),
                || Ok(flag(!sub_holds(m, &n, K::Small)?, || "not small".into())),
            )?;
        }
    }
    Ok(())
}

pub(crate) fn j_n(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let jm = &module_invariants(m)?.jacobson;
        for n in proper(&lattice(m)?) {
            let threshold = residual_ideal(m, &j_over(m, &n)?);
            let rad = m_rad(m, &n)?;
            let rhs = n.is_subset(jm)
                && m.scalars().filter(|&r| !threshold.contains(r)).all(|r| {
                    m.elements()
                        .all(|x| !n.contains(m.act(r, x)) || rad.contains(x))
                });
            t.equiv(|| at(m, &[("N", &n)]), &[("(1)", qj(m, &n)?), ("(2)", rhs)])?;
        }
    }
    Ok(())
}

fn products_matrix(m: &Module, lat: &[ElemSet]) -> Vec<Vec<ElemSet>> {
    lat.iter()
        .map(|a| lat.iter().map(|b| mult_product(m, a, b)).collect())
        .collect()
}

pub(crate) fn klchar(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let jm = &module_invariants(m)?.jacobson;
        let lat = lattice(m)?;
        let prods = products_matrix(m, &lat);
        for n in proper(&lat) {
            let rad = m_rad(m, &n)?;
            let rhs = (0..lat.len()).all(|a| {
                (0..lat.len()).all(|b| {
                    !prods[a][b].is_subset(&n) || lat[a].is_subset(jm) || lat[b].is_subset(&rad)
                })
            });
            t.equiv(
                || at(m, &[("N", &n)]),
                &[("quasi J", qj(m, &n)?), ("KL form", rhs)],
            )?;
        }
    }
    Ok(())
}

pub(crate) fn klchar_m(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let jm = &module_invariants(m)?.jacobson;
        let lat = lattice(m)?;
        let prods = products_matrix(m, &lat);
        let cyclic: Vec<usize> = m
            .elements()
            .map(|x| {
                let cx = m.cyclic(x);
                lat.iter()
                    .position(|s| *s == cx)
                    .expect("cyclic submodule in lattice")
            })
            .collect();
        for n in proper(&lat) {
            let rad = m_rad(m, &n)?;
            let rhs = m.elements().all(|x| {
                m.elements().all(|y| {
                    !prods[cyclic[x]][cyclic[y]].is_subset(&n) || jm.contains(x) || rad.contains(y)
                })
            });
            t.equiv(
                || at(m, &[("N", &n)]),
                &[("quasi J", qj(m, &n)?), ("m₁m₂ form", rhs)],
            )?;
        }
    }
    Ok(())
}

pub(crate) fn colon_s(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let jac = ring.jacobson()?;
        let mut sets = Vec::new();
        for a in ring.elements() {
            sets.push(ElemSet::from_indices(ring.size(), [a]));
            for b in a + 1..ring.size() {
                sets.push(ElemSet::from_indices(ring.size(), [a, b]));
            }
        }
        sets.retain(|s| !jac.contains_all(s));
        let lat = proper(&lattice(m)?);
        let total = sets.len() * lat.len();
        for idx in sample(total, TUPLE_CAP) {
            let (s, n) = (&sets[idx / lat.len()], &lat[idx % lat.len()]);
            t.case(
                qj(m, n)?,
                || {
                    let names: Vec<&str> = s.iter().map(|r| ring.name(r)).collect();
                    format!("{}, S={{{}}}", at(m, &[("N", n)]), names.join(","))
                },
                || {
                    Ok(flag(!qj(m, &colon_by_set(m, n, s)?)?, || {
                        "(N:_M S) is not quasi J".into()
                    }))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn cor_j(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let jm = &module_invariants(m)?.jacobson;
        let sides = [
            ("J", sub_holds(m, jm, K::J)?),
            ("quasi J", qj(m, jm)?),
            ("prime", sub_holds(m, jm, K::Prime)?),
        ];
        t.equiv(|| at(m, &[("J(M)", jm)]), &sides)?;
    }
    Ok(())
}

pub(crate) fn qpconv(c: &Corpus, t: &mut Tally) -> Result<()> {
    for m in fgfm(c) {
        let ring = m.ring();
        let lat = proper(&lattice(m)?);
        let pairs: Vec<(usize, usize)> = (0..lat.len())
            .flat_map(|i| (i + 1..lat.len()).map(move |j| (i, j)))
            .collect();
        for idx in sample(pairs.len(), TUPLE_CAP) {
            let (a, b) = (&lat[pairs[idx].0], &lat[pairs[idx].1]);
            let ra = radical_of_ideal(ring, &residual_ideal(m, a));
            let rb = radical_of_ideal(ring, &residual_ideal(m, b));
            let hyp = !ra.is_subset(&rb)
                && !rb.is_subset(&ra)
                && sub_holds(m, a, K::QuasiPrimary)?
                && sub_holds(m, b, K::QuasiPrimary)?
                && (qj(m, &a.intersection(b))? || qj(m, &mult_product(m, a, b))?);
            t.case(
                hyp,
                || at(m, &[("N₁", a), ("N₂", b)]),
                || {
                    Ok(flag(!(qj(m, a)? && qj(m, b)?), || {
                        "a component is not quasi J".into()
                    }))
                },
            )?;
        }
    }
    Ok(())
}
