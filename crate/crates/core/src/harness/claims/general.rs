use std::collections::HashSet;

use crate::constructions::{
    localize_module, localize_ring, quotient_module, submodule_zero_divisor_set, LocalizedModule,
    MapKind, ModuleMap, MultiplicativeSet,
};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::module::{
    ideal_times, m_rad, module_invariants, presimplifiable, quasi_j_maximal_set, residual_ideal,
    submodule_product, Module, PresimpKind, SubmoduleKind as K,
};
use crate::ring::{all_ideals, ideal_zero_divisor_set, IdealKind};

use super::super::corpus::{ring_ideals, Corpus, ProductEntry};
use super::super::{sample, Tally, TUPLE_CAP};
use super::{at, flag, ideal_holds, lattice, proper, qj, quasi_j_list, sub_holds};

/// Localizations use modules of at most this many elements.
const LOCALIZATION_MODULE_MAX: usize = 36;

pub(crate) fn chain(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        for n in proper(&lattice(m)?) {
            t.case(
                sub_holds(m, &n, K::J)?,
                || at(m, &[("N", &n)]),
                || Ok(flag(!qj(m, &n)?, || "J but not quasi J".into())),
            )?;
        }
    }
    Ok(())
}

pub(crate) fn eq1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() {
            continue;
        }
        let lat = lattice(m)?;
        let props = proper(&lat);
        let jr = &module_invariants(m)?.jr_ideal;
        let outside: Vec<usize> = m.scalars().filter(|&r| !jr.contains(r)).collect();
        let ideals: Vec<_> = ring_ideals(m.ring())?
            .into_iter()
            .filter(|a| !a.is_subset(jr))
            .collect();
        for i in sample(props.len(), (TUPLE_CAP / lat.len()).max(1)) {
            let n = &props[i];
            let rad = m_rad(m, n)?;
            let form1 = qj(m, n)?;
            let form2 = outside.iter().all(|&r| {
                lat.iter()
                    .all(|k| !m.scale(r, k).is_subset(n) || k.is_subset(&rad))
            });
            let form3 = ideals.iter().all(|a| {
                lat.iter()
                    .all(|k| !ideal_times(m, a, k).is_subset(n) || k.is_subset(&rad))
            });
            t.equiv(
                || at(m, &[("N", n)]),
                &[("(1)", form1), ("(2)", form2), ("(3)", form3)],
            )?;
        }
    }
    Ok(())
}

fn all_maps(c: &Corpus) -> Result<Vec<&ModuleMap>> {
    let mut maps: Vec<&ModuleMap> = c.quotient_maps()?.iter().collect();
    maps.extend(c.products.iter().flat_map(|p| p.projections.iter()));
    Ok(maps)
}

fn show_map(f: &ModuleMap) -> String {
    format!("φ: {} → {}", f.source().label(), f.target().label())
}

fn image_claim(t: &mut Tally, f: &ModuleMap) -> Result<()> {
    let (m1, m2) = (f.source(), f.target());
    let ker = f.kernel();
    for n in proper(&lattice(m1)?) {
        let hyp = ker.is_subset(&n) && qj(m1, &n)?;
        t.case(
            hyp,
            || format!("{}, N={}", show_map(f), m1.display_set(&n)),
            || {
                let img = f.image(&n);
                Ok(flag(!qj(m2, &img)?, || {
                    format!("φ(N)={} is not quasi J", m2.display_set(&img))
                }))
            },
        )?;
    }
    Ok(())
}

pub(crate) fn hom_img(c: &Corpus, t: &mut Tally) -> Result<()> {
    for f in all_maps(c)? {
        image_claim(t, f)?;
    }
    Ok(())
}

pub(crate) fn hom_quot(c: &Corpus, t: &mut Tally) -> Result<()> {
    for f in c
        .quotient_maps()?
        .iter()
        .filter(|f| f.kind() == MapKind::Quotient)
    {
        image_claim(t, f)?;
    }
    Ok(())
}

pub(crate) fn hom_pre(c: &Corpus, t: &mut Tally) -> Result<()> {
    for f in all_maps(c)? {
        let (m1, m2) = (f.source(), f.target());
        let ker_ok = f.kernel().is_subset(&module_invariants(m1)?.jr_submodule);
        for k in proper(&lattice(m2)?) {
            let hyp = ker_ok && qj(m2, &k)?;
            t.case(
                hyp,
                || format!("{}, K={}", show_map(f), m2.display_set(&k)),
                || {
                    let pre = f.preimage(&k);
                    Ok(flag(!qj(m1, &pre)?, || {
                        format!("φ⁻¹(K)={} is not quasi J", m1.display_set(&pre))
                    }))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn lem4_img(c: &Corpus, t: &mut Tally) -> Result<()> {
    for f in all_maps(c)? {
        let (m1, m2) = (f.source(), f.target());
        let ker = f.kernel();
        for n in lattice(m1)? {
            t.case(
                ker.is_subset(&n),
                || format!("{}, N={}", show_map(f), m1.display_set(&n)),
                || {
                    let lhs = f.image(&m_rad(m1, &n)?);
                    let rhs = m_rad(m2, &f.image(&n))?;
                    Ok(flag(lhs != rhs, || {
                        format!("{} ≠ {}", m2.display_set(&lhs), m2.display_set(&rhs))
                    }))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn lem4_pre(c: &Corpus, t: &mut Tally) -> Result<()> {
    for f in all_maps(c)? {
        let (m1, m2) = (f.source(), f.target());
        for k in lattice(m2)? {
            t.case(
                true,
                || format!("{}, K={}", show_map(f), m2.display_set(&k)),
                || {
                    let lhs = f.preimage(&m_rad(m2, &k)?);
                    let rhs = m_rad(m1, &f.preimage(&k))?;
                    Ok(flag(lhs != rhs, || {
                        format!("{} ≠ {}", m1.display_set(&lhs), m1.display_set(&rhs))
                    }))
                },
            )?;
        }
    }
    Ok(())
}

fn product_set(p: &ProductEntry, comps: &[&ElemSet]) -> ElemSet {
    ElemSet::from_indices(
        p.product.size(),
        p.product.elements().filter(|&x| {
            p.projections
                .iter()
                .zip(comps)
                .all(|(f, n)| n.contains(f.apply(x)))
        }),
    )
}

fn show_parts(p: &ProductEntry, comps: &[&ElemSet]) -> String {
    let parts: Vec<String> = p
        .parts
        .iter()
        .zip(comps)
        .map(|(m, n)| m.display_set(n))
        .collect();
    format!("M={}, N={}", p.product.label(), parts.join("×"))
}

pub(crate) fn prod_1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for p in &c.products {
        let lats: Vec<Vec<ElemSet>> = p.parts.iter().map(|m| lattice(m)).collect::<Result<_>>()?;
        let total: usize = lats.iter().map(Vec::len).product();
        for idx in sample(total, TUPLE_CAP) {
            let mut rest = idx;
            let mut comps: Vec<&ElemSet> = Vec::with_capacity(lats.len());
            for lat in lats.iter().rev() {
                comps.push(&lat[rest % lat.len()]);
                rest /= lat.len();
            }
            comps.reverse();
            let n = product_set(p, &comps);
            let hyp = !n.is_full() && qj(&p.product, &n)?;
            t.case(
                hyp,
                || show_parts(p, &comps),
                || {
                    for (i, ni) in comps.iter().enumerate() {
                        if !ni.is_full() && !qj(&p.parts[i], ni)? {
                            return Ok(Some(format!("component {} is not quasi J", i + 1)));
                        }
                    }
                    Ok(None)
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn prod_2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for p in &c.products {
        let fulls: Vec<ElemSet> = p.parts.iter().map(|m| m.full()).collect();
        let colons = p
            .parts
            .iter()
            .map(|m| Ok(module_invariants(m)?.jr_ideal.clone()))
            .collect::<Result<Vec<_>>>()?;
        for (j, mj) in p.parts.iter().enumerate() {
            // The step from r ∉ (J(R)M:M) to r ∉ (J(R)M_j:M_j) needs this.
            let dominated = colons.iter().all(|c| colons[j].is_subset(c));
            for nj in proper(&lattice(mj)?) {
                let mut comps: Vec<&ElemSet> = fulls.iter().collect();
                comps[j] = &nj;
                t.case(
                    dominated && qj(mj, &nj)?,
                    || show_parts(p, &comps),
                    || {
                        let n = product_set(p, &comps);
                        Ok(flag(!qj(&p.product, &n)?, || {
                            "product is not quasi J".into()
                        }))
                    },
                )?;
            }
        }
    }
    Ok(())
}

struct Local<'a> {
    module: &'a Module,
    s_set: MultiplicativeSet,
    local: LocalizedModule,
    /// `S⁻¹(J(R)) = J(S⁻¹R)` and `S⁻¹R ≠ 0`.
    standing: bool,
}

impl Local<'_> {
    fn describe(&self, n: &ElemSet) -> String {
        let ring = self.module.ring();
        let gens: Vec<&str> = self
            .s_set
            .generators()
            .iter()
            .map(|&g| ring.name(g))
            .collect();
        format!("{}, S=⟨{}⟩", at(self.module, &[("N", n)]), gens.join(","))
    }
}

fn localizations<'a>(c: &'a Corpus, mut body: impl FnMut(&Local<'a>) -> Result<()>) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        let ring = m.ring();
        if ring.is_integer_adapter()
            || ring.size() > c.spec.localization_ring_max
            || m.size() > LOCALIZATION_MODULE_MAX
            || m.is_zero_module()
        {
            continue;
        }
        let mut seen = HashSet::new();
        for s in ring.elements() {
            let s_set = MultiplicativeSet::generated(ring, &[s])?;
            if !seen.insert(s_set.elements().clone()) {
                continue;
            }
            let lring = localize_ring(ring, &s_set)?;
            let standing = match (&lring.ring, lring.extend(&ring.jacobson()?, &s_set)) {
                (Some(r), Some(ext)) => ext == r.jacobson()?,
                _ => false,
            };
            let local = localize_module(m, &lring, &s_set)?;
            body(&Local {
                module: m,
                s_set,
                local,
                standing,
            })?;
        }
    }
    Ok(())
}

pub(crate) fn loc_1(c: &Corpus, t: &mut Tally) -> Result<()> {
    localizations(c, |l| {
        let m = l.module;
        for n in proper(&lattice(m)?) {
            let ext = l.local.extend(&n, &l.s_set);
            let hyp = l.standing && ext.as_ref().is_some_and(|x| !x.is_full()) && qj(m, &n)?;
            t.case(
                hyp,
                || l.describe(&n),
                || {
                    let (Some(lm), Some(ext)) = (&l.local.module, &ext) else {
                        return Ok(None);
                    };
                    Ok(flag(!qj(lm, ext)?, || "S⁻¹N is not quasi J".into()))
                },
            )?;
        }
        Ok(())
    })
}

pub(crate) fn loc_2(c: &Corpus, t: &mut Tally) -> Result<()> {
    localizations(c, |l| {
        let m = l.module;
        let ring = m.ring();
        let jr = &module_invariants(m)?.jr_ideal;
        let z_jr = if jr.is_proper() {
            ideal_zero_divisor_set(ring, jr)?
        } else {
            ElemSet::empty(ring.size())
        };
        let s_clear = l.s_set.elements().is_disjoint(&z_jr);
        for n in proper(&lattice(m)?) {
            let hyp = match (&l.local.module, l.local.extend(&n, &l.s_set)) {
                (Some(lm), Some(ext)) if l.standing && s_clear && !ext.is_full() => {
                    let z_rad = submodule_zero_divisor_set(m, &m_rad(m, &n)?);
                    l.s_set.elements().is_disjoint(&z_rad) && qj(lm, &ext)?
                }
                _ => false,
            };
            t.case(
                hyp,
                || l.describe(&n),
                || Ok(flag(!qj(m, &n)?, || "N is not quasi J".into())),
            )?;
        }
        Ok(())
    })
}

pub(crate) fn qp5(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        let jac = m.ring().jacobson()?;
        for n in proper(&lattice(m)?) {
            let hyp = residual_ideal(m, &n).is_subset(&jac) && sub_holds(m, &n, K::QuasiPrimary)?;
            t.case(
                hyp,
                || at(m, &[("N", &n)]),
                || Ok(flag(!qj(m, &n)?, || "not quasi J".into())),
            )?;
        }
    }
    Ok(())
}

pub(crate) fn qp5_cor(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        for n in proper(&lattice(m)?) {
            let hyp = sub_holds(m, &n, K::QuasiPrimary)?
                && ideal_holds(m.ring(), &residual_ideal(m, &n), IdealKind::QuasiJ)?;
            t.case(
                hyp,
                || at(m, &[("N", &n)]),
                || Ok(flag(!qj(m, &n)?, || "not quasi J".into())),
            )?;
        }
    }
    Ok(())
}

/// Whether `(J(R)M:M)`, or its nonzero part, consists of regular elements.
fn threshold_regular(m: &Module, nonzero_only: bool) -> Result<bool> {
    let ring = m.ring();
    if ring.is_integer_adapter() {
        // nℤ always contains 0; its nonzero elements are regular in ℤ.
        return Ok(nonzero_only);
    }
    let reg = ring.regular_representatives()?;
    Ok(module_invariants(m)?
        .jr_ideal
        .elements()
        .iter()
        .filter(|&r| !(nonzero_only && r == ring.zero()))
        .all(|r| reg.contains(r)))
}

fn pure_claim(c: &Corpus, t: &mut Tally, nonzero_only: bool) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        let regular = threshold_regular(m, nonzero_only)?;
        for n in proper(&lattice(m)?) {
            let hyp = regular && sub_holds(m, &n, K::Divisible)? && sub_holds(m, &n, K::J)?;
            t.case(
                hyp,
                || at(m, &[("N", &n)]),
                || Ok(flag(!sub_holds(m, &n, K::Pure)?, || "not pure".into())),
            )?;
        }
    }
    Ok(())
}

pub(crate) fn pure(c: &Corpus, t: &mut Tally) -> Result<()> {
    pure_claim(c, t, false)
}

pub(crate) fn pure_nz(c: &Corpus, t: &mut Tally) -> Result<()> {
    pure_claim(c, t, true)
}

fn avoid(c: &Corpus, t: &mut Tally, kind: K) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        let ring = m.ring();
        let jac = ring.jacobson()?;
        if m.is_zero_module()
            || module_invariants(m)?.jr_ideal != jac
            || !ideal_holds(ring, &jac, IdealKind::QuasiJ)?
        {
            continue;
        }
        let lat = lattice(m)?;
        let mut cands = Vec::new();
        for n in lat.iter().filter(|n| !n.is_full()) {
            if sub_holds(m, n, kind)? {
                cands.push(n);
            }
        }
        let others: Vec<&ElemSet> = lat
            .iter()
            .filter(|n| !residual_ideal(m, n).is_subset(&jac))
            .collect();
        let mut groups: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..others.len() {
            groups.push(vec![i]);
            for j in i + 1..others.len() {
                groups.push(vec![i, j]);
            }
        }
        let total = cands.len() * groups.len() * lat.len();
        let stride = total.div_ceil(TUPLE_CAP).max(1);
        let mut idx = 0usize;
        for nj in &cands {
            let target = match kind {
                K::J => (*nj).clone(),
                _ => m_rad(m, nj)?,
            };
            for g in &groups {
                let rest = g
                    .iter()
                    .fold(ElemSet::empty(m.size()), |acc, &i| acc.union(others[i]));
                let all = rest.union(nj);
                for n in &lat {
                    idx += 1;
                    if !(idx - 1).is_multiple_of(stride) {
                        continue;
                    }
                    let hyp = n.is_subset(&all) && !n.is_subset(&rest);
                    t.case(
                        hyp,
                        || {
                            let mut parts = vec![("N", n), ("N_j", *nj)];
                            parts.extend(g.iter().map(|&i| ("N_i", others[i])));
                            at(m, &parts)
                        },
                        || Ok(flag(!n.is_subset(&target), || "N escapes the bound".into())),
                    )?;
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn avoid_j(c: &Corpus, t: &mut Tally) -> Result<()> {
    avoid(c, t, K::J)
}

pub(crate) fn avoid_q(c: &Corpus, t: &mut Tally) -> Result<()> {
    avoid(c, t, K::QuasiJ)
}

fn nonzero_presimp(q: &Module, kind: PresimpKind) -> Result<bool> {
    Ok(!q.is_zero_module() && presimplifiable(q, kind)?.holds)
}

fn tp_claim(c: &Corpus, t: &mut Tally, corollary: bool) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() {
            continue;
        }
        let inv = module_invariants(m)?;
        let admitted = !corollary || inv.jr_ideal == m.ring().jacobson()?;
        for n in lattice(m)? {
            let hyp = admitted && n.is_subset(&inv.jr_submodule);
            t.case(
                hyp,
                || at(m, &[("N", &n)]),
                || {
                    let (q, _) = quotient_module(m, &n)?;
                    let lq = qj(m, &n)?;
                    let lj = sub_holds(m, &n, K::J)?;
                    let mut sides = vec![
                        ("quasi J", lq, nonzero_presimp(&q, PresimpKind::QuasiJ)?),
                        ("J", lj, nonzero_presimp(&q, PresimpKind::J)?),
                    ];
                    if corollary {
                        sides.push((
                            "quasi presimplifiable",
                            lq,
                            nonzero_presimp(&q, PresimpKind::Quasi)?,
                        ));
                        sides.push((
                            "presimplifiable",
                            lj,
                            nonzero_presimp(&q, PresimpKind::Plain)?,
                        ));
                    }
                    Ok(sides
                        .iter()
                        .find(|s| s.1 != s.2)
                        .map(|s| format!("{} variant: submodule {} vs quotient {}", s.0, s.1, s.2)))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn tp(c: &Corpus, t: &mut Tally) -> Result<()> {
    tp_claim(c, t, false)
}

pub(crate) fn tp_cor(c: &Corpus, t: &mut Tally) -> Result<()> {
    tp_claim(c, t, true)
}

fn j_and_quasi(m: &Module, n: &ElemSet) -> Result<Option<String>> {
    if !sub_holds(m, n, K::J)? {
        return Ok(Some("not J".into()));
    }
    Ok(flag(!qj(m, n)?, || "not quasi J".into()))
}

pub(crate) fn rt_1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() {
            continue;
        }
        let jpre = presimplifiable(m, PresimpKind::J)?.holds;
        for n in proper(&lattice(m)?) {
            let hyp = jpre && sub_holds(m, &n, K::R)?;
            t.case(hyp, || at(m, &[("N", &n)]), || j_and_quasi(m, &n))?;
        }
    }
    Ok(())
}

pub(crate) fn rt_2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        let inv = module_invariants(m)?;
        for n in proper(&lattice(m)?) {
            let hyp =
                inv.torsion == n && n.is_subset(&inv.jr_submodule) && sub_holds(m, &n, K::Sr)?;
            t.case(hyp, || at(m, &[("N", &n)]), || j_and_quasi(m, &n))?;
        }
    }
    Ok(())
}

pub(crate) fn r_ideal(c: &Corpus, t: &mut Tally) -> Result<()> {
    for r in &c.rings {
        let inv = r.invariants()?;
        let units_regular = inv.units == r.regular_representatives()?;
        for i in all_ideals(r)?.iter().filter(|i| i.is_proper()) {
            t.case_with(
                true,
                true,
                || format!("R={}, I={}", r.label(), i.display(r)),
                || {
                    if !units_regular {
                        return Ok(Some("regular elements differ from units".into()));
                    }
                    Ok(flag(!ideal_holds(r, i, IdealKind::R)?, || {
                        "not an r-ideal".into()
                    }))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn ikil_1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() {
            continue;
        }
        let jr = &module_invariants(m)?.jr_ideal;
        let ideals: Vec<_> = ring_ideals(m.ring())?
            .into_iter()
            .filter(|a| !a.is_subset(jr))
            .collect();
        let qjs = quasi_j_list(m, &lattice(m)?)?;
        let pairs: Vec<(usize, usize)> = (0..qjs.len())
            .flat_map(|i| (i + 1..qjs.len()).map(move |j| (i, j)))
            .collect();
        let total = ideals.len() * pairs.len();
        for idx in sample(total, TUPLE_CAP) {
            let ideal = &ideals[idx / pairs.len()];
            let (k, l) = (
                &qjs[pairs[idx % pairs.len()].0],
                &qjs[pairs[idx % pairs.len()].1],
            );
            let hyp = ideal_times(m, ideal, k) == ideal_times(m, ideal, l);
            t.case(
                hyp,
                || {
                    format!(
                        "{}, I={}",
                        at(m, &[("K", k), ("L", l)]),
                        ideal.display(m.ring())
                    )
                },
                || {
                    Ok(flag(m_rad(m, k)? != m_rad(m, l)?, || {
                        "radicals differ".into()
                    }))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn max(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() {
            continue;
        }
        let qjs = quasi_j_list(m, &lattice(m)?)?;
        let maxset = quasi_j_maximal_set(m)?;
        for n in &qjs {
            t.case(
                true,
                || at(m, &[("N", n)]),
                || {
                    Ok(flag(!maxset.iter().any(|k| n.is_subset(k)), || {
                        "below no maximal quasi J-submodule".into()
                    }))
                },
            )?;
        }
        if e.is_fgfm() {
            for k in &maxset {
                t.case(
                    true,
                    || at(m, &[("K", k)]),
                    || {
                        Ok(flag(!sub_holds(m, k, K::J)?, || {
                            "maximal quasi J but not J".into()
                        }))
                    },
                )?;
            }
        }
    }
    Ok(())
}

pub(crate) fn closure(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.modules {
        let m = &e.module;
        if m.is_zero_module() || !e.is_multiplication() {
            continue;
        }
        let qjs = quasi_j_list(m, &lattice(m)?)?;
        let pairs: Vec<(usize, usize)> = (0..qjs.len())
            .flat_map(|i| (i + 1..qjs.len()).map(move |j| (i, j)))
            .collect();
        for idx in sample(pairs.len(), TUPLE_CAP) {
            let (a, b) = (&qjs[pairs[idx].0], &qjs[pairs[idx].1]);
            t.case(
                true,
                || at(m, &[("N₁", a), ("N₂", b)]),
                || {
                    if !qj(m, &a.intersection(b))? {
                        return Ok(Some("intersection is not quasi J".into()));
                    }
                    Ok(flag(!qj(m, &submodule_product(m, a, b)?)?, || {
                        "product is not quasi J".into()
                    }))
                },
            )?;
        }
    }
    Ok(())
}
