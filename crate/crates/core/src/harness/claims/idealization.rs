use crate::constructions::Idealization;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::module::{ideal_times, is_faithful, is_multiplication};
use crate::ring::{all_ideals, Ideal, IdealKind};

use super::super::corpus::Corpus;
use super::super::Tally;
use super::{ideal_holds, lattice, qj};

fn show(x: &Idealization, i: &Ideal, n: &ElemSet) -> String {
    format!(
        "R(+)M={}, I={}, N={}",
        x.ring().label(),
        i.display(x.base()),
        x.module().display_set(n)
    )
}

/// Every `(I, N)` with `IM ⊆ N`.
fn legal_pairs(x: &Idealization) -> Result<Vec<(Ideal, ElemSet)>> {
    let m = x.module();
    let full = m.full();
    let lat = lattice(m)?;
    let mut out = Vec::new();
    for i in all_ideals(x.base())?.iter() {
        let im = ideal_times(m, i, &full);
        for n in lat.iter().filter(|n| im.is_subset(n)) {
            out.push((i.clone(), n.clone()));
        }
    }
    Ok(out)
}

pub(crate) fn thm6(c: &Corpus, t: &mut Tally) -> Result<()> {
    for x in &c.idealizations {
        for (i, n) in legal_pairs(x)? {
            let pair = x.pair_ideal(&i, &n)?;
            let sides = [
                ("I(+)N", ideal_holds(x.ring(), &pair, IdealKind::QuasiJ)?),
                ("I", ideal_holds(x.base(), &i, IdealKind::QuasiJ)?),
            ];
            t.equiv(|| show(x, &i, &n), &sides)?;
        }
    }
    Ok(())
}

pub(crate) fn thm6_cor(c: &Corpus, t: &mut Tally) -> Result<()> {
    for x in &c.idealizations {
        let m = x.module();
        let fgfm = is_faithful(m) && is_multiplication(m)?.holds;
        for (i, n) in legal_pairs(x)? {
            let hyp = fgfm && qj(m, &ideal_times(m, &i, &m.full()))?;
            t.case(
                hyp,
                || show(x, &i, &n),
                || {
                    let pair = x.pair_ideal(&i, &n)?;
                    let ok = ideal_holds(x.ring(), &pair, IdealKind::QuasiJ)?;
                    Ok((!ok).then(|| "I(+)N is not quasi J".to_string()))
                },
            )?;
        }
    }
    Ok(())
}

pub(crate) fn ideal_j(c: &Corpus, t: &mut Tally) -> Result<()> {
    for x in &c.idealizations {
        t.case(
            true,
            || format!("R(+)M={}", x.ring().label()),
            || Ok(x.verify_jacobson_identity().err().map(|e| e.to_string())),
        )?;
    }
    Ok(())
}

pub(crate) fn ideal_rad(c: &Corpus, t: &mut Tally) -> Result<()> {
    for x in &c.idealizations {
        for (i, n) in legal_pairs(x)? {
            t.case(
                true,
                || show(x, &i, &n),
                || {
                    Ok(x.verify_radical_identity(&i, &n)
                        .err()
                        .map(|e| e.to_string()))
                },
            )?;
        }
    }
    Ok(())
}
