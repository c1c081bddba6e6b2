//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use modrad::constructions::idealization;
use modrad::harness::{self, build_corpus, CheckReport, Corpus, CorpusSpec, Status};
use modrad::module::*;
use modrad::ring::*;
use modrad::{ElemSet, Entry, Witness};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn over_itself(n: u64) -> Arc<Module> {
    let r = Ring::residue(&[n]).unwrap();
    make_cyclic_module(&r, &r.zero_ideal()).unwrap()
}

fn sub(m: &Module, gens: &[usize]) -> ElemSet {
    submodule_generated(m, gens).unwrap().into_elements()
}

fn holds(m: &Module, n: &ElemSet, kind: SubmoduleKind) -> bool {
    submodule_predicate(m, n, kind).unwrap().holds
}

fn replayed_false(m: &Module, n: &ElemSet, kind: SubmoduleKind) -> bool {
    let v = submodule_predicate(m, n, kind).unwrap();
    match &v.witness {
        Some(w) => !v.holds && replay_submodule_witness(m, n, kind, w).unwrap(),
        None => false,
    }
}

fn clean(r: &CheckReport, min_hits: u64) -> Result<(), String> {
    ensure(
        r.status == Status::Pass && r.violation_count == 0 && r.nontrivial_hits() >= min_hits,
        || {
            format!(
                "{} {} with {} hits, {} violations",
                r.id,
                r.status.as_str(),
                r.hits,
                r.violation_count
            )
        },
    )
}

fn e1_zero_submodule() -> Outcome {
    let m = make_integer_module(&[4]).unwrap();
    let zero = m.zero_submodule();
    ensure(m_rad(&m, &zero).unwrap() == sub(&m, &[2]), || {
        "m_rad(0) is not ⟨2̄⟩".into()
    })?;
    ensure(residual_ideal(&m, &zero).symbolic() == Some(4), || {
        "(0:M) is not 4ℤ".into()
    })?;
    ensure(holds(&m, &zero, SubmoduleKind::QuasiJ), || {
        "0 is not quasi J".into()
    })?;
    let j = submodule_predicate(&m, &zero, SubmoduleKind::J).unwrap();
    let w = j.witness.as_ref().ok_or("J(0) holds")?;
    ensure(
        w.scalar("r") == Some(2) && w.element("m") == Some(2),
        || format!("witness {w:?}"),
    )?;
    ensure(
        replay_submodule_witness(&m, &zero, SubmoduleKind::J, w).unwrap(),
        || "witness does not replay".into(),
    )?;
    Ok("m_rad(0)=⟨2̄⟩, (0:M)=4ℤ, quasi_J true, J false at (2, 2̄)".into())
}

fn comparison_examples() -> Outcome {
    ensure(integer_ideal_predicate(2, IdealKind::Prime).holds, || {
        "2ℤ not prime".into()
    })?;
    let v = integer_ideal_predicate(2, IdealKind::QuasiJ);
    ensure(!v.holds && v.witness.is_some(), || "2ℤ quasi J".into())?;
    let m = make_integer_module(&[6]).unwrap();
    let n = sub(&m, &[2]);
    ensure(holds(&m, &n, SubmoduleKind::R), || "⟨2̄⟩ not r".into())?;
    ensure(holds(&m, &n, SubmoduleKind::Sr), || "⟨2̄⟩ not sr".into())?;
    ensure(replayed_false(&m, &n, SubmoduleKind::QuasiJ), || {
        "no replayable quasi J witness".into()
    })?;
    Ok("2ℤ prime not quasi J; ⟨2̄⟩ ≤ ℤ₆ r, sr, not quasi J (witness replays)".into())
}

fn presimplifiable_table() -> Outcome {
    let p = |m: &Module, k| presimplifiable(m, k).unwrap().holds;
    for q in [2, 3, 5, 7] {
        let m = make_integer_module(&[q]).unwrap();
        ensure(p(&m, PresimpKind::J) && !p(&m, PresimpKind::Plain), || {
            format!("ℤ{q}")
        })?;
    }
    let m = make_integer_module(&[4]).unwrap();
    ensure(p(&m, PresimpKind::QuasiJ) && !p(&m, PresimpKind::J), || {
        "ℤ4 presimplifiable kinds".into()
    })?;
    let inv = module_invariants(&m).unwrap();
    ensure(
        &inv.zero_divisors == Ideal::integer(2, 4).elements(),
        || "Z(ℤ4) ≠ 2ℤ".into(),
    )?;
    ensure(&inv.nz == Ideal::integer(4, 4).elements(), || {
        "NZ(ℤ4) ≠ 4ℤ".into()
    })?;
    Ok("ℤp J-presimplifiable not presimplifiable; ℤ4 quasi-J not J; Z=2ℤ, NZ=4ℤ".into())
}

fn radical_formula() -> Outcome {
    let mut instances = 0usize;
    for n in 2..=36u64 {
        let m = over_itself(n);
        let ring = m.ring().clone();
        let full = m.full();
        for s in all_submodules(&m).unwrap().iter() {
            let s = s.elements();
            let colon = residual_ideal(&m, s);
            let formula = ideal_times(&m, &radical_of_ideal(&ring, &colon), &full);
            ensure(m_rad(&m, s).unwrap() == formula, || {
                format!("ℤ{n}: M-rad({})", m.display_set(s))
            })?;
            for i in all_ideals(&ring).unwrap().iter() {
                instances += 1;
                let im = ideal_times(&m, i, &full);
                ensure(&residual_ideal(&m, &im) == i, || {
                    format!("ℤ{n}: (IM:M) ≠ I")
                })?;
                let lhs = residual_ideal(&m, &ideal_times(&m, i, s));
                ensure(lhs == Ideal::product(&ring, i, &colon), || {
                    format!("ℤ{n}: (IN:M) ≠ I(N:M)")
                })?;
            }
        }
    }
    ensure(instances >= 500, || format!("only {instances} instances"))?;
    Ok(format!("{instances} (N, I) pairs, zero violations"))
}

fn every_witness_replays(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for e in &corpus.modules {
        let m = &e.module;
        for s in all_submodules(m).unwrap().iter() {
            for kind in SubmoduleKind::ALL {
                let v = submodule_predicate(m, s.elements(), kind).unwrap();
                if let Some(w) = &v.witness {
                    count += 1;
                    ensure(
                        replay_submodule_witness(m, s.elements(), kind, w).unwrap(),
                        || format!("{} {} {kind}", m.label(), m.display_set(s.elements())),
                    )?;
                }
            }
        }
    }
    Ok(count)
}

fn fgfm_equivalences(fgfm: &Corpus) -> Outcome {
    let ids = ["thm1.1", "thm1.2", "thm1.3", "thm1.4", "thm3", "prop7"];
    let reports = harness::check_claims(&ids, fgfm).unwrap();
    for r in &reports {
        clean(r, 50)?;
    }
    let replays = every_witness_replays(fgfm)?;
    let hits: Vec<String> = reports
        .iter()
        .map(|r| format!("{}={}", r.id, r.nontrivial_hits()))
        .collect();
    Ok(format!(
        "hits {}; {replays} witnesses replay",
        hits.join(" ")
    ))
}

fn idealizations() -> Outcome {
    let corpus = build_corpus(&CorpusSpec::idealization()).unwrap();
    for r in harness::check_claims(&["thm6", "ideal.J", "ideal.rad"], &corpus).unwrap() {
        clean(&r, 1)?;
    }
    let mut pairs = 0;
    for n in [2, 3, 4, 6, 8] {
        let x = idealization(&over_itself(n)).map_err(|e| e.to_string())?;
        ensure(x.ring().size() <= 64, || format!("ℤ{n}(+)ℤ{n} too large"))?;
        x.verify_jacobson_identity().map_err(|e| e.to_string())?;
        let base = x.base().clone();
        let m = x.module().clone();
        for i in all_ideals(&base).unwrap().iter() {
            let im = ideal_times(&m, i, &m.full());
            let q = ideal_predicate(&base, i, IdealKind::QuasiJ).unwrap().holds;
            for s in all_submodules(&m)
                .unwrap()
                .iter()
                .filter(|s| im.is_subset(s.elements()))
            {
                pairs += 1;
                x.verify_radical_identity(i, s.elements())
                    .map_err(|e| e.to_string())?;
                let p = x.pair_ideal(i, s.elements()).unwrap();
                let qp = ideal_predicate(x.ring(), &p, IdealKind::QuasiJ)
                    .unwrap()
                    .holds;
                ensure(qp == q, || {
                    format!(
                        "ℤ{n}: I={} N={}",
                        i.display(&base),
                        m.display_set(s.elements())
                    )
                })?;
            }
        }
    }
    Ok(format!("{pairs} legal pairs, both identities hold"))
}

fn transfer(default: &Corpus) -> Outcome {
    let reports = harness::check_claims(&["tp", "tp.cor"], default).unwrap();
    clean(&reports[0], 30)?;
    clean(&reports[1], 1)?;
    Ok(format!("tp hits {}", reports[0].nontrivial_hits()))
}

fn maximal(fgfm: &Corpus) -> Outcome {
    let reports = harness::check_claims(&["max", "corJ"], fgfm).unwrap();
    for r in &reports {
        clean(r, 1)?;
    }
    Ok(format!(
        "max hits {}, corJ hits {}",
        reports[0].hits, reports[1].hits
    ))
}

fn searches(default: &Corpus) -> Outcome {
    let mut lines = Vec::new();
    for target in ["product-of-quasiJ⇒quasiJ", "quasiJ⇒J"] {
        let r = harness::search_counterexample(target, default).map_err(|e| e.to_string())?;
        let f = r.found.ok_or_else(|| format!("{target}: nothing found"))?;
        ensure(f.replayed, || format!("{target}: witness does not replay"))?;
        lines.push(format!("{} | {}", f.instance, f.witness));
    }
    ensure(lines[1] == "M=Z4 over Z, N=0 | r=2, m=2\u{304}", || {
        lines[1].clone()
    })?;
    let m = make_integer_module(&[4, 9]).unwrap();
    let zero = m.zero_submodule();
    let parts = [
        make_integer_module(&[4]).unwrap(),
        make_integer_module(&[9]).unwrap(),
    ];
    ensure(
        parts
            .iter()
            .all(|p| holds(p, &p.zero_submodule(), SubmoduleKind::QuasiJ)),
        || "0 ≤ ℤ4, ℤ9".into(),
    )?;
    let e = m.element_from_coords(&[1, 0]).unwrap();
    let w = Witness::counterexample(vec![("r", Entry::Scalar(4)), ("m", Entry::Element(e))]);
    ensure(
        replay_submodule_witness(&m, &zero, SubmoduleKind::QuasiJ, &w).unwrap(),
        || "(4, (1̄,0̄)) does not replay".into(),
    )?;
    lines.push("ℤ4×ℤ9 witness (4, (1̄,0̄)) replays".into());
    Ok(lines.join("; "))
}

fn vacuity(default: &Corpus) -> Outcome {
    for r in harness::check_claims(&["lem2", "IN"], default).unwrap() {
        let trivial_only = r.status == Status::Vacuous || r.nontrivial_hits() == 0;
        ensure(trivial_only && r.status != Status::Pass, || {
            format!("{} {}", r.id, r.status.as_str())
        })?;
        let note = r.note.as_deref().unwrap_or("");
        ensure(note.contains("finite ring"), || {
            format!("{} lacks the finite-ring note", r.id)
        })?;
    }
    Ok("lem2 and IN VACUOUS with the finite-ring note".into())
}

fn full_run() -> Outcome {
    let corpus = build_corpus(&CorpusSpec::default_spec()).unwrap();
    let reports = harness::run_all(&corpus);
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.id.as_str())
        .collect();
    ensure(failed.is_empty(), || format!("FAIL: {}", failed.join(", ")))?;
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    Ok(format!(
        "{} claims, {pass} PASS, {} VACUOUS, 0 FAIL (prod.2 under its colon condition)",
        reports.len(),
        reports.len() - pass
    ))
}

fn main() -> ExitCode {
    let default = build_corpus(&CorpusSpec::default_spec()).unwrap();
    let fgfm = build_corpus(&CorpusSpec::fgfm()).unwrap();
    let criteria: Vec<Criterion> = vec![
        (
            "zero submodule of the ℤ-module ℤ4",
            Duration::from_secs(1),
            Box::new(e1_zero_submodule),
        ),
        (
            "prime and r/sr comparisons",
            Duration::from_secs(1),
            Box::new(comparison_examples),
        ),
        (
            "presimplifiable table",
            Duration::from_secs(1),
            Box::new(presimplifiable_table),
        ),
        (
            "M-rad(N) = √(N:M)M over ℤn",
            Duration::from_secs(60),
            Box::new(radical_formula),
        ),
        (
            "equivalence suites on fgfm modules",
            Duration::from_secs(60),
            Box::new(|| fgfm_equivalences(&fgfm)),
        ),
        (
            "idealizations ℤn(+)ℤn",
            Duration::from_secs(120),
            Box::new(idealizations),
        ),
        (
            "quotients below J(R)M",
            Duration::from_secs(60),
            Box::new(|| transfer(&default)),
        ),
        (
            "maximal quasi J-submodules",
            Duration::from_secs(60),
            Box::new(|| maximal(&fgfm)),
        ),
        (
            "counterexample search",
            Duration::from_secs(60),
            Box::new(|| searches(&default)),
        ),
        (
            "vacuity honesty",
            Duration::from_secs(60),
            Box::new(|| vacuity(&default)),
        ),
        (
            "full default verify",
            Duration::from_secs(300),
            Box::new(full_run),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|d| {
            ensure(elapsed <= *limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })?;
            Ok(d)
        });
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {status} [{elapsed:.2?}] {name}: {detail}",
            i + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
