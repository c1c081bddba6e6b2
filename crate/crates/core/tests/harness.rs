use std::sync::OnceLock;

use modrad::harness::*;

fn default_corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| build_corpus(&CorpusSpec::default_spec()).unwrap())
}

fn report(id: &str) -> CheckReport {
    check_claim(id, default_corpus()).unwrap()
}

#[test]
fn corpus_contents() {
    let c = default_corpus();
    assert!(c
        .modules
        .iter()
        .any(|e| e.family == Family::Integer && e.module.label() == "Z4"));
    let fgfm = build_corpus(&CorpusSpec::fgfm()).unwrap();
    assert!(fgfm
        .modules
        .iter()
        .any(|e| e.module.label() == "Z12" && e.is_fgfm()));
    assert!(fgfm.modules.iter().all(|e| e.family == Family::OverItself));
    let ns: Vec<usize> = c.idealizations.iter().map(|x| x.ring().size()).collect();
    for size in [4, 9, 16, 36, 64] {
        assert!(ns.contains(&size), "idealization of size {size}");
    }
    assert_eq!(CorpusSpec::NAMES.len(), 5);
    assert!(CorpusSpec::named("nope").is_none());
}

#[test]
fn invariant_factor_enumeration() {
    let lists = corpus::invariant_factor_lists(8);
    let expected: Vec<Vec<u64>> = vec![
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ];
    assert_eq!(lists, expected);
}

#[test]
fn thm1_2_passes_with_many_hits() {
    let r = report("thm1.2");
    assert_eq!(r.status, Status::Pass);
    assert!(r.nontrivial_hits() >= 100, "{r:?}");
}

#[test]
fn headline_claims_reach_minimum_hits() {
    let ids = [
        "thm1.1", "thm1.2", "thm1.3", "thm1.4", "thm3", "thm6", "tp", "max",
    ];
    for r in check_claims(&ids, default_corpus()).unwrap() {
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(r.nontrivial_hits() >= 50, "{} has {} hits", r.id, r.hits);
    }
}

#[test]
fn empty_corpus_is_vacuous() {
    let empty = build_corpus(&CorpusSpec::empty()).unwrap();
    let reports = run_all(&empty);
    assert_eq!(reports.len(), registry().len());
    for r in &reports {
        assert_eq!(r.status, Status::Vacuous, "{}", r.id);
        assert_eq!(r.hits, 0);
    }
    assert_eq!(check_claim("eq1", &empty).unwrap().status, Status::Vacuous);
}

#[test]
fn finite_rings_make_some_claims_vacuous() {
    for id in ["lem2", "IN", "colonI", "r.ideal"] {
        let r = report(id);
        assert_eq!(r.status, Status::Vacuous, "{id}");
        assert_eq!(r.nontrivial_hits(), 0);
        assert!(
            r.note.as_deref().unwrap().contains("finite ring"),
            "{id}: {:?}",
            r.note
        );
    }
    let r = report("pure");
    assert_eq!((r.status, r.hits), (Status::Vacuous, 0));
    assert_eq!(report("pure.nz").status, Status::Pass);
}

#[test]
fn full_run_has_no_failures_and_is_deterministic() {
    let a = run_all(default_corpus());
    assert!(!any_failed(&a), "{}", render_report_text(&a));
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let got: Vec<&str> = a.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, got);
    let fresh = build_corpus(&CorpusSpec::default_spec()).unwrap();
    let b = run_all(&fresh);
    assert_eq!(render_machine(&a), render_machine(&b));
    assert_eq!(render_report_text(&a), render_report_text(&b));
}

#[test]
fn registry_ids_are_unique_and_quoted() {
    let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
    assert!(registry()
        .iter()
        .all(|c| !c.anchor.is_empty() && !c.hypothesis.is_empty()));
    assert!(matches!(
        check_claim("nope", default_corpus()),
        Err(modrad::Error::UnknownClaim(_))
    ));
}

#[test]
fn machine_reports_follow_the_schema() {
    let reports = check_claims(&["chain", "lem2"], default_corpus()).unwrap();
    let text = render_machine(&reports);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    for (v, r) in lines.iter().zip(&reports) {
        for key in [
            "id",
            "anchor",
            "status",
            "instances",
            "hits",
            "trivial_hits",
            "violation_count",
            "violations",
            "note",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["id"], r.id.as_str());
        assert_eq!(v["status"], r.status.as_str());
    }
}

#[test]
fn searches_find_replayable_witnesses() {
    let c = default_corpus();
    for t in search_targets() {
        let r = search_counterexample(t.id, c).unwrap();
        match &r.found {
            Some(f) => assert!(f.replayed, "{}: {f:?}", t.id),
            None => assert!(t.absent.is_some(), "{} found nothing", t.id),
        }
    }
    let r = search_counterexample("quasiJ⇒J", c).unwrap();
    let f = r.found.unwrap();
    assert_eq!(f.instance, "M=Z4 over Z, N=0");
    assert_eq!(f.witness, "r=2, m=2\u{304}");
    let r = search_counterexample("product-of-quasiJ⇒quasiJ", c).unwrap();
    assert!(r.found.unwrap().replayed);
    assert!(search_counterexample("nope", c).is_err());
}
