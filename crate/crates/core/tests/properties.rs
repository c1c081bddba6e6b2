use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::Index;

use modrad::cli::{parse, Elem, Expr, ExprKind};
use modrad::constructions::{localize_ring, quotient_module, MultiplicativeSet};
use modrad::module::*;
use modrad::ring::*;
use modrad::ElemSet;

fn elem() -> impl Strategy<Value = Elem> {
    prop_oneof![
        (-50i64..50).prop_map(Elem::Int),
        prop::collection::vec(-9i64..9, 1..4).prop_map(Elem::Tuple),
    ]
}

fn elems() -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec(elem(), 0..4)
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..100).prop_map(|n| Expr::new(ExprKind::Zn(n))),
        prop::collection::vec(0u64..40, 1..4).prop_map(|ds| Expr::new(ExprKind::Zmod(ds))),
    ];
    leaf.prop_recursive(3, 24, 3, |inner| {
        let boxed = inner.clone().prop_map(Box::new);
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4).prop_map(|ps| Expr::new(ExprKind::Prod(ps))),
            (boxed.clone(), elems()).prop_map(|(r, g)| Expr::new(ExprKind::Cyc(r, g))),
            (boxed.clone(), elems()).prop_map(|(r, g)| Expr::new(ExprKind::Ideal(r, g))),
            (boxed.clone(), elems()).prop_map(|(r, g)| Expr::new(ExprKind::Sub(r, g))),
            (boxed.clone(), boxed.clone())
                .prop_map(|(r, m)| Expr::new(ExprKind::Idealization(r, m))),
            (boxed, elems()).prop_map(|(r, g)| Expr::new(ExprKind::Loc(r, g))),
        ]
    })
}

/// A few small rings: residue rings ℤₙ and products of two.
fn ring() -> impl Strategy<Value = Arc<Ring>> {
    prop_oneof![
        (2u64..=30).prop_map(|n| Ring::residue(&[n]).unwrap()),
        (2u64..=6, 2u64..=6).prop_map(|(a, b)| Ring::residue(&[a, b]).unwrap()),
    ]
}

fn module() -> impl Strategy<Value = Arc<Module>> {
    prop_oneof![
        ring().prop_map(|r| make_cyclic_module(&r, &r.zero_ideal()).unwrap()),
        prop::collection::vec(2u64..=6, 1..3).prop_map(|ds| make_integer_module(&ds).unwrap()),
        (2u64..=24, 1usize..6).prop_map(|(n, g)| {
            let r = Ring::residue(&[n]).unwrap();
            let i = ideal_generated(&r, &[g % n as usize]).unwrap();
            make_cyclic_module(&r, &i).unwrap()
        }),
    ]
}

fn pick<T: Clone>(xs: &[T], i: Index) -> T {
    xs[i.index(xs.len())].clone()
}

fn submodule(m: &Module, i: Index) -> ElemSet {
    pick(&all_submodules(m).unwrap(), i).into_elements()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printer_and_parser_round_trip(e in expr()) {
        let printed = e.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), printed.clone());
        let spaced = printed.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn residue_tables_pass_the_axiom_check(r in ring(), i in any::<Index>(), j in any::<Index>()) {
        let n = r.size();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in r.elements() {
            for b in r.elements() {
                add.push(r.add(a, b) as u32);
                mul.push(r.mul(a, b) as u32);
            }
        }
        let t = make_table_ring(n, add.clone(), mul.clone(), r.zero(), r.one()).unwrap();
        let (x, y) = (r.invariants().unwrap(), t.invariants().unwrap());
        prop_assert_eq!(&x.units, &y.units);
        prop_assert_eq!(&x.jacobson, &y.jacobson);
        prop_assert_eq!(&x.nilradical, &y.nilradical);
        prop_assert_eq!(all_ideals(&r).unwrap().len(), all_ideals(&t).unwrap().len());

        let (a, b) = (i.index(n), j.index(n));
        prop_assume!(a != b);
        let mut broken = mul;
        broken[a * n + b] = ((broken[a * n + b] as usize + 1) % n) as u32;
        prop_assert!(make_table_ring(n, add, broken, r.zero(), r.one()).is_err());
    }

    #[test]
    fn radical_is_idempotent_and_monotone(r in ring(), i in any::<Index>(), k in any::<Index>()) {
        let ideals = all_ideals(&r).unwrap();
        let (a, b) = (pick(&ideals, i), pick(&ideals, k));
        let ra = radical_of_ideal(&r, &a);
        prop_assert_eq!(&radical_of_ideal(&r, &ra), &ra);
        prop_assert!(a.is_subset(&ra));
        if a.is_subset(&b) {
            prop_assert!(ra.is_subset(&radical_of_ideal(&r, &b)));
        }
    }

    #[test]
    fn ideal_hierarchy(r in ring(), i in any::<Index>()) {
        let ideal = pick(&all_ideals(&r).unwrap(), i);
        let j = ideal_predicate(&r, &ideal, IdealKind::J).unwrap();
        let qj = ideal_predicate(&r, &ideal, IdealKind::QuasiJ).unwrap();
        let rad = radical_of_ideal(&r, &ideal);
        prop_assert_eq!(qj.holds, ideal_predicate(&r, &rad, IdealKind::J).unwrap().holds);
        if j.holds {
            prop_assert!(qj.holds);
        }
        if qj.holds {
            prop_assert!(ideal.is_subset(&r.jacobson().unwrap()));
        }
        for kind in IdealKind::ALL {
            let v = ideal_predicate(&r, &ideal, kind).unwrap();
            prop_assert_eq!(v.holds, v.witness.is_none());
            if let Some(w) = &v.witness {
                prop_assert!(replay_ideal_witness(&r, &ideal, kind, w).unwrap(), "{kind} {w:?}");
            }
        }
    }

    #[test]
    fn submodule_witnesses_replay(m in module(), i in any::<Index>()) {
        let n = submodule(&m, i);
        for kind in SubmoduleKind::ALL {
            let v = submodule_predicate(&m, &n, kind).unwrap();
            prop_assert_eq!(v.holds, v.witness.is_none());
            if let Some(w) = &v.witness {
                prop_assert!(replay_submodule_witness(&m, &n, kind, w).unwrap(), "{kind} {w:?}");
            }
        }
    }

    #[test]
    fn quasi_j_matches_its_definition(m in module(), i in any::<Index>()) {
        let n = submodule(&m, i);
        let inv = module_invariants(&m).unwrap();
        let rad = m_rad(&m, &n).unwrap();
        let brute = !n.is_full()
            && m.scalars().all(|r| {
                inv.jr_ideal.contains(r)
                    || m.elements().all(|x| !n.contains(m.act(r, x)) || rad.contains(x))
            });
        let qj = submodule_predicate(&m, &n, SubmoduleKind::QuasiJ).unwrap();
        prop_assert_eq!(qj.holds, brute);
        if submodule_predicate(&m, &n, SubmoduleKind::J).unwrap().holds {
            prop_assert!(qj.holds);
        }
        prop_assert!(n.is_subset(&rad));
        prop_assert_eq!(&m_rad(&m, &rad).unwrap(), &rad);
    }

    #[test]
    fn radical_passes_to_quotients(m in module(), i in any::<Index>()) {
        let n = submodule(&m, i);
        prop_assume!(!n.is_full());
        let (q, proj) = quotient_module(&m, &n).unwrap();
        let nil = &module_invariants(&q).unwrap().nil;
        let rad = m_rad(&m, &n).unwrap();
        for x in m.elements() {
            prop_assert_eq!(rad.contains(x), nil.contains(proj.apply(x)));
        }
        prop_assert_eq!(proj.kernel(), n);
    }

    #[test]
    fn localization_is_a_ring_map(r in ring(), g in any::<Index>()) {
        let s = MultiplicativeSet::generated(&r, &[g.index(r.size())]).unwrap();
        let loc = localize_ring(&r, &s).unwrap();
        match &loc.ring {
            None => prop_assert!(s.contains(r.zero())),
            Some(l) => {
                prop_assert!(l.size() <= r.size());
                let f = &loc.canonical;
                prop_assert_eq!(f[r.one()], l.one());
                for a in r.elements() {
                    for b in r.elements() {
                        prop_assert_eq!(f[r.add(a, b)], l.add(f[a], f[b]));
                        prop_assert_eq!(f[r.mul(a, b)], l.mul(f[a], f[b]));
                    }
                }
                for x in s.elements().iter() {
                    prop_assert!(l.invariants().unwrap().units.contains(f[x]));
                }
            }
        }
    }
}
