use modrad::module::*;
use modrad::ring::{ideal_generated, Ring};
use modrad::ElemSet;

fn set(m: &Module, xs: &[usize]) -> ElemSet {
    ElemSet::from_indices(m.size(), xs.iter().copied())
}

#[test]
fn integer_module_z4() {
    let m = make_integer_module(&[4]).unwrap();
    let zero = m.zero_submodule();
    assert_eq!(m_rad(&m, &zero).unwrap(), set(&m, &[0, 2]));
    assert_eq!(residual_ideal(&m, &zero).symbolic(), Some(4));
    assert!(
        submodule_predicate(&m, &zero, SubmoduleKind::QuasiJ)
            .unwrap()
            .holds
    );
    let v = submodule_predicate(&m, &zero, SubmoduleKind::J).unwrap();
    let w = v.witness.unwrap();
    assert_eq!((w.scalar("r"), w.element("m")), (Some(2), Some(2)));
    assert_eq!(m.name(2), "2\u{304}");
    let inv = module_invariants(&m).unwrap();
    assert_eq!(inv.zero_divisors.to_vec(), vec![0, 2]);
    assert_eq!(inv.nz.to_vec(), vec![0]);
    assert_eq!(inv.nil, set(&m, &[0, 2]));
    assert_eq!(inv.jr_ideal.symbolic(), Some(4));
    assert!(presimplifiable(&m, PresimpKind::QuasiJ).unwrap().holds);
    assert!(!presimplifiable(&m, PresimpKind::J).unwrap().holds);
    assert!(is_multiplication(&m).unwrap().holds);
    let half = set(&m, &[0, 2]);
    let s = ElemSet::from_indices(4, [2]);
    assert!(colon_by_set(&m, &half, &s).unwrap().is_full());
}

#[test]
fn integer_module_z6() {
    let m = make_integer_module(&[6]).unwrap();
    let subs: Vec<Vec<usize>> = all_submodules(&m)
        .unwrap()
        .iter()
        .map(|s| s.elements().to_vec())
        .collect();
    assert_eq!(
        subs,
        vec![vec![0], vec![0, 3], vec![0, 2, 4], (0..6).collect()]
    );
    let two = set(&m, &[0, 2, 4]);
    let v = submodule_predicate(&m, &two, SubmoduleKind::QuasiJ).unwrap();
    let w = v.witness.clone().unwrap();
    assert_eq!((w.scalar("r"), w.element("m")), (Some(2), Some(1)));
    assert!(replay_submodule_witness(&m, &two, SubmoduleKind::QuasiJ, &w).unwrap());
    assert!(
        submodule_predicate(&m, &two, SubmoduleKind::R)
            .unwrap()
            .holds
    );
    assert!(
        submodule_predicate(&m, &two, SubmoduleKind::Sr)
            .unwrap()
            .holds
    );
    let inv = module_invariants(&m).unwrap();
    assert_eq!(inv.nil, m.zero_submodule());
    assert_eq!(inv.jacobson, m.zero_submodule());
    println!("qJ max ℤ6: {:?}", quasi_j_maximal_set(&m).unwrap());
}

#[test]
fn z4_times_z9() {
    let m = make_integer_module(&[4, 9]).unwrap();
    let rad = m_rad(&m, &m.zero_submodule()).unwrap();
    let expect: Vec<usize> = m
        .elements()
        .filter(|&x| {
            let (a, b) = (x / 9, x % 9);
            a % 2 == 0 && b % 3 == 0
        })
        .collect();
    assert_eq!(rad.to_vec(), expect);
}

#[test]
fn ring_over_itself() {
    let r = Ring::residue(&[12]).unwrap();
    let m = make_cyclic_module(&r, &r.zero_ideal()).unwrap();
    assert!(is_multiplication(&m).unwrap().holds);
    assert!(is_faithful(&m));
    let g = |xs: &[usize]| submodule_generated(&m, xs).unwrap().into_elements();
    assert_eq!(submodule_product(&m, &g(&[2]), &g(&[3])).unwrap(), g(&[6]));
    assert_eq!(j_over(&m, &g(&[4])).unwrap(), g(&[2]));
    let six = ideal_generated(&r, &[6]).unwrap();
    assert_eq!(colon_submodule(&m, &m.zero_submodule(), &six), g(&[2]));
    println!("qJ max ℤ12: {:?}", quasi_j_maximal_set(&m).unwrap());
    let z4 = Ring::residue(&[4]).unwrap();
    let m4 = make_cyclic_module(&z4, &z4.zero_ideal()).unwrap();
    let two = submodule_generated(&m4, &[2]).unwrap().into_elements();
    assert_eq!(
        submodule_product(&m4, &two, &two).unwrap(),
        m4.zero_submodule()
    );
}

#[test]
fn non_multiplication() {
    let m = make_integer_module(&[2, 2]).unwrap();
    assert!(!is_multiplication(&m).unwrap().holds);
    for p in [2u64, 3, 5, 7] {
        let z = make_integer_module(&[p]).unwrap();
        assert!(presimplifiable(&z, PresimpKind::J).unwrap().holds);
        assert!(!presimplifiable(&z, PresimpKind::Plain).unwrap().holds);
        let r = Ring::residue(&[p]).unwrap();
        let f = make_cyclic_module(&r, &r.zero_ideal()).unwrap();
        assert!(presimplifiable(&f, PresimpKind::Plain).unwrap().holds);
        assert_eq!(quasi_j_maximal_set(&f).unwrap(), vec![f.zero_submodule()]);
    }
}
