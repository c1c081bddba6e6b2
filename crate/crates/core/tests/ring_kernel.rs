use modrad::ring::*;
use modrad::{ElemSet, Error};

fn elems(s: &ElemSet) -> Vec<usize> {
    s.to_vec()
}

/// Units by search for an inverse.
fn units_oracle(r: &Ring) -> Vec<usize> {
    r.elements()
        .filter(|&x| r.elements().any(|y| r.mul(x, y) == r.one()))
        .collect()
}

/// `x ∈ J(R)` iff `1 - xy` is a unit for every `y`.
fn jacobson_oracle(r: &Ring) -> Vec<usize> {
    let units = units_oracle(r);
    r.elements()
        .filter(|&x| {
            r.elements()
                .all(|y| units.contains(&r.sub(r.one(), r.mul(x, y))))
        })
        .collect()
}

fn nil_oracle(r: &Ring) -> Vec<usize> {
    r.elements()
        .filter(|&x| r.pow(x, r.size()) == r.zero())
        .collect()
}

fn zero_divisor_oracle(r: &Ring) -> Vec<usize> {
    r.elements()
        .filter(|&x| {
            r.elements()
                .any(|y| y != r.zero() && r.mul(x, y) == r.zero())
        })
        .collect()
}

/// Ideals as subsets closed under addition and multiplication by `R`.
fn ideal_count_oracle(r: &Ring) -> usize {
    let n = r.size();
    (0u32..1 << n)
        .filter(|mask| {
            let has = |x: usize| mask >> x & 1 == 1;
            has(r.zero())
                && r.elements().filter(|&x| has(x)).all(|x| {
                    r.elements()
                        .all(|y| (!has(y) || has(r.add(x, y))) && has(r.mul(x, y)))
                })
        })
        .count()
}

#[test]
fn residue_rings() {
    let z4 = make_residue_ring(&[4]).unwrap();
    assert_eq!(z4.size(), 4);
    assert_eq!(z4.names(), ["0", "1", "2", "3"]);
    let p = make_residue_ring(&[4, 6]).unwrap();
    assert_eq!(p.size(), 24);
    assert_eq!(p.name(p.one()), "(1,1)");
    assert!(matches!(
        make_residue_ring(&[1]),
        Err(Error::InvalidModulus(1))
    ));
}

#[test]
fn table_rings() {
    let add = vec![0, 1, 1, 0];
    let mul = vec![0, 0, 0, 1];
    assert!(make_table_ring(2, add.clone(), mul, 0, 1).is_ok());
    let broken = vec![0, 0, 0, 0];
    assert!(matches!(
        make_table_ring(2, add, broken, 0, 1),
        Err(Error::AxiomViolation { .. })
    ));
}

#[test]
fn invariants_of_z12_and_z4() {
    let z12 = make_residue_ring(&[12]).unwrap();
    let inv = ring_invariants(&z12).unwrap();
    assert_eq!(elems(&inv.units), vec![1, 5, 7, 11]);
    assert_eq!(elems(&inv.jacobson), vec![0, 6]);
    assert_eq!(elems(&inv.nilradical), vec![0, 6]);
    assert_eq!(elems(&inv.zero_divisors), vec![0, 2, 3, 4, 6, 8, 9, 10]);
    let z4 = make_residue_ring(&[4]).unwrap();
    let inv = ring_invariants(&z4).unwrap();
    assert_eq!(elems(&inv.jacobson), vec![0, 2]);
    assert_eq!(inv.jacobson, inv.nilradical);
}

#[test]
fn invariants_match_oracles() {
    let mut rings: Vec<Vec<u64>> = (2..=36).map(|n| vec![n]).collect();
    for a in 2..=6 {
        for b in a..=6 {
            rings.push(vec![a, b]);
        }
    }
    for moduli in rings {
        let r = make_residue_ring(&moduli).unwrap();
        let inv = r.invariants().unwrap();
        assert_eq!(elems(&inv.units), units_oracle(&r), "{moduli:?}");
        assert_eq!(elems(&inv.jacobson), jacobson_oracle(&r), "{moduli:?}");
        assert_eq!(elems(&inv.nilradical), nil_oracle(&r), "{moduli:?}");
        assert_eq!(
            elems(&inv.zero_divisors),
            zero_divisor_oracle(&r),
            "{moduli:?}"
        );
        // Regular elements of a finite ring are exactly the units.
        assert_eq!(inv.regular, inv.units, "{moduli:?}");
    }
}

#[test]
fn fields() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        let r = make_residue_ring(&[p]).unwrap();
        let inv = r.invariants().unwrap();
        assert_eq!(elems(&inv.jacobson), vec![0]);
        assert_eq!(elems(&inv.zero_divisors), vec![0]);
        assert_eq!(elems(&inv.units), (1..p as usize).collect::<Vec<_>>());
        assert_eq!(all_ideals(&r).unwrap().len(), 2);
        let v = ideal_predicate(&r, &r.zero_ideal(), IdealKind::Prime).unwrap();
        assert!(v.holds);
    }
}

#[test]
fn generation_and_lattices() {
    let z12 = make_residue_ring(&[12]).unwrap();
    assert_eq!(
        elems(ideal_generated(&z12, &[4]).unwrap().elements()),
        vec![0, 4, 8]
    );
    assert_eq!(
        elems(ideal_generated(&z12, &[]).unwrap().elements()),
        vec![0]
    );
    assert!(ideal_generated(&z12, &[5]).unwrap().elements().is_full());
    let shown: Vec<String> = all_ideals(&z12)
        .unwrap()
        .iter()
        .map(|i| i.display(&z12))
        .collect();
    assert_eq!(shown, ["0", "⟨6⟩", "⟨4⟩", "⟨3⟩", "⟨2⟩", "⟨1⟩"]);
    // 0, ℤ₂×0, 0×ℤ₂ and R; the diagonal is a subgroup but not an ideal.
    let v4 = make_residue_ring(&[2, 2]).unwrap();
    assert_eq!(all_ideals(&v4).unwrap().len(), 4);
    for moduli in [vec![2, 2], vec![12], vec![2, 4], vec![8], vec![3, 3]] {
        let r = make_residue_ring(&moduli).unwrap();
        assert_eq!(
            all_ideals(&r).unwrap().len(),
            ideal_count_oracle(&r),
            "{moduli:?}"
        );
    }
    assert!(matches!(
        all_ideals(&Ring::integers(4).unwrap()),
        Err(Error::IntegerAdapter(_))
    ));
}

#[test]
fn radicals() {
    let z12 = make_residue_ring(&[12]).unwrap();
    let four = ideal_generated(&z12, &[4]).unwrap();
    assert_eq!(
        radical_of_ideal(&z12, &four),
        ideal_generated(&z12, &[2]).unwrap()
    );
    let z4 = make_residue_ring(&[4]).unwrap();
    assert_eq!(
        elems(radical_of_ideal(&z4, &z4.zero_ideal()).elements()),
        vec![0, 2]
    );
    assert!(radical_of_ideal(&z4, &z4.unit_ideal()).elements().is_full());
}

#[test]
fn quasi_j_ideals() {
    let z4 = make_residue_ring(&[4]).unwrap();
    assert!(
        ideal_predicate(&z4, &z4.zero_ideal(), IdealKind::QuasiJ)
            .unwrap()
            .holds
    );
    let z12 = make_residue_ring(&[12]).unwrap();
    let zero = z12.zero_ideal();
    let v = ideal_predicate(&z12, &zero, IdealKind::QuasiJ).unwrap();
    let w = v.witness.unwrap();
    assert_eq!((w.scalar("a"), w.scalar("b")), (Some(2), Some(3)));
    assert!(replay_ideal_witness(&z12, &zero, IdealKind::QuasiJ, &w).unwrap());
    let v = ideal_predicate(&z12, &z12.unit_ideal(), IdealKind::QuasiJ).unwrap();
    assert!(v.is_degenerate());
}

#[test]
fn ideal_zero_divisors() {
    let z12 = make_residue_ring(&[12]).unwrap();
    let four = ideal_generated(&z12, &[4]).unwrap();
    assert_eq!(
        elems(&ideal_zero_divisor_set(&z12, &four).unwrap()),
        vec![0, 2, 4, 6, 8, 10]
    );
    let z7 = make_residue_ring(&[7]).unwrap();
    assert_eq!(
        elems(&ideal_zero_divisor_set(&z7, &z7.zero_ideal()).unwrap()),
        vec![0]
    );
    let z4 = make_residue_ring(&[4]).unwrap();
    let two = ideal_generated(&z4, &[2]).unwrap();
    assert_eq!(
        elems(&ideal_zero_divisor_set(&z4, &two).unwrap()),
        vec![0, 2]
    );
}

#[test]
fn symbolic_integer_ideals() {
    assert!(integer_ideal_predicate(2, IdealKind::Prime).holds);
    assert!(!integer_ideal_predicate(2, IdealKind::QuasiJ).holds);
    assert!(integer_ideal_predicate(0, IdealKind::QuasiJ).holds);
    assert!(!integer_ideal_predicate(6, IdealKind::Prime).holds);
    assert!(integer_ideal_predicate(4, IdealKind::Primary).holds);
    let z = Ring::integers(4).unwrap();
    let four = Ideal::integer(4, 4);
    assert!(four.contains(0) && !four.contains(2));
    assert_eq!(four.display(&z), "4ℤ");
}
