mod general;
mod idealization;
mod multiplication;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{
    all_submodules, replay_submodule_witness, submodule_predicate, Module, SubmoduleKind,
};
use crate::ring::{ideal_predicate, replay_ideal_witness, Ideal, IdealKind, Ring};

use super::Claim;

/// Decides a submodule predicate and replays any counterexample witness.
pub(super) fn sub_holds(m: &Module, n: &ElemSet, kind: SubmoduleKind) -> Result<bool> {
    let v = submodule_predicate(m, n, kind)?;
    if let Some(w) = &v.witness {
        if !replay_submodule_witness(m, n, kind, w)? {
            return Err(Error::IdentityViolation {
                identity: "witness replay",
                detail: format!("{kind} on {} in {}", m.display_set(n), m.label()),
            });
        }
    }
    Ok(v.holds)
}

pub(super) fn qj(m: &Module, n: &ElemSet) -> Result<bool> {
    sub_holds(m, n, SubmoduleKind::QuasiJ)
}

pub(super) fn ideal_holds(ring: &Ring, ideal: &Ideal, kind: IdealKind) -> Result<bool> {
    let v = ideal_predicate(ring, ideal, kind)?;
    if let Some(w) = &v.witness {
        if !replay_ideal_witness(ring, ideal, kind, w)? {
            return Err(Error::IdentityViolation {
                identity: "witness replay",
                detail: format!("{kind} on {} in {}", ideal.display(ring), ring.label()),
            });
        }
    }
    Ok(v.holds)
}

pub(super) fn lattice(m: &Module) -> Result<Vec<ElemSet>> {
    Ok(all_submodules(m)?
        .iter()
        .map(|s| s.elements().clone())
        .collect())
}

pub(super) fn proper(lattice: &[ElemSet]) -> Vec<ElemSet> {
    lattice.iter().filter(|n| !n.is_full()).cloned().collect()
}

pub(super) fn quasi_j_list(m: &Module, lattice: &[ElemSet]) -> Result<Vec<ElemSet>> {
    let mut out = Vec::new();
    for n in lattice.iter().filter(|n| !n.is_full()) {
        if qj(m, n)? {
            out.push(n.clone());
        }
    }
    Ok(out)
}

/// `M=…, N=…` style instance description.
pub(super) fn at(m: &Module, subs: &[(&str, &ElemSet)]) -> String {
    let mut s = format!("M={}", m.label());
    for (name, set) in subs {
        s.push_str(&format!(", {name}={}", m.display_set(set)));
    }
    s
}

pub(super) fn flag(failed: bool, what: impl FnOnce() -> String) -> Option<String> {
    failed.then(what)
}

/// Every registered claim, in the order reports are produced.
pub fn registry() -> &'static [Claim] {
    REGISTRY
}

static REGISTRY: &[Claim] = &[
    Claim {
        id: "chain",
        anchor: "any J-submodule of M is a quasi J-submodule",
        hypothesis: "N a J-submodule",
        shape: "M, N",
        note: None,
        run: general::chain,
    },
    Claim {
        id: "eq1",
        anchor: "then K⊆M-rad(N)",
        hypothesis: "N proper; the three forms are compared on every instance",
        shape: "M, N, K, r, A",
        note: None,
        run: general::eq1,
    },
    Claim {
        id: "hom.img",
        anchor: "φ(N) is a quasi J-submodule",
        hypothesis: "φ a quotient or product projection, ker φ ⊆ N, N quasi J",
        shape: "φ, N",
        note: None,
        run: general::hom_img,
    },
    Claim {
        id: "hom.quot",
        anchor: "then N/L is a quasi J-submodule of M/L",
        hypothesis: "L ⊆ N, N quasi J",
        shape: "M, L, N",
        note: None,
        run: general::hom_quot,
    },
    Claim {
        id: "hom.pre",
        anchor: "then φ⁻¹(K) is a quasi J-submodule of M₁",
        hypothesis: "φ a quotient or product projection, ker φ ⊆ J(R)M₁, K quasi J",
        shape: "φ, K",
        note: None,
        run: general::hom_pre,
    },
    Claim {
        id: "lem4.img",
        anchor: "φ(M₁-rad(N))=M₂-rad(φ(N))",
        hypothesis: "ker φ ⊆ N",
        shape: "φ, N",
        note: None,
        run: general::lem4_img,
    },
    Claim {
        id: "lem4.pre",
        anchor: "φ⁻¹(M₂-rad(K))=M₁-rad(φ⁻¹(K))",
        hypothesis: "K any submodule of M₂",
        shape: "φ, K",
        note: None,
        run: general::lem4_pre,
    },
    Claim {
        id: "prod.1",
        anchor: "Nᵢ is a quasi J-submodule of Mᵢ",
        hypothesis: "N = N₁×…×N_k quasi J in M₁×…×M_k",
        shape: "M₁…M_k, N₁…N_k",
        note: None,
        run: general::prod_1,
    },
    Claim {
        id: "prod.2",
        anchor: "M₁×M₂×⋯×N_j×⋯×M_k is a quasi J-submodule of M",
        hypothesis: "N_j quasi J in M_j and (J(R)M_j:M_j) ⊆ (J(R)M_i:M_i) for every i",
        shape: "M₁…M_k, j, N_j",
        note: Some("without the colon condition the statement fails; see search target prod.2-unrestricted"),
        run: general::prod_2,
    },
    Claim {
        id: "loc.1",
        anchor: "S⁻¹N is a quasi J-submodule",
        hypothesis: "S⁻¹(J(R)) = J(S⁻¹R), S⁻¹R ≠ 0, N quasi J, S⁻¹N ≠ S⁻¹M",
        shape: "R, S, M, N",
        note: None,
        run: general::loc_1,
    },
    Claim {
        id: "loc.2",
        anchor: "S∩Z_(J(R)M:M)(R)=S∩Z_M-rad(N)(M)=∅, then N is a quasi J-submodule of M",
        hypothesis: "S⁻¹(J(R)) = J(S⁻¹R), S⁻¹N quasi J, both intersections empty",
        shape: "R, S, M, N",
        note: None,
        run: general::loc_2,
    },
    Claim {
        id: "qp5",
        anchor: "(N:M)⊆J(R), then N is a quasi",
        hypothesis: "N quasi primary, (N:M) ⊆ J(R)",
        shape: "M, N",
        note: None,
        run: general::qp5,
    },
    Claim {
        id: "qp5.cor",
        anchor: "(N:M) is a quasi J-ideal of R, then N",
        hypothesis: "N quasi primary, (N:M) a quasi J-ideal",
        shape: "M, N",
        note: None,
        run: general::qp5_cor,
    },
    Claim {
        id: "pure",
        anchor: "Then N is pure in M",
        hypothesis: "N divisible and J, (J(R)M:M) ⊆ Reg(R)",
        shape: "M, N",
        note: Some("0 lies in (J(R)M:M) and is never regular, so the literal hypothesis is never met; see pure.nz"),
        run: general::pure,
    },
    Claim {
        id: "pure.nz",
        anchor: "Then N is pure in M",
        hypothesis: "N divisible and J, (J(R)M:M)∖{0} ⊆ Reg(R)",
        shape: "M, N",
        note: Some("reads the regularity hypothesis on the nonzero elements of (J(R)M:M)"),
        run: general::pure_nz,
    },
    Claim {
        id: "avoid",
        anchor: "then N⊆N_j (resp. N⊆M-rad(N_j))",
        hypothesis: "J(R) = (J(R)M:M) as sets, J(R) a quasi J-ideal, N ⊆ ⋃Nᵢ, N_j J, (Nᵢ:M) ⊄ J(R) for i ≠ j, N ⊄ ⋃_{i≠j}Nᵢ, k ≤ 3",
        shape: "M, N, N₁…N_k",
        note: None,
        run: general::avoid_j,
    },
    Claim {
        id: "avoid.q",
        anchor: "then N⊆N_j (resp. N⊆M-rad(N_j))",
        hypothesis: "as avoid with N_j quasi J",
        shape: "M, N, N₁…N_k",
        note: None,
        run: general::avoid_q,
    },
    Claim {
        id: "tp",
        anchor: "M/N is a non-zero quasi J-presimplifiable",
        hypothesis: "N ⊆ J(R)M; both the quasi and the plain J variant",
        shape: "M, N",
        note: None,
        run: general::tp,
    },
    Claim {
        id: "tp.cor",
        anchor: "(J(R)M:M)=J(R)",
        hypothesis: "N ⊆ J(R)M, (J(R)M:M) = J(R)",
        shape: "M, N",
        note: None,
        run: general::tp_cor,
    },
    Claim {
        id: "rT.1",
        anchor: "If M is J-presimplifiable and N is an r-submodule",
        hypothesis: "M J-presimplifiable, N an r-submodule",
        shape: "M, N",
        note: None,
        run: general::rt_1,
    },
    Claim {
        id: "rT.2",
        anchor: "T(M)=N⊆J(R)M",
        hypothesis: "N an sr-submodule, T(M) = N ⊆ J(R)M",
        shape: "M, N",
        note: None,
        run: general::rt_2,
    },
    Claim {
        id: "r.ideal",
        anchor: "ann_M(a)=0_M",
        hypothesis: "I a proper ideal of a finite ring",
        shape: "R, I",
        note: Some("regular elements of a finite ring are units, so every proper ideal is an r-ideal and each hit is trivial"),
        run: general::r_ideal,
    },
    Claim {
        id: "ikil.1",
        anchor: "M-rad(K)=M-rad(L)",
        hypothesis: "I ⊄ (J(R)M:M), K and L quasi J, IK = IL",
        shape: "M, I, K, L",
        note: None,
        run: general::ikil_1,
    },
    Claim {
        id: "max",
        anchor: "a maximal quasi J-submodule of M is a J-submodule",
        hypothesis: "N quasi J (every module); K maximal quasi J (finitely generated faithful multiplication)",
        shape: "M, N, K",
        note: None,
        run: general::max,
    },
    Claim {
        id: "closure",
        anchor: "Then so are",
        hypothesis: "M multiplication, N₁ and N₂ quasi J",
        shape: "M, N₁, N₂",
        note: None,
        run: general::closure,
    },
    Claim {
        id: "lem9",
        anchor: "M-rad(N)=√(N:M)M",
        hypothesis: "M finitely generated faithful multiplication, N proper",
        shape: "M, N, I",
        note: None,
        run: multiplication::lem9,
    },
    Claim {
        id: "thm1.1",
        anchor: "(N:M) is a quasi J-ideal",
        hypothesis: "M finitely generated faithful multiplication; I quasi J ⇔ IM quasi J",
        shape: "M, I",
        note: None,
        run: multiplication::thm1_1,
    },
    Claim {
        id: "thm1.2",
        anchor: "(N:M) is a quasi J-ideal",
        hypothesis: "M finitely generated faithful multiplication; N quasi J ⇔ (N:M) quasi J",
        shape: "M, N",
        note: None,
        run: multiplication::thm1_2,
    },
    Claim {
        id: "thm1.3",
        anchor: "(N:M) is a quasi J-ideal",
        hypothesis: "M finitely generated faithful multiplication; N quasi J ⇔ N = IM, I quasi J",
        shape: "M, N",
        note: None,
        run: multiplication::thm1_3,
    },
    Claim {
        id: "thm1.4",
        anchor: "(N:M) is a quasi J-ideal",
        hypothesis: "M finitely generated faithful multiplication, I a quasi J-ideal, N quasi J",
        shape: "M, I, N",
        note: None,
        run: multiplication::thm1_4,
    },
    Claim {
        id: "IN",
        anchor: "either I is a J-ideal of R or N",
        hypothesis: "M faithful multiplication, I a finitely generated faithful multiplication ideal; part two also needs √I a multiplication ideal",
        shape: "M, I, N",
        note: Some("a faithful ideal of a finite ring contains a non-zero-divisor, hence a unit, so I = R is the only choice and every hit is trivial"),
        run: multiplication::in_claim,
    },
    Claim {
        id: "thm3",
        anchor: "(M-rad(N):_M⟨r⟩)=M-rad(N)",
        hypothesis: "M finitely generated faithful multiplication, N proper",
        shape: "M, N, r",
        note: None,
        run: multiplication::thm3,
    },
    Claim {
        id: "prop7",
        anchor: "√(N:M) is a J-ideal",
        hypothesis: "M finitely generated faithful multiplication",
        shape: "M, N",
        note: None,
        run: multiplication::prop7,
    },
    Claim {
        id: "ikil.2",
        anchor: "If IN is a quasi J-submodule of a finitely generated faithful multiplication module M, then N",
        hypothesis: "M finitely generated faithful multiplication, I ⊄ (J(R)M:M), IN quasi J",
        shape: "M, I, N",
        note: None,
        run: multiplication::ikil_2,
    },
    Claim {
        id: "lem2",
        anchor: "N=(IN:_M I)",
        hypothesis: "M faithful multiplication, I a faithful multiplication ideal",
        shape: "M, I, N",
        note: Some("a faithful ideal of a finite ring contains a non-zero-divisor, hence a unit, so I = R is the only choice and every hit is trivial"),
        run: multiplication::lem2,
    },
    Claim {
        id: "colonI",
        anchor: "(N:_M I) is a quasi J-submodule",
        hypothesis: "M faithful multiplication, I a faithful multiplication ideal, N quasi J in IM; the converse needs R quasi-local",
        shape: "M, I, N",
        note: Some("a faithful ideal of a finite ring contains a non-zero-divisor, hence a unit, so I = R is the only choice and every hit is trivial"),
        run: multiplication::colon_i,
    },
    Claim {
        id: "small",
        anchor: "is small",
        hypothesis: "M finitely generated faithful multiplication, N quasi J",
        shape: "M, N",
        note: None,
        run: multiplication::small,
    },
    Claim {
        id: "jN",
        anchor: "N⊆J(M) and if whenever",
        hypothesis: "M finitely generated faithful multiplication, N proper",
        shape: "M, N, r, m",
        note: Some("the standing hypothesis is read as N proper"),
        run: multiplication::j_n,
    },
    Claim {
        id: "klchar",
        anchor: "K⊆J(M) or L⊆M-rad(N)",
        hypothesis: "M finitely generated faithful multiplication, N proper",
        shape: "M, N, K, L",
        note: None,
        run: multiplication::klchar,
    },
    Claim {
        id: "klchar.m",
        anchor: "then m₁∈J(M) or m₂∈M-rad(N)",
        hypothesis: "M finitely generated faithful multiplication, N proper",
        shape: "M, N, m₁, m₂",
        note: None,
        run: multiplication::klchar_m,
    },
    Claim {
        id: "colonS",
        anchor: "(N:_M S) is a quasi J-submodule",
        hypothesis: "M finitely generated faithful multiplication, S ⊄ J(R) with |S| ≤ 2, N quasi J",
        shape: "M, S, N",
        note: None,
        run: multiplication::colon_s,
    },
    Claim {
        id: "corJ",
        anchor: "J(M) is a prime submodule",
        hypothesis: "M finitely generated faithful multiplication",
        shape: "M",
        note: None,
        run: multiplication::cor_j,
    },
    Claim {
        id: "qpconv",
        anchor: "√(Nᵢ:M) are not comparable",
        hypothesis: "M finitely generated faithful multiplication, N₁ and N₂ quasi primary with incomparable √(Nᵢ:M), N₁∩N₂ or N₁N₂ quasi J",
        shape: "M, N₁, N₂",
        note: Some("incomparability is read pairwise; incomparable radicals need two maximal ideals, and over a non-local finite ring no submodule is quasi J"),
        run: multiplication::qpconv,
    },
    Claim {
        id: "thm6",
        anchor: "if and only if I is a quasi J-ideal of R",
        hypothesis: "IM ⊆ N",
        shape: "R, M, I, N",
        note: None,
        run: idealization::thm6,
    },
    Claim {
        id: "thm6.cor",
        anchor: "I(+)N is a quasi J-ideal of R(+)M for any submodule N",
        hypothesis: "M finitely generated faithful multiplication, IM quasi J, IM ⊆ N",
        shape: "R, M, I, N",
        note: None,
        run: idealization::thm6_cor,
    },
    Claim {
        id: "ideal.J",
        anchor: "J(R(+)M)=J(R)(+)M",
        hypothesis: "every idealization",
        shape: "R, M",
        note: None,
        run: idealization::ideal_j,
    },
    Claim {
        id: "ideal.rad",
        anchor: "√(I(+)N)=√I(+)M",
        hypothesis: "IM ⊆ N",
        shape: "R, M, I, N",
        note: None,
        run: idealization::ideal_rad,
    },
];
