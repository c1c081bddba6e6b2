use std::sync::{Arc, OnceLock};

use crate::constructions::{
    idealization, product_with_projections, quotient_module, Idealization, ModuleMap,
};
use crate::error::{Error, Result};
use crate::module::{
    all_submodules, is_faithful, is_multiplication, make_cyclic_module, make_integer_module, Module,
};
use crate::ring::{all_ideals, Ideal, Ring};

/// Generator parameters for a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub name: String,
    /// Rings `ℤₙ` for `2 ≤ n ≤ ring_max`.
    pub ring_max: u64,
    /// Rings `ℤₐ×ℤᵦ` for `2 ≤ a ≤ b ≤ pair_max`.
    pub pair_max: u64,
    /// ℤ-modules by invariant factors with carrier at most this.
    pub integer_carrier_max: u64,
    pub rings_over_themselves: bool,
    pub cyclic_quotients: bool,
    pub products: bool,
    /// Localizations use rings of at most this size.
    pub localization_ring_max: usize,
    /// Idealizations `ℤₙ(+)ℤₙ`.
    pub idealization_ns: Vec<u64>,
    /// Further idealizations `ℤₙ(+)ℤₙ/⟨d⟩`, as `(n, d)`.
    pub idealization_quotients: Vec<(u64, u64)>,
}

impl CorpusSpec {
    pub fn default_spec() -> Self {
        CorpusSpec {
            name: "default".into(),
            ring_max: 36,
            pair_max: 6,
            integer_carrier_max: 72,
            rings_over_themselves: true,
            cyclic_quotients: true,
            products: true,
            localization_ring_max: 24,
            idealization_ns: vec![2, 3, 4, 6, 8],
            idealization_quotients: vec![
                (4, 2),
                (8, 2),
                (8, 4),
                (9, 3),
                (16, 2),
                (16, 4),
                (16, 8),
                (12, 6),
                (6, 2),
                (6, 3),
            ],
        }
    }

    /// A reduced corpus for fast checks.
    pub fn quick() -> Self {
        CorpusSpec {
            name: "quick".into(),
            ring_max: 12,
            pair_max: 4,
            integer_carrier_max: 24,
            localization_ring_max: 12,
            idealization_ns: vec![2, 3, 4],
            idealization_quotients: vec![(4, 2), (8, 4)],
            ..Self::default_spec()
        }
    }

    /// Only rings over themselves, the finitely generated faithful
    /// multiplication modules of the default families.
    pub fn fgfm() -> Self {
        CorpusSpec {
            name: "fgfm".into(),
            integer_carrier_max: 0,
            cyclic_quotients: false,
            products: false,
            localization_ring_max: 0,
            idealization_ns: vec![],
            idealization_quotients: vec![],
            ..Self::default_spec()
        }
    }

    /// Only the idealization rings.
    pub fn idealization() -> Self {
        CorpusSpec {
            name: "idealization".into(),
            ring_max: 0,
            pair_max: 0,
            integer_carrier_max: 0,
            rings_over_themselves: false,
            cyclic_quotients: false,
            products: false,
            localization_ring_max: 0,
            ..Self::default_spec()
        }
    }

    pub fn empty() -> Self {
        CorpusSpec {
            name: "empty".into(),
            ring_max: 0,
            pair_max: 0,
            integer_carrier_max: 0,
            rings_over_themselves: false,
            cyclic_quotients: false,
            products: false,
            localization_ring_max: 0,
            idealization_ns: vec![],
            idealization_quotients: vec![],
        }
    }

    pub fn named(name: &str) -> Option<Self> {
        match name {
            "default" => Some(Self::default_spec()),
            "quick" => Some(Self::quick()),
            "fgfm" => Some(Self::fgfm()),
            "idealization" => Some(Self::idealization()),
            "empty" => Some(Self::empty()),
            _ => None,
        }
    }

    pub const NAMES: [&'static str; 5] = ["default", "quick", "fgfm", "idealization", "empty"];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Integer,
    OverItself,
    Quotient,
    Product,
}

pub struct ModuleEntry {
    pub module: Arc<Module>,
    pub family: Family,
    multiplication: OnceLock<bool>,
}

impl ModuleEntry {
    fn new(module: Arc<Module>, family: Family) -> Self {
        ModuleEntry {
            module,
            family,
            multiplication: OnceLock::new(),
        }
    }

    pub fn is_multiplication(&self) -> bool {
        *self.multiplication.get_or_init(|| {
            is_multiplication(&self.module)
                .map(|v| v.holds)
                .unwrap_or(false)
        })
    }

    /// Finitely generated faithful multiplication; every finite module is
    /// finitely generated.
    pub fn is_fgfm(&self) -> bool {
        is_faithful(&self.module) && self.is_multiplication()
    }
}

pub struct ProductEntry {
    pub product: Arc<Module>,
    pub parts: Vec<Arc<Module>>,
    pub projections: Vec<ModuleMap>,
}

pub struct Corpus {
    pub spec: CorpusSpec,
    pub rings: Vec<Arc<Ring>>,
    pub modules: Vec<ModuleEntry>,
    pub products: Vec<ProductEntry>,
    pub idealizations: Vec<Idealization>,
    quotient_maps: OnceLock<std::result::Result<Vec<ModuleMap>, Error>>,
}

/// Quotient maps are built only for modules with at most this many
/// submodules.
pub const QUOTIENT_LATTICE_MAX: usize = 32;

impl Corpus {
    /// Canonical projections `M → M/L` for every proper `L` of every module
    /// with a small lattice.
    pub fn quotient_maps(&self) -> Result<&[ModuleMap]> {
        self.quotient_maps
            .get_or_init(|| {
                let mut maps = Vec::new();
                for e in &self.modules {
                    let lattice = all_submodules(&e.module)?;
                    if e.module.is_zero_module() || lattice.len() > QUOTIENT_LATTICE_MAX {
                        continue;
                    }
                    for l in lattice.iter().filter(|l| !l.elements().is_full()) {
                        maps.push(quotient_module(&e.module, l.elements())?.1);
                    }
                }
                Ok(maps)
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }
}

/// Invariant-factor sequences `d₁ | d₂ | …`, each `dᵢ ≥ 2`, with product at
/// most `max`, in order of carrier size.
pub fn invariant_factor_lists(max: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        let last = prefix.last().copied().unwrap_or(1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while product * d <= max {
            if d % last == 0 {
                prefix.push(d);
                out.push(prefix.clone());
                extend(prefix, product * d, max, out);
                prefix.pop();
            }
            d += if prefix.is_empty() { 1 } else { last };
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out.sort_by_key(|f| (f.iter().product::<u64>(), f.len(), f.clone()));
    out
}

/// Ideals to quantify over: every ideal of a finite ring, and `nℤ` for
/// `n = 0` and each divisor `n` of the period for the integer adapter.
pub fn ring_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    match ring.period() {
        Some(e) => {
            let mut out = vec![Ideal::integer(0, e)];
            out.extend((1..=e).filter(|d| e % d == 0).map(|d| Ideal::integer(d, e)));
            Ok(out)
        }
        None => Ok(all_ideals(ring)?.as_ref().clone()),
    }
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    let mut rings = Vec::new();
    for n in 2..=spec.ring_max {
        rings.push(Ring::residue(&[n])?);
    }
    for a in 2..=spec.pair_max {
        for b in a..=spec.pair_max {
            rings.push(Ring::residue(&[a, b])?);
        }
    }
    let mut modules = Vec::new();
    if spec.integer_carrier_max >= 2 {
        for factors in invariant_factor_lists(spec.integer_carrier_max) {
            modules.push(ModuleEntry::new(
                make_integer_module(&factors)?,
                Family::Integer,
            ));
        }
    }
    if spec.rings_over_themselves {
        for r in &rings {
            modules.push(ModuleEntry::new(
                make_cyclic_module(r, &r.zero_ideal())?,
                Family::OverItself,
            ));
        }
    }
    if spec.cyclic_quotients {
        for r in &rings {
            for i in all_ideals(r)?
                .iter()
                .filter(|i| !i.is_zero() && i.is_proper())
            {
                modules.push(ModuleEntry::new(
                    make_cyclic_module(r, i)?,
                    Family::Quotient,
                ));
            }
        }
    }
    let mut products = Vec::new();
    if spec.products {
        let mut groups: Vec<Vec<Arc<Module>>> = Vec::new();
        let cyclic_max = spec.integer_carrier_max.min(12);
        for a in 2..=cyclic_max {
            for b in a..=cyclic_max {
                if a * b <= spec.integer_carrier_max {
                    groups.push(vec![make_integer_module(&[a])?, make_integer_module(&[b])?]);
                }
            }
        }
        if spec.integer_carrier_max >= 24 {
            groups.push(vec![
                make_integer_module(&[2])?,
                make_integer_module(&[3])?,
                make_integer_module(&[4])?,
            ]);
        }
        for n in 2..=spec.ring_max.min(8) {
            let r = Ring::residue(&[n])?;
            let cyclics: Vec<Arc<Module>> = all_ideals(&r)?
                .iter()
                .filter(|i| i.is_proper())
                .map(|i| make_cyclic_module(&r, i))
                .collect::<Result<_>>()?;
            for i in 0..cyclics.len() {
                for j in i..cyclics.len() {
                    if cyclics[i].size() * cyclics[j].size() <= 64 {
                        groups.push(vec![cyclics[i].clone(), cyclics[j].clone()]);
                    }
                }
            }
        }
        for parts in groups {
            let (product, projections) = product_with_projections(&parts)?;
            modules.push(ModuleEntry::new(product.clone(), Family::Product));
            products.push(ProductEntry {
                product,
                parts,
                projections,
            });
        }
    }
    let mut idealizations = Vec::new();
    for &n in &spec.idealization_ns {
        let r = Ring::residue(&[n])?;
        idealizations.push(idealization(&make_cyclic_module(&r, &r.zero_ideal())?)?);
    }
    for &(n, d) in &spec.idealization_quotients {
        let r = Ring::residue(&[n])?;
        let i = crate::ring::ideal_generated(&r, &[d as usize])?;
        idealizations.push(idealization(&make_cyclic_module(&r, &i)?)?);
    }
    Ok(Corpus {
        spec: spec.clone(),
        rings,
        modules,
        products,
        idealizations,
        quotient_maps: OnceLock::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_up_to_eight() {
        let lists = invariant_factor_lists(8);
        assert_eq!(
            lists,
            vec![
                vec![2],
                vec![3],
                vec![4],
                vec![2, 2],
                vec![5],
                vec![6],
                vec![7],
                vec![8],
                vec![2, 4],
                vec![2, 2, 2]
            ]
        );
    }
}
