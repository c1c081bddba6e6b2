use std::sync::Arc;

use crate::coords::Coords;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{product_module, Module};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Projection,
    Quotient,
    Localization,
}

/// A module homomorphism given by its table. `scalar_map` sends a scalar of
/// the source ring to the scalar of the target ring acting the same way
/// (the identity when both share one ring, `r ↦ r mod p` between ℤ
/// adapters of different periods, `r ↦ r/1` for localization).
#[derive(Debug, Clone)]
pub struct ModuleMap {
    source: Arc<Module>,
    target: Arc<Module>,
    table: Vec<usize>,
    scalar_map: Vec<usize>,
    kind: MapKind,
}

impl ModuleMap {
    pub(crate) fn new(
        source: Arc<Module>,
        target: Arc<Module>,
        table: Vec<usize>,
        scalar_map: Vec<usize>,
        kind: MapKind,
    ) -> Result<Self> {
        let map = ModuleMap {
            source,
            target,
            table,
            scalar_map,
            kind,
        };
        map.check()?;
        Ok(map)
    }

    /// Checks additivity and equivariance on every pair, and surjectivity
    /// for projections and quotients.
    fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b)) {
                    return Err(Error::NotHomomorphism(format!(
                        "additivity at m={a}, n={b}"
                    )));
                }
            }
            for r in s.scalars() {
                if self.apply(s.act(r, a)) != t.act(self.scalar_map[r], self.apply(a)) {
                    return Err(Error::NotHomomorphism(format!(
                        "equivariance at r={r}, m={a}"
                    )));
                }
            }
        }
        if self.kind != MapKind::Localization && !self.is_surjective() {
            return Err(Error::NotHomomorphism("not surjective".into()));
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn apply(&self, m: usize) -> usize {
        self.table[m]
    }

    pub fn scalar(&self, r: usize) -> usize {
        self.scalar_map[r]
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&self.source.full()).is_full()
    }

    /// `φ(N)`.
    pub fn image(&self, n: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.target.size(), n.iter().map(|m| self.table[m]))
    }

    /// `φ⁻¹(K)`.
    pub fn preimage(&self, k: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.source.size(),
            self.source
                .elements()
                .filter(|&m| k.contains(self.table[m])),
        )
    }

    pub fn kernel(&self) -> ElemSet {
        self.preimage(&self.target.zero_submodule())
    }
}

/// `M/N` with its canonical projection. Cosets are represented by their
/// least element.
pub fn quotient_module(module: &Arc<Module>, n: &ElemSet) -> Result<(Arc<Module>, ModuleMap)> {
    if !module.is_submodule(n) {
        return Err(Error::NotHomomorphism("quotient by a non-submodule".into()));
    }
    let mut coset_of = vec![usize::MAX; module.size()];
    let mut reps = Vec::new();
    for x in module.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for y in n.iter() {
            coset_of[module.add(x, y)] = idx;
        }
    }
    let size = reps.len();
    let mut add = Vec::with_capacity(size * size);
    for &a in &reps {
        for &b in &reps {
            add.push(coset_of[module.add(a, b)] as u32);
        }
    }
    let mut action = Vec::with_capacity(module.ring().size() * size);
    for r in module.scalars() {
        for &a in &reps {
            action.push(coset_of[module.act(r, a)] as u32);
        }
    }
    let trivial = n.count() == 1;
    let names = reps
        .iter()
        .map(|&x| {
            if trivial {
                module.name(x).to_string()
            } else {
                format!("{}+N", module.name(x))
            }
        })
        .collect();
    let coords: Coords = module.coords().then(|x| coset_of[x]);
    let label = format!("{}/{}", module.label(), module.display_set(n));
    let q = Module::assemble(
        module.ring().clone(),
        size,
        coset_of[module.zero()],
        add,
        action,
        names,
        coords,
        label,
    )?;
    let scalars = module.scalars().collect();
    let map = ModuleMap::new(
        module.clone(),
        q.clone(),
        coset_of,
        scalars,
        MapKind::Quotient,
    )?;
    Ok((q, map))
}

/// `M₁×…×M_k` over a common ring together with its coordinate projections.
pub fn product_with_projections(parts: &[Arc<Module>]) -> Result<(Arc<Module>, Vec<ModuleMap>)> {
    let product = product_module(parts)?;
    let sizes: Vec<usize> = parts.iter().map(|m| m.size()).collect();
    let mut maps = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let stride: usize = sizes[i + 1..].iter().product();
        let table = product.elements().map(|x| x / stride % sizes[i]).collect();
        let q = part.ring().size();
        let scalars = product.scalars().map(|r| r % q).collect();
        maps.push(ModuleMap::new(
            product.clone(),
            part.clone(),
            table,
            scalars,
            MapKind::Projection,
        )?);
    }
    Ok((product, maps))
}
