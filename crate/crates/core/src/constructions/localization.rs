use std::sync::Arc;

use crate::coords::Coords;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::Module;
use crate::ring::{Ideal, Ring};

use super::maps::{MapKind, ModuleMap};

/// A multiplicatively closed subset: the closure of `{1} ∪ generators`
/// under multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeSet {
    generators: Vec<usize>,
    closure: ElemSet,
}

impl MultiplicativeSet {
    pub fn generated(ring: &Ring, generators: &[usize]) -> Result<Self> {
        if ring.is_integer_adapter() {
            return Err(Error::IntegerAdapter("multiplicative set"));
        }
        for &g in generators {
            ring.check_element(g)?;
        }
        let mut closure = ElemSet::from_indices(ring.size(), [ring.one()]);
        let mut frontier = vec![ring.one()];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = ring.mul(x, g);
                if closure.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(MultiplicativeSet {
            generators: generators.to_vec(),
            closure,
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &ElemSet {
        &self.closure
    }

    pub fn contains(&self, r: usize) -> bool {
        self.closure.contains(r)
    }
}

/// Fraction classes `x/s`, canonicalized by the least `(x, s)` in scan
/// order.
struct Fractions {
    reps: Vec<(usize, usize)>,
    class: Vec<usize>,
    width: usize,
}

impl Fractions {
    fn of(&self, x: usize, s: usize) -> usize {
        self.class[x * self.width + s]
    }
}

fn classify(
    carrier: usize,
    ring: &Ring,
    s_set: &MultiplicativeSet,
    same: impl Fn(usize, usize, usize, usize, usize) -> bool,
) -> Result<Fractions> {
    let width = ring.size();
    let denominators: Vec<usize> = s_set.elements().iter().collect();
    let mut class = vec![usize::MAX; carrier * width];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for x in 0..carrier {
        for &s in &denominators {
            let found = reps
                .iter()
                .position(|&(y, t)| denominators.iter().any(|&u| same(u, x, s, y, t)));
            let idx = match found {
                Some(i) => i,
                None => {
                    reps.push((x, s));
                    crate::limits::check_carrier("fraction classes", reps.len())?;
                    reps.len() - 1
                }
            };
            class[x * width + s] = idx;
        }
    }
    Ok(Fractions { reps, class, width })
}

/// `S⁻¹R` with the canonical map `r ↦ r/1`. When `0 ∈ S` the localization
/// is the zero ring and `ring` is `None`.
#[derive(Debug, Clone)]
pub struct LocalizedRing {
    pub ring: Option<Arc<Ring>>,
    /// `r ↦ r/1`.
    pub canonical: Vec<usize>,
    /// `class[x·|R| + s]` is the index of `x/s`.
    class: Vec<usize>,
    width: usize,
}

impl LocalizedRing {
    pub fn fraction(&self, r: usize, s: usize) -> usize {
        self.class[r * self.width + s]
    }

    /// `S⁻¹I = {a/s : a ∈ I, s ∈ S}`.
    pub fn extend(&self, ideal: &Ideal, s_set: &MultiplicativeSet) -> Option<Ideal> {
        let ring = self.ring.as_ref()?;
        let set = ElemSet::from_indices(
            ring.size(),
            ideal
                .elements()
                .iter()
                .flat_map(|a| s_set.elements().iter().map(move |s| self.fraction(a, s))),
        );
        Some(Ideal::from_set(ring, set))
    }
}

pub fn localize_ring(ring: &Arc<Ring>, s_set: &MultiplicativeSet) -> Result<LocalizedRing> {
    let n = ring.size();
    if s_set.contains(ring.zero()) {
        return Ok(LocalizedRing {
            ring: None,
            canonical: vec![0; n],
            class: vec![0; n * n],
            width: n,
        });
    }
    let fr = classify(n, ring, s_set, |u, r, s, r2, s2| {
        ring.mul(u, ring.sub(ring.mul(r, s2), ring.mul(r2, s))) == ring.zero()
    })?;
    let size = fr.reps.len();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for &(a, s) in &fr.reps {
        for &(b, t) in &fr.reps {
            let st = ring.mul(s, t);
            let num = ring.add(ring.mul(a, t), ring.mul(b, s));
            add.push(fr.of(num, st) as u32);
            mul.push(fr.of(ring.mul(a, b), st) as u32);
        }
    }
    let names = fr
        .reps
        .iter()
        .map(|&(a, s)| {
            if s == ring.one() {
                format!("{}/1", ring.name(a))
            } else {
                format!("{}/{}", ring.name(a), ring.name(s))
            }
        })
        .collect();
    let canonical: Vec<usize> = ring.elements().map(|r| fr.of(r, ring.one())).collect();
    let coords: Coords = ring.coords().then(|r| canonical[r]);
    let label = format!("S^-1 {}", ring.label());
    let local = Ring::from_tables(
        size,
        add,
        mul,
        fr.of(ring.zero(), ring.one()),
        fr.of(ring.one(), ring.one()),
        Some(names),
        Some(coords),
        Some(label),
    )?;
    Ok(LocalizedRing {
        ring: Some(local),
        canonical,
        class: fr.class,
        width: fr.width,
    })
}

/// `S⁻¹M` over `S⁻¹R`, with the canonical map `m ↦ m/1`. `None` when the
/// localized ring or module is zero.
#[derive(Debug, Clone)]
pub struct LocalizedModule {
    pub module: Option<Arc<Module>>,
    pub map: Option<ModuleMap>,
    class: Vec<usize>,
    width: usize,
}

impl LocalizedModule {
    pub fn fraction(&self, m: usize, s: usize) -> usize {
        self.class[m * self.width + s]
    }

    /// `S⁻¹N = {n/s : n ∈ N, s ∈ S}`.
    pub fn extend(&self, n: &ElemSet, s_set: &MultiplicativeSet) -> Option<ElemSet> {
        let module = self.module.as_ref()?;
        Some(ElemSet::from_indices(
            module.size(),
            n.iter()
                .flat_map(|x| s_set.elements().iter().map(move |s| self.fraction(x, s))),
        ))
    }
}

pub fn localize_module(
    module: &Arc<Module>,
    local: &LocalizedRing,
    s_set: &MultiplicativeSet,
) -> Result<LocalizedModule> {
    let ring = module.ring();
    if ring.is_integer_adapter() {
        return Err(Error::IntegerAdapter("localize_module"));
    }
    let Some(lring) = &local.ring else {
        return Ok(LocalizedModule {
            module: None,
            map: None,
            class: vec![0; module.size() * ring.size()],
            width: ring.size(),
        });
    };
    let fr = classify(module.size(), ring, s_set, |u, m, s, m2, s2| {
        module.act(u, module.sub(module.act(s2, m), module.act(s, m2))) == module.zero()
    })?;
    let size = fr.reps.len();
    let mut add = Vec::with_capacity(size * size);
    for &(a, s) in &fr.reps {
        for &(b, t) in &fr.reps {
            let num = module.add(module.act(t, a), module.act(s, b));
            add.push(fr.of(num, ring.mul(s, t)) as u32);
        }
    }
    // Scalars of S⁻¹R are indexed by their class; any representative works.
    let mut scalar_rep = vec![(0usize, 0usize); lring.size()];
    for r in ring.elements() {
        for s in s_set.elements().iter() {
            scalar_rep[local.fraction(r, s)] = (r, s);
        }
    }
    let mut action = Vec::with_capacity(lring.size() * size);
    for &(r, t) in &scalar_rep {
        for &(a, s) in &fr.reps {
            action.push(fr.of(module.act(r, a), ring.mul(t, s)) as u32);
        }
    }
    let names = fr
        .reps
        .iter()
        .map(|&(a, s)| {
            if s == ring.one() {
                format!("{}/1", module.name(a))
            } else {
                format!("{}/{}", module.name(a), ring.name(s))
            }
        })
        .collect();
    let table: Vec<usize> = module.elements().map(|m| fr.of(m, ring.one())).collect();
    let coords = module.coords().then(|m| table[m]);
    let label = format!("S^-1 {}", module.label());
    let lm = Module::assemble(
        lring.clone(),
        size,
        fr.of(module.zero(), ring.one()),
        add,
        action,
        names,
        coords,
        label,
    )?;
    let map = ModuleMap::new(
        module.clone(),
        lm.clone(),
        table,
        local.canonical.clone(),
        MapKind::Localization,
    )?;
    Ok(LocalizedModule {
        module: Some(lm),
        map: Some(map),
        class: fr.class,
        width: fr.width,
    })
}
