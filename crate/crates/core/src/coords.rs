/// Maps integer coordinate tuples (as written on the command line) to carrier
/// indices.
///
/// Every structure remembers the residue moduli of the ambient coordinates it
/// was built from; `lookup` sends the mixed-radix index of a reduced tuple to
/// the element it denotes (a coset, a fraction `r/1`, ...). `None` means the
/// identity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords {
    moduli: Vec<u64>,
    lookup: Option<Vec<usize>>,
}

impl Coords {
    pub fn identity(moduli: Vec<u64>) -> Self {
        Coords {
            moduli,
            lookup: None,
        }
    }

    pub fn mapped(moduli: Vec<u64>, lookup: Vec<usize>) -> Self {
        Coords {
            moduli,
            lookup: Some(lookup),
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn ambient_size(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    /// Element denoted by the ambient index `amb`.
    pub fn resolve(&self, amb: usize) -> usize {
        match &self.lookup {
            None => amb,
            Some(table) => table[amb],
        }
    }

    pub fn element(&self, coords: &[i64]) -> Option<usize> {
        if coords.len() != self.moduli.len() {
            return None;
        }
        let mut amb = 0usize;
        for (&c, &m) in coords.iter().zip(&self.moduli) {
            amb = amb * m as usize + c.rem_euclid(m as i64) as usize;
        }
        Some(self.resolve(amb))
    }

    /// Composes with an element map `f` applied after resolution.
    pub fn then(&self, f: impl Fn(usize) -> usize) -> Coords {
        let table = (0..self.ambient_size())
            .map(|a| f(self.resolve(a)))
            .collect();
        Coords::mapped(self.moduli.clone(), table)
    }

    /// Coordinates of a direct product, first factor most significant.
    pub fn product(parts: &[&Coords], sizes: &[usize]) -> Coords {
        let moduli: Vec<u64> = parts
            .iter()
            .flat_map(|c| c.moduli.iter().copied())
            .collect();
        let amb_sizes: Vec<usize> = parts.iter().map(|c| c.ambient_size()).collect();
        let total: usize = amb_sizes.iter().product();
        let mut table = Vec::with_capacity(total);
        for amb in 0..total {
            let mut rest = amb;
            let mut digits = vec![0; parts.len()];
            for i in (0..parts.len()).rev() {
                digits[i] = rest % amb_sizes[i];
                rest /= amb_sizes[i];
            }
            let mut index = 0;
            for i in 0..parts.len() {
                index = index * sizes[i] + parts[i].resolve(digits[i]);
            }
            table.push(index);
        }
        Coords::mapped(moduli, table)
    }
}
