use crate::elemset::ElemSet;

/// Why a predicate came out false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// The defining formula fails at the recorded bindings.
    Counterexample,
    /// The ideal or submodule is not proper; the predicate is only defined
    /// for proper substructures.
    Improper,
    /// The ambient module is zero.
    ZeroModule,
}

/// One bound variable of a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Scalar(usize),
    Element(usize),
    Submodule(ElemSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub reason: Reason,
    pub bindings: Vec<(&'static str, Entry)>,
}

impl Witness {
    pub fn counterexample(bindings: Vec<(&'static str, Entry)>) -> Self {
        Witness {
            reason: Reason::Counterexample,
            bindings,
        }
    }

    pub fn degenerate(reason: Reason) -> Self {
        Witness {
            reason,
            bindings: Vec::new(),
        }
    }

    pub fn scalar(&self, role: &str) -> Option<usize> {
        self.bindings.iter().find_map(|(r, e)| match e {
            Entry::Scalar(s) if *r == role => Some(*s),
            _ => None,
        })
    }

    pub fn element(&self, role: &str) -> Option<usize> {
        self.bindings.iter().find_map(|(r, e)| match e {
            Entry::Element(m) if *r == role => Some(*m),
            _ => None,
        })
    }

    pub fn submodule(&self, role: &str) -> Option<&ElemSet> {
        self.bindings.iter().find_map(|(r, e)| match e {
            Entry::Submodule(s) if *r == role => Some(s),
            _ => None,
        })
    }
}

/// Outcome of deciding a predicate. A witness is present iff `holds` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn improper() -> Self {
        Self::no(Witness::degenerate(Reason::Improper))
    }

    pub fn from_bool(holds: bool, witness: impl FnOnce() -> Witness) -> Self {
        if holds {
            Self::yes()
        } else {
            Self::no(witness())
        }
    }

    /// True when the verdict is false because of a degenerate input rather
    /// than a counterexample.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self.witness,
            Some(Witness {
                reason: Reason::Improper | Reason::ZeroModule,
                ..
            })
        )
    }
}

impl Witness {
    fn render_with(
        &self,
        scalar: impl Fn(usize) -> String,
        element: impl Fn(&Entry) -> String,
    ) -> String {
        match self.reason {
            Reason::Improper => "not proper".into(),
            Reason::ZeroModule => "zero module".into(),
            Reason::Counterexample => self
                .bindings
                .iter()
                .map(|(role, e)| match e {
                    Entry::Scalar(r) => format!("{role}={}", scalar(*r)),
                    other => format!("{role}={}", element(other)),
                })
                .collect::<Vec<_>>()
                .join(", "),
        }
    }

    /// Bindings with the module's display names, e.g. `r=2, m=2̄`.
    pub fn render(&self, module: &crate::module::Module) -> String {
        self.render_with(
            |r| module.ring().name(r).to_string(),
            |e| match e {
                Entry::Element(x) => module.name(*x).to_string(),
                Entry::Submodule(s) => module.display_set(s),
                Entry::Scalar(_) => unreachable!(),
            },
        )
    }

    /// Bindings of an ideal-level witness, all scalars of `ring`.
    pub fn render_scalars(&self, ring: &crate::ring::Ring) -> String {
        // Symbolic ℤ witnesses may bind integers beyond the residue range.
        self.render_with(
            |r| {
                if r < ring.size() {
                    ring.name(r).to_string()
                } else {
                    r.to_string()
                }
            },
            |e| format!("{e:?}"),
        )
    }
}
