use std::fmt;

/// Byte range of a node in the source text. Spans never take part in
/// equality, so a parsed tree equals its printed-and-reparsed copy.
#[derive(Debug, Clone, Copy, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Span {}

/// An element literal: a bare integer or a coordinate tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elem {
    Int(i64),
    Tuple(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Zn(u64),
    Prod(Vec<Expr>),
    Zmod(Vec<u64>),
    Cyc(Box<Expr>, Vec<Elem>),
    Ideal(Box<Expr>, Vec<Elem>),
    Sub(Box<Expr>, Vec<Elem>),
    Idealization(Box<Expr>, Box<Expr>),
    Loc(Box<Expr>, Vec<Elem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Expr {
            kind,
            span: Span::default(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(n) => write!(f, "{n}"),
            Elem::Tuple(xs) => write!(f, "({})", join(xs)),
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical form: no whitespace.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Zn(n) => write!(f, "Zn({n})"),
            ExprKind::Prod(parts) => write!(f, "prod({})", join(parts)),
            ExprKind::Zmod(ds) => write!(f, "Zmod({})", join(ds)),
            ExprKind::Cyc(r, gens) => write!(f, "cyc({r},[{}])", join(gens)),
            ExprKind::Ideal(r, gens) => write!(f, "ideal({r},[{}])", join(gens)),
            ExprKind::Sub(m, gens) => write!(f, "sub({m},[{}])", join(gens)),
            ExprKind::Idealization(r, m) => write!(f, "idealization({r},{m})"),
            ExprKind::Loc(r, gens) => write!(f, "loc({r},[{}])", join(gens)),
        }
    }
}
