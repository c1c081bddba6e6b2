use std::fmt;

use super::ast::{Elem, Expr, ExprKind, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    UnknownConstructor,
    Eval,
}

/// A parse or evaluation error anchored at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub kind: ErrorKind,
    pub pos: usize,
    pub message: String,
}

impl ExprError {
    pub fn new(kind: ErrorKind, pos: usize, message: impl Into<String>) -> Self {
        ExprError {
            kind,
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ExprError {}

const CONSTRUCTORS: [&str; 8] = [
    "Zn",
    "prod",
    "Zmod",
    "cyc",
    "ideal",
    "sub",
    "idealization",
    "loc",
];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ExprError>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::new(ErrorKind::Syntax, self.pos, message)
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected `{c}`, found `{d}`"))),
            None => Err(self.error(format!("expected `{c}`, found end of input"))),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric() && *c != '_')
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 || !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(match rest.chars().next() {
                Some(c) => self.error(format!("expected a constructor, found `{c}`")),
                None => self.error("expected a constructor, found end of input"),
            });
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn int(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let neg = rest.starts_with('-');
        let digits = rest[neg as usize..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - neg as usize);
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let len = neg as usize + digits;
        self.pos += len;
        rest[..len]
            .parse()
            .map_err(|_| ExprError::new(ErrorKind::Syntax, start, "integer out of range"))
    }

    fn natural(&mut self) -> PResult<u64> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let n = self.int()?;
        u64::try_from(n)
            .map_err(|_| ExprError::new(ErrorKind::Syntax, start, "expected a nonnegative integer"))
    }

    fn elem(&mut self) -> PResult<Elem> {
        if self.eat('(') {
            let mut xs = vec![self.int()?];
            while self.eat(',') {
                xs.push(self.int()?);
            }
            self.expect(')')?;
            Ok(Elem::Tuple(xs))
        } else {
            Ok(Elem::Int(self.int()?))
        }
    }

    fn elem_list(&mut self) -> PResult<Vec<Elem>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        out.push(self.elem()?);
        while self.eat(',') {
            out.push(self.elem()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn naturals(&mut self) -> PResult<Vec<u64>> {
        let mut out = vec![self.natural()?];
        while self.eat(',') {
            out.push(self.natural()?);
        }
        Ok(out)
    }

    fn boxed(&mut self) -> PResult<Box<Expr>> {
        Ok(Box::new(self.expr()?))
    }

    fn expr(&mut self) -> PResult<Expr> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        if !CONSTRUCTORS.contains(&name.as_str()) {
            return Err(ExprError::new(
                ErrorKind::UnknownConstructor,
                start,
                format!("unknown constructor `{name}`"),
            ));
        }
        self.expect('(')?;
        let kind = match name.as_str() {
            "Zn" => ExprKind::Zn(self.natural()?),
            "Zmod" => ExprKind::Zmod(self.naturals()?),
            "prod" => {
                let mut parts = vec![self.expr()?];
                while self.eat(',') {
                    parts.push(self.expr()?);
                }
                ExprKind::Prod(parts)
            }
            "idealization" => {
                let r = self.boxed()?;
                self.expect(',')?;
                ExprKind::Idealization(r, self.boxed()?)
            }
            other => {
                let inner = self.boxed()?;
                self.expect(',')?;
                let gens = self.elem_list()?;
                match other {
                    "cyc" => ExprKind::Cyc(inner, gens),
                    "ideal" => ExprKind::Ideal(inner, gens),
                    "sub" => ExprKind::Sub(inner, gens),
                    _ => ExprKind::Loc(inner, gens),
                }
            }
        };
        self.expect(')')?;
        Ok(Expr {
            kind,
            span: Span {
                start,
                end: self.pos,
            },
        })
    }
}

/// Parses one expression; surrounding whitespace is ignored.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected trailing `{c}`")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions() {
        let e = parse("sub(Zmod(6), [2])").unwrap();
        assert_eq!(e.to_string(), "sub(Zmod(6),[2])");
        let err = parse("sub(Zmod(6),[2)").unwrap_err();
        assert_eq!((err.kind, err.pos), (ErrorKind::Syntax, 14));
        let err = parse("  Foo(3)").unwrap_err();
        assert_eq!((err.kind, err.pos), (ErrorKind::UnknownConstructor, 2));
        assert!(parse("Zn(4) x").is_err());
    }
}
