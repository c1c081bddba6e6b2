use std::sync::Arc;

use crate::constructions::{idealization, localize_ring, MultiplicativeSet};
use crate::elemset::ElemSet;
use crate::module::{
    make_cyclic_module, make_integer_module, product_module, product_module_over_product_ring,
    submodule_generated, Module,
};
use crate::ring::{ideal_generated, Ideal, Ring};
use crate::Error;

use super::ast::{Elem, Expr, ExprKind};
use super::parse::{ErrorKind, ExprError};

/// What an expression denotes.
#[derive(Debug, Clone)]
pub enum Value {
    Ring(Arc<Ring>),
    Module(Arc<Module>),
    Ideal(Arc<Ring>, Ideal),
    Sub(Arc<Module>, ElemSet),
}

impl Value {
    pub fn sort(&self) -> &'static str {
        match self {
            Value::Ring(_) => "ring",
            Value::Module(_) => "module",
            Value::Ideal(..) => "ideal",
            Value::Sub(..) => "submodule",
        }
    }
}

type EResult<T> = std::result::Result<T, ExprError>;

fn fail(e: &Expr, message: impl Into<String>) -> ExprError {
    ExprError::new(ErrorKind::Eval, e.span.start, message)
}

fn kernel(e: &Expr) -> impl Fn(Error) -> ExprError + '_ {
    move |err| fail(e, err.to_string())
}

fn ring_of(e: &Expr) -> EResult<Arc<Ring>> {
    match eval(e)? {
        Value::Ring(r) => Ok(r),
        other => Err(fail(
            e,
            format!("expected a ring, found a {}", other.sort()),
        )),
    }
}

/// A ring in module position stands for the ring over itself.
fn module_of(e: &Expr) -> EResult<Arc<Module>> {
    match eval(e)? {
        Value::Module(m) => Ok(m),
        Value::Ring(r) => make_cyclic_module(&r, &r.zero_ideal()).map_err(kernel(e)),
        other => Err(fail(
            e,
            format!("expected a module, found a {}", other.sort()),
        )),
    }
}

/// A bare integer `k` in a ring with several coordinates is `k·1`.
fn ring_element(ring: &Ring, at: &Expr, x: &Elem) -> EResult<usize> {
    let moduli = ring.coords().moduli().len();
    match x {
        Elem::Int(k) if moduli != 1 => {
            let steps = k.rem_euclid(ring.size() as i64) as usize;
            Ok((0..steps).fold(ring.zero(), |acc, _| ring.add(acc, ring.one())))
        }
        Elem::Int(k) => ring
            .element_from_coords(&[*k])
            .ok_or_else(|| fail(at, "bad element")),
        Elem::Tuple(xs) => ring
            .element_from_coords(xs)
            .ok_or_else(|| fail(at, format!("`{x}` needs {moduli} coordinates"))),
    }
}

fn module_element(module: &Module, at: &Expr, x: &Elem) -> EResult<usize> {
    let coords = match x {
        Elem::Int(k) => vec![*k],
        Elem::Tuple(xs) => xs.clone(),
    };
    module.element_from_coords(&coords).ok_or_else(|| {
        fail(
            at,
            format!("`{x}` needs {} coordinates", module.coords().moduli().len()),
        )
    })
}

fn ring_elements(ring: &Ring, at: &Expr, xs: &[Elem]) -> EResult<Vec<usize>> {
    xs.iter().map(|x| ring_element(ring, at, x)).collect()
}

pub fn eval(e: &Expr) -> EResult<Value> {
    match &e.kind {
        ExprKind::Zn(n) => Ok(Value::Ring(Ring::residue(&[*n]).map_err(kernel(e))?)),
        ExprKind::Zmod(ds) => Ok(Value::Module(make_integer_module(ds).map_err(kernel(e))?)),
        ExprKind::Prod(parts) => {
            let values = parts.iter().map(eval).collect::<EResult<Vec<_>>>()?;
            if let Some(rings) = values
                .iter()
                .map(|v| match v {
                    Value::Ring(r) => Some(r.clone()),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()
            {
                return Ok(Value::Ring(Ring::product(&rings).map_err(kernel(e))?));
            }
            let modules = parts.iter().map(module_of).collect::<EResult<Vec<_>>>()?;
            let product = match product_module(&modules) {
                Err(Error::RingMismatch) => product_module_over_product_ring(&modules),
                other => other,
            };
            Ok(Value::Module(product.map_err(kernel(e))?))
        }
        ExprKind::Cyc(r, gens) => {
            let ring = ring_of(r)?;
            let ideal =
                ideal_generated(&ring, &ring_elements(&ring, e, gens)?).map_err(kernel(e))?;
            Ok(Value::Module(
                make_cyclic_module(&ring, &ideal).map_err(kernel(e))?,
            ))
        }
        ExprKind::Ideal(r, gens) => {
            let ring = ring_of(r)?;
            let ideal =
                ideal_generated(&ring, &ring_elements(&ring, e, gens)?).map_err(kernel(e))?;
            Ok(Value::Ideal(ring, ideal))
        }
        ExprKind::Sub(m, gens) => {
            let module = module_of(m)?;
            let idx = gens
                .iter()
                .map(|x| module_element(&module, e, x))
                .collect::<EResult<Vec<_>>>()?;
            let sub = submodule_generated(&module, &idx).map_err(kernel(e))?;
            Ok(Value::Sub(module, sub.into_elements()))
        }
        ExprKind::Idealization(r, m) => {
            let ring = ring_of(r)?;
            let module = module_of(m)?;
            let x = idealization(&module).map_err(kernel(e))?;
            if x.base().as_ref() != ring.as_ref() {
                return Err(fail(
                    e,
                    format!("{} is not a module over {}", module.label(), ring.label()),
                ));
            }
            Ok(Value::Ring(x.ring().clone()))
        }
        ExprKind::Loc(r, gens) => {
            let ring = ring_of(r)?;
            let s = MultiplicativeSet::generated(&ring, &ring_elements(&ring, e, gens)?)
                .map_err(kernel(e))?;
            match localize_ring(&ring, &s).map_err(kernel(e))?.ring {
                Some(local) => Ok(Value::Ring(local)),
                None => Err(fail(
                    e,
                    "S contains 0, so the localization is the zero ring",
                )),
            }
        }
    }
}

/// Parses and evaluates.
pub fn evaluate(src: &str) -> EResult<Value> {
    eval(&super::parse::parse(src)?)
}
