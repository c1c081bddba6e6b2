use serde_json::{json, Map, Value as Json};

use crate::module::{
    all_submodules, is_faithful, is_multiplication, m_rad, module_invariants, presimplifiable,
    replay_submodule_witness, residual_ideal, submodule_predicate, Module, PresimpKind,
    SubmoduleKind,
};
use crate::ring::{
    all_ideals, ideal_predicate, radical_of_ideal, replay_ideal_witness, IdealKind, Ring,
};
use crate::{ElemSet, Error, Verdict};

use super::eval::Value;

/// Ordered key/value output, printed as `key: value` lines or one JSON
/// object.
#[derive(Debug, Default)]
pub struct Record(pub Vec<(String, Json)>);

impl Record {
    fn put(&mut self, key: &str, value: impl Into<Json>) {
        self.0.push((key.to_string(), value.into()));
    }

    pub fn text(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| match v {
                Json::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect()
    }

    pub fn json(&self) -> String {
        let map: Map<String, Json> = self.0.iter().cloned().collect();
        Json::Object(map).to_string() + "\n"
    }
}

fn ring_set(ring: &Ring, set: &ElemSet) -> String {
    format!(
        "{{{}}}",
        set.iter()
            .map(|r| ring.name(r))
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn module_set(module: &Module, set: &ElemSet) -> String {
    format!(
        "{{{}}}",
        set.iter()
            .map(|m| module.name(m))
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn as_module(v: &Value) -> Result<std::sync::Arc<Module>, Error> {
    match v {
        Value::Module(m) => Ok(m.clone()),
        Value::Ring(r) => crate::module::make_cyclic_module(r, &r.zero_ideal()),
        _ => unreachable!("callers pass rings or modules"),
    }
}

fn ring_info(rec: &mut Record, ring: &Ring) -> Result<(), Error> {
    let inv = ring.invariants()?;
    rec.put("ring", ring.label());
    rec.put("size", ring.size());
    rec.put("units", ring_set(ring, &inv.units));
    rec.put("jacobson", ring.jacobson()?.display(ring));
    rec.put("nilradical", ring.nilradical()?.display(ring));
    rec.put("zero_divisors", ring_set(ring, &inv.zero_divisors));
    rec.put("local", inv.jacobson == inv.units.complement());
    if !ring.is_integer_adapter() {
        rec.put("ideals", all_ideals(ring)?.len());
    }
    Ok(())
}

fn module_info(rec: &mut Record, m: &Module) -> Result<(), Error> {
    let ring = m.ring();
    let inv = module_invariants(m)?;
    rec.put("module", m.label());
    rec.put("ring", ring.label());
    rec.put("size", m.size());
    rec.put("exponent", m.exponent());
    rec.put("annihilator", inv.annihilator.display(ring));
    rec.put("faithful", is_faithful(m));
    rec.put("multiplication", is_multiplication(m)?.holds);
    rec.put("zero_divisors", ring_set(ring, &inv.zero_divisors));
    rec.put("nz", ring_set(ring, &inv.nz));
    rec.put("nil", m.display_set(&inv.nil));
    rec.put("jacobson", m.display_set(&inv.jacobson));
    rec.put("jr_submodule", m.display_set(&inv.jr_submodule));
    rec.put("jr_ideal", inv.jr_ideal.display(ring));
    if !m.is_zero_module() {
        for kind in PresimpKind::ALL {
            let key = format!("presimplifiable.{}", kind.name());
            rec.put(&key, presimplifiable(m, kind)?.holds);
        }
    }
    rec.put("submodules", all_submodules(m)?.len());
    Ok(())
}

pub fn info(v: &Value) -> Result<Record, Error> {
    let mut rec = Record::default();
    rec.put("sort", v.sort());
    match v {
        Value::Ring(r) => ring_info(&mut rec, r)?,
        Value::Module(m) => module_info(&mut rec, m)?,
        Value::Ideal(ring, ideal) => {
            rec.put("ring", ring.label());
            rec.put("ideal", ideal.display(ring));
            rec.put("elements", ring_set(ring, ideal.elements()));
            rec.put("radical", radical_of_ideal(ring, ideal).display(ring));
            let mut holding = Vec::new();
            for kind in IdealKind::ALL {
                if ideal_predicate(ring, ideal, kind)?.holds {
                    holding.push(kind.name());
                }
            }
            rec.put("predicates", holding.join(","));
        }
        Value::Sub(m, n) => {
            rec.put("module", m.label());
            rec.put("submodule", m.display_set(n));
            rec.put("elements", module_set(m, n));
            rec.put("residual", residual_ideal(m, n).display(m.ring()));
            rec.put("m_rad", m.display_set(&m_rad(m, n)?));
            let mut holding = Vec::new();
            for kind in SubmoduleKind::ALL {
                if submodule_predicate(m, n, kind)?.holds {
                    holding.push(kind.name());
                }
            }
            rec.put("predicates", holding.join(","));
        }
    }
    Ok(rec)
}

pub fn rad(v: &Value) -> Result<Record, Error> {
    let mut rec = Record::default();
    match v {
        Value::Ring(r) => {
            rec.put("nilradical", r.nilradical()?.display(r));
            rec.put("jacobson", r.jacobson()?.display(r));
        }
        Value::Module(m) => {
            let inv = module_invariants(m)?;
            rec.put("nil", m.display_set(&inv.nil));
            rec.put("jacobson", m.display_set(&inv.jacobson));
        }
        Value::Ideal(r, i) => rec.put("radical", radical_of_ideal(r, i).display(r)),
        Value::Sub(m, n) => rec.put("m_rad", m.display_set(&m_rad(m, n)?)),
    }
    Ok(rec)
}

/// Predicate names accepted by `check`, by sort.
pub fn predicate_names(sort: &str) -> Vec<&'static str> {
    match sort {
        "submodule" => SubmoduleKind::ALL.iter().map(|k| k.name()).collect(),
        "ideal" => IdealKind::ALL.iter().map(|k| k.name()).collect(),
        _ => vec![
            "presimplifiable",
            "quasi_presimplifiable",
            "J_presimplifiable",
            "quasi_J_presimplifiable",
            "multiplication",
            "faithful",
        ],
    }
}

pub struct Checked {
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub replayed: Option<bool>,
}

pub enum CheckError {
    UnknownPredicate(String),
    Kernel(Error),
}

impl From<Error> for CheckError {
    fn from(e: Error) -> Self {
        CheckError::Kernel(e)
    }
}

pub fn check(predicate: &str, v: &Value) -> Result<Checked, CheckError> {
    let unknown = || {
        CheckError::UnknownPredicate(format!(
            "unknown {} predicate `{predicate}`; expected one of {}",
            v.sort(),
            predicate_names(v.sort()).join(", ")
        ))
    };
    match v {
        Value::Sub(m, n) => {
            let kind: SubmoduleKind = predicate.parse().map_err(|_| unknown())?;
            let verdict = submodule_predicate(m, n, kind)?;
            let witness = verdict.witness.as_ref().map(|w| w.render(m));
            let replayed = match &verdict.witness {
                Some(w) => Some(replay_submodule_witness(m, n, kind, w)?),
                None => None,
            };
            Ok(Checked {
                verdict,
                witness,
                replayed,
            })
        }
        Value::Ideal(r, i) => {
            let kind: IdealKind = predicate.parse().map_err(|_| unknown())?;
            let verdict = ideal_predicate(r, i, kind)?;
            let witness = verdict.witness.as_ref().map(|w| w.render_scalars(r));
            let replayed = match &verdict.witness {
                Some(w) => Some(replay_ideal_witness(r, i, kind, w)?),
                None => None,
            };
            Ok(Checked {
                verdict,
                witness,
                replayed,
            })
        }
        Value::Ring(_) | Value::Module(_) => {
            let m = as_module(v)?;
            let verdict = match predicate {
                "multiplication" => is_multiplication(&m)?,
                "faithful" => {
                    Verdict::from_bool(is_faithful(&m), || crate::Witness::counterexample(vec![]))
                }
                p => {
                    let kind = match p {
                        "presimplifiable" => PresimpKind::Plain,
                        "quasi_presimplifiable" => PresimpKind::Quasi,
                        "J_presimplifiable" => PresimpKind::J,
                        "quasi_J_presimplifiable" => PresimpKind::QuasiJ,
                        _ => return Err(unknown()),
                    };
                    presimplifiable(&m, kind)?
                }
            };
            let witness = verdict
                .witness
                .as_ref()
                .map(|w| w.render(&m))
                .filter(|w| !w.is_empty());
            Ok(Checked {
                verdict,
                witness,
                replayed: None,
            })
        }
    }
}

pub fn check_record(predicate: &str, expr: &str, c: &Checked, with_witness: bool) -> Record {
    let mut rec = Record::default();
    rec.put("predicate", predicate);
    rec.put("expression", expr);
    rec.put("holds", c.verdict.holds);
    if with_witness {
        rec.put(
            "witness",
            c.witness.clone().map_or(Json::Null, Json::String),
        );
        if let Some(r) = c.replayed {
            rec.put("replayed", r);
        }
    }
    rec
}

pub fn claim_record(c: &crate::harness::Claim) -> Json {
    json!({
        "id": c.id,
        "anchor": c.anchor,
        "hypothesis": c.hypothesis,
        "shape": c.shape,
        "note": c.note,
    })
}
