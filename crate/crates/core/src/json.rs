//! JSON input formats for groupoids, G-sets, G-monoids and crossed G-sets.
//!
//! Groupoids are either raw (`objects`, `morphisms`, `compose`, `identity`,
//! `inverse`) or built from shorthands: `{"group": {"perm_gens": ...}}`,
//! `{"group": {"table": ...}}`, `{"pair": n}`, `{"named": "S3"}`,
//! `{"disjoint_union": [...]}` and `{"product": [...]}`.
//!
//! G-sets give `fibers` keyed by object id and `action` keyed by morphism id,
//! or one of `{"terminal": true}` and `{"representable": x}`. G-monoids add
//! `monoids`, or are `{"conjugation": true}` / `{"trivial": true}`. Crossed
//! G-sets add `labels` keyed by object id.

use std::sync::Arc;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::corpus;
use crate::crossed::CrossedGSet;
use crate::groupoid::{FiniteGroupoid, RawGroupoid};
use crate::gset::{GMonoid, GSet, MonoidTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: &str, message: impl Into<String>) -> InputError {
    InputError::Field {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn parse_str(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, InputError> {
    v.as_object().ok_or_else(|| field(path, "expected an object"))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, InputError> {
    m.get(key).ok_or_else(|| field(path, format!("missing field `{key}`")))
}

fn uint(v: &Value, path: &str) -> Result<usize, InputError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| field(path, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| field(path, "expected an array"))
}

fn uint_list(v: &Value, path: &str) -> Result<Vec<usize>, InputError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect()
}

fn uint_matrix(v: &Value, path: &str) -> Result<Vec<Vec<usize>>, InputError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| uint_list(row, &format!("{path}[{i}]")))
        .collect()
}

/// A map keyed by decimal ids `0..n`, every key present exactly once.
fn indexed<'a>(v: &'a Value, n: usize, path: &str) -> Result<Vec<&'a Value>, InputError> {
    let m = object(v, path)?;
    let mut out: Vec<Option<&Value>> = vec![None; n];
    for (k, val) in m {
        let i: usize = k
            .parse()
            .ok()
            .filter(|&i| i < n)
            .ok_or_else(|| field(path, format!("key `{k}` is not an id below {n}")))?;
        out[i] = Some(val);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| field(path, format!("missing entry for id {i}"))))
        .collect()
}

pub fn parse_groupoid(v: &Value) -> Result<Arc<FiniteGroupoid>, InputError> {
    groupoid_at(v, "$")
}

fn groupoid_at(v: &Value, path: &str) -> Result<Arc<FiniteGroupoid>, InputError> {
    let m = object(v, path)?;
    let err = |p: &str, e: crate::groupoid::GroupoidError| field(p, e.to_string());
    if let Some(g) = m.get("group") {
        let p = format!("{path}.group");
        let gm = object(g, &p)?;
        if let Some(gens) = gm.get("perm_gens") {
            let p = format!("{p}.perm_gens");
            let gens = uint_matrix(gens, &p)?;
            for (i, gen) in gens.iter().enumerate() {
                let mut seen = vec![false; gen.len()];
                if gen.len() != gens[0].len() || !gen.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true)) {
                    return Err(field(&format!("{p}[{i}]"), format!("not a permutation of 0..{}", gens[0].len())));
                }
            }
            return FiniteGroupoid::from_perm_gens(&gens).map(Arc::new).map_err(|e| err(&p, e));
        }
        if let Some(table) = gm.get("table") {
            let p = format!("{p}.table");
            let table = uint_matrix(table, &p)?;
            return FiniteGroupoid::from_group(&table).map(Arc::new).map_err(|e| err(&p, e));
        }
        return Err(field(&p, "expected `perm_gens` or `table`"));
    }
    if let Some(n) = m.get("pair") {
        let p = format!("{path}.pair");
        return FiniteGroupoid::pair(uint(n, &p)?).map(Arc::new).map_err(|e| err(&p, e));
    }
    if let Some(name) = m.get("named") {
        let p = format!("{path}.named");
        let name = name.as_str().ok_or_else(|| field(&p, "expected a string"))?;
        return corpus::by_name(name).ok_or_else(|| field(&p, format!("unknown groupoid `{name}`")));
    }
    if let Some(parts) = m.get("disjoint_union") {
        let p = format!("{path}.disjoint_union");
        let parts = array(parts, &p)?
            .iter()
            .enumerate()
            .map(|(i, x)| groupoid_at(x, &format!("{p}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        return FiniteGroupoid::disjoint_union(&parts).map(|(g, _)| g).map_err(|e| err(&p, e));
    }
    if let Some(parts) = m.get("product") {
        let p = format!("{path}.product");
        let parts = array(parts, &p)?
            .iter()
            .enumerate()
            .map(|(i, x)| groupoid_at(x, &format!("{p}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let (first, rest) = parts.split_first().ok_or_else(|| field(&p, "empty product"))?;
        return Ok(rest
            .iter()
            .fold(Arc::clone(first), |acc, g| Arc::new(FiniteGroupoid::direct_product(&acc, g))));
    }
    if m.contains_key("objects") {
        let raw: RawGroupoid = serde_json::from_value(v.clone()).map_err(|e| field(path, e.to_string()))?;
        return FiniteGroupoid::validate(&raw).map(Arc::new).map_err(|e| err(path, e));
    }
    Err(field(
        path,
        "expected a raw groupoid or one of `group`, `pair`, `named`, `disjoint_union`, `product`",
    ))
}

pub fn parse_gset(v: &Value, base: &Arc<FiniteGroupoid>) -> Result<GSet, InputError> {
    gset_at(v, base, "$")
}

fn gset_at(v: &Value, base: &Arc<FiniteGroupoid>, path: &str) -> Result<GSet, InputError> {
    let m = object(v, path)?;
    if m.get("terminal").and_then(Value::as_bool) == Some(true) {
        return Ok(GSet::terminal(base));
    }
    if let Some(x) = m.get("representable") {
        let p = format!("{path}.representable");
        let x = uint(x, &p)?;
        if x >= base.object_count() {
            return Err(field(&p, format!("object {x} does not exist")));
        }
        return Ok(GSet::representable(base, x));
    }
    let fp = format!("{path}.fibers");
    let fibers = indexed(get(m, "fibers", path)?, base.object_count(), &fp)?
        .into_iter()
        .enumerate()
        .map(|(i, n)| uint(n, &format!("{fp}.{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let ap = format!("{path}.action");
    let action = indexed(get(m, "action", path)?, base.morphism_count(), &ap)?
        .into_iter()
        .enumerate()
        .map(|(g, img)| uint_list(img, &format!("{ap}.{g}")))
        .collect::<Result<Vec<_>, _>>()?;
    GSet::new(Arc::clone(base), fibers, action).map_err(|e| field(path, e.to_string()))
}

/// A weight: `"conjugation"`, `"trivial"`, or a G-monoid JSON value.
pub fn parse_gmonoid(v: &Value, base: &Arc<FiniteGroupoid>) -> Result<GMonoid, InputError> {
    let path = "$";
    match v {
        Value::String(s) if s == "conjugation" => return Ok(GMonoid::conjugation(base)),
        Value::String(s) if s == "trivial" => return Ok(GMonoid::trivial(base)),
        _ => {}
    }
    let m = object(v, path)?;
    if m.get("conjugation").and_then(Value::as_bool) == Some(true) {
        return Ok(GMonoid::conjugation(base));
    }
    if m.get("trivial").and_then(Value::as_bool) == Some(true) {
        return Ok(GMonoid::trivial(base));
    }
    let underlying = gset_at(v, base, path)?;
    let mp = "$.monoids";
    let monoids = indexed(get(m, "monoids", path)?, base.object_count(), mp)?
        .into_iter()
        .enumerate()
        .map(|(x, mv)| {
            let p = format!("{mp}.{x}");
            let mm = object(mv, &p)?;
            let table = uint_matrix(get(mm, "table", &p)?, &format!("{p}.table"))?;
            let unit = uint(get(mm, "unit", &p)?, &format!("{p}.unit"))?;
            MonoidTable::new(&table, unit).map_err(|e| field(&p, e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let action = (0..base.morphism_count())
        .map(|g| underlying.action_map(g).to_vec())
        .collect();
    GMonoid::new(Arc::clone(base), monoids, action).map_err(|e| field(path, e.to_string()))
}

pub fn parse_crossed(v: &Value, weight: &Arc<GMonoid>) -> Result<CrossedGSet, InputError> {
    let path = "$";
    let base = weight.base();
    let carrier = gset_at(v, base, path)?;
    let m = object(v, path)?;
    let lp = "$.labels";
    let labels = indexed(get(m, "labels", path)?, base.object_count(), lp)?
        .into_iter()
        .enumerate()
        .map(|(x, l)| uint_list(l, &format!("{lp}.{x}")))
        .collect::<Result<Vec<_>, _>>()?;
    CrossedGSet::new(carrier, Arc::clone(weight), labels).map_err(|e| field(path, e.to_string()))
}

pub fn groupoid_to_json(g: &FiniteGroupoid) -> Value {
    serde_json::to_value(g.to_raw()).expect("raw groupoid serializes")
}

pub fn gset_to_json(x: &GSet) -> Value {
    let fibers: Map<String, Value> = x
        .fibers()
        .iter()
        .enumerate()
        .map(|(i, &n)| (i.to_string(), Value::from(n)))
        .collect();
    let action: Map<String, Value> = (0..x.base().morphism_count())
        .map(|g| (g.to_string(), Value::from(x.action_map(g).to_vec())))
        .collect();
    serde_json::json!({ "fibers": fibers, "action": action })
}

pub fn crossed_to_json(c: &CrossedGSet) -> Value {
    let mut v = gset_to_json(c.carrier());
    let labels: Map<String, Value> = c
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (i.to_string(), Value::from(l.clone())))
        .collect();
    v["labels"] = Value::Object(labels);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn shorthands() {
        let g = parse_groupoid(&json!({"group": {"perm_gens": [[1, 0, 2], [1, 2, 0]]}})).unwrap();
        assert_eq!(g.morphism_count(), 6);
        let g = parse_groupoid(&json!({"disjoint_union": [{"pair": 2}, {"group": {"table": [[0, 1], [1, 0]]}}]})).unwrap();
        assert_eq!((g.object_count(), g.morphism_count()), (3, 6));
        let g = parse_groupoid(&json!({"product": [{"named": "C2"}, {"pair": 2}]})).unwrap();
        assert_eq!((g.object_count(), g.morphism_count()), (2, 8));
    }

    #[test]
    fn raw_round_trip() {
        let g = corpus::s3();
        let back = parse_groupoid(&groupoid_to_json(&g)).unwrap();
        assert_eq!(back.as_ref(), g.as_ref());
    }

    #[test]
    fn errors_carry_context() {
        let e = parse_groupoid(&json!({"group": {"perm_gens": [[1, "x"]]}})).unwrap_err();
        assert_eq!(
            e,
            InputError::Field {
                path: "$.group.perm_gens[0][1]".into(),
                message: "expected a non-negative integer".into()
            }
        );
        let e = parse_str("{\n  \"pair\": }").unwrap_err();
        assert!(matches!(e, InputError::Syntax { line: 2, .. }));
        let g = corpus::c2();
        let e = parse_gset(&json!({"fibers": {"0": 2}, "action": {"0": [0, 1]}}), &g).unwrap_err();
        assert!(e.to_string().starts_with("$.action: missing entry for id 1"));
    }

    #[test]
    fn gsets_and_crossed_sets() {
        let g = corpus::c2();
        let x = parse_gset(&json!({"fibers": {"0": 2}, "action": {"0": [0, 1], "1": [1, 0]}}), &g).unwrap();
        assert_eq!(x, GSet::representable(&g, 0));
        let w = Arc::new(parse_gmonoid(&json!("conjugation"), &g).unwrap());
        let c = parse_crossed(&json!({"fibers": {"0": 2}, "action": {"0": [0, 1], "1": [1, 0]}, "labels": {"0": [1, 1]}}), &w).unwrap();
        assert_eq!(parse_crossed(&crossed_to_json(&c), &w).unwrap(), c);
        let bad = parse_crossed(&json!({"fibers": {"0": 2}, "action": {"0": [0, 1], "1": [1, 0]}, "labels": {"0": [0, 1]}}), &w);
        assert!(bad.is_err());
    }

    #[test]
    fn explicit_monoid() {
        let g = corpus::c2();
        let m = parse_gmonoid(
            &json!({"fibers": {"0": 2}, "action": {"0": [0, 1], "1": [0, 1]}, "monoids": {"0": {"table": [[0, 1], [1, 0]], "unit": 0}}}),
            &g,
        )
        .unwrap();
        assert!(m.is_conjugation());
    }
}
