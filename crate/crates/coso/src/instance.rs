//! Instance documents: JSON descriptions of a ground set and its source
//! model, e.g.
//!
//! ```json
//! {"users": [1, 2], "model": "bits", "bits": {"1": ["a"], "2": ["a", "b"]}}
//! ```
//!
//! Table instances key subsets by sorted comma-joined id lists (empty string
//! for the empty set) and give values as `"p/q"` strings or JSON integers.
//! Linear instances map user ids to row lists over GF(q), with an optional
//! `"field"` entry (default 2) next to the user keys.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::entropy::{BitsModel, EntropyOracle, LinearModel, TableModel};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::rational::{parse_rational, rat, Rational};
use crate::set::{Universe, UserId};

pub fn load_instance(text: &str) -> Result<EntropyOracle> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Error::Instance(format!("not valid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Instance("top level must be an object".into()))?;

    let users: Vec<UserId> = obj
        .get("users")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Instance("missing \"users\" array".into()))?
        .iter()
        .map(|v| {
            v.as_u64()
                .and_then(|u| u32::try_from(u).ok())
                .ok_or_else(|| Error::Instance(format!("bad user id {v}")))
        })
        .collect::<Result<_>>()?;
    let universe = Universe::new(users)?;

    let model_name = obj
        .get("model")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Instance("missing \"model\" string".into()))?;

    match model_name {
        "bits" => {
            let map = obj
                .get("bits")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Instance("bits model needs a \"bits\" object".into()))?;
            let mut per_user = vec![Vec::new(); universe.len()];
            for (key, val) in map {
                let idx = user_index(&universe, key)?;
                let labels = val
                    .as_array()
                    .ok_or_else(|| Error::Instance(format!("bits for user {key} not an array")))?
                    .iter()
                    .map(|l| {
                        l.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| Error::Instance(format!("non-string bit label {l}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                per_user[idx] = labels;
            }
            EntropyOracle::new(universe, Box::new(BitsModel::new(per_user)?))
        }
        "table" => {
            let map = obj
                .get("table")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Instance("table model needs a \"table\" object".into()))?;
            let n = universe.len();
            let mut values: Vec<Option<Rational>> = vec![None; 1 << n];
            for (key, val) in map {
                let mask = subset_key(&universe, key)?;
                let r = rational_value(val)?;
                if r < rat(0) {
                    return Err(Error::Instance(format!("negative entropy for {{{key}}}")));
                }
                if values[mask as usize].replace(r).is_some() {
                    return Err(Error::Instance(format!("duplicate table key {{{key}}}")));
                }
            }
            let missing = values.iter().filter(|v| v.is_none()).count();
            if missing > 0 {
                return Err(Error::Instance(format!(
                    "partial table: {missing} of {} subsets missing",
                    1 << n
                )));
            }
            let values = values.into_iter().map(Option::unwrap).collect();
            EntropyOracle::new(universe, Box::new(TableModel::new(n, values)?))
        }
        "linear" => {
            let map = obj
                .get("linear")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Instance("linear model needs a \"linear\" object".into()))?;
            let field_order = match map.get("field") {
                None => 2,
                Some(v) => v
                    .as_u64()
                    .and_then(|u| u16::try_from(u).ok())
                    .ok_or_else(|| Error::Instance("bad \"field\" value".into()))?,
            };
            let field = Field::for_order(field_order)?;
            let mut rows_per_user: Vec<Vec<Vec<u16>>> = vec![Vec::new(); universe.len()];
            let mut cols = None;
            for (key, val) in map {
                if key == "field" {
                    continue;
                }
                let idx = user_index(&universe, key)?;
                let rows = val
                    .as_array()
                    .ok_or_else(|| Error::Instance(format!("rows for user {key} not an array")))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::Instance(format!("bad row for user {key}")))?
                            .iter()
                            .map(|e| {
                                e.as_u64()
                                    .and_then(|u| u16::try_from(u).ok())
                                    .ok_or_else(|| {
                                        Error::Instance(format!("bad matrix entry {e}"))
                                    })
                            })
                            .collect::<Result<Vec<u16>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                for row in &rows {
                    match cols {
                        None => cols = Some(row.len()),
                        Some(c) if c == row.len() => {}
                        Some(c) => {
                            return Err(Error::Instance(format!(
                                "row width {} does not match {c}",
                                row.len()
                            )))
                        }
                    }
                }
                rows_per_user[idx] = rows;
            }
            let cols = cols.unwrap_or(0);
            EntropyOracle::new(
                universe,
                Box::new(LinearModel::new(field, cols, rows_per_user)?),
            )
        }
        other => Err(Error::Instance(format!(
            "unknown model {other:?} (expected bits, table or linear)"
        ))),
    }
}

fn user_index(universe: &Universe, key: &str) -> Result<usize> {
    let id: UserId = key
        .trim()
        .parse()
        .map_err(|_| Error::Instance(format!("bad user key {key:?}")))?;
    universe
        .index_of(id)
        .ok_or_else(|| Error::Instance(format!("user {id} not in \"users\"")))
}

fn subset_key(universe: &Universe, key: &str) -> Result<u32> {
    let key = key.trim();
    if key.is_empty() {
        return Ok(0);
    }
    let mut mask = 0u32;
    for part in key.split(',') {
        let idx = user_index(universe, part)?;
        let bit = 1u32 << idx;
        if mask & bit != 0 {
            return Err(Error::Instance(format!("repeated id in table key {key:?}")));
        }
        mask |= bit;
    }
    Ok(mask)
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(crate::rational::rat)
            .ok_or_else(|| Error::Instance(format!(
                "non-integer numeric entropy {n}; use a \"p/q\" string for exactness"
            ))),
        other => Err(Error::Instance(format!("bad entropy value {other}"))),
    }
}

/// Canonical serialization of the running examples, used by the CLI's test
/// fixtures and the README walkthrough.
pub fn render_bits_instance(users: &[UserId], bits: &[(UserId, &str)]) -> String {
    let map: BTreeMap<String, Vec<String>> = bits
        .iter()
        .map(|(u, s)| (u.to_string(), s.chars().map(|c| c.to_string()).collect()))
        .collect();
    serde_json::json!({
        "users": users,
        "model": "bits",
        "bits": map,
    })
    .to_string()
}
