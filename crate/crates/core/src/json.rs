//! JSON file format for multivectors.
//!
//! ```json
//! {"dim": 4, "grade": 2, "dual": false,
//!  "terms": [{"indices": [1, 2], "coeff": "1"}, {"indices": [3, 4], "coeff": "-1/2"}]}
//! ```
//!
//! Indices are 1-based. A term whose indices are out of order is reordered
//! with the sign of the sorting permutation. `coeff` is an integer or a
//! string holding an integer or `p/q`; `dual` defaults to `false`. Emitted
//! files use sorted indices and lowest-terms coefficients.

use serde_json::{json, Map, Value};

use crate::blade::{sort_sign, Blade};
use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::rational::Rational;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| parse_err(format!("{ctx}: missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer, got {v}")))
}

fn parse_coeff(v: &Value, ctx: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|e: Error| parse_err(format!("{ctx}: {e}"))),
        Value::Number(n) => n.as_i64().map(Rational::from_integer).ok_or_else(|| {
            parse_err(format!(
                "{ctx}: coefficient {n} is not an integer; use \"p/q\""
            ))
        }),
        other => Err(parse_err(format!(
            "{ctx}: coefficient must be a string or integer, got {other}"
        ))),
    }
}

fn from_value(v: &Value, ctx: &str) -> Result<Multivector> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(format!("{ctx}: expected a JSON object")))?;
    let dim = as_usize(field(obj, "dim", ctx)?, "dim")?;
    let grade = as_usize(field(obj, "grade", ctx)?, "grade")?;
    let dual = match obj.get("dual") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(other) => {
            return Err(parse_err(format!(
                "{ctx}: \"dual\" must be a boolean, got {other}"
            )))
        }
    };
    let terms = field(obj, "terms", ctx)?
        .as_array()
        .ok_or_else(|| parse_err(format!("{ctx}: \"terms\" must be an array")))?;
    let mut parsed: Vec<(Blade, Rational)> = Vec::with_capacity(terms.len());
    for (i, term) in terms.iter().enumerate() {
        let tctx = format!("{ctx}: term {} {term}", i + 1);
        let tobj = term
            .as_object()
            .ok_or_else(|| parse_err(format!("{tctx}: expected an object")))?;
        let indices = field(tobj, "indices", &tctx)?
            .as_array()
            .ok_or_else(|| parse_err(format!("{tctx}: \"indices\" must be an array")))?
            .iter()
            .map(|x| as_usize(x, "index"))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(format!("{tctx}: {e}")))?;
        if indices.len() != grade {
            return Err(parse_err(format!(
                "{tctx}: has {} indices, grade is {grade}",
                indices.len()
            )));
        }
        if let Some(bad) = indices.iter().find(|&&i| i == 0 || i > dim) {
            return Err(parse_err(format!("{tctx}: index {bad} outside 1..={dim}")));
        }
        let sign =
            sort_sign(&indices).ok_or_else(|| parse_err(format!("{tctx}: repeated index")))?;
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        let blade = Blade::from_indices(&sorted)?;
        if parsed.iter().any(|(b, _)| *b == blade) {
            return Err(parse_err(format!("{tctx}: duplicate index set {blade}")));
        }
        let coeff = parse_coeff(field(tobj, "coeff", &tctx)?, &tctx)?;
        parsed.push((blade, coeff.signed(sign)));
    }
    Multivector::from_terms(dim, grade, dual, parsed).map_err(|e| parse_err(format!("{ctx}: {e}")))
}

fn read_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("malformed JSON: {e}")))
}

pub fn parse_multivector(text: &str) -> Result<Multivector> {
    from_value(&read_json(text)?, "multivector")
}

/// A JSON array of multivectors.
pub fn parse_family(text: &str) -> Result<Vec<Multivector>> {
    let v = read_json(text)?;
    let items = v
        .as_array()
        .ok_or_else(|| parse_err("expected a JSON array of multivectors"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| from_value(item, &format!("member {}", i + 1)))
        .collect()
}

pub fn to_value(p: &Multivector) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(b, c)| json!({"indices": b.indices(), "coeff": c.to_string()}))
        .collect();
    json!({
        "dim": p.dim(),
        "grade": p.grade(),
        "dual": p.is_dual(),
        "terms": terms,
    })
}

fn write_object(out: &mut String, p: &Multivector, indent: &str) {
    out.push_str(indent);
    out.push_str("{\n");
    out.push_str(&format!(
        "{indent}  \"dim\": {},\n{indent}  \"grade\": {},\n{indent}  \"dual\": {},\n",
        p.dim(),
        p.grade(),
        p.is_dual()
    ));
    if p.terms().is_empty() {
        out.push_str(&format!("{indent}  \"terms\": []\n"));
    } else {
        out.push_str(&format!("{indent}  \"terms\": [\n"));
        let lines: Vec<String> = p
            .terms()
            .iter()
            .map(|(b, c)| {
                let idx: Vec<String> = b.indices().iter().map(|i| i.to_string()).collect();
                format!(
                    "{indent}    {{\"indices\": [{}], \"coeff\": \"{c}\"}}",
                    idx.join(", ")
                )
            })
            .collect();
        out.push_str(&lines.join(",\n"));
        out.push_str(&format!("\n{indent}  ]\n"));
    }
    out.push_str(indent);
    out.push('}');
}

/// One term per line, followed by a newline.
pub fn emit_multivector(p: &Multivector) -> String {
    let mut out = String::new();
    write_object(&mut out, p, "");
    out.push('\n');
    out
}

pub fn emit_family(members: &[Multivector]) -> String {
    if members.is_empty() {
        return "[]\n".into();
    }
    let mut out = String::from("[\n");
    for (i, p) in members.iter().enumerate() {
        if i > 0 {
            out.push_str(",\n");
        }
        write_object(&mut out, p, "  ");
    }
    out.push_str("\n]\n");
    out
}
