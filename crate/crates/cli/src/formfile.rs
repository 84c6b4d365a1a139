//! JSON form files and field descriptions.
//!
//! ```json
//! {
//!   "field": { "p": 2, "d": 2, "modulus": [1, 1, 1], "sigma": "frobenius" },
//!   "epsilon": "+1",
//!   "matrix": [[1, 0], [0, [0, 1]]]
//! }
//! ```
//!
//! Entries are integers (reduced mod p), coefficient arrays `[a0, a1]` for
//! GF(p²), or strings such as `"-3/4"` over ℚ (`"p": 0`).

use std::path::Path;

use polargrass::field::{Field, FieldSpec, FiniteField, Rationals, SigmaKind, Sign};
use polargrass::SesquilinearForm;
use serde_json::Value;

/// Fields whose elements can be read from JSON values.
pub trait ElemSyntax: Field + Send + Sync
where
    Self::Elem: Send + Sync,
{
    fn parse_elem(&self, v: &Value) -> Result<Self::Elem, String>;
}

fn as_int(v: &Value) -> Option<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

impl ElemSyntax for FiniteField {
    fn parse_elem(&self, v: &Value) -> Result<Self::Elem, String> {
        let coeffs: Vec<i64> = match v {
            Value::Array(items) => items
                .iter()
                .map(|c| as_int(c).ok_or_else(|| format!("bad coefficient {c}")))
                .collect::<Result<_, _>>()?,
            other => vec![as_int(other).ok_or_else(|| format!("bad element {other}"))?],
        };
        self.from_coeffs(&coeffs).map_err(|e| e.to_string())
    }
}

impl ElemSyntax for Rationals {
    fn parse_elem(&self, v: &Value) -> Result<Self::Elem, String> {
        match v {
            Value::Number(n) => n.as_i64().map(|i| self.from_int(i)).ok_or_else(|| format!("bad rational {n}")),
            Value::String(s) => self.parse(s).map_err(|e| e.to_string()),
            other => Err(format!("bad rational {other}")),
        }
    }
}

/// A form over one of the two field families.
#[derive(Debug, Clone)]
pub enum LoadedForm {
    Finite(SesquilinearForm<FiniteField>),
    Rational(SesquilinearForm<Rationals>),
}

pub fn parse_field_spec(v: &Value) -> Result<FieldSpec, String> {
    let obj = v.as_object().ok_or("\"field\" must be an object")?;
    let p = obj.get("p").and_then(Value::as_u64).ok_or("field needs an integer \"p\"")?;
    let d = match obj.get("d") {
        None => 1,
        Some(d) => d.as_u64().ok_or("\"d\" must be an integer")? as u32,
    };
    let modulus = match obj.get("modulus") {
        None | Some(Value::Null) => None,
        Some(Value::Array(c)) if c.len() == 3 => {
            let mut m = [0u64; 3];
            for (slot, c) in m.iter_mut().zip(c) {
                *slot = c.as_u64().ok_or("modulus coefficients must be non-negative integers")?;
            }
            Some(m)
        }
        Some(_) => return Err("\"modulus\" must list three coefficients, constant term first".into()),
    };
    let sigma = match obj.get("sigma").map(|s| s.as_str()) {
        None | Some(Some("identity")) => SigmaKind::Identity,
        Some(Some("frobenius")) => SigmaKind::Frobenius,
        Some(other) => return Err(format!("unknown sigma {other:?}")),
    };
    Ok(FieldSpec { p, d, modulus, sigma })
}

/// `3`, `5^2`, `2^2:frobenius`, `Q`.
pub fn parse_field_arg(s: &str) -> Result<FieldSpec, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::rationals());
    }
    let (body, sigma) = match s.split_once(':') {
        Some((b, "frobenius")) => (b, SigmaKind::Frobenius),
        Some((b, "identity")) => (b, SigmaKind::Identity),
        Some((_, other)) => return Err(format!("unknown sigma {other:?}")),
        None => (s, SigmaKind::Identity),
    };
    let (p, d) = match body.split_once('^') {
        Some((p, d)) => (p, d.parse::<u32>().map_err(|_| format!("bad extension degree in {s:?}"))?),
        None => (body, 1),
    };
    let p = p.parse::<u64>().map_err(|_| format!("bad characteristic in {s:?}"))?;
    Ok(FieldSpec { p, d, modulus: None, sigma })
}

pub fn parse_sign(v: &Value) -> Result<Sign, String> {
    match v {
        Value::String(s) if s == "+1" || s == "1" => Ok(Sign::Plus),
        Value::String(s) if s == "-1" => Ok(Sign::Minus),
        Value::Number(n) if n.as_i64() == Some(1) => Ok(Sign::Plus),
        Value::Number(n) if n.as_i64() == Some(-1) => Ok(Sign::Minus),
        other => Err(format!("epsilon must be +1 or -1, got {other}")),
    }
}

fn parse_matrix<F: ElemSyntax>(field: F, v: &Value) -> Result<Vec<Vec<F::Elem>>, String>
where
    F::Elem: Send + Sync,
{
    let rows = v.as_array().ok_or("\"matrix\" must be an array of rows")?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or_else(|| format!("matrix row {} is not an array", i + 1))?;
            row.iter()
                .enumerate()
                .map(|(j, e)| field.parse_elem(e).map_err(|m| format!("entry ({},{}): {m}", i + 1, j + 1)))
                .collect()
        })
        .collect()
}

/// Builds the form without rejecting invalid matrices, so `info` can
/// report what is wrong.
pub fn parse_form(text: &str) -> Result<LoadedForm, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("form file is not valid JSON: {e}"))?;
    let spec = parse_field_spec(doc.get("field").ok_or("form file needs \"field\"")?)?;
    let eps = parse_sign(doc.get("epsilon").ok_or("form file needs \"epsilon\"")?)?;
    let matrix = doc.get("matrix").ok_or("form file needs \"matrix\"")?;
    if spec.is_rational() {
        let q = Rationals::new(&spec).map_err(|e| e.to_string())?;
        let m = parse_matrix(q, matrix)?;
        SesquilinearForm::new(q, &m, eps).map(LoadedForm::Rational).map_err(|e| e.to_string())
    } else {
        let f = FiniteField::new(&spec).map_err(|e| e.to_string())?;
        let m = parse_matrix(f, matrix)?;
        SesquilinearForm::new(f, &m, eps).map(LoadedForm::Finite).map_err(|e| e.to_string())
    }
}

pub fn load_form(path: &Path) -> Result<LoadedForm, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_form(&text)
}
