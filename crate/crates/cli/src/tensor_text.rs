//! Sparse text format for tensors: a header line `N r`, then one line
//! `i1 … ir value` per nonzero entry with 1-based indices. Omitted entries
//! are zero; `#` starts a comment.

use std::fmt::Write as _;

use polargrass::field::Field;
use polargrass::Tensor;
use serde_json::Value;

use crate::formfile::ElemSyntax;

pub fn parse_tensor<F: ElemSyntax>(field: F, text: &str) -> Result<Tensor<F>, String>
where
    F::Elem: Send + Sync,
{
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or("empty tensor file")?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad header {header:?}")))
        .collect::<Result<_, _>>()?;
    let [n, r] = head[..] else {
        return Err(format!("header must be \"N r\", got {header:?}"));
    };
    let mut t = Tensor::zeros(field, n, r).map_err(|e| e.to_string())?;
    for (lineno, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != r + 1 {
            return Err(format!("line {lineno}: expected {} indices and a value", r));
        }
        let idx: Vec<usize> = tokens[..r]
            .iter()
            .map(|tok| match tok.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                _ => Err(format!("line {lineno}: index {tok} outside 1..={n}")),
            })
            .collect::<Result<_, _>>()?;
        let raw = tokens[r];
        let value = serde_json::from_str::<Value>(raw).unwrap_or_else(|_| Value::String(raw.into()));
        let elem = field.parse_elem(&value).map_err(|m| format!("line {lineno}: {m}"))?;
        t.set(&idx, elem);
    }
    Ok(t)
}

pub fn write_tensor<F: Field>(t: &Tensor<F>) -> String {
    let mut out = format!("{} {}\n", t.dim(), t.degree());
    for (idx, v) in t.nonzero_entries() {
        for i in idx {
            write!(out, "{} ", i + 1).unwrap();
        }
        writeln!(out, "{}", t.field().display(v)).unwrap();
    }
    out
}
