//! Matrix files: TOML with `n` and either `K` and `L`, or `A`, each given
//! as nested rows or as one flat row-major array. Entries are strings such
//! as `"1/2-3*i"` or plain integers.

use toml::Value;

use super::{HermitianMatrix, HermitianPencil, PencilError};
use crate::exactnum::GaussianRational;

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

/// Position of the first occurrence of `needle` after the key `key`.
fn locate(src: &str, key: &str, needle: &str) -> (usize, usize) {
    let start = src.find(&format!("{key} ")).or_else(|| src.find(key)).unwrap_or(0);
    let off = src[start..].find(needle).map_or(start, |o| start + o);
    line_col(src, off)
}

fn err_at(src: &str, key: &str, needle: &str, msg: String) -> PencilError {
    let (line, col) = locate(src, key, needle);
    PencilError::Parse { line, col, msg }
}

fn entries(src: &str, doc: &toml::Table, key: &str, n: usize) -> Result<Option<Vec<GaussianRational>>, PencilError> {
    let v = match doc.get(key) {
        Some(v) => v,
        None => return Ok(None),
    };
    let arr = v
        .as_array()
        .ok_or_else(|| err_at(src, key, key, format!("{key} must be an array")))?;
    let flat: Vec<&Value> = if arr.iter().all(|x| x.is_array()) {
        if arr.len() != n {
            return Err(err_at(src, key, key, format!("{key} has {} rows, expected {n}", arr.len())));
        }
        let mut out = Vec::new();
        for (r, row) in arr.iter().enumerate() {
            let row = row.as_array().unwrap();
            if row.len() != n {
                return Err(err_at(
                    src,
                    key,
                    key,
                    format!("{key} row {r} has {} entries, expected {n}", row.len()),
                ));
            }
            out.extend(row.iter());
        }
        out
    } else {
        if arr.len() != n * n {
            return Err(err_at(src, key, key, format!("{key} has {} entries, expected {}", arr.len(), n * n)));
        }
        arr.iter().collect()
    };
    flat.into_iter()
        .map(|x| match x {
            Value::String(s) => s
                .parse::<GaussianRational>()
                .map_err(|e| err_at(src, key, &format!("\"{s}\""), format!("{key}: {e}"))),
            Value::Integer(i) => Ok(GaussianRational::from_real(crate::exactnum::rat(*i, 1))),
            other => Err(err_at(src, key, key, format!("{key}: unsupported entry {other}"))),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Parses a matrix file into a pencil.
pub fn parse_pencil_toml(src: &str) -> Result<HermitianPencil, PencilError> {
    let doc: toml::Table = src.parse().map_err(|e: toml::de::Error| {
        let (line, col) = e.span().map_or((1, 1), |s| line_col(src, s.start));
        PencilError::Parse {
            line,
            col,
            msg: e.message().to_string(),
        }
    })?;
    let n = doc
        .get("n")
        .and_then(Value::as_integer)
        .filter(|&n| n >= 1)
        .ok_or_else(|| err_at(src, "n", "n", "missing or invalid size n".into()))? as usize;
    let hermitian = |key: &str, e: Vec<GaussianRational>| {
        HermitianMatrix::new(n, e).map_err(|err| err_at(src, key, key, format!("{key}: {err}")))
    };
    if let Some(a) = entries(src, &doc, "A", n)? {
        if doc.contains_key("K") || doc.contains_key("L") {
            return Err(err_at(src, "A", "A", "give either A or K and L, not both".into()));
        }
        return HermitianPencil::from_complex(n, &a);
    }
    let k = entries(src, &doc, "K", n)?.ok_or_else(|| err_at(src, "", "", "missing K".into()))?;
    let l = entries(src, &doc, "L", n)?.ok_or_else(|| err_at(src, "", "", "missing L".into()))?;
    HermitianPencil::new(hermitian("K", k)?, hermitian("L", l)?)
}

/// Inverse of [`parse_pencil_toml`] in the `K`/`L` form.
pub fn pencil_to_toml(p: &HermitianPencil) -> String {
    let n = p.n();
    let rows = |m: &HermitianMatrix| {
        (0..n)
            .map(|r| {
                let cells: Vec<String> = (0..n).map(|c| format!("\"{}\"", m.entry(r, c))).collect();
                format!("  [{}],", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    format!("n = {n}\nK = [\n{}\n]\nL = [\n{}\n]\n", rows(p.k()), rows(p.l()))
}
