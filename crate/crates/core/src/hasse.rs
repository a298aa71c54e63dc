//! Text format for complexes.
//!
//! Line 1 is `dim d`; every following non-comment line is
//! `id dim cover_id_1 cover_id_2 ...` with global nonnegative ids and
//! whitespace separation. Vertices cover nothing; the bottom and top are
//! implicit. `#` starts a comment. Writing then reading is the identity on
//! the cover relation.

use std::collections::HashMap;

use crate::complex::Complex;
use crate::error::{Error, Result};

pub fn write_string(k: &Complex) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", k.dim()));
    let mut global: Vec<Vec<usize>> = Vec::new();
    let mut next = 0usize;
    for lvl in 0..=k.dim() {
        global.push((0..k.size(lvl)).map(|i| next + i).collect());
        next += k.size(lvl);
    }
    for lvl in 0..=k.dim() {
        for i in 0..k.size(lvl) {
            out.push_str(&format!("{} {}", global[lvl][i], lvl));
            for &c in k.covers(lvl, i) {
                out.push_str(&format!(" {}", global[lvl - 1][c as usize]));
            }
            out.push('\n');
        }
    }
    out
}

pub fn read_string(text: &str, file: &str) -> Result<Complex> {
    let err = |line: usize, msg: String| Error::Parse {
        file: file.to_string(),
        line,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| err(1, "empty file".to_string()))?;
    let mut it = first.split_whitespace();
    if it.next() != Some("dim") {
        return Err(err(first_no, "expected `dim d` header".to_string()));
    }
    let dim: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(first_no, "expected `dim d` header".to_string()))?;

    struct Raw {
        line: usize,
        dim: usize,
        covers: Vec<u64>,
    }
    let mut elements: HashMap<u64, Raw> = HashMap::new();
    for (no, line) in lines {
        let mut toks = line.split_whitespace();
        let id: u64 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, "expected element id".to_string()))?;
        let d: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, "expected element dimension".to_string()))?;
        if d > dim {
            return Err(err(no, format!("dimension {d} exceeds complex dim {dim}")));
        }
        let mut covers = Vec::new();
        for t in toks {
            let c: u64 = t
                .parse()
                .map_err(|_| err(no, format!("bad cover id `{t}`")))?;
            covers.push(c);
        }
        if d == 0 && !covers.is_empty() {
            return Err(err(no, "vertices cover nothing".to_string()));
        }
        if elements
            .insert(
                id,
                Raw {
                    line: no,
                    dim: d,
                    covers,
                },
            )
            .is_some()
        {
            return Err(err(no, format!("duplicate element id {id}")));
        }
    }

    // assign per-dimension indices in id order
    let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); dim + 1];
    for (&id, raw) in &elements {
        by_dim[raw.dim].push(id);
    }
    for ids in &mut by_dim {
        ids.sort_unstable();
    }
    let mut index: HashMap<u64, (usize, u32)> = HashMap::new();
    for (d, ids) in by_dim.iter().enumerate() {
        for (i, &id) in ids.iter().enumerate() {
            index.insert(id, (d, i as u32));
        }
    }
    let mut covers: Vec<Vec<Vec<u32>>> = (0..=dim).map(|d| vec![Vec::new(); by_dim[d].len()]).collect();
    for ids in by_dim.iter() {
        for &id in ids {
            let raw = &elements[&id];
            let (d, i) = index[&id];
            for &c in &raw.covers {
                let &(cd, ci) = index.get(&c).ok_or_else(|| {
                    err(raw.line, format!("cover id {c} refers to no element"))
                })?;
                if cd + 1 != d {
                    return Err(err(
                        raw.line,
                        format!(
                            "element {id} (dim {d}) covers element {c} of dim {cd}, expected dim {}",
                            d.wrapping_sub(1)
                        ),
                    ));
                }
                covers[d][i as usize].push(ci);
            }
        }
    }
    Ok(Complex::new(dim, covers))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn roundtrip_is_identity() {
        for k in [
            families::simplex(3).unwrap(),
            families::cube(3).unwrap(),
            families::polygon(5).unwrap(),
        ] {
            let text = write_string(&k);
            let back = read_string(&text, "test").unwrap();
            assert_eq!(back, k);
        }
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a square\ndim 1\n\n0 0\n1 0 # second vertex\n2 1 0 1\n3 1 0 1\n";
        let k = read_string(text, "sq").unwrap();
        assert_eq!(k.counts(), vec![2, 2]);
    }

    #[test]
    fn bad_cover_dimension_reports_line() {
        let text = "dim 1\n0 0\n1 0\n2 1 0 1\n3 1 0 2\n";
        match read_string(text, "bad") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
