//! Plain-text format for modules given by a dimension vector and arrow matrices.
//!
//! ```text
//! # e1 A modulo its socle
//! dims: 1 1 0 0
//! a1: 1
//! ```
//!
//! Each arrow line holds the matrix rows separated by `;`, entries separated by
//! spaces. Arrows that are not listed act by zero. Entries are integers or
//! fractions `p/q`.

use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::FDModule;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_scalar<F: Field>(s: &str) -> Result<F> {
    let bad = || Error::Parse(format!("bad scalar `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            let q = F::from_i64(q);
            if q.is_zero() {
                return Err(bad());
            }
            Ok(F::from_i64(p).mul(&q.inv()))
        }
        None => Ok(F::from_i64(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_matrix<F: Field>(text: &str, rows: usize, cols: usize, label: &str) -> Result<Matrix<F>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Matrix::zeros(rows, cols));
    }
    let parsed: Vec<Vec<F>> = text
        .split(';')
        .map(|r| r.split_whitespace().map(parse_scalar).collect::<Result<Vec<F>>>())
        .collect::<Result<_>>()?;
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("arrow {label} needs a {rows}x{cols} matrix")));
    }
    Ok(Matrix::from_rows(parsed, cols))
}

/// Reads a module over `alg`; relations are checked.
pub fn parse_module<F: Field>(alg: &Arc<FDAlgebra<F>>, text: &str) -> Result<FDModule<F>> {
    let mut dims: Option<Vec<usize>> = None;
    let mut entries: Vec<(String, String)> = Vec::new();
    for line in text.lines().map(strip_comment).filter(|l| !l.is_empty()) {
        let (key, rest) =
            line.split_once(':').ok_or_else(|| Error::Parse(format!("expected `key: value` in `{line}`")))?;
        let key = key.trim();
        if key == "dims" {
            let d = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            dims = Some(d);
        } else {
            entries.push((key.to_string(), rest.to_string()));
        }
    }
    let dims = dims.ok_or_else(|| Error::Parse("missing `dims:` line".into()))?;
    if dims.len() != alg.vertex_count() {
        return Err(Error::Parse(format!("{} dimensions for {} vertices", dims.len(), alg.vertex_count())));
    }
    for (k, _) in &entries {
        if !alg.arrows().iter().any(|a| a.label == *k) {
            return Err(Error::Parse(format!("unknown arrow `{k}`")));
        }
    }
    let mats = alg
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.source], dims[a.target]);
            match entries.iter().find(|(k, _)| *k == a.label) {
                Some((_, body)) => parse_matrix(body, r, c, &a.label),
                None => Ok(Matrix::zeros(r, c)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FDModule::new(alg.clone(), dims, mats)
}

/// Inverse of [`parse_module`] for integer-valued entries; other entries are
/// written with their field display.
pub fn module_to_text<F: Field>(m: &FDModule<F>) -> String {
    let mut s = String::from("dims:");
    for d in m.dims() {
        s.push_str(&format!(" {d}"));
    }
    s.push('\n');
    for (a, mat) in m.algebra().arrows().iter().zip(m.arrow_matrices()) {
        if mat.is_empty() || mat.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows())
            .map(|r| {
                mat.row(r)
                    .iter()
                    .map(|x| x.to_i64().map_or_else(|| x.to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        s.push_str(&format!("{}: {}\n", a.label, rows.join("; ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::field::{Rational, F101};
    use crate::quiver::Presentation;
    use crate::quotient::build_quotient;
    use crate::Config;

    fn nakayama() -> Arc<FDAlgebra<F101>> {
        let p: Presentation<F101> =
            Presentation::parse("a1: 1 -> 2\na2: 2 -> 3\na3: 3 -> 4\na4: 4 -> 1\na1a2a3\na2a3a4\na3a4a1a2\n").unwrap();
        Arc::new(build_quotient(&p.quiver, &p.relations, None).unwrap())
    }

    #[test]
    fn reads_uniserial_module() {
        let a = nakayama();
        let m = parse_module(&a, "# top two layers of P1\ndims: 1 1 0 0\na1: 1\n").unwrap();
        let p1 = FDModule::projective(&a, 0);
        let (q, _) = p1.quotient(&p1.socle_spaces());
        assert!(is_isomorphic(&m, &q, &Config::default()).unwrap());
    }

    #[test]
    fn round_trip() {
        let a = nakayama();
        let p = FDModule::projective(&a, 2);
        let back = parse_module(&a, &module_to_text(&p)).unwrap();
        assert!(back.same_representation(&p));
    }

    #[test]
    fn rejects_bad_input() {
        let a = nakayama();
        assert!(parse_module(&a, "dims: 1 1 0\n").is_err());
        assert!(parse_module(&a, "dims: 1 1 0 0\nzz: 1\n").is_err());
        assert!(parse_module(&a, "dims: 1 1 0 0\na1: 1 2\n").is_err());
        // a1 a2 a3 = 0 fails on this representation
        assert!(parse_module(&a, "dims: 1 1 1 1\na1: 1\na2: 1\na3: 1\n").is_err());
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_scalar::<Rational>("3/6").unwrap(), Rational::from_i64(1).mul(&Rational::from_i64(2).inv()));
        assert_eq!(parse_scalar::<F101>("-1").unwrap(), F101::from_i64(100));
        assert!(parse_scalar::<F101>("1/0").is_err());
    }
}
