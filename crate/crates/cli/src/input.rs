//! Parsing of matrices, weights, degree lists and monomial ideals given on
//! the command line or in files.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use latvert_core::lp::RatVec;
use latvert_core::monomial::parse_ideal;
use latvert_core::{IntMatrix, Lattice, MonomialIdeal};
use num_rational::BigRational;

/// Reads a matrix from a file if `arg` names one, else parses `arg` itself.
pub fn read_matrix(arg: &str) -> Result<Vec<Vec<i64>>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parse_matrix(&text).with_context(|| format!("in {}", path.display()))
    } else {
        parse_matrix(arg)
    }
}

/// Accepts `[1 2 3]`, `1 2; 3 4`, `[[1,2],[3,4]]` or one row per line.
/// Entries are separated by whitespace or commas; `#` starts a comment.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let text: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let squeezed: String = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
    let nested = squeezed.contains("[[");

    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut row: Vec<i64> = Vec::new();
    let mut tok = String::new();
    let mut depth = 0usize;

    fn flush(tok: &mut String, row: &mut Vec<i64>) -> Result<()> {
        if !tok.is_empty() {
            let x = tok.parse::<i64>().with_context(|| format!("bad matrix entry {:?}", tok))?;
            row.push(x);
            tok.clear();
        }
        Ok(())
    }
    fn end_row(row: &mut Vec<i64>, rows: &mut Vec<Vec<i64>>) {
        if !row.is_empty() {
            rows.push(std::mem::take(row));
        }
    }

    for c in text.chars() {
        match c {
            '[' => {
                flush(&mut tok, &mut row)?;
                depth += 1;
            }
            ']' => {
                flush(&mut tok, &mut row)?;
                if depth == 0 {
                    bail!("unbalanced ']' in matrix");
                }
                depth -= 1;
                if !nested || depth == 1 {
                    end_row(&mut row, &mut rows);
                }
            }
            ';' | '\n' if !nested => {
                flush(&mut tok, &mut row)?;
                end_row(&mut row, &mut rows);
            }
            c if c.is_whitespace() || c == ',' || c == ';' => flush(&mut tok, &mut row)?,
            c => tok.push(c),
        }
    }
    flush(&mut tok, &mut row)?;
    end_row(&mut row, &mut rows);
    if depth != 0 {
        bail!("unbalanced '[' in matrix");
    }
    if rows.is_empty() {
        bail!("empty matrix");
    }
    let width = rows[0].len();
    if let Some(r) = rows.iter().find(|r| r.len() != width) {
        bail!("ragged matrix: rows of length {} and {}", width, r.len());
    }
    Ok(rows)
}

/// The lattice named by exactly one of `--matrix A` (`L = ker A`) or
/// `--lattice-basis B` (`L` spanned by the columns of the `n × m` matrix `B`).
pub fn lattice(matrix: Option<&str>, basis: Option<&str>) -> Result<Lattice> {
    match (matrix, basis) {
        (Some(a), None) => {
            let a = IntMatrix::from_rows(&read_matrix(a)?)?;
            Ok(Lattice::from_defining_matrix(a)?)
        }
        (None, Some(b)) => {
            let b = IntMatrix::from_rows(&read_matrix(b)?)?;
            Ok(Lattice::from_generators(b)?)
        }
        (None, None) => bail!("give the lattice with --matrix or --lattice-basis"),
        (Some(_), Some(_)) => bail!("--matrix and --lattice-basis are mutually exclusive"),
    }
}

/// A weight vector like `111,0,342,1` or `1/2 3 0`.
pub fn parse_weight(s: &str, n: usize) -> Result<RatVec> {
    let parts: Vec<BigRational> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| BigRational::from_str(t).with_context(|| format!("bad weight entry {:?}", t)))
        .collect::<Result<_>>()?;
    if parts.len() != n {
        bail!("weight has {} entries, lattice lives in Z^{}", parts.len(), n);
    }
    Ok(RatVec(parts))
}

/// Degrees `b` as `0..60` / `0..=60` (one-row `A` only) or as vectors
/// separated by `;`, e.g. `3,1; 4,2`.
pub fn parse_degrees(s: &str, rows: usize) -> Result<Vec<Vec<i64>>> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        if rows != 1 {
            bail!("a degree range needs a one-row matrix, this one has {} rows", rows);
        }
        let (hi, inclusive) = match hi.strip_prefix('=') {
            Some(h) => (h, true),
            None => (hi, false),
        };
        let lo: i64 = lo.trim().parse().context("bad range start")?;
        let hi: i64 = hi.trim().parse().context("bad range end")?;
        let hi = if inclusive { hi } else { hi - 1 };
        return Ok((lo..=hi).map(|b| vec![b]).collect());
    }
    let mut out = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let b: Vec<i64> = part
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().with_context(|| format!("bad degree entry {:?}", t)))
            .collect::<Result<_>>()?;
        if b.len() != rows {
            bail!("degree {:?} has {} entries, expected {}", part, b.len(), rows);
        }
        out.push(b);
    }
    if out.is_empty() {
        bail!("no degrees given");
    }
    Ok(out)
}

pub fn parse_monomial_ideal(s: &str, n: usize) -> Result<MonomialIdeal> {
    Ok(parse_ideal(n, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_forms() {
        let want = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(parse_matrix("[1 2; 3 4]").unwrap(), want);
        assert_eq!(parse_matrix("[[1, 2], [3, 4]]").unwrap(), want);
        assert_eq!(parse_matrix("1 2\n3 4\n").unwrap(), want);
        assert_eq!(parse_matrix("# B\n1,2 # first\n\n3,4").unwrap(), want);
        assert_eq!(parse_matrix("[1 2 3]").unwrap(), vec![vec![1, 2, 3]]);
        assert_eq!(parse_matrix("[-4 -3]\n[9 -6]").unwrap(), vec![vec![-4, -3], vec![9, -6]]);
    }

    #[test]
    fn matrix_errors() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("[1 2").is_err());
        assert!(parse_matrix("1 2; 3").is_err());
        assert!(parse_matrix("1 x").is_err());
    }

    #[test]
    fn weights_and_degrees() {
        let w = parse_weight("1/2, 3 0", 3).unwrap();
        assert_eq!(w.0[0], BigRational::new(1.into(), 2.into()));
        assert!(parse_weight("1,2", 3).is_err());
        assert_eq!(parse_degrees("0..3", 1).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(parse_degrees("0..=2", 1).unwrap().len(), 3);
        assert_eq!(parse_degrees("1,2; 3,4", 2).unwrap(), vec![vec![1, 2], vec![3, 4]]);
        assert!(parse_degrees("0..3", 2).is_err());
    }

    #[test]
    fn zero_basis_is_rank_zero() {
        let l = lattice(None, Some("0; 0; 0")).unwrap();
        assert_eq!((l.ambient_dim(), l.rank()), (3, 0));
    }
}
