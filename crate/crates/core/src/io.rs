//! Text formats: arrangements, covector sets, chirotopes.
//!
//! All three formats are line-oriented with `#` comments. Rationals are
//! written `p/q` or as plain integers and parse back bit-exactly.

use std::str::FromStr;

use num::BigRational;

use crate::chirotope::{sorted_tuples, Chirotope};
use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, Rat, RationalArrangement};
use crate::matroid::CovectorSet;
use crate::sign::{Sign, SignVector};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines with comments stripped, keeping 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| {
            let body = match l.find('#') {
                Some(p) => &l[..p],
                None => l,
            };
            (i + 1, body.trim())
        })
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_rat(tok: &str, line: usize) -> Result<Rat> {
    BigRational::from_str(tok).map_err(|e| parse_err(line, format!("bad rational {tok:?}: {e}")))
}

/// Format a rational as `p/q`, or `p` when integral.
pub fn format_rat(r: &Rat) -> String {
    if num::One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Arrangement file: `d=<int>`, then one hyperplane per line,
/// `<a1> … <ad> | <b>`.
pub fn parse_arrangement(text: &str) -> Result<RationalArrangement> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty arrangement file"));
    };
    let dim: usize = header
        .strip_prefix("d=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| parse_err(hline, format!("expected 'd=<int>', got {header:?}")))?;
    let mut hyperplanes = Vec::new();
    for &(ln, body) in &lines[1..] {
        let Some((lhs, rhs)) = body.split_once('|') else {
            return Err(parse_err(ln, "expected '<coefficients> | <offset>'"));
        };
        let normal: Result<Vec<Rat>> = lhs.split_whitespace().map(|t| parse_rat(t, ln)).collect();
        let normal = normal?;
        if normal.len() != dim {
            return Err(parse_err(
                ln,
                format!("expected {dim} coefficients, got {}", normal.len()),
            ));
        }
        let offset = parse_rat(rhs.trim(), ln)?;
        hyperplanes
            .push(Hyperplane::new(normal, offset).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    if hyperplanes.is_empty() {
        return Err(parse_err(hline, "arrangement has no hyperplanes"));
    }
    RationalArrangement::new(dim, hyperplanes)
}

pub fn format_arrangement(a: &RationalArrangement) -> String {
    let mut out = format!("d={}\n", a.dim());
    for h in a.hyperplanes() {
        let coeffs: Vec<String> = h.normal().iter().map(format_rat).collect();
        out.push_str(&format!(
            "{} | {}\n",
            coeffs.join(" "),
            format_rat(h.offset())
        ));
    }
    out
}

/// Covector file: `n=<int>`, then one sign string per line.
pub fn parse_covectors(text: &str) -> Result<CovectorSet> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty covector file"));
    };
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| parse_err(hline, format!("expected 'n=<int>', got {header:?}")))?;
    let mut vectors = Vec::new();
    for &(ln, body) in &lines[1..] {
        let v: SignVector = body
            .parse()
            .map_err(|_| parse_err(ln, format!("bad sign vector {body:?}")))?;
        if v.len() != n {
            return Err(parse_err(
                ln,
                format!("expected length {n}, got {}", v.len()),
            ));
        }
        vectors.push(v);
    }
    CovectorSet::new(n, vectors)
}

pub fn format_covectors(set: &CovectorSet) -> String {
    let mut out = format!("n={}\n", set.ground_size());
    for v in set.vectors() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// Chirotope file: `m=<int> r=<int>`, then one line of `C(m,r)` sign
/// characters in lexicographic sorted-tuple order.
pub fn parse_chirotope(text: &str) -> Result<Chirotope> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty chirotope file"));
    };
    let mut m = None;
    let mut r = None;
    for tok in header.split_whitespace() {
        if let Some(v) = tok.strip_prefix("m=") {
            m = v.parse::<usize>().ok();
        } else if let Some(v) = tok.strip_prefix("r=") {
            r = v.parse::<usize>().ok();
        }
    }
    let (m, r) = match (m, r) {
        (Some(m), Some(r)) => (m, r),
        _ => {
            return Err(parse_err(
                hline,
                format!("expected 'm=<int> r=<int>', got {header:?}"),
            ))
        }
    };
    let Some(&(ln, body)) = lines.get(1) else {
        return Err(parse_err(hline, "missing sign line"));
    };
    let signs: Option<Vec<i8>> = body
        .chars()
        .map(|c| Sign::from_char(c).map(Sign::to_i8))
        .collect();
    let signs = signs.ok_or_else(|| parse_err(ln, "invalid sign character"))?;
    Chirotope::new(m, r, signs).map_err(|e| parse_err(ln, e.to_string()))
}

pub fn format_chirotope(chi: &Chirotope) -> String {
    let s: String = chi
        .signs()
        .iter()
        .map(|&v| Sign::from_i8(v).to_char())
        .collect();
    format!("m={} r={}\n{}\n", chi.ground_size(), chi.rank(), s)
}

/// Tuple order legend for chirotope files (handy in comments).
pub fn chirotope_tuple_legend(m: usize, r: usize) -> String {
    let ts = sorted_tuples(m, r);
    let names: Vec<String> = ts
        .iter()
        .map(|t| t.iter().map(|e| (e + 1).to_string()).collect::<String>())
        .collect();
    names.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    #[test]
    fn arrangement_round_trip() {
        let text = "# two lines\nd=2\n1 0 | 0\n1/2 -3 | 7/5\n";
        let a = parse_arrangement(text).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.len(), 2);
        assert_eq!(a.hyperplanes()[1].offset(), &ratio(7, 5));
        let emitted = format_arrangement(&a);
        let b = parse_arrangement(&emitted).unwrap();
        assert_eq!(format_arrangement(&b), emitted);
    }

    #[test]
    fn covector_round_trip() {
        let text = "n=3\n000\n+-0\n-+0\n";
        let v = parse_covectors(text).unwrap();
        assert_eq!(v.len(), 3);
        let emitted = format_covectors(&v);
        assert_eq!(parse_covectors(&emitted).unwrap().vectors(), v.vectors());
    }

    #[test]
    fn chirotope_round_trip() {
        let text = "m=4 r=2\n++0-++\n";
        let chi = parse_chirotope(text).unwrap();
        assert_eq!(chi.ground_size(), 4);
        assert_eq!(chi.rank(), 2);
        let emitted = format_chirotope(&chi);
        assert_eq!(parse_chirotope(&emitted).unwrap().signs(), chi.signs());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "d=2\n1 0 | 0\n1 oops | 3\n";
        match parse_arrangement(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad = "n=2\n+-\n+-0\n";
        match parse_covectors(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
