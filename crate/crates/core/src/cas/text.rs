//! Plain-text dump of polynomial lists: one polynomial per line, variables
//! `x1..xN`, lines starting with `#` are comments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{default_names, Polynomial, TermOrder};
use crate::error::{Error, Result};

pub fn dump(polys: &[Polynomial], nvars: usize, comments: &[String]) -> String {
    let names = default_names(nvars);
    let mut s = String::new();
    for c in comments {
        s.push_str("# ");
        s.push_str(c);
        s.push('\n');
    }
    for p in polys {
        s.push_str(&p.format_with(&names, TermOrder::Lex));
        s.push('\n');
    }
    s
}

/// Parse a dump back; `nvars` fixes the ambient ring.
pub fn parse(text: &str, nvars: usize) -> Result<Vec<Polynomial>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_polynomial(l, nvars))
        .collect()
}

pub fn parse_polynomial(line: &str, nvars: usize) -> Result<Polynomial> {
    let err = |m: &str| Error::Parse(format!("{m} in {line:?}"));
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(Polynomial::zero(nvars));
    }
    let mut p = Polynomial::zero(nvars);
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(err("dangling sign"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err("empty term"));
    }
    chunks.push((neg, cur));
    for (neg, term) in chunks {
        let mut coef = BigRational::one();
        let mut exps = vec![0u32; nvars];
        for f in term.split('*') {
            if let Some(rest) = f.strip_prefix('x') {
                let (idx, e) = match rest.split_once('^') {
                    Some((a, b)) => (a, b.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (rest, 1),
                };
                let k: usize = idx.parse().map_err(|_| err("bad variable"))?;
                if k == 0 || k > nvars {
                    return Err(err("variable out of range"));
                }
                exps[k - 1] += e;
            } else {
                let (a, b) = f.split_once('/').unwrap_or((f, "1"));
                let a: BigInt = a.parse().map_err(|_| err("bad coefficient"))?;
                let b: BigInt = b.parse().map_err(|_| err("bad coefficient"))?;
                if b == BigInt::from(0) {
                    return Err(err("zero denominator"));
                }
                coef *= BigRational::new(a, b);
            }
        }
        if neg {
            coef = -coef;
        }
        p.add_term(exps, coef);
    }
    Ok(p)
}
