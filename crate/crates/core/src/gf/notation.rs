//! Text notation for polynomials and field elements.
//!
//! Polynomials: `a0 + a1*x + ... + x^m` or a coefficient list `[a0,a1,...,1]`,
//! both low degree first. Elements: coefficient lists or `a^k` with `a^inf = 0`.

use crate::error::{Error, Result};
use crate::gf::field::{Field, FieldElem};

/// Parses prime-field polynomial coefficients, low degree first.
pub fn parse_poly_coeffs(text: &str, p: u32) -> Result<Vec<u32>> {
    let t = text.trim();
    if t.starts_with('[') {
        return parse_list(t, p);
    }
    let mut coeffs: Vec<u32> = Vec::new();
    for term in t.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in '{text}'")));
        }
        let (coef, power) = parse_term(term)?;
        if power >= coeffs.len() {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = ((coeffs[power] as u64 + coef) % p as u64) as u32;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

fn parse_term(term: &str) -> Result<(u64, usize)> {
    let bad = || Error::Parse(format!("bad polynomial term '{term}'"));
    let (coef, mono) = match term.split_once('*') {
        Some((c, m)) => (c.trim().parse::<u64>().map_err(|_| bad())?, Some(m.trim())),
        None if term.contains('x') => (1, Some(term)),
        None => (term.parse::<u64>().map_err(|_| bad())?, None),
    };
    let power = match mono {
        None => 0,
        Some("x") => 1,
        Some(m) => m
            .strip_prefix("x^")
            .ok_or_else(bad)?
            .trim()
            .parse::<usize>()
            .map_err(|_| bad())?,
    };
    Ok((coef, power))
}

fn parse_list(t: &str, p: u32) -> Result<Vec<u32>> {
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("unterminated list '{t}'")))?;
    let mut out = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: u64 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient '{part}'")))?;
        if v >= p as u64 {
            return Err(Error::Parse(format!("coefficient {v} not reduced mod {p}")));
        }
        out.push(v as u32);
    }
    Ok(out)
}

/// Parses `a^k`, `a^inf`, `a`, `0`, `1` or a coefficient list.
pub fn parse_elem(field: &Field, text: &str) -> Result<FieldElem> {
    let t = text.trim();
    if t.starts_with('[') {
        return field.from_coeffs(&parse_list(t, field.p())?);
    }
    match t {
        "0" | "a^inf" => return Ok(field.zero()),
        "1" => return Ok(field.one()),
        "a" => return Ok(field.primitive_element()),
        _ => {}
    }
    if let Some(k) = t.strip_prefix("a^") {
        let k: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in '{t}'")))?;
        return Ok(field.alpha_pow(k));
    }
    Err(Error::Parse(format!("unrecognised element '{t}'")))
}

/// `a^k` form, `a^inf` for zero.
pub fn format_exp(x: &FieldElem) -> String {
    match x.log() {
        None => "a^inf".into(),
        Some(k) => format!("a^{k}"),
    }
}

pub fn format_list(coeffs: &[u32]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_polys() {
        assert_eq!(parse_poly_coeffs("1 + x + x^2", 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly_coeffs("2 + 1*x + x^2", 3).unwrap(), vec![2, 1, 1]);
        assert_eq!(parse_poly_coeffs("[1,1,0,1]", 2).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(parse_poly_coeffs("x^3 + x + 1", 2).unwrap(), vec![1, 1, 0, 1]);
        assert!(parse_poly_coeffs("[1,2]", 2).is_err());
        assert!(parse_poly_coeffs("1 + y", 2).is_err());
    }

    #[test]
    fn parse_elems() {
        let f = Field::new(2, 2, None).unwrap();
        assert_eq!(parse_elem(&f, "a^1").unwrap().coeffs(), vec![0, 1]);
        assert_eq!(parse_elem(&f, "a^2").unwrap().coeffs(), vec![1, 1]);
        assert!(parse_elem(&f, "a^inf").unwrap().is_zero());
        assert_eq!(parse_elem(&f, "[1,1]").unwrap(), f.alpha_pow(2));
        assert!(parse_elem(&f, "b^2").is_err());
        for x in f.elements() {
            assert_eq!(parse_elem(&f, &format_exp(&x)).unwrap(), x);
            assert_eq!(parse_elem(&f, &format_list(&x.coeffs())).unwrap(), x);
        }
    }
}
