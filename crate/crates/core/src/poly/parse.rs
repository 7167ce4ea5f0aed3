use super::Poly2;
use crate::error::{Error, Result};

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

pub(super) fn parse(input: &str) -> Result<Poly2> {
    let lead = input.len() - input.trim_start().len();
    let s = input.trim();
    if s.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    if s.starts_with('[') {
        parse_exponent_list(s, lead)
    } else if s.bytes().all(|b| b == b'0' || b == b'1') {
        Ok(Poly2::from_bits(
            &s.bytes().map(|b| b == b'1').collect::<Vec<_>>(),
        ))
    } else {
        parse_algebraic(s, lead)
    }
}

fn parse_exponent_list(s: &str, offset: usize) -> Result<Poly2> {
    if !s.ends_with(']') {
        return Err(err(offset + s.len(), "expected ']'"));
    }
    let body = &s[1..s.len() - 1];
    let mut exps = Vec::new();
    if body.trim().is_empty() {
        return Ok(Poly2::zero());
    }
    let mut pos = offset + 1;
    for item in body.split(',') {
        let t = item.trim();
        let at = pos + (item.len() - item.trim_start().len());
        let e: usize = t
            .parse()
            .map_err(|_| err(at, format!("invalid exponent '{t}'")))?;
        if exps.contains(&e) {
            return Err(err(at, format!("duplicate exponent {e}")));
        }
        exps.push(e);
        pos += item.len() + 1;
    }
    Ok(Poly2::from_exponents(&exps))
}

/// Sums of `1`, `x` and `x^k` terms separated by `+`.
fn parse_algebraic(s: &str, offset: usize) -> Result<Poly2> {
    let mut exps = Vec::new();
    let mut pos = offset;
    for term in s.split('+') {
        let t = term.trim();
        let at = pos + (term.len() - term.trim_start().len());
        let e = match t {
            "1" => 0,
            "x" => 1,
            _ => {
                let rest = t
                    .strip_prefix("x^")
                    .ok_or_else(|| err(at, format!("unexpected term '{t}'")))?;
                rest.parse::<usize>()
                    .map_err(|_| err(at + 2, format!("invalid exponent '{rest}'")))?
            }
        };
        if exps.contains(&e) {
            return Err(err(at, format!("duplicate term x^{e}")));
        }
        exps.push(e);
        pos += term.len() + 1;
    }
    Ok(Poly2::from_exponents(&exps))
}
