//! Element expressions such as `1-2x`, `x^2-x±1` or `3x±3`.
//!
//! Field elements are polynomials in `x` with integer coefficients, reduced on
//! evaluation. Cyclic-group elements are plain integers. Each `±` doubles the
//! expression: `2±x` stands for both `2+x` and `2-x`.

use crate::groups::{Element, Group};

use super::ConstructionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sign {
    Plus,
    Minus,
    Both,
}

struct Term {
    sign: Sign,
    coeff: i64,
    power: usize,
}

fn parse_terms(src: &str) -> Result<Vec<Term>, String> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty expression".into());
    }
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let sign = match chars[i] {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            '±' => Some(Sign::Both),
            _ => None,
        };
        let sign = match sign {
            Some(s) => {
                i += 1;
                s
            }
            None if terms.is_empty() => Sign::Plus,
            None => return Err(format!("expected a sign at {:?}", chars[i..].iter().collect::<String>())),
        };
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let digits: String = chars[start..i].iter().collect();
        let mut power = 0;
        if i < chars.len() && chars[i] == 'x' {
            i += 1;
            power = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let ps = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let p: String = chars[ps..i].iter().collect();
                power = p.parse().map_err(|_| format!("bad exponent in {src:?}"))?;
            }
        } else if digits.is_empty() {
            return Err(format!("missing term in {src:?}"));
        }
        let coeff =
            if digits.is_empty() { 1 } else { digits.parse().map_err(|_| format!("bad coefficient {digits:?}"))? };
        terms.push(Term { sign, coeff, power });
    }
    Ok(terms)
}

/// Every element an expression denotes, in `±`-expansion order (`+` choices first).
pub fn expand(group: &Group, src: &str) -> Result<Vec<Element>, ConstructionError> {
    let bad = |message: String| ConstructionError::Expression { expr: src.to_string(), message };
    let terms = parse_terms(src).map_err(bad)?;
    let free: Vec<usize> = terms.iter().enumerate().filter(|(_, t)| t.sign == Sign::Both).map(|(i, _)| i).collect();
    let field = group.field_params();
    let degree = terms.iter().map(|t| t.power).max().unwrap_or(0);
    if field.is_none() && degree > 0 {
        return Err(bad("x is not defined in a cyclic group".into()));
    }
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..1u32 << free.len() {
        let mut coeffs = vec![0i64; degree + 1];
        for (i, t) in terms.iter().enumerate() {
            let negative = match t.sign {
                Sign::Plus => false,
                Sign::Minus => true,
                Sign::Both => mask >> free.iter().position(|&f| f == i).unwrap() & 1 == 1,
            };
            coeffs[t.power] += if negative { -t.coeff } else { t.coeff };
        }
        let e = match field {
            Some(_) => group.from_coefficients(&coeffs)?,
            None => {
                let n = group.order() as i64;
                Element(coeffs[0].rem_euclid(n) as u32)
            }
        };
        out.push(e);
    }
    Ok(out)
}

/// Expands a comma-separated list of expressions.
pub fn expand_list(group: &Group, src: &str) -> Result<Vec<Element>, ConstructionError> {
    let mut out = Vec::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.extend(expand(group, item)?);
    }
    Ok(out)
}
