//! Dense polynomials over a prime field `Z_p`, coefficients stored constant term first.

use std::fmt::Write;

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u32> = a.iter().map(|c| c % p).collect();
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Product of `a` and `b` reduced modulo the monic `m`.
pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    rem_monic(&prod, m, p)
}

/// Searches for a monic factor of degree `1..=deg/2`. `None` means `m` is irreducible.
pub(crate) fn find_factor(m: &[u32], p: u32) -> Option<Vec<u32>> {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if trim(rem_monic(m, &f, p)).is_empty() {
                return Some(f);
            }
        }
    }
    None
}

/// Renders a polynomial as e.g. `x^2 + 3x + 1`.
pub(crate) fn format_poly(a: &[u32]) -> String {
    let mut out = String::new();
    for (i, &c) in a.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match (i, c) {
            (0, _) => write!(out, "{c}").unwrap(),
            (1, 1) => out.push('x'),
            (1, _) => write!(out, "{c}x").unwrap(),
            (_, 1) => write!(out, "x^{i}").unwrap(),
            _ => write!(out, "{c}x^{i}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
