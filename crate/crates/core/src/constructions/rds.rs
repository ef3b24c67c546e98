use std::fmt;

use thiserror::Error;

use crate::groups::gcd;

/// Parameters `(m, n, k, λ)` of a relative difference set in `Z_{mn}` relative to
/// its subgroup of order `n`. They satisfy `k(k − 1) = λ n (m − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RdsParams {
    pub m: u64,
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
}

impl RdsParams {
    pub fn satisfies_counting_identity(&self) -> bool {
        self.k * self.k.saturating_sub(1) == self.lambda * self.n * self.m.saturating_sub(1)
    }
}

impl fmt::Display for RdsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.n, self.k, self.lambda)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdsFailure {
    #[error("forbidden subgroup order {order} does not divide {modulus}")]
    NotDivisor { order: u64, modulus: u64 },
    #[error("residue {residue} is not below the modulus {modulus}")]
    OutOfRange { residue: u64, modulus: u64 },
    #[error("residue {0} is repeated")]
    Duplicate(u64),
    #[error("residue {residue} lies in the forbidden subgroup but occurs {count} times as a difference")]
    ForbiddenHit { residue: u64, count: u64 },
    #[error("residue {residue} occurs {count} times as a difference, expected {expected}")]
    Uneven { residue: u64, count: u64, expected: u64 },
    #[error("residues with no differences, {0:?}, do not form a subgroup")]
    NotSubgroup(Vec<u64>),
}

fn difference_counts(set: &[u64], modulus: u64) -> Result<Vec<u64>, RdsFailure> {
    let mut seen = vec![false; modulus as usize];
    for &x in set {
        if x >= modulus {
            return Err(RdsFailure::OutOfRange { residue: x, modulus });
        }
        if std::mem::replace(&mut seen[x as usize], true) {
            return Err(RdsFailure::Duplicate(x));
        }
    }
    let mut counts = vec![0u64; modulus as usize];
    for &x in set {
        for &y in set {
            if x != y {
                counts[((x + modulus - y) % modulus) as usize] += 1;
            }
        }
    }
    Ok(counts)
}

/// Checks that `set ⊆ Z_modulus` is a relative difference set with respect to the
/// subgroup of order `forbidden_order`: nonzero subgroup elements never occur as a
/// difference and every other nonzero residue occurs equally often.
pub fn rds_check(set: &[u64], modulus: u64, forbidden_order: u64) -> Result<RdsParams, RdsFailure> {
    if forbidden_order == 0 || !modulus.is_multiple_of(forbidden_order) {
        return Err(RdsFailure::NotDivisor { order: forbidden_order, modulus });
    }
    let counts = difference_counts(set, modulus)?;
    let step = modulus / forbidden_order;
    let mut lambda = None;
    for (r, &c) in counts.iter().enumerate().skip(1) {
        let r = r as u64;
        if r.is_multiple_of(step) {
            if c != 0 {
                return Err(RdsFailure::ForbiddenHit { residue: r, count: c });
            }
        } else {
            match lambda {
                None => lambda = Some(c),
                Some(l) if l != c => return Err(RdsFailure::Uneven { residue: r, count: c, expected: l }),
                Some(_) => {}
            }
        }
    }
    Ok(RdsParams { m: step, n: forbidden_order, k: set.len() as u64, lambda: lambda.unwrap_or(0) })
}

/// Infers the forbidden subgroup from the residues that never occur as a
/// difference, then runs [`rds_check`] against it.
pub fn rds_parameters(set: &[u64], modulus: u64) -> Result<RdsParams, RdsFailure> {
    let counts = difference_counts(set, modulus)?;
    let missing: Vec<u64> = (1..modulus).filter(|&r| counts[r as usize] == 0).collect();
    let step = missing.iter().fold(modulus, |g, &r| gcd(g, r));
    let expected: Vec<u64> = (1..modulus / step).map(|i| i * step).collect();
    if missing != expected {
        return Err(RdsFailure::NotSubgroup(missing));
    }
    rds_check(set, modulus, modulus / step)
}
