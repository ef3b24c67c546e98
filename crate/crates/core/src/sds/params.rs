use std::fmt;
use std::str::FromStr;

use super::SdsError;

/// Parameters `(n; k_1, ..., k_m; λ)` of an SDS.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdsParams {
    pub n: usize,
    pub k: Vec<usize>,
    pub lambda: i64,
}

impl SdsParams {
    /// Parameters with λ fixed by `λ = Σk_i − n`.
    pub fn from_sizes(n: usize, k: &[usize]) -> SdsParams {
        let lambda = k.iter().sum::<usize>() as i64 - n as i64;
        SdsParams { n, k: k.to_vec(), lambda }
    }

    /// Row sums `a_i = n − 2k_i` of the ±1 matrices of the blocks.
    pub fn row_sums(&self) -> Vec<i64> {
        self.k.iter().map(|&k| self.n as i64 - 2 * k as i64).collect()
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.row_sums().iter().map(|a| a * a).sum()
    }

    /// `λ = Σk_i − n`, the condition under which the blocks feed a Hadamard matrix.
    pub fn lambda_matches_sizes(&self) -> bool {
        self.lambda == self.k.iter().sum::<usize>() as i64 - self.n as i64
    }
}

impl fmt::Display for SdsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.k.iter().map(usize::to_string).collect();
        write!(f, "({};{};{})", self.n, ks.join(","), self.lambda)
    }
}

impl FromStr for SdsParams {
    type Err = SdsError;

    /// Accepts `(n;k1,k2,...;λ)`, parentheses optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SdsError::Parse(format!("cannot parse parameters {s:?}"));
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = body.split(';');
        let (Some(n), Some(k), Some(l), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let n = n.trim().parse().map_err(|_| bad())?;
        let k = k.split(',').map(|x| x.trim().parse()).collect::<Result<Vec<usize>, _>>().map_err(|_| bad())?;
        let lambda = l.trim().parse().map_err(|_| bad())?;
        Ok(SdsParams { n, k, lambda })
    }
}

/// One letter of a symmetry type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymLabel {
    /// `s`: the block must be symmetric.
    Symmetric,
    /// `k`: the block must be skew.
    Skew,
    /// `*`: no condition.
    Free,
}

impl SymLabel {
    pub fn letter(self) -> char {
        match self {
            SymLabel::Symmetric => 's',
            SymLabel::Skew => 'k',
            SymLabel::Free => '*',
        }
    }
}

/// A word over `{s, k, *}`, one letter per block, e.g. `ks**`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryType(pub Vec<SymLabel>);

impl SymmetryType {
    pub fn labels(&self) -> &[SymLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn skew_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == SymLabel::Skew).count()
    }

    /// The unconstrained type of the given length.
    pub fn free(len: usize) -> SymmetryType {
        SymmetryType(vec![SymLabel::Free; len])
    }

    /// True if every letter of `self` is implied by the matching letter of `detected`.
    pub fn is_satisfied_by(&self, detected: &SymmetryType) -> bool {
        self.len() == detected.len()
            && self.0.iter().zip(&detected.0).all(|(&want, &have)| want == SymLabel::Free || want == have)
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.letter()))
    }
}

impl FromStr for SymmetryType {
    type Err = SdsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let labels = s
            .chars()
            .map(|c| match c {
                's' => Ok(SymLabel::Symmetric),
                'k' => Ok(SymLabel::Skew),
                '*' | '∗' => Ok(SymLabel::Free),
                other => Err(SdsError::Parse(format!("bad symmetry letter {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.is_empty() {
            return Err(SdsError::Parse("empty symmetry type".into()));
        }
        Ok(SymmetryType(labels))
    }
}

/// All feasible 4-block parameter sets for odd `n ≥ 3`.
///
/// Rows satisfy `k_1 ≥ k_2 ≥ k_3 ≥ k_4`, `2k_1 < n`, `Σ(n − 2k_i)^2 = 4n` and
/// `λ = Σk_i − n ≥ 0`. They are listed in the customary tabular order: by the
/// row-sum vector `(a_4, a_3, a_2, a_1)` in decreasing lexicographic order.
pub fn feasible_params(n: usize) -> Result<Vec<SdsParams>, SdsError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(SdsError::InvalidOrder(n));
    }
    let target = 4 * n;
    let odd_upto = |bound: usize| (1..).step_by(2).take_while(move |a: &usize| a * a <= bound);
    let mut rows = Vec::new();
    for a1 in odd_upto(target) {
        for a2 in odd_upto(target).filter(|&a| a >= a1) {
            for a3 in odd_upto(target).filter(|&a| a >= a2) {
                let used = a1 * a1 + a2 * a2 + a3 * a3;
                if used >= target {
                    continue;
                }
                let rest = target - used;
                let a4 = rest.isqrt();
                if a4 * a4 != rest || a4 < a3 || a4 > n {
                    continue;
                }
                let k: Vec<usize> = [a1, a2, a3, a4].iter().map(|a| (n - a) / 2).collect();
                let params = SdsParams::from_sizes(n, &k);
                if params.lambda >= 0 {
                    rows.push(params);
                }
            }
        }
    }
    rows.sort_by(|x, y| {
        let rx: Vec<i64> = x.row_sums().into_iter().rev().collect();
        let ry: Vec<i64> = y.row_sums().into_iter().rev().collect();
        ry.cmp(&rx)
    });
    Ok(rows)
}

/// Whether the block sizes can be arranged so every `k` position holds a skew-sized
/// block, i.e. one with `k_i = (n − 1)/2`.
pub fn type_compatible(params: &SdsParams, ty: &SymmetryType) -> bool {
    if params.k.len() != ty.len() {
        return false;
    }
    let skew_needed = ty.skew_count();
    if skew_needed == 0 {
        return true;
    }
    if params.n.is_multiple_of(2) {
        return false;
    }
    let skew_size = (params.n - 1) / 2;
    params.k.iter().filter(|&&k| k == skew_size).count() >= skew_needed
}
