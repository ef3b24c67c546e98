use crate::sds::{Block, SdsFamily};

use super::{char_matrix, r_matrix, IntMatrix, MatrixError, SignMatrix};

/// Assembles the order-`4n` matrix
///
/// ```text
/// [  U    XR    YR    ZR  ]
/// [ -XR   U    -ZᵀR   YᵀR ]
/// [ -YR   ZᵀR   U    -XᵀR ]
/// [ -ZR  -YᵀR   XᵀR   U   ]
/// ```
///
/// from `[U, X, Y, Z]` and the permutation `R`.
pub fn goethals_seidel(blocks: [&SignMatrix; 4], r: &IntMatrix) -> Result<SignMatrix, MatrixError> {
    let n = r.order();
    for m in blocks {
        if m.order() != n {
            return Err(MatrixError::SizeMismatch { expected: n, found: m.order() });
        }
    }
    let [u, x, y, z] = blocks.map(SignMatrix::as_int);
    let xr = x * r;
    let yr = y * r;
    let zr = z * r;
    let xtr = &x.transpose() * r;
    let ytr = &y.transpose() * r;
    let ztr = &z.transpose() * r;
    let grid: [[(&IntMatrix, i32); 4]; 4] = [
        [(u, 1), (&xr, 1), (&yr, 1), (&zr, 1)],
        [(&xr, -1), (u, 1), (&ztr, -1), (&ytr, 1)],
        [(&yr, -1), (&ztr, 1), (u, 1), (&xtr, -1)],
        [(&zr, -1), (&ytr, -1), (&xtr, 1), (u, 1)],
    ];
    let h = IntMatrix::from_fn(4 * n, |i, j| {
        let (m, sign) = grid[i / n][j / n];
        sign * m.get(i % n, j % n)
    });
    SignMatrix::try_from(h)
}

/// The array applied to the ±1 matrices of a four-block family.
pub fn family_hadamard(family: &SdsFamily) -> Result<SignMatrix, MatrixError> {
    let [a, b, c, d] = family.blocks() else {
        return Err(MatrixError::BlockCount(family.blocks().len()));
    };
    let ms = [a, b, c, d].map(char_matrix);
    goethals_seidel([&ms[0], &ms[1], &ms[2], &ms[3]], &r_matrix(family.group()))
}

/// `H Hᵀ = order · I`, exactly.
pub fn is_hadamard(h: &SignMatrix) -> bool {
    let n = h.order();
    let m = h.as_int();
    let gram = m.mul_transpose(m);
    gram == IntMatrix::identity(n).scaled(n as i32)
}

/// `H + Hᵀ = 2I`.
pub fn is_skew_type(h: &SignMatrix) -> bool {
    let m = h.as_int();
    (0..h.order()).all(|i| (0..=i).all(|j| m.get(i, j) + m.get(j, i) == if i == j { 2 } else { 0 }))
}

/// `X Yᵀ = Y Xᵀ`.
pub fn amicable(x: &IntMatrix, y: &IntMatrix) -> bool {
    x.order() == y.order() && x.mul_transpose(y) == y.mul_transpose(x)
}

/// `X Y = Y X`.
pub fn commute(x: &IntMatrix, y: &IntMatrix) -> bool {
    x.order() == y.order() && x * y == y * x
}

/// `Σ (A_iᶜ)ᵀ A_iᶜ` over the blocks' ±1 matrices.
pub fn gram_sum(blocks: &[Block]) -> IntMatrix {
    let n = blocks.first().map_or(0, |b| b.group().order());
    let mut acc = IntMatrix::zeros(n);
    for b in blocks {
        let t = char_matrix(b).as_int().transpose();
        acc = &acc + &t.mul_transpose(&t);
    }
    acc
}

/// Whether the blocks' ±1 matrices satisfy `Σ (A_iᶜ)ᵀ A_iᶜ = 4n I`.
pub fn satisfies_gram_identity(blocks: &[Block]) -> bool {
    let n = blocks.first().map_or(0, |b| b.group().order());
    gram_sum(blocks) == IntMatrix::identity(n).scaled(4 * n as i32)
}
