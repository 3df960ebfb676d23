//! Exact rational matrix algebra: the Pascal and reciprocal Pascal
//! matrices, the diagonal `G` factors, Gauss-Jordan inversion, and the
//! verifiers for the factorization `Q = G_{p,q} R G_{p,p-q}`, the
//! Hadamard-inverse integrality theorem and the involution `L^2 = I`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{binom_integer, is_integral, ExactFraction, Params};
use crate::report::Verification;
use crate::sequences::{self, extended_entry};
use crate::{Error, Result};

/// Dense matrix of exact fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactFraction>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExactFraction) -> Self {
        let mut m = ExactMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.get_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactFraction {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut ExactFraction {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// True when every entry has denominator 1.
    pub fn is_integer_matrix(&self) -> bool {
        self.data.iter().all(is_integral)
    }

    fn mul_row(&self, other: &ExactMatrix, i: usize) -> Vec<ExactFraction> {
        (0..other.cols)
            .map(|j| {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Exact matrix product, sequential.
pub fn matrix_mul_seq(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let data = (0..a.rows).flat_map(|i| a.mul_row(b, i)).collect();
    Ok(ExactMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

/// Exact matrix product; output rows are computed in parallel when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn matrix_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    use rayon::prelude::*;
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let data = (0..a.rows)
        .into_par_iter()
        .flat_map_iter(|i| a.mul_row(b, i))
        .collect();
    Ok(ExactMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

#[cfg(not(feature = "parallel"))]
pub fn matrix_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    matrix_mul_seq(a, b)
}

/// Exact inverse by Gauss-Jordan elimination with first-nonzero-pivot row
/// swaps. Exact arithmetic needs no pivoting heuristics.
pub fn matrix_inverse(a: &ExactMatrix) -> Result<ExactMatrix> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let mut work = a.clone();
    let mut inv = ExactMatrix::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !work.get(r, col).is_zero())
            .ok_or(Error::SingularMatrix)?;
        if pivot_row != col {
            for j in 0..n {
                work.data.swap(pivot_row * n + j, col * n + j);
                inv.data.swap(pivot_row * n + j, col * n + j);
            }
        }
        let pivot = work.get(col, col).clone();
        for j in 0..n {
            *work.get_mut(col, j) /= &pivot;
            *inv.get_mut(col, j) /= &pivot;
        }
        for r in 0..n {
            if r == col || work.get(r, col).is_zero() {
                continue;
            }
            let factor = work.get(r, col).clone();
            for j in 0..n {
                let w = work.get(col, j).clone();
                *work.get_mut(r, j) -= &factor * w;
                let v = inv.get(col, j).clone();
                *inv.get_mut(r, j) -= &factor * v;
            }
        }
    }
    Ok(inv)
}

/// The symmetric Pascal matrix `B(i,j) = C(i+j, i)`.
pub fn pascal_matrix(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        BigRational::from(binom_integer((i + j) as i64, i as i64))
    })
}

/// The reciprocal Pascal matrix `R(i,j) = C(i+j, i)^{-1}`.
pub fn reciprocal_pascal(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        BigRational::new(BigInt::one(), binom_integer((i + j) as i64, i as i64))
    })
}

/// Diagonal matrix `G_{p,q}` with `G(i,i) = Q_{p,q}(i, 0)`.
pub fn diag_g(params: Params, n: usize) -> Result<ExactMatrix> {
    let column = sequences::super_patalan_table(params, n, 1)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigRational::from(column.get(i, 0).clone())
        } else {
            BigRational::zero()
        }
    }))
}

/// The super Patalan table as a rational matrix.
pub fn super_patalan_matrix(params: Params, n: usize) -> Result<ExactMatrix> {
    let table = sequences::super_patalan_table(params, n, n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        BigRational::from(table.get(i, j).clone())
    }))
}

/// Entrywise reciprocal of the super Patalan table,
/// `H(i,j) = 1 / Q(i,j)`. Well defined because no table entry vanishes:
/// every recurrence factor `p k - q` with `0 < q < p` is nonzero.
pub fn hadamard_inverse_matrix(params: Params, n: usize) -> Result<ExactMatrix> {
    let table = sequences::super_patalan_table(params, n, n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        BigRational::new(BigInt::one(), table.get(i, j).clone())
    }))
}

/// Lower-triangular involution matrix `L(m,k) = E(m, -k)`; the diagonal is
/// `(-1)^m` and entries above the diagonal vanish.
pub fn involution_matrix(params: Params, n: usize) -> Result<ExactMatrix> {
    let mut m = ExactMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *m.get_mut(i, j) = BigRational::from(extended_entry(params, i as i64, -(j as i64))?);
        }
    }
    Ok(m)
}

/// Checks `Q = G_{p,q} R G_{p,p-q}` entrywise on an `n x n` window.
pub fn verify_factorization(params: Params, n: usize) -> Result<Verification> {
    let q_matrix = super_patalan_matrix(params, n)?;
    let product = matrix_mul(
        &matrix_mul(&diag_g(params, n)?, &reciprocal_pascal(n))?,
        &diag_g(params.complement(), n)?,
    )?;
    for i in 0..n {
        for j in 0..n {
            if q_matrix.get(i, j) != product.get(i, j) {
                return Ok(Verification::fail(
                    "factorization",
                    format!(
                        "cell ({i},{j}): Q = {} but G R G' = {}",
                        q_matrix.get(i, j),
                        product.get(i, j)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass("factorization"))
}

/// Checks that `H^{-1}` is an integer matrix, by direct elimination, and
/// that it equals the factorized route `G_{p,p-q} B^{-1} G_{p,q}`.
pub fn verify_hadamard_inverse_integral(params: Params, n: usize) -> Result<Verification> {
    let h = hadamard_inverse_matrix(params, n)?;
    let h_inv = matrix_inverse(&h)?;
    for i in 0..n {
        for j in 0..n {
            if !is_integral(h_inv.get(i, j)) {
                return Ok(Verification::fail(
                    "hadamard",
                    format!("H^-1 entry ({i},{j}) = {} is not an integer", h_inv.get(i, j)),
                ));
            }
        }
    }
    let b_inv = matrix_inverse(&pascal_matrix(n))?;
    let factored = matrix_mul(
        &matrix_mul(&diag_g(params.complement(), n)?, &b_inv)?,
        &diag_g(params, n)?,
    )?;
    for i in 0..n {
        for j in 0..n {
            if h_inv.get(i, j) != factored.get(i, j) {
                return Ok(Verification::fail(
                    "hadamard",
                    format!(
                        "cell ({i},{j}): elimination gives {} but G B^-1 G gives {}",
                        h_inv.get(i, j),
                        factored.get(i, j)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass("hadamard"))
}

/// Checks `L^2 = I` exactly on the `n x n` truncation. Triangularity makes
/// the finite check exact: entry `(m,k)` of `L^2` only involves columns
/// between `k` and `m`.
pub fn verify_involution(params: Params, n: usize) -> Result<Verification> {
    let l = involution_matrix(params, n)?;
    let square = matrix_mul(&l, &l)?;
    let identity = ExactMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if square.get(i, j) != identity.get(i, j) {
                return Ok(Verification::fail(
                    "involution",
                    format!("L^2 entry ({i},{j}) = {}", square.get(i, j)),
                ));
            }
        }
    }
    Ok(Verification::pass("involution"))
}
