//! Generators and closed-form evaluators for the number families: super
//! Catalan `S(m,n)`, Patalan `a(n)`, (p,q)-Patalan `b(n)`, the super
//! Patalan table `Q(i,j)` and its extension `E(m,n)` to all integer
//! indices.
//!
//! The canonical construction of `Q` is the defining recurrence; the
//! closed form `(-1)^n p^{2(m+n)} C(m - q/p, m+n)` is a genuinely separate
//! code path, which makes the equivalence checks meaningful. Recurrence
//! steps run in exact rationals with a per-cell integrality check, since
//! stepwise divisibility is not proved anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{
    self, binom_rational, factorial, ratio_pow, require_integer, sign_pow, Params, WholeNumber,
};
use crate::report::Verification;
use crate::{Error, Result};

/// Which family a sequence slice came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Patalan,
    PqPatalan,
    SuperCatalanRow,
    Custom,
}

/// A finite run of exact sequence values starting at `start_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSlice {
    pub values: Vec<WholeNumber>,
    pub start_index: i64,
    pub family: Family,
}

impl SequenceSlice {
    pub fn new(values: Vec<WholeNumber>, family: Family) -> Self {
        SequenceSlice {
            values,
            start_index: 0,
            family,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Prepends a leading 1, for the OEIS convention that starts the
    /// Patalan numbers `1, 1, C(p,2), ...`.
    pub fn with_leading_one(mut self) -> Self {
        self.values.insert(0, BigInt::one());
        self
    }
}

/// Rectangular table of exact integers indexed from `(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberTable {
    entries: Vec<Vec<WholeNumber>>,
    params: Params,
}

impl NumberTable {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn get(&self, i: usize, j: usize) -> &WholeNumber {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[WholeNumber] {
        &self.entries[i]
    }

    /// Entries read along antidiagonals: (0,0), (0,1), (1,0), (0,2), ...
    /// The common OEIS linearization of a square array. Only complete
    /// antidiagonals are emitted, so the result is an exact prefix of the
    /// infinite array's antidiagonal reading.
    pub fn antidiagonal_order(&self) -> Vec<WholeNumber> {
        let full = self.rows().min(self.cols());
        let mut out = Vec::with_capacity(full * (full + 1) / 2);
        for d in 0..full {
            for j in (0..=d).rev() {
                out.push(self.entries[d - j][j].clone());
            }
        }
        out
    }

    /// Entries read row by row.
    pub fn row_major_order(&self) -> Vec<WholeNumber> {
        self.entries.iter().flatten().cloned().collect()
    }
}

/// Super Catalan number `S(m,n) = (2m)!(2n)!/(m!n!(m+n)!)`.
///
/// The quotient is formed in exact rationals and checked integral; a
/// remainder would mean an implementation bug, not bad input.
pub fn super_catalan(m: u64, n: u64) -> WholeNumber {
    let num = factorial(2 * m) * factorial(2 * n);
    let den = factorial(m) * factorial(n) * factorial(m + n);
    let value = BigRational::new(num, den);
    require_integer(&value, || format!("super_catalan({m},{n})"))
        .expect("super Catalan quotient is always integral")
}

/// Patalan numbers of order `p`: `a(0) = 1`, `a(n) = p(pn-1)a(n-1)/(n+1)`.
pub fn patalan_seq(p: u32, count: usize) -> Result<SequenceSlice> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("patalan order p={p} must be >= 2")));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let p = BigInt::from(p);
    let mut values = vec![BigInt::one()];
    for n in 1..count as i64 {
        let prev = BigRational::from(values[n as usize - 1].clone());
        let step = prev * BigRational::new(&p * (&p * n - 1), BigInt::from(n + 1));
        values.push(require_integer(&step, || format!("patalan a({n})"))?);
    }
    Ok(SequenceSlice::new(values, Family::Patalan))
}

/// (p,q)-Patalan numbers: `b(0) = q`, `b(n) = p(pn-q)b(n-1)/(n+1)`.
pub fn pq_patalan_seq(params: Params, count: usize) -> Result<SequenceSlice> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let mut values = vec![q.clone()];
    for n in 1..count as i64 {
        let prev = BigRational::from(values[n as usize - 1].clone());
        let step = prev * BigRational::new(&p * (&p * n - &q), BigInt::from(n + 1));
        values.push(require_integer(&step, || format!("pq_patalan b({n})"))?);
    }
    Ok(SequenceSlice::new(values, Family::PqPatalan))
}

/// Row `m` of the super Catalan array: `S(m, 0), S(m, 1), ...`.
pub fn super_catalan_row(m: u64, count: usize) -> SequenceSlice {
    let values = (0..count as u64).map(|n| super_catalan(m, n)).collect();
    SequenceSlice {
        values,
        start_index: 0,
        family: Family::SuperCatalanRow,
    }
}

/// Builds the `(p,q)`-super Patalan table from the defining recurrence:
/// `Q(0,0) = 1`, `Q(i,0) = p(pi-q)Q(i-1,0)/i` down column 0, then
/// `Q(i,j) = p(pj-p+q)Q(i,j-1)/(i+j)` across each row. Each division is
/// checked exact.
pub fn super_patalan_table(params: Params, rows: usize, cols: usize) -> Result<NumberTable> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("table needs rows >= 1 and cols >= 1".into()));
    }
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let mut entries: Vec<Vec<WholeNumber>> = Vec::with_capacity(rows);
    for i in 0..rows as i64 {
        let first = if i == 0 {
            BigInt::one()
        } else {
            let above = BigRational::from(entries[i as usize - 1][0].clone());
            let step = above * BigRational::new(&p * (&p * i - &q), BigInt::from(i));
            require_integer(&step, || format!("Q({i},0) for {params}"))?
        };
        let mut row = Vec::with_capacity(cols);
        row.push(first);
        for j in 1..cols as i64 {
            let left = BigRational::from(row[j as usize - 1].clone());
            let step = left * BigRational::new(&p * (&p * j - &p + &q), BigInt::from(i + j));
            row.push(require_integer(&step, || format!("Q({i},{j}) for {params}"))?);
        }
        entries.push(row);
    }
    Ok(NumberTable { entries, params })
}

/// Closed-form value `Q(m,n) = (-1)^n p^{2(m+n)} C(m - q/p, m+n)`,
/// evaluated through the rational binomial and checked integral.
pub fn super_patalan_closed(params: Params, m: u64, n: u64) -> Result<WholeNumber> {
    let alpha = exact::from_int(m as i64) - params.q_over_p();
    let k = m + n;
    let binom = binom_rational(&alpha, k as u32);
    let scale = BigRational::from(params.p_squared().pow(k as u32));
    let value = BigRational::from(sign_pow(n as i64)) * scale * binom;
    require_integer(&value, || format!("closed form Q({m},{n}) for {params}"))
}

fn closed_form_row(params: Params, i: usize, cols: usize) -> Result<Vec<WholeNumber>> {
    (0..cols)
        .map(|j| super_patalan_closed(params, i as u64, j as u64))
        .collect()
}

/// Closed-form table, sequential fill. Independent of
/// [`super_patalan_table`]'s recurrence path.
pub fn closed_form_table_seq(params: Params, rows: usize, cols: usize) -> Result<NumberTable> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("table needs rows >= 1 and cols >= 1".into()));
    }
    let entries = (0..rows)
        .map(|i| closed_form_row(params, i, cols))
        .collect::<Result<Vec<_>>>()?;
    Ok(NumberTable { entries, params })
}

/// Closed-form table; rows are evaluated in parallel when the `parallel`
/// feature is enabled.
#[cfg(feature = "parallel")]
pub fn closed_form_table(params: Params, rows: usize, cols: usize) -> Result<NumberTable> {
    use rayon::prelude::*;
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("table needs rows >= 1 and cols >= 1".into()));
    }
    let entries = (0..rows)
        .into_par_iter()
        .map(|i| closed_form_row(params, i, cols))
        .collect::<Result<Vec<_>>>()?;
    Ok(NumberTable { entries, params })
}

#[cfg(not(feature = "parallel"))]
pub fn closed_form_table(params: Params, rows: usize, cols: usize) -> Result<NumberTable> {
    closed_form_table_seq(params, rows, cols)
}

/// Extended super Patalan number `E(m,n)`: the coefficient of `x^{m+n}` in
/// `(-1)^m (1 - p^2 x)^{m - q/p}`, defined for all integer `m`, `n`.
/// Zero when `m + n < 0`.
pub fn extended_entry(params: Params, m: i64, n: i64) -> Result<WholeNumber> {
    let deg = m + n;
    if deg < 0 {
        return Ok(BigInt::zero());
    }
    let alpha = exact::from_int(m) - params.q_over_p();
    let coeff = binom_rational(&alpha, deg as u32)
        * ratio_pow(&BigRational::from(-params.p_squared()), deg as u32);
    let value = BigRational::from(sign_pow(m)) * coeff;
    require_integer(&value, || format!("E({m},{n}) for {params}"))
}

/// The same `E(m,n)` through the column generating function: coefficient
/// of `x^{m+n}` in `(-1)^n (1 - p^2 x)^{n - (p-q)/p}`. Used to cross-check
/// [`extended_entry`].
pub fn extended_entry_dual(params: Params, m: i64, n: i64) -> Result<WholeNumber> {
    let deg = m + n;
    if deg < 0 {
        return Ok(BigInt::zero());
    }
    let alpha = exact::from_int(n) - params.complement().q_over_p();
    let coeff = binom_rational(&alpha, deg as u32)
        * ratio_pow(&BigRational::from(-params.p_squared()), deg as u32);
    let value = BigRational::from(sign_pow(n)) * coeff;
    require_integer(&value, || format!("dual E({m},{n}) for {params}"))
}

/// Checks the twisted symmetry `Q_{p,q}(i,j) = Q_{p,p-q}(j,i)` on a
/// `size x size` window.
pub fn twisted_transpose_check(params: Params, size: usize) -> Result<Verification> {
    let a = super_patalan_table(params, size, size)?;
    let b = super_patalan_table(params.complement(), size, size)?;
    for i in 0..size {
        for j in 0..size {
            if a.get(i, j) != b.get(j, i) {
                return Ok(Verification::fail(
                    "transpose",
                    format!(
                        "Q_{}({i},{j}) = {} but Q_{}({j},{i}) = {}",
                        params,
                        a.get(i, j),
                        params.complement(),
                        b.get(j, i)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass("transpose"))
}

/// Checks that the closed form and the defining recurrence agree on a
/// `size x size` window.
pub fn verify_closed_form(params: Params, size: usize) -> Result<Verification> {
    let recurrence = super_patalan_table(params, size, size)?;
    let closed = closed_form_table(params, size, size)?;
    for i in 0..size {
        for j in 0..size {
            if recurrence.get(i, j) != closed.get(i, j) {
                return Ok(Verification::fail(
                    "closed-form",
                    format!(
                        "Q({i},{j}): recurrence {} != closed form {}",
                        recurrence.get(i, j),
                        closed.get(i, j)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass("closed-form"))
}
