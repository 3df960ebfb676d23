//! Truncated formal power series over exact fractions, univariate and
//! bivariate, plus the generating-function identities built on them: the
//! Patalan generating function, the compositional inverse relation, the
//! degree-p convolutional recurrence and the two-variable generating
//! function of the super Patalan table.
//!
//! A series of truncation order `N` carries exact coefficients for degrees
//! `0..N-1`. Binary operations propagate the minimum of the operand
//! orders, so retained coefficients are always exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{
    self, binom_integer, binom_rational, ratio_pow, ExactFraction, Params, WholeNumber,
};
use crate::report::Verification;
use crate::sequences::{self, Family, SequenceSlice};
use crate::{Error, Result};

/// Univariate formal power series truncated to a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactFraction>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficient list; the truncation order is
    /// the list length.
    pub fn new(coeffs: Vec<ExactFraction>) -> Self {
        assert!(!coeffs.is_empty(), "truncation order must be >= 1");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(vec![BigRational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order > 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &ExactFraction {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[ExactFraction] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order()).max(1);
        TruncatedSeries::new(self.coeffs[..order].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::new(
            (0..order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::new(
            (0..order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, factor: &ExactFraction) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product, truncated to the minimum operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, o) in other.coeffs.iter().zip(out[i..].iter_mut()) {
                *o += a * b;
            }
        }
        TruncatedSeries::new(out)
    }

    /// Divides by `x^k`. The dropped low-order coefficients must be zero;
    /// the order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.order() <= k {
            return Err(Error::InvalidArgument(format!(
                "cannot shift a series of order {} down by {k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument(
                "shift_down would drop a nonzero coefficient".into(),
            ));
        }
        Ok(TruncatedSeries::new(self.coeffs[k..].to_vec()))
    }

    /// Multiplies by `x^k`, keeping the same truncation order (top
    /// coefficients fall off the end).
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = vec![BigRational::zero(); order];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k < order {
                out[i + k] = c.clone();
            }
        }
        TruncatedSeries::new(out)
    }
}

/// `(1 + c x)^alpha` to the given order, via the rational binomial series.
pub fn series_binomial(c: &ExactFraction, alpha: &ExactFraction, order: usize) -> TruncatedSeries {
    let coeffs = (0..order)
        .map(|k| binom_rational(alpha, k as u32) * ratio_pow(c, k as u32))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// `outer(inner(x))`, truncated to the minimum operand order. `inner` must
/// have zero constant term.
pub fn series_compose(outer: &TruncatedSeries, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !inner.coeff(0).is_zero() {
        return Err(Error::ConstantTermNotZero);
    }
    let order = outer.order().min(inner.order());
    let inner = inner.truncate(order);
    let mut acc = TruncatedSeries::zero(order);
    for k in (0..order).rev() {
        acc = acc.mul(&inner);
        acc.coeffs[0] += outer.coeff(k);
    }
    Ok(acc)
}

/// Compositional inverse of `s`: the series `t` with
/// `s(t(x)) = t(s(x)) = x` up to truncation. Requires `s(0) = 0` and
/// `s'(0) != 0`.
///
/// Solved degree by degree: with `t` known through degree `d-1` the
/// coefficient of `x^d` in `s(t)` is linear in `t_d` with slope `s'(0)`,
/// so each step is one truncated composition and one exact division.
pub fn series_comp_inverse(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let order = s.order();
    if order < 2 || !s.coeff(0).is_zero() || s.coeff(1).is_zero() {
        return Err(Error::NotInvertible);
    }
    let s1 = s.coeff(1).clone();
    let mut t = vec![BigRational::zero(); order];
    t[1] = BigRational::one() / &s1;
    for d in 2..order {
        let partial = TruncatedSeries::new(t[..=d].to_vec());
        let err = series_compose(&s.truncate(d + 1), &partial)?;
        t[d] = -err.coeff(d) / &s1;
    }
    Ok(TruncatedSeries::new(t))
}

/// The Patalan generating function
/// `A(x) = (1 - (1 - p^2 x)^{1/p}) / (p x)` to the given order.
pub fn patalan_gf(p: u32, order: usize) -> Result<TruncatedSeries> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("patalan order p={p} must be >= 2")));
    }
    let c = BigRational::from(-BigInt::from(p) * BigInt::from(p));
    let root = series_binomial(&c, &exact::ratio(1, p as i64), order + 1);
    let numerator = TruncatedSeries::one(order + 1).sub(&root);
    let shifted = numerator.shift_down(1)?;
    Ok(shifted.scale(&exact::ratio(1, p as i64)))
}

/// The polynomial `(1 - (1 - p x)^p) / p^2`, whose compositional inverse
/// is `x A(x)`. For `p = 3` this is literally `x - 3x^2 + 3x^3`.
pub fn patalan_inner_poly(p: u32, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigRational::zero(); order];
    let p_int = BigInt::from(p);
    let p_sq = &p_int * &p_int;
    for k in 1..=(p as usize).min(order.saturating_sub(1)) {
        // -C(p,k) p^{k-2} (-1)^k, written with denominator p^2 so k=1 stays exact
        let num = -binom_integer(p as i64, k as i64)
            * p_int.pow(k as u32)
            * crate::exact::sign_pow(k as i64);
        coeffs[k] = BigRational::new(num, p_sq.clone());
    }
    TruncatedSeries::new(coeffs)
}

/// `x A(x)` to the given order.
pub fn patalan_gf_times_x(p: u32, order: usize) -> Result<TruncatedSeries> {
    let a = patalan_gf(p, order)?;
    let mut coeffs = vec![BigRational::zero(); order];
    for (k, c) in a.coeffs().iter().enumerate() {
        if k + 1 < order {
            coeffs[k + 1] = c.clone();
        }
    }
    Ok(TruncatedSeries::new(coeffs))
}

fn convolve_ints(a: &[WholeNumber], b: &[WholeNumber], len: usize) -> Vec<WholeNumber> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (y, o) in b.iter().zip(out[i..].iter_mut()) {
            *o += x * y;
        }
    }
    out
}

/// Patalan numbers from the degree-p convolutional recurrence
/// `a(n) = sum_{k=2}^{p} C(p,k) p^{k-2} (-1)^k [x^{n-k+1}] A(x)^k`,
/// with `a(0) = 1`. An implementation path independent of both the
/// defining recurrence and the generating function.
pub fn patalan_via_convolution(p: u32, count: usize) -> Result<SequenceSlice> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("patalan order p={p} must be >= 2")));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let mut a: Vec<WholeNumber> = vec![BigInt::one()];
    for n in 1..count {
        let base = &a[..];
        let mut power = base.to_vec(); // A^1 over the known prefix
        let mut total = BigInt::zero();
        for k in 2..=(p as usize) {
            power = convolve_ints(&power, base, n);
            let target = n as i64 - k as i64 + 1;
            if target < 0 {
                continue;
            }
            let weight = binom_integer(p as i64, k as i64)
                * BigInt::from(p).pow(k as u32 - 2)
                * crate::exact::sign_pow(k as i64);
            total += weight * &power[target as usize];
        }
        a.push(total);
    }
    Ok(SequenceSlice::new(a, Family::Patalan))
}

/// The explicit order-3 recurrence
/// `a(n) = 3 sum a(k)a(n-1-k) - 3 sum_{i+j+k=n-2} a(i)a(j)a(k)`,
/// kept separate from the general form so the two can be cross-checked.
pub fn patalan3_via_recurrence(count: usize) -> Result<SequenceSlice> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let mut a: Vec<WholeNumber> = vec![BigInt::one()];
    for n in 1..count {
        let square = convolve_ints(&a, &a, n);
        let cube = convolve_ints(&square, &a, n);
        let mut total = BigInt::from(3) * &square[n - 1];
        if n >= 2 {
            total -= BigInt::from(3) * &cube[n - 2];
        }
        a.push(total);
    }
    Ok(SequenceSlice::new(a, Family::Patalan))
}

/// Bivariate series with exact coefficients `c(i,j)` for total degree
/// `i + j < order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    // coeffs[i][j], row i has order - i entries
    coeffs: Vec<Vec<ExactFraction>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be >= 1");
        BivariateSeries {
            coeffs: (0..order).map(|i| vec![BigRational::zero(); order - i]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize, j: usize) -> &ExactFraction {
        &self.coeffs[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExactFraction) {
        self.coeffs[i][j] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = BivariateSeries::zero(order);
        for i in 0..order {
            for j in 0..order - i {
                out.coeffs[i][j] = &self.coeffs[i][j] + &other.coeffs[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = BivariateSeries::zero(order);
        for i in 0..order {
            for j in 0..order - i {
                out.coeffs[i][j] = &self.coeffs[i][j] - &other.coeffs[i][j];
            }
        }
        out
    }

    /// Product truncated to the minimum operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = BivariateSeries::zero(order);
        for i1 in 0..order {
            for j1 in 0..order - i1 {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..order - i1 - j1 {
                    for j2 in 0..order - i1 - j1 - i2 {
                        let b = &other.coeffs[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        out.coeffs[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Embeds a univariate series as a series in `x` (all powers of `y`
    /// absent), optionally shifted up by one power of `x`.
    pub fn from_x_series(s: &TruncatedSeries, shift: usize, order: usize) -> Self {
        let mut out = BivariateSeries::zero(order);
        for (k, c) in s.coeffs().iter().enumerate() {
            if k + shift < order {
                out.coeffs[k + shift][0] = c.clone();
            }
        }
        out
    }

    /// Same as [`Self::from_x_series`] but in `y`.
    pub fn from_y_series(s: &TruncatedSeries, shift: usize, order: usize) -> Self {
        let mut out = BivariateSeries::zero(order);
        for (k, c) in s.coeffs().iter().enumerate() {
            if k + shift < order {
                out.coeffs[0][k + shift] = c.clone();
            }
        }
        out
    }
}

/// Verifies the two-variable generating-function identity for the order-p
/// (q = 1) table: `(x + y - p^2 xy) F(x,y)` must equal
/// `x (1-p^2 x)^{-(p-1)/p} + y (1-p^2 y)^{-1/p}` for all total degrees
/// below `order`. The identity is checked in denominator-cleared form
/// because the rational factor is not itself a power series.
pub fn verify_two_var_gf(params: Params, order: usize) -> Result<Verification> {
    if order < 2 {
        return Err(Error::InvalidArgument("order must be >= 2".into()));
    }
    if params.q() != 1 {
        return Err(Error::InvalidArgument(
            "two-variable gf identity is stated for q = 1".into(),
        ));
    }
    let p = params.p();
    let table = sequences::super_patalan_table(params, order, order)?;
    let mut f = BivariateSeries::zero(order);
    for i in 0..order {
        for j in 0..order - i {
            f.set(i, j, BigRational::from(table.get(i, j).clone()));
        }
    }
    let p_sq = BigRational::from(params.p_squared());
    let mut denom = BivariateSeries::zero(order);
    denom.set(1, 0, BigRational::one());
    denom.set(0, 1, BigRational::one());
    if order > 2 {
        denom.set(1, 1, -&p_sq);
    }
    let lhs = denom.mul(&f);

    let c = -&p_sq;
    let col_gf = series_binomial(&c, &exact::ratio(-(p as i64 - 1), p as i64), order);
    let row_gf = series_binomial(&c, &exact::ratio(-1, p as i64), order);
    let rhs = BivariateSeries::from_x_series(&col_gf, 1, order)
        .add(&BivariateSeries::from_y_series(&row_gf, 1, order));

    for i in 0..order {
        for j in 0..order - i {
            if lhs.coeff(i, j) != rhs.coeff(i, j) {
                return Ok(Verification::fail(
                    "gf2var",
                    format!(
                        "coefficient of x^{i} y^{j}: cleared lhs {} != rhs {}",
                        lhs.coeff(i, j),
                        rhs.coeff(i, j)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass("gf2var"))
}

/// Verifies `p^2 Q(i,j) = Q(i,j+1) + Q(i+1,j)` on all cells `i, j < size`
/// of a `(size+1) x (size+1)` table.
pub fn verify_rubenstein_recurrence(params: Params, size: usize) -> Result<Verification> {
    if size < 2 {
        return Err(Error::InvalidArgument("size must be >= 2".into()));
    }
    let table = sequences::super_patalan_table(params, size + 1, size + 1)?;
    let p_sq = params.p_squared();
    for i in 0..size {
        for j in 0..size {
            let lhs = &p_sq * table.get(i, j);
            let rhs = table.get(i, j + 1) + table.get(i + 1, j);
            if lhs != rhs {
                return Ok(Verification::fail(
                    "rubenstein",
                    format!("at ({i},{j}): p^2 Q = {lhs} but Q(i,j+1)+Q(i+1,j) = {rhs}"),
                ));
            }
        }
    }
    Ok(Verification::pass("rubenstein"))
}

/// Checks the degree-p convolutional recurrence against the defining
/// recurrence over `count` terms; for `p = 3` the explicit cubic form is
/// cross-checked as well.
pub fn verify_convolution(p: u32, count: usize) -> Result<Verification> {
    let conv = patalan_via_convolution(p, count)?;
    let seq = sequences::patalan_seq(p, count)?;
    for (n, (a, b)) in conv.values.iter().zip(&seq.values).enumerate() {
        if a != b {
            return Ok(Verification::fail(
                "convolution",
                format!("a({n}): convolution {a} != recurrence {b}"),
            ));
        }
    }
    if p == 3 {
        let special = patalan3_via_recurrence(count)?;
        for (n, (a, b)) in special.values.iter().zip(&conv.values).enumerate() {
            if a != b {
                return Ok(Verification::fail(
                    "convolution",
                    format!("a({n}): explicit p=3 form {a} != general form {b}"),
                ));
            }
        }
    }
    Ok(Verification::pass("convolution"))
}

/// Checks that `x A(x)` and `(1 - (1 - p x)^p)/p^2` are two-sided
/// compositional inverses at the given truncation order.
pub fn verify_comp_inverse(p: u32, order: usize) -> Result<Verification> {
    let xa = patalan_gf_times_x(p, order)?;
    let poly = patalan_inner_poly(p, order);
    let x = TruncatedSeries::x(order);
    let forward = series_compose(&poly, &xa)?;
    if forward != x {
        let bad = (0..order).find(|&k| forward.coeff(k) != x.coeff(k)).unwrap();
        return Ok(Verification::fail(
            "comp-inverse",
            format!("(s o xA)(x) differs from x at degree {bad}: {}", forward.coeff(bad)),
        ));
    }
    let backward = series_compose(&xa, &poly)?;
    if backward != x {
        let bad = (0..order).find(|&k| backward.coeff(k) != x.coeff(k)).unwrap();
        return Ok(Verification::fail(
            "comp-inverse",
            format!("(xA o s)(x) differs from x at degree {bad}: {}", backward.coeff(bad)),
        ));
    }
    Ok(Verification::pass("comp-inverse"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{from_int, ratio};
    use crate::sequences::{patalan_seq, super_patalan_table};

    fn params(p: u32, q: u32) -> Params {
        Params::new(p, q).unwrap()
    }

    fn int_coeffs(s: &TruncatedSeries) -> Vec<BigInt> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c}");
                c.to_integer()
            })
            .collect()
    }

    #[test]
    fn binomial_series_constant_exponent_zero() {
        let s = series_binomial(&from_int(7), &from_int(0), 5);
        assert_eq!(s, TruncatedSeries::one(5));
    }

    #[test]
    fn binomial_series_central_binomials() {
        // (1 - 4x)^{-1/2} = sum C(2n,n) x^n
        let s = series_binomial(&from_int(-4), &ratio(-1, 2), 4);
        assert_eq!(int_coeffs(&s), vec![1.into(), 2.into(), 6.into(), 20.into()]);
    }

    #[test]
    fn binomial_series_matches_table_row_zero() {
        let s = series_binomial(&from_int(-9), &ratio(-1, 3), 4);
        let t = super_patalan_table(params(3, 1), 1, 4).unwrap();
        assert_eq!(int_coeffs(&s), t.row(0).to_vec());
        assert_eq!(int_coeffs(&s), vec![1.into(), 3.into(), 18.into(), 126.into()]);
    }

    #[test]
    fn mul_identity_and_geometric() {
        let a = TruncatedSeries::new(vec![ratio(1, 2), ratio(-3, 4), from_int(5)]);
        assert_eq!(a.mul(&TruncatedSeries::one(3)), a);
        let one_minus_x = TruncatedSeries::new(vec![from_int(1), from_int(-1), from_int(0), from_int(0)]);
        let geom = TruncatedSeries::new(vec![from_int(1); 4]);
        assert_eq!(one_minus_x.mul(&geom), TruncatedSeries::one(4));
    }

    #[test]
    fn gf_defining_identity() {
        // A(x) * (p x) + (1 - p^2 x)^{1/p} = 1 termwise, p = 3
        let order = 10;
        let a = patalan_gf(3, order).unwrap();
        let px = TruncatedSeries::x(order).scale(&from_int(3));
        let root = series_binomial(&from_int(-9), &ratio(1, 3), order);
        let total = a.mul(&px).add(&root);
        assert_eq!(total, TruncatedSeries::one(order));
    }

    #[test]
    fn compose_with_identity_outer() {
        let inner = TruncatedSeries::new(vec![from_int(0), from_int(2), ratio(1, 3), from_int(-1)]);
        let outer = TruncatedSeries::x(4);
        assert_eq!(series_compose(&outer, &inner).unwrap(), inner);
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        let inner = TruncatedSeries::one(4);
        let outer = TruncatedSeries::x(4);
        assert!(series_compose(&outer, &inner).is_err());
    }

    #[test]
    fn catalan_functional_equation() {
        // compose(x - x^2, x C(x)) = x at order 10
        let order = 10;
        let xc = patalan_gf_times_x(2, order).unwrap();
        let mut s = TruncatedSeries::zero(order);
        s = s.add(&TruncatedSeries::x(order));
        let mut sq = TruncatedSeries::zero(order);
        sq.coeffs[2] = -BigRational::one();
        let s = s.add(&sq);
        assert_eq!(series_compose(&s, &xc).unwrap(), TruncatedSeries::x(order));
    }

    #[test]
    fn patalan_compositional_inverse_p3() {
        let order = 12;
        let inner_poly = patalan_inner_poly(3, order);
        // literally x - 3x^2 + 3x^3
        assert_eq!(inner_poly.coeff(1), &from_int(1));
        assert_eq!(inner_poly.coeff(2), &from_int(-3));
        assert_eq!(inner_poly.coeff(3), &from_int(3));
        let xa = patalan_gf_times_x(3, order).unwrap();
        assert_eq!(series_compose(&inner_poly, &xa).unwrap(), TruncatedSeries::x(order));
        assert_eq!(series_compose(&xa, &inner_poly).unwrap(), TruncatedSeries::x(order));
    }

    #[test]
    fn comp_inverse_identity() {
        let x = TruncatedSeries::x(6);
        assert_eq!(series_comp_inverse(&x).unwrap(), x);
    }

    #[test]
    fn comp_inverse_of_x_minus_x_squared_is_catalan() {
        let mut s = TruncatedSeries::zero(6);
        s.coeffs[1] = BigRational::one();
        s.coeffs[2] = -BigRational::one();
        let t = series_comp_inverse(&s).unwrap();
        let expect: Vec<BigRational> = [0i64, 1, 1, 2, 5, 14].iter().map(|&v| from_int(v)).collect();
        assert_eq!(t.coeffs(), &expect[..]);
    }

    #[test]
    fn comp_inverse_recovers_patalan_gf() {
        for p in [2u32, 3, 4, 5] {
            let order = 20;
            let t = series_comp_inverse(&patalan_inner_poly(p, order)).unwrap();
            assert_eq!(t, patalan_gf_times_x(p, order).unwrap(), "p={p}");
        }
    }

    #[test]
    fn comp_inverse_rejects_bad_input() {
        assert!(series_comp_inverse(&TruncatedSeries::one(4)).is_err());
        assert!(series_comp_inverse(&TruncatedSeries::zero(4)).is_err());
    }

    #[test]
    fn gf_coefficients_match_recurrence() {
        for p in [2u32, 3, 5] {
            let a = patalan_seq(p, 20).unwrap();
            let gf = patalan_gf(p, 20).unwrap();
            assert_eq!(int_coeffs(&gf), a.values, "p={p}");
        }
    }

    #[test]
    fn convolution_matches_recurrence() {
        for p in [2u32, 3, 4, 5] {
            let conv = patalan_via_convolution(p, 15).unwrap();
            let seq = patalan_seq(p, 15).unwrap();
            assert_eq!(conv.values, seq.values, "p={p}");
        }
    }

    #[test]
    fn convolution_p3_hand_step() {
        // n=2: 3(a0 a1 + a1 a0) - 3 a0^3 = 18 - 3 = 15
        let conv = patalan_via_convolution(3, 3).unwrap();
        assert_eq!(conv.values[2], BigInt::from(15));
    }

    #[test]
    fn p3_special_recurrence_agrees_with_general() {
        let special = patalan3_via_recurrence(20).unwrap();
        let general = patalan_via_convolution(3, 20).unwrap();
        assert_eq!(special.values, general.values);
    }

    #[test]
    fn two_var_gf_low_orders() {
        for p in [2u32, 3] {
            let v = verify_two_var_gf(params(p, 1), 10).unwrap();
            assert!(v.passed, "p={p}: {v}");
        }
    }

    #[test]
    fn two_var_gf_requires_q_one() {
        assert!(verify_two_var_gf(params(3, 2), 8).is_err());
    }

    #[test]
    fn rubenstein_hand_cells() {
        let v = verify_rubenstein_recurrence(params(3, 1), 6).unwrap();
        assert!(v.passed);
        let v = verify_rubenstein_recurrence(params(2, 1), 6).unwrap();
        assert!(v.passed);
        // the hand cells behind it: 9*Q(0,0) = 3+6, 9*Q(1,1) = 36+45
        let t = super_patalan_table(params(3, 1), 3, 3).unwrap();
        assert_eq!(t.get(1, 2) + t.get(2, 1), BigInt::from(9) * t.get(1, 1));
    }

    #[test]
    fn bivariate_mul_truncation() {
        let mut a = BivariateSeries::zero(4);
        a.set(1, 0, from_int(1));
        a.set(0, 1, from_int(1));
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(2, 0), &from_int(1));
        assert_eq!(sq.coeff(1, 1), &from_int(2));
        assert_eq!(sq.coeff(0, 2), &from_int(1));
        assert_eq!(sq.coeff(0, 0), &from_int(0));
    }
}
