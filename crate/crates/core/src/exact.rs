//! Arbitrary-precision integer and rational scalars, integer and
//! rational-argument binomial coefficients, and the `(p, q)` parameter pair
//! shared by every other module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact signed integer of unbounded magnitude.
pub type WholeNumber = BigInt;

/// Exact rational, always normalized: positive denominator, reduced to
/// lowest terms.
pub type ExactFraction = BigRational;

/// The `(p, q)` pair selecting a super Patalan family: `p >= 2` and
/// `1 <= q < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    p: u32,
    q: u32,
}

impl Params {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q == 0 || q >= p {
            return Err(Error::InvalidParams {
                p: p as i64,
                q: q as i64,
            });
        }
        Ok(Params { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The twisted partner `(p, p - q)`.
    pub fn complement(&self) -> Params {
        Params {
            p: self.p,
            q: self.p - self.q,
        }
    }

    /// `q / p` as an exact fraction.
    pub fn q_over_p(&self) -> ExactFraction {
        BigRational::new(BigInt::from(self.q), BigInt::from(self.p))
    }

    /// `p^2` as an integer.
    pub fn p_squared(&self) -> WholeNumber {
        BigInt::from(self.p) * BigInt::from(self.p)
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> WholeNumber {
    (1..=n).map(BigInt::from).product()
}

/// Integer binomial coefficient `C(n, k)`.
///
/// `k < 0` yields 0, so convolution-sum edge cases vanish without special
/// casing. Negative `n` is handled exactly through the falling product
/// `n(n-1)...(n-k+1)/k!`; the stepwise division is always exact because the
/// running value after `j` factors is itself `C(n, j)`.
pub fn binom_integer(n: i64, k: i64) -> WholeNumber {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(alpha, k)` for rational `alpha`,
/// computed as `alpha(alpha-1)...(alpha-k+1)/k!`.
pub fn binom_rational(alpha: &ExactFraction, k: u32) -> ExactFraction {
    let mut acc = BigRational::one();
    for i in 0..k {
        let factor = alpha - BigRational::from(BigInt::from(i));
        acc *= factor;
        acc /= BigRational::from(BigInt::from(i + 1));
    }
    acc
}

/// Extracts the integer value of `r`, or reports it as non-integral with
/// the given context.
pub fn require_integer(r: &ExactFraction, context: impl FnOnce() -> String) -> Result<WholeNumber> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral {
            context: context(),
            value: r.to_string(),
        })
    }
}

/// `(-1)^k` as an integer, for signed `k`.
pub fn sign_pow(k: i64) -> WholeNumber {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `base^exp` for rational base and nonnegative integer exponent.
pub fn ratio_pow(base: &ExactFraction, exp: u32) -> ExactFraction {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// True if the fraction is a (positive or negative) whole number.
pub fn is_integral(r: &ExactFraction) -> bool {
    r.denom().is_one()
}

/// Parses an exact decimal integer string.
pub fn parse_whole(s: &str) -> Option<WholeNumber> {
    s.parse::<BigInt>().ok()
}

/// Convenience: the fraction `n/1`.
pub fn from_int(n: i64) -> ExactFraction {
    BigRational::from(BigInt::from(n))
}

/// Convenience: the fraction `n/d` (normalized).
pub fn ratio(n: i64, d: i64) -> ExactFraction {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a whole number as -1/0/+1.
pub fn signum(n: &WholeNumber) -> i32 {
    if n.is_zero() {
        0
    } else if n.is_negative() {
        -1
    } else {
        1
    }
}
