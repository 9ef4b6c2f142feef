//! Scalar domains: exact rationals, complex doubles, and the tagged union
//! used at the JSON boundary.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (num-rational maintains both invariants).
pub type Rat = BigRational;

/// Errors shared by the structural modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("arithmetic between rational and complex scalars is not defined")]
    MixedScalarTags,
    #[error("jet is not unipotent (leading coefficient differs from the identity)")]
    NonUnipotent,
    #[error("jet is not a unit (leading coefficient is singular)")]
    NonUnit,
    #[error("jet has a nonzero constant term")]
    NonNilpotent,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("partition/parameter mismatch: {0}")]
    SpecMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degenerate mu vector (leading coefficient c1 = 0)")]
    DegenerateMu,
    #[error("not a normalizer element: {0}")]
    NotNormalizer(String),
    #[error("partition not supported here: {0}")]
    UnsupportedPartition(String),
    #[error("membership failure: {0}")]
    Membership(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// The ring operations the generic matrix, jet and mu machinery needs.
///
/// Implemented by [`Rat`] (exact path) and [`Complex64`] (numeric path);
/// the two never mix inside a single value.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    /// Multiplicative inverse, `None` for non-invertible elements.
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.norm_sqr() == 0.0 {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
}

/// Lossy-but-faithful embedding into complex doubles, used when an exact
/// structural object feeds a numeric evaluation.
pub trait ToComplex {
    fn to_c64(&self) -> Complex64;
}

impl ToComplex for Rat {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(self), 0.0)
    }
}

impl ToComplex for Complex64 {
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

/// Convert an exact rational to the nearest f64.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Denominator/numerator too large for direct conversion; scale down.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parse "p/q" or "p" into an exact rational.
pub fn rat_from_str(s: &str) -> Result<Rat, CoreError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(CoreError::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Format an exact rational as "p" or "p/q" with positive q.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for small rationals in tests and probes.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Tagged scalar union for the JSON boundary: exact rational or complex
/// double. Arithmetic across tags is an error, never a coercion.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rat),
    Complex(Complex64),
}

impl Scalar {
    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, CoreError> {
        self.zip(rhs, Ring::add, Ring::add)
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, CoreError> {
        self.zip(rhs, Ring::sub, Ring::sub)
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, CoreError> {
        self.zip(rhs, Ring::mul, Ring::mul)
    }

    fn zip(
        &self,
        rhs: &Scalar,
        fr: impl Fn(&Rat, &Rat) -> Rat,
        fc: impl Fn(&Complex64, &Complex64) -> Complex64,
    ) -> Result<Scalar, CoreError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(fr(a, b))),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(fc(a, b))),
            _ => Err(CoreError::MixedScalarTags),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => r.to_c64(),
            Scalar::Complex(c) => *c,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", rat_to_string(r)),
            Scalar::Complex(c) => write!(f, "[{}, {}]", c.re, c.im),
        }
    }
}

/// Absolute value of a rational, handy for pivot checks.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip_lowest_terms() {
        let r = rat_from_str("6/-4").unwrap();
        assert_eq!(rat_to_string(&r), "-3/2");
        let r = rat_from_str("10/5").unwrap();
        assert_eq!(rat_to_string(&r), "2");
    }

    #[test]
    fn mixed_tags_error() {
        let a = Scalar::Rational(rat(1, 2));
        let b = Scalar::Complex(Complex64::new(0.5, 0.0));
        assert_eq!(a.add(&b), Err(CoreError::MixedScalarTags));
        assert!(a.add(&a).is_ok());
    }
}
