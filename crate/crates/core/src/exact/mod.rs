//! Exact scalar arithmetic and the small algebraic trait hierarchy the rest
//! of the crate is generic over.
//!
//! Everything here is exact: rationals are reduced fractions with a positive
//! denominator, Gaussian rationals are pairs of such fractions. There is no
//! floating-point path anywhere in the crate.

mod gaussian;

pub use gaussian::GaussianRational;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A commutative ring with identity.
///
/// Methods take references so that generic code over big-number types does
/// not have to clone at every operation.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings containing the rationals. Needed wherever we divide by integers
/// (Faddeev-LeVerrier, derivatives of monic normalizations).
pub trait RationalAlgebra: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Entrywise complex conjugation. The parameter eps is real, so for
/// polynomial types only the coefficients are conjugated.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

/// Integral domains with gcds and exact division, the coefficient rings of
/// primitive polynomial remainder sequences.
pub trait GcdDomain: Ring {
    /// `Some(q)` with `self = q * d` if `d` divides `self`, else `None`.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// A canonical gcd (monic for polynomials, `1` for nonzero field
    /// elements). `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;

    /// The unit `u` with `self / u` in canonical (normalized) form; one for
    /// zero.
    fn unit_part(&self) -> Self;

    fn is_unit(&self) -> bool;
}

/// Text fragments for printing a value as a coefficient in a polynomial.
pub struct CoeffText {
    pub negative: bool,
    /// Text of the absolute value (or the whole value when `negative` is
    /// meaningless, e.g. a compound complex number).
    pub body: String,
    /// `true` when the absolute value is exactly one.
    pub unit: bool,
}

pub trait CoeffDisplay {
    fn coeff_text(&self) -> CoeffText;
}

/// Euclid's algorithm on nonnegative integers. Argument order is irrelevant
/// and `int_gcd(0, 0) = 0`.
pub fn int_gcd(p0: &BigInt, p1: &BigInt) -> BigInt {
    let (mut a, mut b) = (p0.abs(), p1.abs());
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.mod_floor(&b);
        a = b;
        b = r;
    }
    a
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
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
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl RationalAlgebra for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl Conjugate for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl GcdDomain for Rational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Field::div(self, d).ok()
    }
    fn gcd(&self, other: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(other) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn unit_part(&self) -> Self {
        if Zero::is_zero(self) {
            One::one()
        } else {
            self.clone()
        }
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
}

impl CoeffDisplay for Rational {
    fn coeff_text(&self) -> CoeffText {
        let abs = self.abs();
        CoeffText {
            negative: self.is_negative(),
            unit: One::is_one(&abs),
            body: abs.to_string(),
        }
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        offset: 0,
        expected: format!("rational number, got {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` form, or just `"p"` for integers.
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(int_gcd(&big(12), &big(8)), big(4));
        assert_eq!(int_gcd(&big(7), &big(3)), big(1));
        assert_eq!(int_gcd(&big(0), &big(5)), big(5));
        assert_eq!(int_gcd(&big(0), &big(0)), big(0));
        assert_eq!(int_gcd(&big(8), &big(12)), big(4));
    }

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &big(-3));
        assert_eq!(q.denom(), &big(2));
        assert_eq!(rat(0, 7), <Rational as Ring>::zero());
        assert_eq!(rat(0, 7).denom(), &big(1));
    }

    #[test]
    fn rational_inverse_of_zero_is_an_error() {
        assert_eq!(<Rational as Ring>::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 5 ").unwrap(), rat(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_string(&rat(-3, 2)), "-3/2");
        assert_eq!(rational_string(&rat(4, 2)), "2");
    }

    proptest! {
        #[test]
        fn gcd_divides_and_scales(a in 0i64..10_000, b in 0i64..10_000, k in 1i64..100) {
            let g = int_gcd(&big(a), &big(b));
            if !g.is_zero() {
                prop_assert!((big(a) % &g).is_zero());
                prop_assert!((big(b) % &g).is_zero());
            }
            prop_assert_eq!(int_gcd(&big(a * k), &big(b * k)), big(k) * g);
        }

        #[test]
        fn division_undoes_multiplication(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000
        ) {
            let x = rat(a, b);
            let y = rat(c, d);
            if !Ring::is_zero(&y) {
                prop_assert_eq!(Field::div(&x, &y).unwrap().mul(&y), x.clone());
            }
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).add(&x), x.add(&y.add(&x)));
        }
    }
}
