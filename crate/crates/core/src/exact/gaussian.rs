use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{CoeffDisplay, CoeffText, Conjugate, Field, GcdDomain, Rational, RationalAlgebra, Ring};
use crate::error::{Error, Result};

/// An element of Q(i): `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(Rational::from_int(re), Rational::from_int(im))
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn abs2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn from_int(n: i64) -> Self {
        Self::real(Rational::from_int(n))
    }
}

impl RationalAlgebra for GaussianRational {
    fn from_rational(q: &Rational) -> Self {
        Self::real(q.clone())
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Result<Self> {
        let n = self.abs2();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }
}

impl Conjugate for GaussianRational {
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
}

impl GcdDomain for GaussianRational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Field::div(self, d).ok()
    }
    fn gcd(&self, other: &Self) -> Self {
        if Ring::is_zero(self) && Ring::is_zero(other) {
            Ring::zero()
        } else {
            Ring::one()
        }
    }
    fn unit_part(&self) -> Self {
        if Ring::is_zero(self) {
            Ring::one()
        } else {
            self.clone()
        }
    }
    fn is_unit(&self) -> bool {
        !Ring::is_zero(self)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Ring::add(&self, &rhs)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Ring::sub(&self, &rhs)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Ring::mul(&self, &rhs)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Ring::neg(&self)
    }
}

fn imag_text(im_abs: &Rational) -> String {
    if im_abs.is_one() {
        "i".to_string()
    } else {
        format!("{im_abs}*i")
    }
}

impl CoeffDisplay for GaussianRational {
    fn coeff_text(&self) -> CoeffText {
        if self.im.is_zero() {
            return self.re.coeff_text();
        }
        if self.re.is_zero() {
            return CoeffText {
                negative: self.im.is_negative(),
                body: imag_text(&self.im.abs()),
                unit: false,
            };
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        CoeffText {
            negative: false,
            body: format!("({} {} {})", self.re, sign, imag_text(&self.im.abs())),
            unit: false,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{}", imag_text(&self.im.abs()));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}", self.re, sign, imag_text(&self.im.abs()))
    }
}
