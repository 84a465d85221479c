//! The field of rational functions in eps.
//!
//! Values are kept reduced with a monic denominator, so equality is
//! structural. The default coefficient field is Q; `RationalFunction<GaussianRational>`
//! gives Q(i)(eps), which the naive-Euclid cross-check of the family gcd uses.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{CoeffDisplay, CoeffText, Conjugate, Field, Rational, RationalAlgebra, Ring};
use crate::poly::{Poly, PARAM_VAR};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<F = Rational> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field + CoeffDisplay> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// Cancel common factors and make the denominator monic.
    pub fn normalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self { num, den: Poly::one() };
        }
        let g = num.gcd_with(&den).expect("denominator is nonzero");
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        Self {
            num: num.scale_by(&lead_inv),
            den: den.scale_by(&lead_inv),
        }
    }

    /// Exact value at `at`; a vanishing denominator is reported as a pole.
    pub fn eval_at(&self, at: &F) -> Result<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole {
                denominator: self.den.display(PARAM_VAR).to_string(),
                at: at.coeff_text().body,
            });
        }
        self.num.eval(at).div(&d)
    }
}

impl<F: Field + CoeffDisplay> Ring for RationalFunction<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(Ring::add(&self.num, &rhs.num), self.den.clone());
        }
        Self::reduce(
            Ring::add(&Ring::mul(&self.num, &rhs.den), &Ring::mul(&rhs.num, &self.den)),
            Ring::mul(&self.den, &rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::reduce(Ring::mul(&self.num, &rhs.num), Ring::mul(&self.den, &rhs.den))
    }
    fn neg(&self) -> Self {
        Self {
            num: Ring::neg(&self.num),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::from_int(n))
    }
}

impl<F: Field + CoeffDisplay> Field for RationalFunction<F> {
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
}

impl<F: Field + CoeffDisplay + RationalAlgebra> RationalAlgebra for RationalFunction<F> {
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(F::from_rational(q)))
    }
}

impl<F: Field + CoeffDisplay + Conjugate> Conjugate for RationalFunction<F> {
    fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }
}

impl<F: Field + CoeffDisplay> CoeffDisplay for RationalFunction<F> {
    fn coeff_text(&self) -> CoeffText {
        if self.den.is_one() {
            return self.num.coeff_text();
        }
        CoeffText {
            negative: false,
            body: format!("({})", self),
            unit: false,
        }
    }
}

impl<F: Field + CoeffDisplay> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num.display(PARAM_VAR));
        }
        let terms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        if terms > 1 {
            write!(f, "({})", self.num.display(PARAM_VAR))?;
        } else {
            write!(f, "{}", self.num.display(PARAM_VAR))?;
        }
        write!(f, "/({})", self.den.display(PARAM_VAR))
    }
}
