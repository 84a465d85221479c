//! Dense univariate polynomials over the rings in [`crate::exact`].
//!
//! A polynomial is stored as its coefficient vector, index = power, with no
//! trailing zeros. The zero polynomial is the empty vector and has degree
//! [`Degree::MinusInfinity`].

mod prs;
mod sturm;

pub use prs::{content, primitive_gcd, primitive_part, pseudo_rem, resultant, PrsGcd};
pub use sturm::{isolate_real_roots, rational_root_in, sturm_count_real_roots, RootInterval, SturmChain};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{
    CoeffDisplay, CoeffText, Conjugate, Field, GaussianRational, GcdDomain, Rational, RationalAlgebra, Ring,
};

/// Name used when a polynomial appears as a coefficient of another one.
/// Nested polynomials only ever arise as eps-coefficients of lambda-polynomials.
pub const PARAM_VAR: &str = "eps";
pub const SPECTRAL_VAR: &str = "λ";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Result of the square-free test: `witness = gcd(p, p')`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeCheck<F> {
    pub is_squarefree: bool,
    pub witness: Poly<F>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `x - c`.
    pub fn linear_root(c: &R) -> Self {
        Self::new(vec![c.neg(), R::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for the zero polynomial.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Ring::is_one)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, R> {
        PolyDisplay { poly: self, var }
    }
}

impl<F: Field> Poly<F> {
    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomialDivisor)?;
        let lead_inv = lead.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `Some(q)` when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Scaled to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                self.scale_by(&inv)
            }
        }
    }

    /// Monic gcd by Euclid's algorithm, each remainder normalized to monic.
    pub fn gcd_with(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        Ok(euclid_gcd(self, other))
    }

    /// `gcd(p, p')`; `p` is square-free exactly when this is constant.
    pub fn squarefree_check(&self) -> Result<SquarefreeCheck<F>> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let witness = euclid_gcd(self, &self.derivative());
        Ok(SquarefreeCheck {
            is_squarefree: witness.is_constant(),
            witness,
        })
    }

    /// `monic(p / gcd(p, p'))`: same roots as `p`, each simple.
    pub fn squarefree_part(&self) -> Result<Self> {
        let SquarefreeCheck { witness, .. } = self.squarefree_check()?;
        let q = self
            .div_exact(&witness)
            .ok_or_else(|| Error::invariant("gcd(p, p') does not divide p"))?;
        Ok(q.monic())
    }
}

fn euclid_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.monic(), b.monic())
    } else {
        (b.monic(), a.monic())
    };
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("b is nonzero");
        a = b;
        b = r.monic();
    }
    a
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        self.map(Ring::neg)
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
}

impl<R: RationalAlgebra> RationalAlgebra for Poly<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }
}

impl<R: Ring + Conjugate> Conjugate for Poly<R> {
    fn conj(&self) -> Self {
        self.map(Conjugate::conj)
    }
}

impl<F: Field> GcdDomain for Poly<F> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        euclid_gcd(self, other)
    }
    fn unit_part(&self) -> Self {
        match self.leading() {
            Some(l) => Self::constant(l.clone()),
            None => Self::one(),
        }
    }
    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Ring::add(&self, &rhs)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Ring::sub(&self, &rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Ring::mul(&self, &rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Ring::neg(&self)
    }
}

impl Poly<GaussianRational> {
    /// Split `p = re + i*im` into two real polynomials.
    pub fn split_re_im(&self) -> (Poly<Rational>, Poly<Rational>) {
        (self.map(|c| c.re.clone()), self.map(|c| c.im.clone()))
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    pub fn from_real(p: &Poly<Rational>) -> Self {
        p.map(|c| GaussianRational::real(c.clone()))
    }
}

pub struct PolyDisplay<'a, R> {
    poly: &'a Poly<R>,
    var: &'a str,
}

impl<R: Ring + CoeffDisplay> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let CoeffText { negative, body, unit } = c.coeff_text();
            let var_part = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{k}", self.var),
            };
            let term = match (k, unit) {
                (0, _) => body,
                (_, true) => var_part,
                (_, false) => format!("{body}*{var_part}"),
            };
            match (first, negative) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<R: Ring + CoeffDisplay> CoeffDisplay for Poly<R> {
    fn coeff_text(&self) -> CoeffText {
        let nonzero: Vec<_> = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        match nonzero.as_slice() {
            [] => CoeffText {
                negative: false,
                body: "0".into(),
                unit: false,
            },
            [(0, c)] => c.coeff_text(),
            [(k, c)] => {
                let text = c.coeff_text();
                let var_part = if *k == 1 {
                    PARAM_VAR.to_string()
                } else {
                    format!("{PARAM_VAR}^{k}")
                };
                let body = if text.unit {
                    var_part
                } else {
                    format!("{}*{var_part}", text.body)
                };
                CoeffText {
                    negative: text.negative,
                    body,
                    unit: false,
                }
            }
            _ => CoeffText {
                negative: false,
                body: format!("({})", self.display(PARAM_VAR)),
                unit: false,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    type Q = Rational;
    type G = GaussianRational;

    fn q(coeffs: &[i64]) -> Poly<Q> {
        Poly::from_ints(coeffs)
    }

    fn qr(coeffs: &[(i64, i64)]) -> Poly<Q> {
        Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn lin(root: i64) -> Poly<Q> {
        Poly::linear_root(&Q::from_int(root))
    }

    #[test]
    fn degree_of_zero_is_a_marker() {
        assert_eq!(Poly::<Q>::zero().degree(), Degree::MinusInfinity);
        assert_eq!(
            Poly::<Q>::new(vec![rat(0, 1), rat(0, 1)]).degree(),
            Degree::MinusInfinity
        );
        assert_eq!(q(&[1, 2]).degree(), Degree::Finite(1));
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn divmod_worked_two_by_two() {
        // a = i, b = 2: p0 = lambda^2 - 3, p1 = 2 lambda.
        let (quot, rem) = q(&[-3, 0, 1]).div_rem(&q(&[0, 2])).unwrap();
        assert_eq!(quot, qr(&[(0, 1), (1, 2)]));
        assert_eq!(rem, q(&[-3]));
        assert_eq!(quot * q(&[0, 2]) + rem, q(&[-3, 0, 1]));
    }

    #[test]
    fn divmod_symbolic_shape() {
        // With Re a = 3, Im a = 1, |b|^2 = 5:
        // quotient lambda/2 - 3/2, remainder (Im a)^2 - |b|^2 = -4.
        let (re_a, im_a, b2) = (3, 1, 5);
        let p0 = q(&[re_a * re_a + im_a * im_a - b2, -2 * re_a, 1]);
        let p1 = q(&[-2 * re_a, 2]);
        let (quot, rem) = p0.div_rem(&p1).unwrap();
        assert_eq!(quot, qr(&[(-re_a, 2), (1, 2)]));
        assert_eq!(rem, q(&[im_a * im_a - b2]));
    }

    #[test]
    fn divmod_exact_and_errors() {
        let (quot, rem) = q(&[0, 0, 1]).div_rem(&q(&[0, 1])).unwrap();
        assert_eq!(quot, q(&[0, 1]));
        assert!(rem.is_zero());
        assert_eq!(q(&[1]).div_rem(&Poly::zero()), Err(Error::ZeroPolynomialDivisor));
    }

    #[test]
    fn gcd_examples() {
        let re_a = Q::from_int(7);
        let double = Poly::linear_root(&re_a).pow(2);
        let g = double.gcd_with(&double.derivative()).unwrap();
        assert_eq!(g, Poly::linear_root(&re_a));

        assert_eq!(q(&[-3, 0, 1]).gcd_with(&q(&[0, 2])).unwrap(), q(&[1]));

        let a = lin(1) * lin(1) * lin(2);
        let b = lin(1) * lin(3);
        assert_eq!(a.gcd_with(&b).unwrap(), lin(1));

        assert_eq!(q(&[2, 4]).gcd_with(&Poly::zero()).unwrap(), qr(&[(1, 2), (1, 1)]));
        assert_eq!(Poly::<Q>::zero().gcd_with(&Poly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn derivative_examples() {
        // lambda^4 + alpha lambda^2 + beta with alpha = -3, beta = 1
        assert_eq!(q(&[1, 0, -3, 0, 1]).derivative(), q(&[0, -6, 0, 4]));
        assert!(q(&[5]).derivative().is_zero());
        assert_eq!(lin(1).pow(2).derivative(), q(&[-2, 2]));
    }

    #[test]
    fn squarefree_examples() {
        let re_a = Q::from_int(3);
        let c = Poly::linear_root(&re_a).pow(2).squarefree_check().unwrap();
        assert!(!c.is_squarefree);
        assert_eq!(c.witness, Poly::linear_root(&re_a));

        let c = (lin(1) * lin(2)).squarefree_check().unwrap();
        assert!(c.is_squarefree);
        assert_eq!(c.witness, q(&[1]));

        let c = q(&[0, 0, 1]).squarefree_check().unwrap();
        assert!(!c.is_squarefree);
        assert_eq!(c.witness, q(&[0, 1]));

        assert_eq!(q(&[3]).squarefree_check(), Err(Error::ConstantPolynomial));
        assert_eq!(Poly::<Q>::zero().squarefree_part(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn squarefree_part_examples() {
        let p = lin(1) * lin(1) * lin(2);
        assert_eq!(p.squarefree_part().unwrap(), lin(1) * lin(2));
        assert_eq!(q(&[0, 0, 1]).squarefree_part().unwrap(), q(&[0, 1]));
        assert_eq!((lin(1) * lin(2)).squarefree_part().unwrap(), lin(1) * lin(2));
    }

    #[test]
    fn gaussian_coefficients() {
        // (lambda - i)^2 over Q(i)
        let p = Poly::linear_root(&G::i()).pow(2);
        let c = p.squarefree_check().unwrap();
        assert_eq!(c.witness, Poly::linear_root(&G::i()));
    }

    #[test]
    fn display() {
        let p = q(&[2, -3, 1]);
        assert_eq!(p.display("λ").to_string(), "λ^2 - 3*λ + 2");
        assert_eq!(
            qr(&[(3, 2), (0, 1), (-1, 1)]).display("eps").to_string(),
            "-eps^2 + 3/2"
        );
        let g: Poly<G> = Poly::new(vec![G::from_ints(1, 1), G::from_ints(0, -1)]);
        assert_eq!(g.display("eps").to_string(), "-i*eps + (1 + i)");
        let nested: Poly<Poly<G>> = Poly::new(vec![g.clone(), Poly::one()]);
        assert_eq!(nested.display("λ").to_string(), "λ + (-i*eps + (1 + i))");
        assert_eq!(Poly::<Q>::zero().display("x").to_string(), "0");
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (-20i64..20, 1i64..6).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly<Q>> {
        prop::collection::vec(arb_q(), 0..max_len).prop_map(Poly::new)
    }

    fn arb_gpoly(max_len: usize) -> impl Strategy<Value = Poly<G>> {
        prop::collection::vec((arb_q(), arb_q()).prop_map(|(a, b)| G::new(a, b)), 0..max_len).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(p0 in arb_poly(7), p1 in arb_poly(5)) {
            prop_assume!(!p1.is_zero());
            let (quot, rem) = p0.div_rem(&p1).unwrap();
            prop_assert!(rem.degree() < p1.degree());
            prop_assert_eq!(quot * p1 + rem, p0);
        }

        #[test]
        fn divmod_reconstructs_gaussian(p0 in arb_gpoly(6), p1 in arb_gpoly(4)) {
            prop_assume!(!p1.is_zero());
            let (quot, rem) = p0.div_rem(&p1).unwrap();
            prop_assert!(rem.degree() < p1.degree());
            prop_assert_eq!(quot * p1 + rem, p0);
        }

        #[test]
        fn gcd_laws(a in arb_poly(5), b in arb_poly(5), common in arb_poly(3), c in arb_q()) {
            let a = a * common.clone();
            let b = b * common;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd_with(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert_eq!(&g, &b.gcd_with(&a).unwrap());
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
            prop_assume!(!Ring::is_zero(&c));
            prop_assert_eq!(a.scale_by(&c).gcd_with(&b).unwrap(), g);
        }

        #[test]
        fn squarefree_part_is_squarefree(p in arb_poly(6), r in arb_poly(3)) {
            let p = p.clone() * p * r;
            prop_assume!(!p.is_constant());
            let s = p.squarefree_part().unwrap();
            prop_assert!(s.squarefree_check().unwrap().is_squarefree);
            prop_assert!(p.div_exact(&s).is_some());
        }
    }
}
