//! Fraction-free remainder sequences over a gcd domain `D`: pseudo-division,
//! contents, the primitive PRS gcd and the subresultant resultant.
//!
//! These work over `D = Q(i)[eps]` without ever forming rational functions,
//! which keeps coefficient growth under control.

use super::Poly;
use crate::error::{Error, Result};
use crate::exact::{GcdDomain, Ring};

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without division.
pub fn pseudo_rem<D: Ring>(a: &Poly<D>, b: &Poly<D>) -> Result<Poly<D>> {
    let db = b.degree().finite().ok_or(Error::ZeroPolynomialDivisor)?;
    let Some(da) = a.degree().finite() else {
        return Ok(Poly::zero());
    };
    if da < db {
        return Ok(a.clone());
    }
    let lb = b.leading().expect("nonzero").clone();
    let mut rem = a.coeffs().to_vec();
    let mut steps = da - db + 1;
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1;
        let lr = rem[k].clone();
        for c in rem.iter_mut() {
            *c = c.mul(&lb);
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            let idx = k - db + j;
            rem[idx] = rem[idx].sub(&lr.mul(bc));
        }
        rem.pop();
        while rem.last().is_some_and(Ring::is_zero) {
            rem.pop();
        }
        steps -= 1;
    }
    // Top terms can cancel early; finish the lc(b) power so the result is
    // always the classical pseudo-remainder.
    let mut r = Poly::new(rem);
    for _ in 0..steps {
        r = r.scale_by(&lb);
    }
    Ok(r)
}

/// Gcd of all coefficients; zero for the zero polynomial.
pub fn content<D: GcdDomain>(p: &Poly<D>) -> D {
    let mut g = D::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `(content, p / content)`, with the primitive part normalized so that its
/// leading coefficient is in canonical form.
pub fn primitive_part<D: GcdDomain>(p: &Poly<D>) -> (D, Poly<D>) {
    if p.is_zero() {
        return (D::zero(), Poly::zero());
    }
    let c = content(p);
    let lead = p.leading().expect("nonzero");
    let c = c.mul(&lead.exact_div(&c).expect("content divides").unit_part());
    let pp = p.map(|a| a.exact_div(&c).expect("content divides every coefficient"));
    (c, pp)
}

/// Gcd over the fraction field of `D`, plus every element of `D` whose
/// vanishing under a specialization could change the answer: leading
/// coefficients of the sequence and the contents divided out along the way.
#[derive(Clone, Debug)]
pub struct PrsGcd<D> {
    pub gcd: Poly<D>,
    pub degeneracies: Vec<D>,
}

/// Primitive polynomial remainder sequence gcd. The result is primitive
/// with normalized leading coefficient, so it is the gcd over `Frac(D)` up
/// to a unit of `D`.
pub fn primitive_gcd<D: GcdDomain>(a: &Poly<D>, b: &Poly<D>) -> Result<PrsGcd<D>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut degeneracies = Vec::new();
    let mut note = |d: &D| {
        if !d.is_zero() && !d.is_unit() {
            degeneracies.push(d.clone());
        }
    };
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    for p in [&mut a, &mut b] {
        if !p.is_zero() {
            let (c, pp) = primitive_part(p);
            note(&c);
            note(pp.leading().expect("nonzero"));
            *p = pp;
        }
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b)?;
        let (c, pp) = primitive_part(&r);
        if !r.is_zero() {
            note(&c);
            note(pp.leading().expect("nonzero"));
        }
        a = std::mem::replace(&mut b, pp);
    }
    Ok(PrsGcd { gcd: a, degeneracies })
}

fn pow<D: Ring>(x: &D, e: usize) -> D {
    (0..e).fold(D::one(), |acc, _| acc.mul(x))
}

fn div<D: GcdDomain>(a: &D, b: &D) -> Result<D> {
    a.exact_div(b)
        .ok_or_else(|| Error::invariant("inexact division in subresultant sequence"))
}

/// Resultant by the subresultant PRS (Collins, Brown), entirely in `D`.
pub fn resultant<D: GcdDomain>(a: &Poly<D>, b: &Poly<D>) -> Result<D> {
    let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) else {
        return Ok(D::zero());
    };
    if da == 0 {
        return Ok(pow(a.leading().expect("nonzero"), db));
    }
    if db == 0 {
        return Ok(pow(b.leading().expect("nonzero"), da));
    }
    let (mut a, mut b, mut sign) = if da < db {
        (b.clone(), a.clone(), if (da * db) % 2 == 1 { -1 } else { 1 })
    } else {
        (a.clone(), b.clone(), 1)
    };
    let (ca, pa) = primitive_part(&a);
    let (cb, pb) = primitive_part(&b);
    let t = pow(&ca, pb.degree().finite().expect("nonzero")).mul(&pow(&cb, pa.degree().finite().expect("nonzero")));
    a = pa;
    b = pb;
    let (mut g, mut h) = (D::one(), D::one());
    loop {
        let da = a.degree().finite().expect("nonzero");
        let db = b.degree().finite().expect("nonzero");
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b)?;
        a = b;
        let scale = g.mul(&pow(&h, delta));
        b = r.map(|c| c.exact_div(&scale).expect("subresultant division is exact"));
        g = a.leading().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            div(&pow(&g, delta), &pow(&h, delta - 1))?
        };
        match b.degree().finite() {
            None => return Ok(D::zero()),
            Some(0) => {
                let da = a.degree().finite().expect("nonzero");
                let lb = b.leading().expect("nonzero");
                let h = div(&pow(lb, da), &pow(&h, da - 1))?;
                let res = t.mul(&h);
                return Ok(if sign < 0 { res.neg() } else { res });
            }
            Some(_) => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Field, GaussianRational, Rational};
    use proptest::prelude::*;

    type Q = Rational;
    type E = Poly<GaussianRational>;

    /// Sylvester matrix determinant by plain Gaussian elimination over Q,
    /// independent of the PRS path.
    fn sylvester_det_q(a: &Poly<Q>, b: &Poly<Q>) -> Q {
        let m = a.degree().finite().unwrap();
        let n = b.degree().finite().unwrap();
        let size = m + n;
        let mut rows = vec![vec![Q::zero(); size]; size];
        for i in 0..n {
            for (k, c) in a.coeffs().iter().rev().enumerate() {
                rows[i][i + k] = c.clone();
            }
        }
        for i in 0..m {
            for (k, c) in b.coeffs().iter().rev().enumerate() {
                rows[n + i][i + k] = c.clone();
            }
        }
        let mut det = Q::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
                return Q::zero();
            };
            if piv != col {
                rows.swap(piv, col);
                det = det.neg();
            }
            let p = rows[col][col].clone();
            det = det.mul(&p);
            let (top, below) = rows.split_at_mut(col + 1);
            let pivot_row = &top[col];
            for row in below {
                let f = Field::div(&row[col], &p).unwrap();
                for (x, y) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x = x.sub(&y.mul(&f));
                }
            }
        }
        det
    }

    fn q(coeffs: &[i64]) -> Poly<Q> {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let a = q(&[1, 2, 3, 4]);
        let b = q(&[1, 0, 2]);
        let r = pseudo_rem(&a, &b).unwrap();
        // lc(b)^2 * a = q*b + r for some q.
        let (_, expect) = a.scale_by(&Q::from_int(4)).div_rem(&b).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn resultant_of_quartic_and_derivative() {
        // disc(x^4 + a x^2 + b) = 16 b (a^2 - 4b)^2; res(p, p') = disc for
        // monic quartics (sign (-1)^(4*3/2) = 1).
        for (alpha, beta) in [(-3i64, 1i64), (2, 5), (0, 7), (-4, 4)] {
            let p = q(&[beta, 0, alpha, 0, 1]);
            let r = resultant(&p, &p.derivative()).unwrap();
            let disc = 16 * beta * (alpha * alpha - 4 * beta).pow(2);
            assert_eq!(r, Q::from_int(disc));
        }
    }

    #[test]
    fn resultant_over_eps_polynomials() {
        // p = lambda^4 + alpha lambda^2 + beta with s = delta = 1.
        let alpha: E = Poly::from_ints(&[-3, 0, 2]);
        let beta: E = Poly::from_ints(&[1, 0, -3, 0, 1]);
        let p: Poly<E> = Poly::new(vec![beta.clone(), E::zero(), alpha, E::zero(), E::one()]);
        let r = resultant(&p, &p.derivative()).unwrap();
        assert_eq!(r, beta.scale_by(&GaussianRational::from_ints(16 * 25, 0)));
    }

    #[test]
    fn primitive_gcd_over_eps() {
        let x: E = Poly::x();
        let one = E::one();
        // (lambda - eps)^2 (lambda + 1) and (lambda - eps)(lambda - 2)
        let le: Poly<E> = Poly::new(vec![x.neg(), one.clone()]);
        let a = le.clone() * le.clone() * Poly::new(vec![one.clone(), one.clone()]);
        let b = le.clone() * Poly::new(vec![E::from_int(-2), one.clone()]);
        let g = primitive_gcd(&a, &b).unwrap();
        assert_eq!(g.gcd, le);
        // The last nonzero remainder before the gcd has content (eps - 2) (eps + 1)
        // up to units; the specialization eps = 2 makes the gcd larger.
        let specials: Vec<_> = g
            .degeneracies
            .iter()
            .map(|d| d.eval(&GaussianRational::from_ints(2, 0)))
            .collect();
        assert!(specials.iter().any(|v| v.is_zero()));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(primitive_gcd::<Q>(&Poly::zero(), &Poly::zero()).is_err());
        assert_eq!(resultant(&q(&[3]), &q(&[1, 1])).unwrap(), Q::from_int(3));
        assert_eq!(resultant(&Poly::zero(), &q(&[1, 1])).unwrap(), Q::zero());
        assert_eq!(resultant(&q(&[-1, 1]), &q(&[-1, 1])).unwrap(), Q::zero());
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly<Q>> {
        prop::collection::vec((-9i64..9, 1i64..4).prop_map(|(n, d)| rat(n, d)), 1..max_len).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn resultant_matches_sylvester(a in arb_poly(6), b in arb_poly(6)) {
            prop_assume!(!a.is_constant() && !b.is_constant());
            prop_assert_eq!(resultant(&a, &b).unwrap(), sylvester_det_q(&a, &b));
        }

        #[test]
        fn primitive_gcd_agrees_with_field_gcd(a in arb_poly(5), b in arb_poly(5), c in arb_poly(3)) {
            let a = a * c.clone();
            let b = b * c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = primitive_gcd(&a, &b).unwrap().gcd;
            prop_assert_eq!(g.monic(), a.gcd_with(&b).unwrap());
        }
    }
}
