//! Real-root counting and isolation over Q by Sturm sequences.
//!
//! Counts are of *distinct* roots in half-open intervals `(lo, hi]`. Chains
//! are always built from the square-free part, so multiple roots and roots
//! sitting exactly on an endpoint are handled without special cases.

use std::fmt;

use num_traits::Signed;

use super::Poly;
use crate::error::{Error, Result};
use crate::exact::{Rational, Ring};

type Q = Rational;

#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly<Q>>,
}

/// An isolating interval: exactly one distinct real root `r` with
/// `lo < r <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: Q,
    pub hi: Q,
}

impl RootInterval {
    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

#[derive(Clone, Copy)]
enum End<'a> {
    NegInf,
    At(&'a Q),
    PosInf,
}

fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl SturmChain {
    /// Signed remainder sequence of the square-free part of `p`:
    /// `s0 = p*, s1 = s0', s(k+1) = -(s(k-1) mod s(k))`.
    pub fn new(p: &Poly<Q>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Ok(Self { chain: vec![p.clone()] });
        }
        let base = p.squarefree_part()?;
        let mut chain = vec![base.clone(), base.derivative()];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(Ring::neg(&r));
        }
        Ok(Self { chain })
    }

    pub fn chain(&self) -> &[Poly<Q>] {
        &self.chain
    }

    fn signs_at<'a>(&'a self, at: End<'a>) -> impl Iterator<Item = i8> + 'a {
        self.chain.iter().map(move |p| match at {
            End::At(x) => sign(&p.eval(x)),
            End::PosInf => sign(p.leading().expect("chain members are nonzero")),
            End::NegInf => {
                let s = sign(p.leading().expect("chain members are nonzero"));
                if p.degree().finite().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        })
    }

    fn variations(&self, at: End<'_>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in self.signs_at(at).filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn count_between(&self, lo: End<'_>, hi: End<'_>) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Q, hi: &Q) -> Result<usize> {
        if lo >= hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(self.count_between(End::At(lo), End::At(hi)))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.count_between(End::NegInf, End::PosInf)
    }

    fn base(&self) -> &Poly<Q> {
        &self.chain[0]
    }
}

/// Number of distinct real roots of `p`, on the whole line or in `(lo, hi]`.
pub fn sturm_count_real_roots(p: &Poly<Q>, interval: Option<(&Q, &Q)>) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    match interval {
        None => Ok(chain.count_all()),
        Some((lo, hi)) => chain.count_in(lo, hi),
    }
}

/// `1 + max |a_k / a_n|`: every root lies strictly inside `(-B, B)`.
fn cauchy_bound(p: &Poly<Q>) -> Q {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Q::zero);
    max + Q::from_int(1)
}

fn midpoint(a: &Q, b: &Q) -> Q {
    (a + b) / Q::from_int(2)
}

/// Isolating intervals of width at most `width`, one per distinct real root,
/// sorted left to right.
pub fn isolate_real_roots(p: &Poly<Q>, width: &Q) -> Result<Vec<RootInterval>> {
    if !width.is_positive() {
        return Err(Error::InvalidInterval {
            lo: "0".into(),
            hi: width.to_string(),
        });
    }
    let chain = SturmChain::new(p)?;
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(chain.base());
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_between(End::At(&lo), End::At(&hi));
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *width {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = midpoint(&lo, &hi);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

fn refine(chain: &SturmChain, iv: &RootInterval, width: &Q) -> RootInterval {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    while &hi - &lo > *width {
        let mid = midpoint(&lo, &hi);
        if chain.count_between(End::At(&lo), End::At(&mid)) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}

/// The root isolated by `iv`, if it is rational.
///
/// A rational root `a/b` of a primitive integer polynomial has `b` dividing
/// the leading coefficient `L`, so `L*r` is an integer. Once the interval is
/// shorter than `1/|L|` there is at most one candidate to test.
pub fn rational_root_in(p: &Poly<Q>, iv: &RootInterval) -> Result<Option<Q>> {
    let chain = SturmChain::new(p)?;
    let base = chain.base().clone();
    if base.is_constant() {
        return Ok(None);
    }
    if chain.count_between(End::At(&iv.lo), End::At(&iv.hi)) != 1 {
        return Err(Error::invariant("interval does not isolate a single root"));
    }
    let denom_lcm = base.coeffs().iter().fold(num_bigint::BigInt::from(1), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let lead = (base.leading().expect("nonzero") * Q::from_integer(denom_lcm)).abs();
    let narrow = refine(&chain, iv, &(Q::from_int(1) / (&lead + Q::from_int(1))));
    let k = (&narrow.hi * &lead).floor();
    if k <= &narrow.lo * &lead {
        return Ok(None);
    }
    let candidate = k / &lead;
    Ok(base.eval(&candidate).is_zero().then_some(candidate))
}
