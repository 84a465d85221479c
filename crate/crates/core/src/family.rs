//! One-parameter families `M(eps)`: generic minimal polynomial over Q(eps),
//! the exceptional-point locus in eps, pointwise confirmation and the
//! real/complex region census.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::diag::{diagnose, DiagnosisReport, Verdict};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational, Ring};
use crate::matrix::{charpoly_and_adjugate, AdjugatePoly, ParitySpec, SquareMatrix};
use crate::poly::{
    isolate_real_roots, primitive_gcd, rational_root_in, resultant, sturm_count_real_roots, Poly, RootInterval,
};
use crate::ratfunc::RationalFunction;

type G = GaussianRational;
/// A polynomial in eps over Q(i).
pub type EpsPoly = Poly<G>;
/// A polynomial in λ whose coefficients are polynomials in eps.
pub type FamilyPoly = Poly<EpsPoly>;

#[derive(Clone, Debug, PartialEq)]
pub struct ParamMatrix {
    inner: SquareMatrix<EpsPoly>,
}

impl ParamMatrix {
    pub fn new(inner: SquareMatrix<EpsPoly>) -> Self {
        Self { inner }
    }

    pub fn from_constant(m: &SquareMatrix<G>) -> Self {
        Self::new(m.map(|c| Poly::constant(c.clone())))
    }

    pub fn matrix(&self) -> &SquareMatrix<EpsPoly> {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn is_constant(&self) -> bool {
        self.inner.entries().iter().all(Poly::is_constant)
    }

    /// Exact substitution `eps := eps0`.
    pub fn specialize(&self, eps0: &Rational) -> SquareMatrix<G> {
        let at = G::real(eps0.clone());
        self.inner.map(|e| e.eval(&at))
    }

    /// Largest eps-degree among the entries.
    pub fn max_entry_degree(&self) -> usize {
        self.inner
            .entries()
            .iter()
            .filter_map(|e| e.degree().finite())
            .max()
            .unwrap_or(0)
    }
}

/// `det(λE - M(eps))`, monic in λ.
pub fn family_charpoly(fam: &ParamMatrix) -> FamilyPoly {
    charpoly_and_adjugate(fam.matrix()).0
}

/// Substitute `eps := eps0` into every coefficient.
pub fn specialize_poly(p: &FamilyPoly, eps0: &Rational) -> Poly<G> {
    let at = G::real(eps0.clone());
    p.map(|c| c.eval(&at))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenericMinPoly {
    pub char_poly: FamilyPoly,
    pub d: FamilyPoly,
    pub m: FamilyPoly,
    /// Real eps-polynomials (monic, square-free) whose roots may invalidate
    /// the generic gcd.
    pub degeneracy_polys: Vec<Poly<Rational>>,
}

/// Real parameter values where `c(eps)` vanishes are the roots of
/// `gcd(Re c, Im c)`.
fn real_vanishing_poly(c: &EpsPoly) -> Option<Poly<Rational>> {
    if c.is_constant() {
        return None;
    }
    let (re, im) = c.split_re_im();
    let g = if im.is_zero() {
        re.monic()
    } else if re.is_zero() {
        im.monic()
    } else {
        re.gcd_with(&im).ok()?
    };
    if g.is_constant() {
        None
    } else {
        g.squarefree_part().ok()
    }
}

fn collect_degeneracies(raw: &[EpsPoly]) -> Vec<Poly<Rational>> {
    let mut seen = Vec::new();
    for q in raw.iter().filter_map(real_vanishing_poly) {
        if !seen.contains(&q) {
            seen.push(q);
        }
    }
    seen
}

/// Primitive-PRS gcd of the adjugate entries, returned with the raw
/// degeneracy coefficients met on the way.
fn generic_d(adj: &AdjugatePoly<EpsPoly>) -> Result<(FamilyPoly, Vec<EpsPoly>)> {
    let n = adj.dim();
    let entries: Vec<FamilyPoly> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| adj.entry(i, j))
        .filter(|e| !e.is_zero())
        .collect();
    // An entry that is a nonzero Q(i) constant forces d = 1 everywhere.
    if entries.iter().any(|e| e.is_constant() && e.coeff(0).is_constant()) {
        return Ok((Poly::one(), Vec::new()));
    }
    let mut degeneracies = Vec::new();
    let mut iter = entries.into_iter();
    let mut acc = iter
        .next()
        .ok_or_else(|| Error::invariant("all adjugate entries vanish"))?;
    for e in iter {
        if acc.is_constant() {
            break;
        }
        let step = primitive_gcd(&acc, &e)?;
        degeneracies.extend(step.degeneracies);
        acc = step.gcd;
    }
    if acc.is_constant() {
        if !acc.coeff(0).is_constant() {
            degeneracies.push(acc.coeff(0));
        }
        return Ok((Poly::one(), degeneracies));
    }
    let lead = acc.leading().expect("nonzero");
    if !lead.is_constant() {
        return Err(Error::invariant(
            "generic gcd of the adjugate has a non-constant leading coefficient",
        ));
    }
    let inv = crate::exact::Field::inv(&lead.coeff(0))?;
    let d = acc.map(|c| c.scale_by(&inv));
    Ok((d, degeneracies))
}

/// Division by a monic divisor in `R[λ]`.
fn div_monic<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
    let db = b.degree().finite().ok_or(Error::ZeroPolynomialDivisor)?;
    let mut rem = a.coeffs().to_vec();
    let Some(da) = a.degree().finite() else {
        return Ok(Poly::zero());
    };
    if da < db {
        return Err(Error::invariant("divisor degree exceeds dividend degree"));
    }
    let mut quot = vec![R::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (t, bc) in b.coeffs().iter().enumerate() {
            rem[k + t] = rem[k + t].sub(&c.mul(bc));
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::invariant(
            "generic d does not divide the characteristic polynomial",
        ));
    }
    Ok(Poly::new(quot))
}

pub fn generic_minimal_polynomial(fam: &ParamMatrix) -> Result<GenericMinPoly> {
    let (p, adj) = charpoly_and_adjugate(fam.matrix());
    let (d, raw) = generic_d(&adj)?;
    let m = div_monic(&p, &d)?;
    Ok(GenericMinPoly {
        char_poly: p,
        d,
        m,
        degeneracy_polys: collect_degeneracies(&raw),
    })
}

/// The generic `d` by plain monic Euclid over Q(i)(eps). Used only to
/// cross-check the primitive-PRS route.
pub fn naive_generic_d(fam: &ParamMatrix) -> Result<Poly<RationalFunction<G>>> {
    let (_, adj) = charpoly_and_adjugate(fam.matrix());
    let n = adj.dim();
    let lift = |e: &FamilyPoly| e.map(|c| RationalFunction::from_poly(c.clone()));
    let mut acc: Option<Poly<RationalFunction<G>>> = None;
    for i in 0..n {
        for j in 0..n {
            let e = adj.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let e = lift(&e);
            acc = Some(match acc {
                None => e.monic(),
                Some(a) => a.gcd_with(&e)?,
            });
        }
    }
    acc.ok_or_else(|| Error::invariant("all adjugate entries vanish"))
}

/// Whether the PRS route and naive Euclid agree on `d`.
pub fn cross_check_generic_d(fam: &ParamMatrix) -> Result<bool> {
    let prs = generic_minimal_polynomial(fam)?.d;
    let naive = naive_generic_d(fam)?;
    Ok(prs.map(|c| RationalFunction::from_poly(c.clone())) == naive)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateSource {
    Locus,
    Degeneracy,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnconfirmedCandidate {
    pub interval: RootInterval,
    pub source: CandidateSource,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionalLocus {
    /// Monic square-free part of the real numerator of `disc_λ(m)`;
    /// zero when the family is defective for every eps.
    pub locus: Poly<Rational>,
    pub degeneracy_polys: Vec<Poly<Rational>>,
    pub real_root_intervals: Vec<RootInterval>,
    pub confirmed_defective: Vec<DiagnosisReport>,
    /// Rational candidates at which the pointwise test found a
    /// diagonalizable matrix.
    pub cleared: Vec<Rational>,
    pub unconfirmed_candidates: Vec<UnconfirmedCandidate>,
    pub generically_defective: bool,
    pub generic: GenericMinPoly,
}

impl ExceptionalLocus {
    pub fn confirmed_points(&self) -> Vec<&Rational> {
        self.confirmed_defective
            .iter()
            .filter_map(|r| r.parameter.as_ref())
            .collect()
    }

    /// No candidate of any kind.
    pub fn is_empty(&self) -> bool {
        !self.generically_defective
            && self.real_root_intervals.is_empty()
            && self.confirmed_defective.is_empty()
            && self.cleared.is_empty()
            && self.unconfirmed_candidates.is_empty()
    }
}

/// `disc_λ(m)` as a real polynomial in eps: `gcd(Re, Im)` of the resultant
/// `Res(m, ∂m/∂λ)`, made monic and square-free.
fn locus_poly(m: &FamilyPoly) -> Result<Option<Poly<Rational>>> {
    let r = resultant(m, &m.derivative())?;
    if r.is_zero() {
        return Ok(None);
    }
    Ok(Some(real_vanishing_poly(&r).unwrap_or_else(Poly::one)))
}

pub fn exceptional_locus(fam: &ParamMatrix, width: &Rational, parity: Option<&ParitySpec>) -> Result<ExceptionalLocus> {
    let generic = generic_minimal_polynomial(fam)?;
    let (locus, generically_defective) = match locus_poly(&generic.m)? {
        Some(l) => (l, false),
        None => (Poly::zero(), true),
    };
    let real_root_intervals = if locus.is_constant() {
        Vec::new()
    } else {
        isolate_real_roots(&locus, width)?
    };

    let mut rational = BTreeSet::new();
    let mut unconfirmed_candidates = Vec::new();
    let mut classify = |poly: &Poly<Rational>, iv: RootInterval, source| -> Result<()> {
        match rational_root_in(poly, &iv)? {
            Some(q) => {
                rational.insert(q);
            }
            None => unconfirmed_candidates.push(UnconfirmedCandidate { interval: iv, source }),
        }
        Ok(())
    };
    for iv in &real_root_intervals {
        classify(&locus, iv.clone(), CandidateSource::Locus)?;
    }
    for q in &generic.degeneracy_polys {
        for iv in isolate_real_roots(q, width)? {
            classify(q, iv, CandidateSource::Degeneracy)?;
        }
    }

    let mut confirmed_defective = Vec::new();
    let mut cleared = Vec::new();
    for eps0 in rational {
        let r = pointwise_verdict(fam, &eps0, parity)?;
        if r.verdict == Verdict::Defective {
            confirmed_defective.push(r);
        } else {
            cleared.push(eps0);
        }
    }
    Ok(ExceptionalLocus {
        locus,
        degeneracy_polys: generic.degeneracy_polys.clone(),
        real_root_intervals,
        confirmed_defective,
        cleared,
        unconfirmed_candidates,
        generically_defective,
        generic,
    })
}

pub fn pointwise_verdict(fam: &ParamMatrix, eps0: &Rational, parity: Option<&ParitySpec>) -> Result<DiagnosisReport> {
    let mut r = diagnose(&fam.specialize(eps0), parity)?;
    r.parameter = Some(eps0.clone());
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCensus {
    pub sample: Rational,
    pub n_real: usize,
    pub n_complex_pairs: usize,
    pub defective_at_sample: bool,
}

/// Real and complex-pair counts of the distinct eigenvalues at each sample.
pub fn region_census(fam: &ParamMatrix, samples: &[Rational]) -> Result<Vec<RegionCensus>> {
    let p = family_charpoly(fam);
    if !p.coeffs().iter().all(Poly::has_real_coeffs) {
        return Err(Error::NonRealCoefficients);
    }
    samples
        .par_iter()
        .map(|eps0| {
            let (re, _) = specialize_poly(&p, eps0).split_re_im();
            let sqf = re.squarefree_part()?;
            let distinct = sqf.degree().finite().unwrap_or(0);
            let n_real = sturm_count_real_roots(&sqf, None)?;
            let verdict = pointwise_verdict(fam, eps0, None)?.verdict;
            Ok(RegionCensus {
                sample: eps0.clone(),
                n_real,
                n_complex_pairs: (distinct - n_real) / 2,
                defective_at_sample: verdict == Verdict::Defective,
            })
        })
        .collect()
}
