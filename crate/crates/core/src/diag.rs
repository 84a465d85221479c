//! Diagonalizability of a single matrix over Q(i), decided from the minimal
//! polynomial without computing any eigenvalue.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational, Ring};
use crate::matrix::{
    adjugate_cofactor, charpoly_and_adjugate, determinant_laplace, pt_invariance_check, AdjugatePoly, ParitySpec,
    SquareMatrix, COFACTOR_ORACLE_MAX_DIM,
};
use crate::poly::Poly;

type G = GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Diagonalizable,
    Defective,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Diagonalizable => "diagonalizable",
            Verdict::Defective => "defective",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PtStatus {
    PtInvariant,
    NotChecked,
    NotPt,
}

impl fmt::Display for PtStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PtStatus::PtInvariant => "pt_invariant",
            PtStatus::NotChecked => "not_checked",
            PtStatus::NotPt => "not_pt",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagnosisReport {
    pub char_poly: Poly<G>,
    pub d_poly: Poly<G>,
    pub min_poly: Poly<G>,
    pub verdict: Verdict,
    /// `gcd(m, m')`; constant exactly when the verdict is diagonalizable.
    pub witness: Poly<G>,
    pub pt_status: PtStatus,
    /// Whether `p`, `d` and `m` all have real coefficients.
    pub realness_ok: bool,
    /// The parameter value when the matrix came from a family.
    pub parameter: Option<Rational>,
}

impl DiagnosisReport {
    pub fn factorization_holds(&self) -> bool {
        Ring::mul(&self.d_poly, &self.min_poly) == self.char_poly
    }

    /// PT-invariant, yet some coefficient is not real.
    pub fn realness_violated(&self) -> bool {
        self.pt_status == PtStatus::PtInvariant && !self.realness_ok
    }
}

/// Monic gcd of all adjugate entries, folded row-major with early exit.
pub fn compute_d(adj: &AdjugatePoly<G>) -> Result<Poly<G>> {
    let n = adj.dim();
    let mut acc: Option<Poly<G>> = None;
    for i in 0..n {
        for j in 0..n {
            let e = adj.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let g = match acc {
                None => e.monic(),
                Some(g) => g.gcd_with(&e)?,
            };
            if g.is_constant() {
                return Ok(Poly::one());
            }
            acc = Some(g);
        }
    }
    acc.ok_or_else(|| Error::invariant("all adjugate entries vanish"))
}

struct Parts {
    p: Poly<G>,
    d: Poly<G>,
    m: Poly<G>,
}

fn parts(mat: &SquareMatrix<G>) -> Result<Parts> {
    let (p, adj) = charpoly_and_adjugate(mat);
    let d = compute_d(&adj)?;
    let m = p
        .div_exact(&d)
        .ok_or_else(|| Error::invariant(format!("d = {} does not divide p = {}", d.display("λ"), p.display("λ"))))?;
    if !mat.evaluate_poly(&m).is_zero() {
        return Err(Error::invariant(format!(
            "m = {} does not annihilate the matrix",
            m.display("λ")
        )));
    }
    Ok(Parts { p, d, m })
}

/// `p / d`, checked to annihilate `mat`.
pub fn minimal_polynomial(mat: &SquareMatrix<G>) -> Result<Poly<G>> {
    Ok(parts(mat)?.m)
}

pub fn diagnose(mat: &SquareMatrix<G>, parity: Option<&ParitySpec>) -> Result<DiagnosisReport> {
    let Parts { p, d, m } = parts(mat)?;
    let check = m.squarefree_check()?;
    let pt_status = match parity {
        None => PtStatus::NotChecked,
        Some(par) if pt_invariance_check(mat, par)? => PtStatus::PtInvariant,
        Some(_) => PtStatus::NotPt,
    };
    let realness_ok = [&p, &d, &m].iter().all(|q| q.has_real_coeffs());
    Ok(DiagnosisReport {
        char_poly: p,
        d_poly: d,
        min_poly: m,
        verdict: if check.is_squarefree {
            Verdict::Diagonalizable
        } else {
            Verdict::Defective
        },
        witness: check.witness,
        pt_status,
        realness_ok,
        parameter: None,
    })
}

/// Independent criterion: `M` is diagonalizable iff the square-free part of
/// its characteristic polynomial annihilates it. The determinant is
/// expanded by cofactors where that is affordable.
pub fn oracle_diagonalizable(mat: &SquareMatrix<G>) -> bool {
    let p = if mat.dim() <= COFACTOR_ORACLE_MAX_DIM {
        determinant_laplace(&mat.characteristic_matrix())
    } else {
        charpoly_and_adjugate(mat).0
    };
    let q = p
        .squarefree_part()
        .expect("characteristic polynomial has degree N >= 1");
    mat.evaluate_poly(&q).is_zero()
}

/// For hermitean `M`: whether some eigenvalue is repeated.
pub fn hermitean_degeneracy_check(mat: &SquareMatrix<G>) -> Result<bool> {
    if !mat.is_hermitean() {
        return Err(Error::NotHermitean);
    }
    let (p, _) = charpoly_and_adjugate(mat);
    Ok(!p.squarefree_check()?.is_squarefree)
}

/// Cofactor-based adjugate of `λE - M`, for cross-checks on small inputs.
pub fn adjugate_oracle(mat: &SquareMatrix<G>) -> Result<SquareMatrix<Poly<G>>> {
    adjugate_cofactor(&mat.characteristic_matrix())
}
