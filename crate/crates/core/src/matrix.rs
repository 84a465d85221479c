//! Dense square matrices over a commutative ring, the characteristic
//! polynomial together with `adj(λE - M)`, and PT-invariance.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Conjugate, GaussianRational, Rational, RationalAlgebra, Ring};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquareMatrix<R> {
    dim: usize,
    /// Row-major.
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn new(dim: usize, entries: Vec<R>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::RaggedRow {
                    row,
                    expected: dim,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(dim, entries)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| R::zero())
    }

    pub fn diagonal(diag: Vec<R>) -> Self {
        let dim = diag.len();
        Self::from_fn(dim, |i, j| if i == j { diag[i].clone() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, Ring::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, Ring::sub))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            (0..n).fold(R::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(other.get(k, j)))
                }
            })
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> R {
        (0..self.dim).fold(R::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    fn add_scalar(&self, c: &R) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let k = i * self.dim + i;
            out.entries[k] = out.entries[k].add(c);
        }
        out
    }

    /// `p(M)` by Horner's scheme.
    pub fn evaluate_poly(&self, p: &Poly<R>) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(self.dim), |acc, c| acc.mul_unchecked(self).add_scalar(c))
    }

    /// `λE - M` as a matrix of polynomials.
    pub fn characteristic_matrix(&self) -> SquareMatrix<Poly<R>> {
        SquareMatrix::from_fn(self.dim, |i, j| {
            let c = self.get(i, j).neg();
            if i == j {
                Poly::new(vec![c, R::one()])
            } else {
                Poly::constant(c)
            }
        })
    }
}

impl<R: Ring + Conjugate> SquareMatrix<R> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn is_hermitean(&self) -> bool {
        *self == self.adjoint()
    }
}

impl<R: Ring + Conjugate> Conjugate for SquareMatrix<R> {
    fn conj(&self) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(Conjugate::conj).collect(),
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `adj(λE - M) = Σ λ^k B_k`, stored as `B_0 .. B_(N-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjugatePoly<R> {
    coeff_matrices: Vec<SquareMatrix<R>>,
}

impl<R: Ring> AdjugatePoly<R> {
    pub fn coeff_matrices(&self) -> &[SquareMatrix<R>] {
        &self.coeff_matrices
    }

    pub fn dim(&self) -> usize {
        self.coeff_matrices[0].dim()
    }

    /// Entry `(i, j)` as a polynomial in λ.
    pub fn entry(&self, i: usize, j: usize) -> Poly<R> {
        Poly::new(self.coeff_matrices.iter().map(|b| b.get(i, j).clone()).collect())
    }

    pub fn to_matrix(&self) -> SquareMatrix<Poly<R>> {
        SquareMatrix::from_fn(self.dim(), |i, j| self.entry(i, j))
    }
}

/// Faddeev-LeVerrier: characteristic polynomial `det(λE - M)` and the
/// adjugate coefficients in `N` matrix products.
///
/// With `M_1 = E`, `c_(N-1) = -tr(M)`, and for `k >= 2`
/// `M_k = M M_(k-1) + c_(N-k+1) E`, `c_(N-k) = -tr(M M_k) / k`,
/// the adjugate is `Σ_k M_k λ^(N-k)`.
pub fn charpoly_and_adjugate<R: RationalAlgebra>(m: &SquareMatrix<R>) -> (Poly<R>, AdjugatePoly<R>) {
    let n = m.dim();
    let mut c = vec![R::zero(); n + 1];
    c[n] = R::one();
    let mut b = vec![SquareMatrix::zero(n); n];
    let mut mk = SquareMatrix::identity(n);
    for k in 1..=n {
        if k > 1 {
            mk = m.mul_unchecked(&mk).add_scalar(&c[n - k + 1]);
        }
        let am = m.mul_unchecked(&mk);
        let k_inv = Rational::new(1.into(), (k as i64).into());
        c[n - k] = am.trace().scale(&k_inv).neg();
        b[n - k] = mk.clone();
    }
    (Poly::new(c), AdjugatePoly { coeff_matrices: b })
}

/// Cofactor-expansion determinant. Exponential cost; for oracles only.
pub fn determinant_laplace<R: Ring>(m: &SquareMatrix<R>) -> R {
    fn det<R: Ring>(rows: &[Vec<R>], cols: &[usize]) -> R {
        if cols.len() == 1 {
            return rows[0][cols[0]].clone();
        }
        let mut acc = R::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = &rows[0][c];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&det(&rows[1..], &rest));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let rows: Vec<Vec<R>> = m.rows().map(<[R]>::to_vec).collect();
    let cols: Vec<usize> = (0..m.dim()).collect();
    det(&rows, &cols)
}

pub const COFACTOR_ORACLE_MAX_DIM: usize = 6;

/// Classical adjugate: transpose of the matrix of signed minors.
pub fn adjugate_cofactor<R: Ring>(m: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
    let n = m.dim();
    if n > COFACTOR_ORACLE_MAX_DIM {
        return Err(Error::OracleTooLarge {
            max: COFACTOR_ORACLE_MAX_DIM,
            found: n,
        });
    }
    if n == 1 {
        return Ok(SquareMatrix::identity(1));
    }
    let minor = |skip_r: usize, skip_c: usize| {
        let entries = (0..n)
            .filter(|&r| r != skip_r)
            .flat_map(|r| (0..n).filter(move |&c| c != skip_c).map(move |c| m.get(r, c).clone()))
            .collect();
        SquareMatrix { dim: n - 1, entries }
    };
    // adj[i][j] = (-1)^(i+j) det(minor without row j, column i)
    Ok(SquareMatrix::from_fn(n, |i, j| {
        let d = determinant_laplace(&minor(j, i));
        if (i + j) % 2 == 0 {
            d
        } else {
            d.neg()
        }
    }))
}

/// Embedding of Q(i) constants into the entry rings.
pub trait FromGaussian {
    fn from_gaussian(g: &GaussianRational) -> Self;
}

impl FromGaussian for GaussianRational {
    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }
}

impl<R: Ring + FromGaussian> FromGaussian for Poly<R> {
    fn from_gaussian(g: &GaussianRational) -> Self {
        Poly::constant(R::from_gaussian(g))
    }
}

/// A parity operator: any involutory matrix over Q(i).
#[derive(Clone, Debug, PartialEq)]
pub struct ParitySpec {
    matrix: SquareMatrix<GaussianRational>,
}

impl ParitySpec {
    pub fn new(matrix: SquareMatrix<GaussianRational>) -> Result<Self> {
        let sq = matrix.mul_unchecked(&matrix);
        if sq != SquareMatrix::identity(matrix.dim()) {
            return Err(Error::ParityNotInvolutory);
        }
        Ok(Self { matrix })
    }

    /// Ones on the minor diagonal; `σ_x` for `dim = 2`.
    pub fn anti_diagonal(dim: usize) -> Self {
        Self {
            matrix: SquareMatrix::from_fn(dim, |i, j| {
                if i + j + 1 == dim {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                }
            }),
        }
    }

    pub fn matrix(&self) -> &SquareMatrix<GaussianRational> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// `[H, PT] = 0` with `T` acting as complex conjugation, i.e.
/// `H P = P conj(H)` entrywise.
pub fn pt_invariance_check<R>(h: &SquareMatrix<R>, parity: &ParitySpec) -> Result<bool>
where
    R: Ring + Conjugate + FromGaussian,
{
    if h.dim() != parity.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: parity.dim(),
        });
    }
    let p = parity.matrix.map(R::from_gaussian);
    Ok(h.mul_unchecked(&p) == p.mul_unchecked(&h.conj()))
}
