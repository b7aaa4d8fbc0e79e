//! Exact rank, kernel, determinant, span membership and Kronecker products
//! over ℚ and over polynomial rings.
//!
//! Scalar ranks and determinants go through fraction-free Bareiss
//! elimination on cleared-denominator integer matrices; polynomial
//! determinants use the same scheme with exact polynomial division. Generic
//! rank of a polynomial matrix is sampled by random integer substitution and
//! can be certified symbolically via minor vanishing.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::poly::{rat_int, MPoly, Rational};
use crate::reduce;

/// Errors from the linear algebra layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinalgError {
    /// A scalar-only operation was called on a matrix with polynomial entries.
    NonScalar,
    /// A determinant was requested for a non-square matrix.
    NonSquare,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NonScalar => write!(f, "operation requires a scalar matrix"),
            LinalgError::NonSquare => write!(f, "operation requires a square matrix"),
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense matrix with polynomial entries; degree-0 entries represent
/// rational scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MPoly>,
}

impl ExactMatrix {
    pub fn from_polys(rows: usize, cols: usize, nvars: usize, entries: Vec<MPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(entries.iter().all(|p| p.nvars() == nvars));
        ExactMatrix { rows, cols, nvars, entries }
    }

    pub fn from_rationals(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        let entries = entries
            .into_iter()
            .map(|c| MPoly::constant(0, c))
            .collect();
        ExactMatrix::from_polys(rows, cols, 0, entries)
    }

    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols));
        ExactMatrix::from_rationals(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rational_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        ExactMatrix::from_rationals(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn at(&self, r: usize, c: usize) -> &MPoly {
        &self.entries[r * self.cols + c]
    }

    /// True iff all entries are constants.
    pub fn is_scalar(&self) -> bool {
        self.entries.iter().all(MPoly::is_constant)
    }

    fn scalar_rows(&self) -> Result<Vec<Vec<Rational>>, LinalgError> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(self.at(r, c).constant_value().ok_or(LinalgError::NonScalar)?);
            }
            out.push(row);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        ExactMatrix::from_polys(self.cols, self.rows, self.nvars, entries)
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> ExactMatrix {
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &r in row_idx {
            for &c in col_idx {
                entries.push(self.at(r, c).clone());
            }
        }
        ExactMatrix::from_polys(row_idx.len(), col_idx.len(), self.nvars, entries)
    }

    pub fn select_columns(&self, col_idx: &[usize]) -> ExactMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, col_idx)
    }

    /// Appends one column on the right.
    pub fn augment_column(&self, col: &[MPoly]) -> ExactMatrix {
        assert_eq!(col.len(), self.rows, "augmenting column has wrong length");
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries.push(self.at(r, c).clone());
            }
            entries.push(col[r].clone());
        }
        ExactMatrix::from_polys(self.rows, self.cols + 1, self.nvars, entries)
    }

    /// Evaluates every entry at a rational point, yielding a scalar matrix.
    pub fn substitute(&self, point: &[Rational]) -> ExactMatrix {
        let entries = self
            .entries
            .iter()
            .map(|p| MPoly::constant(0, p.evaluate(point)))
            .collect();
        ExactMatrix::from_polys(self.rows, self.cols, 0, entries)
    }

    pub fn matmul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch in matmul");
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = MPoly::zero(self.nvars);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                entries.push(acc);
            }
        }
        ExactMatrix::from_polys(self.rows, other.cols, self.nvars, entries)
    }

    /// Kronecker product; the result is (rA·rB)×(cA·cB) with the first
    /// factor most significant in both index directions.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch in kron");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..self.rows {
            for k in 0..other.rows {
                for j in 0..self.cols {
                    for l in 0..other.cols {
                        entries.push(self.at(i, j).mul(other.at(k, l)));
                    }
                }
            }
        }
        ExactMatrix::from_polys(rows, cols, self.nvars, entries)
    }

    /// Rank over ℚ via fraction-free Bareiss elimination.
    pub fn rank_exact(&self) -> Result<usize, LinalgError> {
        let rows = self.scalar_rows()?;
        Ok(bareiss(clear_denominators(rows)).rank)
    }

    /// Pivot rows and columns of one Bareiss elimination, indexing an
    /// invertible rank×rank submatrix.
    pub fn rank_exact_with_pivots(&self) -> Result<(usize, Vec<usize>, Vec<usize>), LinalgError> {
        let rows = self.scalar_rows()?;
        let out = bareiss(clear_denominators(rows));
        Ok((out.rank, out.pivot_rows, out.pivot_cols))
    }

    /// Basis of `{v : Mv = 0}` in reduced echelon normal form.
    pub fn kernel_basis(&self) -> Result<KernelBasis, LinalgError> {
        let rows = self.scalar_rows()?;
        Ok(KernelBasis { vectors: reduce::kernel(&rows, self.cols) })
    }

    /// Exact determinant; polynomial entries allowed.
    pub fn determinant(&self) -> Result<MPoly, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare);
        }
        if self.rows == 0 {
            return Ok(MPoly::one(self.nvars));
        }
        if self.is_scalar() {
            let rows = self.scalar_rows()?;
            let (int_rows, scale) = clear_denominators_tracked(rows);
            let det = bareiss_determinant_int(int_rows);
            return Ok(MPoly::constant(
                self.nvars,
                Rational::from_integer(det) / Rational::from_integer(scale),
            ));
        }
        let work: Vec<Vec<MPoly>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        Ok(bareiss_determinant_poly(work, self.nvars))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Kernel basis in reduced echelon normal form: the first nonzero entry of
/// each vector is 1 and pivot positions strictly increase.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelBasis {
    vectors: Vec<Vec<Rational>>,
}

impl KernelBasis {
    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

fn clear_denominators(rows: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
    clear_denominators_tracked(rows).0
}

/// Scales each row to integers; also returns the product of the scale
/// factors (needed to undo the scaling in determinants).
fn clear_denominators_tracked(rows: Vec<Vec<Rational>>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let out = rows
        .into_iter()
        .map(|row| {
            let mut l = BigInt::one();
            for x in &row {
                l = l.lcm(x.denom());
            }
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (out, scale)
}

struct BareissOutcome {
    rank: usize,
    pivot_rows: Vec<usize>,
    pivot_cols: Vec<usize>,
}

/// Fraction-free elimination with row pivoting and column skipping; every
/// division is exact because intermediate entries are minors of the input.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BareissOutcome {
    let nrows = m.len();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut row_order: Vec<usize> = (0..nrows).collect();
    let mut prev = BigInt::one();
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        row_order.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivot_rows.push(row_order[r]);
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivot_rows.sort_unstable();
    BareissOutcome { rank: r, pivot_rows, pivot_cols }
}

fn bareiss_determinant_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut sign = false;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(c, p);
            sign = !sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = &m[c][c] * &m[i][j] - &m[i][c] * &m[c][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    if sign {
        -prev
    } else {
        prev
    }
}

fn bareiss_determinant_poly(mut m: Vec<Vec<MPoly>>, nvars: usize) -> MPoly {
    let n = m.len();
    let mut prev = MPoly::one(nvars);
    let mut sign = false;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return MPoly::zero(nvars);
        };
        if p != c {
            m.swap(c, p);
            sign = !sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = m[c][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[c][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][c] = MPoly::zero(nvars);
        }
        prev = m[c][c].clone();
    }
    if sign {
        prev.neg()
    } else {
        prev
    }
}

/// Coefficients expressing `target` as a combination of `vectors` when one
/// exists (free coordinates pinned to zero), else `None`.
pub fn in_span(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let len = target.len();
    assert!(
        vectors.iter().all(|v| v.len() == len),
        "span vectors and target must have equal lengths"
    );
    let n = vectors.len();
    // Augmented system: columns are the span vectors, last column the target.
    let mut rows: Vec<Vec<Rational>> = (0..len)
        .map(|i| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = reduce::rref(&mut rows);
    if pivots.contains(&n) {
        return None;
    }
    let mut coeffs = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = rows[r][n].clone();
    }
    Some(coeffs)
}

/// How strongly a generic-rank claim is backed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertLevel {
    /// Maximum rank over random substitutions only.
    SampledOnly,
    /// A substitution exhibits a nonzero rank×rank minor and every larger
    /// minor is the identically-zero polynomial.
    Certified,
}

/// A substitution and minor indexing that exhibit the claimed rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankWitness {
    pub substitution: Vec<Rational>,
    pub minor_rows: Vec<usize>,
    pub minor_cols: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericRank {
    pub rank: usize,
    pub level: CertLevel,
    pub witness: Option<RankWitness>,
}

/// Maximum rank of a polynomial matrix over `trials` random integer
/// substitutions (entries uniform in [-999, 999]).
///
/// With `certify`, the claimed rank r is certified by (a) a recorded
/// substitution with a nonzero r×r minor and (b) symbolic verification that
/// every (r+1)×(r+1) minor vanishes identically. If a larger minor turns out
/// to be nonzero (the sampling missed), the claim is bumped and re-certified
/// rather than reported wrong.
pub fn generic_rank<R: Rng + ?Sized>(
    m: &ExactMatrix,
    trials: usize,
    certify: bool,
    rng: &mut R,
) -> GenericRank {
    assert!(trials >= 1, "generic_rank needs at least one trial");
    let mut best_rank = 0;
    let mut best: Option<RankWitness> = None;
    for _ in 0..trials {
        let point = random_substitution(m.nvars(), rng);
        let sub = m.substitute(&point);
        let (rank, prows, pcols) = sub.rank_exact_with_pivots().unwrap();
        if rank > best_rank || best.is_none() {
            best_rank = rank;
            best = Some(RankWitness {
                substitution: point,
                minor_rows: prows,
                minor_cols: pcols,
            });
        }
    }
    if !certify {
        return GenericRank { rank: best_rank, level: CertLevel::SampledOnly, witness: best };
    }
    let mut rank = best_rank;
    let mut witness = best;
    loop {
        match first_nonzero_minor(m, rank + 1) {
            None => break,
            Some((rows, cols, minor)) => {
                // Sampling under-reported: the (rank+1)-minor is a nonzero
                // polynomial, so find a substitution exhibiting it.
                let point = find_nonvanishing_point(&minor, rng);
                rank += 1;
                witness = Some(RankWitness {
                    substitution: point,
                    minor_rows: rows,
                    minor_cols: cols,
                });
            }
        }
    }
    if let Some(w) = &witness {
        // Self-check of the recorded witness minor.
        let minor = m
            .submatrix(&w.minor_rows, &w.minor_cols)
            .substitute(&w.substitution)
            .determinant()
            .unwrap();
        assert!(!minor.is_zero(), "rank witness minor vanished");
    }
    GenericRank { rank, level: CertLevel::Certified, witness }
}

fn random_substitution<R: Rng + ?Sized>(nvars: usize, rng: &mut R) -> Vec<Rational> {
    (0..nvars).map(|_| rat_int(rng.gen_range(-999..=999))).collect()
}

fn find_nonvanishing_point<R: Rng + ?Sized>(p: &MPoly, rng: &mut R) -> Vec<Rational> {
    for _ in 0..1000 {
        let point = random_substitution(p.nvars(), rng);
        if !p.evaluate(&point).is_zero() {
            return point;
        }
    }
    panic!("failed to find a nonvanishing point of a nonzero polynomial");
}

/// First (row set, column set, determinant) with a not-identically-zero
/// k×k minor, or `None` when all k-minors vanish (in particular when k
/// exceeds a dimension).
fn first_nonzero_minor(
    m: &ExactMatrix,
    k: usize,
) -> Option<(Vec<usize>, Vec<usize>, MPoly)> {
    if k > m.rows() || k > m.cols() {
        return None;
    }
    for rows in combinations(m.rows(), k) {
        for cols in combinations(m.cols(), k) {
            let det = m.submatrix(&rows, &cols).determinant().unwrap();
            if !det.is_zero() {
                return Some((rows, cols, det));
            }
        }
    }
    None
}

/// All k-element subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
