//! Higher osculating spaces: matrices of partial derivatives, osculating
//! dimensions and Laplace defects, osculating hyperplanes, and discovery
//! plus symbolic certification of a common point of all k-osculating
//! hyperplanes.
//!
//! Differentiation is chart-free: the homogeneous parametrization is
//! differentiated with respect to all source variables, orders 0..k. By the
//! Euler relation the span of the order-exactly-k columns already contains
//! every lower-order column whenever k does not exceed the coordinate
//! degree; the certification path verifies that relation symbolically and
//! then certifies ranks on the much smaller top-order block.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::linalg::{generic_rank, CertLevel, ExactMatrix};
use crate::poly::{monomials_of_degree, rat_int, MPoly, Monomial, Rational};
use crate::variety::{ParamVariety, ProjPoint, SourceShape};

/// Errors from the osculation layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OscError {
    /// A rational parameter point had a zero factor block.
    ZeroPoint,
    /// The parameter point lies in the base locus of the parametrization.
    BasePoint,
    /// The osculating space does not have codimension 1 at this point.
    CodimensionNotOne { codim: usize },
    /// Every sampled point was osculating-singular after the retry budget.
    DegenerateSampling,
}

impl fmt::Display for OscError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OscError::ZeroPoint => write!(f, "parameter point has a zero factor block"),
            OscError::BasePoint => write!(f, "parameter point lies in the base locus"),
            OscError::CodimensionNotOne { codim } => {
                write!(f, "osculating space has codimension {codim}, expected 1")
            }
            OscError::DegenerateSampling => {
                write!(f, "all sampled parameter points were osculating-singular")
            }
        }
    }
}

impl core::error::Error for OscError {}

/// Where to evaluate a partials matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamPoint {
    /// A concrete rational source point.
    At(Vec<Rational>),
    /// Leave the source variables symbolic.
    Generic,
}

/// Matrix whose columns are the partial derivatives of orders 0..k of the
/// coordinate polynomials (order-0 column = the parametrization itself),
/// rows indexed by ambient coordinates, columns by differentiation
/// multi-indices in graded-lex order within each order.
#[derive(Clone, Debug)]
pub struct PartialsMatrix {
    matrix: ExactMatrix,
    col_orders: Vec<u32>,
    k: u32,
}

impl PartialsMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn col_orders(&self) -> &[u32] {
        &self.col_orders
    }

    /// The submatrix of order-exactly-k columns.
    pub fn top_order_block(&self) -> ExactMatrix {
        let idx: Vec<usize> = self
            .col_orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o == self.k)
            .map(|(i, _)| i)
            .collect();
        self.matrix.select_columns(&idx)
    }
}

fn validate_point(shape: &SourceShape, point: &[Rational]) -> Result<(), OscError> {
    assert_eq!(point.len(), shape.source_vars(), "wrong parameter point length");
    for block in shape.blocks() {
        if block.iter().all(|&i| point[i].is_zero()) {
            return Err(OscError::ZeroPoint);
        }
    }
    Ok(())
}

fn derivative_multi(f: &MPoly, beta: &Monomial) -> MPoly {
    let mut out = f.clone();
    for (i, &e) in beta.exponents().iter().enumerate() {
        for _ in 0..e {
            out = out.partial_derivative(i);
        }
    }
    out
}

/// All differentiation multi-indices of order ≤ k, grouped by ascending
/// order and graded-lex descending within an order.
fn multi_indices(nvars: usize, k: u32) -> Vec<Monomial> {
    (0..=k).flat_map(|j| monomials_of_degree(nvars, j)).collect()
}

/// Builds the matrix of partials of orders 0..k, symbolic or evaluated.
pub fn partials_matrix(
    v: &ParamVariety,
    k: u32,
    point: &ParamPoint,
) -> Result<PartialsMatrix, OscError> {
    let nvars = v.source_vars();
    let betas = multi_indices(nvars, k);
    let col_orders: Vec<u32> = betas.iter().map(Monomial::degree).collect();
    let rows = v.coord_count();
    let cols = betas.len();
    let mut entries = Vec::with_capacity(rows * cols);
    match point {
        ParamPoint::Generic => {
            for coord in v.coordinates() {
                for beta in &betas {
                    entries.push(derivative_multi(coord, beta));
                }
            }
            Ok(PartialsMatrix {
                matrix: ExactMatrix::from_polys(rows, cols, nvars, entries),
                col_orders,
                k,
            })
        }
        ParamPoint::At(p) => {
            validate_point(v.shape(), p)?;
            for coord in v.coordinates() {
                for beta in &betas {
                    entries.push(MPoly::constant(0, derivative_multi(coord, beta).evaluate(p)));
                }
            }
            Ok(PartialsMatrix {
                matrix: ExactMatrix::from_polys(rows, cols, 0, entries),
                col_orders,
                k,
            })
        }
    }
}

/// Projective dimension of the k-osculating space T^k: rank of the partials
/// matrix minus one (generic rank in symbolic mode, 3 substitutions).
pub fn osc_dim<R: Rng + ?Sized>(
    v: &ParamVariety,
    k: u32,
    point: &ParamPoint,
    rng: &mut R,
) -> Result<usize, OscError> {
    let pm = partials_matrix(v, k, point)?;
    let rank = match point {
        ParamPoint::At(_) => pm.matrix().rank_exact().unwrap(),
        ParamPoint::Generic => generic_rank(pm.matrix(), 3, false, rng).rank,
    };
    if rank == 0 {
        return Err(OscError::BasePoint);
    }
    Ok(rank - 1)
}

/// The dimension T^k would have if all a-priori-nonvanishing partials were
/// independent: `min(ambient dim, count - 1)` where the count enumerates
/// affine-chart multi-indices of order ≤ k capped by the per-factor degree.
pub fn expected_osc_dim(v: &ParamVariety, k: u32) -> usize {
    // counts[j] = number of affine multi-indices of total order j
    let mut counts: Vec<u64> = vec![1];
    let blocks: Vec<(usize, u32)> = match v.shape() {
        SourceShape::Projective { dim } => vec![(*dim, v.degree())],
        SourceShape::MultiProjective { .. } => v
            .block_degrees()
            .iter()
            .map(|&d| (1usize, d))
            .collect(),
    };
    for (affine_dim, cap) in blocks {
        let block_counts: Vec<u64> = (0..=k.min(cap))
            .map(|j| count_monomials(affine_dim, j))
            .collect();
        let mut next = vec![0u64; k as usize + 1];
        for (a, &ca) in counts.iter().enumerate() {
            for (b, &cb) in block_counts.iter().enumerate() {
                if a + b <= k as usize {
                    next[a + b] += ca * cb;
                }
            }
        }
        counts = next;
    }
    let total: u64 = counts.iter().sum();
    (v.ambient_dim()).min(total as usize - 1)
}

fn count_monomials(nvars: usize, d: u32) -> u64 {
    // C(d + nvars - 1, nvars - 1)
    if nvars == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..nvars as u64 - 1 {
        num *= d as u64 + i + 1;
        den *= i + 1;
    }
    num / den
}

/// Positive when the variety satisfies a Laplace equation of order k.
pub fn laplace_defect<R: Rng + ?Sized>(v: &ParamVariety, k: u32, rng: &mut R) -> i64 {
    let expected = expected_osc_dim(v, k) as i64;
    let generic = osc_dim(v, k, &ParamPoint::Generic, rng).expect("generic point") as i64;
    expected - generic
}

/// The unique (up to scale) functional annihilating T^k at the point,
/// primitive-integer normalized. Errors unless T^k has codimension 1 there.
pub fn osculating_hyperplane(
    v: &ParamVariety,
    k: u32,
    point: &[Rational],
) -> Result<ProjPoint, OscError> {
    let pm = partials_matrix(v, k, &ParamPoint::At(point.to_vec()))?;
    let annihilators = pm.matrix().transpose().kernel_basis().unwrap();
    if annihilators.dim() != 1 {
        return Err(OscError::CodimensionNotOne { codim: annihilators.dim() });
    }
    Ok(ProjPoint::new(annihilators.vectors()[0].clone()).unwrap())
}

/// Outcome of the sampled common-point search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CommonPointOutcome {
    /// The stacked annihilators of all samples have a 1-dimensional kernel.
    Unique(ProjPoint),
    /// The annihilators have full column rank: no common point.
    NoCommonPoint,
    /// The kernel is a positive-dimensional linear space; more samples may
    /// cut it down.
    Underdetermined { dim: usize, basis: Vec<Vec<Rational>> },
}

/// Samples parameter points, stacks the full annihilator space of T^k at
/// each (robust when the codimension exceeds 1), and intersects.
///
/// `samples` is the minimum number of general points; sampling continues
/// until one further sample leaves the stacked kernel unchanged, so the
/// reported intersection is stable under fresh constraints rather than an
/// artifact of too few hyperplanes. Osculating-singular samples (rank below
/// generic) are resampled up to 10 times each.
pub fn find_common_point<R: Rng + ?Sized>(
    v: &ParamVariety,
    k: u32,
    samples: usize,
    rng: &mut R,
) -> Result<CommonPointOutcome, OscError> {
    assert!(samples >= 2, "need at least two samples");
    let sym = partials_matrix(v, k, &ParamPoint::Generic)?;
    let generic = generic_rank(sym.matrix(), 3, false, rng).rank;
    let mut stacked: Vec<Vec<Rational>> = Vec::new();
    let mut taken = 0;
    let mut prev_dim = v.coord_count();
    let kernel = loop {
        let mut found = false;
        for _ in 0..10 {
            let point = random_source_point(v.shape(), rng);
            let evaluated = sym.matrix().substitute(&point);
            if evaluated.rank_exact().unwrap() < generic {
                continue;
            }
            let ann = evaluated.transpose().kernel_basis().unwrap();
            stacked.extend(ann.vectors().iter().cloned());
            found = true;
            break;
        }
        if !found {
            return Err(OscError::DegenerateSampling);
        }
        taken += 1;
        let kernel = ExactMatrix::from_rational_rows(stacked.clone())
            .kernel_basis()
            .unwrap();
        let dim = kernel.dim();
        if dim == 0 || (taken >= samples && dim == prev_dim) {
            break kernel;
        }
        prev_dim = dim;
    };
    Ok(match kernel.dim() {
        0 => CommonPointOutcome::NoCommonPoint,
        1 => CommonPointOutcome::Unique(ProjPoint::new(kernel.vectors()[0].clone()).unwrap()),
        dim => CommonPointOutcome::Underdetermined { dim, basis: kernel.vectors().to_vec() },
    })
}

fn random_source_point<R: Rng + ?Sized>(shape: &SourceShape, rng: &mut R) -> Vec<Rational> {
    let mut point = vec![Rational::zero(); shape.source_vars()];
    for block in shape.blocks() {
        loop {
            for &i in &block {
                point[i] = rat_int(rng.gen_range(-999..=999));
            }
            if block.iter().any(|&i| !point[i].is_zero()) {
                break;
            }
        }
    }
    point
}

/// How the osculating ranks behind a certificate were established.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertMode {
    Sampled,
    Certified,
}

impl CertMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertMode::Sampled => "sampled",
            CertMode::Certified => "certified",
        }
    }
}

/// Verdict of a common-point verification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    CommonPointVerified,
    NoCommonPoint,
    LaplaceDegenerate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::CommonPointVerified => "common-point-verified",
            Verdict::NoCommonPoint => "no-common-point",
            Verdict::LaplaceDegenerate => "laplace-degenerate",
        }
    }
}

/// Outcome record of a common-point verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OscCertificate {
    pub variety: String,
    pub k: u32,
    pub generic_dim: usize,
    pub expected_dim: usize,
    pub defect: i64,
    pub candidate: Option<ProjPoint>,
    pub mode: CertMode,
    pub verdict: Verdict,
}

/// Verifies the Euler span reduction used by the certification path: for
/// every coordinate f of total degree D and every multi-index β of order
/// j < k, `Σ_i x_i ∂_i (∂^β f) = (D - j) ∂^β f`, so the order-j column is an
/// explicit combination of order-(j+1) columns. Requires k ≤ D.
pub fn euler_reduction_holds(v: &ParamVariety, k: u32) -> bool {
    let degree = v.degree();
    if k > degree {
        return false;
    }
    let nvars = v.source_vars();
    for coord in v.coordinates() {
        for j in 0..k {
            for beta in monomials_of_degree(nvars, j) {
                let g = derivative_multi(coord, &beta);
                let mut euler = MPoly::zero(nvars);
                for i in 0..nvars {
                    euler = euler.add(&MPoly::var(nvars, i).mul(&g.partial_derivative(i)));
                }
                if euler != g.scale(&rat_int((degree - j) as i64)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Symbolic verification that `candidate` lies in T^k at the generic point.
///
/// The partials matrix is pruned to its order-exactly-k block (justified by
/// [`euler_reduction_holds`], which is checked as part of the certificate;
/// identically-zero columns are dropped after an exact zero test), then the
/// generic ranks of the block and of the block augmented with the candidate
/// are certified via minor vanishing. The verdict is
/// `CommonPointVerified` iff the ranks agree with both certified.
pub fn certify_common_point<R: Rng + ?Sized>(
    v: &ParamVariety,
    k: u32,
    candidate: &ProjPoint,
    variety_label: &str,
    rng: &mut R,
) -> OscCertificate {
    assert_eq!(candidate.len(), v.coord_count());
    let sym = partials_matrix(v, k, &ParamPoint::Generic).expect("symbolic matrix");
    let full = sym.matrix();
    let reduced = euler_reduction_holds(v, k);
    let work = if reduced {
        let top = sym.top_order_block();
        let nonzero: Vec<usize> = (0..top.cols())
            .filter(|&c| (0..top.rows()).any(|r| !top.at(r, c).is_zero()))
            .collect();
        top.select_columns(&nonzero)
    } else {
        full.clone()
    };
    let base = generic_rank(&work, 3, true, rng);
    let lifted: Vec<MPoly> = candidate
        .coords()
        .iter()
        .map(|c| MPoly::constant(v.source_vars(), c.clone()))
        .collect();
    let augmented = generic_rank(&work.augment_column(&lifted), 3, true, rng);
    let certified =
        base.level == CertLevel::Certified && augmented.level == CertLevel::Certified && reduced;
    let expected = expected_osc_dim(v, k);
    let generic_dim = base.rank - 1;
    OscCertificate {
        variety: String::from(variety_label),
        k,
        generic_dim,
        expected_dim: expected,
        defect: expected as i64 - generic_dim as i64,
        candidate: Some(candidate.clone()),
        mode: if certified { CertMode::Certified } else { CertMode::Sampled },
        verdict: if augmented.rank == base.rank {
            Verdict::CommonPointVerified
        } else {
            Verdict::NoCommonPoint
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LinearForm;
    use crate::sample::rng_from_seed;
    use crate::variety::{linear_projection, power_point, rnc, segre, veronese};

    fn togliatti() -> ParamVariety {
        let v = veronese(2, 3);
        let center: Vec<ProjPoint> = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|c| power_point(&LinearForm::from_ints(c).unwrap(), 3))
            .collect();
        linear_projection(&v, &center).unwrap()
    }

    #[test]
    fn twisted_cubic_tangent_line() {
        let c = rnc(3);
        let pm = partials_matrix(&c, 1, &ParamPoint::At(vec![rat_int(1), rat_int(0)])).unwrap();
        assert_eq!(pm.matrix().rows(), 4);
        assert_eq!(pm.matrix().cols(), 3);
        assert_eq!(pm.matrix().rank_exact().unwrap(), 2);
        let ann = pm.matrix().transpose().kernel_basis().unwrap();
        // annihilated exactly by the last two coordinate functionals
        assert_eq!(ann.dim(), 2);
        for v in ann.vectors() {
            assert!(v[0].is_zero() && v[1].is_zero());
        }
    }

    #[test]
    fn togliatti_symbolic_top_block_is_7x6_linear() {
        let t = togliatti();
        let pm = partials_matrix(&t, 2, &ParamPoint::Generic).unwrap();
        let top = pm.top_order_block();
        assert_eq!((top.rows(), top.cols()), (7, 6));
        for r in 0..7 {
            for c in 0..6 {
                assert!(top.at(r, c).is_zero() || top.at(r, c).is_homogeneous_of(1));
            }
        }
    }

    #[test]
    fn order_zero_column_is_the_image() {
        let v = veronese(2, 3);
        let p = vec![rat_int(1), rat_int(2), rat_int(3)];
        let pm = partials_matrix(&v, 0, &ParamPoint::At(p.clone())).unwrap();
        assert_eq!(pm.matrix().cols(), 1);
        let col: Vec<Rational> = (0..10)
            .map(|r| pm.matrix().at(r, 0).constant_value().unwrap())
            .collect();
        let image = v.eval_point(&p).unwrap();
        assert_eq!(ProjPoint::new(col).unwrap(), image);
    }

    #[test]
    fn zero_point_is_rejected() {
        let v = veronese(2, 3);
        let zeros = vec![rat_int(0); 3];
        assert_eq!(
            partials_matrix(&v, 1, &ParamPoint::At(zeros)).unwrap_err(),
            OscError::ZeroPoint
        );
        // per-factor zero block on a Segre source
        let s = segre(2);
        let p = vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0)];
        assert_eq!(
            partials_matrix(&s, 1, &ParamPoint::At(p)).unwrap_err(),
            OscError::ZeroPoint
        );
    }

    #[test]
    fn osc_dims_of_the_three_models() {
        let mut rng = rng_from_seed(3);
        assert_eq!(
            osc_dim(&veronese(2, 3), 2, &ParamPoint::Generic, &mut rng).unwrap(),
            5
        );
        assert_eq!(
            osc_dim(&togliatti(), 2, &ParamPoint::Generic, &mut rng).unwrap(),
            5
        );
        assert_eq!(
            osc_dim(&segre(3), 2, &ParamPoint::Generic, &mut rng).unwrap(),
            6
        );
    }

    #[test]
    fn expected_dims() {
        assert_eq!(expected_osc_dim(&veronese(2, 3), 2), 5);
        assert_eq!(expected_osc_dim(&veronese(2, 5), 4), 14);
        assert_eq!(expected_osc_dim(&rnc(3), 3), 3);
        assert_eq!(expected_osc_dim(&segre(3), 2), 6);
        assert_eq!(expected_osc_dim(&togliatti(), 2), 5);
    }

    #[test]
    fn laplace_defects() {
        let mut rng = rng_from_seed(5);
        assert_eq!(laplace_defect(&veronese(2, 3), 2, &mut rng), 0);
        assert_eq!(laplace_defect(&togliatti(), 2, &mut rng), 0);
        // projecting from the four points {X0^3, X1^3, X2^3, X0X1X2} leaves
        // a surface in P^5 whose six second partials become dependent
        let v = veronese(2, 3);
        let basis = crate::poly::monomials_of_degree(3, 3);
        let idx = basis.iter().position(|m| m.exponents() == [1, 1, 1]).unwrap();
        let mut center: Vec<ProjPoint> = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|c| power_point(&LinearForm::from_ints(c).unwrap(), 3))
            .collect();
        center.push(ProjPoint::unit(10, idx));
        let small = linear_projection(&v, &center).unwrap();
        assert_eq!(small.coord_count(), 6);
        assert_eq!(laplace_defect(&small, 2, &mut rng), 1);
    }

    #[test]
    fn togliatti_hyperplane_at_ones_matches_triple_line_product() {
        let t = togliatti();
        let ones = vec![rat_int(1); 3];
        let h = osculating_hyperplane(&t, 2, &ones).unwrap();
        // expand (X1 - X2)(X0 - X2)(X0 - X1) and read its coefficients in
        // the 7-coordinate basis of the projection
        let x = |i| MPoly::var(3, i);
        let product = x(1)
            .sub(&x(2))
            .mul(&x(0).sub(&x(2)))
            .mul(&x(0).sub(&x(1)));
        let functional: Vec<Rational> = t
            .coordinates()
            .iter()
            .map(|mono| {
                let (m, c) = mono.leading_term().unwrap();
                product.coeff(m) / c
            })
            .collect();
        assert_eq!(h, ProjPoint::new(functional).unwrap());
    }

    #[test]
    fn segre_hyperplane_at_unit_points() {
        let s = segre(3);
        let p = vec![
            rat_int(1),
            rat_int(0),
            rat_int(1),
            rat_int(0),
            rat_int(1),
            rat_int(0),
        ];
        let h = osculating_hyperplane(&s, 2, &p).unwrap();
        assert_eq!(h, ProjPoint::unit(8, 7));
    }

    #[test]
    fn rnc_hyperplane_at_unit_point() {
        let c = rnc(3);
        let h = osculating_hyperplane(&c, 2, &[rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(h, ProjPoint::unit(4, 3));
    }

    #[test]
    fn euler_reduction_checks() {
        assert!(euler_reduction_holds(&veronese(2, 3), 2));
        assert!(euler_reduction_holds(&segre(3), 2));
        assert!(euler_reduction_holds(&rnc(3), 3));
        assert!(!euler_reduction_holds(&rnc(3), 4));
    }

    #[test]
    fn togliatti_common_point_found_and_certified() {
        let t = togliatti();
        let mut rng = rng_from_seed(11);
        let found = find_common_point(&t, 2, 3, &mut rng).unwrap();
        let idx = t
            .coordinates()
            .iter()
            .position(|c| {
                c.leading_term()
                    .map(|(m, _)| m.exponents() == [1, 1, 1])
                    .unwrap_or(false)
            })
            .unwrap();
        let expected = ProjPoint::unit(7, idx);
        assert_eq!(found, CommonPointOutcome::Unique(expected.clone()));
        let cert = certify_common_point(&t, 2, &expected, "togliatti", &mut rng);
        assert_eq!(cert.verdict, Verdict::CommonPointVerified);
        assert_eq!(cert.mode, CertMode::Certified);
        assert_eq!(cert.generic_dim, 5);
        assert_eq!(cert.defect, 0);
    }

    #[test]
    fn veronese_has_no_common_point() {
        let v = veronese(2, 3);
        let mut rng = rng_from_seed(13);
        let found = find_common_point(&v, 2, 3, &mut rng).unwrap();
        assert_eq!(found, CommonPointOutcome::NoCommonPoint);
        let cert = certify_common_point(&v, 2, &ProjPoint::unit(10, 4), "veronese-full", &mut rng);
        assert_eq!(cert.verdict, Verdict::NoCommonPoint);
    }

    #[test]
    fn full_osculating_space_contains_everything() {
        // T^d of the rational normal curve fills the ambient space, so any
        // point certifies.
        let c = rnc(3);
        let mut rng = rng_from_seed(17);
        let cert = certify_common_point(&c, 3, &ProjPoint::from_ints(&[5, -3, 2, 9]).unwrap(), "rnc3", &mut rng);
        assert_eq!(cert.verdict, Verdict::CommonPointVerified);
        assert_eq!(cert.mode, CertMode::Certified);
        assert_eq!(cert.generic_dim, 3);
    }

    #[test]
    fn scale_invariance() {
        // rescaling the parameter point changes nothing; rescaling one
        // coordinate of the variety leaves osc_dim alone and transforms the
        // hyperplane functional covariantly
        let t = togliatti();
        let mut rng = rng_from_seed(23);
        let p = vec![rat_int(2), rat_int(-3), rat_int(5)];
        let scaled: Vec<Rational> = p.iter().map(|x| x * crate::poly::rat(7, 3)).collect();
        assert_eq!(
            osc_dim(&t, 2, &ParamPoint::At(p.clone()), &mut rng).unwrap(),
            osc_dim(&t, 2, &ParamPoint::At(scaled.clone()), &mut rng).unwrap()
        );
        assert_eq!(
            osculating_hyperplane(&t, 2, &p).unwrap(),
            osculating_hyperplane(&t, 2, &scaled).unwrap()
        );
        let factor = crate::poly::rat(-5, 4);
        let mut coords = t.coordinates().to_vec();
        coords[2] = coords[2].scale(&factor);
        let rescaled = ParamVariety::new(t.shape().clone(), coords);
        assert_eq!(
            osc_dim(&rescaled, 2, &ParamPoint::At(p.clone()), &mut rng).unwrap(),
            osc_dim(&t, 2, &ParamPoint::At(p.clone()), &mut rng).unwrap()
        );
        let h = osculating_hyperplane(&t, 2, &p).unwrap();
        let h_rescaled = osculating_hyperplane(&rescaled, 2, &p).unwrap();
        let mut transformed: Vec<Rational> = h.coords().to_vec();
        transformed[2] = &transformed[2] / &factor;
        assert_eq!(h_rescaled, ProjPoint::new(transformed).unwrap());
    }

    #[test]
    fn containment_chain_at_random_points() {
        let t = togliatti();
        let mut rng = rng_from_seed(19);
        let p = vec![rat_int(2), rat_int(-3), rat_int(5)];
        let mut prev = 0;
        for k in 0..=3 {
            let d = osc_dim(&t, k, &ParamPoint::At(p.clone()), &mut rng).unwrap();
            assert!(d >= prev);
            prev = d;
        }
        let _ = rng;
    }
}
