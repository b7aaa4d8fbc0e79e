//! Parametrized projective varieties: Veronese and Segre embeddings,
//! rational normal curves, linear projections and hyperplane sections.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::ExactMatrix;
use crate::poly::{
    monomials_of_degree, primitive_integer_vector, LinearForm, MPoly, Monomial, Rational,
};

/// Errors from variety construction and transformation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarietyError {
    /// A projective point needs at least one nonzero coordinate.
    ZeroPoint,
    /// Projection center points are linearly dependent.
    DependentCenter,
    /// The projection target would not be a projective space.
    AmbientTooSmall,
    /// Every projected coordinate vanished identically.
    DegenerateProjection,
    /// The parameter point hit the base locus (all coordinates vanish).
    BasePoint,
    /// A Segre variety was expected.
    NotSegre,
    /// The hyperplane vector is zero or has zero coefficient blocks on the
    /// first factor.
    InadmissibleHyperplane,
}

impl fmt::Display for VarietyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyError::ZeroPoint => write!(f, "projective point must be nonzero"),
            VarietyError::DependentCenter => write!(f, "projection center is linearly dependent"),
            VarietyError::AmbientTooSmall => {
                write!(f, "projection center too large for the ambient space")
            }
            VarietyError::DegenerateProjection => {
                write!(f, "projection kills every coordinate of the variety")
            }
            VarietyError::BasePoint => write!(f, "parameter point lies in the base locus"),
            VarietyError::NotSegre => write!(f, "operation expects a Segre parametrization"),
            VarietyError::InadmissibleHyperplane => {
                write!(f, "hyperplane is zero or degenerate on the first factor")
            }
        }
    }
}

impl core::error::Error for VarietyError {}

/// A point of projective space, stored primitive-integer normalized:
/// cleared denominators, coprime entries, first nonzero entry positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, VarietyError> {
        let coords = primitive_integer_vector(&coords).ok_or(VarietyError::ZeroPoint)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, VarietyError> {
        ProjPoint::new(coords.iter().map(|&c| crate::poly::rat_int(c)).collect())
    }

    /// The coordinate point with a 1 in position `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut coords = vec![Rational::zero(); len];
        coords[index] = Rational::one();
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Shape of the source of a parametrization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SourceShape {
    /// `P^dim`, parametrized by `dim + 1` homogeneous variables.
    Projective { dim: usize },
    /// A product of `factors` projective lines; variable `2b`/`2b+1` are the
    /// two homogeneous coordinates of factor `b`.
    MultiProjective { factors: usize },
}

impl SourceShape {
    pub fn source_vars(&self) -> usize {
        match self {
            SourceShape::Projective { dim } => dim + 1,
            SourceShape::MultiProjective { factors } => 2 * factors,
        }
    }

    /// Variable indices per factor block (a single block for `Projective`).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        match self {
            SourceShape::Projective { dim } => vec![(0..=*dim).collect()],
            SourceShape::MultiProjective { factors } => {
                (0..*factors).map(|b| vec![2 * b, 2 * b + 1]).collect()
            }
        }
    }
}

/// A rational parametrization of a projective variety: homogeneous
/// coordinate polynomials of a common (multi)degree in the source variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamVariety {
    shape: SourceShape,
    coords: Vec<MPoly>,
    block_degrees: Vec<u32>,
}

impl ParamVariety {
    pub fn new(shape: SourceShape, coords: Vec<MPoly>) -> Self {
        let nvars = shape.source_vars();
        assert!(coords.len() >= 2, "a parametrization needs at least 2 coordinates");
        assert!(coords.iter().all(|p| p.nvars() == nvars));
        let blocks = shape.blocks();
        let mut degrees: Option<Vec<u32>> = None;
        for c in &coords {
            if c.is_zero() {
                continue;
            }
            let d = c
                .block_degrees(&blocks)
                .expect("coordinates must be homogeneous per factor");
            match &degrees {
                None => degrees = Some(d),
                Some(prev) => assert_eq!(*prev, d, "coordinates must share a common degree"),
            }
        }
        let block_degrees = degrees.expect("parametrization cannot be identically zero");
        ParamVariety { shape, coords, block_degrees }
    }

    pub fn shape(&self) -> &SourceShape {
        &self.shape
    }

    pub fn coordinates(&self) -> &[MPoly] {
        &self.coords
    }

    pub fn coord_count(&self) -> usize {
        self.coords.len()
    }

    /// Dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn source_vars(&self) -> usize {
        self.shape.source_vars()
    }

    /// Total degree of the coordinate polynomials.
    pub fn degree(&self) -> u32 {
        self.block_degrees.iter().sum()
    }

    /// Degree in each factor block (one entry for projective sources).
    pub fn block_degrees(&self) -> &[u32] {
        &self.block_degrees
    }

    /// Image of a source point, normalized.
    pub fn eval_point(&self, params: &[Rational]) -> Result<ProjPoint, VarietyError> {
        assert_eq!(params.len(), self.source_vars());
        let values: Vec<Rational> = self.coords.iter().map(|c| c.evaluate(params)).collect();
        ProjPoint::new(values).map_err(|_| VarietyError::BasePoint)
    }
}

/// The Veronese embedding of `P^m` by all monomials of degree `d`,
/// graded-lex ordered. Ambient dimension is `C(d+m, m) - 1`.
pub fn veronese(m: usize, d: u32) -> ParamVariety {
    assert!(m >= 1 && d >= 1);
    let nvars = m + 1;
    let coords = monomials_of_degree(nvars, d)
        .into_iter()
        .map(|mono| MPoly::from_monomial(nvars, mono, Rational::one()))
        .collect();
    ParamVariety::new(SourceShape::Projective { dim: m }, coords)
}

/// The rational normal curve of degree `d` (the Veronese of `P^1`).
pub fn rnc(d: u32) -> ParamVariety {
    veronese(1, d)
}

/// The Segre embedding of a product of `n` projective lines: `2^n`
/// multilinear coordinates in binary-counter order, first factor most
/// significant.
pub fn segre(n: usize) -> ParamVariety {
    assert!(n >= 1);
    let nvars = 2 * n;
    let coords = (0..1usize << n)
        .map(|idx| {
            let mono = (0..n).fold(Monomial::one(nvars), |acc, b| {
                let bit = (idx >> (n - 1 - b)) & 1;
                acc.mul(&Monomial::var(nvars, 2 * b + bit))
            });
            MPoly::from_monomial(nvars, mono, Rational::one())
        })
        .collect();
    ParamVariety::new(SourceShape::MultiProjective { factors: n }, coords)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `d! / (α_0! ⋯ α_m!)` for a degree-`d` exponent row.
pub fn multinomial(exps: &[u32]) -> BigInt {
    let d: u32 = exps.iter().sum();
    exps.iter().fold(factorial(d), |acc, &e| acc / factorial(e))
}

/// The coefficient vector of `l^d` in the graded-lex monomial basis,
/// normalized. This is the image of the form `l` on the Veronese under the
/// coefficient-vector convention.
pub fn power_point(l: &LinearForm, d: u32) -> ProjPoint {
    let basis = monomials_of_degree(l.nvars(), d);
    let power = l.pow(d);
    ProjPoint::new(power.coeff_vector(&basis)).expect("power of a nonzero form is nonzero")
}

/// The point of the monomial-basis ambient space carrying a degree-`d` form
/// under the evaluation convention: coefficients divided entrywise by the
/// multinomial of their monomial.
///
/// For `f = l^d` this is exactly the Veronese image of the coefficient
/// point of `l`, so it differs from [`power_point`] by the fixed diagonal
/// multinomial rescaling of the ambient coordinates.
pub fn divided_power_point(f: &MPoly) -> Result<ProjPoint, VarietyError> {
    let d = f.total_degree().ok_or(VarietyError::ZeroPoint)?;
    assert!(f.is_homogeneous_of(d), "expected a homogeneous form");
    let basis = monomials_of_degree(f.nvars(), d);
    let coords: Vec<Rational> = basis
        .iter()
        .map(|m| f.coeff(m) / Rational::from_integer(multinomial(m.exponents())))
        .collect();
    ProjPoint::new(coords)
}

/// Linear projection away from the span of `center`.
///
/// A reduced-echelon basis of the linear functionals annihilating the
/// center is applied to the coordinate vector; each new coordinate is then
/// primitive-integer normalized. The ambient dimension drops by the center
/// size.
pub fn linear_projection(
    v: &ParamVariety,
    center: &[ProjPoint],
) -> Result<ParamVariety, VarietyError> {
    if center.is_empty() {
        return Ok(v.clone());
    }
    let n = v.coord_count();
    assert!(center.iter().all(|p| p.len() == n), "center points live in the ambient space");
    if v.ambient_dim() <= center.len() {
        return Err(VarietyError::AmbientTooSmall);
    }
    let center_matrix =
        ExactMatrix::from_rational_rows(center.iter().map(|p| p.coords().to_vec()).collect());
    if center_matrix.rank_exact().unwrap() != center.len() {
        return Err(VarietyError::DependentCenter);
    }
    let functionals = center_matrix.kernel_basis().unwrap();
    // no per-coordinate rescaling: the projection must stay linear so that
    // ambient points push forward through the same functionals
    let new_coords: Vec<MPoly> = functionals
        .vectors()
        .iter()
        .map(|w| {
            w.iter()
                .zip(v.coordinates())
                .fold(MPoly::zero(v.source_vars()), |acc, (c, coord)| {
                    acc.add(&coord.scale(c))
                })
        })
        .collect();
    if new_coords.iter().all(MPoly::is_zero) {
        return Err(VarietyError::DegenerateProjection);
    }
    Ok(ParamVariety::new(v.shape().clone(), new_coords))
}

/// The chart parametrization of `Seg(1,n) ∩ {a = 0}` before ambient
/// restriction: the first factor is solved linearly as `(−B, A)` where
/// `a·(Segre coords) = A·X_{1,0} + B·X_{1,1}`, and the `2^n` Segre
/// monomials are re-expanded on that solution. The output polynomials live
/// in the `2(n-1)` variables of factors 2..n and satisfy `Σ a_j chart_j = 0`
/// identically.
pub fn segre_section_chart(n: usize, a: &[Rational]) -> Result<Vec<MPoly>, VarietyError> {
    let first_factor = segre_section_solved_factor(n, a)?;
    let rest_vars = 2 * (n - 1);
    let half = 1 << (n - 1);
    let chart: Vec<MPoly> = (0..1 << n)
        .map(|idx| {
            let top = idx >> (n - 1);
            let rest = MPoly::from_monomial(
                rest_vars,
                segre_rest_monomial(n, idx & (half - 1)),
                Rational::one(),
            );
            first_factor[top].mul(&rest)
        })
        .collect();
    debug_assert!(
        chart
            .iter()
            .zip(a)
            .fold(MPoly::zero(rest_vars), |acc, (c, aj)| acc.add(&c.scale(aj)))
            .is_zero(),
        "section chart must satisfy the hyperplane equation"
    );
    Ok(chart)
}

/// The Segre monomial of factors 2..n at binary-counter index `idx`, in the
/// `2(n-1)`-variable ring of those factors.
fn segre_rest_monomial(n: usize, idx: usize) -> Monomial {
    let rest_vars = 2 * (n - 1);
    (0..n - 1).fold(Monomial::one(rest_vars), |acc, b| {
        let bit = (idx >> (n - 2 - b)) & 1;
        acc.mul(&Monomial::var(rest_vars, 2 * b + bit))
    })
}

/// The solved first factor `(−B, A)` of the section chart, where
/// `a·(Segre coords) = A·X_{1,0} + B·X_{1,1}` as biforms in factors 2..n.
pub fn segre_section_solved_factor(
    n: usize,
    a: &[Rational],
) -> Result<[MPoly; 2], VarietyError> {
    assert!(n >= 2, "a hyperplane section needs at least two factors");
    assert_eq!(a.len(), 1 << n);
    if a.iter().all(Zero::is_zero) {
        return Err(VarietyError::InadmissibleHyperplane);
    }
    let rest_vars = 2 * (n - 1);
    let half = 1 << (n - 1);
    let block_a = MPoly::from_terms(
        rest_vars,
        (0..half).map(|j| (segre_rest_monomial(n, j), a[j].clone())),
    );
    let block_b = MPoly::from_terms(
        rest_vars,
        (0..half).map(|j| (segre_rest_monomial(n, j), a[half + j].clone())),
    );
    if block_a.is_zero() && block_b.is_zero() {
        return Err(VarietyError::InadmissibleHyperplane);
    }
    Ok([block_b.neg(), block_a])
}

/// Rational parametrization of (a dense chart of) a general hyperplane
/// section of `Seg(1,n)`, restricted to its own `P^(2^n - 2)`.
///
/// The ambient restriction applies the reduced-echelon kernel basis of the
/// 1×2^n coefficient row of `a`; its common kernel is the point with
/// coordinate vector `a`, which never lies on the hyperplane over ℚ, so the
/// restriction is an isomorphism of the hyperplane onto the target space.
pub fn hyperplane_section_param(
    s: &ParamVariety,
    a: &[Rational],
) -> Result<ParamVariety, VarietyError> {
    let SourceShape::MultiProjective { factors: n } = *s.shape() else {
        return Err(VarietyError::NotSegre);
    };
    if s.block_degrees().iter().any(|&d| d != 1) || s.coord_count() != 1 << n || n < 2 {
        return Err(VarietyError::NotSegre);
    }
    let chart = segre_section_chart(n, a)?;
    let row = ExactMatrix::from_rational_rows(vec![a.to_vec()]);
    let functionals = row.kernel_basis().unwrap();
    let rest_vars = 2 * (n - 1);
    let coords: Vec<MPoly> = functionals
        .vectors()
        .iter()
        .map(|w| {
            w.iter()
                .zip(&chart)
                .fold(MPoly::zero(rest_vars), |acc, (c, coord)| acc.add(&coord.scale(c)))
        })
        .collect();
    if coords.iter().all(MPoly::is_zero) {
        return Err(VarietyError::DegenerateProjection);
    }
    Ok(ParamVariety::new(
        SourceShape::MultiProjective { factors: n - 1 },
        coords,
    ))
}

/// Applies the ambient-restriction functionals of `hyperplane_section_param`
/// to a point of the big ambient space lying on the hyperplane.
pub fn restrict_point_to_hyperplane(
    a: &[Rational],
    p: &ProjPoint,
) -> Result<ProjPoint, VarietyError> {
    assert_eq!(a.len(), p.len());
    let row = ExactMatrix::from_rational_rows(vec![a.to_vec()]);
    let functionals = row.kernel_basis().unwrap();
    let coords: Vec<Rational> = functionals
        .vectors()
        .iter()
        .map(|w| w.iter().zip(p.coords()).map(|(a, b)| a * b).sum())
        .collect();
    ProjPoint::new(coords)
}
