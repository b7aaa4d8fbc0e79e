//! Polarity engines: apolarity with respect to rational normal curves, the
//! `m^⊗n` pairing on tensor space, and the symbolic line-divisibility test
//! for cubic systems.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{in_span, ExactMatrix};
use crate::poly::{monomials_of_degree, rat_int, LinearForm, MPoly, Rational};
use crate::variety::{segre_section_solved_factor, ProjPoint, VarietyError};

/// Errors from the polarity layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolarityError {
    /// Two of the supplied binary forms are proportional.
    ProportionalForms,
    /// The three linear forms of a cubic system must be independent.
    DependentForms,
    /// The four generators of a cubic system must be independent.
    DependentGenerators,
    /// The tensor-space common-point construction needs an odd number of
    /// factors; for even powers the pairing is symmetric and only a
    /// hyperquadric of points is self-incident.
    EvenTensorOrder,
    /// The hyperplane tensor is zero or degenerate on the first factor.
    InadmissibleHyperplane,
}

impl fmt::Display for PolarityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarityError::ProportionalForms => write!(f, "binary forms must be pairwise non-proportional"),
            PolarityError::DependentForms => write!(f, "linear forms must be independent"),
            PolarityError::DependentGenerators => write!(f, "cubic generators must be independent"),
            PolarityError::EvenTensorOrder => {
                write!(f, "tensor order must be odd: for even order the pairing is symmetric and the self-incident points form a hyperquadric, so no universal common point exists")
            }
            PolarityError::InadmissibleHyperplane => {
                write!(f, "hyperplane tensor is zero or degenerate on the first factor")
            }
        }
    }
}

impl core::error::Error for PolarityError {}

impl From<VarietyError> for PolarityError {
    fn from(_: VarietyError) -> Self {
        PolarityError::InadmissibleHyperplane
    }
}

/// The n-fold Kronecker power of the 2×2 symplectic matrix, acting on the
/// 2^n-dimensional tensor space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MTensor {
    n: usize,
    matrix: ExactMatrix,
}

/// Builds `m^⊗n` for `m = [[0, -1], [1, 0]]`.
pub fn build_m_tensor(n: usize) -> MTensor {
    assert!(n >= 1);
    let m = ExactMatrix::from_int_rows(&[&[0, -1], &[1, 0]]);
    let mut matrix = m.clone();
    for _ in 1..n {
        matrix = m.kron(&matrix);
    }
    MTensor { n, matrix }
}

impl MTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Matrix-vector product over the rationals.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim());
        (0..self.dim())
            .map(|r| {
                (0..self.dim())
                    .map(|c| self.matrix.at(r, c).constant_value().unwrap() * &x[c])
                    .sum()
            })
            .collect()
    }
}

/// The bilinear pairing `<x, m^⊗n x>` on symbolic vectors.
pub fn segre_pairing_sym(n: usize, x: &[MPoly]) -> MPoly {
    let t = build_m_tensor(n);
    assert_eq!(x.len(), t.dim(), "vector length must be 2^n");
    let nvars = x.first().map(MPoly::nvars).unwrap_or(0);
    let mut acc = MPoly::zero(nvars);
    for r in 0..t.dim() {
        for c in 0..t.dim() {
            let coeff = t.matrix.at(r, c).constant_value().unwrap();
            if coeff.is_zero() {
                continue;
            }
            acc = acc.add(&x[r].mul(&x[c]).scale(&coeff));
        }
    }
    acc
}

/// The bilinear pairing `<x, m^⊗n x>` on rational vectors.
pub fn segre_pairing(n: usize, x: &[Rational]) -> Rational {
    let t = build_m_tensor(n);
    assert_eq!(x.len(), t.dim(), "vector length must be 2^n");
    x.iter()
        .zip(t.apply(x))
        .map(|(a, b)| a * &b)
        .sum()
}

/// Dual pairing of two rational vectors.
pub fn dual_pairing(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coefficient tensor of `∏_i (x_{i,1} X_{i,0} - x_{i,0} X_{i,1})` for
/// symbolic factor points; equals (up to scale) `m^⊗n` applied to the
/// Segre image of the factors.
pub fn segre_osc_form_sym(factors: &[[MPoly; 2]]) -> Vec<MPoly> {
    let n = factors.len();
    assert!(n >= 1);
    let nvars = factors[0][0].nvars();
    (0..1usize << n)
        .map(|idx| {
            (0..n).fold(MPoly::one(nvars), |acc, i| {
                let bit = (idx >> (n - 1 - i)) & 1;
                if bit == 0 {
                    acc.mul(&factors[i][1])
                } else {
                    acc.mul(&factors[i][0]).neg()
                }
            })
        })
        .collect()
}

/// Coefficient tensor of the osculating product form at rational factor
/// points.
pub fn segre_osc_form(factor_points: &[[Rational; 2]]) -> Result<Vec<Rational>, PolarityError> {
    for p in factor_points {
        if p[0].is_zero() && p[1].is_zero() {
            return Err(PolarityError::ProportionalForms);
        }
    }
    let lifted: Vec<[MPoly; 2]> = factor_points
        .iter()
        .map(|p| [MPoly::constant(0, p[0].clone()), MPoly::constant(0, p[1].clone())])
        .collect();
    Ok(segre_osc_form_sym(&lifted)
        .into_iter()
        .map(|p| p.constant_value().unwrap())
        .collect())
}

/// Membership of the product `∏ forms` in the span of the d-th powers
/// `forms[i]^d`, where `d = forms.len()`.
///
/// For odd d membership holds for every pairwise non-proportional tuple and
/// the witness coefficients are returned; for even d it generically fails
/// and `None` comes back.
pub fn rnc_polarity_check(
    forms: &[LinearForm],
) -> Result<Option<Vec<Rational>>, PolarityError> {
    let d = forms.len() as u32;
    assert!(d >= 1);
    assert!(forms.iter().all(|l| l.nvars() == 2), "expected binary forms");
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = ExactMatrix::from_rational_rows(vec![forms[i].coeffs(), forms[j].coeffs()]);
            if m.rank_exact().unwrap() < 2 {
                return Err(PolarityError::ProportionalForms);
            }
        }
    }
    let basis = monomials_of_degree(2, d);
    let powers: Vec<Vec<Rational>> = forms.iter().map(|l| l.pow(d).coeff_vector(&basis)).collect();
    let product = forms
        .iter()
        .fold(MPoly::one(2), |acc, l| acc.mul(l.as_poly()))
        .coeff_vector(&basis);
    Ok(in_span(&powers, &product))
}

/// Four independent homogeneous cubics in three variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicSystem {
    generators: Vec<MPoly>,
}

impl CubicSystem {
    pub fn new(generators: Vec<MPoly>) -> Result<Self, PolarityError> {
        assert_eq!(generators.len(), 4, "a cubic system has four generators");
        assert!(generators.iter().all(|g| g.nvars() == 3 && g.is_homogeneous_of(3)));
        let basis = monomials_of_degree(3, 3);
        let m = ExactMatrix::from_rational_rows(
            generators.iter().map(|g| g.coeff_vector(&basis)).collect(),
        );
        if m.rank_exact().unwrap() != 4 {
            return Err(PolarityError::DependentGenerators);
        }
        Ok(CubicSystem { generators })
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }
}

/// The system `(l0^3, l1^3, l2^3, l0*l1*l2)` of three independent linear
/// forms.
pub fn togliatti_system(
    l0: &LinearForm,
    l1: &LinearForm,
    l2: &LinearForm,
) -> Result<CubicSystem, PolarityError> {
    assert!(l0.nvars() == 3 && l1.nvars() == 3 && l2.nvars() == 3);
    let m = ExactMatrix::from_rational_rows(vec![l0.coeffs(), l1.coeffs(), l2.coeffs()]);
    if m.rank_exact().unwrap() != 3 {
        return Err(PolarityError::DependentForms);
    }
    let product = l0.as_poly().mul(l1.as_poly()).mul(l2.as_poly());
    CubicSystem::new(vec![l0.pow(3), l1.pow(3), l2.pow(3), product])
        .map_err(|_| PolarityError::DependentForms)
}

/// One affine chart of the space of lines `a·X0 + b·X1 + c·X2 = 0`: the
/// chart pins coefficient `unit` to 1 and leaves the other two symbolic.
fn chart_images(unit: usize) -> Vec<MPoly> {
    // ring: vars 0,1 = the free coefficients, var 2 = s, var 3 = t
    let u = MPoly::var(4, 0);
    let v = MPoly::var(4, 1);
    let s = MPoly::var(4, 2);
    let t = MPoly::var(4, 3);
    let solved = u.mul(&s).add(&v.mul(&t)).neg();
    match unit {
        0 => vec![solved, s, t],
        1 => vec![s, solved, t],
        2 => vec![s, t, solved],
        _ => unreachable!(),
    }
}

/// Coefficient matrix (rows: binary monomials of the common degree, columns:
/// input forms) of the restrictions of `polys` modulo the symbolic line of
/// one chart. Entries are polynomials in the two free line coefficients.
fn restricted_coeff_matrix(polys: &[MPoly], chart: usize) -> ExactMatrix {
    let d = polys
        .iter()
        .filter_map(MPoly::total_degree)
        .max()
        .expect("at least one nonzero form");
    let images = chart_images(chart);
    let st_basis = monomials_of_degree(2, d);
    let mut entries = Vec::with_capacity((d as usize + 1) * polys.len());
    let restricted: Vec<_> = polys
        .iter()
        .map(|p| p.substitute(&images).split_vars(&[2, 3]))
        .collect();
    for mono in &st_basis {
        for r in &restricted {
            entries.push(r.get(mono).cloned().unwrap_or_else(|| MPoly::zero(2)));
        }
    }
    ExactMatrix::from_polys(st_basis.len(), polys.len(), 2, entries)
}

/// Verdict of the symbolic line-divisibility test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LineTestVerdict {
    /// On every line some combination of the generators is divisible by the
    /// line: the 4×4 restriction determinant vanishes identically on all
    /// three coefficient charts.
    HoldsEverywhere,
    /// A rational line on which the restrictions stay independent.
    Fails { witness: LinearForm },
}

/// Tests whether for *every* line `l` some combination of the generators is
/// divisible by `l`, by checking that the determinant of the restricted
/// coefficient matrix is the identically-zero polynomial on the three
/// echelon charts of the line coefficient space.
pub fn laplace_line_test(system: &CubicSystem) -> LineTestVerdict {
    line_dependence_test(system.generators())
}

/// Same determinant test for an arbitrary list of `d+1` degree-d forms.
pub fn line_dependence_test(polys: &[MPoly]) -> LineTestVerdict {
    for chart in 0..3 {
        let det = restricted_coeff_matrix(polys, chart)
            .determinant()
            .expect("restriction matrix is square");
        if !det.is_zero() {
            let (u, v) = small_nonroot(&det);
            let mut coeffs = [Rational::zero(), Rational::zero(), Rational::zero()];
            coeffs[chart] = rat_int(1);
            let mut free = [0usize; 2];
            let mut fi = 0;
            for i in 0..3 {
                if i != chart {
                    free[fi] = i;
                    fi += 1;
                }
            }
            coeffs[free[0]] = u;
            coeffs[free[1]] = v;
            let witness = LinearForm::from_coeffs(&coeffs).unwrap();
            return LineTestVerdict::Fails { witness };
        }
    }
    LineTestVerdict::HoldsEverywhere
}

/// Deterministic search for a small integer non-root of a nonzero
/// bivariate polynomial.
fn small_nonroot(p: &MPoly) -> (Rational, Rational) {
    let spiral = |k: i64| if k % 2 == 0 { k / 2 } else { -(k / 2) - 1 };
    for i in 0..200 {
        for j in 0..200 {
            let (u, v) = (rat_int(spiral(i)), rat_int(spiral(j)));
            if !p.evaluate(&[u.clone(), v.clone()]).is_zero() {
                return (u, v);
            }
        }
    }
    unreachable!("a nonzero bivariate polynomial has small integer non-roots");
}

/// The restriction bridge: for linear forms `l_0..l_{d-1}` (d = count), the
/// `d+1` forms `{l_i^d, ∏ l_i}` become linearly dependent modulo *every*
/// line, verified as an identically-zero symbolic determinant on all charts.
pub fn power_product_line_dependence(forms: &[LinearForm]) -> bool {
    let d = forms.len() as u32;
    assert!(forms.iter().all(|l| l.nvars() == 3));
    let mut polys: Vec<MPoly> = forms.iter().map(|l| l.pow(d)).collect();
    polys.push(forms.iter().fold(MPoly::one(3), |acc, l| acc.mul(l.as_poly())));
    matches!(line_dependence_test(&polys), LineTestVerdict::HoldsEverywhere)
}

/// Certificate for the common point of the 2n-tangent hyperplanes along a
/// hyperplane section of `Seg(1, N)`, N odd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectionCertificate {
    /// `m^⊗N · a`, normalized.
    pub candidate: ProjPoint,
    /// `<a, candidate> = 0` (forced by antisymmetry of odd powers).
    pub on_hyperplane: bool,
    /// The pairing of the osculating product form at the symbolic chart
    /// point of the section against the candidate is the zero polynomial.
    pub tangency_identity: bool,
}

impl SectionCertificate {
    pub fn verified(&self) -> bool {
        self.on_hyperplane && self.tangency_identity
    }
}

/// Computes the candidate `c = m^⊗N · a` and certifies, as polynomial
/// identities, that it lies on the hyperplane `{a = 0}` and in every
/// 2n-tangent hyperplane along the section chart.
pub fn segre_section_common_point(
    a: &[Rational],
) -> Result<SectionCertificate, PolarityError> {
    let n = a.len().trailing_zeros() as usize;
    assert_eq!(a.len(), 1 << n, "hyperplane vector length must be a power of two");
    if n % 2 == 0 {
        return Err(PolarityError::EvenTensorOrder);
    }
    let solved = segre_section_solved_factor(n, a)?;
    let tensor = build_m_tensor(n);
    let raw = tensor.apply(a);
    let candidate = ProjPoint::new(raw.clone()).expect("m^⊗n is invertible");
    let on_hyperplane = dual_pairing(a, &raw).is_zero();
    // factor points along the chart: factor 1 is the solved block, factors
    // 2..n are the symbolic chart parameters
    let rest_vars = 2 * (n - 1);
    let mut factors: Vec<[MPoly; 2]> = Vec::with_capacity(n);
    let [x10, x11] = solved;
    factors.push([x10, x11]);
    for b in 0..n - 1 {
        factors.push([MPoly::var(rest_vars, 2 * b), MPoly::var(rest_vars, 2 * b + 1)]);
    }
    let osc = segre_osc_form_sym(&factors);
    let mut pairing = MPoly::zero(rest_vars);
    for (phi, c) in osc.iter().zip(candidate.coords()) {
        pairing = pairing.add(&phi.scale(c));
    }
    Ok(SectionCertificate {
        candidate,
        on_hyperplane,
        tangency_identity: pairing.is_zero(),
    })
}
