//! Exact rational scalars and sparse multivariate polynomial arithmetic.
//!
//! Polynomials are stored as maps from monomials to nonzero rational
//! coefficients. The term order is graded-lexicographic with `X0 > X1 > …`,
//! which fixes coordinate vectors of forms (and hence every matrix and
//! report downstream) deterministically.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::reduce;

/// Arbitrary-precision exact rational number, always stored reduced with a
/// positive denominator (zero is `0/1`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the exact rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Clears denominators and divides by the numerator gcd, then flips signs so
/// the first nonzero entry is positive. Returns `None` for the zero vector.
///
/// The output entries are integers (denominator 1) with gcd 1; the map is
/// idempotent and invariant under rescaling the input by a nonzero rational.
pub fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<Rational>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()) == Some(true) {
        g = -g;
    }
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    Some(ints.into_iter().map(Rational::from_integer).collect())
}

/// A monomial: one exponent per ambient variable, compared graded-lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial (all exponents zero).
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `X{index}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range {nvars}");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree = sum of exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient, `None` when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{i}")?;
            } else {
                write!(f, "X{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, graded-lex
/// descending. The count is `C(d + nvars - 1, nvars - 1)`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill_monomials(&mut current, 0, d, &mut out);
    out
}

fn fill_monomials(current: &mut Vec<u32>, var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill_monomials(current, var + 1, remaining - e, out);
    }
    current[var] = 0;
}

/// A sparse multivariate polynomial over the rationals.
///
/// Invariant: no stored zero coefficients; every monomial has exactly
/// `nvars` exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rational::one())
    }

    /// The variable `X{index}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = MPoly::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), Rational::one());
        p
    }

    pub fn from_monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars, "monomial length must equal variable count");
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = MPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients and exponent rows.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        MPoly::from_terms(
            nvars,
            terms.iter().map(|(c, exps)| {
                assert_eq!(exps.len(), nvars);
                (Monomial::new(exps.to_vec()), rat_int(*c))
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial length must equal variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient-wise sum. Panics on variable-count mismatch.
    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    /// Distributive product. Panics on variable-count mismatch.
    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch in mul");
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to `X{var}`.
    pub fn partial_derivative(&self, var: usize) -> MPoly {
        assert!(var < self.nvars, "derivative variable out of range");
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = e - 1;
            out.add_term(Monomial::new(exps), c * rat_int(e as i64));
        }
        out
    }

    /// Exact substitution value at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point length must equal variable count");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Composition `f(images)`. All images must share a variable count.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars, "image count must equal variable count");
        let out_nvars = images.first().map(|p| p.nvars).unwrap_or(0);
        assert!(
            images.iter().all(|p| p.nvars == out_nvars),
            "images must share a variable count"
        );
        // Cache powers of each image up to the largest exponent used.
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<MPoly>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut pows = Vec::with_capacity(top as usize + 1);
                pows.push(MPoly::one(out_nvars));
                for e in 1..=top {
                    let next = pows[e as usize - 1].mul(img);
                    pows.push(next);
                }
                pows
            })
            .collect();
        let mut out = MPoly::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(out_nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree exactly `d` (vacuously for 0).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value when `is_constant`, else `None`.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`; panics when the division is not
    /// exact. Used by fraction-free elimination, where exactness is
    /// guaranteed by the Bareiss identity.
    pub fn div_exact(&self, divisor: &MPoly) -> MPoly {
        assert_eq!(self.nvars, divisor.nvars, "variable-count mismatch in div_exact");
        let (dm, dc) = divisor.leading_term().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = MPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm
                .div(dm)
                .expect("inexact polynomial division in fraction-free elimination");
            let qc = rc / dc;
            let t = MPoly::from_monomial(self.nvars, qm, qc);
            rem = rem.sub(&t.mul(divisor));
            quo = quo.add(&t);
        }
        quo
    }

    /// Largest exponent of `X{var}` appearing in any term.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    /// Multidegree with respect to a partition of the variables into blocks:
    /// `blocks[b]` lists the variable indices of block `b`. Returns `None`
    /// when the polynomial is not homogeneous per block.
    pub fn block_degrees(&self, blocks: &[Vec<usize>]) -> Option<Vec<u32>> {
        let mut degs: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            let d: Vec<u32> = blocks
                .iter()
                .map(|vars| vars.iter().map(|&i| m.exponents()[i]).sum())
                .collect();
            match &degs {
                None => degs = Some(d),
                Some(prev) if *prev != d => return None,
                _ => {}
            }
        }
        degs.or_else(|| Some(vec![0; blocks.len()]))
    }

    /// Splits off the variables listed in `outer` (strictly increasing
    /// indices): returns a map from outer-monomials to polynomials in the
    /// remaining variables, in their original relative order.
    pub fn split_vars(&self, outer: &[usize]) -> BTreeMap<Monomial, MPoly> {
        debug_assert!(outer.windows(2).all(|w| w[0] < w[1]));
        let inner: Vec<usize> = (0..self.nvars).filter(|i| !outer.contains(i)).collect();
        let mut out: BTreeMap<Monomial, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let om = Monomial::new(outer.iter().map(|&i| m.exponents()[i]).collect());
            let im = Monomial::new(inner.iter().map(|&i| m.exponents()[i]).collect());
            out.entry(om)
                .or_insert_with(|| MPoly::zero(inner.len()))
                .add_term(im, c.clone());
        }
        out
    }

    /// Rescales by a positive rational so that the coefficients become
    /// coprime integers with positive leading (graded-lex) coefficient.
    pub fn primitive_integer_normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rational> = self.terms.values().cloned().collect();
        let prim = primitive_integer_vector(&coeffs).unwrap();
        let mut normalized = MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(prim.into_iter())
                .collect(),
        };
        // primitive_integer_vector makes the first stored (graded-lex
        // smallest) coefficient positive; flip so the *leading* one is.
        if normalized.leading_term().unwrap().1.is_negative() {
            normalized = normalized.neg();
        }
        normalized
    }

    /// Coefficient vector with respect to a monomial basis.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }
}

impl fmt::Display for MPoly {
    /// Canonical rendering: terms in graded-lex descending order,
    /// coefficients as `p` or `p/q`, variables `X0..Xn`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Errors from the polynomial layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// A linear form was required but the polynomial is zero or not of
    /// degree exactly one.
    NotLinear,
    /// The line to restrict modulo is the zero form.
    ZeroLine,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotLinear => write!(f, "expected a nonzero homogeneous form of degree 1"),
            PolyError::ZeroLine => write!(f, "cannot restrict modulo the zero form"),
        }
    }
}

impl core::error::Error for PolyError {}

/// A nonzero homogeneous polynomial of degree exactly one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    poly: MPoly,
}

impl LinearForm {
    pub fn new(poly: MPoly) -> Result<Self, PolyError> {
        if poly.is_zero() || !poly.is_homogeneous_of(1) {
            return Err(PolyError::NotLinear);
        }
        Ok(LinearForm { poly })
    }

    /// Builds `c0*X0 + c1*X1 + …` from rational coefficients.
    pub fn from_coeffs(coeffs: &[Rational]) -> Result<Self, PolyError> {
        let nvars = coeffs.len();
        let poly = MPoly::from_terms(
            nvars,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(nvars, i), c.clone())),
        );
        LinearForm::new(poly)
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, PolyError> {
        let rats: Vec<Rational> = coeffs.iter().map(|&c| rat_int(c)).collect();
        LinearForm::from_coeffs(&rats)
    }

    pub fn as_poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Coefficient vector `(c0, …, cn)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.poly.nvars())
            .map(|i| self.poly.coeff(&Monomial::var(self.poly.nvars(), i)))
            .collect()
    }

    pub fn pow(&self, e: u32) -> MPoly {
        self.poly.pow(e)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Pulls back a homogeneous form in 3 variables along the canonical rational
/// parametrization of the line `{l = 0} ⊂ P²`, producing a binary form of
/// the same degree (or zero).
///
/// The parametrization sends `(s, t)` to `s·v + t·w` where `(v, w)` is the
/// reduced-echelon kernel basis of the 1×3 coefficient matrix of `l`.
pub fn restrict_mod_line(f: &MPoly, l: &LinearForm) -> MPoly {
    assert_eq!(f.nvars(), 3, "restrict_mod_line expects forms in 3 variables");
    assert_eq!(l.nvars(), 3, "restrict_mod_line expects a line in 3 variables");
    let basis = reduce::kernel_of_row(&l.coeffs());
    debug_assert_eq!(basis.len(), 2);
    let images: Vec<MPoly> = (0..3)
        .map(|j| {
            MPoly::from_terms(
                2,
                [
                    (Monomial::var(2, 0), basis[0][j].clone()),
                    (Monomial::var(2, 1), basis[1][j].clone()),
                ],
            )
        })
        .collect();
    f.substitute(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    #[test]
    fn add_inverse_gives_zero() {
        let p = MPoly::from_int_terms(3, &[(1, &[3, 0, 0])]);
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn add_disjoint_terms() {
        let a = MPoly::from_int_terms(3, &[(1, &[2, 1, 0])]);
        let b = MPoly::from_int_terms(3, &[(1, &[2, 0, 1])]);
        let s = a.add(&b);
        assert_eq!(s.term_count(), 2);
    }

    #[test]
    fn cube_expansion_matches_hand_map() {
        // (X0+X1)^3 - X0^3 - X1^3 = 3*X0^2*X1 + 3*X0*X1^2
        let sum = x(0).add(&x(1));
        let lhs = sum
            .pow(3)
            .sub(&x(0).pow(3))
            .sub(&x(1).pow(3));
        let expected = MPoly::from_int_terms(3, &[(3, &[2, 1, 0]), (3, &[1, 2, 0])]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn mul_monomials() {
        let p = x(0).mul(&x(1).mul(&x(2)));
        assert_eq!(p, MPoly::from_int_terms(3, &[(1, &[1, 1, 1])]));
    }

    fn triple_line_product_at(p: &[i64; 3]) -> MPoly {
        // (x2*X1 - x1*X2)(x2*X0 - x0*X2)(x1*X0 - x0*X1) at x = p
        let f1 = MPoly::from_int_terms(3, &[(p[2], &[0, 1, 0]), (-p[1], &[0, 0, 1])]);
        let f2 = MPoly::from_int_terms(3, &[(p[2], &[1, 0, 0]), (-p[0], &[0, 0, 1])]);
        let f3 = MPoly::from_int_terms(3, &[(p[1], &[1, 0, 0]), (-p[0], &[0, 1, 0])]);
        f1.mul(&f2).mul(&f3)
    }

    #[test]
    fn triple_line_product_avoids_the_product_monomial() {
        let p = triple_line_product_at(&[1, 1, 1]);
        let expected_support = [
            [2u32, 1, 0],
            [2, 0, 1],
            [0, 2, 1],
            [0, 1, 2],
            [1, 2, 0],
            [1, 0, 2],
        ];
        assert_eq!(p.term_count(), 6);
        assert!(p.coeff(&Monomial::new(vec![1, 1, 1])).is_zero());
        for exps in expected_support {
            assert!(!p.coeff(&Monomial::new(exps.to_vec())).is_zero());
        }
    }

    #[test]
    fn triple_line_product_symbolic_coefficient_vanishes() {
        // Ring (x0, x1, x2, X0, X1, X2); the X0*X1*X2 coefficient of the
        // expanded product must vanish identically in x.
        let v = |i: usize| MPoly::var(6, i);
        let f1 = v(2).mul(&v(4)).sub(&v(1).mul(&v(5)));
        let f2 = v(2).mul(&v(3)).sub(&v(0).mul(&v(5)));
        let f3 = v(1).mul(&v(3)).sub(&v(0).mul(&v(4)));
        let product = f1.mul(&f2).mul(&f3);
        let split = product.split_vars(&[3, 4, 5]);
        let key = Monomial::new(vec![1, 1, 1]);
        assert!(split.get(&key).is_none() || split[&key].is_zero());
        // Sanity: the X0^2*X1 coefficient is a nonzero polynomial in x.
        let other = Monomial::new(vec![2, 1, 0]);
        assert!(!split[&other].is_zero());
    }

    #[test]
    fn partial_derivative_basics() {
        let p = MPoly::from_int_terms(3, &[(1, &[2, 1, 0])]);
        assert_eq!(
            p.partial_derivative(0),
            MPoly::from_int_terms(3, &[(2, &[1, 1, 0])])
        );
        let q = MPoly::from_int_terms(3, &[(1, &[1, 1, 1])]);
        assert_eq!(
            q.partial_derivative(2),
            MPoly::from_int_terms(3, &[(1, &[1, 1, 0])])
        );
        assert!(MPoly::one(3).partial_derivative(1).is_zero());
    }

    #[test]
    fn euler_relation_on_fermat_cubic() {
        let f = x(0).pow(3).add(&x(1).pow(3)).add(&x(2).pow(3));
        let mut acc = MPoly::zero(3);
        for i in 0..3 {
            acc = acc.add(&x(i).mul(&f.partial_derivative(i)));
        }
        assert_eq!(acc, f.scale(&rat_int(3)));
    }

    #[test]
    fn evaluate_examples() {
        let p = MPoly::from_int_terms(3, &[(1, &[1, 1, 1])]);
        let ones = [rat_int(1), rat_int(1), rat_int(1)];
        assert_eq!(p.evaluate(&ones), rat_int(1));
        let q = MPoly::from_int_terms(3, &[(1, &[2, 1, 0])]);
        assert_eq!(
            q.evaluate(&[rat_int(2), rat_int(3), rat_int(0)]),
            rat_int(12)
        );
        let triple = triple_line_product_at(&[1, 1, 1]);
        assert_eq!(triple.evaluate(&ones), rat_int(0));
    }

    #[test]
    fn restrict_mod_line_examples() {
        let l0 = LinearForm::from_ints(&[1, 0, 0]).unwrap();
        // X0 * q restricts to zero for any quadric q
        let q = x(0).mul(&x(1)).add(&x(2).pow(2));
        assert!(restrict_mod_line(&x(0).mul(&q), &l0).is_zero());
        // X1^3 mod X0 -> s^3 under (0, s, t)
        let r = restrict_mod_line(&x(1).pow(3), &l0);
        assert_eq!(r, MPoly::from_int_terms(2, &[(1, &[3, 0])]));
        // X0*X1*X2 mod X0 - X1 -> s^2*t under (s, s, t)
        let l = LinearForm::from_ints(&[1, -1, 0]).unwrap();
        let r = restrict_mod_line(&x(0).mul(&x(1)).mul(&x(2)), &l);
        assert_eq!(r, MPoly::from_int_terms(2, &[(1, &[2, 1])]));
    }

    #[test]
    fn substitute_examples() {
        let p = MPoly::from_int_terms(2, &[(1, &[1, 1])]);
        let s = MPoly::var(2, 0);
        assert_eq!(
            p.substitute(&[s.clone(), s.clone()]),
            MPoly::from_int_terms(2, &[(1, &[2, 0])])
        );
        // degree-d form composed with degree-1 images stays degree d
        let f = MPoly::from_int_terms(3, &[(1, &[2, 1, 0]), (2, &[0, 0, 3])]);
        let images: Vec<MPoly> = (0..3)
            .map(|i| MPoly::var(3, (i + 1) % 3).add(&MPoly::var(3, i)))
            .collect();
        let g = f.substitute(&images);
        assert!(g.is_homogeneous_of(3));
    }

    #[test]
    fn veronese_composition_recovers_cubic() {
        // Substituting the 10 cubic monomials into a linear form in 10
        // variables gives back a cubic in 3 variables.
        let basis = monomials_of_degree(3, 3);
        assert_eq!(basis.len(), 10);
        let images: Vec<MPoly> = basis
            .iter()
            .map(|m| MPoly::from_monomial(3, m.clone(), Rational::one()))
            .collect();
        let linear = MPoly::from_terms(
            10,
            (0..10).map(|i| (Monomial::var(10, i), rat_int(i as i64 + 1))),
        );
        let composed = linear.substitute(&images);
        let direct = basis
            .iter()
            .enumerate()
            .fold(MPoly::zero(3), |acc, (i, m)| {
                acc.add(&MPoly::from_monomial(3, m.clone(), rat_int(i as i64 + 1)))
            });
        assert_eq!(composed, direct);
    }

    #[test]
    fn monomial_enumeration_counts_and_order() {
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(2, 7).len(), 8);
        let linear = monomials_of_degree(3, 1);
        assert_eq!(
            linear,
            vec![
                Monomial::var(3, 0),
                Monomial::var(3, 1),
                Monomial::var(3, 2)
            ]
        );
        // graded-lex descending
        let cubics = monomials_of_degree(3, 3);
        assert!(cubics.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(cubics[0], Monomial::new(vec![3, 0, 0]));
        assert_eq!(cubics[4], Monomial::new(vec![1, 1, 1]));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = x(0).add(&x(1).scale(&rat(3, 2)));
        let b = x(0).pow(2).sub(&x(1).mul(&x(2)));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), b);
        assert_eq!(prod.div_exact(&b), a);
    }

    #[test]
    fn canonical_rendering() {
        let p = MPoly::from_int_terms(3, &[(3, &[2, 1, 0]), (-1, &[0, 3, 0]), (2, &[0, 0, 0])]);
        assert_eq!(p.to_string(), "3*X0^2*X1 - X1^3 + 2");
        let q = MPoly::from_terms(2, [(Monomial::new(vec![1, 1]), rat(-1, 2))]);
        assert_eq!(q.to_string(), "-1/2*X0*X1");
        assert_eq!(MPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn primitive_vector_normalization() {
        let v = [rat(-2, 3), rat_int(0), rat(4, 9)];
        let prim = primitive_integer_vector(&v).unwrap();
        assert_eq!(prim, vec![rat_int(3), rat_int(0), rat_int(-2)]);
        assert_eq!(primitive_integer_vector(&prim).unwrap(), prim);
        assert!(primitive_integer_vector(&[rat_int(0)]).is_none());
    }

    #[test]
    fn linear_form_validation() {
        assert!(LinearForm::from_ints(&[0, 0, 0]).is_err());
        assert!(LinearForm::new(MPoly::from_int_terms(3, &[(1, &[2, 0, 0])])).is_err());
        let l = LinearForm::from_ints(&[1, -2, 0]).unwrap();
        assert_eq!(l.coeffs(), vec![rat_int(1), rat_int(-2), rat_int(0)]);
    }
}
