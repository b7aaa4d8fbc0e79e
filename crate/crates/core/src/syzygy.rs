//! Splitting type, on lines, of the kernel bundle of the evaluation map
//! defined by a cubic system.
//!
//! For a system (f0..f3) and a line l, the kernel of
//! `(binary forms of degree k)^4 → binary forms of degree k+3`,
//! `(v_i) ↦ Σ v_i·(f_i mod l)`, has dimension `h(k) = Σ max(0, a_i + k + 1)`
//! where `(a_1, a_2, a_3)` is the splitting type of the restricted kernel
//! bundle. Three evaluations h(0), h(1), h(2) pin the type down among the
//! degree triples with `a_i ∈ [-3, 0]` and `Σ a_i = -3`.

use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::linalg::ExactMatrix;
use crate::polarity::CubicSystem;
use crate::poly::{monomials_of_degree, rat_int, restrict_mod_line, LinearForm, MPoly, Rational};

/// Errors from the syzygy layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SyzygyError {
    /// Every generator restricts to zero on the line (the line lies in the
    /// closure of the base locus); the splitting dictionary does not apply.
    DegenerateRestriction,
    /// The h-sequence matches no admissible splitting type; this signals a
    /// base point on the line or an internal rank bug.
    InconsistentRanks,
    /// No general line was found within the retry budget.
    SamplingExhausted,
}

impl fmt::Display for SyzygyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyError::DegenerateRestriction => {
                write!(f, "all four generators vanish on the line")
            }
            SyzygyError::InconsistentRanks => {
                write!(f, "kernel dimensions match no admissible splitting type")
            }
            SyzygyError::SamplingExhausted => write!(f, "failed to sample a usable line"),
        }
    }
}

impl core::error::Error for SyzygyError {}

/// Splitting degrees `(a_1 ≥ a_2 ≥ a_3)` with `Σ a_i = -3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SplittingType {
    degrees: [i64; 3],
}

impl SplittingType {
    pub fn new(degrees: [i64; 3]) -> Self {
        assert!(degrees[0] >= degrees[1] && degrees[1] >= degrees[2]);
        assert_eq!(degrees.iter().sum::<i64>(), -3);
        SplittingType { degrees }
    }

    pub fn degrees(&self) -> [i64; 3] {
        self.degrees
    }

    fn predicted_h(&self, k: i64) -> usize {
        self.degrees
            .iter()
            .map(|&a| 0.max(a + k + 1) as usize)
            .sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.degrees[0], self.degrees[1], self.degrees[2]
        )
    }
}

/// The admissible types for a base-point-free system: `a_i ∈ [-3, 0]`.
const CANDIDATE_TYPES: [[i64; 3]; 3] = [[0, 0, -3], [0, -1, -2], [-1, -1, -1]];

/// Dimension of the kernel of the multiplication map at twist k.
fn kernel_dim(restrictions: &[MPoly], k: u32) -> usize {
    let target = monomials_of_degree(2, k + 3);
    let source = monomials_of_degree(2, k);
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(4 * source.len());
    for r in restrictions {
        for m in &source {
            let shifted = r.mul(&MPoly::from_monomial(2, m.clone(), Rational::from_integer(1.into())));
            cols.push(shifted.coeff_vector(&target));
        }
    }
    let ncols = cols.len();
    let entries: Vec<Rational> = (0..target.len())
        .flat_map(|row| cols.iter().map(move |c| c[row].clone()))
        .collect();
    let matrix = ExactMatrix::from_rationals(target.len(), ncols, entries);
    ncols - matrix.rank_exact().unwrap()
}

/// Splitting type of the kernel bundle restricted to the line `{l = 0}`,
/// recovered from h(0), h(1), h(2).
pub fn splitting_type(system: &CubicSystem, l: &LinearForm) -> Result<SplittingType, SyzygyError> {
    let restrictions: Vec<MPoly> = system
        .generators()
        .iter()
        .map(|g| restrict_mod_line(g, l))
        .collect();
    if restrictions.iter().all(MPoly::is_zero) {
        return Err(SyzygyError::DegenerateRestriction);
    }
    let h: Vec<usize> = (0..=2).map(|k| kernel_dim(&restrictions, k)).collect();
    for degrees in CANDIDATE_TYPES {
        let t = SplittingType::new(degrees);
        if (0..=2).all(|k| t.predicted_h(k) == h[k as usize]) {
            return Ok(t);
        }
    }
    Err(SyzygyError::InconsistentRanks)
}

/// Splitting on sampled lines plus a stability report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericSplitting {
    /// Lexicographically minimal (most balanced) observed type — the
    /// generic one, since special lines only jump upward.
    pub splitting: SplittingType,
    pub observations: Vec<SplittingType>,
    /// All observations agreed.
    pub stable: bool,
    /// At least two lines were observed.
    pub confirmed: bool,
}

/// Samples `seeds` random integer lines (coefficients in [-99, 99]) and
/// reports the most balanced observed type.
pub fn generic_splitting<R: Rng + ?Sized>(
    system: &CubicSystem,
    seeds: usize,
    rng: &mut R,
) -> Result<GenericSplitting, SyzygyError> {
    assert!(seeds >= 1);
    let mut observations = Vec::with_capacity(seeds);
    for _ in 0..seeds {
        let mut done = false;
        for _ in 0..10 {
            let coeffs: Vec<Rational> = (0..3).map(|_| rat_int(rng.gen_range(-99..=99))).collect();
            let Ok(line) = LinearForm::from_coeffs(&coeffs) else {
                continue;
            };
            match splitting_type(system, &line) {
                Ok(t) => {
                    observations.push(t);
                    done = true;
                    break;
                }
                Err(SyzygyError::DegenerateRestriction) => continue,
                Err(e) => return Err(e),
            }
        }
        if !done {
            return Err(SyzygyError::SamplingExhausted);
        }
    }
    let splitting = *observations.iter().min().unwrap();
    let stable = observations.iter().all(|t| *t == splitting);
    Ok(GenericSplitting {
        splitting,
        stable,
        confirmed: observations.len() >= 2,
        observations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::togliatti_system;
    use crate::sample::rng_from_seed;
    use alloc::vec;

    fn canonical() -> CubicSystem {
        togliatti_system(
            &LinearForm::from_ints(&[1, 0, 0]).unwrap(),
            &LinearForm::from_ints(&[0, 1, 0]).unwrap(),
            &LinearForm::from_ints(&[0, 0, 1]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn togliatti_jumps_on_every_line() {
        let l = LinearForm::from_ints(&[2, -5, 7]).unwrap();
        let t = splitting_type(&canonical(), &l).unwrap();
        assert_eq!(t.degrees(), [0, -1, -2]);
    }

    #[test]
    fn random_system_is_balanced() {
        let x = |i| MPoly::var(3, i);
        let system = CubicSystem::new(vec![
            x(0).pow(3).add(&x(1).mul(&x(2)).mul(&x(0))),
            x(1).pow(3).sub(&x(0).pow(2).mul(&x(2))),
            x(2).pow(3).add(&x(0).pow(2).mul(&x(1)).scale(&rat_int(2))),
            x(0).mul(&x(1)).mul(&x(2)).add(&x(1).pow(2).mul(&x(0))),
        ])
        .unwrap();
        let l = LinearForm::from_ints(&[1, 1, 1]).unwrap();
        let t = splitting_type(&system, &l).unwrap();
        assert_eq!(t.degrees(), [-1, -1, -1]);
    }

    #[test]
    fn near_togliatti_system_jumps_only_on_special_lines() {
        let x = |i| MPoly::var(3, i);
        let system = CubicSystem::new(vec![
            x(0).pow(3),
            x(1).pow(3),
            x(2).pow(3),
            x(0).pow(2).mul(&x(1)),
        ])
        .unwrap();
        // general line: balanced
        let general = LinearForm::from_ints(&[3, 1, -2]).unwrap();
        assert_eq!(
            splitting_type(&system, &general).unwrap().degrees(),
            [-1, -1, -1]
        );
        // X2 = 0 kills one generator: a combination divisible by the line
        // exists, so the type jumps
        let special = LinearForm::from_ints(&[0, 0, 1]).unwrap();
        assert_eq!(
            splitting_type(&system, &special).unwrap().degrees(),
            [0, -1, -2]
        );
    }

    #[test]
    fn degenerate_restriction_is_reported() {
        let x = |i| MPoly::var(3, i);
        let system = CubicSystem::new(vec![
            x(0).pow(3),
            x(0).mul(&x(1).pow(2)),
            x(0).mul(&x(2).pow(2)),
            x(0).mul(&x(1)).mul(&x(2)),
        ])
        .unwrap();
        let l = LinearForm::from_ints(&[1, 0, 0]).unwrap();
        assert_eq!(
            splitting_type(&system, &l).unwrap_err(),
            SyzygyError::DegenerateRestriction
        );
    }

    #[test]
    fn generic_splitting_of_togliatti_is_stable() {
        let mut rng = rng_from_seed(31);
        let report = generic_splitting(&canonical(), 5, &mut rng).unwrap();
        assert_eq!(report.splitting.degrees(), [0, -1, -2]);
        assert!(report.stable);
        assert!(report.confirmed);
        let single = generic_splitting(&canonical(), 1, &mut rng).unwrap();
        assert!(!single.confirmed);
    }
}
