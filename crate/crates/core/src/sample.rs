//! Deterministic seeded sampling helpers.
//!
//! Every randomized computation in the crate threads an explicit RNG, so a
//! (command, parameters, seed) triple reproduces byte-identical results.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::ExactMatrix;
use crate::poly::{rat_int, LinearForm, Rational};

/// The crate-wide deterministic generator.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer rationals in `[-bound, bound]`.
pub fn random_rationals<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| rat_int(rng.gen_range(-bound..=bound))).collect()
}

/// A not-all-zero integer vector in `[-bound, bound]^len`.
pub fn random_nonzero_vector<R: Rng + ?Sized>(
    rng: &mut R,
    len: usize,
    bound: i64,
) -> Vec<Rational> {
    loop {
        let v = random_rationals(rng, len, bound);
        if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return v;
        }
    }
}

/// A nonzero integer linear form in `nvars` variables.
pub fn random_linear_form<R: Rng + ?Sized>(rng: &mut R, nvars: usize, bound: i64) -> LinearForm {
    loop {
        if let Ok(l) = LinearForm::from_coeffs(&random_rationals(rng, nvars, bound)) {
            return l;
        }
    }
}

/// `count` linear forms whose coefficient matrix has full rank `count`,
/// resampled as a batch up to `attempts` times.
pub fn random_independent_forms<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    count: usize,
    bound: i64,
    attempts: usize,
) -> Option<Vec<LinearForm>> {
    for _ in 0..attempts {
        let forms: Vec<LinearForm> = (0..count)
            .map(|_| random_linear_form(rng, nvars, bound))
            .collect();
        let m = ExactMatrix::from_rational_rows(forms.iter().map(LinearForm::coeffs).collect());
        if m.rank_exact().unwrap() == count.min(nvars) && count <= nvars {
            return Some(forms);
        }
    }
    None
}

/// `count` pairwise non-proportional linear forms.
pub fn random_pairwise_independent_forms<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    count: usize,
    bound: i64,
    attempts: usize,
) -> Option<Vec<LinearForm>> {
    'outer: for _ in 0..attempts {
        let forms: Vec<LinearForm> = (0..count)
            .map(|_| random_linear_form(rng, nvars, bound))
            .collect();
        for i in 0..count {
            for j in i + 1..count {
                let m = ExactMatrix::from_rational_rows(alloc::vec![
                    forms[i].coeffs(),
                    forms[j].coeffs()
                ]);
                if m.rank_exact().unwrap() < 2 {
                    continue 'outer;
                }
            }
        }
        return Some(forms);
    }
    None
}
