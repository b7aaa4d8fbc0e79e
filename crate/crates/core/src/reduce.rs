//! Internal Gauss-Jordan reduction over the rationals.
//!
//! `rank_exact` uses fraction-free Bareiss elimination instead (see
//! `linalg`); this module is the plumbing behind kernel bases, span
//! membership and the canonical line parametrization, all of which want the
//! reduced echelon normal form.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::Rational;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column indices in increasing order.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Basis of `{v : Mv = 0}` in reduced echelon normal form: each vector's
/// first nonzero entry is 1 and the positions of those entries strictly
/// increase.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut work: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&work[r][f];
            }
            v
        })
        .collect();
    // Normalize the basis itself to reduced echelon form so the output is a
    // canonical function of the kernel subspace alone.
    rref(&mut basis);
    basis
}

/// Kernel of a single nonzero row, used for line parametrizations.
pub fn kernel_of_row(row: &[Rational]) -> Vec<Vec<Rational>> {
    kernel(&[row.to_vec()], row.len())
}
