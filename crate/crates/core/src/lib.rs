//! Exact-arithmetic toolkit for osculating spaces of parametrized projective
//! varieties.
//!
//! The crate builds rational parametrizations of Veronese and Segre
//! embeddings, rational normal curves, linear projections and hyperplane
//! sections, and computes their higher osculating spaces over ℚ with
//! arbitrary-precision arithmetic. Dimension statements (Laplace equations,
//! common points of osculating hyperplanes, splitting types of syzygy
//! bundles on lines) can be *certified* by symbolic rank computations, not
//! merely sampled at random points.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads. The crate is `no_std`
//! (it only needs `alloc`); IO, CLI and report formats live in the
//! companion binary crate.

#![no_std]

extern crate alloc;

pub mod linalg;
pub mod osculation;
pub mod polarity;
pub mod poly;
pub mod sample;
pub mod syzygy;
pub mod variety;

mod reduce;

pub use linalg::{ExactMatrix, KernelBasis};
pub use poly::{LinearForm, MPoly, Monomial, Rational};
pub use variety::{ParamVariety, ProjPoint};
