//! Exact computation of subpowers, the numbers of surjections from an
//! `m`-set onto an `n`-set, together with the number families that are
//! expressed through them: Stirling set numbers, subfactorials, Bernoulli,
//! Fubini and Worpitzky numbers, and harmonic-logarithm coefficients.
//!
//! Integer and rational results are exact (`BigInt` / `BigRational`).
//! Floating point only appears in [`analytic`], where the exponent is
//! allowed to be real or complex.
//!
//! Two conventions for `n^{0}` coexist and are kept apart:
//! the kernels in [`kernels`] use the combinatorial value `δ(0, n)`, while
//! [`analytic`] drops the `0^z` term and gets `(-1)^(n+1)` for `n >= 1`.

pub mod analytic;
pub mod error;
pub mod families;
pub mod finitediff;
pub mod kernels;
pub mod oeis;
pub mod rational;
pub mod transforms;

pub use error::{Error, Result};
pub use kernels::{
    binomial, factorial, stirling_set, subfactorial, subpower, subpower_diagonal, subpower_table,
    DiagonalOffset, SubpowerMethod, SubpowerTable,
};
pub use rational::ExactRational;
