//! Binomial transform and its inverse over finite exact sequences.
//!
//! `b_n = Σ C(n,k) a_k` and `a_n = Σ (-1)^(n-k) C(n,k) b_k` are mutually
//! inverse; transforms keep the length of their input.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernels::binomial_row;

/// Values a sequence may hold: exact integers or exact rationals.
pub trait ExactValue: Clone + Zero + Add<Output = Self> + Sub<Output = Self> {
    fn scale(&self, c: &BigInt) -> Self;
}

impl ExactValue for BigInt {
    fn scale(&self, c: &BigInt) -> Self {
        self * c
    }
}

impl ExactValue for BigRational {
    fn scale(&self, c: &BigInt) -> Self {
        self * BigRational::from_integer(c.clone())
    }
}

/// A finite sequence whose first element has index `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSequence<T = BigInt> {
    pub offset: usize,
    pub values: Vec<T>,
}

impl<T> IntSequence<T> {
    pub fn new(offset: usize, values: Vec<T>) -> Self {
        IntSequence { offset, values }
    }

    /// Sequence starting at index 0.
    pub fn from_zero(values: Vec<T>) -> Self {
        IntSequence { offset: 0, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<T, V: Into<T>> FromIterator<V> for IntSequence<T> {
    fn from_iter<I: IntoIterator<Item = V>>(iter: I) -> Self {
        IntSequence::from_zero(iter.into_iter().map(Into::into).collect())
    }
}

fn check_input<T>(seq: &IntSequence<T>) -> Result<()> {
    if seq.offset != 0 {
        return Err(Error::NonzeroOffset(seq.offset));
    }
    if seq.values.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(())
}

fn transform<T: ExactValue>(seq: &IntSequence<T>, alternating: bool) -> Result<IntSequence<T>> {
    check_input(seq)?;
    let values = (0..seq.values.len())
        .map(|n| {
            binomial_row(n)
                .iter()
                .zip(&seq.values)
                .enumerate()
                .fold(T::zero(), |acc, (k, (c, a))| {
                    let term = a.scale(c);
                    if alternating && (n - k) % 2 == 1 {
                        acc - term
                    } else {
                        acc + term
                    }
                })
        })
        .collect();
    Ok(IntSequence::new(seq.offset, values))
}

/// `b_n = Σ_{k=0}^{n} C(n,k) a_k`.
pub fn binomial_transform<T: ExactValue>(a: &IntSequence<T>) -> Result<IntSequence<T>> {
    transform(a, false)
}

/// `a_n = Σ_{k=0}^{n} (-1)^(n-k) C(n,k) b_k`.
pub fn inverse_binomial_transform<T: ExactValue>(b: &IntSequence<T>) -> Result<IntSequence<T>> {
    transform(b, true)
}
