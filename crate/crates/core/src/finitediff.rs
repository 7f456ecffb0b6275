//! Exact single-variable polynomial calculus in three bases: monomials
//! `x^k`, falling factorials `x(x-1)...(x-k+1)` and normalized falling
//! factorials `C(x, k)`, plus the forward difference operator
//! `Δ_h f(x) = f(x + h) - f(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernels::{binomial, binomial_row, factorial, subpower_table};
use crate::rational::{format_rational, int, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    FallingFactorial,
    Binomial,
}

/// A polynomial as a dense coefficient list in one of the three bases.
/// `coefficients[k]` multiplies the degree-`k` basis element. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPolynomial {
    basis: Basis,
    coefficients: Vec<ExactRational>,
}

impl BasisPolynomial {
    pub fn new(basis: Basis, mut coefficients: Vec<ExactRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        BasisPolynomial { basis, coefficients }
    }

    pub fn monomial(coefficients: Vec<ExactRational>) -> Self {
        Self::new(Basis::Monomial, coefficients)
    }

    pub fn from_integers(basis: Basis, coefficients: &[i64]) -> Self {
        Self::new(basis, coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(basis: Basis) -> Self {
        Self::new(basis, Vec::new())
    }

    /// The degree-`k` element of `basis` (`x^k`, `x` falling `k`, or `C(x, k)`).
    pub fn basis_element(basis: Basis, k: usize) -> Self {
        let mut coefficients = vec![ExactRational::zero(); k + 1];
        coefficients[k] = ExactRational::one();
        Self::new(basis, coefficients)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> ExactRational {
        self.coefficients.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }
}

impl fmt::Display for BasisPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let element = |k: usize| match self.basis {
            Basis::Monomial => format!("x^{k}"),
            Basis::FallingFactorial => format!("x_({k})"),
            Basis::Binomial => format!("C(x,{k})"),
        };
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "{}*{}", format_rational(c), element(k))?;
            }
        }
        Ok(())
    }
}

/// Step size of a forward difference; never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSize(ExactRational);

impl StepSize {
    pub fn new(h: ExactRational) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::invalid("step size h must be non-zero"));
        }
        Ok(StepSize(h))
    }

    pub fn unit() -> Self {
        StepSize(ExactRational::one())
    }

    pub fn value(&self) -> &ExactRational {
        &self.0
    }
}

/// `x (x-1) ... (x-n+1)`; 1 for `n = 0`.
pub fn falling_factorial(x: &ExactRational, n: usize) -> ExactRational {
    (0..n).fold(ExactRational::one(), |acc, i| acc * (x - int(i)))
}

/// `C(x, n) = x^(falling n) / n!` for rational `x`.
pub fn binomial_rational(x: &ExactRational, n: usize) -> ExactRational {
    falling_factorial(x, n) / int(factorial(n as u64))
}

// Dense monomial-coefficient helpers.

fn add_into(acc: &mut Vec<ExactRational>, other: &[ExactRational], scale: &ExactRational) {
    if acc.len() < other.len() {
        acc.resize(other.len(), ExactRational::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b * scale;
    }
}

/// Monomial coefficients of `x (x-1) ... (x-n+1)`.
fn falling_monomials(n: usize) -> Vec<ExactRational> {
    let mut poly = vec![ExactRational::one()];
    for i in 0..n {
        // poly *= (x - i)
        let c = int(i);
        let mut next = vec![ExactRational::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * &c;
        }
        poly = next;
    }
    poly
}

fn to_monomial(p: &BasisPolynomial) -> Vec<ExactRational> {
    match p.basis {
        Basis::Monomial => p.coefficients.clone(),
        Basis::FallingFactorial | Basis::Binomial => {
            let mut out = Vec::new();
            for (n, c) in p.coefficients.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let scale = if p.basis == Basis::Binomial {
                    c / int(factorial(n as u64))
                } else {
                    c.clone()
                };
                add_into(&mut out, &falling_monomials(n), &scale);
            }
            out
        }
    }
}

/// Coefficients in the binomial basis: `x^m = Σ_n n^{m} C(x, n)`.
fn monomial_to_binomial(coefficients: &[ExactRational]) -> Vec<ExactRational> {
    let Some(degree) = coefficients.len().checked_sub(1) else {
        return Vec::new();
    };
    let table = subpower_table(degree);
    let mut out = vec![ExactRational::zero(); degree + 1];
    for (m, a) in coefficients.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (n, s) in table.row(m).iter().enumerate() {
            out[n] += a * int(s.clone());
        }
    }
    out
}

/// Re-expresses `p` in `target`, keeping it equal as a function.
///
/// Monomials go to the binomial basis through subpower coefficients and to
/// the falling basis through Stirling set numbers `n^{m} / n!`. The
/// reverse direction multiplies out the basis elements.
pub fn convert_basis(p: &BasisPolynomial, target: Basis) -> BasisPolynomial {
    if p.basis == target {
        return p.clone();
    }
    let n_factorial_scaled = |coefficients: Vec<ExactRational>, divide: bool| {
        coefficients
            .into_iter()
            .enumerate()
            .map(|(n, c)| {
                let f = int(factorial(n as u64));
                if divide {
                    c / f
                } else {
                    c * f
                }
            })
            .collect::<Vec<_>>()
    };
    let coefficients = match (p.basis, target) {
        (_, Basis::Monomial) => to_monomial(p),
        (Basis::Monomial, Basis::Binomial) => monomial_to_binomial(&p.coefficients),
        (Basis::Monomial, Basis::FallingFactorial) => {
            n_factorial_scaled(monomial_to_binomial(&p.coefficients), true)
        }
        // x^(falling n) = n! C(x, n)
        (Basis::FallingFactorial, Basis::Binomial) => n_factorial_scaled(p.coefficients.clone(), false),
        (Basis::Binomial, Basis::FallingFactorial) => n_factorial_scaled(p.coefficients.clone(), true),
        _ => unreachable!("same-basis conversion handled above"),
    };
    BasisPolynomial::new(target, coefficients)
}

/// `q(x) = p(x + a)`. Only defined for the monomial basis.
pub fn shift(p: &BasisPolynomial, a: &ExactRational) -> Result<BasisPolynomial> {
    if p.basis != Basis::Monomial {
        return Err(Error::invalid("shift requires a polynomial in the monomial basis"));
    }
    Ok(BasisPolynomial::monomial(shift_coefficients(&p.coefficients, a)))
}

fn shift_coefficients(coefficients: &[ExactRational], a: &ExactRational) -> Vec<ExactRational> {
    // q_j = Σ_{i >= j} p_i C(i, j) a^(i - j)
    let mut out = vec![ExactRational::zero(); coefficients.len()];
    for (i, p) in coefficients.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let row = binomial_row(i);
        let mut a_pow = ExactRational::one();
        for j in (0..=i).rev() {
            out[j] += p * int(row[j].clone()) * &a_pow;
            a_pow *= a;
        }
    }
    out
}

fn difference_by_iteration(coefficients: &[ExactRational], h: &ExactRational, n: usize) -> Vec<ExactRational> {
    let mut current = coefficients.to_vec();
    for _ in 0..n {
        let shifted = shift_coefficients(&current, h);
        current = shifted.into_iter().zip(&current).map(|(s, c)| s - c).collect();
    }
    BasisPolynomial::monomial(current).coefficients
}

fn difference_by_sum(coefficients: &[ExactRational], h: &ExactRational, n: usize) -> Vec<ExactRational> {
    // Δ_h^n f(x) = Σ_k (-1)^(n-k) C(n,k) f(x + kh)
    let mut out = Vec::new();
    for (k, c) in binomial_row(n).into_iter().enumerate() {
        let sign = if (n - k).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let shifted = shift_coefficients(coefficients, &(h * int(k)));
        add_into(&mut out, &shifted, &int(c * sign));
    }
    BasisPolynomial::monomial(out).coefficients
}

/// `Δ_h^n p`, returned in the basis of `p`.
///
/// Computed twice, by `n` rounds of shift-and-subtract and by the direct
/// alternating sum over `p(x + kh)`; panics if the two disagree.
pub fn forward_difference(p: &BasisPolynomial, h: &StepSize, n: usize) -> BasisPolynomial {
    let monomial = to_monomial(p);
    let iterated = difference_by_iteration(&monomial, h.value(), n);
    let direct = difference_by_sum(&monomial, h.value(), n);
    assert_eq!(
        iterated, direct,
        "forward difference: iteration and direct sum disagree for n = {n}"
    );
    convert_basis(&BasisPolynomial::monomial(iterated), p.basis)
}

/// `Δ_h^n x^m = Σ_{k=n}^{m} C(m,k) n^{k} h^k x^(m-k)`, in the monomial basis.
pub fn euler_difference_monomial(m: usize, n: usize, h: &ExactRational) -> Result<BasisPolynomial> {
    if h.is_zero() {
        return Err(Error::invalid("step size h must be non-zero"));
    }
    let mut coefficients = vec![ExactRational::zero(); m + 1];
    if n <= m {
        let table = subpower_table(m);
        let mut h_pow = num_traits::pow(h.clone(), n);
        for k in n..=m {
            let c = binomial(m as u64, k as u64) * table.entry(k, n);
            coefficients[m - k] = int(c) * &h_pow;
            h_pow *= h;
        }
    }
    Ok(BasisPolynomial::monomial(coefficients))
}

pub fn evaluate(p: &BasisPolynomial, x: &ExactRational) -> ExactRational {
    match p.basis {
        Basis::Monomial => p
            .coefficients
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c),
        Basis::FallingFactorial => p
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * falling_factorial(x, k))
            .sum(),
        Basis::Binomial => p
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * binomial_rational(x, k))
            .sum(),
    }
}
