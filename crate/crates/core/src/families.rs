//! Number families expressed through subpowers: Bernoulli, Fubini and
//! Worpitzky numbers, sums of powers, a handful of closed-form identities,
//! and the bounded search for `x^{m} + y^{m} = z^{m}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::finitediff::{binomial_rational, BasisPolynomial};
use crate::kernels::{binomial, binomial_row, exact_div, subpower, subpower_table, SubpowerMethod};
use crate::rational::{int, is_integer, ratio, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliMethod {
    /// Solve `Σ_{k=0}^{m} C(m+1, k) B_k = m + 1` for `B_m`, step by step.
    Recurrence,
    /// `B_m = Σ_{n=0}^{m} (-1)^(m-n) n^{m} / (n + 1)`.
    Explicit,
}

/// Bernoulli numbers `B_0..=B_upto` with the convention `B_1 = +1/2`.
///
/// This is the sign for which `Σ C(m+1, k) B_k = m + 1` holds and for which
/// the power-sum formula sums `1^m + ... + n^m` (not `0^m + ... + (n-1)^m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliCache {
    values: Vec<ExactRational>,
}

impl BernoulliCache {
    pub fn get(&self, k: usize) -> &ExactRational {
        &self.values[k]
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn upto(&self) -> usize {
        self.values.len() - 1
    }
}

pub fn bernoulli(upto: usize, method: BernoulliMethod) -> BernoulliCache {
    let values = match method {
        BernoulliMethod::Recurrence => {
            let mut values: Vec<ExactRational> = Vec::with_capacity(upto + 1);
            for m in 0..=upto {
                let row = binomial_row(m + 1);
                let known: ExactRational = values
                    .iter()
                    .zip(&row)
                    .map(|(b, c)| b * int(c.clone()))
                    .sum();
                // C(m+1, m) = m + 1
                values.push((int(m + 1) - known) / int(m + 1));
            }
            values
        }
        BernoulliMethod::Explicit => {
            let table = subpower_table(upto);
            (0..=upto)
                .map(|m| {
                    table
                        .row(m)
                        .iter()
                        .enumerate()
                        .map(|(n, s)| {
                            let term = ratio(s.clone(), n + 1);
                            if (m - n) % 2 == 0 {
                                term
                            } else {
                                -term
                            }
                        })
                        .sum()
                })
                .collect()
        }
    };
    BernoulliCache { values }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerSumMethod {
    /// `1^m + 2^m + ... + n^m` term by term.
    Direct,
    /// `Σ_p p^{m} C(n+1, p+1)`.
    Binomial,
    /// The Bernoulli-number polynomial in `n`.
    Bernoulli,
}

/// `S_m(n) = 1^m + 2^m + ... + n^m`.
pub fn sum_powers(m: u64, n: u64, method: PowerSumMethod) -> Result<BigInt> {
    match method {
        PowerSumMethod::Direct => Ok((1..=n)
            .map(|k| num_traits::pow(BigInt::from(k), m as usize))
            .sum()),
        PowerSumMethod::Binomial => {
            let table = subpower_table(m as usize);
            // Σ_{k=1}^{n} C(k, p) = C(n+1, p+1) - C(0, p); the correction only
            // matters for p = 0, where 0^{m} is non-zero only when m = 0.
            Ok(table
                .row(m as usize)
                .iter()
                .enumerate()
                .map(|(p, s)| {
                    let mut count = binomial(n + 1, p as u64 + 1);
                    if p == 0 {
                        count -= 1;
                    }
                    s * count
                })
                .sum())
        }
        PowerSumMethod::Bernoulli => {
            let value = crate::finitediff::evaluate(&faulhaber_polynomial(m as usize), &int(n));
            if !is_integer(&value) {
                return Err(Error::InexactDivision("sum_powers (bernoulli form)".into()));
            }
            Ok(value.numer().clone())
        }
    }
}

/// Monomial-basis polynomial `P` with `P(n) = S_m(n)`:
/// coefficient of `n^(m+1-k)` is `C(m+1, k) B_k / (m+1)`.
pub fn faulhaber_polynomial(m: usize) -> BasisPolynomial {
    let b = bernoulli(m, BernoulliMethod::Recurrence);
    let row = binomial_row(m + 1);
    let mut coefficients = vec![ExactRational::zero(); m + 2];
    for k in 0..=m {
        coefficients[m + 1 - k] = int(row[k].clone()) * b.get(k) / int(m + 1);
    }
    BasisPolynomial::monomial(coefficients)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FubiniMethod {
    /// Row sum `Σ_n n^{m}` of the subpower triangle.
    RowSum,
    /// `F(m+1) = Σ_{k=0}^{m} C(m+1, k) F(k)`, `F(0) = 1`.
    Recurrence,
}

/// Fubini (ordered Bell) number `F(m)`.
pub fn fubini(m: usize, method: FubiniMethod) -> BigInt {
    fubini_sequence(m, method).pop().expect("non-empty")
}

/// `F(0..=upto)`.
pub fn fubini_sequence(upto: usize, method: FubiniMethod) -> Vec<BigInt> {
    match method {
        FubiniMethod::RowSum => {
            let table = subpower_table(upto);
            table.rows().map(|row| row.iter().sum()).collect()
        }
        FubiniMethod::Recurrence => {
            let mut values = vec![BigInt::one()];
            for m in 0..upto {
                let row = binomial_row(m + 1);
                let next = values.iter().zip(&row).map(|(f, c)| f * c).sum();
                values.push(next);
            }
            values
        }
    }
}

/// Partial sum of `(1/2) Σ_{n>=0} n^m / 2^n`, truncated once a certified
/// tail bound falls below `tol`. The `n = 0` term uses `0^0 = 1`.
///
/// Past `N = max(4m, 32)` consecutive terms shrink by a ratio of at most
/// `(1 + 1/N)^m / 2 <= e^(1/4) / 2 < 3/4`, so the tail after the last
/// included term `t_N` is at most `t_N * 3`, halved by the leading factor.
pub fn fubini_series(m: usize, tol: &ExactRational) -> Result<ExactRational> {
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let start = (4 * m).max(32);
    let half = ratio(1, 2);
    let mut sum = ExactRational::zero();
    let mut n = 0usize;
    loop {
        let term = ratio(num_traits::pow(BigInt::from(n), m), num_traits::pow(BigInt::from(2), n));
        sum += &term;
        if n >= start {
            // Tail Σ_{j>n} t_j <= t_n (3/4) / (1 - 3/4) = 3 t_n.
            let bound = &half * &term * int(3);
            if &bound < tol {
                return Ok(sum * half);
            }
        }
        n += 1;
    }
}

/// `Σ_{n>=1} n^m x^n` as the exact rational
/// `(1/(1-x)) Σ_{k=0}^{m} k^{m} (x/(1-x))^k`, for `0 < x < 1`.
///
/// The series starts at `n = 1` for every `m`, `m = 0` included, so the
/// `k = 0` term `0^{0} / (1-x) = 1` (the `n = 0` term `0^0 x^0`) is removed
/// when `m = 0`.
pub fn power_series_value(m: usize, x: &ExactRational) -> Result<ExactRational> {
    if !x.is_positive() || x >= &int(1) {
        return Err(Error::invalid("x must lie strictly between 0 and 1"));
    }
    let one_minus = int(1) - x;
    let u = x / &one_minus;
    let table = subpower_table(m);
    let mut u_pow = ExactRational::one();
    let mut total = ExactRational::zero();
    for s in table.row(m) {
        total += int(s.clone()) * &u_pow;
        u_pow *= &u;
    }
    let mut value = total / one_minus;
    if m == 0 {
        value -= int(1);
    }
    Ok(value)
}

/// Worpitzky number `W_{m,n} = (n+1)^{m+1} / (n+1)`.
pub fn worpitzky(m: u64, n: u64) -> Result<BigInt> {
    exact_div(
        &subpower(n + 1, m + 1, SubpowerMethod::Recurrence),
        &BigInt::from(n + 1),
        "worpitzky",
    )
}

/// `W_{m,n} = n^{m} + (n+1)^{m}`.
pub fn worpitzky_by_sum(m: u64, n: u64) -> BigInt {
    subpower(n, m, SubpowerMethod::Recurrence) + subpower(n + 1, m, SubpowerMethod::Recurrence)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `Σ_{n=0}^{m} (-1)^(m-n) n^{m} - 1`.
    AltRowSum,
    /// `x^m - Σ_{n=0}^{m} (-1)^(m-n) W_{m,n} C(x+n, n)`.
    ShiftedBinomialAt,
    /// `Σ_{n=1}^{m} (-1)^(n+1) n^{m} / n - δ(1, m)`.
    DividedRowDelta,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Self::AltRowSum, Self::ShiftedBinomialAt, Self::DividedRowDelta];

    pub fn name(self) -> &'static str {
        match self {
            Self::AltRowSum => "alt_row_sum",
            Self::ShiftedBinomialAt => "shifted_binomial_at",
            Self::DividedRowDelta => "divided_row_delta",
        }
    }
}

/// Left-minus-right residual of the named identity; exactly zero when it
/// holds. `x` is required for [`Identity::ShiftedBinomialAt`] and ignored otherwise.
pub fn check_identity(identity: Identity, m: usize, x: Option<&ExactRational>) -> Result<ExactRational> {
    let table = subpower_table(m + 1);
    let row = table.row(m);
    let signed = |v: ExactRational, k: usize| if k.is_multiple_of(2) { v } else { -v };
    match identity {
        Identity::AltRowSum => {
            let sum: ExactRational = row
                .iter()
                .enumerate()
                .map(|(n, s)| signed(int(s.clone()), m - n))
                .sum();
            Ok(sum - int(1))
        }
        Identity::DividedRowDelta => {
            let sum: ExactRational = row
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, s)| signed(ratio(s.clone(), n), n + 1))
                .sum();
            Ok(sum - int(u8::from(m == 1)))
        }
        Identity::ShiftedBinomialAt => {
            let x = x.ok_or_else(|| Error::invalid("shifted_binomial_at requires a value for x"))?;
            let next = table.row(m + 1);
            let mut rhs = ExactRational::zero();
            for n in 0..=m {
                let w = ratio(next[n + 1].clone(), n + 1);
                rhs += signed(w * binomial_rational(&(x + int(n)), n), m - n);
            }
            Ok(num_traits::pow(x.clone(), m) - rhs)
        }
    }
}

/// `Σ_{n=0}^{m} (-1)^(m-n) n^{m} C(x+n-1, n)`, which equals `x^m`.
pub fn rising_binomial_form(m: usize, x: &ExactRational) -> ExactRational {
    let table = subpower_table(m);
    table
        .row(m)
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let term = int(s.clone()) * binomial_rational(&(x + int(n) - int(1)), n);
            if (m - n).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// A solution of `x^{m} + y^{m} = z^{m}` with `x, y, z` in `1..=m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FermatSolution {
    pub m: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// All solutions for exponent `m`, in lexicographic `(x, y, z)` order.
pub fn fermat_search(m: usize) -> Result<Vec<FermatSolution>> {
    if m == 0 {
        return Err(Error::invalid("fermat search needs m >= 1"));
    }
    let table = subpower_table(m);
    Ok(fermat_search_row(m, table.row(m)))
}

/// Same search, reusing row `m` of an existing table.
pub fn fermat_search_row(m: usize, row: &[BigInt]) -> Vec<FermatSolution> {
    let mut out = Vec::new();
    for x in 1..=m {
        for y in 1..=m {
            let sum = &row[x] + &row[y];
            for z in 1..=m {
                if row[z] == sum {
                    out.push(FermatSolution { m, x, y, z });
                }
            }
        }
    }
    out
}
