//! Exact integer kernels: binomials, factorials, subpowers, Stirling set
//! numbers and subfactorials.
//!
//! Everything here uses the combinatorial convention `n^{0} = δ(0, n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // C(n, i + 1) = C(n, i) * (n - i) / (i + 1), always exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// One row `C(n, 0..=n)` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Algorithm used by [`subpower`]. All three produce identical values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubpowerMethod {
    /// Inclusion-exclusion sum over `k = 0..=n`, with `0^0 = 1`.
    Sum,
    /// `n^{m} = n (n^{m-1} + (n-1)^{m-1})` from the seeds `0^{0} = 1`.
    Recurrence,
    /// `n!` times the Stirling set number, the latter from its own triangle
    /// recurrence `{j i} = i {j-1 i} + {j-1 i-1}`.
    Stirling,
}

impl SubpowerMethod {
    pub const ALL: [SubpowerMethod; 3] = [Self::Sum, Self::Recurrence, Self::Stirling];
}

/// The subpower `n^{m}`: the number of surjections from an `m`-set onto an
/// `n`-set.
pub fn subpower(n: u64, m: u64, method: SubpowerMethod) -> BigInt {
    match method {
        SubpowerMethod::Sum => subpower_by_sum(n, m),
        SubpowerMethod::Recurrence => subpower_by_recurrence(n, m),
        SubpowerMethod::Stirling => subpower_by_stirling(n, m),
    }
}

fn subpower_by_sum(n: u64, m: u64) -> BigInt {
    let binom = binomial_row(n as usize);
    let mut total = BigInt::zero();
    for (k, c) in binom.iter().enumerate() {
        // BigInt::pow gives 0^0 = 1, the term that makes n = 0 work.
        let term = c * num_traits::pow(BigInt::from(k), m as usize);
        if (n as usize - k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subpower_by_recurrence(n: u64, m: u64) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    let width = n as usize + 1;
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::one();
    for _ in 1..=m {
        for i in (1..width).rev() {
            let lower = row[i - 1].clone();
            row[i] = (&row[i] + lower) * i;
        }
        row[0] = BigInt::zero();
    }
    row.swap_remove(n as usize)
}

fn subpower_by_stirling(n: u64, m: u64) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    let width = n as usize + 1;
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::one();
    for _ in 1..=m {
        for i in (1..width).rev() {
            let lower = row[i - 1].clone();
            row[i] = &row[i] * i + lower;
        }
        row[0] = BigInt::zero();
    }
    factorial(n) * &row[n as usize]
}

/// Triangle of `n^{m}` for `0 <= n <= m <= max_m`, filled by the
/// recurrence. Entries with `n > m` are zero and are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubpowerTable {
    rows: Vec<Vec<BigInt>>,
    zero: BigInt,
}

impl SubpowerTable {
    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// `n^{m}`; zero for `n > m`. Panics if `m > max_m`.
    pub fn entry(&self, m: usize, n: usize) -> &BigInt {
        self.rows[m].get(n).unwrap_or(&self.zero)
    }

    /// Row `m` as `n = 0..=m`.
    pub fn row(&self, m: usize) -> &[BigInt] {
        &self.rows[m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// `n^{m}` for a fixed base `n` and `m = 0..=max_m`.
    pub fn column(&self, n: usize) -> Vec<BigInt> {
        (0..=self.max_m()).map(|m| self.entry(m, n).clone()).collect()
    }
}

pub fn subpower_table(max_m: usize) -> SubpowerTable {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m + 1);
    rows.push(vec![BigInt::one()]);
    for m in 1..=max_m {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::zero());
        for n in 1..=m {
            let same = prev.get(n).cloned().unwrap_or_default();
            row.push((same + &prev[n - 1]) * n);
        }
        rows.push(row);
    }
    SubpowerTable {
        rows,
        zero: BigInt::zero(),
    }
}

/// Stirling set number `{m n}`, obtained as `n^{m} / n!`.
pub fn stirling_set(m: u64, n: u64) -> Result<BigInt> {
    exact_div(
        &subpower(n, m, SubpowerMethod::Recurrence),
        &factorial(n),
        "stirling_set",
    )
}

/// Subfactorial `!n`, the number of derangements of `n` objects.
pub fn subfactorial(n: u64) -> BigInt {
    let binom = binomial_row(n as usize);
    let mut total = BigInt::zero();
    let mut fact = BigInt::one();
    for (k, c) in binom.iter().enumerate() {
        if k > 0 {
            fact *= k;
        }
        let term = c * &fact;
        if (n as usize - k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalOffset {
    Zero,
    One,
    Two,
}

impl DiagonalOffset {
    pub fn value(self) -> u64 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Two => 2,
        }
    }
}

impl TryFrom<u64> for DiagonalOffset {
    type Error = Error;

    fn try_from(v: u64) -> Result<Self> {
        match v {
            0 => Ok(Self::Zero),
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            _ => Err(Error::invalid(format!("diagonal offset must be 0, 1 or 2, got {v}"))),
        }
    }
}

/// `n^{n + offset}` from its closed form:
/// `n!`, `(n+1)! n / 2` and `(n+2)! n (3n+1) / 24`.
pub fn subpower_diagonal(n: u64, offset: DiagonalOffset) -> BigInt {
    match offset {
        DiagonalOffset::Zero => factorial(n),
        DiagonalOffset::One => factorial(n + 1) * n / 2u32,
        DiagonalOffset::Two => factorial(n + 2) * n * (3 * n + 1) / 24u32,
    }
}

/// Divides, failing if the quotient is not an integer.
pub(crate) fn exact_div(num: &BigInt, den: &BigInt, context: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision(context.to_string()))
    }
}
