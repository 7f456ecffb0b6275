//! Subpowers with real, complex and negative integer exponents.
//!
//! Here the `0^z` term of the inclusion-exclusion sum is dropped:
//!
//! ```text
//! n^{z} = Σ_{k=1}^{n} (-1)^(n-k) C(n,k) k^z
//! ```
//!
//! which only changes `n^{0}`, from `δ(0, n)` to `(-1)^(n+1)` for `n >= 1`
//! (and `0^{z} = 0` as an empty sum).

mod dd;
mod quadrature;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernels::{binomial_row, factorial};
use crate::rational::{int, ratio, ExactRational};
use dd::DoubleDouble;
use quadrature::GaussLegendre;

/// `k^z` as a pair of double-doubles (real, imaginary).
///
/// Integer exponents use exact double-double powers, so for small bases the
/// integer-exponent terms carry no rounding at all. Other exponents go
/// through `exp(z ln k)` in double precision.
fn power_term(k: u64, z: Complex64) -> (DoubleDouble, DoubleDouble) {
    if z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() <= 4096.0 {
        let p = DoubleDouble::from_f64(k as f64).powi(z.re.abs() as u32);
        let p = if z.re < 0.0 { p.recip() } else { p };
        return (p, DoubleDouble::ZERO);
    }
    let ln_k = (k as f64).ln();
    let magnitude = (z.re * ln_k).exp();
    if z.im == 0.0 {
        return (DoubleDouble::from_f64(magnitude), DoubleDouble::ZERO);
    }
    let (sin, cos) = (z.im * ln_k).sin_cos();
    (
        DoubleDouble::from_f64(magnitude * cos),
        DoubleDouble::from_f64(magnitude * sin),
    )
}

/// `n^{z}` for complex `z`.
///
/// Terms are formed and accumulated in double-double arithmetic in
/// increasing `k`. The alternating sum cancels roughly `n` bits, so the
/// result is only claimed accurate to about `1e-9` relative for `n <= 20`.
pub fn subpower_complex(n: u64, z: Complex64) -> Complex64 {
    let binom = binomial_row(n as usize);
    let mut re = DoubleDouble::ZERO;
    let mut im = DoubleDouble::ZERO;
    for k in 1..=n {
        let c = DoubleDouble::from_bigint(&binom[k as usize]);
        let (pr, pi) = power_term(k, z);
        let (tr, ti) = (c * pr, c * pi);
        if (n - k).is_multiple_of(2) {
            re = re + tr;
            im = im + ti;
        } else {
            re = re - tr;
            im = im - ti;
        }
    }
    Complex64::new(re.to_f64(), im.to_f64())
}

/// [`subpower_complex`] restricted to real exponents.
pub fn subpower_real(n: u64, z: f64) -> f64 {
    subpower_complex(n, Complex64::new(z, 0.0)).re
}

/// Exact `n^{-m} = Σ_{k=1}^{n} (-1)^(n-k) C(n,k) / k^m` for `m >= 1`.
pub fn subpower_negative(n: u64, m: u32) -> Result<ExactRational> {
    if m == 0 {
        return Err(Error::invalid(
            "exponent 0 belongs to subpower_complex (analytic convention)",
        ));
    }
    let binom = binomial_row(n as usize);
    let mut total = ExactRational::zero();
    for k in 1..=n as usize {
        let term = ratio(binom[k].clone(), num_traits::pow(BigInt::from(k), m as usize));
        if (n as usize - k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> ExactRational {
    (1..=n).map(|k| ratio(1, k)).sum()
}

/// Coefficients `c_n^(0..=m)` of the `n`-th antiderivative of `ln^m x`:
///
/// ```text
/// (x^n / n!) Σ_k (-1)^k c_n^(k) m^(falling k) ln^(m-k) x
/// ```
///
/// with `c_n^(0) = 1` and `c_n^(k) = (-1)^(n-1) n^{-k}` for `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicCoefficients {
    pub n: u64,
    pub values: Vec<ExactRational>,
}

pub fn harmonic_log_coefficients(n: u64, m: u32) -> Result<HarmonicCoefficients> {
    if n == 0 {
        return Err(Error::invalid("harmonic-logarithm coefficients need n >= 1"));
    }
    let sign = if n % 2 == 1 { int(1) } else { int(-1) };
    let mut values = vec![int(1)];
    for k in 1..=m {
        values.push(&sign * subpower_negative(n, k)?);
    }
    Ok(HarmonicCoefficients { n, values })
}

/// Literature value printed for `c_3^(3)` in the worked expansion of the
/// third antiderivative of `ln^m x`. The exact sum `3 - 3/8 + 1/27` is
/// `575/216`.
pub const LITERATURE_C3_3: (i64, i64) = (576, 216);

/// A computed value that differs from a published one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub quantity: &'static str,
    pub computed: ExactRational,
    pub published: ExactRational,
}

/// Known disagreements between exact computation and printed values.
pub fn known_deviations() -> Vec<Deviation> {
    let computed = harmonic_log_coefficients(3, 3).expect("n >= 1").values[3].clone();
    let published = ExactRational::new(BigInt::from(LITERATURE_C3_3.0), BigInt::from(LITERATURE_C3_3.1));
    vec![Deviation {
        quantity: "c_3^(3)",
        computed,
        published,
    }]
}

/// `(-1)^(n-1) n / m! ∫_0^1 (1-x)^(n-1) ln(1/x)^m dx`, which equals `n^{-m}`.
///
/// With `t = -ln x` the integrand becomes `(1 - e^-t)^(n-1) t^m e^-t` on
/// `[0, ∞)`. It is cut at the first integer `T` with
/// `n (T+1)^m e^-T < tol / 2`, which bounds the dropped tail of the scaled
/// integral, and `[0, T]` is covered by 20-point Gauss-Legendre panels
/// whose count doubles until two successive results differ by less than
/// `tol / 4`.
pub fn integral_check(n: u64, m: u32, tol: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("integral representation needs n >= 1"));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let scale = crate::rational::to_f64(&ratio(BigInt::from(n), factorial(m as u64)));
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };

    let tail = |t: f64| n as f64 * (t + 1.0).powi(m as i32) * (-t).exp();
    let mut cutoff = 1.0;
    while tail(cutoff) >= tol / 2.0 {
        cutoff += 1.0;
    }

    let integrand = |t: f64| (-(-t).exp_m1()).powi(n as i32 - 1) * t.powi(m as i32) * (-t).exp();
    let rule = GaussLegendre::new(20);
    let mut panels = 4;
    let mut previous = rule.integrate_panels(&integrand, 0.0, cutoff, panels) * scale;
    loop {
        panels *= 2;
        let current = rule.integrate_panels(&integrand, 0.0, cutoff, panels) * scale;
        if (current - previous).abs() < tol / 4.0 || panels >= 1 << 20 {
            return Ok(sign * current);
        }
        previous = current;
    }
}

/// One point of the curve `z -> n^{z}` for real `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSample {
    pub n: u64,
    pub z: f64,
    pub value: f64,
}

/// Grid `z_min + j * step` for `j = 0, 1, ...` while not past `z_max`.
pub fn grid(z_min: f64, z_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(z_min.is_finite() && z_max.is_finite() && step.is_finite()) {
        return Err(Error::invalid("grid bounds and step must be finite"));
    }
    if z_min > z_max {
        return Err(Error::invalid("z_min must not exceed z_max"));
    }
    if step <= 0.0 {
        return Err(Error::invalid("step must be positive"));
    }
    // A little slack so that an endpoint hit up to rounding is kept.
    let count = ((z_max - z_min) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|j| z_min + j as f64 * step).collect())
}

/// Samples of `n^{z}` for `n = 1..=n_max` on the grid, ordered by `z` and
/// then by `n`.
pub fn curve_samples(n_max: u64, z_min: f64, z_max: f64, step: f64) -> Result<Vec<CurveSample>> {
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    let zs = grid(z_min, z_max, step)?;
    Ok(zs
        .iter()
        .flat_map(|&z| {
            (1..=n_max).map(move |n| CurveSample {
                n,
                z,
                value: subpower_real(n, z),
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{subpower, SubpowerMethod};
    use crate::rational::to_f64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_examples() {
        assert_eq!(subpower_complex(2, c(3.0, 0.0)), c(6.0, 0.0));
        for z in [c(0.3, 0.0), c(-2.0, 1.5), c(7.0, 0.0)] {
            assert!((subpower_complex(1, z) - c(1.0, 0.0)).norm() < 1e-15);
        }
        assert_eq!(subpower_complex(3, c(0.0, 0.0)), c(1.0, 0.0));
        assert_eq!(subpower_complex(2, c(0.0, 0.0)), c(-1.0, 0.0));
        assert_eq!(subpower_complex(0, c(2.5, 1.0)), c(0.0, 0.0));
    }

    #[test]
    fn integer_exponents_are_exact_for_small_n() {
        for n in 1..=15u64 {
            for m in 1..=15u32 {
                let exact = to_f64(&int(subpower(n, m as u64, SubpowerMethod::Sum)));
                assert_eq!(subpower_real(n, m as f64), exact, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn negative_examples() {
        assert_eq!(subpower_negative(3, 1).unwrap(), ratio(11, 6));
        for m in 1..6 {
            assert_eq!(subpower_negative(1, m).unwrap(), int(1));
        }
        assert_eq!(subpower_negative(3, 2).unwrap(), ratio(85, 36));
        assert_eq!(subpower_negative(3, 3).unwrap(), ratio(575, 216));
        assert!(subpower_negative(3, 0).is_err());
    }

    #[test]
    fn negative_exponents_in_floating_point() {
        for n in 1..=12 {
            for m in 1..=4u32 {
                let exact = to_f64(&subpower_negative(n, m).unwrap());
                let approx = subpower_real(n, -(m as f64));
                assert!((approx - exact).abs() <= 1e-13 * exact.abs(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(4), ratio(25, 12));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(harmonic_log_coefficients(3, 1).unwrap().values, vec![int(1), ratio(11, 6)]);
        assert_eq!(
            harmonic_log_coefficients(3, 2).unwrap().values,
            vec![int(1), ratio(11, 6), ratio(85, 36)]
        );
        assert_eq!(harmonic_log_coefficients(1, 1).unwrap().values, vec![int(1), int(1)]);
        assert!(harmonic_log_coefficients(0, 2).is_err());
        let h = harmonic_log_coefficients(7, 0).unwrap();
        assert_eq!(h.values, vec![int(1)]);
        assert_eq!(h.n, 7);
    }

    #[test]
    fn deviation_report() {
        let d = &known_deviations()[0];
        assert_eq!(d.computed, ratio(575, 216));
        assert_eq!(d.published, ratio(576, 216));
        assert_ne!(d.computed, d.published);
    }

    #[test]
    fn integral_examples() {
        let tol = 1e-8;
        assert!((integral_check(1, 1, tol).unwrap() - 1.0).abs() < tol);
        assert!((integral_check(2, 1, tol).unwrap() + 1.5).abs() < tol);
        assert!((integral_check(3, 2, tol).unwrap() - 85.0 / 36.0).abs() < tol);
        assert!(integral_check(0, 1, tol).is_err());
        assert!(integral_check(1, 1, 0.0).is_err());
    }

    #[test]
    fn grid_and_samples() {
        assert_eq!(grid(0.0, 2.0, 0.5).unwrap(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
        assert_eq!(grid(0.0, 5.0, 0.1).unwrap().len(), 51);
        assert!(grid(1.0, 0.0, 0.5).is_err());
        assert!(grid(0.0, 1.0, 0.0).is_err());
        assert!(grid(0.0, 1.0, -1.0).is_err());

        let ones = curve_samples(1, 0.0, 2.0, 0.5).unwrap();
        assert_eq!(ones.len(), 5);
        assert!(ones.iter().all(|s| s.n == 1 && s.value == 1.0));

        let single = curve_samples(2, 3.0, 3.0, 1.0).unwrap();
        assert_eq!(single.last().unwrap().value, 6.0);
        let diag = curve_samples(5, 5.0, 5.0, 1.0).unwrap();
        assert_eq!(diag.len(), 5);
        assert_eq!(diag[4].n, 5);
        assert_eq!(diag[4].value, 120.0);
        assert!(curve_samples(0, 0.0, 1.0, 0.5).is_err());
    }
}
