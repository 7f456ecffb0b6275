//! Cross-module identities, checked exhaustively over small ranges or with
//! random inputs.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use subpower::analytic::{
    harmonic, harmonic_log_coefficients, integral_check, subpower_complex, subpower_negative,
};
use subpower::families::{
    faulhaber_polynomial, sum_powers, worpitzky, worpitzky_by_sum, PowerSumMethod,
};
use subpower::finitediff::{
    convert_basis, euler_difference_monomial, evaluate, forward_difference, Basis,
    BasisPolynomial, StepSize,
};
use subpower::rational::{int, ratio, to_f64, ExactRational};
use subpower::transforms::{binomial_transform, inverse_binomial_transform, IntSequence};
use subpower::{binomial, factorial, subfactorial, subpower, SubpowerMethod};

fn sp(n: u64, m: u64) -> BigInt {
    subpower(n, m, SubpowerMethod::Recurrence)
}

fn pow(b: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(b), e as usize)
}

#[test]
fn binomial_expansion_of_subpowers() {
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for m in 0..=12u64 {
                let rhs: BigInt = (0..=m).map(|k| binomial(m, k) * sp(a, k) * sp(b, m - k)).sum();
                assert_eq!(sp(a + b, m), rhs, "a={a} b={b} m={m}");
            }
        }
    }
}

#[test]
fn powers_and_factorials_from_sub_versions() {
    for n in 0..=12u64 {
        for m in 0..=12u64 {
            let rhs: BigInt = (0..=n).map(|k| binomial(n, k) * sp(k, m)).sum();
            assert_eq!(pow(n, m), rhs, "n={n} m={m}");
        }
        let rhs: BigInt = (0..=n).map(|k| binomial(n, k) * subfactorial(k)).sum();
        assert_eq!(factorial(n), rhs);
    }
}

#[test]
fn differences_of_zero_and_one() {
    let h = StepSize::unit();
    for m in 0..=10usize {
        let xm = BasisPolynomial::basis_element(Basis::Monomial, m);
        for n in 0..=10usize {
            let d = forward_difference(&xm, &h, n);
            assert_eq!(evaluate(&d, &int(0)), int(sp(n as u64, m as u64)), "m={m} n={n}");
            let w = worpitzky(m as u64, n as u64).unwrap();
            assert_eq!(w, worpitzky_by_sum(m as u64, n as u64));
            assert_eq!(evaluate(&d, &int(1)), int(w), "m={m} n={n}");
        }
    }
}

#[test]
fn euler_formula_matches_iterated_differences() {
    let steps = [int(1), ratio(1, 2), int(-2), ratio(3, 7)];
    for h in &steps {
        let step = StepSize::new(h.clone()).unwrap();
        for m in 0..=8usize {
            let xm = BasisPolynomial::basis_element(Basis::Monomial, m);
            for n in 0..=8usize {
                assert_eq!(
                    euler_difference_monomial(m, n, h).unwrap(),
                    forward_difference(&xm, &step, n),
                    "m={m} n={n} h={h}"
                );
            }
        }
    }
}

#[test]
fn shifted_values_invert_to_differences() {
    // The inverse transform of p(x0 + nh) is Δ_h^n p(x0), both indexed by n.
    let points = [(int(0), int(1)), (ratio(1, 3), ratio(-1, 2)), (int(-2), ratio(5, 4))];
    for m in 0..=6usize {
        let p = BasisPolynomial::basis_element(Basis::Monomial, m);
        for (x0, h) in &points {
            let step = StepSize::new(h.clone()).unwrap();
            let samples: IntSequence<BigRational> = IntSequence::from_zero(
                (0..=8).map(|n| evaluate(&p, &(x0 + h * int(n)))).collect(),
            );
            let diffs: Vec<ExactRational> = (0..=8)
                .map(|n| evaluate(&forward_difference(&p, &step, n), x0))
                .collect();
            let inv = inverse_binomial_transform(&samples).unwrap();
            assert_eq!(inv.values, diffs);
            assert_eq!(binomial_transform(&inv).unwrap(), samples);
        }
    }
}

#[test]
fn faulhaber_matches_direct_sums() {
    for m in 0..=10usize {
        let p = faulhaber_polynomial(m);
        for n in 0..=30u64 {
            let direct = sum_powers(m as u64, n, PowerSumMethod::Direct).unwrap();
            assert_eq!(evaluate(&p, &int(n)), int(direct));
        }
    }
    // Σ k^5 = C(n+1,2) + 30 C(n+1,3) + 150 C(n+1,4) + 240 C(n+1,5) + 120 C(n+1,6)
    for n in 0..=50u64 {
        let expansion = binomial(n + 1, 2)
            + 30 * binomial(n + 1, 3)
            + 150 * binomial(n + 1, 4)
            + 240 * binomial(n + 1, 5)
            + 120 * binomial(n + 1, 6);
        assert_eq!(sum_powers(5, n, PowerSumMethod::Binomial).unwrap(), expansion);
    }
}

/// Differentiates `x^a Σ_j coef[j] ln^j x` once.
fn differentiate(exponent: i64, coef: &[ExactRational]) -> (i64, Vec<ExactRational>) {
    let mut out = vec![ExactRational::zero(); coef.len()];
    for (j, c) in coef.iter().enumerate() {
        out[j] += c * int(exponent);
        if j > 0 {
            out[j - 1] += c * int(j as i64);
        }
    }
    (exponent - 1, out)
}

#[test]
fn harmonic_coefficients_give_antiderivatives() {
    // Differentiating the claimed n-th antiderivative n times must give ln^m x.
    for n in 1..=6u64 {
        for m in 0..=6u32 {
            let c = harmonic_log_coefficients(n, m).unwrap().values;
            let mut coef = vec![ExactRational::zero(); m as usize + 1];
            let mut falling = ExactRational::one();
            for k in 0..=m as usize {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                coef[m as usize - k] = sign * &c[k] * &falling / int(factorial(n));
                falling *= int(m as i64 - k as i64);
            }
            let mut exponent = n as i64;
            for _ in 0..n {
                (exponent, coef) = differentiate(exponent, &coef);
            }
            assert_eq!(exponent, 0);
            let mut expected = vec![ExactRational::zero(); m as usize + 1];
            expected[m as usize] = int(1);
            assert_eq!(coef, expected, "n={n} m={m}");
        }
    }
}

#[test]
fn negative_exponents_and_harmonic_numbers() {
    for n in 0..=100u64 {
        if n == 0 {
            assert!(subpower_negative(0, 1).unwrap().is_zero());
            continue;
        }
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        assert_eq!(subpower_negative(n, 1).unwrap(), sign * harmonic(n));
    }
    // Σ_k C(n,k) k^{-m} (subpower) = n^-m, exactly.
    for m in 1..=4u32 {
        for n in 1..=10u64 {
            let lhs: ExactRational = (1..=n)
                .map(|k| int(binomial(n, k)) * subpower_negative(k, m).unwrap())
                .sum();
            assert_eq!(lhs, ratio(1, pow(n, m as u64)));
        }
    }
}

#[test]
fn quadrature_matches_exact_values() {
    for n in 1..=6u64 {
        for m in 1..=4u32 {
            let exact = to_f64(&subpower_negative(n, m).unwrap());
            let q = integral_check(n, m, 1e-8).unwrap();
            assert!((q - exact).abs() < 1e-7, "n={n} m={m} q={q} exact={exact}");
        }
    }
}

#[test]
fn complex_recurrence() {
    for z in [Complex64::new(0.5, 0.0), Complex64::new(-1.3, 0.0), Complex64::new(2.0, 1.0)] {
        for n in 1..=12u64 {
            let lhs = subpower_complex(n, z);
            let rhs = (subpower_complex(n, z - 1.0) + subpower_complex(n - 1, z - 1.0)) * n as f64;
            assert!((lhs - rhs).norm() <= 1e-8 * lhs.norm(), "n={n} z={z}");
        }
    }
}

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #[test]
    fn transform_round_trip(values in prop::collection::vec(-1_000_000i64..1_000_000, 1..=64)) {
        let a: IntSequence = values.iter().map(|&v| BigInt::from(v)).collect();
        let b = binomial_transform(&a).unwrap();
        prop_assert_eq!(&inverse_binomial_transform(&b).unwrap(), &a);
        prop_assert_eq!(&binomial_transform(&inverse_binomial_transform(&a).unwrap()).unwrap(), &a);
    }

    #[test]
    fn rational_transform_round_trip(values in prop::collection::vec(small_rational(), 1..=24)) {
        let a: IntSequence<BigRational> = IntSequence::from_zero(values);
        let b = binomial_transform(&a).unwrap();
        prop_assert_eq!(inverse_binomial_transform(&b).unwrap(), a);
    }

    #[test]
    fn basis_round_trips(coefficients in prop::collection::vec(small_rational(), 0..=11)) {
        let p = BasisPolynomial::monomial(coefficients);
        for target in [Basis::FallingFactorial, Basis::Binomial] {
            let q = convert_basis(&p, target);
            prop_assert_eq!(q.basis(), target);
            prop_assert_eq!(&convert_basis(&q, Basis::Monomial), &p);
        }
    }

    #[test]
    fn conversion_preserves_values(
        coefficients in prop::collection::vec(small_rational(), 0..=8),
        x in small_rational(),
    ) {
        let p = BasisPolynomial::monomial(coefficients);
        let v = evaluate(&p, &x);
        for target in [Basis::FallingFactorial, Basis::Binomial] {
            prop_assert_eq!(&evaluate(&convert_basis(&p, target), &x), &v);
        }
    }
}
