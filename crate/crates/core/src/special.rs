//! Exact-finite-sum special functions behind every closed-form expression:
//! Pochhammer symbols, terminating Gauss and Kummer hypergeometric
//! polynomials, and log-gamma for normalization constants.
//!
//! Only terminating series are implemented: the first hypergeometric
//! parameter is always a non-positive integer supplied as `n`, so every sum
//! is an exact polynomial and no convergence questions arise.

use crate::{Error, Result};

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, m: usize) -> f64 {
    let mut acc = 1.0;
    for j in 0..m {
        acc *= a + j as f64;
    }
    acc
}

/// Coefficients of a polynomial, constant term first.
///
/// Produced by the terminating hypergeometric expansions; both series start
/// at 1, so `coefficients[0] == 1` always holds.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoefficients {
    pub degree: usize,
    pub coefficients: Vec<f64>,
}

impl PolyCoefficients {
    /// Evaluate by Horner's rule.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

fn check_lower_parameter(c: f64, n: usize, name: &str) -> Result<()> {
    // The truncated sum divides by (c)_j for j <= n, which vanishes exactly
    // when c is an integer in {0, -1, ..., -(n-1)}.
    if c <= 0.0 && c.fract() == 0.0 && c > -(n as f64) {
        return Err(Error::Domain(format!(
            "{name}: lower parameter c = {c} makes a denominator Pochhammer term vanish \
             inside the degree-{n} sum"
        )));
    }
    Ok(())
}

/// Terminating Gauss hypergeometric polynomial
/// `2F1(-n, b; c; x) = sum_{j=0..n} (-n)_j (b)_j / ((c)_j j!) x^j`.
///
/// Terms are built by the ratio update
/// `t_{j+1} = t_j (j-n)(b+j) / ((c+j)(j+1)) x`, which stays bounded for the
/// large degrees the bound states reach, unlike naive Pochhammer products.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, x: f64) -> Result<f64> {
    check_lower_parameter(c, n, "hyp2f1_terminating")?;
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..n {
        let jf = j as f64;
        term *= (jf - n as f64) * (b + jf) / ((c + jf) * (jf + 1.0)) * x;
        sum += term;
    }
    Ok(sum)
}

/// Terminating Kummer polynomial
/// `1F1(-n; c; x) = sum_{j=0..n} (-n)_j / ((c)_j j!) x^j`.
pub fn hyp1f1_terminating(n: usize, c: f64, x: f64) -> Result<f64> {
    check_lower_parameter(c, n, "hyp1f1_terminating")?;
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..n {
        let jf = j as f64;
        term *= (jf - n as f64) / ((c + jf) * (jf + 1.0)) * x;
        sum += term;
    }
    Ok(sum)
}

/// Coefficient list of `2F1(-n, b; c; x)` in powers of `x`.
pub fn hyp2f1_coefficients(n: usize, b: f64, c: f64) -> Result<PolyCoefficients> {
    check_lower_parameter(c, n, "hyp2f1_coefficients")?;
    let mut coefficients = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    coefficients.push(term);
    for j in 0..n {
        let jf = j as f64;
        term *= (jf - n as f64) * (b + jf) / ((c + jf) * (jf + 1.0));
        coefficients.push(term);
    }
    Ok(PolyCoefficients { degree: n, coefficients })
}

// Lanczos approximation, g = 7, 9 coefficients. Relative accuracy of the
// resulting Gamma value is ~1e-15 over the positive axis.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // published digits of the g = 7 set
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the Gamma function for `x > 0`.
///
/// Arguments at or below zero signal an upstream parameter violation (every
/// valid bound state keeps all Gamma arguments positive) and are rejected.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos series in its accurate region.
        let reflected = log_gamma(1.0 - x)?;
        return Ok((std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln() - reflected);
    }
    let z = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    for (i, &coeff) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += coeff / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;
    Ok(HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + a.ln())
}

/// `ln n!`.
pub(crate) fn log_factorial(n: usize) -> Result<f64> {
    log_gamma(n as f64 + 1.0)
}


#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(2.5, 0), 1.0);
        assert_eq!(pochhammer(1.0, 3), 6.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
        assert_eq!(pochhammer(3.0, 2), 12.0);
    }

    #[test]
    fn hyp2f1_degree_zero_is_one() {
        assert_eq!(hyp2f1_terminating(0, 7.3, -0.2, 123.0).unwrap(), 1.0);
    }

    #[test]
    fn hyp2f1_degree_one_closed_form() {
        // 2F1(-1, b; c; x) = 1 - (b/c) x
        let v = hyp2f1_terminating(1, 2.0, 1.0, 0.5).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn hyp2f1_matches_fraction_oracle() {
        // 2F1(-2, 3; 2; 1/10) = 1 - 3/10 + 1/50 = 18/25
        let exact = fraction_oracle::hyp2f1(2, (3, 1), (2, 1), (1, 10));
        assert_eq!(exact, num::BigRational::new(18.into(), 25.into()));
        let expected = fraction_oracle::to_f64(&exact);
        assert_relative_eq!(expected, 0.72, max_relative = 1e-15);
        let v = hyp2f1_terminating(2, 3.0, 2.0, 0.1).unwrap();
        assert_relative_eq!(v, expected, max_relative = 1e-14);
    }

    #[test]
    fn hyp1f1_values() {
        assert_eq!(hyp1f1_terminating(0, 2.0, 7.3).unwrap(), 1.0);

        // 1F1(-1; 2; 1) = 1 - 1/2
        let exact = fraction_oracle::hyp1f1(1, (2, 1), (1, 1));
        assert_relative_eq!(
            hyp1f1_terminating(1, 2.0, 1.0).unwrap(),
            fraction_oracle::to_f64(&exact),
            max_relative = 1e-15
        );
        assert_relative_eq!(hyp1f1_terminating(1, 2.0, 1.0).unwrap(), 0.5, max_relative = 1e-15);

        // 1F1(-2; 1; 2) = 1 - 4 + 2 = -1
        let exact = fraction_oracle::hyp1f1(2, (1, 1), (2, 1));
        assert_eq!(exact, num::BigRational::from_integer((-1).into()));
        assert_relative_eq!(
            hyp1f1_terminating(2, 1.0, 2.0).unwrap(),
            -1.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn vanishing_denominator_is_rejected() {
        assert!(hyp2f1_terminating(3, 1.0, 0.0, 0.5).is_err());
        assert!(hyp2f1_terminating(3, 1.0, -2.0, 0.5).is_err());
        // c = -3 is outside the truncated sum for n = 3 ((c)_j, j <= 3, never hits it).
        assert!(hyp2f1_terminating(3, 1.0, -3.0, 0.5).is_ok());
        assert!(hyp1f1_terminating(2, -1.0, 0.5).is_err());
        assert!(hyp1f1_terminating(2, -2.5, 0.5).is_ok());
    }

    #[test]
    fn coefficients_match_pointwise_eval() {
        let poly = hyp2f1_coefficients(4, 1.7, 2.3).unwrap();
        assert_eq!(poly.degree, 4);
        assert_eq!(poly.coefficients.len(), 5);
        assert_eq!(poly.coefficients[0], 1.0);
        for &x in &[0.0, 0.3, -0.8, 0.95] {
            assert_relative_eq!(
                poly.eval(x),
                hyp2f1_terminating(4, 1.7, 2.3, x).unwrap(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn log_gamma_known_values() {
        assert_abs_diff_eq!(log_gamma(1.0).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(log_gamma(2.0).unwrap(), 0.0, epsilon = 1e-14);
        // Gamma(1/2) = sqrt(pi)
        assert_relative_eq!(
            log_gamma(0.5).unwrap(),
            0.572_364_942_924_700_1,
            max_relative = 1e-13
        );
        // Gamma(5) = 24
        assert_relative_eq!(log_gamma(5.0).unwrap(), 24f64.ln(), max_relative = 1e-13);
        assert_relative_eq!(
            log_gamma(100.0).unwrap(),
            359.134_205_369_575_4,
            max_relative = 1e-13
        );
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn log_gamma_recurrence() {
        // ln Gamma(x+1) - ln Gamma(x) = ln x
        for &x in &[0.1, 0.5, 1.5, 10.0, 100.0] {
            let lhs = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
            assert_abs_diff_eq!(lhs, x.ln(), epsilon = 1e-12);
        }
    }

    #[test]
    fn pochhammer_recurrence_exact() {
        for &a in &[-3.7, -0.5, 0.25, 1.0, 4.5] {
            for m in 0..=30usize {
                let lhs = pochhammer(a, m + 1);
                let rhs = pochhammer(a, m) * (a + m as f64);
                assert_relative_eq!(lhs, rhs, max_relative = 1e-15, epsilon = 1e-290);
            }
        }
    }

    /// Generalized Laguerre polynomial by its three-term recurrence.
    fn laguerre(n: usize, a: f64, x: f64) -> f64 {
        if n == 0 {
            return 1.0;
        }
        let mut prev = 1.0;
        let mut cur = 1.0 + a - x;
        for k in 1..n {
            let kf = k as f64;
            let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Left side of the Laguerre identity plus its conditioning scale: the
    /// terminating Kummer sum alternates, so at larger x the achievable f64
    /// accuracy is 1e-11 relative to the term-magnitude sum, not to the
    /// (possibly tiny) value.
    fn kummer_side_with_scale(n: usize, c: f64, x: f64) -> (f64, f64) {
        let mut sum = 1.0;
        let mut abs_sum = 1.0;
        let mut term = 1.0;
        for j in 0..n {
            let jf = j as f64;
            term *= (jf - n as f64) / ((c + jf) * (jf + 1.0)) * x;
            sum += term;
            abs_sum += term.abs();
        }
        let factor = pochhammer(c, n) / pochhammer(1.0, n);
        (sum * factor, abs_sum * factor.abs())
    }

    #[test]
    fn kummer_laguerre_consistency_fixed_sweep() {
        // 1F1(-n; c; x) (c)_n / n! = L_n^{(c-1)}(x)
        for n in 0..=15usize {
            for &c in &[0.5, 1.0, 1.5, 2.0, 3.25] {
                for &x in &[0.1, 0.7, 2.0, 5.5] {
                    let (lhs, scale) = kummer_side_with_scale(n, c, x);
                    let rhs = laguerre(n, c - 1.0, x);
                    assert!(
                        (lhs - rhs).abs() <= 1e-11 * scale.max(1.0),
                        "n={n} c={c} x={x}: {lhs} vs {rhs} (scale {scale:.2e})"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn contiguity_binomial_identity(n in 0usize..=10, b in 0.1f64..5.0, x in -0.9f64..0.9) {
            // 2F1(-n, b; b; x) = (1-x)^n
            let lhs = hyp2f1_terminating(n, b, b, x).unwrap();
            let rhs = (1.0 - x).powi(n as i32);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }

        #[test]
        fn kummer_laguerre_consistency(n in 0usize..=15, c in 0.3f64..4.0, x in 0.0f64..8.0) {
            let (lhs, scale) = kummer_side_with_scale(n, c, x);
            let rhs = laguerre(n, c - 1.0, x);
            prop_assert!((lhs - rhs).abs() <= 1e-11 * scale.max(1.0));
        }

        #[test]
        fn terminating_sums_match_fraction_oracle(
            n in 0usize..=8,
            bn in -6i64..=6, cn in 1i64..=5, xn in -9i64..=9,
        ) {
            let b = (bn, 2);
            let c = (cn, 1);
            let x = (xn, 10);
            let exact = fraction_oracle::to_f64(&fraction_oracle::hyp2f1(n, b, c, x));
            let v = hyp2f1_terminating(n, bn as f64 / 2.0, cn as f64, xn as f64 / 10.0).unwrap();
            prop_assert!((v - exact).abs() <= 1e-12 * exact.abs().max(1.0));
        }
    }
}
