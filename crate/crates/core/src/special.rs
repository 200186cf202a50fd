//! Laguerre polynomials L_n(x) and the associated family L_n¹(x).
//!
//! Both are evaluated by upward three-term recurrence, which is stable for
//! x ≥ 0. Every call site here has x = 4λ² with |λ| < 1.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SpecialFnError {
    #[error("polynomial degree must be >= 0 (got {0})")]
    NegativeDegree(i64),
}

fn degree(n: i64) -> Result<usize, SpecialFnError> {
    usize::try_from(n).map_err(|_| SpecialFnError::NegativeDegree(n))
}

/// L_n(x).
pub fn laguerre(n: i64, x: f64) -> Result<f64, SpecialFnError> {
    Ok(laguerre_n(degree(n)?, x))
}

/// L_n¹(x).
pub fn laguerre_assoc1(n: i64, x: f64) -> Result<f64, SpecialFnError> {
    Ok(assoc_laguerre_n(degree(n)?, 1.0, x))
}

/// L_n(x) for a known non-negative degree.
pub(crate) fn laguerre_n(n: usize, x: f64) -> f64 {
    assoc_laguerre_n(n, 0.0, x)
}

/// L_n¹(x) for a known non-negative degree.
pub(crate) fn laguerre1_n(n: usize, x: f64) -> f64 {
    assoc_laguerre_n(n, 1.0, x)
}

// (k+1) L^a_{k+1} = (2k+1+a-x) L^a_k - (k+a) L^a_{k-1}
fn assoc_laguerre_n(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// L_n(x) and L_{n+1}(x) in one pass, for the dressed-level formulas.
pub(crate) fn laguerre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for k in 1..=n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Explicit monomial sum Σ_k (-1)^k C(n+a, n-k) x^k / k!, evaluated with
    /// compensated summation over positive and negative parts separately.
    fn monomial(n: usize, alpha: usize, x: f64) -> f64 {
        let mut pos = 0.0f64;
        let mut neg = 0.0f64;
        let mut binom = 1.0f64; // C(n+a, n)
        for j in 0..n {
            binom *= (n + alpha - j) as f64 / (j + 1) as f64;
        }
        let mut term = binom;
        for k in 0..=n {
            if k % 2 == 0 {
                pos += term;
            } else {
                neg += term;
            }
            // C(n+a, n-k-1)/C(n+a, n-k) = (n-k)/(a+k+1)
            term *= (n - k) as f64 / (alpha + k + 1) as f64 * x / (k + 1) as f64;
        }
        pos - neg
    }

    #[test]
    fn low_degree_values() {
        assert_eq!(laguerre(0, 0.7).unwrap(), 1.0);
        assert!((laguerre(1, 0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((laguerre(3, 1.0).unwrap() + 2.0 / 3.0).abs() < 1e-14);
        assert_eq!(laguerre_assoc1(0, 0.3).unwrap(), 1.0);
        assert!((laguerre_assoc1(2, 0.2).unwrap() - 2.42).abs() < 1e-14);
    }

    #[test]
    fn negative_degree_rejected() {
        assert_eq!(laguerre(-1, 0.1), Err(SpecialFnError::NegativeDegree(-1)));
        assert_eq!(
            laguerre_assoc1(-3, 0.1),
            Err(SpecialFnError::NegativeDegree(-3))
        );
    }

    #[test]
    fn values_at_origin() {
        for n in 0..=512 {
            assert_eq!(laguerre_n(n, 0.0), 1.0, "L_{n}(0)");
            assert_eq!(laguerre1_n(n, 0.0), (n + 1) as f64, "L1_{n}(0)");
        }
    }

    #[test]
    fn assoc_equals_partial_sums() {
        for &x in &[0.001, 0.01, 0.1, 1.0, 4.0] {
            let mut sum = 0.0;
            for n in 0..=64 {
                sum += laguerre_n(n, x);
                let direct = laguerre1_n(n, x);
                let scale = direct.abs().max(1e-300);
                assert!(
                    (direct - sum).abs() / scale <= 1e-10 || (direct - sum).abs() <= 1e-12,
                    "n={n} x={x}: {direct} vs {sum}"
                );
            }
        }
    }

    #[test]
    fn agrees_with_monomial_sum() {
        for n in 0..=20 {
            for &x in &[0.0, 0.05, 0.3, 1.0, 2.5, 4.0] {
                for alpha in 0..=1 {
                    let rec = assoc_laguerre_n(n, alpha as f64, x);
                    let mono = monomial(n, alpha, x);
                    let err = (rec - mono).abs();
                    assert!(
                        err <= 1e-9 * mono.abs().max(1e-3),
                        "n={n} a={alpha} x={x}: {rec} vs {mono}"
                    );
                }
            }
        }
    }

    #[test]
    fn pair_matches_single() {
        for n in 0..30 {
            let (a, b) = laguerre_pair(n, 0.37);
            assert_eq!(a, laguerre_n(n, 0.37));
            assert_eq!(b, laguerre_n(n + 1, 0.37));
        }
    }

    #[test]
    fn finite_in_operating_envelope() {
        for n in [0, 1, 7, 100, 511, 512] {
            for x in [0.0, 1.0, 10.0, 50.0] {
                assert!(laguerre_n(n, x).is_finite());
                assert!(laguerre1_n(n, x).is_finite());
            }
        }
    }
}
