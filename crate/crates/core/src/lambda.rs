//! The displacement parameter λ of `U = exp[λ σ_z (a† − a)]`.
//!
//! λ is chosen so that the counter-rotating coupling of the transformed
//! Hamiltonian vanishes. For block `n` that condition reads
//!
//! ```text
//! h_n(λ) = (λω + g) + Ω λ e^{-2λ²} L_n¹(4λ²) / (n + 1) = 0
//! ```
//!
//! and at small λ (L_n¹ → n + 1) it loses its `n` dependence. The closed
//! form is the approximate solution of that n-independent equation and is
//! what the analytic spectrum uses by default.

use crate::params::ModelParams;
use crate::special::laguerre1_n;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LambdaError {
    #[error("no sign change of the lambda condition on [-1, 0] for {0:?}")]
    NoBracket(ModelParams),
}

/// How a [`LambdaSolution`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaMethod {
    ClosedForm,
    RootNIndependent,
    RootPerN(usize),
}

impl fmt::Display for LambdaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMethod::ClosedForm => f.write_str("closed"),
            LambdaMethod::RootNIndependent => f.write_str("root"),
            LambdaMethod::RootPerN(n) => write!(f, "root_n{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSolution {
    pub lambda: f64,
    pub method: LambdaMethod,
    /// Value of the defining equation at `lambda` (the n-independent one
    /// for the closed form).
    pub residual: f64,
}

impl LambdaSolution {
    /// A bare λ, e.g. for evaluating formulas at a hand-picked value.
    /// The residual is left at zero.
    pub fn fixed(lambda: f64) -> Self {
        LambdaSolution {
            lambda,
            method: LambdaMethod::ClosedForm,
            residual: 0.0,
        }
    }
}

/// `h(λ) = (λω + g) + Ω λ e^{-2λ²}`.
pub fn condition_n_independent(p: &ModelParams, lambda: f64) -> f64 {
    (lambda * p.omega + p.g) + p.omega_r * lambda * (-2.0 * lambda * lambda).exp()
}

/// `h_n(λ)` including the Laguerre factor.
pub fn condition_per_n(p: &ModelParams, n: usize, lambda: f64) -> f64 {
    let x = 4.0 * lambda * lambda;
    let ratio = laguerre1_n(n, x) / (n as f64 + 1.0);
    (lambda * p.omega + p.g) + p.omega_r * lambda * (-2.0 * lambda * lambda).exp() * ratio
}

/// `λ ≃ −g / (ω + Ω exp[−2 (g / (ω + Ω))²])`.
pub fn lambda_closed_form(p: &ModelParams) -> LambdaSolution {
    if p.g == 0.0 {
        return LambdaSolution {
            lambda: 0.0,
            method: LambdaMethod::ClosedForm,
            residual: 0.0,
        };
    }
    let ratio = p.g / (p.omega + p.omega_r);
    let lambda = -p.g / (p.omega + p.omega_r * (-2.0 * ratio * ratio).exp());
    LambdaSolution {
        lambda,
        method: LambdaMethod::ClosedForm,
        residual: condition_n_independent(p, lambda),
    }
}

/// Root of the n-independent condition in (−1, 0].
pub fn lambda_root(p: &ModelParams) -> Result<LambdaSolution, LambdaError> {
    solve(p, LambdaMethod::RootNIndependent, |l| {
        condition_n_independent(p, l)
    })
}

/// Root of the block-`n` condition in (−1, 0].
pub fn lambda_root_per_n(p: &ModelParams, n: usize) -> Result<LambdaSolution, LambdaError> {
    solve(p, LambdaMethod::RootPerN(n), |l| condition_per_n(p, n, l))
}

const SCAN_STEPS: usize = 64;
const BRACKET_WIDTH: f64 = 1e-13;

fn solve(
    p: &ModelParams,
    method: LambdaMethod,
    h: impl Fn(f64) -> f64,
) -> Result<LambdaSolution, LambdaError> {
    if p.g == 0.0 {
        return Ok(LambdaSolution {
            lambda: 0.0,
            method,
            residual: 0.0,
        });
    }

    // h(0) = g > 0. Walk down from 0 and keep the sign change nearest to it.
    let mut hi = 0.0;
    let mut h_hi = h(hi);
    let mut lo = None;
    for k in 1..=SCAN_STEPS {
        let x = -(k as f64) / SCAN_STEPS as f64;
        let hx = h(x);
        if hx == 0.0 {
            return Ok(LambdaSolution {
                lambda: x,
                method,
                residual: 0.0,
            });
        }
        if hx.signum() != h_hi.signum() {
            lo = Some(x);
            break;
        }
        hi = x;
        h_hi = hx;
    }
    let mut lo = lo.ok_or(LambdaError::NoBracket(*p))?;
    let mut h_lo = h(lo);

    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        let h_mid = h(mid);
        if h_mid == 0.0 {
            lo = mid;
            hi = mid;
            h_lo = 0.0;
            h_hi = 0.0;
            break;
        }
        if h_mid.signum() == h_lo.signum() {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
            h_hi = h_mid;
        }
    }

    let mut lambda = if h_lo.abs() <= h_hi.abs() { lo } else { hi };
    let mut residual = h(lambda);

    // one secant step across the final bracket
    if h_hi != h_lo {
        let candidate = hi - h_hi * (hi - lo) / (h_hi - h_lo);
        if candidate >= lo && candidate <= hi {
            let r = h(candidate);
            if r.abs() < residual.abs() {
                lambda = candidate;
                residual = r;
            }
        }
    }

    Ok(LambdaSolution {
        lambda,
        method,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(omega: f64, omega_r: f64, g: f64) -> ModelParams {
        ModelParams::new(omega, omega_r, g).unwrap()
    }

    /// Independent oracle: plain bisection on [-1, 0], 200 halvings.
    fn bisect(f: impl Fn(f64) -> f64) -> f64 {
        let (mut a, mut b) = (-1.0f64, 0.0f64);
        let fa = f(a);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (f(m) > 0.0) == (fa > 0.0) {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn zero_coupling() {
        let q = p(1.0, 1.0, 0.0);
        assert_eq!(lambda_closed_form(&q).lambda, 0.0);
        let r = lambda_root(&q).unwrap();
        assert_eq!((r.lambda, r.residual), (0.0, 0.0));
        for n in 0..5 {
            assert_eq!(lambda_root_per_n(&q, n).unwrap().lambda, 0.0);
        }
    }

    #[test]
    fn closed_form_values() {
        let l = lambda_closed_form(&p(1.0, 1.0, 0.1));
        assert_eq!(l.method, LambdaMethod::ClosedForm);
        assert!((l.lambda + 0.050_124_999_739_583_98).abs() < 1e-15);
        let l = lambda_closed_form(&p(8.13, 4.25, 0.813));
        assert!((l.lambda + 0.065_864_622_535_879_9).abs() < 1e-15);
    }

    #[test]
    fn root_values() {
        let q = p(1.0, 1.0, 0.1);
        let r = lambda_root(&q).unwrap();
        assert!((r.lambda + 0.050_125_628_668_101_98).abs() < 1e-14);
        assert!(r.residual.abs() <= 1e-12);
        assert!((r.lambda - bisect(|l| condition_n_independent(&q, l))).abs() < 1e-13);

        let q = p(1.0, 1.5, 0.3);
        let r = lambda_root(&q).unwrap();
        assert!(r.residual.abs() <= 1e-12 * q.scale());
        assert!((r.lambda + 0.122_155_017_583_137_4).abs() < 1e-13);
    }

    #[test]
    fn per_n_root() {
        let q = p(1.0, 1.0, 0.1);
        let r0 = lambda_root_per_n(&q, 0).unwrap();
        let r = lambda_root(&q).unwrap();
        assert_eq!(r0.lambda, r.lambda);

        let r3 = lambda_root_per_n(&q, 3).unwrap();
        assert_eq!(r3.method, LambdaMethod::RootPerN(3));
        assert!((r3.lambda + 0.050_511_911_392_250_83).abs() < 1e-13);
        assert!((r3.lambda - r.lambda).abs() < 1e-3);
        assert!((r3.lambda - bisect(|l| condition_per_n(&q, 3, l))).abs() < 1e-13);
    }

    #[test]
    fn bracket_is_valid_in_envelope() {
        for i in 0..=20 {
            for j in 1..=10 {
                let q = p(1.0, 0.1 * i as f64, 0.05 * j as f64);
                for n in [0, 1, 5, 20] {
                    assert!(condition_per_n(&q, n, 0.0) >= 0.0);
                    assert!(condition_per_n(&q, n, -1.0) < 0.0, "{q:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn weak_coupling_limit() {
        let q = p(1.0, 0.7, 1e-4);
        let limit = -q.g / (q.omega + q.omega_r);
        for l in [lambda_closed_form(&q), lambda_root(&q).unwrap()] {
            assert!((l.lambda / limit - 1.0).abs() < 1e-3);
        }
    }

    #[test]
    fn huge_coupling_has_no_bracket() {
        // the root leaves (-1, 0] once g exceeds ω + Ω e^{-2}
        let q = p(1.0, 0.0, 2.0);
        assert!(matches!(lambda_root(&q), Err(LambdaError::NoBracket(_))));
    }
}
