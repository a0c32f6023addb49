//! Bateman-type expansions (F15): a product of two second-kind functions at
//! distinct arguments equals a power series in 2/(x+y) whose coefficients
//! are the same function with shifted degree at the pooled argument
//! (1+xy)/(x+y).  Geometric convergence requires x+y comfortably above 2;
//! points below that threshold are rejected up front.

use super::helpers::*;
use super::{unif, CheckConfig, Evaluation, IdentityDescriptor, Point};
use crate::gegenbauer::gegenbauer_d;
use crate::jacobi::{jacobi_q, JacobiOrder, Representation};
use crate::legendre::legendre_q;
use crate::value::{ComplexValue, CutPoint, EvalError};
use num_complex::Complex64;
use std::f64::consts::PI;

const MAX_TERMS: u32 = 200;
const SUM_FLOOR: f64 = 2.2;

/// sum_k (p1)_k (p2)_k / ((p3)_k k!) r^k f(k), with the coefficient built
/// incrementally.  Returns the sum with a tail estimate folded into its
/// error, plus the number of terms consumed.
fn hyp_series(
    p1: Complex64,
    p2: Complex64,
    p3: Complex64,
    r: f64,
    f: &dyn Fn(u32) -> Result<ComplexValue, EvalError>,
) -> Result<(ComplexValue, u32), EvalError> {
    let mut coef = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut small = 0u32;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let v = f(k)?;
        let term = coef * v.value;
        sum += term;
        err += coef.norm() * v.abs_err;
        let ratio = r * ((p1 + kf) * (p2 + kf) / ((p3 + kf) * (kf + 1.0))).norm();
        if term.norm() <= 1e-17 * sum.norm().max(1e-280) {
            small += 1;
            if small >= 2 {
                let tail = if ratio < 0.999 {
                    term.norm() * ratio / (1.0 - ratio)
                } else {
                    term.norm() * 1e3
                };
                return Ok((ComplexValue::new(sum, err + tail), k + 1));
            }
        } else {
            small = 0;
        }
        coef *= r * (p1 + kf) * (p2 + kf) / ((p3 + kf) * (kf + 1.0));
    }
    Err(EvalError::NonConvergence {
        best_err: coef.norm().max(err),
    })
}

fn series_evaluation(
    lhs: ComplexValue,
    pre: ComplexValue,
    sum: ComplexValue,
    terms: u32,
) -> Evaluation {
    let rhs = pre.mul(&sum);
    Evaluation {
        lhs,
        rhs,
        quad_evals: terms as u64,
        quad_err: (pre.norm() * sum.abs_err + pre.abs_err * sum.value.norm())
            .max(lhs.abs_err),
        terms: Some(terms),
    }
}

fn pooled_args(p: &Point, v: &mut Vec<String>, m: f64) -> (f64, f64) {
    let (x, y) = (p.c("x"), p.c("y"));
    if !(x.im == 0.0 && x.re > 1.0 + m) {
        v.push("x must be real and > 1".into());
    }
    if !(y.im == 0.0 && y.re > 1.0 + m) {
        v.push("y must be real and > 1".into());
    }
    if (x + y).re <= SUM_FLOOR + m {
        v.push(format!("x + y must exceed {SUM_FLOOR} for the series to converge"));
    }
    (x.re, y.re)
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    v.push(IdentityDescriptor {
        id: "F15.batemanQQ",
        family: "F15",
        params: &["alpha", "beta", "gamma", "lambda", "mu", "x", "y"],
        default_tol: 1e-7,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            pooled_args(p, &mut v, m);
            req(&mut v, not_nonpos_int(a + g + l + 1.0, m),
                "alpha + gamma + lambda must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g - l + 1.0, m),
                "beta + gamma - lambda must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + b + 2.0 * g + 2.0, m),
                "alpha + beta + 2 gamma must stay away from the integers below -1");
            req(&mut v, not_nonpos_int(g - l - mu + 1.0, m),
                "gamma - lambda - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.3, 1.0))),
                ("beta", c(unif(rng, 0.2, 0.9))),
                ("gamma", c(unif(rng, 0.5, 1.5))),
                ("lambda", c(unif(rng, 0.1, 0.5))),
                ("mu", c(unif(rng, 0.1, 0.5))),
                ("x", c(unif(rng, 1.25, 2.0))),
                ("y", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            let (x, y) = (p.re("x"), p.re("y"));
            let (a2, b2, g2) = (a + 2.0 * l + mu, b + mu, g - l - mu);
            let lhs = jacobi_q(
                JacobiOrder::new(a2, b2, g2),
                CutPoint::off_cut(c(x)),
                Representation::Auto,
            )?
            .mul(&jacobi_q(
                JacobiOrder::new(a2, b2, g2),
                CutPoint::off_cut(c(y)),
                Representation::Auto,
            )?);
            let r = 2.0 / (x + y);
            let s = a + b + g + l + mu + 1.0;
            let pre = gamma_frac(
                &[a + g + l + 1.0, b + g - l + 1.0],
                &[a + b + 2.0 * g + 2.0],
            )?
            .scale(0.5 * rpow(r, s));
            let w = c((1.0 + x * y) / (x + y));
            let f = |k: u32| -> Result<ComplexValue, EvalError> {
                jacobi_q(
                    JacobiOrder::new(a2, b2, g2 + k as f64),
                    CutPoint::off_cut(w),
                    Representation::Auto,
                )
            };
            let (sum, terms) =
                hyp_series(g2 + 1.0, s, a + b + 2.0 * g + 2.0, r, &f)?;
            Ok(series_evaluation(lhs, pre, sum, terms))
        },
    });

    v.push(IdentityDescriptor {
        id: "F15.batemanDD",
        family: "F15",
        params: &["alpha", "gamma", "mu", "x", "y"],
        default_tol: 1e-7,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g, mu) = (p.c("alpha"), p.c("gamma"), p.c("mu"));
            pooled_args(p, &mut v, m);
            req(&mut v, not_nonpos_int(2.0 * a + g + mu, m),
                "2 alpha + gamma + mu must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a + mu, m),
                "alpha + mu must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + 2.0 * g + 1.0, m),
                "2 alpha + 2 gamma must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g - mu + 1.0, m),
                "gamma - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.4, 1.0))),
                ("gamma", c(unif(rng, 0.4, 1.2))),
                ("mu", c(unif(rng, 0.1, 0.5))),
                ("x", c(unif(rng, 1.25, 2.0))),
                ("y", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g, mu) = (p.c("alpha"), p.c("gamma"), p.c("mu"));
            let (x, y) = (p.re("x"), p.re("y"));
            let lhs = gegenbauer_d(g - mu, a + mu, CutPoint::off_cut(c(x)))?
                .mul(&gegenbauer_d(g - mu, a + mu, CutPoint::off_cut(c(y)))?);
            let r = 2.0 / (x + y);
            let pre = gamma_frac(&[2.0 * a + g + mu], &[a + mu, a + g + 1.0])?.scale(
                phase(a + mu)
                    * rpow(2.0, -(4.0 * a + 2.0 * g + 2.0 * mu))
                    * rpow(r, 2.0 * a + g + mu),
            );
            let w = c((1.0 + x * y) / (x + y));
            let f = |k: u32| -> Result<ComplexValue, EvalError> {
                gegenbauer_d(g - mu + k as f64, a + mu, CutPoint::off_cut(w))
            };
            let (sum, terms) = hyp_series(
                g - mu + 1.0,
                a + g + 0.5,
                2.0 * a + 2.0 * g + 1.0,
                r,
                &f,
            )?;
            Ok(series_evaluation(lhs, pre, sum, terms))
        },
    });

    v.push(IdentityDescriptor {
        id: "F15.batemanLegQQ",
        family: "F15",
        params: &["nu", "mu", "alpha", "x", "y"],
        default_tol: 1e-7,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu, a) = (p.c("nu"), p.c("mu"), p.c("alpha"));
            pooled_args(p, &mut v, m);
            req(&mut v, not_nonpos_int(nu + mu + 2.0 * a + 1.0, m),
                "nu + mu + 2 alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu + a + 1.5, m),
                "nu + alpha + 3/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(2.0 * nu + 2.0 * a + 2.0, m),
                "2 nu + 2 alpha must stay away from the integers below -1");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, 0.2, 1.0))),
                ("mu", c(unif(rng, -0.3, 0.4))),
                ("alpha", c(unif(rng, 0.1, 0.6))),
                ("x", c(unif(rng, 1.25, 2.0))),
                ("y", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu, a) = (p.c("nu"), p.c("mu"), p.c("alpha"));
            let (x, y) = (p.re("x"), p.re("y"));
            let lhs = legendre_q(nu + a, mu + a, CutPoint::off_cut(c(x)))?
                .mul(&legendre_q(nu + a, mu + a, CutPoint::off_cut(c(y)))?);
            let r = 2.0 / (x + y);
            let pre = gamma_frac(&[nu + mu + 2.0 * a + 1.0], &[nu + a + 1.5])?.scale(
                phase(mu + a)
                    * PI.sqrt()
                    * rpow(2.0, -(2.0 * nu + 2.0 * a + 2.0))
                    * rpow(r, nu + a + 1.0),
            );
            let w = c((1.0 + x * y) / (x + y));
            let f = |k: u32| -> Result<ComplexValue, EvalError> {
                legendre_q(nu + a + k as f64, mu + a, CutPoint::off_cut(w))
            };
            let (sum, terms) = hyp_series(
                nu - mu + 1.0,
                nu + a + 1.0,
                2.0 * nu + 2.0 * a + 2.0,
                r,
                &f,
            )?;
            Ok(series_evaluation(lhs, pre, sum, terms))
        },
    });
}
