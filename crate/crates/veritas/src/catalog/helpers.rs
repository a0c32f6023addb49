//! Shared glue between the function evaluators, the quadrature engine and
//! the descriptor interface.

use crate::quad::{QuadError, QuadResult, QuadratureSpec};
use crate::value::{ComplexValue, EvalError};
use num_complex::Complex64;
use std::f64::consts::PI;

use super::Evaluation;

pub(super) fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub(super) fn ci(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// exp(i π s)
pub(super) fn phase(s: Complex64) -> Complex64 {
    (Complex64::i() * PI * s).exp()
}

/// x^s for x > 0.
pub(super) fn rpow(x: f64, s: Complex64) -> Complex64 {
    (s * x.ln()).exp()
}

pub(super) fn map_quad_err(e: QuadError) -> EvalError {
    match e {
        QuadError::IntegrandFailure { source, .. } => source,
        QuadError::NonConvergence(r) => EvalError::NonConvergence { best_err: r.err_est },
        QuadError::DivergentTail => EvalError::NonConvergence { best_err: f64::MAX },
    }
}

pub(super) fn finite(
    f: &dyn Fn(f64) -> Result<Complex64, EvalError>,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, EvalError> {
    crate::quad::integrate_finite(&f, a, b, spec).map_err(map_quad_err)
}

pub(super) fn semi_inf(
    f: &dyn Fn(f64) -> Result<Complex64, EvalError>,
    a: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, EvalError> {
    crate::quad::integrate_semi_infinite(&f, a, spec).map_err(map_quad_err)
}

/// RHS = prefactor * integral; the quadrature error propagates through the
/// prefactor magnitude.
pub(super) fn quad_rhs(pre: ComplexValue, r: &QuadResult) -> (ComplexValue, f64) {
    let integral = ComplexValue::new(r.value, r.err_est);
    let rhs = pre.mul(&integral);
    (rhs, pre.norm() * r.err_est + pre.abs_err * r.value.norm())
}

pub(super) fn quad_evaluation(lhs: ComplexValue, pre: ComplexValue, r: QuadResult) -> Evaluation {
    let (rhs, err) = quad_rhs(pre, &r);
    Evaluation {
        lhs,
        rhs,
        quad_evals: r.evaluations,
        quad_err: err.max(lhs.abs_err),
        terms: None,
    }
}

/// Product of gamma factors divided by a product of gamma factors, in log
/// space.  A denominator pole collapses the whole fraction to zero; a
/// numerator pole is an error.
pub(super) fn gamma_frac(nums: &[Complex64], dens: &[Complex64]) -> crate::value::EvalResult {
    let mut ln = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for &n in nums {
        let g = crate::gamma::lngamma(n)?;
        ln += g.value;
        err += g.abs_err;
    }
    for &d in dens {
        if crate::value::near_nonpositive_int(d, 1e-300) {
            return Ok(ComplexValue::new(Complex64::new(0.0, 0.0), 0.0));
        }
        let g = crate::gamma::lngamma(d)?;
        ln -= g.value;
        err += g.abs_err;
    }
    let v = ln.exp();
    Ok(ComplexValue::new(v, v.norm() * (err + 1e-15)))
}

/// Distance of the real part from the nearest integer exceeds the margin
/// (used for "not an integer" hypotheses).
pub(super) fn off_int(x: Complex64, m: f64) -> bool {
    !crate::value::near_int(x, m.max(1e-9))
}

/// Re x is not a non-positive integer within the margin.
pub(super) fn not_nonpos_int(x: Complex64, m: f64) -> bool {
    x.re > m || off_int(x, m)
}

/// Re x is not a negative integer within the margin.
pub(super) fn not_neg_int(x: Complex64, m: f64) -> bool {
    x.re > -1.0 + m || off_int(x, m)
}

/// The two values of a multi-representation check that disagree the most;
/// grading that pair grades the whole set.
pub(super) fn worst_pair(vals: &[ComplexValue]) -> (ComplexValue, ComplexValue) {
    let (mut bi, mut bj, mut bd) = (0, 1, -1.0);
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            let d = (vals[i].value - vals[j].value).norm();
            if d > bd {
                bd = d;
                bi = i;
                bj = j;
            }
        }
    }
    (vals[bi], vals[bj])
}

/// Push msg when cond fails.
pub(super) fn req(v: &mut Vec<String>, ok: bool, msg: &str) {
    if !ok {
        v.push(msg.to_string());
    }
}

/// Base quadrature spec for a descriptor: the config's tolerances with the
/// descriptor's declared endpoint behavior layered on.
pub(super) fn spec_of(cfg: &super::CheckConfig) -> QuadratureSpec {
    cfg.quad
}
