//! Quadrature-backed product representations: the double-integral forms
//! (F10), the kernel single-integral form with its corrected lower limit and
//! a deliberately wrong control (F11), the finite-interval lemma behind the
//! kernel reduction (F11.lemD) and the Laplace-type representations (F14).

use super::helpers::*;
use super::{unif, CheckConfig, IdentityDescriptor, Point};
use crate::geometry::{kernel_a, kernel_w, kernel_z, qq_lower_limit};
use crate::gegenbauer::{gegenbauer_c, gegenbauer_d};
use crate::hyp::hyp2f1_reg;
use crate::jacobi::{jacobi_p, jacobi_q, JacobiOrder, Representation};
use crate::legendre::legendre_q;
use crate::quad::{integrate_2d, Axis, QuadResult, TailDecay};
use crate::value::{CutPoint, EvalError};
use num_complex::Complex64;
use std::f64::consts::PI;

fn real_gt1(v: &mut Vec<String>, z: Complex64, m: f64, what: &str) {
    if !(z.im == 0.0 && z.re > 1.0 + m) {
        v.push(format!("{what} must be real and > 1"));
    }
}

fn jq(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    z: f64,
) -> Result<crate::value::ComplexValue, EvalError> {
    jacobi_q(
        JacobiOrder::new(alpha, beta, gamma),
        CutPoint::off_cut(c(z)),
        Representation::Auto,
    )
}

/// Power-decay hint clamped away from the divergence threshold.
fn pdecay(p: f64) -> TailDecay {
    TailDecay::Power(p.min(-1.2))
}

/// Kernel-form integrand shared by the Q-form descriptors.  A crosses 1
/// linearly at the corrected lower limit; combined with the large-argument
/// decay of the Legendre factor the integrand vanishes there like
/// (y3 - lower)^{alpha - 1/2}.  Below the corrected limit A dips under 1, so
/// the powers are taken in the complex plane to keep the (deliberately
/// wrong) control integrand finite.
fn kernel_q_integrand(
    p: &Point,
    y3: f64,
) -> Result<Complex64, EvalError> {
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    let (y1, y2) = (p.re("y1"), p.re("y2"));
    let av = kernel_a(y1, y2, y3);
    let a2m1 = Complex64::new(av * av - 1.0, 0.0);
    let arg = av / a2m1.sqrt();
    let q3 = jq(a, b, g, 2.0 * y3 * y3 - 1.0)?;
    let leg = legendre_q(a - 1.0, b, CutPoint::off_cut(arg))?;
    Ok(q3.value * leg.value * rpow(y3, a + b) * a2m1.powc(0.5 * (a - 1.0)))
}

fn kernel_lhs(p: &Point) -> Result<crate::value::ComplexValue, EvalError> {
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    let (y1, y2) = (p.re("y1"), p.re("y2"));
    let q1 = jq(a, b, g, 2.0 * y1 * y1 - 1.0)?;
    let q2 = jq(a, b, g, 2.0 * y2 * y2 - 1.0)?;
    Ok(q1.mul(&q2))
}

/// e^{-i pi beta} 2^alpha Gamma(alpha+gamma+1) (y1 y2)^{alpha-beta-1}
///   / (Gamma(gamma+1) Gamma(alpha+beta) ((y1^2-1)(y2^2-1))^alpha).
fn kernel_q_prefactor(p: &Point) -> Result<crate::value::ComplexValue, EvalError> {
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    let (y1, y2) = (p.re("y1"), p.re("y2"));
    Ok(gamma_frac(&[a + g + 1.0], &[g + 1.0, a + b])?.scale(
        phase(-b)
            * rpow(2.0, a)
            * rpow(y1 * y2, a - b - 1.0)
            * rpow((y1 * y1 - 1.0) * (y2 * y2 - 1.0), -a),
    ))
}

fn kernel_constraints(p: &Point, m: f64) -> Vec<String> {
    let mut v = Vec::new();
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    real_gt1(&mut v, p.c("y1"), m, "y1");
    real_gt1(&mut v, p.c("y2"), m, "y2");
    req(&mut v, a.re > -0.5 + m, "Re alpha must exceed -1/2");
    req(&mut v, (b + g).re > -1.0 + m, "Re(beta + gamma) must exceed -1");
    req(&mut v, g.re > 1.0 + m, "Re gamma must exceed 1");
    req(&mut v, not_nonpos_int(a + b, m),
        "alpha + beta must avoid the nonpositive integers");
    req(&mut v, not_nonpos_int(a + g + 1.0, m),
        "alpha + gamma must avoid the negative integers");
    req(&mut v, not_neg_int(g, m), "gamma must avoid the negative integers");
    v
}

fn kernel_sample(rng: &mut rand_chacha::ChaCha8Rng) -> Point {
    Point(vec![
        ("alpha", c(unif(rng, 0.6, 1.4))),
        ("beta", c(unif(rng, 0.15, 0.8))),
        ("gamma", c(unif(rng, 1.2, 2.8))),
        ("y1", c(unif(rng, 1.15, 1.6))),
        ("y2", c(unif(rng, 1.3, 1.9))),
    ])
}

fn kernel_quad(
    p: &Point,
    cfg: &CheckConfig,
    from: f64,
) -> Result<QuadResult, EvalError> {
    let (a, g) = (p.c("alpha"), p.c("gamma"));
    let spec = spec_of(cfg)
        .singular_endpoints(a.re - 0.5, 0.0)
        .decay(pdecay(-(2.0 * g.re + 3.0)));
    semi_inf(&|y3| kernel_q_integrand(p, y3), from, &spec)
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    // --- F10: double-integral product forms

    v.push(IdentityDescriptor {
        id: "F10.doubleQQ",
        family: "F10",
        params: &["alpha", "beta", "gamma", "y1", "y2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            real_gt1(&mut v, p.c("y1"), m, "y1");
            real_gt1(&mut v, p.c("y2"), m, "y2");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, (b + g).re > -1.0 + m,
                "Re(beta + gamma) must exceed -1 for the inner tail");
            req(&mut v, (a + g - b).re > -1.0 + m,
                "Re(alpha + gamma - beta) must exceed -1 for the outer tail");
            req(&mut v, not_neg_int(g, m), "gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.7, 1.3))),
                ("beta", c(unif(rng, 0.25, 0.6))),
                ("gamma", c(unif(rng, 0.3, 1.2))),
                ("y1", c(unif(rng, 1.25, 1.6))),
                ("y2", c(unif(rng, 1.3, 1.8))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (y1, y2) = (p.re("y1"), p.re("y2"));
            let lhs = kernel_lhs(p)?;
            let pre = gamma_frac(&[b, a + g + 1.0], &[2.0 * b, g + 1.0, a - b])?
                .scale(rpow(2.0, 2.0 * b));
            let ospec = spec_of(cfg)
                .singular_endpoints(b.re - 0.5, 0.0)
                .decay(pdecay((b - a - g).re - 2.0));
            let ispec = spec_of(cfg)
                .singular_endpoints((a - b).re - 1.0, 0.0)
                .decay(pdecay(-(2.0 * (b + g).re + 3.0)));
            let f = |u: f64, w: f64| -> Result<Complex64, EvalError> {
                let z = kernel_z(y1, y2, u, w);
                let q = jq(a, b, g, z)?;
                Ok(q.value
                    * rpow(w, 2.0 * b + 1.0)
                    * rpow(w * w - 1.0, a - b - 1.0)
                    * rpow(u * u - 1.0, b - 0.5))
            };
            let r = integrate_2d(
                &f,
                Axis::SemiInfinite(1.0),
                Axis::SemiInfinite(1.0),
                &ospec,
                &ispec,
            )
            .map_err(map_quad_err)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F10.doubleQQx",
        family: "F10",
        params: &["alpha", "beta", "gamma", "lambda", "mu", "x", "y"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            real_gt1(&mut v, p.c("x"), m, "x");
            real_gt1(&mut v, p.c("y"), m, "y");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, not_nonpos_int(a - b + l, m),
                "alpha - beta + lambda must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g - l - mu + 1.0, m),
                "gamma - lambda - mu must avoid the negative integers");
            req(&mut v, (2.0 * (b + g) - 2.0 * l - mu).re > -2.0 + m,
                "inner tail requires Re(2 beta + 2 gamma - 2 lambda - mu) > -2");
            req(&mut v, (a + g - b - mu).re > -1.0 + m,
                "outer tail requires Re(alpha + gamma - beta - mu) > -1");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g - l + 1.0, m),
                "beta + gamma - lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.8, 1.4))),
                ("beta", c(unif(rng, 0.3, 0.6))),
                ("gamma", c(unif(rng, 0.4, 1.1))),
                ("lambda", c(unif(rng, 0.1, 0.5))),
                ("mu", c(unif(rng, 0.1, 0.5))),
                ("x", c(unif(rng, 1.3, 2.2))),
                ("y", c(unif(rng, 1.4, 2.6))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            let (x, y) = (p.re("x"), p.re("y"));
            let shifted = JacobiOrder::new(a + 2.0 * l + mu, b + mu, g - l - mu);
            let qx = jacobi_q(shifted, CutPoint::off_cut(c(x)), Representation::Auto)?;
            let qy = jacobi_q(shifted, CutPoint::off_cut(c(y)), Representation::Auto)?;
            let front = rpow((x - 1.0) * (y - 1.0), l + 0.5 * mu)
                * rpow((x + 1.0) * (y + 1.0), 0.5 * mu);
            let lhs = qx.mul(&qy).scale(front);
            let pre = gamma_frac(
                &[b, l + 1.0, mu + 1.0, a + g + l + 1.0, b + g - l + 1.0, a + b + g + 1.0],
                &[b + g + 1.0, 2.0 * b + mu, a - b + l, g - l - mu + 1.0,
                  a + b + g + l + mu + 1.0],
            )?
            .scale(rpow(2.0, 2.0 * b + 2.0 * l + 2.0 * mu));
            let ospec = spec_of(cfg)
                .singular_endpoints(b.re - 0.5, 0.0)
                .decay(pdecay((mu + b - a - g).re - 2.0));
            let ispec = spec_of(cfg)
                .singular_endpoints((a - b).re - 1.0, 0.0)
                .decay(pdecay((2.0 * l + mu - 2.0 * b - 2.0 * g).re - 3.0));
            let inner_ord = JacobiOrder::new(a - b - 1.0, b + mu, l);
            let f = |u: f64, w: f64| -> Result<Complex64, EvalError> {
                let wv = kernel_w(x, y, u, w);
                let q = jq(a, b, g, wv)?;
                let pw = jacobi_p(
                    inner_ord,
                    CutPoint::off_cut(c(2.0 * w * w - 1.0)),
                    Representation::Auto,
                )?;
                let cu = gegenbauer_c(mu, b, CutPoint::off_cut(c(u)))?;
                Ok(q.value
                    * pw.value
                    * cu.value
                    * rpow(w, 2.0 * b + mu + 1.0)
                    * rpow(w * w - 1.0, a - b - 1.0)
                    * rpow(u * u - 1.0, b - 0.5))
            };
            let r = integrate_2d(
                &f,
                Axis::SemiInfinite(1.0),
                Axis::SemiInfinite(1.0),
                &ospec,
                &ispec,
            )
            .map_err(map_quad_err)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    // --- F11: kernel single-integral form

    v.push(IdentityDescriptor {
        id: "F11.kernelQQ.Q",
        family: "F11",
        params: &["alpha", "beta", "gamma", "y1", "y2"],
        default_tol: 1e-6,
        constraints: kernel_constraints,
        sample: kernel_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let lhs = kernel_lhs(p)?;
            let pre = kernel_q_prefactor(p)?;
            let lower = qq_lower_limit(p.re("y1"), p.re("y2"));
            let r = kernel_quad(p, cfg, lower)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F11.kernelQQ.D",
        family: "F11",
        params: &["alpha", "beta", "gamma", "y1", "y2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = kernel_constraints(p, m);
            req(&mut v, not_nonpos_int(p.c("beta") + 0.5, m),
                "beta must stay away from the negative half-integers");
            v
        },
        sample: kernel_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (y1, y2) = (p.re("y1"), p.re("y2"));
            let lhs = kernel_lhs(p)?;
            let pre = gamma_frac(&[b + 0.5, a + g + 1.0], &[g + 1.0, a + b])?.scale(
                phase(-(b + 0.5))
                    * PI.sqrt()
                    * rpow(2.0, a + b)
                    * rpow(y1 * y2, a - b - 1.0)
                    * rpow((y1 * y1 - 1.0) * (y2 * y2 - 1.0), -a),
            );
            let spec = spec_of(cfg)
                .singular_endpoints(a.re - 0.5, 0.0)
                .decay(pdecay(-(2.0 * g.re + 3.0)));
            let f = |y3: f64| -> Result<Complex64, EvalError> {
                let av = kernel_a(y1, y2, y3);
                let arg = av / (av * av - 1.0).sqrt();
                let q3 = jq(a, b, g, 2.0 * y3 * y3 - 1.0)?;
                let d = gegenbauer_d(a - b - 1.0, b + 0.5, CutPoint::off_cut(c(arg)))?;
                Ok(q3.value
                    * d.value
                    * rpow(y3, a + b)
                    * rpow(av * av - 1.0, 0.5 * (a - b - 1.0)))
            };
            let lower = qq_lower_limit(y1, y2);
            let r = semi_inf(&f, lower, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    // the historical (wrong) lower limit: the extra piece over
    // (1, corrected lower limit) is added to the correct integral, so the
    // check converges to the erroneous value and fails cleanly
    v.push(IdentityDescriptor {
        id: "F11.kernelQQ.control",
        family: "F11",
        params: &["alpha", "beta", "gamma", "y1", "y2"],
        default_tol: 1e-6,
        constraints: kernel_constraints,
        sample: kernel_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let lhs = kernel_lhs(p)?;
            let pre = kernel_q_prefactor(p)?;
            let (y1, y2) = (p.re("y1"), p.re("y2"));
            let s = ((y1 * y1 - 1.0) * (y2 * y2 - 1.0)).sqrt();
            // A crosses 1 at y1 y2 -/+ s and sits below 1 in between
            let (cross, lower) = (y1 * y2 - s, qq_lower_limit(y1, y2));
            let main = kernel_quad(p, cfg, lower)?;
            let a = p.c("alpha");
            let e = a.re - 0.5;
            let g = |y3| kernel_q_integrand(p, y3);
            let left = finite(&g, 1.0, cross, &spec_of(cfg).singular_endpoints(0.0, e))?;
            let mid = finite(&g, cross, lower, &spec_of(cfg).singular_endpoints(e, e))?;
            let total = QuadResult {
                value: main.value + left.value + mid.value,
                err_est: main.err_est + left.err_est + mid.err_est,
                evaluations: main.evaluations + left.evaluations + mid.evaluations,
                converged: main.converged && left.converged && mid.converged,
            };
            Ok(quad_evaluation(lhs, pre, total))
        },
    });

    // --- F11.lemD: the finite integral behind the kernel reduction

    let lemd_constraints: super::ConstraintFn = |p: &Point, m| {
        let mut v = Vec::new();
        let (a, b) = (p.c("alpha"), p.c("beta"));
        real_gt1(&mut v, p.c("z"), m, "z");
        req(&mut v, b.re > m, "Re beta must be positive");
        req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
        v
    };
    let lemd_sample: super::SampleFn = |rng| {
        let b = unif(rng, 0.1, 0.9);
        Point(vec![
            ("alpha", c(b + unif(rng, 0.3, 1.5))),
            ("beta", c(b)),
            ("z", c(unif(rng, 1.3, 3.0))),
        ])
    };

    fn lemd_quad(p: &Point, cfg: &CheckConfig) -> Result<QuadResult, EvalError> {
        let (a, b) = (p.c("alpha"), p.c("beta"));
        let z = p.re("z");
        let spec = spec_of(cfg).singular_endpoints(b.re - 0.5, (a - b).re - 1.0);
        finite(
            &|w| Ok(rpow(w * w - 1.0, b - 0.5) * rpow(z - w, a - b - 1.0)),
            1.0,
            z,
            &spec,
        )
    }

    v.push(IdentityDescriptor {
        id: "F11.lemD.gauss",
        family: "F11.lemD",
        params: &["alpha", "beta", "z"],
        default_tol: 1e-6,
        constraints: lemd_constraints,
        sample: lemd_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b) = (p.c("alpha"), p.c("beta"));
            let z = p.re("z");
            let hyp = hyp2f1_reg(0.5 - b, b + 0.5, a + 0.5, c(0.5 * (1.0 - z)))?;
            let lhs = gamma_frac(&[b + 0.5, a - b], &[])?
                .scale(rpow(2.0, b - 0.5) * rpow(z - 1.0, a - 0.5))
                .mul(&hyp);
            let r = lemd_quad(p, cfg)?;
            Ok(quad_evaluation(lhs, crate::value::ComplexValue::exact(c(1.0)), r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F11.lemD.legQ",
        family: "F11.lemD",
        params: &["alpha", "beta", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b) = (p.c("alpha"), p.c("beta"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, not_nonpos_int(a + b, m),
                "alpha + beta must avoid the nonpositive integers");
            v
        },
        sample: lemd_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b) = (p.c("alpha"), p.c("beta"));
            let z = p.re("z");
            let arg = z / (z * z - 1.0).sqrt();
            let leg = legendre_q(a - 1.0, b, CutPoint::off_cut(c(arg)))?;
            let lhs = gamma_frac(&[b + 0.5, a - b], &[a + b])?
                .scale(
                    phase(-b) * rpow(2.0, b) / PI.sqrt()
                        * rpow(z * z - 1.0, 0.5 * (a - 1.0)),
                )
                .mul(&leg);
            let r = lemd_quad(p, cfg)?;
            Ok(quad_evaluation(lhs, crate::value::ComplexValue::exact(c(1.0)), r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F11.lemD.gegD",
        family: "F11.lemD",
        params: &["alpha", "beta", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b) = (p.c("alpha"), p.c("beta"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, off_int(b - 0.5, m),
                "beta must stay away from the half-odd integers");
            v
        },
        sample: lemd_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b) = (p.c("alpha"), p.c("beta"));
            let z = p.re("z");
            let arg = z / (z * z - 1.0).sqrt();
            let d = gegenbauer_d(a + b - 1.0, 0.5 - b, CutPoint::off_cut(c(arg)))?;
            let fac = -PI * phase(b - 0.5) / (PI * (b - 0.5)).sin()
                * rpow(z * z - 1.0, 0.5 * (a + b - 1.0));
            let lhs = d.scale(fac);
            let r = lemd_quad(p, cfg)?;
            Ok(quad_evaluation(lhs, crate::value::ComplexValue::exact(c(1.0)), r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F11.lemD.pfaff",
        family: "F11.lemD",
        params: &["alpha", "beta", "z"],
        default_tol: 1e-6,
        constraints: lemd_constraints,
        sample: lemd_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b) = (p.c("alpha"), p.c("beta"));
            let z = p.re("z");
            let hyp = hyp2f1_reg(0.5 - b, a - b, a + 0.5, c((z - 1.0) / (z + 1.0)))?;
            let lhs = gamma_frac(&[b + 0.5, a - b], &[])?
                .scale(rpow(z - 1.0, a - 0.5) * rpow(z + 1.0, b - 0.5))
                .mul(&hyp);
            let r = lemd_quad(p, cfg)?;
            Ok(quad_evaluation(lhs, crate::value::ComplexValue::exact(c(1.0)), r))
        },
    });

    // --- F14: Laplace-type representations

    v.push(IdentityDescriptor {
        id: "F14.laplaceQ00",
        family: "F14",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, (b + g).re > -1.0 + m,
                "inner tail requires Re(beta + gamma) > -1");
            req(&mut v, (a + g - b).re > -1.0 + m,
                "outer tail requires Re(alpha + gamma - beta) > -1");
            req(&mut v, not_neg_int(g, m), "gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.8, 1.4))),
                ("beta", c(unif(rng, 0.3, 0.6))),
                ("gamma", c(unif(rng, 0.4, 1.3))),
                ("z", c(unif(rng, 1.3, 2.5))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let lhs = jq(a, b, g, z)?;
            let pre = gamma_frac(&[b, a + g + 1.0], &[a - b, 2.0 * b, g + 1.0])?
                .scale(rpow(2.0, 2.0 * b));
            let ospec = spec_of(cfg)
                .singular_endpoints(b.re - 0.5, 0.0)
                .decay(pdecay((b - a - g).re - 2.0));
            let ispec = spec_of(cfg)
                .singular_endpoints((a - b).re - 1.0, 0.0)
                .decay(pdecay(-(2.0 * (b + g).re + 3.0)));
            let sq = (z * z - 1.0).sqrt();
            let s = a + b + g + 1.0;
            let f = |x: f64, w: f64| -> Result<Complex64, EvalError> {
                let den = z + sq * x * w + 0.5 * (z - 1.0) * (w * w - 1.0);
                Ok(rpow(w, 2.0 * b + 1.0)
                    * rpow(w * w - 1.0, a - b - 1.0)
                    * rpow(x * x - 1.0, b - 0.5)
                    * rpow(den, -s))
            };
            let r = integrate_2d(
                &f,
                Axis::SemiInfinite(1.0),
                Axis::SemiInfinite(1.0),
                &ospec,
                &ispec,
            )
            .map_err(map_quad_err)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F14.laplaceQQ",
        family: "F14",
        params: &["alpha", "beta", "gamma", "lambda", "mu", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (a - b).re > m, "Re(alpha - beta) must be positive");
            req(&mut v, not_nonpos_int(a - b + l, m),
                "alpha - beta + lambda must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g - l - mu + 1.0, m),
                "gamma - lambda - mu must avoid the negative integers");
            req(&mut v, (2.0 * (b + g) - 2.0 * l - mu).re > -2.0 + m,
                "inner tail requires Re(2 beta + 2 gamma - 2 lambda - mu) > -2");
            req(&mut v, (a + g - b - mu).re > -1.0 + m,
                "outer tail requires Re(alpha + gamma - beta - mu) > -1");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + b + g + 1.0, m),
                "alpha + beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g - l + 1.0, m),
                "beta + gamma - lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.8, 1.4))),
                ("beta", c(unif(rng, 0.3, 0.6))),
                ("gamma", c(unif(rng, 0.4, 1.1))),
                ("lambda", c(unif(rng, 0.1, 0.5))),
                ("mu", c(unif(rng, 0.1, 0.5))),
                ("z", c(unif(rng, 1.3, 2.5))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (l, mu) = (p.c("lambda"), p.c("mu"));
            let z = p.re("z");
            let shifted = JacobiOrder::new(a + 2.0 * l + mu, b + mu, g - l - mu);
            let q = jacobi_q(shifted, CutPoint::off_cut(c(z)), Representation::Auto)?;
            let lhs = q.scale(rpow(z - 1.0, l + 0.5 * mu) * rpow(z + 1.0, 0.5 * mu));
            let pre = gamma_frac(
                &[b, l + 1.0, mu + 1.0, a + g + 1.0, a + b + g + 1.0],
                &[a - b + l, 2.0 * b + mu, g - l - mu + 1.0, a + b + g + l + mu + 1.0],
            )?
            .scale(rpow(2.0, 2.0 * b + l + mu));
            let ospec = spec_of(cfg)
                .singular_endpoints(b.re - 0.5, 0.0)
                .decay(pdecay((mu + b - a - g).re - 2.0));
            let ispec = spec_of(cfg)
                .singular_endpoints((a - b).re - 1.0, 0.0)
                .decay(pdecay((2.0 * l + mu - 2.0 * b - 2.0 * g).re - 3.0));
            let sq = (z * z - 1.0).sqrt();
            let s = a + b + g + 1.0;
            let inner_ord = JacobiOrder::new(a - b - 1.0, b + mu, l);
            let f = |x: f64, w: f64| -> Result<Complex64, EvalError> {
                let den = z + sq * x * w + 0.5 * (z - 1.0) * (w * w - 1.0);
                let pw = jacobi_p(
                    inner_ord,
                    CutPoint::off_cut(c(2.0 * w * w - 1.0)),
                    Representation::Auto,
                )?;
                let cx = gegenbauer_c(mu, b, CutPoint::off_cut(c(x)))?;
                Ok(pw.value
                    * cx.value
                    * rpow(w, 2.0 * b + mu + 1.0)
                    * rpow(w * w - 1.0, a - b - 1.0)
                    * rpow(x * x - 1.0, b - 0.5)
                    * rpow(den, -s))
            };
            let r = integrate_2d(
                &f,
                Axis::SemiInfinite(1.0),
                Axis::SemiInfinite(1.0),
                &ospec,
                &ispec,
            )
            .map_err(map_quad_err)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });
}
