//! Integral representations of a single function in terms of itself: the
//! function reappears under the integral sign against an algebraic kernel
//! obtained by collapsing one argument of the corresponding product formula.

use super::helpers::*;
use super::{unif, CheckConfig, IdentityDescriptor, Point};
use crate::geometry::{kernel_e, kernel_g, kernel_u};
use crate::gegenbauer::{gegenbauer_c, gegenbauer_c_trig, gegenbauer_d};
use crate::jacobi::{jacobi_p, jacobi_p_trig, jacobi_q, JacobiOrder, Representation};
use crate::legendre::{ferrers_p, legendre_p, legendre_q};
use crate::value::{ComplexValue, CutPoint, EvalError};
use num_complex::Complex64;
use std::f64::consts::PI;

fn real_gt1(v: &mut Vec<String>, z: Complex64, m: f64, what: &str) {
    if !(z.im == 0.0 && z.re > 1.0 + m) {
        v.push(format!("{what} must be real and > 1"));
    }
}

fn in_unit(v: &mut Vec<String>, x: Complex64, m: f64, what: &str) {
    if !(x.im == 0.0 && x.re > m && x.re < 1.0 - m) {
        v.push(format!("{what} must be real and inside (0, 1)"));
    }
}

fn pdecay(p: f64) -> crate::quad::TailDecay {
    crate::quad::TailDecay::Power(p.min(-1.2))
}

// Order-zero Legendre function of an argument that crosses 1: rounding can
// push a kernel value slightly below the branch point, where the off-cut
// evaluator balks. At order zero the function continues analytically through
// 1, so fall back to the Ferrers form there.
fn leg_p0(deg: Complex64, x: f64) -> Result<ComplexValue, EvalError> {
    if x == 1.0 {
        Ok(ComplexValue::exact(c(1.0)))
    } else if x < 1.0 {
        ferrers_p(deg, c(0.0), x)
    } else {
        legendre_p(deg, c(0.0), CutPoint::off_cut(c(x)))
    }
}

// Shared pieces of the two second-kind self-representations, which differ
// only in the function multiplying the kernel weight.

fn qsingle_constraints(p: &Point, m: f64) -> Vec<String> {
    let mut v = Vec::new();
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    real_gt1(&mut v, p.c("z"), m, "z");
    req(&mut v, a.re > m, "Re alpha must be positive");
    req(&mut v, g.re > -1.0 + m, "Re gamma must exceed -1");
    req(&mut v, (b + g).re > -1.0 + m, "Re(beta + gamma) must exceed -1");
    req(&mut v, not_nonpos_int(b + 0.5, m),
        "beta must stay away from the negative half-integers");
    req(&mut v, not_nonpos_int(a + g + 1.0, m),
        "alpha + gamma must avoid the negative integers");
    req(&mut v, not_nonpos_int(a + b + g + 1.0, m),
        "alpha + beta + gamma must avoid the negative integers");
    req(&mut v, not_nonpos_int(a + b, m),
        "alpha + beta must avoid the nonpositive integers");
    v
}

fn qsingle_sample(rng: &mut rand_chacha::ChaCha8Rng) -> Point {
    Point(vec![
        ("alpha", c(unif(rng, 0.6, 1.2))),
        ("beta", c(unif(rng, 0.15, 0.8))),
        ("gamma", c(unif(rng, 0.2, 1.2))),
        ("z", c(unif(rng, 1.2, 1.9))),
    ])
}

fn qsingle_lhs(p: &Point) -> Result<ComplexValue, EvalError> {
    let ord = JacobiOrder::new(p.c("alpha"), p.c("beta"), p.c("gamma"));
    let z = p.re("z");
    jacobi_q(
        ord,
        CutPoint::off_cut(c(2.0 * z * z - 1.0)),
        Representation::Auto,
    )
}

fn qsingle_quad(
    p: &Point,
    cfg: &CheckConfig,
    f: &dyn Fn(f64) -> Result<Complex64, EvalError>,
) -> Result<crate::quad::QuadResult, EvalError> {
    let (a, g) = (p.c("alpha"), p.c("gamma"));
    let spec = spec_of(cfg)
        .singular_endpoints(2.0 * a.re - 1.0, 0.0)
        .decay(pdecay(-(2.0 * g.re + 3.0)));
    semi_inf(f, p.re("z"), &spec)
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    v.push(IdentityDescriptor {
        id: "F16.qSingleD",
        family: "F16",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-6,
        constraints: qsingle_constraints,
        sample: qsingle_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let lhs = qsingle_lhs(p)?;
            let pre = gamma_frac(
                &[b + 0.5, a + g + 1.0, a + b + g + 1.0],
                &[a, g + 1.0, a + b, b + g + 1.0],
            )?
            .scale(
                phase(-(b + 0.5))
                    * PI.sqrt()
                    * rpow(2.0, a + b + 1.0)
                    * rpow(z, a - b - 1.0)
                    * rpow(z * z - 1.0, -a),
            );
            let ord = JacobiOrder::new(a, b, g);
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let e = kernel_e(z, w);
                // E^2 - 1 = ((w^2 - z^2) / (2 w z))^2 exactly
                let e2m1 = ((w * w - z * z) / (2.0 * w * z)).powi(2);
                let q3 = jacobi_q(
                    ord,
                    CutPoint::off_cut(c(2.0 * w * w - 1.0)),
                    Representation::Auto,
                )?;
                let d = gegenbauer_d(
                    a - b - 1.0,
                    b + 0.5,
                    CutPoint::off_cut(c(e / e2m1.sqrt())),
                )?;
                Ok(q3.value
                    * d.value
                    * rpow(w, a + b)
                    * rpow(e2m1, 0.5 * (a - b - 1.0)))
            };
            let r = qsingle_quad(p, cfg, &f)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.qSingleQ",
        family: "F16",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-6,
        constraints: qsingle_constraints,
        sample: qsingle_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let lhs = qsingle_lhs(p)?;
            let pre = gamma_frac(
                &[a + g + 1.0, a + b + g + 1.0],
                &[a, g + 1.0, a + b, b + g + 1.0],
            )?
            .scale(
                phase(b)
                    * rpow(2.0, a + 1.0)
                    * rpow(z, a - b - 1.0)
                    * rpow(z * z - 1.0, -a),
            );
            let ord = JacobiOrder::new(a, b, g);
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let e = kernel_e(z, w);
                // E^2 - 1 = ((w^2 - z^2) / (2 w z))^2 exactly
                let e2m1 = ((w * w - z * z) / (2.0 * w * z)).powi(2);
                let q3 = jacobi_q(
                    ord,
                    CutPoint::off_cut(c(2.0 * w * w - 1.0)),
                    Representation::Auto,
                )?;
                let leg = legendre_q(a - 1.0, b, CutPoint::off_cut(c(e / e2m1.sqrt())))?;
                Ok(q3.value * leg.value * rpow(w, a + b) * rpow(e2m1, 0.5 * (a - 1.0)))
            };
            let r = qsingle_quad(p, cfg, &f)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.pSingle",
        family: "F16",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, (a + g).re > m, "Re(alpha + gamma) must be positive");
            req(&mut v, (a + b + g).re > m,
                "Re(alpha + beta + gamma) must be positive");
            req(&mut v, (a + b + 2.0 * g).re < -1.0 - m,
                "Re(alpha + beta + 2 gamma) must stay below -1");
            req(&mut v, off_int(g, m), "gamma must stay away from the integers");
            req(&mut v, off_int(b + g, m),
                "beta + gamma must stay away from the integers");
            req(&mut v, off_int(a + 2.0 * b + 2.0 * g, m),
                "alpha + 2 beta + 2 gamma must stay away from the integers");
            req(&mut v, not_nonpos_int(a + 2.0 * g + 2.0, m),
                "alpha + 2 gamma must stay away from the integers below -1");
            v
        },
        sample: |rng| {
            let a = unif(rng, 2.6, 2.9);
            let b = unif(rng, 0.2, 0.5);
            let u = unif(rng, 0.05, 0.55);
            Point(vec![
                ("alpha", c(a)),
                ("beta", c(b)),
                ("gamma", c(0.5 * (-1.1 - u - a - b))),
                ("z", c(unif(rng, 1.3, 1.9))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let ord = JacobiOrder::new(a, b, g);
            let lhs = jacobi_p(
                ord,
                CutPoint::off_cut(c(2.0 * z * z - 1.0)),
                Representation::Auto,
            )?;
            let s = a + 2.0 * b + 2.0 * g + 2.0;
            let trig = PI * (PI * (a + 2.0 * b + 2.0 * g)).sin()
                / ((PI * g).sin() * (PI * (b + g)).sin());
            let pre = gamma_frac(
                &[a + 2.0 * g + 2.0, a + 2.0 * b + 2.0 * g + 2.0],
                &[g + 1.0, a + g + 1.0, b + g + 1.0, a + b + g + 1.0],
            )?
            .scale(
                trig * rpow(2.0, -(2.0 * a + 2.0 * b + 4.0 * g + 2.0))
                    * rpow(z, -s)
                    * rpow(z * z - 1.0, -0.5 * a),
            );
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let u = kernel_u(z, w);
                let p3 = jacobi_p(
                    ord,
                    CutPoint::off_cut(c(2.0 * w * w - 1.0)),
                    Representation::Auto,
                )?;
                let geg = gegenbauer_c(
                    a + 2.0 * g + 1.0,
                    -(a + b + 2.0 * g + 1.0),
                    CutPoint::off_cut(c(u)),
                )?;
                // u^2 - 1 cancels catastrophically as w -> z; the factored
                // form stays exact there
                let u2m1 = ((w * w - z * z)
                    / (2.0 * z * w * ((z * z - 1.0) * (w * w - 1.0)).sqrt()))
                .powi(2);
                Ok(p3.value
                    * geg.value
                    * rpow(w * w - 1.0, 0.5 * a - 1.0)
                    * rpow(w, -(a + 2.0 * g + 1.0))
                    * rpow(u2m1, -(a + b + 2.0 * g + 1.5)))
            };
            let spec = spec_of(cfg).singular_endpoints(
                (a + b + g).re,
                -(2.0 * a + 2.0 * b + 4.0 * g + 3.0).re,
            );
            let r = finite(&f, 1.0, z, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.trigPsingle",
        family: "F16",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, b.re > m, "Re beta must be positive");
            req(&mut v, (b + g).re < -m, "Re(beta + gamma) must be negative");
            req(&mut v, (a + g).re > -1.0 + m, "Re(alpha + gamma) must exceed -1");
            req(&mut v, off_int(g, m), "gamma must stay away from the integers");
            req(&mut v, off_int(b + g, m),
                "beta + gamma must stay away from the integers");
            req(&mut v, not_nonpos_int(a + 2.0 * g + 2.0, m),
                "alpha + 2 gamma must stay away from the integers below -1");
            req(&mut v, not_nonpos_int(a + b + g + 1.0, m),
                "alpha + beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + 2.0 * b + 2.0 * g + 1.0, m),
                "alpha + 2 beta + 2 gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            let b = unif(rng, 0.1, 0.35);
            Point(vec![
                ("alpha", c(unif(rng, 0.5, 1.2))),
                ("beta", c(b)),
                ("gamma", c(-b - unif(rng, 0.1, 0.5))),
                ("x", c(unif(rng, 0.15, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let ord = JacobiOrder::new(a, b, g);
            let lhs = jacobi_p_trig(ord, c(2.0 * x * x - 1.0))?;
            let trig = (PI * (b + g)).sin() / (PI * g).sin();
            let pre = gamma_frac(
                &[a + 2.0 * g + 2.0, b + g + 1.0, a + b + g + 1.0],
                &[g + 1.0, a + g + 1.0, a + 2.0 * b + 2.0 * g + 1.0],
            )?
            .scale(
                trig * rpow(2.0, 2.0 * b)
                    * rpow(x, -2.0 * b)
                    * rpow(1.0 - x * x, -0.5 * a),
            );
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let gk = kernel_g(x, t);
                let p3 = jacobi_p_trig(ord, c(2.0 * t * t - 1.0))?;
                let geg = gegenbauer_c(a + 2.0 * g + 1.0, b, CutPoint::off_cut(c(gk)))?;
                // G^2 - 1 = (t^2 - x^2)^2 / (4 (1-x^2)(1-t^2)) exactly; the
                // direct difference collapses to noise as t -> x
                let g2m1 = ((t * t - x * x)
                    / (2.0 * ((1.0 - x * x) * (1.0 - t * t)).sqrt()))
                .powi(2);
                Ok(p3.value
                    * geg.value
                    * t
                    * rpow(1.0 - t * t, 0.5 * a - 1.0)
                    * rpow(g2m1, b - 0.5))
            };
            // at t -> 1 the Gegenbauer factor of the diverging kernel splits
            // into G^{lambda} and G^{-lambda-2 alpha} branches, offset by
            // alpha + beta + 2 gamma + 1 in powers of 1 - t
            let spec = spec_of(cfg)
                .singular_endpoints(2.0 * b.re - 1.0, -(b.re + g.re + 1.0))
                .endpoint_steps(1.0, (a + b + 2.0 * g + 1.0).re.min(1.0));
            let r = finite(&f, x, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.legQsingle",
        family: "F16",
        params: &["nu", "mu", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, mu.re > m, "Re mu must be positive");
            req(&mut v, (nu - mu).re > -1.0 + m, "Re(nu - mu) must exceed -1");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * mu, m),
                "2 mu must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, 0.2, 1.2))),
                ("mu", c(unif(rng, 0.15, 0.7))),
                ("z", c(unif(rng, 1.2, 2.2))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let z = p.re("z");
            let lhs = legendre_q(nu, mu, CutPoint::off_cut(c(z)))?;
            let pre = gamma_frac(&[nu + mu + 1.0], &[2.0 * mu, nu - mu + 1.0])?
                .scale(rpow(z * z - 1.0, -0.5 * mu));
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let q3 = legendre_q(nu, mu, CutPoint::off_cut(c(w)))?;
                Ok(q3.value
                    * rpow(w - z, 2.0 * mu - 1.0)
                    * rpow(w * w - 1.0, -0.5 * mu))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(2.0 * mu.re - 1.0, 0.0)
                .decay(pdecay((mu - nu).re - 2.0));
            let r = semi_inf(&f, z, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.gegCsingle",
        family: "F16",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, (l + 2.0 * a).re > m,
                "Re(lambda + 2 alpha) must be positive");
            req(&mut v, (l + a).re < -m, "Re(lambda + alpha) must be negative");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            req(&mut v, off_int(2.0 * (l + a), m),
                "2(lambda + alpha) must stay away from the integers");
            req(&mut v, not_nonpos_int(2.0 * l + 2.0 * a + 1.0, m),
                "2 lambda + 2 alpha must stay away from the integers below -1");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            let a = unif(rng, 0.5, 0.9);
            Point(vec![
                ("lambda", c(-a - unif(rng, 0.05, 0.42))),
                ("alpha", c(a)),
                ("z", c(unif(rng, 1.3, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let lhs = gegenbauer_c(l, a, CutPoint::off_cut(c(z)))?;
            let trig = (2.0 * PI * (l + a)).sin() / (PI * l).sin();
            let pre = gamma_frac(&[2.0 * l + 2.0 * a + 1.0], &[l + 1.0, l + 2.0 * a])?
                .scale(trig * rpow(z * z - 1.0, 0.5 * (l + 1.0)));
            let s = 0.5 * (2.0 * l + 2.0 * a + 1.0);
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let c3 = gegenbauer_c(l, a, CutPoint::off_cut(c(w)))?;
                // den is (z sqrt(w^2-1) - w sqrt(z^2-1))^2, which loses all
                // digits as w -> z; rationalizing the difference keeps it exact
                let den = ((w * w - z * z)
                    / (z * (w * w - 1.0).sqrt() + w * (z * z - 1.0).sqrt()))
                .powi(2);
                Ok(c3.value * rpow(w * w - 1.0, 0.5 * (l + 2.0 * a - 2.0)) * rpow(den, -s))
            };
            // den contains sqrt(w^2 - 1), so the expansion at w = 1 moves in
            // half-integer powers
            let spec = spec_of(cfg)
                .singular_endpoints(
                    0.5 * (l.re + 2.0 * a.re - 2.0),
                    -(2.0 * l.re + 2.0 * a.re + 1.0),
                )
                .endpoint_steps(0.5, 1.0);
            let r = finite(&f, 1.0, z, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.legPsingle",
        family: "F16",
        params: &["nu", "mu", "z"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m, "z");
            req(&mut v, nu.re < -0.5 - m, "Re nu must stay below -1/2");
            req(&mut v, (nu + mu).re > -1.0 + m, "Re(nu + mu) must exceed -1");
            req(&mut v, off_int(2.0 * nu, m),
                "2 nu must stay away from the integers");
            req(&mut v, off_int(mu - nu, m),
                "mu - nu must stay away from the integers");
            req(&mut v, not_nonpos_int(2.0 * nu + 2.0, m),
                "2 nu must stay away from the integers below -1");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, -0.85, -0.55))),
                ("mu", c(unif(rng, 0.3, 1.2))),
                ("z", c(unif(rng, 1.3, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let z = p.re("z");
            let lhs = legendre_p(nu, -mu, CutPoint::off_cut(c(z)))?;
            let trig = (2.0 * PI * nu).sin() / (PI * (mu - nu)).sin();
            let pre = gamma_frac(
                &[2.0 * nu + 2.0],
                &[nu + mu + 1.0, nu - mu + 1.0],
            )?
            .scale(trig * rpow(z * z - 1.0, 0.5 * (nu + 1.0)));
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let p3 = legendre_p(nu, -mu, CutPoint::off_cut(c(w)))?;
                let s12 = ((z * z - 1.0) * (w * w - 1.0)).sqrt();
                let inner = z * w - s12;
                // inner - 1 = (z - w)^2 / (z w - 1 + s12) avoids the w -> z
                // cancellation in inner^2 - 1
                let inner_m1 = (z - w) * (z - w) / (z * w - 1.0 + s12);
                // the integrand weight is (w^2-1)^{(nu-1)/2}, not the
                // (nu+1)/2 of the prefactor; substituting the Gegenbauer
                // self-representation confirms the asymmetry
                Ok(p3.value
                    * rpow(w * w - 1.0, 0.5 * (nu - 1.0))
                    * rpow(inner_m1 * (inner + 1.0), -(nu + 1.0)))
            };
            // inner contains sqrt(w^2 - 1): half-integer expansion at w = 1
            let spec = spec_of(cfg)
                .singular_endpoints(0.5 * (nu.re + mu.re - 1.0), -(2.0 * nu.re + 2.0))
                .endpoint_steps(0.5, 1.0);
            let r = finite(&f, 1.0, z, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.trigCsingle",
        family: "F16",
        params: &["lambda", "alpha", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, l.re < -m, "Re lambda must be negative");
            req(&mut v, (l + 2.0 * a).re > m,
                "Re(lambda + 2 alpha) must be positive");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            req(&mut v, not_nonpos_int(0.5 * l + a + 0.5, m),
                "lambda/2 + alpha + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * l + 1.0, m),
                "lambda/2 must avoid the negative integers");
            req(&mut v, not_nonpos_int(0.5 * l + a, m),
                "lambda/2 + alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * (l + 1.0), m),
                "(lambda + 1)/2 must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", c(unif(rng, -0.45, -0.05))),
                ("alpha", c(unif(rng, 0.6, 1.0))),
                ("x", c(unif(rng, 0.15, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let x = p.re("x");
            let lhs = gegenbauer_c_trig(l, a, x)?;
            let trig = -2.0 * (0.5 * PI * l).tan();
            let pre = gamma_frac(
                &[0.5 * l + a + 0.5, 0.5 * l + 1.0],
                &[0.5 * l + a, 0.5 * (l + 1.0)],
            )?
            .scale(trig);
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let gk = kernel_g(x, t);
                let c3 = gegenbauer_c_trig(l, a, t)?;
                let leg = leg_p0(l + a - 0.5, gk)?;
                Ok(c3.value * leg.value * rpow(1.0 - t * t, 0.5 * a - 1.25))
            };
            // the diverging-kernel Legendre factor carries both G^{lambda +
            // alpha - 1/2} and G^{1/2 - lambda - alpha} branches, offset by
            // lambda + alpha in powers of 1 - t
            let spec = spec_of(cfg)
                .singular_endpoints(0.0, -0.5 * l.re - 1.0)
                .endpoint_steps(1.0, (l + a).re.min(1.0));
            let r = finite(&f, x, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F16.ferPsingle",
        family: "F16",
        params: &["nu", "mu", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, (mu + nu).re > -3.0 + m, "Re(mu + nu) must exceed -3");
            req(&mut v, (mu - nu).re > m, "Re(mu - nu) must be positive");
            req(&mut v, (nu - mu - 1.0).norm() > m,
                "nu - mu - 1 must stay away from zero");
            req(&mut v, not_nonpos_int(0.5 * (mu - nu + 3.0), m),
                "(mu - nu + 3)/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * (nu + mu + 2.0), m),
                "(nu + mu + 2)/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * (mu - nu + 2.0), m),
                "(mu - nu + 2)/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * (nu + mu + 1.0), m),
                "(nu + mu + 1)/2 must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            let nu = unif(rng, -0.4, 0.3);
            Point(vec![
                ("nu", c(nu)),
                ("mu", c(nu + unif(rng, 0.25, 1.2))),
                ("x", c(unif(rng, 0.15, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let x = p.re("x");
            let lhs = ferrers_p(nu, -mu, x)?;
            let pre = gamma_frac(
                &[0.5 * (mu - nu + 3.0), 0.5 * (nu + mu + 2.0)],
                &[0.5 * (mu - nu + 2.0), 0.5 * (nu + mu + 1.0)],
            )?
            .scale(2.0 * (nu - mu) / (nu - mu - 1.0));
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let gk = kernel_g(x, t);
                let p3 = ferrers_p(nu, -mu, t)?;
                let leg = leg_p0(nu, gk)?;
                Ok(p3.value * leg.value / (1.0 - t * t))
            };
            // the G^{nu} and G^{-nu-1} branches of the Legendre factor sit
            // nu + 1/2 apart in powers of 1 - t
            let spec = spec_of(cfg)
                .singular_endpoints(0.0, 0.5 * (mu - nu).re - 1.0)
                .endpoint_steps(1.0, (nu.re + 0.5).min(1.0));
            let r = finite(&f, x, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });
}
