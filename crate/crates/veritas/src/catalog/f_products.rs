//! Product integral representations for functions of the first kind in both
//! contexts (F12), for Legendre, Gegenbauer and Ferrers products (F13), and
//! the two historical one-dimensional product formulas that predate the
//! kernel form (F0).

use super::helpers::*;
use super::{unif, CheckConfig, IdentityDescriptor, Point};
use crate::geometry::{kernel_b, kernel_c, qq_lower_limit};
use crate::gegenbauer::{gegenbauer_c, gegenbauer_c_trig, gegenbauer_d};
use crate::jacobi::{jacobi_p, jacobi_p_trig, JacobiOrder, Representation};
use crate::legendre::{ferrers_p, legendre_p, legendre_q};
use crate::quad::QuadratureSpec;
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

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    // --- F12: products of first-kind Jacobi functions

    v.push(IdentityDescriptor {
        id: "F12.trigPP",
        family: "F12",
        params: &["alpha", "beta", "gamma", "x1", "x2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            in_unit(&mut v, p.c("x1"), m, "x1");
            in_unit(&mut v, p.c("x2"), m, "x2");
            req(&mut v, b.re > -0.5 + m, "Re beta must exceed -1/2");
            req(&mut v, (b + g).re < -m, "Re(beta + gamma) must be negative");
            req(&mut v, (a + 2.0 * g).re > m,
                "Re(alpha + 2 gamma) must be positive");
            req(&mut v, not_nonpos_int(a + 2.0 * b + 2.0 * g + 1.0, m),
                "alpha + 2 beta + 2 gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_neg_int(g, m), "gamma must avoid the negative integers");
            req(&mut v, off_int(b, m), "beta must stay away from the integers");
            v
        },
        sample: |rng| {
            let g = unif(rng, 0.05, 0.35);
            Point(vec![
                ("alpha", c(unif(rng, 0.3, 1.2))),
                ("beta", c(unif(rng, -0.44, -g - 0.06))),
                ("gamma", c(g)),
                ("x1", c(unif(rng, 0.15, 0.6))),
                ("x2", c(unif(rng, 0.2, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (x1, x2) = (p.re("x1"), p.re("x2"));
            let ord = JacobiOrder::new(a, b, g);
            let lhs = jacobi_p_trig(ord, c(2.0 * x1 * x1 - 1.0))?
                .mul(&jacobi_p_trig(ord, c(2.0 * x2 * x2 - 1.0))?);
            let degs = (a + 2.0 * g) * (a + 2.0 * g + 1.0);
            let pre = gamma_frac(
                &[b, a + 2.0 * g],
                &[g + 1.0, -b - g, a + 2.0 * b + 2.0 * g + 1.0],
            )?
            .scale(
                degs * rpow(2.0, 2.0 * b)
                    * rpow(x1 * x2, -2.0 * b)
                    * rpow((1.0 - x1 * x1) * (1.0 - x2 * x2), -0.5 * a),
            );
            let lo = (x1 + x2) / (1.0 + x1 * x2);
            let variant = cfg.b_variant;
            let f = |x3: f64| -> Result<Complex64, EvalError> {
                let bk = kernel_b(x1, x2, x3, variant);
                let b2m1 = Complex64::new(bk * bk - 1.0, 0.0);
                let p3 = jacobi_p_trig(ord, c(2.0 * x3 * x3 - 1.0))?;
                let ck = gegenbauer_c(a + 2.0 * g + 1.0, b, CutPoint::off_cut(c(bk)))?;
                Ok(p3.value
                    * ck.value
                    * x3
                    * rpow(1.0 - x3 * x3, 0.5 * a - 1.0)
                    * b2m1.powc(b - 0.5))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(b.re - 0.5, -(b.re + g.re + 1.0));
            let r = finite(&f, lo, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F12.hypPP",
        family: "F12",
        params: &["alpha", "beta", "gamma", "y1", "y2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            real_gt1(&mut v, p.c("y1"), m, "y1");
            real_gt1(&mut v, p.c("y2"), m, "y2");
            req(&mut v, (a + g).re > -1.0 + m, "Re(alpha + gamma) must exceed -1");
            req(&mut v, (a + b + g).re > -1.0 + m,
                "Re(alpha + beta + gamma) must exceed -1");
            req(&mut v, (a + b + 2.0 * g).re < -0.5 - m,
                "Re(alpha + beta + 2 gamma) must stay below -1/2");
            req(&mut v, not_nonpos_int(-a - b - 2.0 * g - 1.0, m),
                "alpha + beta + 2 gamma must stay away from the integers above -1");
            req(&mut v, not_nonpos_int(-a - 2.0 * b - 2.0 * g - 1.0, m),
                "alpha + 2 beta + 2 gamma must stay away from the integers above -1");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            let a = unif(rng, 0.4, 1.0);
            let g = unif(rng, -0.6, -0.2);
            let u = unif(rng, 0.02, 0.35);
            Point(vec![
                ("alpha", c(a)),
                ("beta", c(-a - 2.0 * g - 0.6 - u)),
                ("gamma", c(g)),
                ("y1", c(unif(rng, 1.2, 1.8))),
                ("y2", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let (y1, y2) = (p.re("y1"), p.re("y2"));
            let ord = JacobiOrder::new(a, b, g);
            let at1 = CutPoint::off_cut(c(2.0 * y1 * y1 - 1.0));
            let at2 = CutPoint::off_cut(c(2.0 * y2 * y2 - 1.0));
            let lhs = jacobi_p(ord, at1, Representation::Auto)?
                .mul(&jacobi_p(ord, at2, Representation::Auto)?);
            let s = a + 2.0 * b + 2.0 * g + 2.0;
            let pre = gamma_frac(
                &[a + 2.0 * g + 2.0, -a - b - 2.0 * g - 1.0],
                &[g + 1.0, a + b + g + 1.0, -a - 2.0 * b - 2.0 * g - 1.0],
            )?
            .scale(
                rpow(2.0, -(2.0 * a + 2.0 * b + 4.0 * g + 2.0))
                    * rpow(y1 * y2, -s)
                    * rpow((y1 * y1 - 1.0) * (y2 * y2 - 1.0), -0.5 * a),
            );
            let upper = (y1 * y2 + 1.0) / (y1 + y2);
            let f = |y3: f64| -> Result<Complex64, EvalError> {
                let ck = kernel_c(y1, y2, y3);
                let p3 = jacobi_p(
                    ord,
                    CutPoint::off_cut(c(2.0 * y3 * y3 - 1.0)),
                    Representation::Auto,
                )?;
                let geg = gegenbauer_c(
                    a + 2.0 * g + 1.0,
                    -(a + b + 2.0 * g + 1.0),
                    CutPoint::off_cut(c(ck)),
                )?;
                Ok(p3.value
                    * geg.value
                    * rpow(y3 * y3 - 1.0, 0.5 * a - 1.0)
                    * rpow(y3, -(a + 2.0 * g + 1.0))
                    * rpow(ck * ck - 1.0, -(a + b + 2.0 * g + 1.5)))
            };
            let spec = spec_of(cfg).singular_endpoints(
                (a + b + g).re,
                -(a + b + 2.0 * g + 1.5).re,
            );
            let r = finite(&f, 1.0, upper, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    // --- F13: Legendre, Gegenbauer and Ferrers products

    v.push(IdentityDescriptor {
        id: "F13.legQQ",
        family: "F13",
        params: &["nu", "mu", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z1"), m, "z1");
            real_gt1(&mut v, p.c("z2"), m, "z2");
            req(&mut v, (nu - mu).re > -1.0 + m, "Re(nu - mu) must exceed -1");
            req(&mut v, mu.re > -0.5 + m, "Re mu must exceed -1/2");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(mu + 0.5, m),
                "mu must stay away from the negative half-integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, 0.2, 1.2))),
                ("mu", c(unif(rng, -0.3, 0.6))),
                ("z1", c(unif(rng, 1.15, 1.6))),
                ("z2", c(unif(rng, 1.3, 1.9))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = legendre_q(nu, mu, CutPoint::off_cut(c(z1)))?
                .mul(&legendre_q(nu, mu, CutPoint::off_cut(c(z2)))?);
            let pre = gamma_frac(&[nu + mu + 1.0], &[mu + 0.5, nu - mu + 1.0])?.scale(
                phase(mu)
                    * (PI / 2.0).sqrt()
                    * rpow(z1 * z2, mu - 0.5)
                    * rpow((z1 * z1 - 1.0) * (z2 * z2 - 1.0), -0.5 * mu),
            );
            let f = |z3: f64| -> Result<Complex64, EvalError> {
                let k = (z1 * z1 + z2 * z2 + z3 * z3 - 1.0) / (2.0 * z1 * z2) - z3;
                let q3 = legendre_q(nu, mu, CutPoint::off_cut(c(z3)))?;
                Ok(q3.value * rpow(k, mu - 0.5) * rpow(z3 * z3 - 1.0, -0.5 * mu))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(mu.re - 0.5, 0.0)
                .decay(pdecay((mu - nu).re - 2.0));
            let r = semi_inf(&f, qq_lower_limit(z1, z2), &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F13.gegDD",
        family: "F13",
        params: &["lambda", "alpha", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z1"), m, "z1");
            real_gt1(&mut v, p.c("z2"), m, "z2");
            req(&mut v, a.re > m, "Re alpha must be positive");
            req(&mut v, l.re > -1.0 + m, "Re lambda must exceed -1");
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", c(unif(rng, 0.3, 1.2))),
                ("alpha", c(unif(rng, 0.3, 1.0))),
                ("z1", c(unif(rng, 1.15, 1.6))),
                ("z2", c(unif(rng, 1.3, 1.9))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = gegenbauer_d(l, a, CutPoint::off_cut(c(z1)))?
                .mul(&gegenbauer_d(l, a, CutPoint::off_cut(c(z2)))?);
            let pre = gamma_frac(&[l + 2.0 * a], &[l + 1.0, a, a])?.scale(
                phase(a)
                    * rpow(2.0, -a)
                    * rpow(z1 * z2, a - 1.0)
                    * rpow((z1 * z1 - 1.0) * (z2 * z2 - 1.0), 0.5 - a),
            );
            let f = |z3: f64| -> Result<Complex64, EvalError> {
                let k = (z1 * z1 + z2 * z2 + z3 * z3 - 1.0) / (2.0 * z1 * z2) - z3;
                let d3 = gegenbauer_d(l, a, CutPoint::off_cut(c(z3)))?;
                Ok(d3.value * rpow(k, a - 1.0))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(a.re - 1.0, 0.0)
                .decay(pdecay(-(l.re + 2.0)));
            let r = semi_inf(&f, qq_lower_limit(z1, z2), &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F13.gegCCtrig",
        family: "F13",
        params: &["lambda", "alpha", "x1", "x2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            in_unit(&mut v, p.c("x1"), m, "x1");
            in_unit(&mut v, p.c("x2"), m, "x2");
            req(&mut v, (l + 2.0 * a).re > m,
                "Re(lambda + 2 alpha) must be positive");
            req(&mut v, l.re < -m, "Re lambda must be negative");
            req(&mut v, not_nonpos_int(0.5 * l + a + 0.5, m),
                "lambda/2 + alpha + 1/2 must avoid the nonpositive integers");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", c(unif(rng, -0.45, -0.05))),
                ("alpha", c(unif(rng, 0.4, 1.0))),
                ("x1", c(unif(rng, 0.15, 0.6))),
                ("x2", c(unif(rng, 0.2, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let (x1, x2) = (p.re("x1"), p.re("x2"));
            let lhs = gegenbauer_c_trig(l, a, x1)?.mul(&gegenbauer_c_trig(l, a, x2)?);
            let pre = gamma_frac(&[0.5 * l + a + 0.5], &[l, a, 1.0 - 0.5 * l])?.scale(
                -rpow(2.0, l)
                    * PI.sqrt()
                    * rpow((1.0 - x1 * x1) * (1.0 - x2 * x2), 0.25 - 0.5 * a),
            );
            let lo = (x1 + x2) / (1.0 + x1 * x2);
            let variant = cfg.b_variant;
            let f = |x3: f64| -> Result<Complex64, EvalError> {
                let bk = kernel_b(x1, x2, x3, variant);
                let c3 = gegenbauer_c_trig(l, a, x3)?;
                let leg = legendre_p(l + a - 0.5, c(0.0), CutPoint::off_cut(c(bk)))?;
                Ok(c3.value * leg.value * rpow(1.0 - x3 * x3, 0.5 * a - 1.25))
            };
            let spec = spec_of(cfg).singular_endpoints(0.0, -0.5 * l.re - 1.0);
            let r = finite(&f, lo, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F13.ferrersPP",
        family: "F13",
        params: &["nu", "mu", "x1", "x2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            in_unit(&mut v, p.c("x1"), m, "x1");
            in_unit(&mut v, p.c("x2"), m, "x2");
            req(&mut v, (nu + mu).re > -1.0 + m, "Re(nu + mu) must exceed -1");
            req(&mut v, (mu - nu).re > m, "Re(mu - nu) must be positive");
            req(&mut v, nu.re < -m, "Re nu must be negative");
            req(&mut v, not_nonpos_int(0.5 * (mu - nu), m),
                "(mu - nu)/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 * (nu + mu + 1.0), m),
                "(nu + mu + 1)/2 must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, -0.45, -0.05))),
                ("mu", c(unif(rng, 0.2, 1.2))),
                ("x1", c(unif(rng, 0.15, 0.6))),
                ("x2", c(unif(rng, 0.2, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let (x1, x2) = (p.re("x1"), p.re("x2"));
            let lhs = ferrers_p(nu, -mu, x1)?.mul(&ferrers_p(nu, -mu, x2)?);
            let pre = gamma_frac(&[], &[0.5 * (mu - nu), 0.5 * (nu + mu + 1.0)])?
                .scale(rpow(2.0, 1.0 - mu) * PI.sqrt());
            let lo = (x1 + x2) / (1.0 + x1 * x2);
            let variant = cfg.b_variant;
            let f = |x3: f64| -> Result<Complex64, EvalError> {
                let bk = kernel_b(x1, x2, x3, variant);
                let p3 = ferrers_p(nu, -mu, x3)?;
                let leg = legendre_p(nu, c(0.0), CutPoint::off_cut(c(bk)))?;
                Ok(p3.value * leg.value / (1.0 - x3 * x3))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(0.0, 0.5 * (mu - nu).re - 1.0);
            let r = finite(&f, lo, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F13.gegCChyp",
        family: "F13",
        params: &["lambda", "alpha", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z1"), m, "z1");
            real_gt1(&mut v, p.c("z2"), m, "z2");
            req(&mut v, (l + 2.0 * a).re > m,
                "Re(lambda + 2 alpha) must be positive");
            req(&mut v, (l + a).re < 0.5 - m, "Re(lambda + alpha) must stay below 1/2");
            req(&mut v, not_nonpos_int(l + a + 0.5, m),
                "lambda + alpha + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", c(unif(rng, -0.5, -0.1))),
                ("alpha", c(unif(rng, 0.35, 0.55))),
                ("z1", c(unif(rng, 1.2, 1.8))),
                ("z2", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = gegenbauer_c(l, a, CutPoint::off_cut(c(z1)))?
                .mul(&gegenbauer_c(l, a, CutPoint::off_cut(c(z2)))?);
            let pre = gamma_frac(&[l + a + 0.5], &[l + 1.0, a])?.scale(
                (PI * (l + a)).cos() / PI.sqrt()
                    * rpow(2.0, 0.5 - a)
                    * rpow(z1 * z2, -(l + a + 0.5))
                    * rpow((z1 * z1 - 1.0) * (z2 * z2 - 1.0), 0.25 - 0.5 * a),
            );
            let upper = (z1 * z2 + 1.0) / (z1 + z2);
            let f = |z3: f64| -> Result<Complex64, EvalError> {
                let ck = kernel_c(z1, z2, z3);
                let c3 = gegenbauer_c(l, a, CutPoint::off_cut(c(z3)))?;
                Ok(c3.value
                    * rpow(z3 * z3 - 1.0, 0.5 * a - 1.25)
                    * rpow(z3, -(l + a + 0.5))
                    * rpow(ck - 1.0, -(l + a + 0.5)))
            };
            let spec = spec_of(cfg).singular_endpoints(
                a.re + 0.5 * l.re - 1.0,
                -(l.re + a.re + 0.5),
            );
            let r = finite(&f, 1.0, upper, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F13.legPP",
        family: "F13",
        params: &["nu", "mu", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z1"), m, "z1");
            real_gt1(&mut v, p.c("z2"), m, "z2");
            req(&mut v, (nu + mu).re > -1.0 + m, "Re(nu + mu) must exceed -1");
            req(&mut v, nu.re < -m, "Re nu must be negative");
            req(&mut v, off_int(nu, m), "nu must stay away from the integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, -0.6, -0.1))),
                ("mu", c(unif(rng, 0.3, 1.3))),
                ("z1", c(unif(rng, 1.2, 1.8))),
                ("z2", c(unif(rng, 1.25, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = legendre_p(nu, -mu, CutPoint::off_cut(c(z1)))?
                .mul(&legendre_p(nu, -mu, CutPoint::off_cut(c(z2)))?);
            let pre = gamma_frac(&[nu + 1.0], &[nu + mu + 1.0])?
                .scale((PI * nu).sin() / PI * rpow(z1 * z2, -(nu + 1.0)));
            let upper = (1.0 + z1 * z2) / (z1 + z2);
            let f = |z3: f64| -> Result<Complex64, EvalError> {
                let ck = kernel_c(z1, z2, z3);
                let p3 = legendre_p(nu, -mu, CutPoint::off_cut(c(z3)))?;
                Ok(p3.value * rpow(ck - 1.0, -(nu + 1.0))
                    / (rpow(z3, nu + 1.0) * (1.0 - z3 * z3)))
            };
            let spec = spec_of(cfg).singular_endpoints(
                0.5 * (nu.re + mu.re - 1.0),
                -(nu.re + 1.0),
            );
            let r = finite(&f, 1.0, upper, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    // --- F0: the one-dimensional second-kind product formulas

    fn f0_prefactor(
        l: Complex64,
        a: Complex64,
        n: Complex64,
    ) -> Result<ComplexValue, EvalError> {
        gamma_frac(
            &[2.0 * a - 1.0, n + 1.0, l + n + 2.0 * a],
            &[a + n, a + n, n + 2.0 * a - 1.0, l - n + 1.0],
        )
        .map(|g| g.scale(rpow(2.0, -(2.0 * a + 2.0 * n - 1.0))))
    }

    fn f0_constraints(p: &Point, m: f64) -> Vec<String> {
        let mut v = Vec::new();
        let (l, a, n) = (p.c("lambda"), p.c("alpha"), p.c("nu"));
        real_gt1(&mut v, p.c("z1"), m, "z1");
        real_gt1(&mut v, p.c("z2"), m, "z2");
        req(&mut v, a.re > m, "Re alpha must be positive");
        req(&mut v, (l - n).re > -1.0 + m, "Re(lambda - nu) must exceed -1");
        req(&mut v, not_nonpos_int(2.0 * a - 1.0, m),
            "2 alpha - 1 must avoid the nonpositive integers");
        req(&mut v, not_nonpos_int(n + 1.0, m),
            "nu must avoid the negative integers");
        req(&mut v, not_nonpos_int(l + n + 2.0 * a, m),
            "lambda + nu + 2 alpha must avoid the nonpositive integers");
        req(&mut v, not_nonpos_int(a + n, m),
            "alpha + nu must avoid the nonpositive integers");
        req(&mut v, not_nonpos_int(n + 2.0 * a - 1.0, m),
            "nu + 2 alpha - 1 must avoid the nonpositive integers");
        req(&mut v, not_nonpos_int(l - n + 1.0, m),
            "lambda - nu must avoid the negative integers");
        v
    }

    v.push(IdentityDescriptor {
        id: "F0.ddProduct",
        family: "F0",
        params: &["lambda", "alpha", "nu", "z1", "z2"],
        default_tol: 1e-6,
        constraints: f0_constraints,
        sample: |rng| {
            Point(vec![
                ("lambda", c(unif(rng, 0.2, 1.1))),
                ("alpha", c(unif(rng, 0.6, 1.1))),
                ("nu", c(unif(rng, 0.1, 0.6))),
                ("z1", c(unif(rng, 1.2, 1.7))),
                ("z2", c(unif(rng, 1.3, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a, n) = (p.c("lambda"), p.c("alpha"), p.c("nu"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = gegenbauer_d(l - n, a + n, CutPoint::off_cut(c(z1)))?
                .mul(&gegenbauer_d(l - n, a + n, CutPoint::off_cut(c(z2)))?);
            let pre = f0_prefactor(l, a, n)?.scale(
                phase(a + 2.0 * n)
                    * rpow((z1 * z1 - 1.0) * (z2 * z2 - 1.0), -0.5 * n),
            );
            let s = ((z1 * z1 - 1.0) * (z2 * z2 - 1.0)).sqrt();
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let d = gegenbauer_d(l, a, CutPoint::off_cut(c(z1 * z2 + t * s)))?;
                let ck = gegenbauer_c(n, a - 0.5, CutPoint::off_cut(c(t)))?;
                Ok(d.value * ck.value * rpow(t * t - 1.0, a - 1.0))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(a.re - 1.0, 0.0)
                .decay(pdecay((n - l).re - 2.0));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F0.cdProduct",
        family: "F0",
        params: &["lambda", "alpha", "nu", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = f0_constraints(p, m);
            req(&mut v, (p.c("z1") - p.c("z2")).re > 0.1 + m,
                "z1 must exceed z2 by a safe gap");
            req(&mut v, p.c("alpha").re < 1.0 - m, "Re alpha must stay below 1");
            // the trigonometric-variable form comes from an orthogonality
            // projection and holds only at integer nu; only the hyperbolic
            // form continues analytically in nu
            let n = p.c("nu");
            req(&mut v, n.im == 0.0 && n.re >= 0.0 && n.re.fract() == 0.0,
                "nu must be a nonnegative integer");
            v
        },
        sample: |rng| {
            let z2 = unif(rng, 1.2, 1.7);
            let n = 1.0 + unif(rng, 0.0, 2.0).floor();
            Point(vec![
                ("lambda", c(n + unif(rng, -0.2, 1.1))),
                ("alpha", c(unif(rng, 0.6, 0.9))),
                ("nu", c(n)),
                ("z1", c(z2 + unif(rng, 0.3, 0.8))),
                ("z2", c(z2)),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a, n) = (p.c("lambda"), p.c("alpha"), p.c("nu"));
            let (z1, z2) = (p.re("z1"), p.re("z2"));
            let lhs = gegenbauer_d(l - n, a + n, CutPoint::off_cut(c(z1)))?
                .mul(&gegenbauer_c(l - n, a + n, CutPoint::off_cut(c(z2)))?);
            let pre = f0_prefactor(l, a, n)?
                .scale(rpow((z1 * z1 - 1.0) * (z2 * z2 - 1.0), -0.5 * n));
            let s = ((z1 * z1 - 1.0) * (z2 * z2 - 1.0)).sqrt();
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let d = gegenbauer_d(l, a, CutPoint::off_cut(c(z1 * z2 + t * s)))?;
                let ck = gegenbauer_c(n, a - 0.5, CutPoint::off_cut(c(t)))?;
                Ok(d.value * ck.value * rpow(1.0 - t * t, a - 1.0))
            };
            let spec: QuadratureSpec =
                spec_of(cfg).singular_endpoints(a.re - 1.0, a.re - 1.0);
            let r = finite(&f, -1.0, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });
}
