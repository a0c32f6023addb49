//! Nicholson-type sums of squares (F17) and the confluent Laguerre limits
//! plus the Laguerre second-kind product formula (F18).
//!
//! The F17 left-hand sides combine the squared cut functions of the first
//! and second kind; the right-hand sides integrate a single second-kind
//! function in the hyperbolic context against an algebraic kernel, so the
//! two sides share no evaluator.

use super::helpers::*;
use super::{unif, CheckConfig, Evaluation, IdentityDescriptor, Point};
use crate::confluent::bessel_i;
use crate::gegenbauer::{gegenbauer_c_trig, gegenbauer_d, gegenbauer_d_trig};
use crate::jacobi::{jacobi_p, jacobi_p_trig, jacobi_q, jacobi_q_trig, JacobiOrder, Representation};
use crate::laguerre::{laguerre_l, laguerre_l_trig, laguerre_n, laguerre_n_trig};
use crate::legendre::{ferrers_p, ferrers_q, legendre_q};
use crate::quad::TailDecay;
use crate::value::{ComplexValue, CutPoint, CutSide, EvalError};
use num_complex::Complex64;
use std::f64::consts::PI;

fn in_unit(v: &mut Vec<String>, x: Complex64, m: f64, what: &str) {
    if !(x.im == 0.0 && x.re > m && x.re < 1.0 - m) {
        v.push(format!("{what} must be real and inside (0, 1)"));
    }
}

fn pdecay(p: f64) -> TailDecay {
    TailDecay::Power(p.min(-1.2))
}

// [Q(x)]^2 + (pi^2/4) [P(x)]^2 for the Jacobi pair on the cut.
fn jac_nicholson_lhs(p: &Point) -> Result<ComplexValue, EvalError> {
    let ord = JacobiOrder::new(p.c("alpha"), p.c("beta"), p.c("gamma"));
    let x = p.re("x");
    let q = jacobi_q_trig(ord, x)?;
    let pf = jacobi_p_trig(ord, c(x))?;
    Ok(q.mul(&q).add(&pf.mul(&pf).scale(c(0.25 * PI * PI))))
}

fn jac_nicholson_constraints(p: &Point, m: f64) -> Vec<String> {
    let mut v = Vec::new();
    let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
    in_unit(&mut v, p.c("x"), m, "x");
    req(&mut v, a.re > -0.5 + m, "Re alpha must exceed -1/2");
    req(&mut v, g.re > -1.0 + m, "Re gamma must exceed -1");
    req(&mut v, not_nonpos_int(a + g + 1.0, m),
        "alpha + gamma must avoid the negative integers");
    req(&mut v, not_nonpos_int(b + g + 1.0, m),
        "beta + gamma must avoid the negative integers");
    req(&mut v, not_nonpos_int(a + b, m),
        "alpha + beta must avoid the nonpositive integers");
    req(&mut v, not_nonpos_int(g + 1.0, m),
        "gamma must avoid the negative integers");
    v
}

fn jac_nicholson_sample(rng: &mut rand_chacha::ChaCha8Rng) -> Point {
    Point(vec![
        ("alpha", c(unif(rng, 0.6, 1.2))),
        ("beta", c(unif(rng, 0.15, 0.8))),
        ("gamma", c(unif(rng, 0.2, 1.2))),
        ("x", c(unif(rng, 0.1, 0.7))),
    ])
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    v.push(IdentityDescriptor {
        id: "F17.nicholsonJacobiD",
        family: "F17",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-6,
        constraints: jac_nicholson_constraints,
        sample: jac_nicholson_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jac_nicholson_lhs(p)?;
            let pre = gamma_frac(&[b + 0.5, a + g + 1.0], &[g + 1.0, a + b])?.scale(
                phase(-(b + 0.5))
                    * PI.sqrt()
                    * rpow(2.0, a + 2.0 * b)
                    * rpow(1.0 - x, -2.0 * a),
            );
            let ord = JacobiOrder::new(a, b, g);
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let q3 = jacobi_q(ord, CutPoint::off_cut(c(w)), Representation::Auto)?;
                let s = 1.0 - 2.0 * x * x + w;
                let arg = (1.0 + 2.0 * x + w) / ((w - 1.0) * s).sqrt();
                let d = gegenbauer_d(a - b - 1.0, b + 0.5, CutPoint::off_cut(c(arg)))?;
                Ok(q3.value
                    * d.value
                    * rpow(w - 1.0, 0.5 * (a - b - 1.0))
                    * rpow(w + 1.0, b)
                    * rpow(s, 0.5 * (a - b - 1.0)))
            };
            // near w = 1 the second-kind factor goes like (w-1)^{-alpha}
            // against the explicit (w-1)^{(alpha-beta-1)/2} weight and the
            // dist^{(alpha+beta)/2} decay of the D factor, leaving a leading
            // -1/2 with corrections stepping by alpha
            let spec = spec_of(cfg)
                .singular_endpoints(-0.5, 0.0)
                .endpoint_steps(a.re, 1.0)
                .decay(pdecay(-(g.re + 2.0)));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F17.nicholsonJacobiQ",
        family: "F17",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-6,
        constraints: jac_nicholson_constraints,
        sample: jac_nicholson_sample,
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jac_nicholson_lhs(p)?;
            let pre = gamma_frac(&[a + g + 1.0], &[g + 1.0, a + b])?.scale(
                phase(-b)
                    * rpow(2.0, a + 0.5 * b)
                    * rpow(1.0 - x, -2.0 * a)
                    * rpow(1.0 + x, -b),
            );
            let ord = JacobiOrder::new(a, b, g);
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let q3 = jacobi_q(ord, CutPoint::off_cut(c(w)), Representation::Auto)?;
                let s = 1.0 - 2.0 * x * x + w;
                let arg = (1.0 + 2.0 * x + w) / ((w - 1.0) * s).sqrt();
                let leg = legendre_q(a - 1.0, b, CutPoint::off_cut(c(arg)))?;
                Ok(q3.value
                    * leg.value
                    * rpow(w - 1.0, 0.5 * (a - 1.0))
                    * rpow(w + 1.0, 0.5 * b)
                    * rpow(s, 0.5 * (a - 1.0)))
            };
            // same endpoint structure as the D form
            let spec = spec_of(cfg)
                .singular_endpoints(-0.5, 0.0)
                .endpoint_steps(a.re, 1.0)
                .decay(pdecay(-(g.re + 2.0)));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F17.nicholsonFerrers",
        family: "F17",
        params: &["nu", "mu", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, mu.re > -1.0 + m, "Re mu must exceed -1");
            req(&mut v, (nu - mu).re > -1.0 + m, "Re(nu - mu) must exceed -1");
            req(&mut v, not_nonpos_int(mu + 0.5, m),
                "mu must stay away from the negative half-integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, 0.2, 1.2))),
                ("mu", c(unif(rng, 0.05, 0.8))),
                ("x", c(unif(rng, 0.1, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let x = p.re("x");
            let q = ferrers_q(nu, -mu, x)?;
            let pf = ferrers_p(nu, -mu, x)?;
            let lhs = q.mul(&q).add(&pf.mul(&pf).scale(c(0.25 * PI * PI)));
            let pre = gamma_frac(&[], &[mu + 0.5])?.scale(
                PI.sqrt() * phase(mu)
                    * rpow(2.0, -mu)
                    * rpow(1.0 - x * x, -mu),
            );
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let q3 = legendre_q(nu, -mu, CutPoint::off_cut(c(w)))?;
                Ok(q3.value
                    * rpow(w - 1.0, 0.5 * (mu - 1.0))
                    * rpow(w + 1.0, -0.5 * mu)
                    * rpow(1.0 - 2.0 * x * x + w, mu - 0.5))
            };
            // Q_nu^{-mu}(1+d) diverges like d^{-mu/2}, so against the
            // (w-1)^{(mu-1)/2} weight the leading order is -1/2 with
            // corrections stepping by mu
            let spec = spec_of(cfg)
                .singular_endpoints(-0.5, 0.0)
                .endpoint_steps(mu.re, 1.0)
                .decay(pdecay((mu - nu).re - 2.0));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F17.nicholsonLegendre",
        family: "F17",
        params: &["nu", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let nu = p.c("nu");
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, nu.re > -1.0 + m, "Re nu must exceed -1");
            req(&mut v, not_nonpos_int(nu + 1.0, m),
                "nu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", c(unif(rng, 0.1, 1.3))),
                ("x", c(unif(rng, 0.1, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let nu = p.c("nu");
            let x = p.re("x");
            let q = ferrers_q(nu, c(0.0), x)?;
            let pf = ferrers_p(nu, c(0.0), x)?;
            let lhs = q.mul(&q).add(&pf.mul(&pf).scale(c(0.25 * PI * PI)));
            let pre = ComplexValue::exact(c(1.0));
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let q3 = legendre_q(nu, c(0.0), CutPoint::off_cut(c(w)))?;
                Ok(q3.value
                    * rpow(1.0 - 2.0 * x * x + w, c(-0.5))
                    * rpow(w - 1.0, c(-0.5)))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(-0.5, 0.0)
                .decay(pdecay(-(nu.re + 2.0)));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F17.nicholsonGegenbauer",
        family: "F17",
        params: &["lambda", "alpha", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            in_unit(&mut v, p.c("x"), m, "x");
            req(&mut v, a.re > 0.5 + m, "Re alpha must exceed 1/2");
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
                ("lambda", c(unif(rng, 0.2, 1.2))),
                ("alpha", c(unif(rng, 0.6, 1.1))),
                ("x", c(unif(rng, 0.1, 0.7))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let x = p.re("x");
            let cv = gegenbauer_c_trig(l, a, x)?;
            let dv = gegenbauer_d_trig(l, a, x)?;
            let lhs = cv.mul(&cv).add(&dv.mul(&dv));
            let pre = gamma_frac(&[l + 2.0 * a], &[a, a, l + 1.0])?.scale(
                phase(-a)
                    * rpow(2.0, 3.0 - 2.0 * a)
                    * rpow(1.0 - x * x, 1.0 - 2.0 * a),
            );
            let f = |w: f64| -> Result<Complex64, EvalError> {
                let d3 = gegenbauer_d(l, a, CutPoint::off_cut(c(w)))?;
                Ok(d3.value
                    * rpow(w - 1.0, a - 1.0)
                    * rpow(1.0 - 2.0 * x * x + w, a - 1.0))
            };
            // the second-kind factor splits into (w-1)^{1/2-alpha} plus an
            // analytic branch, so against the (w-1)^{alpha-1} weight the
            // endpoint orders are -1/2 and alpha-1: step alpha-1/2
            let spec = spec_of(cfg)
                .singular_endpoints(-0.5, 0.0)
                .endpoint_steps(a.re - 0.5, 1.0)
                .decay(pdecay(-(l.re + 2.0)));
            let r = semi_inf(&f, 1.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    // --- F18: confluent Laguerre limits and products

    v.push(IdentityDescriptor {
        id: "F18.confluentL",
        family: "F18",
        params: &["alpha", "gamma", "beta", "z"],
        default_tol: 1e-3,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g, b, z) = (p.c("alpha"), p.c("gamma"), p.c("beta"), p.c("z"));
            req(&mut v, b.im == 0.0 && b.re > 1e3, "beta must be real and large");
            req(&mut v, z.im.abs() > m || z.re < -m, "z must stay off [0, inf)");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + 1.0, m),
                "alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.3, 1.2))),
                ("gamma", c(unif(rng, 0.2, 1.2))),
                ("beta", c(unif(rng, 5e4, 2e5))),
                ("z", ci(unif(rng, 0.5, 2.0), unif(rng, 0.4, 1.5))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g, b, z) = (p.c("alpha"), p.c("gamma"), p.c("beta"), p.c("z"));
            let lhs = laguerre_l(g, a, z)?;
            let arg = c(1.0) + phase(c(-1.0)) * 2.0 * z / b;
            let rhs = jacobi_p(
                JacobiOrder::new(a, b, g),
                CutPoint::off_cut(arg),
                Representation::Auto,
            )?;
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F18.confluentN",
        family: "F18",
        params: &["alpha", "gamma", "beta", "z"],
        default_tol: 1e-3,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g, b, z) = (p.c("alpha"), p.c("gamma"), p.c("beta"), p.c("z"));
            req(&mut v, b.im == 0.0 && b.re > 1e3, "beta must be real and large");
            req(&mut v, z.im.abs() > m, "z must stay away from the real axis");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            req(&mut v, off_int(a, m), "alpha must stay away from the integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.3, 1.2))),
                ("gamma", c(unif(rng, 0.2, 1.2))),
                ("beta", c(unif(rng, 5e4, 2e5))),
                ("z", ci(unif(rng, 0.5, 2.0), unif(rng, 0.4, 1.5))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g, b, z) = (p.c("alpha"), p.c("gamma"), p.c("beta"), p.c("z"));
            let lhs = laguerre_n(g, a, CutPoint::off_cut(z))?;
            let arg = c(1.0) + phase(c(-1.0)) * 2.0 * z / b;
            let rhs = jacobi_q(
                JacobiOrder::new(a, b, g),
                CutPoint::off_cut(arg),
                Representation::Auto,
            )?;
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F18.nnProduct",
        family: "F18",
        params: &["alpha", "gamma", "z1", "z2"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let (z1, z2) = (p.c("z1"), p.c("z2"));
            req(&mut v, a.re > m, "Re alpha must be positive");
            req(&mut v, g.re > -1.0 + m, "Re gamma must exceed -1");
            req(&mut v, z1.im > m, "z1 must lie above the real axis");
            req(&mut v, (z1 - z2.conj()).norm() <= 1e-12 * z1.norm(),
                "z2 must be the reflection of z1 across the cut");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            let r = unif(rng, 0.8, 2.0);
            let th = unif(rng, 0.4, 2.6);
            let z1 = Complex64::from_polar(r, th);
            Point(vec![
                ("alpha", c(unif(rng, 0.6, 1.2))),
                ("gamma", c(unif(rng, 0.2, 1.2))),
                ("z1", z1),
                ("z2", z1.conj()),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let (z1, z2) = (p.c("z1"), p.c("z2"));
            let lhs = laguerre_n(g, a, CutPoint::off_cut(z1))?
                .mul(&laguerre_n(g, a, CutPoint::off_cut(z2))?);
            // arg z1 + arg z2 = 2 pi, so sqrt(z1 z2) = -r with r = |z1|; the
            // Bessel factor is folded back to positive argument using the
            // evenness of I_{a-1/2}(s u) / s^{a-1/2} in s.
            let r0 = (z1.norm() * z2.norm()).sqrt();
            let zsum = (z1 + z2).re;
            let pre = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .scale(PI.sqrt() * rpow(2.0, a - 0.5) * rpow(r0, 0.5 - a));
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let (sh, ch) = (t.sinh(), t.cosh());
                let w = zsum - 2.0 * r0 * ch;
                let n3 = laguerre_n(g, a, CutPoint::off_cut(c(w)))?;
                let iv = bessel_i(a - 0.5, c(r0 * sh), CutSide::OffCut)?;
                Ok(n3.value * (r0 * ch).exp() * iv.value * rpow(sh, a + 0.5))
            };
            let spec = spec_of(cfg)
                .singular_endpoints(2.0 * a.re, 0.0)
                .decay(TailDecay::Exponential(g.re + 1.0));
            let r = semi_inf(&f, 0.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });

    v.push(IdentityDescriptor {
        id: "F18.cutNicholson",
        family: "F18",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-6,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g, x) = (p.c("alpha"), p.c("gamma"), p.c("x"));
            req(&mut v, x.im == 0.0 && x.re > m, "x must be real and positive");
            req(&mut v, a.re > m, "Re alpha must be positive");
            req(&mut v, g.re > -1.0 + m, "Re gamma must exceed -1");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", c(unif(rng, 0.6, 1.2))),
                ("gamma", c(unif(rng, 0.2, 1.2))),
                ("x", c(unif(rng, 0.5, 2.0))),
            ])
        },
        eval: |p: &Point, cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let n = laguerre_n_trig(g, a, x)?;
            let l = laguerre_l_trig(g, a, x)?;
            let lhs = n.mul(&n).add(&l.mul(&l).scale(c(0.25 * PI * PI)));
            let pre = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .scale(PI.sqrt() * rpow(2.0, a - 0.5) * rpow(x, 0.5 - a));
            let f = |t: f64| -> Result<Complex64, EvalError> {
                let (sh, ch) = (t.sinh(), t.cosh());
                let n3 = laguerre_n(g, a, CutPoint::off_cut(c(2.0 * x * (1.0 - ch))))?;
                let iv = bessel_i(a - 0.5, c(x * sh), CutSide::OffCut)?;
                Ok(n3.value * (x * ch).exp() * iv.value * rpow(sh, a + 0.5))
            };
            // the second-kind factor diverges like |w|^{-alpha} at w -> 0,
            // which exactly cancels the t^{2 alpha} zero of the other factors
            let spec = spec_of(cfg)
                .singular_endpoints(0.0, 0.0)
                .decay(TailDecay::Exponential(g.re + 1.0));
            let r = semi_inf(&f, 0.0, &spec)?;
            Ok(quad_evaluation(lhs, pre, r))
        },
    });
}
