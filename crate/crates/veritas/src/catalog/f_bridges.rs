//! Bridges between the Gegenbauer, Legendre and Ferrers functions: direct
//! proportionalities (F1), special values and near-singularity behavior
//! (F2), reflections and Whipple transformations (F3) and their
//! trigonometric-context counterparts (F4).

use super::helpers::*;
use super::{cplx, unif, CheckConfig, Evaluation, IdentityDescriptor, Point};
use crate::gamma::pochhammer;
use crate::gegenbauer::{gegenbauer_c, gegenbauer_c_trig, gegenbauer_d, gegenbauer_d_trig};
use crate::jacobi::{jacobi_p, JacobiOrder, Representation};
use crate::legendre::{ferrers_p, ferrers_q, legendre_p, legendre_q};
use crate::value::CutPoint;
use num_complex::Complex64;
use std::f64::consts::PI;

const LN2: f64 = std::f64::consts::LN_2;

/// (z^2 - 1)^s for real z > 1.
fn z2m1_pow(z: f64, s: Complex64) -> Complex64 {
    rpow(z * z - 1.0, s)
}

fn real_gt1(v: &mut Vec<String>, z: Complex64, m: f64) {
    req(v, z.im == 0.0 && z.re > 1.0 + m, "argument must be real and > 1");
}

fn seg(v: &mut Vec<String>, x: Complex64, m: f64) {
    req(v, x.im == 0.0, "abscissa must be real");
    req(v, x.re > -1.0 + m && x.re < 1.0 - m, "abscissa must lie inside (-1, 1)");
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    // --- F1: first/second-kind proportionalities

    v.push(IdentityDescriptor {
        id: "F1.gegJacPoly",
        family: "F1",
        params: &["n", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let n = p.c("n");
            req(&mut v,
                n.im == 0.0 && n.re >= 0.0 && (n.re - n.re.round()).abs() < 1e-9,
                "n must be a nonnegative integer");
            req(&mut v, not_nonpos_int(p.c("alpha"), m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + 0.5, m),
                "alpha must stay away from the negative half-integers");
            req(&mut v, p.c("z").im != 0.0 || p.c("z").re > -1.0 + m,
                "argument must lie off the cut (-inf, -1]");
            v
        },
        sample: |rng| {
            Point(vec![
                ("n", c(unif(rng, 0.0, 6.0).floor())),
                ("alpha", cplx(rng, 0.3, 1.4, 0.0)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let n = p.re("n").round();
            let a = p.c("alpha");
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = gegenbauer_c(c(n), a, at)?;
            let ratio = pochhammer(2.0 * a, n as u32)
                .div(&pochhammer(a + 0.5, n as u32));
            let rhs = jacobi_p(
                JacobiOrder::new(a - 0.5, a - 0.5, c(n)),
                at,
                Representation::Auto,
            )?
            .mul(&ratio);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.legPtoGegC",
        family: "F1",
        params: &["nu", "mu", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * mu + 1.0, m),
                "2 mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(mu + 1.0, m),
                "mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.15)),
                ("mu", cplx(rng, 0.1, 1.2, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = legendre_p(nu, -mu, at)?;
            let pre = gamma_frac(
                &[2.0 * mu + 1.0, nu - mu + 1.0],
                &[nu + mu + 1.0, mu + 1.0],
            )?
            .scale((-mu * LN2).exp() * z2m1_pow(z, 0.5 * mu));
            let rhs = pre.mul(&gegenbauer_c(nu - mu, mu + 0.5, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.gegCtoLegP",
        family: "F1",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(2.0 * a + l, m),
                "2 alpha + lambda must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, -0.4, 1.3, 0.15)),
                ("alpha", cplx(rng, 0.15, 1.2, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = gegenbauer_c(l, a, at)?;
            let pre = gamma_frac(&[2.0 * a + l], &[a, l + 1.0])?.scale(
                PI.sqrt() * ((0.5 - a) * LN2).exp() * z2m1_pow(z, 0.25 - 0.5 * a),
            );
            let rhs = pre.mul(&legendre_p(l + a - 0.5, 0.5 - a, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.gegDtoLegQfirst",
        family: "F1",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, -0.4, 1.3, 0.15)),
                ("alpha", cplx(rng, 0.15, 1.2, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = gegenbauer_d(l, a, at)?;
            let pre = gamma_frac(&[l + 2.0 * a], &[a, l + 1.0])?.scale(
                phase(2.0 * (a - 0.25)) / PI.sqrt()
                    * ((0.5 - a) * LN2).exp()
                    * z2m1_pow(z, 0.25 - 0.5 * a),
            );
            let rhs = pre.mul(&legendre_q(l + a - 0.5, 0.5 - a, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.gegDtoLegQ",
        family: "F1",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, -0.4, 1.3, 0.15)),
                ("alpha", cplx(rng, 0.15, 1.2, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = gegenbauer_d(l, a, at)?;
            let pre = gamma_frac(&[], &[a])?.scale(
                Complex64::i() / PI.sqrt()
                    * ((0.5 - a) * LN2).exp()
                    * z2m1_pow(z, 0.25 - 0.5 * a),
            );
            let rhs = pre.mul(&legendre_q(l + a - 0.5, a - 0.5, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.legQtoGegDfirst",
        family: "F1",
        params: &["nu", "mu", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(0.5 - mu, m),
                "mu must stay away from the positive half-integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.15)),
                ("mu", cplx(rng, -0.45, 0.45, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = legendre_q(nu, mu, at)?;
            let pre = gamma_frac(&[0.5 - mu, nu + mu + 1.0], &[nu - mu + 1.0])?.scale(
                phase(2.0 * (mu - 0.25))
                    * PI.sqrt()
                    * (-mu * LN2).exp()
                    * z2m1_pow(z, -0.5 * mu),
            );
            let rhs = pre.mul(&gegenbauer_d(nu + mu, 0.5 - mu, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F1.legQtoGegD",
        family: "F1",
        params: &["nu", "mu", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(mu + 0.5, m),
                "mu must stay away from the negative half-integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.15)),
                ("mu", cplx(rng, -0.45, 0.45, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = legendre_q(nu, mu, at)?;
            let pre = gamma_frac(&[mu + 0.5], &[])?.scale(
                -Complex64::i() * PI.sqrt() * (mu * LN2).exp() * z2m1_pow(z, 0.5 * mu),
            );
            let rhs = pre.mul(&gegenbauer_d(nu - mu, mu + 0.5, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F2: special values, parity, near-singularity behavior

    v.push(IdentityDescriptor {
        id: "F2.lemma1",
        family: "F2",
        params: &["lambda", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let l = p.c("lambda");
            req(&mut v, l.norm() > m.max(1e-9), "lambda must be nonzero");
            req(&mut v, not_nonpos_int(0.5 - l, m),
                "lambda must stay away from the positive half-integers");
            req(&mut v, p.c("z").im != 0.0 || p.c("z").re > -1.0 + m,
                "argument must lie off the cut (-inf, -1]");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.05, 0.45, 0.1)),
                ("z", cplx(rng, -0.8, 3.0, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let l = p.c("lambda");
            let z = p.c("z");
            let lhs = gegenbauer_c(l, 0.5 - l, CutPoint::off_cut(z))?;
            let rhs = gamma_frac(&[], &[l + 1.0, 0.5 - l])?
                .scale((l * LN2).exp() * PI.sqrt() * powl((z + 1.0).ln(), l));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F2.lemma3",
        family: "F2",
        params: &["mu", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            req(&mut v, not_nonpos_int(p.c("mu"), m),
                "mu must avoid the nonpositive integers");
            req(&mut v, p.c("z").im != 0.0 || p.c("z").re > 1.0 + m,
                "argument must lie off the cut (-inf, 1]");
            v
        },
        sample: |rng| {
            Point(vec![
                ("mu", cplx(rng, 0.15, 1.6, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let mu = p.c("mu");
            let z = p.c("z");
            let lhs = legendre_q(mu - 1.0, mu, CutPoint::off_cut(z))?;
            let rhs = gamma_frac(&[mu], &[])?.scale(
                phase(mu)
                    * ((mu - 1.0) * LN2).exp()
                    * powl(crate::branch::ln_z2m1(z, crate::value::CutSide::OffCut), -0.5 * mu),
            );
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F2.qOrderParity",
        family: "F2",
        params: &["nu", "mu", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            req(&mut v, p.c("z").im != 0.0 || p.c("z").re > 1.0 + m,
                "argument must lie off the cut (-inf, 1]");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.15)),
                ("mu", cplx(rng, -0.9, 0.9, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = legendre_q(nu, -mu, at)?;
            let rhs = gamma_frac(&[nu - mu + 1.0], &[nu + mu + 1.0])?
                .scale(phase(-2.0 * mu))
                .mul(&legendre_q(nu, mu, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F2.qNearOneNeg",
        family: "F2",
        params: &["nu", "mu", "eps"],
        default_tol: 1e-3,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu, e) = (p.c("nu"), p.c("mu"), p.c("eps"));
            req(&mut v, mu.re < -0.5 - m, "Re mu must stay below -1/2");
            req(&mut v, mu.re > -1.0 + m, "Re mu must stay above -1");
            req(&mut v, e.im == 0.0 && e.re > 0.0 && e.re < 1e-5,
                "eps must be a small positive real");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.2, 1.2, 0.0)),
                ("mu", cplx(rng, -0.95, -0.56, 0.0)),
                ("eps", c(unif(rng, 3e-7, 3e-6))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let e = p.re("eps");
            let lhs = legendre_q(nu, mu, CutPoint::off_cut(c(1.0 + e)))?;
            // sqrt(pi) appears upstairs and downstairs as printed; they cancel
            let rhs = gamma_frac(&[-mu, nu + mu + 1.0], &[nu - mu + 1.0])?
                .scale(phase(mu) * rpow(e, 0.5 * mu) * (-(0.5 * mu + 1.0) * LN2).exp());
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F2.qNearOnePos",
        family: "F2",
        params: &["nu", "mu", "eps"],
        default_tol: 1e-3,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu, e) = (p.c("nu"), p.c("mu"), p.c("eps"));
            req(&mut v, mu.re > 0.5 + m, "Re mu must stay above 1/2");
            req(&mut v, mu.re < 1.0 - m, "Re mu must stay below 1");
            req(&mut v, e.im == 0.0 && e.re > 0.0 && e.re < 1e-5,
                "eps must be a small positive real");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.2, 1.2, 0.0)),
                ("mu", cplx(rng, 0.56, 0.95, 0.0)),
                ("eps", c(unif(rng, 3e-7, 3e-6))),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let e = p.re("eps");
            let lhs = legendre_q(nu, mu, CutPoint::off_cut(c(1.0 + e)))?;
            let rhs = gamma_frac(&[mu], &[])?
                .scale(phase(mu) * rpow(e, -0.5 * mu) * ((0.5 * mu - 1.0) * LN2).exp());
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F3: reflections and Whipple transformations

    v.push(IdentityDescriptor {
        id: "F3.gegCreflection",
        family: "F3",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            req(&mut v, off_int(l + 2.0 * a, m),
                "lambda + 2 alpha must stay away from the integers");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            req(&mut v, p.c("z").im != 0.0 || p.c("z").re > -1.0 + m,
                "argument must lie off the cut (-inf, -1]");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 0.9, 0.1)),
                ("alpha", cplx(rng, 0.15, 0.9, 0.1)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = gegenbauer_c(l, a, at)?;
            let fac = -(PI * l).sin() / (PI * (l + 2.0 * a)).sin();
            let rhs = gegenbauer_c(-l - 2.0 * a, a, at)?.scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F3.gegCfromD",
        family: "F3",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            req(&mut v, off_int(l + a, m),
                "lambda + alpha must stay away from the integers");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            real_gt1(&mut v, p.c("z"), m);
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 0.9, 0.1)),
                ("alpha", cplx(rng, 0.15, 0.9, 0.1)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = gegenbauer_c(l, a, at)?;
            let fac = phase(-a) * (PI * l).sin() / (PI * (l + a)).sin();
            let rhs = gegenbauer_d(l, a, at)?
                .sub(&gegenbauer_d(-l - 2.0 * a, a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F3.gegDreflection",
        family: "F3",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(1.0 - a, m),
                "alpha must stay away from the positive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 1.2, 0.1)),
                ("alpha", cplx(rng, 0.15, 0.85, 0.1)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let at = CutPoint::off_cut(c(z));
            let lhs = gegenbauer_d(l, a, at)?;
            let pre = gamma_frac(&[1.0 - a, l + 2.0 * a], &[l + 1.0, a])?.scale(
                phase(2.0 * (a + 0.5))
                    * ((1.0 - 2.0 * a) * LN2).exp()
                    * z2m1_pow(z, 0.5 - a),
            );
            let rhs = pre.mul(&gegenbauer_d(l + 2.0 * a - 1.0, 1.0 - a, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // the printed prefactor carries a spurious (2(z^2-1))^{alpha/2 - 1/4};
    // this is the corrected form obtained by inverting the second Whipple
    // transformation, verified independently to 30 digits
    v.push(IdentityDescriptor {
        id: "F3.whippleC",
        family: "F3",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(-l, m),
                "lambda must stay away from the nonnegative integers");
            req(&mut v, not_nonpos_int(l + a + 0.5, m),
                "lambda + alpha + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 0.9, 0.0)),
                ("alpha", cplx(rng, 0.2, 1.0, 0.0)),
                ("z", cplx(rng, 1.25, 3.0, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let lhs = gegenbauer_c(l, a, CutPoint::off_cut(c(z)))?;
            let w = z / (z * z - 1.0).sqrt();
            let pre = gamma_frac(&[-l, l + a + 0.5], &[a])?.scale(
                ((l + 1.0) * LN2).exp() * phase(-(l + a - 0.5)) * (PI * l).sin()
                    / PI.sqrt()
                    * z2m1_pow(z, -(0.5 * l + a)),
            );
            let rhs = pre.mul(&gegenbauer_d(-l - 1.0, l + a + 0.5, CutPoint::off_cut(c(w)))?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F3.whippleD",
        family: "F3",
        params: &["lambda", "alpha", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            real_gt1(&mut v, p.c("z"), m);
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            req(&mut v, not_nonpos_int(l + a + 0.5, m),
                "lambda + alpha + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 0.9, 0.0)),
                ("alpha", cplx(rng, 0.2, 1.0, 0.0)),
                ("z", cplx(rng, 1.25, 3.0, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let z = p.re("z");
            let lhs = gegenbauer_d(l, a, CutPoint::off_cut(c(z)))?;
            let w = z / (z * z - 1.0).sqrt();
            let pre = gamma_frac(&[l + a + 0.5], &[l + 1.0, a])?.scale(
                (l * LN2).exp() * phase(a - 1.0) * PI.sqrt() / (PI * l).sin()
                    * z2m1_pow(z, -(0.5 * l + a)),
            );
            let rhs = pre.mul(&gegenbauer_c(-l - 1.0, l + a + 0.5, CutPoint::off_cut(c(w)))?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F4: trigonometric-context bridges

    v.push(IdentityDescriptor {
        id: "F4.gegCtrigFerP",
        family: "F4",
        params: &["lambda", "alpha", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, -0.4, 1.3, 0.1)),
                ("alpha", cplx(rng, 0.15, 1.2, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let x = p.re("x");
            let lhs = gegenbauer_c_trig(l, a, x)?;
            let pre = gamma_frac(&[l + 2.0 * a], &[a, l + 1.0])?.scale(
                PI.sqrt() * ((0.5 - a) * LN2).exp() * rpow(1.0 - x * x, 0.25 - 0.5 * a),
            );
            let rhs = pre.mul(&ferrers_p(l + a - 0.5, 0.5 - a, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F4.gegDtrigFerQ",
        family: "F4",
        params: &["lambda", "alpha", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(l + 2.0 * a, m),
                "lambda + 2 alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(a, m),
                "alpha must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(l + 1.0, m),
                "lambda must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, -0.4, 1.3, 0.1)),
                ("alpha", cplx(rng, 0.15, 1.2, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let x = p.re("x");
            let lhs = gegenbauer_d_trig(l, a, x)?;
            let pre = gamma_frac(&[l + 2.0 * a], &[a, l + 1.0])?.scale(
                ((1.5 - a) * LN2).exp() / PI.sqrt() * rpow(1.0 - x * x, 0.25 - 0.5 * a),
            );
            let rhs = pre.mul(&ferrers_q(l + a - 0.5, 0.5 - a, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F4.ferPfromGegC",
        family: "F4",
        params: &["nu", "mu", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(0.5 - mu, m),
                "mu must stay away from the positive half-integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.1)),
                ("mu", cplx(rng, -0.45, 0.45, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let x = p.re("x");
            let lhs = ferrers_p(nu, mu, x)?;
            let pre = gamma_frac(&[0.5 - mu, nu + mu + 1.0], &[nu - mu + 1.0])?.scale(
                (-mu * LN2).exp() / PI.sqrt() * rpow(1.0 - x * x, -0.5 * mu),
            );
            let rhs = pre.mul(&gegenbauer_c_trig(nu + mu, 0.5 - mu, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F4.ferQfromGegD",
        family: "F4",
        params: &["nu", "mu", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(0.5 - mu, m),
                "mu must stay away from the positive half-integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.1)),
                ("mu", cplx(rng, -0.45, 0.45, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let x = p.re("x");
            let lhs = ferrers_q(nu, mu, x)?;
            let pre = gamma_frac(&[0.5 - mu, nu + mu + 1.0], &[nu - mu + 1.0])?.scale(
                PI.sqrt() * (-(mu + 1.0) * LN2).exp() * rpow(1.0 - x * x, -0.5 * mu),
            );
            let rhs = pre.mul(&gegenbauer_d_trig(nu + mu, 0.5 - mu, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F4.relFerPGeg",
        family: "F4",
        params: &["nu", "mu", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(2.0 * mu + 1.0, m),
                "2 mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu - mu + 1.0, m),
                "nu - mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(mu + 1.0, m),
                "mu must avoid the negative integers");
            req(&mut v, not_nonpos_int(nu + mu + 1.0, m),
                "nu + mu must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("nu", cplx(rng, -0.3, 1.4, 0.1)),
                ("mu", cplx(rng, 0.1, 1.2, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (nu, mu) = (p.c("nu"), p.c("mu"));
            let x = p.re("x");
            let lhs = ferrers_p(nu, -mu, x)?;
            let pre = gamma_frac(
                &[2.0 * mu + 1.0, nu - mu + 1.0],
                &[nu + mu + 1.0, mu + 1.0],
            )?
            .scale((-mu * LN2).exp() * rpow(1.0 - x * x, 0.5 * mu));
            let rhs = pre.mul(&gegenbauer_c_trig(nu - mu, mu + 0.5, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F4.gegCtrigReflection",
        family: "F4",
        params: &["lambda", "alpha", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            seg(&mut v, p.c("x"), m);
            req(&mut v, off_int(l + 2.0 * a, m),
                "lambda + 2 alpha must stay away from the integers");
            req(&mut v, off_int(l, m), "lambda must stay away from the integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("lambda", cplx(rng, 0.1, 0.9, 0.1)),
                ("alpha", cplx(rng, 0.15, 0.9, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (l, a) = (p.c("lambda"), p.c("alpha"));
            let x = p.re("x");
            let lhs = gegenbauer_c_trig(l, a, x)?;
            let fac = -(PI * l).sin() / (PI * (l + 2.0 * a)).sin();
            let rhs = gegenbauer_c_trig(-l - 2.0 * a, a, x)?.scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });
}

use crate::branch::powl;
