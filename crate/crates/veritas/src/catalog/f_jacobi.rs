//! Jacobi-function identities: representation consistency (F5), degree
//! reflections and argument maps (F6), symmetric/antisymmetric
//! specializations (F7), quadratic transformations (F8) and the
//! half-integer-parameter relations (F9).

use super::helpers::*;
use super::{cplx, unif, CheckConfig, Evaluation, IdentityDescriptor, Point};
use crate::branch::{ln_zm1, ln_zp1, powl};
use crate::gegenbauer::{gegenbauer_c, gegenbauer_c_trig, gegenbauer_d};
use crate::hyp::hyp2f1_reg;
use crate::jacobi::{jacobi_p, jacobi_p_trig, jacobi_q, jacobi_q_trig, JacobiOrder, Representation};
use crate::legendre::{ferrers_p, ferrers_q, legendre_p, legendre_q};
use crate::value::{CutPoint, CutSide};
use num_complex::Complex64;
use std::f64::consts::PI;

const LN2: f64 = std::f64::consts::LN_2;

fn jord(p: &Point) -> JacobiOrder {
    JacobiOrder::new(p.c("alpha"), p.c("beta"), p.c("gamma"))
}

fn off_hyp_cut(v: &mut Vec<String>, z: Complex64, m: f64) {
    req(
        v,
        z.im != 0.0 || z.re > 1.0 + m,
        "argument must lie off the cut (-inf, 1]",
    );
}

fn real_hyp(v: &mut Vec<String>, z: Complex64, m: f64) {
    req(v, z.im == 0.0 && z.re > 1.0 + m, "argument must be real and > 1");
}

fn in_segment(v: &mut Vec<String>, x: Complex64, m: f64) {
    req(v, x.im == 0.0, "abscissa must be real");
    req(
        v,
        x.re > -1.0 + m && x.re < 1.0 - m,
        "abscissa must lie inside (-1, 1)",
    );
}

pub(super) fn register(v: &mut Vec<IdentityDescriptor>) {
    // --- F5: every single-hypergeometric representation gives one function

    v.push(IdentityDescriptor {
        id: "F5.fourRepsP",
        family: "F5",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, p.c("z").re > -1.0 + m || p.c("z").im.abs() > m,
                "argument must stay off the first-kind cut (-inf, -1]");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.6, 1.2, 0.15)),
                ("beta", cplx(rng, -0.6, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let o = jord(p);
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let pre = gamma_frac(&[o.alpha + o.gamma + 1.0], &[o.gamma + 1.0])?;
            let r1 = jacobi_p(o, at, Representation::NearPlusOne)?;
            let r3 = jacobi_p(o, at, Representation::NearMinusOne)?;
            let l2 = Complex64::new(LN2, 0.0) - ln_zp1(z, CutSide::OffCut);
            let f2 = hyp2f1_reg(
                -o.beta - o.gamma,
                o.alpha + o.gamma + 1.0,
                o.alpha + 1.0,
                (1.0 - z) / 2.0,
            )?;
            let r2 = pre.mul(&f2).scale(powl(l2, o.beta));
            let f4 = hyp2f1_reg(
                o.alpha + o.gamma + 1.0,
                o.alpha + o.beta + o.gamma + 1.0,
                o.alpha + 1.0,
                (z - 1.0) / (z + 1.0),
            )?;
            let r4 = pre
                .mul(&f4)
                .scale(powl(l2, o.alpha + o.beta + o.gamma + 1.0));
            let (lhs, rhs) = worst_pair(&[r1, r2, r3, r4]);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F5.fourRepsQ",
        family: "F5",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, p.c("z").re > -1.0 + m || p.c("z").im.abs() > m,
                "argument must stay off the segment [-1, 1]");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("beta") + p.c("gamma") + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.6, 1.2, 0.15)),
                ("beta", cplx(rng, -0.6, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let o = jord(p);
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let s = o.alpha + o.beta + o.gamma;
            let r1 = jacobi_q(o, at, Representation::NearPlusOne)?;
            let r2 = jacobi_q(o, at, Representation::NearMinusOne)?;
            let pre = gamma_frac(&[o.alpha + o.gamma + 1.0, o.beta + o.gamma + 1.0], &[])?
                .scale((s * LN2).exp());
            let c2 = o.alpha + o.beta + 2.0 * o.gamma + 2.0;
            let lm = ln_zm1(z, CutSide::OffCut);
            let lp = ln_zp1(z, CutSide::OffCut);
            let f4 = hyp2f1_reg(o.beta + o.gamma + 1.0, s + 1.0, c2, 2.0 / (1.0 - z))?;
            let r4 = pre.mul(&f4).scale(powl(lm, -(s + 1.0)));
            let f3 = hyp2f1_reg(o.gamma + 1.0, o.beta + o.gamma + 1.0, c2, 2.0 / (1.0 + z))?;
            let r3 = pre
                .mul(&f3)
                .scale(powl(lm, -o.alpha) * powl(lp, -(o.beta + o.gamma + 1.0)));
            let (lhs, rhs) = worst_pair(&[r1, r2, r3, r4]);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F5.trigQrep3",
        family: "F5",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, off_int(p.c("beta"), m), "beta must stay away from the integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("beta") + p.c("gamma") + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.5, 1.1, 0.1)),
                ("beta", cplx(rng, -0.5, 1.1, 0.1)),
                ("gamma", cplx(rng, -0.3, 1.3, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_q_trig(JacobiOrder::new(a, b, g), x)?;
            let arg = c((1.0 + x) / 2.0);
            let t1 = gamma_frac(&[b + g + 1.0], &[g + 1.0])?
                .mul(&hyp2f1_reg(-g, a + b + g + 1.0, 1.0 + b, arg)?)
                .scale((PI * (b + g)).cos());
            let t2 = gamma_frac(&[a + g + 1.0], &[a + b + g + 1.0])?
                .mul(&hyp2f1_reg(g + 1.0, -a - b - g, 1.0 - b, arg)?)
                .scale(
                    (PI * (g + 1.0)).cos()
                        * rpow(2.0 / (1.0 - x), a)
                        * rpow(2.0 / (1.0 + x), b),
                );
            let rhs = t1.add(&t2).scale(0.5 * PI / (PI * b).sin());
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F5.trigQrep6",
        family: "F5",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, off_int(p.c("alpha"), m), "alpha must stay away from the integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("beta") + p.c("gamma") + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.5, 1.1, 0.1)),
                ("beta", cplx(rng, -0.5, 1.1, 0.1)),
                ("gamma", cplx(rng, -0.3, 1.3, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_q_trig(JacobiOrder::new(a, b, g), x)?;
            let arg = c((x - 1.0) / (x + 1.0));
            let t1 = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&hyp2f1_reg(-g, -b - g, 1.0 + a, arg)?)
                .scale((PI * (a + 1.0)).cos() * rpow((1.0 + x) / 2.0, g));
            let t2 = gamma_frac(&[b + g + 1.0], &[a + b + g + 1.0])?
                .mul(&hyp2f1_reg(g + 1.0, b + g + 1.0, 1.0 - a, arg)?)
                .scale(rpow(2.0 / (1.0 - x), a) * rpow(2.0 / (1.0 + x), b + g + 1.0));
            let rhs = t1.add(&t2).scale(0.5 * PI / (PI * a).sin());
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F6: degree reflections and argument maps

    v.push(IdentityDescriptor {
        id: "F6.degreeReflectP",
        family: "F6",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, off_int(g - a, m), "gamma - alpha must stay away from the integers");
            req(&mut v, off_int(g, m), "gamma must stay away from the integers");
            req(&mut v, not_nonpos_int(a - g, m),
                "alpha - gamma - 1 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.6, 0.9, 0.1)),
                ("beta", cplx(rng, -0.6, 0.9, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.2, 0.1)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_p(JacobiOrder::new(a, b, -g - 1.0), at, Representation::Auto)?;
            let fac = (PI * g).sin() / (PI * (g - a)).sin()
                * powl(Complex64::new(LN2, 0.0) - ln_zp1(z, CutSide::OffCut), b);
            let rhs = jacobi_p(JacobiOrder::new(a, -b, g - a), at, Representation::Auto)?
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F6.degreeReflectPTrig",
        family: "F6",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, off_int(g - a, m), "gamma - alpha must stay away from the integers");
            req(&mut v, off_int(g, m), "gamma must stay away from the integers");
            req(&mut v, not_nonpos_int(a - g, m),
                "alpha - gamma - 1 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.6, 0.9, 0.1)),
                ("beta", cplx(rng, -0.6, 0.9, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.2, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_p_trig(JacobiOrder::new(a, b, -g - 1.0), c(x))?;
            let fac = (PI * g).sin() / (PI * (g - a)).sin() * rpow(2.0 / (1.0 + x), b);
            let rhs = jacobi_p_trig(JacobiOrder::new(a, -b, g - a), c(x))?.scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F6.qToTrigP",
        family: "F6",
        params: &["alpha", "beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            real_hyp(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(-(a + b + g), m),
                "alpha + beta + gamma must avoid the nonnegative integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 0.7, 0.0)),
                ("beta", cplx(rng, -0.4, 0.7, 0.0)),
                ("gamma", cplx(rng, -0.3, 0.8, 0.0)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let z = p.c("z");
            let s = a + b + g;
            let lhs = jacobi_q(JacobiOrder::new(a, b, g), CutPoint::off_cut(z), Representation::Auto)?;
            let pre = gamma_frac(&[a + g + 1.0, b + g + 1.0, -s], &[g + 1.0])?
                .scale((s * LN2).exp() * powl(ln_zp1(z, CutSide::OffCut), -(s + 1.0)));
            let arg = (z - 3.0) / (z + 1.0);
            let rhs = pre.mul(&jacobi_p_trig(
                JacobiOrder::new(a + b + 2.0 * g + 1.0, a, -s - 1.0),
                arg,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F6.trigPToHyp",
        family: "F6",
        params: &["alpha", "beta", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.5, 1.0, 0.1)),
                ("beta", cplx(rng, -0.5, 1.0, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.2, 0.1)),
                ("x", cplx(rng, -0.6, 0.85, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, b, g) = (p.c("alpha"), p.c("beta"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_p_trig(JacobiOrder::new(a, b, g), c(x))?;
            let arg = (3.0 - x) / (1.0 + x);
            let rhs = jacobi_p(
                JacobiOrder::new(a, -a - b - 2.0 * g - 1.0, g),
                CutPoint::off_cut(c(arg)),
                Representation::Auto,
            )?
            .scale(rpow((1.0 + x) / 2.0, g));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F7: symmetric and antisymmetric specializations

    v.push(IdentityDescriptor {
        id: "F7.symPGegC",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + g + 1.0, m),
                "2 alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + 1.0, m),
                "2 alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(a + 0.5, m),
                "alpha must stay away from the negative half-integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = jacobi_p(JacobiOrder::new(a, a, g), at, Representation::Auto)?;
            let pre = gamma_frac(&[2.0 * a + 1.0, a + g + 1.0], &[a + 1.0, 2.0 * a + g + 1.0])?;
            let rhs = pre.mul(&gegenbauer_c(g, a + 0.5, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.symPLegP",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_p(JacobiOrder::new(a, a, g), at, Representation::Auto)?;
            let fac = (a * LN2).exp() * powl(crate::branch::ln_z2m1(z, CutSide::OffCut), -0.5 * a);
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&legendre_p(a + g, -a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.symPFerP",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_p_trig(JacobiOrder::new(a, a, g), c(x))?;
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&ferrers_p(a + g, -a, x)?)
                .scale((a * LN2).exp() * rpow(1.0 - x * x, -0.5 * a));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymPFerP",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_p_trig(JacobiOrder::new(a, -a, g), c(x))?;
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&ferrers_p(g, -a, x)?)
                .scale(rpow((1.0 + x) / (1.0 - x), 0.5 * a));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymPGegCTrig",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g - a + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + 1.0, m),
                "2 alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.1, 0.1)),
                ("gamma", cplx(rng, -0.3, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_p_trig(JacobiOrder::new(a, -a, g), c(x))?;
            let pre = gamma_frac(&[2.0 * a + 1.0, g - a + 1.0], &[g + 1.0, a + 1.0])?
                .scale((-a * LN2).exp() * rpow(1.0 + x, a));
            let rhs = pre.mul(&gegenbauer_c_trig(g - a, a + 0.5, x)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymPLegP",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_p(JacobiOrder::new(a, -a, g), at, Representation::Auto)?;
            let fac = powl(
                ln_zp1(z, CutSide::OffCut) - ln_zm1(z, CutSide::OffCut),
                0.5 * a,
            );
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&legendre_p(g, -a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.symQLegNeg",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * p.c("alpha") + p.c("gamma") + 1.0, m),
                "2 alpha + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(a, a, g), at, Representation::Auto)?;
            let fac = (a * LN2).exp()
                * phase(a)
                * powl(crate::branch::ln_z2m1(z, CutSide::OffCut), -0.5 * a);
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&legendre_q(a + g, -a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.symQLegPos",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * p.c("alpha") + p.c("gamma") + 1.0, m),
                "2 alpha + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(a, a, g), at, Representation::Auto)?;
            let fac = (a * LN2).exp()
                * phase(-a)
                * powl(crate::branch::ln_z2m1(z, CutSide::OffCut), -0.5 * a);
            let rhs = gamma_frac(&[a + g + 1.0], &[2.0 * a + g + 1.0])?
                .mul(&legendre_q(a + g, a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymQLeg",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("gamma") - p.c("alpha") + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.0, 0.15)),
                ("gamma", cplx(rng, -0.2, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(a, -a, g), at, Representation::Auto)?;
            let fac = phase(-a)
                * powl(
                    ln_zp1(z, CutSide::OffCut) - ln_zm1(z, CutSide::OffCut),
                    0.5 * a,
                );
            let rhs = gamma_frac(&[g - a + 1.0], &[g + 1.0])?
                .mul(&legendre_q(g, a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymQLegFlip",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(p.c("gamma") - p.c("alpha") + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.0, 0.15)),
                ("gamma", cplx(rng, -0.2, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(-a, a, g), at, Representation::Auto)?;
            let fac = phase(-a)
                * powl(
                    ln_zm1(z, CutSide::OffCut) - ln_zp1(z, CutSide::OffCut),
                    0.5 * a,
                );
            let rhs = gamma_frac(&[g - a + 1.0], &[g + 1.0])?
                .mul(&legendre_q(g, a, at)?)
                .scale(fac);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.symQGegD",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(a + 0.5, m),
                "alpha must stay away from the negative half-integers");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + g + 1.0, m),
                "2 alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(2.0 * a + 1.0, m),
                "2 alpha must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let at = CutPoint::off_cut(p.c("z"));
            let lhs = jacobi_q(JacobiOrder::new(a, a, g), at, Representation::Auto)?;
            let pre = gamma_frac(&[2.0 * a + 1.0, a + g + 1.0], &[a + 1.0, 2.0 * a + g + 1.0])?
                .scale(PI * phase(-(a + 0.5)));
            let rhs = pre.mul(&gegenbauer_d(g, a + 0.5, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.asymQGegD",
        family: "F7",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(0.5 - a, m),
                "alpha must stay away from the positive half-integers");
            req(&mut v, not_nonpos_int(g + 1.5, m),
                "gamma must stay away from -3/2, -5/2, ...");
            req(&mut v, not_nonpos_int(a + g + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g - a + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.45, 0.45, 0.1)),
                ("gamma", cplx(rng, -0.2, 1.3, 0.1)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(a, -a, g), at, Representation::Auto)?;
            let pre = gamma_frac(&[a + g + 1.0, 0.5 - a, g + 1.5], &[2.0 * g + 2.0])?.scale(
                phase(a - 0.5)
                    * ((2.0 * g - a + 1.0) * LN2).exp()
                    * powl(ln_zm1(z, CutSide::OffCut), -a),
            );
            let rhs = pre.mul(&gegenbauer_d(a + g, 0.5 - a, at)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.ferQsym",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.2, 0.1)),
                ("gamma", cplx(rng, -0.4, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_q_trig(JacobiOrder::new(a, a, g), x)?;
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&ferrers_q(g + a, -a, x)?)
                .scale((a * LN2).exp() * rpow(1.0 - x * x, -0.5 * a));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.ferQasym",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") - p.c("alpha") + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.0, 0.1)),
                ("gamma", cplx(rng, -0.2, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_q_trig(JacobiOrder::new(a, -a, g), x)?;
            let rhs = gamma_frac(&[a + g + 1.0], &[g + 1.0])?
                .mul(&ferrers_q(g, -a, x)?)
                .scale(rpow((1.0 + x) / (1.0 - x), 0.5 * a));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F7.ferQasymFlip",
        family: "F7",
        params: &["alpha", "gamma", "x"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            in_segment(&mut v, p.c("x"), m);
            req(&mut v, not_nonpos_int(p.c("gamma") - p.c("alpha") + 1.0, m),
                "gamma - alpha must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("alpha") + p.c("gamma") + 1.0, m),
                "alpha + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(p.c("gamma") + 1.0, m),
                "gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("alpha", cplx(rng, -0.4, 1.0, 0.1)),
                ("gamma", cplx(rng, -0.2, 1.4, 0.1)),
                ("x", cplx(rng, -0.8, 0.8, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let x = p.re("x");
            let lhs = jacobi_q_trig(JacobiOrder::new(-a, a, g), x)?;
            let rhs = gamma_frac(&[g - a + 1.0], &[g + 1.0])?
                .mul(&ferrers_q(g, a, x)?)
                .scale(rpow((1.0 - x) / (1.0 + x), 0.5 * a));
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F8: quadratic transformations

    v.push(IdentityDescriptor {
        id: "F8.p2gEven",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: quad_constraints_even,
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_p(
                JacobiOrder::new(a, a, 2.0 * g),
                CutPoint::off_cut(z),
                Representation::Auto,
            )?;
            let pre = gamma_frac(&[a + 2.0 * g + 1.0], &[g + 0.5, a + g + 1.0])?
                .scale(PI.sqrt() * (-2.0 * g * LN2).exp());
            let rhs = pre.mul(&jacobi_p(
                JacobiOrder::new(a, c(-0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F8.p2gOdd",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: quad_constraints_odd,
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_p(
                JacobiOrder::new(a, a, 2.0 * g + 1.0),
                CutPoint::off_cut(z),
                Representation::Auto,
            )?;
            let pre = gamma_frac(&[a + 2.0 * g + 2.0], &[g + 1.5, a + g + 1.0])?
                .scale(PI.sqrt() * z * (-(2.0 * g + 1.0) * LN2).exp());
            let rhs = pre.mul(&jacobi_p(
                JacobiOrder::new(a, c(0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F8.q2gEven",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: quad_constraints_even,
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_q(
                JacobiOrder::new(a, a, 2.0 * g),
                CutPoint::off_cut(z),
                Representation::Auto,
            )?;
            let pre = gamma_frac(&[a + 2.0 * g + 1.0], &[g + 0.5, a + g + 1.0])?
                .scale(PI.sqrt() * (-2.0 * g * LN2).exp());
            let rhs = pre.mul(&jacobi_q(
                JacobiOrder::new(a, c(-0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F8.q2gOdd",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: quad_constraints_odd,
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_q(
                JacobiOrder::new(a, a, 2.0 * g + 1.0),
                CutPoint::off_cut(z),
                Representation::Auto,
            )?;
            let pre = gamma_frac(&[a + 2.0 * g + 2.0], &[g + 1.5, a + g + 1.0])?
                .scale(PI.sqrt() * z * (-(2.0 * g + 1.0) * LN2).exp());
            let rhs = pre.mul(&jacobi_q(
                JacobiOrder::new(a, c(0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F8.jacToGegEven",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = quad_constraints_even(p, m);
            req(&mut v, not_nonpos_int(p.c("alpha") + 0.5, m),
                "alpha must stay away from the negative half-integers");
            v
        },
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_p(
                JacobiOrder::new(a, c(-0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?;
            let rhs = gamma_frac(&[g + 0.5, a + 0.5], &[g + a + 0.5])?
                .scale(c(1.0 / PI.sqrt()))
                .mul(&gegenbauer_c(2.0 * g, a + 0.5, CutPoint::off_cut(z))?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F8.jacToGegOdd",
        family: "F8",
        params: &["alpha", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = quad_constraints_odd(p, m);
            req(&mut v, not_nonpos_int(p.c("alpha") + 0.5, m),
                "alpha must stay away from the negative half-integers");
            v
        },
        sample: quad_sample,
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (a, g) = (p.c("alpha"), p.c("gamma"));
            let z = p.c("z");
            let lhs = jacobi_p(
                JacobiOrder::new(a, c(0.5), g),
                CutPoint::off_cut(2.0 * z * z - 1.0),
                Representation::Auto,
            )?;
            let rhs = gamma_frac(&[g + 1.5, a + 0.5], &[a + g + 1.5])?
                .scale(1.0 / (PI.sqrt() * z))
                .mul(&gegenbauer_c(2.0 * g + 1.0, a + 0.5, CutPoint::off_cut(z))?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    // --- F9: half-integer-parameter relations

    v.push(IdentityDescriptor {
        id: "F9.altquadOdd",
        family: "F9",
        params: &["beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (b, g, z) = (p.c("beta"), p.c("gamma"), p.c("z"));
            req(&mut v, z.im == 0.0 && z.re > m && z.re < 1.0 - m,
                "argument must be real inside (0, 1)");
            req(&mut v, not_nonpos_int(b + g + 0.5, m),
                "beta + gamma + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(-g - 0.5, m),
                "gamma must stay away from the half-integers >= -1/2");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b, m), "beta must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("beta", cplx(rng, 0.3, 1.4, 0.0)),
                ("gamma", cplx(rng, -0.4, 0.6, 0.0)),
                ("z", cplx(rng, 0.15, 0.85, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (b, g) = (p.c("beta"), p.c("gamma"));
            let zt = p.re("z");
            let lhs = gegenbauer_c_trig(2.0 * g + 1.0, b, zt)?;
            let arg = (1.0 + zt * zt) / (1.0 - zt * zt);
            let pre = gamma_frac(&[b + g + 0.5], &[-g - 0.5, 2.0 * g + 2.0, b])?.scale(
                ((2.0 * g + 2.0) * LN2).exp() * rpow(1.0 - zt * zt, -(b + g + 0.5)),
            );
            let rhs = pre.mul(&jacobi_q(
                JacobiOrder::new(c(-0.5), b + 2.0 * g + 1.0, -g - 1.0),
                CutPoint::off_cut(c(arg)),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F9.altquadEven",
        family: "F9",
        params: &["beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (b, g, z) = (p.c("beta"), p.c("gamma"), p.c("z"));
            req(&mut v, z.im == 0.0 && z.re > m && z.re < 1.0 - m,
                "argument must be real inside (0, 1)");
            req(&mut v, not_nonpos_int(b + g + 0.5, m),
                "beta + gamma + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(0.5 - g, m),
                "gamma must stay away from the half-integers >= 1/2");
            req(&mut v, not_nonpos_int(b + g, m),
                "beta + gamma must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b, m), "beta must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(2.0 * g + 1.0, m),
                "2 gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("beta", cplx(rng, 0.3, 1.4, 0.0)),
                ("gamma", cplx(rng, -0.4, 0.4, 0.0)),
                ("z", cplx(rng, 0.15, 0.85, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (b, g) = (p.c("beta"), p.c("gamma"));
            let zt = p.re("z");
            let lhs = gegenbauer_c_trig(2.0 * g, b, zt)?;
            let arg = (1.0 + zt * zt) / (1.0 - zt * zt);
            let pre = gamma_frac(&[b + g + 0.5], &[0.5 - g, 2.0 * g + 1.0, b])?.scale(
                ((2.0 * g + 1.0) * LN2).exp() * zt * rpow(1.0 - zt * zt, -(b + g + 0.5)),
            );
            let rhs = pre.mul(&jacobi_q(
                JacobiOrder::new(c(0.5), b + 2.0 * g, -g - 1.0),
                CutPoint::off_cut(c(arg)),
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F9.qHalfToC",
        family: "F9",
        params: &["beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (b, g) = (p.c("beta"), p.c("gamma"));
            real_hyp(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(-2.0 * g - 1.0, m),
                "-2 gamma - 1 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g + 1.5, m),
                "gamma + 3/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b + 2.0 * g + 2.0, m),
                "beta + 2 gamma + 2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("beta", cplx(rng, 0.3, 1.3, 0.0)),
                ("gamma", cplx(rng, -0.45, -0.06, 0.0)),
                ("z", cplx(rng, 1.2, 3.0, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (b, g) = (p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let lhs = jacobi_q(
                JacobiOrder::new(c(0.5), b, g),
                CutPoint::off_cut(c(z)),
                Representation::Auto,
            )?;
            let sq = ((z - 1.0) / (z + 1.0)).sqrt();
            let pre = gamma_frac(
                &[-2.0 * g - 1.0, g + 1.5, b + 2.0 * g + 2.0],
                &[b + g + 1.5],
            )?
            .scale(
                ((b + 3.0 * g + 2.5) * LN2).exp()
                    * rpow(z - 1.0, c(-0.5))
                    * rpow(z + 1.0, -(b + g + 1.0)),
            );
            let rhs = pre.mul(&gegenbauer_c_trig(-2.0 * g - 2.0, b + 2.0 * g + 2.0, sq)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F9.qMinusHalfToC",
        family: "F9",
        params: &["beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (b, g) = (p.c("beta"), p.c("gamma"));
            real_hyp(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(-2.0 * g, m),
                "-2 gamma must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(g + 0.5, m),
                "gamma + 1/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b + 2.0 * g + 1.0, m),
                "beta + 2 gamma + 1 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("beta", cplx(rng, 0.3, 1.3, 0.0)),
                ("gamma", cplx(rng, -0.45, -0.06, 0.0)),
                ("z", cplx(rng, 1.2, 3.0, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (b, g) = (p.c("beta"), p.c("gamma"));
            let z = p.re("z");
            let lhs = jacobi_q(
                JacobiOrder::new(c(-0.5), b, g),
                CutPoint::off_cut(c(z)),
                Representation::Auto,
            )?;
            let sq = ((z - 1.0) / (z + 1.0)).sqrt();
            let pre = gamma_frac(
                &[-2.0 * g, g + 0.5, b + 2.0 * g + 1.0],
                &[b + g + 0.5],
            )?
            .scale(((b + 3.0 * g + 0.5) * LN2).exp() * rpow(z + 1.0, -(b + g + 0.5)));
            let rhs = pre.mul(&gegenbauer_c_trig(-2.0 * g - 1.0, b + 2.0 * g + 1.0, sq)?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });

    v.push(IdentityDescriptor {
        id: "F9.qHalfShift",
        family: "F9",
        params: &["beta", "gamma", "z"],
        default_tol: 1e-9,
        constraints: |p: &Point, m| {
            let mut v = Vec::new();
            let (b, g) = (p.c("beta"), p.c("gamma"));
            off_hyp_cut(&mut v, p.c("z"), m);
            req(&mut v, not_nonpos_int(g + 1.5, m),
                "gamma + 3/2 must avoid the nonpositive integers");
            req(&mut v, not_nonpos_int(b + g + 1.0, m),
                "beta + gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(g + 1.0, m),
                "gamma must avoid the negative integers");
            req(&mut v, not_nonpos_int(b + g + 1.5, m),
                "beta + gamma + 3/2 must avoid the nonpositive integers");
            v
        },
        sample: |rng| {
            Point(vec![
                ("beta", cplx(rng, -0.4, 1.3, 0.15)),
                ("gamma", cplx(rng, -0.4, 1.2, 0.15)),
                ("z", cplx(rng, 1.2, 3.2, 0.0)),
            ])
        },
        eval: |p: &Point, _cfg: &CheckConfig| {
            let (b, g) = (p.c("beta"), p.c("gamma"));
            let z = p.c("z");
            let at = CutPoint::off_cut(z);
            let lhs = jacobi_q(JacobiOrder::new(c(0.5), b, g), at, Representation::Auto)?;
            let pre = gamma_frac(&[g + 1.5, b + g + 1.0], &[g + 1.0, b + g + 1.5])?.scale(
                powl(Complex64::new(LN2, 0.0) - ln_zm1(z, CutSide::OffCut), c(0.5)),
            );
            let rhs = pre.mul(&jacobi_q(
                JacobiOrder::new(c(-0.5), b, g + 0.5),
                at,
                Representation::Auto,
            )?);
            Ok(Evaluation::algebraic(lhs, rhs))
        },
    });
}

fn quad_sample(rng: &mut rand_chacha::ChaCha8Rng) -> Point {
    Point(vec![
        ("alpha", cplx(rng, -0.4, 1.2, 0.1)),
        ("gamma", cplx(rng, -0.2, 1.2, 0.1)),
        ("z", c(unif(rng, 1.1, 2.2))),
    ])
}

fn quad_constraints_even(p: &Point, m: f64) -> Vec<String> {
    let mut v = Vec::new();
    let (a, g) = (p.c("alpha"), p.c("gamma"));
    req(&mut v,
        p.c("z").im != 0.0 || p.c("z").re > 1.0 + m,
        "argument must lie off the cut (-inf, 1]");
    req(&mut v, not_nonpos_int(a + 2.0 * g + 1.0, m),
        "alpha + 2 gamma must avoid the negative integers");
    req(&mut v, not_nonpos_int(g + 0.5, m),
        "gamma must stay away from the negative half-integers");
    req(&mut v, not_nonpos_int(a + g + 1.0, m),
        "alpha + gamma must avoid the negative integers");
    v
}

fn quad_constraints_odd(p: &Point, m: f64) -> Vec<String> {
    let mut v = Vec::new();
    let (a, g) = (p.c("alpha"), p.c("gamma"));
    req(&mut v,
        p.c("z").im != 0.0 || p.c("z").re > 1.0 + m,
        "argument must lie off the cut (-inf, 1]");
    req(&mut v, not_nonpos_int(a + 2.0 * g + 2.0, m),
        "alpha + 2 gamma + 1 must avoid the negative integers");
    req(&mut v, not_nonpos_int(g + 1.5, m),
        "gamma must stay away from -3/2, -5/2, ...");
    req(&mut v, not_nonpos_int(a + g + 1.0, m),
        "alpha + gamma must avoid the negative integers");
    v
}
