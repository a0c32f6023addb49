//! Gegenbauer functions of the first and second kind for complex degree and
//! parameter, plus their trigonometric-context companions on (-1, 1).

use crate::branch::{ln_z, ln_zm1, ln_zp1, powl};
use crate::gamma::{gamma, rgamma};
use crate::hyp::{hyp2f1_reg, hyp2f1_reg_side, integer_distance, richardson_perturb};
use crate::jacobi::cut_arg;
use crate::value::{CutPoint, CutSide, EvalError, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

const LN2: Complex64 = Complex64::new(std::f64::consts::LN_2, 0.0);

/// C_lambda^alpha(z), cut along (-infinity, -1]:
/// sqrt(pi) Gamma(2 alpha + lambda) 2^{1-2 alpha} / (Gamma(alpha)
/// Gamma(lambda+1)) F(-lambda, 2 alpha + lambda; alpha + 1/2; (1-z)/2).
pub fn gegenbauer_c(lambda: Complex64, alpha: Complex64, at: CutPoint) -> EvalResult {
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re <= -1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    let w = (1.0 - z) / 2.0;
    let wside = if z.im == 0.0 && z.re < -1.0 {
        side.flip()
    } else {
        CutSide::OffCut
    };
    let f = hyp2f1_reg_side(-lambda, 2.0 * alpha + lambda, alpha + 0.5, w, wside)?;
    let pre = gamma(2.0 * alpha + lambda)?
        .mul(&rgamma(alpha))
        .mul(&rgamma(lambda + 1.0))
        .scale(Complex64::new(PI.sqrt(), 0.0) * powl(LN2, 1.0 - 2.0 * alpha));
    Ok(pre.mul(&f))
}

/// D_lambda^alpha(z), cut along (-infinity, 1].
///
/// Away from z = 1 an inverse-square-argument form is used; near it a
/// 2/(1-z) form, whose Gamma(lambda + alpha + 1/2) coefficient needs a
/// perturbation limit when it sits at a pole.
pub fn gegenbauer_d(lambda: Complex64, alpha: Complex64, at: CutPoint) -> EvalResult {
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re <= 1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    if z.norm() >= 1.15 {
        return gegenbauer_d_inv(lambda, alpha, z, side);
    }
    let dist = integer_distance(lambda + alpha + 0.5);
    if (lambda + alpha + 0.5).re < 0.5 && dist < 1e-6 {
        return richardson_perturb(dist, |d| {
            gegenbauer_d_near_one(lambda + Complex64::new(d, 0.0), alpha, z, side)
        });
    }
    gegenbauer_d_near_one(lambda, alpha, z, side)
}

// e^{i pi alpha} Gamma(lambda + 2 alpha) (2z)^{-lambda - 2 alpha} / Gamma(alpha)
//   F(lambda/2 + alpha, lambda/2 + alpha + 1/2; lambda + alpha + 1; 1/z^2)
fn gegenbauer_d_inv(lambda: Complex64, alpha: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    let w = 1.0 / (z * z);
    let w = if z.im == 0.0 { Complex64::new(w.re, 0.0) } else { w };
    let f = hyp2f1_reg(
        lambda / 2.0 + alpha,
        lambda / 2.0 + alpha + 0.5,
        lambda + alpha + 1.0,
        w,
    )?;
    let pre = gamma(lambda + 2.0 * alpha)?.mul(&rgamma(alpha)).scale(
        (Complex64::i() * PI * alpha).exp()
            * powl(ln_z(z, side) + LN2, -(lambda + 2.0 * alpha)),
    );
    Ok(pre.mul(&f))
}

// e^{i pi alpha} 2^lambda Gamma(lambda + alpha + 1/2) Gamma(lambda + 2 alpha)
//   (z-1)^{-lambda-alpha-1/2} (z+1)^{1/2-alpha} / (sqrt(pi) Gamma(alpha))
//   F(lambda+1, lambda + alpha + 1/2; 2 lambda + 2 alpha + 1; 2/(1-z))
fn gegenbauer_d_near_one(
    lambda: Complex64,
    alpha: Complex64,
    z: Complex64,
    side: CutSide,
) -> EvalResult {
    let (w, wside) = cut_arg(z, side, 2.0 / (1.0 - z), true);
    let f = hyp2f1_reg_side(
        lambda + 1.0,
        lambda + alpha + 0.5,
        2.0 * lambda + 2.0 * alpha + 1.0,
        w,
        wside,
    )?;
    let pre = gamma(lambda + alpha + 0.5)?
        .mul(&gamma(lambda + 2.0 * alpha)?)
        .mul(&rgamma(alpha))
        .scale(
            (Complex64::i() * PI * alpha).exp() * powl(LN2, lambda) / PI.sqrt()
                * powl(ln_zm1(z, side), -(lambda + alpha + 0.5))
                * powl(ln_zp1(z, side), 0.5 - alpha),
        );
    Ok(pre.mul(&f))
}

/// First kind in the trigonometric context; both boundary values coincide
/// since the cut of C stays left of -1.
pub fn gegenbauer_c_trig(lambda: Complex64, alpha: Complex64, x: f64) -> EvalResult {
    if !(-1.0 < x && x < 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    gegenbauer_c(lambda, alpha, CutPoint::off_cut(Complex64::new(x, 0.0)))
}

/// Second kind in the trigonometric context:
/// e^{-i pi/2} D(x+i0) + e^{-2 i pi (alpha - 1/4)} D(x-i0).
pub fn gegenbauer_d_trig(lambda: Complex64, alpha: Complex64, x: f64) -> EvalResult {
    if !(-1.0 < x && x < 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    let up = gegenbauer_d(lambda, alpha, CutPoint::above(x))?;
    let dn = gegenbauer_d(lambda, alpha, CutPoint::below(x))?;
    let pa = (-Complex64::i() * PI / 2.0).exp();
    let pb = (-2.0 * Complex64::i() * PI * (alpha - 0.25)).exp();
    Ok(up.scale(pa).add(&dn.scale(pb)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn check(v: EvalResult, re: f64, im: f64, tol: f64) {
        let v = v.unwrap();
        assert_relative_eq!(v.re(), re, epsilon = tol, max_relative = tol);
        assert_relative_eq!(v.im(), im, epsilon = tol, max_relative = tol);
    }

    #[test]
    fn c_real_argument() {
        // mpmath gegenbauer(1.7, 0.3, 1.5)
        let v = gegenbauer_c(c(1.7, 0.0), c(0.3, 0.0), CutPoint::off_cut(c(1.5, 0.0)));
        check(v, 1.2228923004330717, 0.0, 1e-12);
    }

    #[test]
    fn c_complex_point() {
        // mpmath gegenbauer(0.6+0.2j, 0.4-0.1j, 0.8+0.5j)
        let v = gegenbauer_c(
            c(0.6, 0.2),
            c(0.4, -0.1),
            CutPoint::off_cut(c(0.8, 0.5)),
        );
        check(v, 0.76916845117049409, 0.012602163884187289, 1e-12);
    }

    #[test]
    fn c_boundary_value() {
        let v = gegenbauer_c(c(1.7, 0.0), c(0.3, 0.0), CutPoint::above(-2.0));
        check(v, 1.2581484047593901, -1.7052855172433528, 1e-12);
    }

    #[test]
    fn d_representations_agree() {
        // both hypergeometric forms at z = 1.3+0.6j; frozen value
        // (0.1426679395035067 + 0.022130278915023321j)
        let (lam, al, z) = (c(0.6, 0.2), c(0.4, -0.1), c(1.3, 0.6));
        let a = gegenbauer_d_inv(lam, al, z, CutSide::OffCut);
        let b = gegenbauer_d_near_one(lam, al, z, CutSide::OffCut);
        check(a, 0.1426679395035067, 0.022130278915023321, 1e-11);
        check(b, 0.1426679395035067, 0.022130278915023321, 1e-11);
    }

    #[test]
    fn d_real_argument() {
        let v = gegenbauer_d(c(1.7, 0.0), c(0.3, 0.0), CutPoint::off_cut(c(3.0, 0.0)));
        check(v, 0.0020019935381100372, 0.0027555077107547725, 1e-12);
    }

    #[test]
    fn d_boundary_values() {
        let (lam, al) = (c(1.7, 0.0), c(0.3, 0.0));
        let up = gegenbauer_d(lam, al, CutPoint::above(0.4));
        check(up, -0.042811660164274593, -0.16348379558114405, 1e-11);
        let dn = gegenbauer_d(lam, al, CutPoint::below(0.4));
        check(dn, -0.14225279854794608, -0.091235579512140442, 1e-11);
    }

    #[test]
    fn d_trig_is_real_for_real_parameters() {
        let v = gegenbauer_d_trig(c(1.7, 0.0), c(0.3, 0.0), 0.4).unwrap();
        assert_relative_eq!(v.re(), -0.3269675911622881, max_relative = 1e-11);
        assert!(v.im().abs() < 1e-11);
    }

    #[test]
    fn c_trig_value() {
        let v = gegenbauer_c_trig(c(1.7, 0.0), c(0.3, 0.0), 0.4);
        check(v, -0.085623320328549186, 0.0, 1e-12);
    }
}
