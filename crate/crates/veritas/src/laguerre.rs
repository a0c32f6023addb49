//! Laguerre functions of the first and second kind, in the plane cut along
//! [0, infinity) and on the positive real axis.

use crate::confluent::{hyp1f1_reg, hypu};
use crate::gamma::{gamma, rgamma};
use crate::value::{CutPoint, CutSide, EvalError, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

/// L_gamma^alpha(z) = Gamma(alpha+gamma+1)/Gamma(gamma+1)
/// M(-gamma; alpha+1; z) (regularized M); entire in z.
pub fn laguerre_l(gam: Complex64, alpha: Complex64, z: Complex64) -> EvalResult {
    let pre = gamma(alpha + gam + 1.0)?.mul(&rgamma(gam + 1.0));
    let f = hyp1f1_reg(-gam, alpha + 1.0, z)?;
    Ok(pre.mul(&f))
}

/// N_gamma^alpha(z) = Gamma(alpha+gamma+1) e^z U(alpha+gamma+1, alpha+1,
/// e^{-i pi} z) / 2, cut along [0, infinity) with arg z in (0, 2 pi).
///
/// The reflected argument e^{-i pi} z is principal off the cut in both
/// half-planes; boundary values x +- i0 land on opposite sides of the cut of
/// U along the negative axis.
pub fn laguerre_n(gam: Complex64, alpha: Complex64, at: CutPoint) -> EvalResult {
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re >= 0.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    let (negz, uside) = if z.im == 0.0 && z.re > 0.0 {
        (Complex64::new(-z.re, 0.0), side.flip())
    } else {
        (-z, CutSide::OffCut)
    };
    let u = hypu(alpha + gam + 1.0, alpha + 1.0, negz, uside)?;
    let pre = gamma(alpha + gam + 1.0)?.scale(0.5 * z.exp());
    Ok(pre.mul(&u))
}

/// First kind on the positive real axis:
/// (i/pi) (e^{i pi alpha} N(x-i0) - e^{-i pi alpha} N(x+i0)).
pub fn laguerre_l_trig(gam: Complex64, alpha: Complex64, x: f64) -> EvalResult {
    if x <= 0.0 {
        return Err(EvalError::OutOfSegment);
    }
    let up = laguerre_n(gam, alpha, CutPoint::above(x))?;
    let dn = laguerre_n(gam, alpha, CutPoint::below(x))?;
    let pa = (Complex64::i() * PI * alpha).exp();
    Ok(dn
        .scale(pa)
        .sub(&up.scale(1.0 / pa))
        .scale(Complex64::i() / PI))
}

/// Second kind on the positive real axis:
/// (e^{i pi alpha} N(x-i0) + e^{-i pi alpha} N(x+i0)) / 2.
pub fn laguerre_n_trig(gam: Complex64, alpha: Complex64, x: f64) -> EvalResult {
    if x <= 0.0 {
        return Err(EvalError::OutOfSegment);
    }
    let up = laguerre_n(gam, alpha, CutPoint::above(x))?;
    let dn = laguerre_n(gam, alpha, CutPoint::below(x))?;
    let pa = (Complex64::i() * PI * alpha).exp();
    Ok(dn.scale(0.5 * pa).add(&up.scale(0.5 / pa)))
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
    fn l_real_argument() {
        // mpmath laguerre(1.7, 0.3, 0.4)
        let v = laguerre_l(c(1.7, 0.0), c(0.3, 0.0), c(0.4, 0.0));
        check(v, 0.73455498224032025, 0.0, 1e-12);
    }

    #[test]
    fn l_complex_point() {
        // mpmath laguerre(0.6+0.2j, 0.4-0.1j, -1.2+0.8j)
        let v = laguerre_l(c(0.6, 0.2), c(0.4, -0.1), c(-1.2, 0.8));
        check(v, 2.0613462962557543, -0.05476530293943368, 1e-12);
    }

    #[test]
    fn n_negative_real_argument() {
        let v = laguerre_n(c(1.7, 0.0), c(0.3, 0.0), CutPoint::off_cut(c(-2.5, 0.0)));
        check(v, 0.00094612199488539684, 0.0, 1e-12);
    }

    #[test]
    fn n_complex_point() {
        let v = laguerre_n(
            c(0.6, 0.2),
            c(0.4, -0.1),
            CutPoint::off_cut(c(-1.2, 0.8)),
        );
        check(v, 0.0035604793042341257, 0.024676718560050564, 1e-12);
    }

    #[test]
    fn n_boundary_values_conjugate() {
        let (g, a) = (c(1.7, 0.0), c(0.3, 0.0));
        let up = laguerre_n(g, a, CutPoint::above(0.8));
        check(up, -0.9397509384114014, -0.96770441065882031, 1e-11);
        let dn = laguerre_n(g, a, CutPoint::below(0.8));
        check(dn, -0.9397509384114014, 0.96770441065882031, 1e-11);
    }

    #[test]
    fn trig_values_real_on_axis() {
        let (g, a) = (c(1.7, 0.0), c(0.3, 0.0));
        // the first-kind combination reproduces the entire function at x
        let l = laguerre_l_trig(g, a, 0.8).unwrap();
        assert_relative_eq!(l.re(), 0.12189492375608008, max_relative = 1e-10);
        assert!(l.im().abs() < 1e-11);
        let n = laguerre_n_trig(g, a, 0.8).unwrap();
        assert_relative_eq!(n.re(), -1.3352610561808126, max_relative = 1e-10);
        assert!(n.im().abs() < 1e-11);
    }

    #[test]
    fn positive_axis_rejected_off_cut() {
        assert!(matches!(
            laguerre_n(c(0.5, 0.0), c(0.1, 0.0), CutPoint::off_cut(c(2.0, 0.0))),
            Err(EvalError::OnBranchCut)
        ));
    }
}
