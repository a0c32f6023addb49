//! Jacobi functions of the first and second kind for complex degree and
//! parameters, in the hyperbolic context (argument plane cut along the real
//! axis) and the trigonometric context (the segment (-1, 1)).

use crate::branch::{ln_zm1, ln_zp1, powl};
use crate::gamma::{gamma, rgamma};
use crate::hyp::hyp2f1_reg_side;
use crate::value::{
    near_nonpositive_int, ComplexValue, CutPoint, CutSide, EvalError, EvalResult,
};
use num_complex::Complex64;
use std::f64::consts::PI;

const LN2: f64 = std::f64::consts::LN_2;

/// Degree and the two exponent parameters of a Jacobi function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOrder {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

impl JacobiOrder {
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Self {
        Self { alpha, beta, gamma }
    }

    /// alpha + gam must avoid the negative integers for the first kind.
    pub fn valid_first_kind(&self) -> Result<(), EvalError> {
        if near_nonpositive_int(self.alpha + self.gamma + 1.0, 1e-300) {
            return Err(EvalError::DegreeOrderPole);
        }
        Ok(())
    }

    /// The second kind additionally needs beta + gam off the negative
    /// integers.
    pub fn valid_second_kind(&self) -> Result<(), EvalError> {
        self.valid_first_kind()?;
        if near_nonpositive_int(self.beta + self.gamma + 1.0, 1e-300) {
            return Err(EvalError::DegreeOrderPole);
        }
        Ok(())
    }
}

/// Which single-hypergeometric representation to evaluate through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Pick by the modulus of the hypergeometric argument.
    Auto,
    /// Argument (1-z)/2 (first kind) or 2/(1-z) (second kind).
    NearPlusOne,
    /// Argument (z-1)/(z+1) (first kind) or 2/(1+z) (second kind).
    NearMinusOne,
}

fn two_pow(s: Complex64) -> Complex64 {
    (s * LN2).exp()
}

/// Jacobi function of the first kind P_gamma^(alpha,beta)(z), cut along
/// (-infinity, -1].
pub fn jacobi_p(ord: JacobiOrder, at: CutPoint, rep: Representation) -> EvalResult {
    ord.valid_first_kind()?;
    let (alpha, beta, gam) = (ord.alpha, ord.beta, ord.gamma);
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re <= -1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    let pre = gamma(alpha + gam + 1.0)?.mul(&rgamma(gam + 1.0));
    let use_near_p1 = match rep {
        Representation::NearPlusOne => true,
        Representation::NearMinusOne => false,
        Representation::Auto => {
            ((1.0 - z) / 2.0).norm() <= ((z - 1.0) / (z + 1.0)).norm() + 0.02
        }
    };
    if use_near_p1 {
        // argument (1-z)/2 crosses the ray [1, infinity) when z < -1
        let w = (1.0 - z) / 2.0;
        let wside = if z.im == 0.0 && z.re < -1.0 {
            side.flip()
        } else {
            CutSide::OffCut
        };
        let f = hyp2f1_reg_side(-gam, alpha + beta + gam + 1.0, alpha + 1.0, w, wside)?;
        Ok(pre.mul(&f))
    } else {
        // ((z+1)/2)^gam F(-gam, -beta-gam; alpha+1; (z-1)/(z+1))
        let lzp1 = ln_zp1(z, side);
        let fac = powl(lzp1 - LN2, gam);
        let w = (z - 1.0) / (z + 1.0);
        let (w, wside) = if z.im == 0.0 && side != CutSide::OffCut {
            // (z-1)/(z+1) is real for real z; above the cut only for z < -1
            let x = (z.re - 1.0) / (z.re + 1.0);
            if x > 1.0 {
                (Complex64::new(x, 0.0), side)
            } else {
                (Complex64::new(x, 0.0), CutSide::OffCut)
            }
        } else {
            (w, CutSide::OffCut)
        };
        let f = hyp2f1_reg_side(-gam, -beta - gam, alpha + 1.0, w, wside)?;
        Ok(pre.mul(&f).scale(fac))
    }
}

/// Jacobi function of the second kind Q_gamma^(alpha,beta)(z), cut along
/// [-1, 1].
pub fn jacobi_q(ord: JacobiOrder, at: CutPoint, rep: Representation) -> EvalResult {
    ord.valid_second_kind()?;
    let (alpha, beta, gam) = (ord.alpha, ord.beta, ord.gamma);
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re >= -1.0 && z.re <= 1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    let pre = gamma(alpha + gam + 1.0)?
        .mul(&gamma(beta + gam + 1.0)?)
        .scale(two_pow(alpha + beta + gam));
    let use_near_p1 = match rep {
        Representation::NearPlusOne => true,
        Representation::NearMinusOne => false,
        Representation::Auto => (1.0 - z).norm() + 0.02 >= (1.0 + z).norm(),
    };
    if use_near_p1 {
        // (z-1)^{-(alpha+gam+1)} (z+1)^{-beta} F(gam+1, alpha+gam+1;
        //                                 alpha+beta+2gamma+2; 2/(1-z))
        let w = 2.0 / (1.0 - z);
        let (w, wside) = cut_arg(z, side, w, true);
        let f = hyp2f1_reg_side(
            gam + 1.0,
            alpha + gam + 1.0,
            alpha + beta + 2.0 * gam + 2.0,
            w,
            wside,
        )?;
        let fac = powl(ln_zm1(z, side), -(alpha + gam + 1.0)) * powl(ln_zp1(z, side), -beta);
        Ok(pre.mul(&f).scale(fac))
    } else {
        // (z+1)^{-(alpha+beta+gam+1)} F(alpha+gam+1, alpha+beta+gam+1;
        //                                 alpha+beta+2gamma+2; 2/(1+z))
        let w = 2.0 / (1.0 + z);
        let (w, wside) = cut_arg(z, side, w, false);
        let f = hyp2f1_reg_side(
            alpha + gam + 1.0,
            alpha + beta + gam + 1.0,
            alpha + beta + 2.0 * gam + 2.0,
            w,
            wside,
        )?;
        let fac = powl(ln_zp1(z, side), -(alpha + beta + gam + 1.0));
        Ok(pre.mul(&f).scale(fac))
    }
}

/// Map the approach side of z onto the side of the transformed argument
/// w = 2/(1-z) (or 2/(1+z)) where the image lands on the ray (1, infinity).
pub(crate) fn cut_arg(
    z: Complex64,
    side: CutSide,
    w: Complex64,
    one_minus: bool,
) -> (Complex64, CutSide) {
    if z.im != 0.0 || side == CutSide::OffCut {
        return (w, CutSide::OffCut);
    }
    let x = z.re;
    let wre = if one_minus { 2.0 / (1.0 - x) } else { 2.0 / (1.0 + x) };
    if wre > 1.0 {
        // d/d(eps) Im(2/(1 - x - i eps)) > 0 and Im(2/(1 + x + i eps)) < 0
        let wside = if one_minus { side } else { side.flip() };
        (Complex64::new(wre, 0.0), wside)
    } else {
        (Complex64::new(wre, 0.0), CutSide::OffCut)
    }
}

/// Jacobi function of the first kind in the trigonometric context; the
/// boundary values from the two sides coincide.
pub fn jacobi_p_trig(ord: JacobiOrder, x: Complex64) -> EvalResult {
    if x.im == 0.0 && (x.re <= -1.0 || x.re >= 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    jacobi_p(ord, CutPoint::off_cut(x), Representation::Auto)
}

/// Jacobi function of the second kind in the trigonometric context:
/// (e^{i pi alpha} Q(x+i0) + e^{-i pi alpha} Q(x-i0)) / 2.
pub fn jacobi_q_trig(ord: JacobiOrder, x: f64) -> EvalResult {
    if !(-1.0 < x && x < 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    let up = jacobi_q(ord, CutPoint::above(x), Representation::Auto)?;
    let dn = jacobi_q(ord, CutPoint::below(x), Representation::Auto)?;
    let pa = (Complex64::i() * PI * ord.alpha).exp();
    Ok(up.scale(0.5 * pa).add(&dn.scale(0.5 / pa)))
}

/// Leading asymptotic term of P as |z| grows: the coefficient of (z/2)^gam.
pub fn jacobi_p_asymptotic(ord: JacobiOrder, z: Complex64) -> EvalResult {
    let (alpha, beta, gam) = (ord.alpha, ord.beta, ord.gamma);
    // leading coefficient of the degree-gamma term, matching the polynomial
    // case Gamma(2n+alpha+beta+1) / (2^n n! Gamma(n+alpha+beta+1))
    let num = gamma(2.0 * gam + alpha + beta + 1.0)?;
    let den = gam_fn_product(&[gam + 1.0, gam + alpha + beta + 1.0])?;
    let fac = powl((z / 2.0).ln(), gam);
    Ok(num.div(&den).scale(fac))
}

/// Leading asymptotic term of Q as |z| grows.
pub fn jacobi_q_asymptotic(ord: JacobiOrder, z: Complex64) -> EvalResult {
    let (alpha, beta, gam) = (ord.alpha, ord.beta, ord.gamma);
    let num = gam_fn_product(&[alpha + gam + 1.0, beta + gam + 1.0])?
        .scale(two_pow(alpha + beta + gam));
    let den = gamma(alpha + beta + 2.0 * gam + 2.0)?;
    let fac = powl(z.ln(), -(alpha + beta + gam + 1.0));
    Ok(num.div(&den).scale(fac))
}

fn gam_fn_product(args: &[Complex64]) -> EvalResult {
    let mut acc = ComplexValue::exact(Complex64::new(1.0, 0.0));
    for &a in args {
        acc = acc.mul(&gamma(a)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ordr(a: f64, b: f64, g: f64) -> JacobiOrder {
        JacobiOrder::new(c(a, 0.0), c(b, 0.0), c(g, 0.0))
    }

    fn check(v: EvalResult, re: f64, im: f64, tol: f64) {
        let v = v.unwrap();
        let r = (v.value - c(re, im)).norm() / c(re, im).norm().max(1.0);
        assert!(
            r < tol,
            "got {:?}, want ({re}, {im}), rel dev {r:.3e}",
            v.value
        );
    }

    #[test]
    fn p_matches_polynomial_case() {
        // P_2^(1,1)(x) Jacobi polynomial: mpmath jacobi(2, 1, 1, 0.3) = -0.4125
        check(
            jacobi_p(ordr(1.0, 1.0, 2.0), CutPoint::off_cut(c(0.3, 0.0)), Representation::Auto),
            -0.4125,
            0.0,
            1e-12,
        );
    }

    #[test]
    fn p_complex_degree() {
        // mpmath jacobi(0.7+0.3j, 0.4, -0.2, 1.8+0.9j)
        // = (1.3665426707928861 + 0.8266463696804895j)
        check(
            jacobi_p(
                JacobiOrder::new(c(0.4, 0.0), c(-0.2, 0.0), c(0.7, 0.3)),
                CutPoint::off_cut(c(1.8, 0.9)),
                Representation::Auto,
            ),
            1.3665426707928861,
            0.8266463696804895,
            1e-11,
        );
    }

    #[test]
    fn p_representations_agree() {
        let ord = JacobiOrder::new(c(0.35, 0.1), c(-0.6, 0.2), c(1.4, -0.5));
        let at = CutPoint::off_cut(c(2.4, 1.1));
        let a = jacobi_p(ord, at, Representation::NearPlusOne).unwrap();
        let b = jacobi_p(ord, at, Representation::NearMinusOne).unwrap();
        assert!((a.value - b.value).norm() < 1e-11 * a.norm());
    }

    #[test]
    fn q_reference_point() {
        // oracle: 2^{a+b+g} G(a+g+1) G(b+g+1) (z-1)^{-a-g-1} (z+1)^{-b}
        //         2F1r(g+1, a+g+1; a+b+2g+2; 2/(1-z)) at a=0.3, b=0.5, g=1.2,
        // z=2.5: mpmath gives 0.018153751791860328
        check(
            jacobi_q(ordr(0.3, 0.5, 1.2), CutPoint::off_cut(c(2.5, 0.0)), Representation::Auto),
            0.018153751791860328,
            0.0,
            1e-11,
        );
    }

    #[test]
    fn q_representations_agree() {
        let ord = JacobiOrder::new(c(0.3, 0.2), c(0.5, -0.1), c(1.2, 0.4));
        for at in [
            CutPoint::off_cut(c(1.9, 1.3)),
            CutPoint::off_cut(c(-0.4, 2.2)),
            CutPoint::above(0.35),
            CutPoint::below(-0.62),
        ] {
            let a = jacobi_q(ord, at, Representation::NearPlusOne).unwrap();
            let b = jacobi_q(ord, at, Representation::NearMinusOne).unwrap();
            assert!(
                (a.value - b.value).norm() < 1e-9 * a.norm().max(1.0),
                "mismatch at {at:?}: {:?} vs {:?}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn q_conjugate_sides() {
        // real parameters: Q(x-i0) = conj(Q(x+i0))
        let ord = ordr(0.3, 0.5, 1.2);
        let up = jacobi_q(ord, CutPoint::above(0.4), Representation::Auto).unwrap();
        let dn = jacobi_q(ord, CutPoint::below(0.4), Representation::Auto).unwrap();
        assert_relative_eq!(up.value.re, dn.value.re, max_relative = 1e-10);
        assert_relative_eq!(up.value.im, -dn.value.im, max_relative = 1e-10);
    }

    #[test]
    fn q_trig_is_real_for_real_parameters() {
        let v = jacobi_q_trig(ordr(0.3, 0.5, 1.2), 0.4).unwrap();
        assert!(v.value.im.abs() < 1e-10 * v.value.re.abs());
    }

    #[test]
    fn p_asymptotic_matches_large_argument() {
        let ord = ordr(0.4, -0.2, 0.9);
        let z = c(900.0, 400.0);
        let exact = jacobi_p(ord, CutPoint::off_cut(z), Representation::Auto).unwrap();
        let asy = jacobi_p_asymptotic(ord, z).unwrap();
        assert!((exact.value - asy.value).norm() < 2e-3 * exact.norm());
    }

    #[test]
    fn q_asymptotic_matches_large_argument() {
        let ord = ordr(0.4, -0.2, 0.9);
        let z = c(1200.0, -300.0);
        let exact = jacobi_q(ord, CutPoint::off_cut(z), Representation::Auto).unwrap();
        let asy = jacobi_q_asymptotic(ord, z).unwrap();
        assert!((exact.value - asy.value).norm() < 2e-3 * exact.norm());
    }

    #[test]
    fn degree_pole_rejected() {
        let ord = ordr(-3.0, 0.5, 1.0); // alpha+gam+1 = -1
        assert!(matches!(
            jacobi_p(ord, CutPoint::off_cut(c(2.0, 0.0)), Representation::Auto),
            Err(EvalError::DegreeOrderPole)
        ));
    }
}
