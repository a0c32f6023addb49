//! Associated Legendre functions P_nu^mu, Q_nu^mu on the cut plane and the
//! Ferrers functions on the segment (-1, 1).

use crate::branch::{ln_z, ln_z2m1, ln_zm1, ln_zp1, powl};
use crate::gamma::{gamma, rgamma};
use crate::hyp::{hyp2f1_reg, hyp2f1_reg_side, integer_distance, richardson_perturb};
use crate::jacobi::cut_arg;
use crate::value::{near_nonpositive_int, CutPoint, CutSide, EvalError, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

const LN2: Complex64 = Complex64::new(std::f64::consts::LN_2, 0.0);

/// P_nu^mu(z) = ((z+1)/(z-1))^{mu/2} F(-nu, nu+1; 1-mu; (1-z)/2),
/// cut along (-infinity, 1].
pub fn legendre_p(nu: Complex64, mu: Complex64, at: CutPoint) -> EvalResult {
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re <= 1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    let w = (1.0 - z) / 2.0;
    // (1-z)/2 lands on [1, infinity) for z <= -1; its imaginary part has the
    // opposite sign to that of z.
    let wside = if z.im == 0.0 && z.re < -1.0 {
        side.flip()
    } else {
        CutSide::OffCut
    };
    let f = hyp2f1_reg_side(-nu, nu + 1.0, 1.0 - mu, w, wside)?;
    let fac = powl(ln_zp1(z, side) - ln_zm1(z, side), mu / 2.0);
    Ok(f.scale(fac))
}

/// Q_nu^mu(z), cut along (-infinity, 1], with poles at nu + mu in -N.
///
/// Two hypergeometric representations are used: an inverse-square-argument
/// form away from z = 1 and a 2/(1-z) form near it; the latter needs a limit
/// when nu sits at a negative integer, taken by parameter perturbation.
pub fn legendre_q(nu: Complex64, mu: Complex64, at: CutPoint) -> EvalResult {
    if near_nonpositive_int(nu + mu + 1.0, 1e-300) {
        return Err(EvalError::DegreeOrderPole);
    }
    let z = at.z;
    let side = at.side;
    if z.im == 0.0 && z.re <= 1.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    if z.norm() >= 1.15 {
        return legendre_q_inv(nu, mu, z, side);
    }
    let dist = integer_distance(nu);
    if nu.re < -0.5 && dist < 1e-6 {
        return richardson_perturb(dist, |d| {
            legendre_q_near_one(nu + Complex64::new(d, 0.0), mu, z, side)
        });
    }
    legendre_q_near_one(nu, mu, z, side)
}

// sqrt(pi) e^{i pi mu} Gamma(nu+mu+1) (z^2-1)^{mu/2} 2^{-nu-1} z^{-nu-mu-1}
//   F((nu+mu+1)/2, (nu+mu+2)/2; nu+3/2; 1/z^2)
fn legendre_q_inv(nu: Complex64, mu: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    let w = 1.0 / (z * z);
    // 1/z^2 in (0, 1) for real |z| > 1, so never on the hypergeometric cut
    let w = if z.im == 0.0 { Complex64::new(w.re, 0.0) } else { w };
    let f = hyp2f1_reg(
        (nu + mu + 1.0) / 2.0,
        (nu + mu + 2.0) / 2.0,
        nu + 1.5,
        w,
    )?;
    let pre = gamma(nu + mu + 1.0)?.scale(
        PI.sqrt()
            * (Complex64::i() * PI * mu).exp()
            * powl(ln_z2m1(z, side), mu / 2.0)
            * powl(-LN2, nu + 1.0)
            * powl(ln_z(z, side), -(nu + mu + 1.0)),
    );
    Ok(pre.mul(&f))
}

// 2^nu e^{i pi mu} Gamma(nu+1) Gamma(nu+mu+1) (z+1)^{mu/2}
//   (z-1)^{-mu/2-nu-1} F(nu+1, nu+mu+1; 2nu+2; 2/(1-z))
fn legendre_q_near_one(nu: Complex64, mu: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    let (w, wside) = cut_arg(z, side, 2.0 / (1.0 - z), true);
    let f = hyp2f1_reg_side(nu + 1.0, nu + mu + 1.0, 2.0 * nu + 2.0, w, wside)?;
    let pre = gamma(nu + 1.0)?.mul(&gamma(nu + mu + 1.0)?).scale(
        powl(LN2, nu)
            * (Complex64::i() * PI * mu).exp()
            * powl(ln_zp1(z, side), mu / 2.0)
            * powl(ln_zm1(z, side), -(mu / 2.0 + nu + 1.0)),
    );
    Ok(pre.mul(&f))
}

/// Ferrers function of the first kind on (-1, 1):
/// ((1+x)/(1-x))^{mu/2} F(-nu, nu+1; 1-mu; (1-x)/2).
pub fn ferrers_p(nu: Complex64, mu: Complex64, x: f64) -> EvalResult {
    if !(-1.0 < x && x < 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    let f = hyp2f1_reg(-nu, nu + 1.0, 1.0 - mu, Complex64::new((1.0 - x) / 2.0, 0.0))?;
    let fac = powl(Complex64::new(((1.0 + x) / (1.0 - x)).ln(), 0.0), mu / 2.0);
    Ok(f.scale(fac))
}

/// Ferrers function of the second kind on (-1, 1):
/// e^{-i pi mu} (e^{-i pi mu/2} Q(x+i0) + e^{i pi mu/2} Q(x-i0)) / 2.
pub fn ferrers_q(nu: Complex64, mu: Complex64, x: f64) -> EvalResult {
    if !(-1.0 < x && x < 1.0) {
        return Err(EvalError::OutOfSegment);
    }
    let up = legendre_q(nu, mu, CutPoint::above(x))?;
    let dn = legendre_q(nu, mu, CutPoint::below(x))?;
    let half = (Complex64::i() * PI * mu / 2.0).exp();
    let outer = (-Complex64::i() * PI * mu).exp();
    Ok(up.scale(0.5 * outer / half).add(&dn.scale(0.5 * outer * half)))
}

/// Order-parity coefficient: Q_nu^{-mu} = e^{-2 i pi mu}
/// Gamma(nu-mu+1)/Gamma(nu+mu+1) Q_nu^mu.
pub fn q_order_parity_factor(nu: Complex64, mu: Complex64) -> EvalResult {
    let num = gamma(nu - mu + 1.0)?;
    let den = rgamma(nu + mu + 1.0);
    Ok(num
        .mul(&den)
        .scale((-2.0 * Complex64::i() * PI * mu).exp()))
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
    fn p_real_argument() {
        // mpmath legenp(1.5, 0.4, 2.0, type=3)
        let v = legendre_p(c(1.5, 0.0), c(0.4, 0.0), CutPoint::off_cut(c(2.0, 0.0)));
        check(v, 4.084314225345322, 0.0, 1e-12);
    }

    #[test]
    fn p_complex_point() {
        // mpmath legenp(0.7+0.3j, -0.4+0.1j, 0.9+0.4j, type=3)
        let v = legendre_p(
            c(0.7, 0.3),
            c(-0.4, 0.1),
            CutPoint::off_cut(c(0.9, 0.4)),
        );
        check(v, 0.67082383318428652, 0.39955909590375345, 1e-12);
    }

    #[test]
    fn p_boundary_values() {
        // above the cut at x = 0.3 and x = -2
        let v = legendre_p(c(1.5, 0.0), c(0.4, 0.0), CutPoint::above(0.3));
        check(v, -0.43971172284174207, 0.31946926670703187, 1e-12);
        let v = legendre_p(c(1.5, 0.0), c(0.4, 0.0), CutPoint::above(-2.0));
        check(v, 0.01226170338280655, -4.084314225345322, 1e-12);
    }

    #[test]
    fn q_inverse_representation() {
        // mpmath legenq(1.5, 0.4, 3.0, type=3)
        let v = legendre_q(c(1.5, 0.0), c(0.4, 0.0), CutPoint::off_cut(c(3.0, 0.0)));
        check(v, 0.0061882487721163351, 0.019045471369887421, 1e-12);
    }

    #[test]
    fn q_near_one_representation() {
        // mpmath legenq(0.7+0.3j, -0.4+0.1j, 0.9+0.4j, type=3); |z| < 1.15
        let v = legendre_q(
            c(0.7, 0.3),
            c(-0.4, 0.1),
            CutPoint::off_cut(c(0.9, 0.4)),
        );
        check(v, -0.44241865379858528, -0.070818159880578345, 1e-11);
    }

    #[test]
    fn q_representations_agree() {
        let z = c(1.3, 0.6);
        let (nu, mu) = (c(0.7, 0.3), c(-0.4, 0.1));
        let a = legendre_q_inv(nu, mu, z, CutSide::OffCut).unwrap();
        let b = legendre_q_near_one(nu, mu, z, CutSide::OffCut).unwrap();
        assert_relative_eq!(a.re(), b.re(), max_relative = 1e-10);
        assert_relative_eq!(a.im(), b.im(), max_relative = 1e-10);
    }

    #[test]
    fn q_boundary_values() {
        let nu = c(1.5, 0.0);
        let mu = c(0.4, 0.0);
        let up = legendre_q(nu, mu, CutPoint::above(0.3));
        check(up, -0.55468777386948634, -1.0556368064433485, 1e-11);
        let dn = legendre_q(nu, mu, CutPoint::below(0.3));
        check(dn, -0.17173591097210189, -1.1800654094077923, 1e-11);
    }

    #[test]
    fn q_negative_integer_degree_limit() {
        // nu = -2 is a pole of Gamma(nu+1) in the 2/(1-z) form only; the
        // function itself is finite there.  mpmath limit: 0.84364264135355692
        // + 3.5261772825829175j at z = 1.05+0.1j.
        let v = legendre_q(
            c(-2.0, 0.0),
            c(0.4, 0.0),
            CutPoint::off_cut(c(1.05, 0.1)),
        );
        check(v, 0.84364264135355692, 3.5261772825829175, 1e-8);
    }

    #[test]
    fn ferrers_values_real() {
        // mpmath legenp/legenq(1.5, 0.4, 0.3) (type 2)
        let p = ferrers_p(c(1.5, 0.0), c(0.4, 0.0), 0.3);
        check(p, -0.54351357993594015, 0.0, 1e-12);
        let q = ferrers_q(c(1.5, 0.0), c(0.4, 0.0), 0.3);
        check(q, -0.83256231491127316, 0.0, 1e-11);
    }

    #[test]
    fn ferrers_p_matches_phase_rotated_boundary() {
        let (nu, mu) = (c(1.5, 0.0), c(0.4, 0.0));
        let p = ferrers_p(nu, mu, 0.3).unwrap();
        let up = legendre_p(nu, mu, CutPoint::above(0.3)).unwrap();
        let rot = up.value * (Complex64::i() * PI * mu / 2.0).exp();
        assert_relative_eq!(p.re(), rot.re, max_relative = 1e-12);
        assert!(rot.im.abs() < 1e-12);
    }

    #[test]
    fn degree_order_pole_rejected() {
        assert!(matches!(
            legendre_q(c(-1.7, 0.0), c(-0.3, 0.0), CutPoint::off_cut(c(2.0, 0.0))),
            Err(EvalError::DegreeOrderPole)
        ));
    }

    #[test]
    fn off_segment_rejected() {
        assert!(matches!(
            ferrers_p(c(0.5, 0.0), c(0.1, 0.0), 1.5),
            Err(EvalError::OutOfSegment)
        ));
    }
}
