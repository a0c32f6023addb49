//! Confluent hypergeometric functions: regularized Kummer 𝐌, the second
//! solution U, and the modified Bessel function of the first kind.

use crate::branch::{ln_z, powl};
use crate::gamma::{pochhammer, rgamma};
use crate::value::{ComplexValue, CutSide, EvalError, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

const MAX_TERMS: usize = 1200;
const DEGEN_TOL: f64 = 1e-6;

fn exact_nonpos_int_degree(a: Complex64) -> Option<u32> {
    if a.im == 0.0 && a.re <= 0.0 && a.re.fract() == 0.0 && a.re >= -100_000.0 {
        Some((-a.re) as u32)
    } else {
        None
    }
}

fn kummer_series(a: Complex64, b: Complex64, z: Complex64) -> EvalResult {
    let mut n0: u32 = 0;
    let mut t: Complex64;
    if let Some(m) = exact_nonpos_int_degree(b) {
        n0 = m + 1;
        let mut nfact = 1.0f64;
        for k in 1..=n0 {
            nfact *= k as f64;
        }
        t = pochhammer(a, n0).value * z.powu(n0) / nfact;
    } else {
        t = rgamma(b).value;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_abs = 0.0f64;
    let terminating = exact_nonpos_int_degree(a);
    for n in n0..(n0 + MAX_TERMS as u32) {
        sum += t;
        sum_abs += t.norm();
        if let Some(deg) = terminating {
            if n >= deg {
                return Ok(ComplexValue::new(sum, 8.0 * f64::EPSILON * sum_abs));
            }
        }
        let nf = n as f64;
        t *= (a + nf) * z / ((nf + 1.0) * (b + nf));
        if !t.is_finite() {
            return Err(EvalError::NonConvergence { best_err: f64::MAX });
        }
        if t.norm() <= 1e-18 * (sum_abs + 1.0) && n >= n0 + 6 {
            return Ok(ComplexValue::new(
                sum,
                t.norm() * 2.0 + 4.0 * f64::EPSILON * sum_abs,
            ));
        }
    }
    Err(EvalError::NonConvergence { best_err: t.norm() })
}

/// Regularized Kummer function 𝐌(a;b;z) = ₁F₁(a;b;z)/Γ(b), entire in all
/// three variables.  The Kummer transform is applied for Re z < 0 to avoid
/// cancellation in the alternating series.
pub fn hyp1f1_reg(a: Complex64, b: Complex64, z: Complex64) -> EvalResult {
    if exact_nonpos_int_degree(a).is_some() || z.re >= 0.0 {
        kummer_series(a, b, z)
    } else {
        // 𝐌(a;b;z) = e^z 𝐌(b−a;b;−z)
        let f = kummer_series(b - a, b, -z)?;
        Ok(f.scale(z.exp()))
    }
}

fn dist_to_int(z: Complex64) -> f64 {
    if z.im.abs() > DEGEN_TOL {
        return f64::MAX;
    }
    ((z.re - z.re.round()).powi(2) + z.im.powi(2)).sqrt()
}

/// U by its two-term 𝐌 combination; requires b away from the integers.
fn hypu_connection(a: Complex64, b: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    let m1 = hyp1f1_reg(a, b, z)?.scale(rgamma(a - b + 1.0).value);
    let zpow = powl(ln_z(z, side), Complex64::new(1.0, 0.0) - b);
    let m2 = hyp1f1_reg(a - b + 1.0, Complex64::new(2.0, 0.0) - b, z)?.scale(rgamma(a).value * zpow);
    let pref = PI / (PI * b).sin();
    let diff = m1.sub(&m2);
    let cancel = m1.norm().max(m2.norm()) * 4.0 * f64::EPSILON;
    Ok(ComplexValue::new(
        diff.value * pref,
        (diff.abs_err + cancel) * pref.norm(),
    ))
}

/// Asymptotic expansion U(a,b,z) ~ z^{-a} Σ (a)_n (a-b+1)_n (-z)^{-n} / n!,
/// truncated at the smallest term.
fn hypu_asymptotic(a: Complex64, b: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    let zpow = powl(ln_z(z, side), -a);
    let mut t = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut best = f64::MAX;
    for n in 0..60u32 {
        if t.norm() > best {
            // past the smallest term: truncate with the previous term as error
            return Ok(ComplexValue::new(sum * zpow, best * zpow.norm() * 2.0));
        }
        sum += t;
        best = t.norm();
        let nf = n as f64;
        t *= (a + nf) * (a - b + 1.0 + nf) / (-(nf + 1.0) * z);
        if t.norm() < 1e-17 {
            sum += t;
            return Ok(ComplexValue::new(
                sum * zpow,
                t.norm() * zpow.norm() * 2.0 + 4.0 * f64::EPSILON * (sum * zpow).norm(),
            ));
        }
    }
    Ok(ComplexValue::new(sum * zpow, best * zpow.norm() * 4.0))
}

/// Confluent hypergeometric function of the second kind U(a;b;z) on the
/// principal branch, with `side` giving the approach for real negative z.
pub fn hypu(a: Complex64, b: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    if z.norm() == 0.0 {
        return Err(EvalError::ConstraintViolation("U undefined at z = 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 && side == CutSide::OffCut {
        return Err(EvalError::OnBranchCut);
    }
    // Terminating case: polynomial × z^{-a}, valid everywhere.
    if exact_nonpos_int_degree(a).is_some() {
        // U(-n,b,z) with the asymptotic series terminating exactly.
        return hypu_asymptotic(a, b, z, side);
    }
    if z.norm() >= 35.0 {
        let v = hypu_asymptotic(a, b, z, side)?;
        if v.rel_err() < 1e-11 {
            return Ok(v);
        }
        // fall through to the connection formula when the expansion stalls
    }
    let d = dist_to_int(b);
    if d > DEGEN_TOL {
        hypu_connection(a, b, z, side)
    } else {
        let mut delta = 3e-4;
        for _ in 0..4 {
            if [delta, -delta, delta / 2.0, -delta / 2.0]
                .iter()
                .all(|e| (d + e).abs() > 5e-5)
            {
                break;
            }
            delta *= 1.618;
        }
        let avg = |e: f64| -> EvalResult {
            let p = hypu_connection(a, b + e, z, side)?;
            let m = hypu_connection(a, b - e, z, side)?;
            Ok(ComplexValue::new(
                0.5 * (p.value + m.value),
                0.5 * (p.abs_err + m.abs_err),
            ))
        };
        let a1 = avg(delta)?;
        let a2 = avg(delta / 2.0)?;
        let v = (4.0 * a2.value - a1.value) / 3.0;
        Ok(ComplexValue::new(
            v,
            a2.abs_err + (a2.value - a1.value).norm() / 3.0,
        ))
    }
}

/// Modified Bessel function I_ν(z) by its ascending series; `side` fixes the
/// phase of (z/2)^ν for real negative z.
pub fn bessel_i(nu: Complex64, z: Complex64, side: CutSide) -> EvalResult {
    if z.im == 0.0 && z.re < 0.0 && side == CutSide::OffCut && !crate::value::near_int(nu, 1e-300) {
        return Err(EvalError::OnBranchCut);
    }
    let halfpow = if z.norm() == 0.0 {
        if nu.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    } else {
        powl(ln_z(z / 2.0, side), nu)
    };
    let q = z * z / 4.0;
    let mut t = rgamma(nu + 1.0).value;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_abs = 0.0;
    for k in 0..MAX_TERMS as u32 {
        sum += t;
        sum_abs += t.norm();
        let kf = k as f64;
        t *= q / ((kf + 1.0) * (nu + kf + 1.0));
        if t.norm() <= 1e-18 * (sum_abs + 1.0) && k >= 6 {
            return Ok(ComplexValue::new(
                sum * halfpow,
                (t.norm() * 2.0 + 4.0 * f64::EPSILON * sum_abs) * halfpow.norm(),
            ));
        }
    }
    Err(EvalError::NonConvergence { best_err: t.norm() })
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
        let r = (v.value - c(re, im)).norm() / c(re, im).norm().max(1.0);
        assert!(
            r < tol,
            "got {:?}, want ({re}, {im}), rel dev {r:.3e}",
            v.value
        );
    }

    #[test]
    fn kummer_basics() {
        // M(a,a,z) = e^z; regularized divides by Γ(a)
        let v = hyp1f1_reg(c(2.5, 0.0), c(2.5, 0.0), c(1.2, 0.7)).unwrap();
        let expect = c(1.2, 0.7).exp() / 1.3293403881791370; // Γ(2.5)
        assert!((v.value - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn kummer_negative_axis_transform() {
        // mpmath: hyp1f1(0.7+0.2j, 1.9-0.3j, -25+4j)/gamma(1.9-0.3j)
        // = (0.10121346912173151 - 0.07546728340671137j)
        check(
            hyp1f1_reg(c(0.7, 0.2), c(1.9, -0.3), c(-25.0, 4.0)),
            0.10121346912173151,
            -0.07546728340671137,
            1e-10,
        );
    }

    #[test]
    fn u_moderate_argument() {
        // mpmath: hyperu(0.6+0.3j, 1.4-0.2j, 2.5+1.5j)
        // = (0.44105380727333675 - 0.39740055374911736j)
        check(
            hypu(c(0.6, 0.3), c(1.4, -0.2), c(2.5, 1.5), CutSide::OffCut),
            0.44105380727333675,
            -0.39740055374911736,
            1e-10,
        );
    }

    #[test]
    fn u_integer_b_limit() {
        // mpmath: hyperu(0.75, 2.0, 3.5) = 0.40890429776923407
        check(
            hypu(c(0.75, 0.0), c(2.0, 0.0), c(3.5, 0.0), CutSide::OffCut),
            0.40890429776923407,
            0.0,
            1e-8,
        );
    }

    #[test]
    fn u_asymptotic_large() {
        // mpmath: hyperu(1.3, 0.8, 60) = 0.0047283687491487805
        check(
            hypu(c(1.3, 0.0), c(0.8, 0.0), c(60.0, 0.0), CutSide::OffCut),
            0.0047283687491487805,
            0.0,
            1e-11,
        );
    }

    #[test]
    fn u_negative_axis_sides() {
        // mpmath: hyperu(0.9, 1.7, -4 ± 1e-25j) differs by side
        // above: (-0.29040946476815506 - 0.098360698459606768j)
        check(
            hypu(c(0.9, 0.0), c(1.7, 0.0), c(-4.0, 0.0), CutSide::Above),
            -0.29040946476815506,
            -0.098360698459606768,
            1e-9,
        );
        let above = hypu(c(0.9, 0.0), c(1.7, 0.0), c(-4.0, 0.0), CutSide::Above).unwrap();
        let below = hypu(c(0.9, 0.0), c(1.7, 0.0), c(-4.0, 0.0), CutSide::Below).unwrap();
        assert_relative_eq!(below.value.re, above.value.re, max_relative = 1e-9);
        assert_relative_eq!(below.value.im, -above.value.im, max_relative = 1e-9);
    }

    #[test]
    fn bessel_i_values() {
        // mpmath: besseli(0.5, 2.0) = 2.0462368630890550
        check(
            bessel_i(c(0.5, 0.0), c(2.0, 0.0), CutSide::OffCut),
            2.0462368630890550,
            0.0,
            1e-12,
        );
        // mpmath: besseli(1.3+0.4j, 0.9-1.1j)
        // = (-0.12573360858796341 - 0.74936214763350191j)
        check(
            bessel_i(c(1.3, 0.4), c(0.9, -1.1), CutSide::OffCut),
            -0.12573360858796341,
            -0.74936214763350191,
            1e-12,
        );
    }
}
