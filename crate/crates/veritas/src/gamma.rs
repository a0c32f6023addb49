//! Complex log-gamma, reciprocal gamma and the Pochhammer symbol.

use crate::value::{near_nonpositive_int, ComplexValue, EvalError, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn lngamma_lanczos(z: Complex64) -> Complex64 {
    // Requires Re z > 0.5.
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// Principal branch of log Γ(z).
///
/// The imaginary part is kept continuous (no mod-2π wrapping) by using the
/// recurrence upward from the Lanczos half-plane, so `exp(lngamma(z))`
/// always equals Γ(z) and `lngamma(z̄) = conj(lngamma(z))`.
pub fn lngamma(z: Complex64) -> EvalResult {
    if near_nonpositive_int(z, 1e-300) {
        return Err(EvalError::PoleAtNonPositiveInteger(z.re));
    }
    if z.im < 0.0 {
        return lngamma(z.conj()).map(|v| ComplexValue::new(v.value.conj(), v.abs_err));
    }
    let v = if z.re >= 0.5 {
        lngamma_lanczos(z)
    } else {
        // Reflection: log Γ(z) = log π - log sin(πz) - log Γ(1-z).
        // log sin(πz) computed branch-continuously for Im z >= 0.
        let lg1mz = lngamma_lanczos(Complex64::new(1.0, 0.0) - z);
        let lnsin = ln_sin_pi(z);
        Complex64::new(PI.ln(), 0.0) - lnsin - lg1mz
    };
    // Error estimate: Lanczos is good to ~1e-14 relative in Γ, i.e. ~1e-14
    // absolute in log Γ, inflated slightly for the reflection path.
    let err = 1e-14 * (1.0 + v.norm()) * if z.re >= 0.5 { 1.0 } else { 4.0 };
    Ok(ComplexValue::new(v, err))
}

/// log sin(πz), branch chosen continuously for Im z >= 0 so the reflection
/// formula yields the principal branch of log Γ.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    // sin(πz) = e^{-iπz} (e^{2iπz} - 1) / 2i.  For Im z > 0 factor out e^{-iπz}.
    if z.im > 1.0 {
        // ln sin(πz) = -iπz + ln( (e^{2iπz} - 1) / (2i) ) with the branch of
        // the unwound term taken principally (it is near ln(i/2)).
        let e = (Complex64::i() * PI * z * 2.0).exp();
        -Complex64::i() * PI * z + ((e - 1.0) / Complex64::new(0.0, 2.0)).ln()
    } else {
        let s = (PI * z).sin();
        let mut l = s.ln();
        // Principal ln may be off by 2πi relative to the continuous branch for
        // moderate Im z; correct by matching against the unwound form.
        if z.im > 0.0 {
            let e = (Complex64::i() * PI * z * 2.0).exp();
            let cont =
                -Complex64::i() * PI * z + ((e - 1.0) / Complex64::new(0.0, 2.0)).ln();
            let k = ((cont.im - l.im) / (2.0 * PI)).round();
            l.im += 2.0 * PI * k;
        }
        l
    }
}

/// 1/Γ(z); entire, returning exactly 0 at non-positive integers.
pub fn rgamma(z: Complex64) -> ComplexValue {
    if near_nonpositive_int(z, 1e-300) {
        return ComplexValue::new(Complex64::new(0.0, 0.0), 0.0);
    }
    match lngamma(z) {
        Ok(lg) => {
            let v = (-lg.value).exp();
            ComplexValue::new(v, v.norm() * (lg.abs_err + 1e-15))
        }
        Err(_) => ComplexValue::new(Complex64::new(0.0, 0.0), 0.0),
    }
}

/// Γ(z) itself; errors at the poles.
pub fn gamma(z: Complex64) -> EvalResult {
    let lg = lngamma(z)?;
    let v = lg.value.exp();
    Ok(ComplexValue::new(v, v.norm() * (lg.abs_err + 1e-15)))
}

/// Pochhammer symbol (a)_n = a(a+1)⋯(a+n-1), computed as a plain product.
pub fn pochhammer(a: Complex64, n: u32) -> ComplexValue {
    let mut v = Complex64::new(1.0, 0.0);
    for k in 0..n {
        v *= a + k as f64;
    }
    ComplexValue::new(v, 2.0 * n as f64 * f64::EPSILON * v.norm())
}

/// Ratio Γ(num)/Γ(den) via log subtraction; each argument may be anywhere
/// off the gamma poles of the numerator.  A numerator pole is an error; a
/// denominator pole gives exactly zero.
pub fn gamma_ratio(num: Complex64, den: Complex64) -> EvalResult {
    if near_nonpositive_int(den, 1e-300) {
        if near_nonpositive_int(num, 1e-300) {
            return Err(EvalError::PoleAtNonPositiveInteger(num.re));
        }
        return Ok(ComplexValue::new(Complex64::new(0.0, 0.0), 0.0));
    }
    let ln = lngamma(num)?;
    let ld = lngamma(den)?;
    let d = ln.value - ld.value;
    let v = d.exp();
    Ok(ComplexValue::new(
        v,
        v.norm() * (ln.abs_err + ld.abs_err + 1e-15),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_one_is_zero_log() {
        let v = lngamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(v.value.norm() < 1e-13);
    }

    #[test]
    fn gamma_half_log() {
        // ln Γ(1/2) = ln √π
        let v = lngamma(Complex64::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(v.re(), 0.5723649429247001, max_relative = 1e-13);
        assert!(v.im().abs() < 1e-14);
    }

    #[test]
    fn gamma_five_is_ln_24() {
        let v = lngamma(Complex64::new(5.0, 0.0)).unwrap();
        assert_relative_eq!(v.re(), 24f64.ln(), max_relative = 1e-13);
    }

    #[test]
    fn lngamma_complex_point() {
        // mpmath: loggamma(2.5+3.5j)
        // = (-1.9789099638507868 + 3.4914372229483231j)
        let v = lngamma(Complex64::new(2.5, 3.5)).unwrap();
        assert_relative_eq!(v.re(), -1.9789099638507868, max_relative = 1e-12);
        assert_relative_eq!(v.im(), 3.4914372229483231, max_relative = 1e-12);
    }

    #[test]
    fn lngamma_reflection_region() {
        // mpmath: loggamma(-1.5+0.5j)
        // = (0.0008154671525182346 - 5.9267657915075467j)
        let v = lngamma(Complex64::new(-1.5, 0.5)).unwrap();
        assert_relative_eq!(v.re(), 0.0008154671525182346, epsilon = 1e-12);
        assert_relative_eq!(v.im(), -5.9267657915075467, max_relative = 1e-11);
        // conjugation symmetry
        let w = lngamma(Complex64::new(-1.5, -0.5)).unwrap();
        assert_relative_eq!(w.im(), -v.im(), max_relative = 1e-12);
    }

    #[test]
    fn lngamma_large_imag_continuity() {
        // mpmath: loggamma(0.25+20j) = (-31.245901532192641 + 39.522467241706900j)
        let v = lngamma(Complex64::new(0.25, 20.0)).unwrap();
        assert_relative_eq!(v.re(), -31.245901532192641, max_relative = 1e-11);
        assert_relative_eq!(v.im(), 39.522467241706900, max_relative = 1e-11);
    }

    #[test]
    fn lngamma_pole_is_error() {
        assert!(matches!(
            lngamma(Complex64::new(-3.0, 0.0)),
            Err(EvalError::PoleAtNonPositiveInteger(_))
        ));
    }

    #[test]
    fn rgamma_at_poles() {
        for m in [0.0, -1.0, -3.0, -10.0] {
            assert_eq!(rgamma(Complex64::new(m, 0.0)).value.norm(), 0.0);
        }
        let v = rgamma(Complex64::new(1.0, 0.0));
        assert_relative_eq!(v.re(), 1.0, max_relative = 1e-13);
    }

    #[test]
    fn pochhammer_cases() {
        assert_eq!(pochhammer(Complex64::new(3.7, 1.1), 0).value.re, 1.0);
        assert_relative_eq!(
            pochhammer(Complex64::new(1.0, 0.0), 4).value.re,
            24.0,
            max_relative = 1e-14
        );
        assert_eq!(pochhammer(Complex64::new(-2.0, 0.0), 3).value.norm(), 0.0);
    }
}
