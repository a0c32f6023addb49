//! Branch-aware logarithms and powers.
//!
//! Every prefactor in the function definitions is a power of z−1, z+1, 1−z
//! or −z.  Composite powers like (z²−1)^{s} are always assembled as
//! exp(s·(ln(z−1)+ln(z+1))) so the result is positive on (1, ∞); boundary
//! values x ± i0 get their phases from the side tag, never from signed zeros.

use crate::value::CutSide;
use num_complex::Complex64;
use std::f64::consts::PI;

fn is_real(z: Complex64) -> bool {
    z.im == 0.0
}

/// ln(z − 1); cut along z ∈ (−∞, 1].
pub fn ln_zm1(z: Complex64, side: CutSide) -> Complex64 {
    if is_real(z) && z.re < 1.0 && side != CutSide::OffCut {
        Complex64::new((1.0 - z.re).ln(), side.sign() * PI)
    } else {
        (z - 1.0).ln()
    }
}

/// ln(z + 1); cut along z ∈ (−∞, −1].
pub fn ln_zp1(z: Complex64, side: CutSide) -> Complex64 {
    if is_real(z) && z.re < -1.0 && side != CutSide::OffCut {
        Complex64::new((-1.0 - z.re).ln(), side.sign() * PI)
    } else {
        (z + 1.0).ln()
    }
}

/// ln(1 − z); cut along z ∈ [1, ∞).
pub fn ln_1mz(z: Complex64, side: CutSide) -> Complex64 {
    if is_real(z) && z.re > 1.0 && side != CutSide::OffCut {
        Complex64::new((z.re - 1.0).ln(), -side.sign() * PI)
    } else {
        (1.0 - z).ln()
    }
}

/// ln(−z); cut along z ∈ [0, ∞).
pub fn ln_neg_z(z: Complex64, side: CutSide) -> Complex64 {
    if is_real(z) && z.re > 0.0 && side != CutSide::OffCut {
        Complex64::new(z.re.ln(), -side.sign() * PI)
    } else {
        (-z).ln()
    }
}

/// ln z; cut along z ∈ (−∞, 0].
pub fn ln_z(z: Complex64, side: CutSide) -> Complex64 {
    if is_real(z) && z.re < 0.0 && side != CutSide::OffCut {
        Complex64::new((-z.re).ln(), side.sign() * PI)
    } else {
        z.ln()
    }
}

/// ln(z² − 1) = ln(z−1) + ln(z+1), positive for real z > 1.
pub fn ln_z2m1(z: Complex64, side: CutSide) -> Complex64 {
    ln_zm1(z, side) + ln_zp1(z, side)
}

/// exp(s · ln).
pub fn powl(ln: Complex64, s: Complex64) -> Complex64 {
    (s * ln).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_phases() {
        // (z-1) at 0.5 + i0 has argument +π
        let l = ln_zm1(Complex64::new(0.5, 0.0), CutSide::Above);
        assert!((l.im - PI).abs() < 1e-15);
        assert!((l.re - 0.5f64.ln()).abs() < 1e-15);
        // (1-z) at 2 - i0 has argument +π
        let l = ln_1mz(Complex64::new(2.0, 0.0), CutSide::Below);
        assert!((l.im - PI).abs() < 1e-15);
        // (z²-1) positive for z > 1 regardless of side flag
        let l = ln_z2m1(Complex64::new(3.0, 0.0), CutSide::OffCut);
        assert!((l.re - 8f64.ln()).abs() < 1e-14 && l.im == 0.0);
    }

    #[test]
    fn off_cut_matches_principal() {
        let z = Complex64::new(0.3, 0.8);
        assert_eq!(ln_zm1(z, CutSide::OffCut), (z - 1.0).ln());
        assert_eq!(ln_neg_z(z, CutSide::OffCut), (-z).ln());
    }
}
