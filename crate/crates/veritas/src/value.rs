//! Core value and error types shared by every evaluator.

use num_complex::Complex64;
use thiserror::Error;

/// A complex number together with an estimated absolute error.
///
/// Every evaluator in this crate returns one of these so that identity
/// residuals can be attributed to the numerics that produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue {
    pub value: Complex64,
    pub abs_err: f64,
}

impl ComplexValue {
    pub fn new(value: Complex64, abs_err: f64) -> Self {
        Self { value, abs_err }
    }

    /// An exactly known value (error at the rounding level of its magnitude).
    pub fn exact(value: Complex64) -> Self {
        Self {
            value,
            abs_err: 2.0 * f64::EPSILON * value.norm(),
        }
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn norm(&self) -> f64 {
        self.value.norm()
    }

    /// Relative error estimate; infinite for a zero value with nonzero error.
    pub fn rel_err(&self) -> f64 {
        if self.value.norm() > 0.0 {
            self.abs_err / self.value.norm()
        } else if self.abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }

    /// Combine with another value under multiplication.
    pub fn mul(&self, other: &ComplexValue) -> ComplexValue {
        let v = self.value * other.value;
        let err = self.abs_err * other.value.norm()
            + other.abs_err * self.value.norm()
            + 2.0 * f64::EPSILON * v.norm();
        ComplexValue::new(v, err)
    }

    /// Scale by an exactly known complex factor.
    pub fn scale(&self, k: Complex64) -> ComplexValue {
        ComplexValue::new(self.value * k, self.abs_err * k.norm())
    }

    pub fn add(&self, other: &ComplexValue) -> ComplexValue {
        let v = self.value + other.value;
        ComplexValue::new(v, self.abs_err + other.abs_err + f64::EPSILON * v.norm())
    }

    pub fn sub(&self, other: &ComplexValue) -> ComplexValue {
        let v = self.value - other.value;
        ComplexValue::new(v, self.abs_err + other.abs_err + f64::EPSILON * v.norm())
    }

    pub fn div(&self, other: &ComplexValue) -> ComplexValue {
        let v = self.value / other.value;
        let d = other.value.norm();
        let err = self.abs_err / d + other.abs_err * self.value.norm() / (d * d)
            + 2.0 * f64::EPSILON * v.norm();
        ComplexValue::new(v, err)
    }
}

/// Which side of a real branch cut an on-cut abscissa is approached from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CutSide {
    Above,
    Below,
    OffCut,
}

impl CutSide {
    /// The opposite boundary side; `OffCut` is its own opposite.
    pub fn flip(self) -> CutSide {
        match self {
            CutSide::Above => CutSide::Below,
            CutSide::Below => CutSide::Above,
            CutSide::OffCut => CutSide::OffCut,
        }
    }

    /// The sign of the infinitesimal imaginary part (`+1` above, `-1` below).
    pub fn sign(self) -> f64 {
        match self {
            CutSide::Above => 1.0,
            CutSide::Below => -1.0,
            CutSide::OffCut => 0.0,
        }
    }
}

/// An argument with explicit branch-side information, i.e. `x ± i0`.
///
/// Boundary values on a cut are represented by a real abscissa plus a side
/// tag, never by signed-zero imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPoint {
    pub z: Complex64,
    pub side: CutSide,
}

impl CutPoint {
    pub fn above(x: f64) -> Self {
        Self {
            z: Complex64::new(x, 0.0),
            side: CutSide::Above,
        }
    }

    pub fn below(x: f64) -> Self {
        Self {
            z: Complex64::new(x, 0.0),
            side: CutSide::Below,
        }
    }

    pub fn off_cut(z: Complex64) -> Self {
        Self {
            z,
            side: CutSide::OffCut,
        }
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }
}

/// Errors surfaced by the function evaluators.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    #[error("argument is a pole of the gamma function (non-positive integer {0})")]
    PoleAtNonPositiveInteger(f64),
    #[error("argument lies on the branch cut and no side was supplied")]
    OnBranchCut,
    #[error("series/continuation failed to converge (best error {best_err:.3e})")]
    NonConvergence { best_err: f64 },
    #[error("degree/order combination is a pole of the defining gamma prefactor")]
    DegreeOrderPole,
    #[error("order parameters are invalid for this function: {0}")]
    InvalidOrder(String),
    #[error("abscissa must lie in the open segment (-1, 1)")]
    OutOfSegment,
    #[error("argument lies on the positive real axis and no side was supplied")]
    OnPositiveRealAxis,
    #[error("two-term combination lost more than 6 digits to cancellation")]
    CancellationLoss,
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
}

pub type EvalResult = Result<ComplexValue, EvalError>;

/// True when `x` is within `tol` of a non-positive integer.
pub fn near_nonpositive_int(z: Complex64, tol: f64) -> bool {
    z.im.abs() <= tol && z.re <= 0.5 && (z.re - z.re.round()).abs() <= tol
}

/// True when `z` is within `tol` of any integer on the real axis.
pub fn near_int(z: Complex64, tol: f64) -> bool {
    z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol
}
