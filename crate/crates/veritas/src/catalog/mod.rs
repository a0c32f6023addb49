//! Registry of the identities relating the implemented functions, each one a
//! checkable object: parameter constraints, an LHS evaluator, an RHS
//! evaluator (algebraic, series- or quadrature-backed) and a checker that
//! produces machine-readable reports.

mod helpers;
mod f_bridges;
mod f_jacobi;
mod f_kernel;
mod f_products;
mod f_single;
mod f_nicholson;
mod f_series;

use crate::geometry::BVariant;
use crate::quad::QuadratureSpec;
use crate::value::{ComplexValue, EvalError};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

/// A named parameter assignment, kept in declaration order so reports
/// serialize deterministically.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<(&'static str, Complex64)>);

impl Point {
    pub fn get(&self, name: &str) -> Option<Complex64> {
        self.0
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    /// Panics when absent; descriptors list their parameters up front and
    /// check_identity validates presence before evaluation.
    pub fn c(&self, name: &str) -> Complex64 {
        self.get(name)
            .unwrap_or_else(|| panic!("missing parameter {name}"))
    }

    pub fn re(&self, name: &str) -> f64 {
        self.c(name).re
    }
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Overrides the descriptor's default tolerance when set.
    pub rel_tol: Option<f64>,
    pub abs_tol: f64,
    pub quad: QuadratureSpec,
    pub b_variant: BVariant,
    /// Evaluate even when the point violates the stated hypotheses.
    pub allow_unsafe: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            rel_tol: None,
            abs_tol: 1e-300,
            quad: QuadratureSpec::default(),
            b_variant: BVariant::Cubic,
            allow_unsafe: false,
        }
    }
}

/// Outcome of evaluating both sides of an identity at one point.
pub struct Evaluation {
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub quad_evals: u64,
    /// Absolute error estimate carried by the quadrature or truncated
    /// series behind the RHS; zero for purely algebraic identities.
    pub quad_err: f64,
    /// Series truncation index, when the RHS is a partial sum.
    pub terms: Option<u32>,
}

impl Evaluation {
    pub fn algebraic(lhs: ComplexValue, rhs: ComplexValue) -> Self {
        Evaluation {
            lhs,
            rhs,
            quad_evals: 0,
            quad_err: 0.0,
            terms: None,
        }
    }
}

pub type EvalFn = fn(&Point, &CheckConfig) -> Result<Evaluation, EvalError>;
/// Returns the descriptions of the hypotheses violated at the point; the
/// margin shifts every inequality to keep sweep samples away from
/// constraint boundaries.
pub type ConstraintFn = fn(&Point, f64) -> Vec<String>;
pub type SampleFn = fn(&mut ChaCha8Rng) -> Point;

pub struct IdentityDescriptor {
    pub id: &'static str,
    pub family: &'static str,
    pub params: &'static [&'static str],
    pub default_tol: f64,
    pub constraints: ConstraintFn,
    pub sample: SampleFn,
    pub eval: EvalFn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    PhaseMismatch,
    ConstraintViolation,
    NumericalLimit,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PhaseMismatch => "PHASE_MISMATCH",
            Status::ConstraintViolation => "CONSTRAINT_VIOLATION",
            Status::NumericalLimit => "NUMERICAL_LIMIT",
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: String,
    pub point: Vec<(String, Complex64)>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub status: Status,
    pub quad_evals: u64,
    pub quad_err: f64,
    pub terms: Option<u32>,
    /// Violated hypotheses or evaluator diagnostics, empty on PASS.
    pub notes: Vec<String>,
}

fn registry_storage() -> &'static Vec<IdentityDescriptor> {
    static REG: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = Vec::new();
        f_bridges::register(&mut v);
        f_jacobi::register(&mut v);
        f_kernel::register(&mut v);
        f_products::register(&mut v);
        f_single::register(&mut v);
        f_nicholson::register(&mut v);
        f_series::register(&mut v);
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}

/// All descriptors, or only those of one family, in id order.
pub fn list_identities(filter: Option<&str>) -> Vec<&'static IdentityDescriptor> {
    registry_storage()
        .iter()
        .filter(|d| filter.map_or(true, |f| d.family == f))
        .collect()
}

pub fn find_identity(id: &str) -> Option<&'static IdentityDescriptor> {
    registry_storage().iter().find(|d| d.id == id)
}

pub fn families() -> Vec<&'static str> {
    let mut fams: Vec<&'static str> = registry_storage().iter().map(|d| d.family).collect();
    fams.dedup();
    fams.sort();
    fams.dedup();
    fams
}

fn classify(ev: &Evaluation, tol: f64, abs_tol: f64) -> (f64, f64, Status) {
    let lhs = ev.lhs.value;
    let rhs = ev.rhs.value;
    let abs_residual = (lhs - rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    let rel_residual = if scale > 0.0 {
        abs_residual / scale
    } else {
        abs_residual
    };
    let rel_quad_err = if scale > 0.0 {
        ev.quad_err / scale
    } else {
        ev.quad_err
    };
    let within = rel_residual <= tol || abs_residual <= abs_tol;
    let status = if within {
        if rel_quad_err <= tol / 4.0 {
            Status::Pass
        } else {
            Status::NumericalLimit
        }
    } else if rel_residual <= 4.0 * rel_quad_err {
        Status::NumericalLimit
    } else {
        let mag_ratio = if rhs.norm() > 0.0 {
            (lhs.norm() / rhs.norm() - 1.0).abs()
        } else {
            f64::INFINITY
        };
        if mag_ratio <= tol.max(1e-10) * 100.0 && rel_residual > tol {
            Status::PhaseMismatch
        } else {
            Status::Fail
        }
    };
    (abs_residual, rel_residual, status)
}

/// Evaluates both sides of the identity at the point and grades the
/// residual.  Evaluator failures surface as NUMERICAL_LIMIT with the error
/// recorded, never as a panic.
pub fn check_identity(
    desc: &IdentityDescriptor,
    point: &Point,
    cfg: &CheckConfig,
) -> IdentityReport {
    let owned_point: Vec<(String, Complex64)> = point
        .0
        .iter()
        .map(|(n, v)| (n.to_string(), *v))
        .collect();
    let mut report = IdentityReport {
        id: desc.id.to_string(),
        point: owned_point,
        lhs: Complex64::new(f64::NAN, f64::NAN),
        rhs: Complex64::new(f64::NAN, f64::NAN),
        abs_residual: f64::NAN,
        rel_residual: f64::NAN,
        status: Status::ConstraintViolation,
        quad_evals: 0,
        quad_err: 0.0,
        terms: None,
        notes: Vec::new(),
    };
    for name in desc.params {
        if point.get(name).is_none() {
            report.notes.push(format!("missing parameter {name}"));
        }
    }
    if !report.notes.is_empty() {
        return report;
    }
    let violated = (desc.constraints)(point, 0.0);
    if !violated.is_empty() && !cfg.allow_unsafe {
        report.notes = violated;
        return report;
    }
    let tol = cfg.rel_tol.unwrap_or(desc.default_tol);
    match (desc.eval)(point, cfg) {
        Ok(ev) => {
            let (abs_r, rel_r, status) = classify(&ev, tol, cfg.abs_tol);
            report.lhs = ev.lhs.value;
            report.rhs = ev.rhs.value;
            report.abs_residual = abs_r;
            report.rel_residual = rel_r;
            report.status = status;
            report.quad_evals = ev.quad_evals;
            report.quad_err = ev.quad_err;
            report.terms = ev.terms;
            if status == Status::NumericalLimit {
                report
                    .notes
                    .push("residual not resolvable above quadrature error".into());
            }
        }
        Err(e) => {
            report.status = Status::NumericalLimit;
            report.notes.push(format!("evaluator error: {e:?}"));
        }
    }
    report
}

/// Margin kept between sweep samples and constraint boundaries.
pub const SWEEP_MARGIN: f64 = 0.05;

/// Draws n constraint-satisfying points by rejection and checks each one.
/// Reproducible for a fixed seed; reports come back in draw order.
pub fn sweep(
    desc: &IdentityDescriptor,
    seed: u64,
    n: usize,
    cfg: &CheckConfig,
) -> Result<Vec<IdentityReport>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut found = None;
        for _ in 0..10_000 {
            let p = (desc.sample)(&mut rng);
            if (desc.constraints)(&p, SWEEP_MARGIN).is_empty() {
                found = Some(p);
                break;
            }
        }
        let p = found.ok_or_else(|| {
            format!("sampler for {} exhausted 10000 rejection attempts", desc.id)
        })?;
        out.push(check_identity(desc, &p, cfg));
    }
    Ok(out)
}

/// Uniform draw helper shared by the samplers.
pub(crate) fn unif(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Complex draw with a bounded imaginary part.
pub(crate) fn cplx(rng: &mut ChaCha8Rng, lo: f64, hi: f64, im: f64) -> Complex64 {
    Complex64::new(unif(rng, lo, hi), if im > 0.0 { unif(rng, -im, im) } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_populated_and_sorted() {
        let all = list_identities(None);
        assert!(all.len() >= 40, "catalog has {} descriptors", all.len());
        for w in all.windows(2) {
            assert!(w[0].id < w[1].id);
        }
    }

    #[test]
    fn unknown_family_is_empty() {
        assert!(list_identities(Some("nosuch")).is_empty());
    }
}
