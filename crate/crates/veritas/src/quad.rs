//! Adaptive quadrature: finite intervals with algebraic endpoint
//! singularities (tanh-sinh), smooth finite intervals (Gauss-Kronrod
//! bisection), semi-infinite tails via compactifying maps, and iterated 2D
//! integrals.

use crate::value::EvalError;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Declared decay of an integrand as u grows; used to choose the
/// semi-infinite variable change and to bound the dropped-tail error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailDecay {
    /// |f(u)| ~ C u^p with p < -1.
    Power(f64),
    /// |f(u)| ~ C e^{-r u} with r > 0.
    Exponential(f64),
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: u32,
    /// Algebraic singularity orders at the two endpoints; (0, 0) means the
    /// integrand extends continuously.
    pub endpoint_exponents: (f64, f64),
    /// Exponent of the first correction beyond the leading endpoint
    /// behavior, per endpoint: the integrand is dist^e (c0 + c1 dist^step +
    /// ...).  1 for an ordinary Taylor correction; fractional when a second
    /// singular branch rides on top of the leading one, as for second-kind
    /// functions evaluated near a contact point.
    pub endpoint_steps: (f64, f64),
    pub tail_decay: TailDecay,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-8,
            abs_tol: 1e-14,
            max_subdivisions: 60,
            endpoint_exponents: (0.0, 0.0),
            endpoint_steps: (1.0, 1.0),
            tail_decay: TailDecay::Unknown,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tols(rel_tol: f64, abs_tol: f64) -> Self {
        QuadratureSpec {
            rel_tol,
            abs_tol,
            ..Default::default()
        }
    }

    pub fn singular_endpoints(mut self, left: f64, right: f64) -> Self {
        self.endpoint_exponents = (left, right);
        self
    }

    pub fn endpoint_steps(mut self, left: f64, right: f64) -> Self {
        self.endpoint_steps = (left, right);
        self
    }

    pub fn decay(mut self, d: TailDecay) -> Self {
        self.tail_decay = d;
        self
    }

    fn tol_for(&self, magnitude: f64) -> f64 {
        (self.rel_tol * magnitude).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_est: f64,
    pub evaluations: u64,
    pub converged: bool,
}

#[derive(Debug)]
pub enum QuadError {
    /// Budget exhausted; the best estimate so far is attached.
    NonConvergence(QuadResult),
    /// The integrand failed at the given abscissa.
    IntegrandFailure { at: f64, source: EvalError },
    /// Tail probe found decay not faster than 1/u.
    DivergentTail,
}

pub type Integrand<'a> = &'a dyn Fn(f64) -> Result<Complex64, EvalError>;

/// Integral over (a, b).  Tanh-sinh when an endpoint singularity is
/// declared, Gauss-Kronrod bisection otherwise.
pub fn integrate_finite(
    f: Integrand,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, QuadError> {
    assert!(a < b, "empty interval");
    if spec.endpoint_exponents != (0.0, 0.0) {
        tanh_sinh(f, a, b, spec)
    } else {
        adaptive_gk(f, a, b, spec)
    }
}

// ---- tanh-sinh -----------------------------------------------------------

const TS_LEVEL_CAP: u32 = 12;
// Distance to an endpoint below which an abscissa is dropped; the declared
// exponents guarantee the skipped sliver is integrable and negligible.
const TS_ENDPOINT_FLOOR: f64 = 1e-290;

fn tanh_sinh(
    f: Integrand,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, QuadError> {
    let half = 0.5 * (b - a);
    // Below this distance the offset from the endpoint is poorly resolved in
    // the abscissa passed to the integrand (relative error ~1e-16/dist), so
    // the integrand is continued as dist^e (c0 + c1 dist + c2 ln dist),
    // fitted from reference samples at the cutoff and at twice and four
    // times the cutoff.  The logarithmic basis term matters: second-kind
    // functions carry a log at the endpoint, and a fit without it would
    // drop the log's growth below the cutoff.
    let extrap_cutoff = half * 1e-7;
    let delta = extrap_cutoff;
    let (ea, eb) = spec.endpoint_exponents;
    let (ga, gb) = spec.endpoint_steps;
    let mut evals0: u64 = 0;
    let sample = |x: f64, evals: &mut u64| -> Result<Complex64, QuadError> {
        *evals += 1;
        f(x).map_err(|source| QuadError::IntegrandFailure { at: x, source })
    };
    let fit = |f1: Complex64,
               f2: Complex64,
               f3: Complex64,
               e: f64,
               g: f64,
               endpoint: f64|
     -> (Complex64, Complex64, Complex64) {
        let v1 = f1 / delta.powf(e);
        let v2 = f2 / (2.0 * delta).powf(e);
        let v3 = f3 / (4.0 * delta).powf(e);
        let q = 2f64.powf(g) - 1.0;
        // c1d carries c1 * delta^g so dist enters only as (dist/delta)^g
        let mut c1d = (v3 - 2.0 * v2 + v1) / (q * q);
        let mut c2 = (v2 - v1 - c1d * q) / std::f64::consts::LN_2;
        // the samples resolve the endpoint distance only to ~ulp(endpoint),
        // and the second difference amplifies that noise; a log coefficient
        // that small is an artifact, while a genuine one sits near v1/|ln
        // delta|, orders of magnitude above
        let mag = (v1.norm() + v2.norm() + v3.norm()) / 3.0;
        let noise =
            mag * (e.abs() + 1.0) * (1e-16 * endpoint.abs() / delta + 2e-16) / (q * q).min(1.0);
        if c2.norm() < 30.0 * noise {
            c2 = Complex64::new(0.0, 0.0);
            c1d = (v3 - v1) / (4f64.powf(g) - 1.0);
        }
        (v1 - c1d - c2 * delta.ln(), c1d, c2)
    };
    let (ca0, ca1, ca2) = {
        let f1 = sample(a + delta, &mut evals0)?;
        let f2 = sample(a + 2.0 * delta, &mut evals0)?;
        let f3 = sample(a + 4.0 * delta, &mut evals0)?;
        fit(f1, f2, f3, ea, ga, a)
    };
    let (cb0, cb1, cb2) = {
        let f1 = sample(b - delta, &mut evals0)?;
        let f2 = sample(b - 2.0 * delta, &mut evals0)?;
        let f3 = sample(b - 4.0 * delta, &mut evals0)?;
        fit(f1, f2, f3, eb, gb, b)
    };
    // x(t) = mid + half tanh(pi/2 sinh t); w(t) = half (pi/2) cosh t /
    // cosh^2(pi/2 sinh t).  t beyond ~6.1 puts x under the endpoint floor.
    let eval_at = |t: f64, evals: &mut u64| -> Result<Complex64, QuadError> {
        let s = FRAC_PI_2 * t.sinh();
        let e2 = (-2.0 * s.abs()).exp();
        // distance to the nearer endpoint, formed without cancellation
        let dist = half * 2.0 * e2 / (1.0 + e2);
        if dist < TS_ENDPOINT_FLOOR {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
        let w = half * FRAC_PI_2 * t.cosh() * sech2;
        let v = if dist < extrap_cutoff {
            if s >= 0.0 {
                (cb0 + cb1 * (dist / delta).powf(gb) + cb2 * dist.ln()) * dist.powf(eb)
            } else {
                (ca0 + ca1 * (dist / delta).powf(ga) + ca2 * dist.ln()) * dist.powf(ea)
            }
        } else {
            let x = if s >= 0.0 { b - dist } else { a + dist };
            sample(x, evals)?
        };
        Ok(v * w)
    };

    // Rounding-noise plateau: integrand samples near the cutoff carry
    // relative error ~1e-16/(dist/half), which caps the achievable accuracy
    // for singular endpoints.  Folded into err_est so the bound stays honest.
    let lg = delta.ln().abs();
    let noise_floor = 1e-8
        * ((ca0.norm() + ca1.norm() + ca2.norm() * lg) * delta.powf(1.0 + ea)
            + (cb0.norm() + cb1.norm() + cb2.norm() * lg) * delta.powf(1.0 + eb));

    let t_max = 6.11;
    let mut evals = evals0;
    let mut h = 1.0;
    // level 0: coarse trapezoid over t in [-t_max, t_max]
    let mut sum = eval_at(0.0, &mut evals)?;
    let mut k = 1;
    while (k as f64) * h <= t_max {
        let t = (k as f64) * h;
        sum += eval_at(t, &mut evals)? + eval_at(-t, &mut evals)?;
        k += 1;
    }
    let mut prev = sum * h;
    let mut prev_diff = f64::MAX;
    for _level in 0..TS_LEVEL_CAP {
        h *= 0.5;
        // new abscissas are the odd multiples of the halved step
        let mut add = Complex64::new(0.0, 0.0);
        let mut k = 1;
        while (k as f64) * h <= t_max {
            let t = (k as f64) * h;
            add += eval_at(t, &mut evals)? + eval_at(-t, &mut evals)?;
            k += 2;
        }
        sum += add;
        let cur = sum * h;
        let diff = (cur - prev).norm();
        let tol = spec.tol_for(cur.norm());
        if diff <= tol && prev_diff <= 10.0 * tol {
            let err = diff.max(noise_floor).max(1e-16 * cur.norm());
            let res = QuadResult {
                value: cur,
                err_est: err,
                evaluations: evals,
                converged: err <= tol,
            };
            return if res.converged {
                Ok(res)
            } else {
                Err(QuadError::NonConvergence(res))
            };
        }
        prev = cur;
        prev_diff = diff;
    }
    Err(QuadError::NonConvergence(QuadResult {
        value: prev,
        err_est: prev_diff.max(noise_floor),
        evaluations: evals,
        converged: false,
    }))
}

// ---- Gauss-Kronrod 7/15 --------------------------------------------------

const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15(
    f: Integrand,
    a: f64,
    b: f64,
    evals: &mut u64,
) -> Result<(Complex64, f64), QuadError> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut fk = [Complex64::new(0.0, 0.0); 15];
    for (i, &x) in XGK.iter().enumerate() {
        let xs = if i == 7 {
            vec![mid]
        } else {
            vec![mid - half * x, mid + half * x]
        };
        for (j, &xx) in xs.iter().enumerate() {
            *evals += 1;
            let v = f(xx).map_err(|source| QuadError::IntegrandFailure { at: xx, source })?;
            fk[2 * i + j] = v;
        }
    }
    let mut kron = fk[14] * WGK[7];
    let mut gauss = fk[14] * WG[3];
    for i in 0..7 {
        let pair = fk[2 * i] + fk[2 * i + 1];
        kron += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    let value = kron * half;
    // |K15 - G7| estimates the Gauss error and overestimates the Kronrod
    // error, which keeps the reported bound conservative
    let err = ((kron - gauss) * half).norm() + 1e-16 * value.norm();
    Ok((value, err))
}

fn adaptive_gk(
    f: Integrand,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, QuadError> {
    let mut evals: u64 = 0;
    let (v0, e0) = gk15(f, a, b, &mut evals)?;
    // worklist of (err, a, b, value)
    let mut segs: Vec<(f64, f64, f64, Complex64)> = vec![(e0, a, b, v0)];
    for _ in 0..spec.max_subdivisions {
        let total: Complex64 = segs.iter().map(|s| s.3).sum();
        let err: f64 = segs.iter().map(|s| s.0).sum();
        if err <= spec.tol_for(total.norm()) {
            return Ok(QuadResult {
                value: total,
                err_est: err,
                evaluations: evals,
                converged: true,
            });
        }
        // split the worst segment
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .0.total_cmp(&y.1 .0))
            .map(|(i, _)| i)
            .unwrap();
        let (_, sa, sb, _) = segs.swap_remove(worst);
        let sm = 0.5 * (sa + sb);
        let (vl, el) = gk15(f, sa, sm, &mut evals)?;
        let (vr, er) = gk15(f, sm, sb, &mut evals)?;
        segs.push((el, sa, sm, vl));
        segs.push((er, sm, sb, vr));
    }
    let total: Complex64 = segs.iter().map(|s| s.3).sum();
    let err: f64 = segs.iter().map(|s| s.0).sum();
    if err <= spec.tol_for(total.norm()) {
        return Ok(QuadResult {
            value: total,
            err_est: err,
            evaluations: evals,
            converged: true,
        });
    }
    Err(QuadError::NonConvergence(QuadResult {
        value: total,
        err_est: err,
        evaluations: evals,
        converged: false,
    }))
}

// ---- semi-infinite -------------------------------------------------------

/// Integral over (a, infinity).  The declared (or probed) tail decay selects
/// the variable change u = a + (1-v)/v (power) or u = a - ln v
/// (exponential); either way v runs over (0, 1) and the v = 0 endpoint
/// carries the mapped singularity, handled by tanh-sinh.
pub fn integrate_semi_infinite(
    f: Integrand,
    a: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, QuadError> {
    let decay = match spec.tail_decay {
        TailDecay::Unknown => probe_tail(f, a)?,
        d => d,
    };
    let mut inner = *spec;
    inner.tail_decay = decay;
    match decay {
        TailDecay::Power(p) => {
            if p >= -1.0 {
                return Err(QuadError::DivergentTail);
            }
            // f(a + (1-v)/v) / v^2; near v = 0 behaves like v^{-p-2}, and a
            // declared singularity of f at u = a maps onto v = 1
            inner.endpoint_exponents = (-p - 2.0, spec.endpoint_exponents.0);
            inner.endpoint_steps = (1.0, spec.endpoint_steps.0);
            let g = |v: f64| -> Result<Complex64, EvalError> {
                let u = a + (1.0 - v) / v;
                Ok(f(u)? / (v * v))
            };
            let mut r = tanh_sinh(&g, 0.0, 1.0, &inner)?;
            // dropped sliver v < floor corresponds to u > 1/floor
            let umax = 1.0 / TS_ENDPOINT_FLOOR;
            if let Ok(tail_f) = f(a + 1e12) {
                let c = tail_f.norm() / (a + 1e12).powf(p);
                r.err_est += c * umax.powf(p + 1.0) / (p + 1.0).abs();
            }
            Ok(r)
        }
        TailDecay::Exponential(rate) => {
            if rate <= 0.0 {
                return Err(QuadError::DivergentTail);
            }
            // f(a - ln v) / v; near v = 0 behaves like v^{rate - 1}, and a
            // declared singularity of f at u = a maps onto v = 1
            inner.endpoint_exponents = (rate - 1.0, spec.endpoint_exponents.0);
            inner.endpoint_steps = (1.0, spec.endpoint_steps.0);
            let g = |v: f64| -> Result<Complex64, EvalError> {
                let u = a - v.ln();
                Ok(f(u)? / v)
            };
            let r = tanh_sinh(&g, 0.0, 1.0, &inner)?;
            Ok(r)
        }
        TailDecay::Unknown => unreachable!(),
    }
}

/// Sample the tail at geometrically spaced points and classify the decay.
fn probe_tail(f: Integrand, a: f64) -> Result<TailDecay, QuadError> {
    let offsets = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0];
    let mut mags = Vec::with_capacity(offsets.len());
    for &s in &offsets {
        let u = a.abs().max(1.0) * 0.0 + a + s;
        let v = f(u).map_err(|source| QuadError::IntegrandFailure { at: u, source })?;
        mags.push((u, v.norm().max(1e-300)));
    }
    // exponential if log|f| is closer to linear in u than in log u
    let (u1, m1) = mags[2];
    let (u2, m2) = mags[4];
    let (u3, m3) = mags[5];
    let r12 = (m1 / m2).ln() / (u2 - u1);
    let r23 = (m2 / m3).ln() / (u3 - u2);
    if r12 > 0.0 && r23 > 0.0 && (r12 / r23 - 1.0).abs() < 0.25 {
        return Ok(TailDecay::Exponential(0.5 * (r12 + r23)));
    }
    let p12 = (m2 / m1).ln() / (u2 / u1).ln();
    let p23 = (m3 / m2).ln() / (u3 / u2).ln();
    let p = p23.max(p12);
    if p >= -1.01 {
        return Err(QuadError::DivergentTail);
    }
    Ok(TailDecay::Power(p))
}

// ---- 2D ------------------------------------------------------------------

/// One integration axis of a product domain.
#[derive(Debug, Clone, Copy)]
pub enum Axis {
    Finite(f64, f64),
    SemiInfinite(f64),
}

pub type Integrand2<'a> = &'a dyn Fn(f64, f64) -> Result<Complex64, EvalError>;

/// Iterated integral over outer x inner; the inner axis is fully resolved
/// at every outer abscissa and both error estimates are composed.
pub fn integrate_2d(
    f: Integrand2,
    outer: Axis,
    inner: Axis,
    outer_spec: &QuadratureSpec,
    inner_spec: &QuadratureSpec,
) -> Result<QuadResult, QuadError> {
    use std::cell::RefCell;
    let inner_err = RefCell::new(0.0f64);
    let inner_evals = RefCell::new(0u64);
    let slice = |u: f64| -> Result<Complex64, EvalError> {
        let g = |w: f64| f(u, w);
        let r = match inner {
            Axis::Finite(a, b) => integrate_finite(&g, a, b, inner_spec),
            Axis::SemiInfinite(a) => integrate_semi_infinite(&g, a, inner_spec),
        }
        .map_err(|e| match e {
            QuadError::IntegrandFailure { source, .. } => source,
            _ => EvalError::NonConvergence { best_err: f64::MAX },
        })?;
        let worst = inner_err.borrow().max(r.err_est);
        *inner_err.borrow_mut() = worst;
        *inner_evals.borrow_mut() += r.evaluations;
        Ok(r.value)
    };
    let mut r = match outer {
        Axis::Finite(a, b) => integrate_finite(&slice, a, b, outer_spec)?,
        Axis::SemiInfinite(a) => integrate_semi_infinite(&slice, a, outer_spec)?,
    };
    let width = match outer {
        Axis::Finite(a, b) => b - a,
        Axis::SemiInfinite(_) => 1.0,
    };
    r.err_est += inner_err.into_inner() * width;
    r.evaluations += inner_evals.into_inner();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use crate::gamma::gamma;
    use approx::assert_relative_eq;

    fn ok(v: f64) -> Result<Complex64, EvalError> {
        Ok(Complex64::new(v, 0.0))
    }

    // Budget exhaustion still carries the refined estimate; several corpus
    // cases sit at the double-precision plateau for very tight tolerances.
    fn best(r: Result<QuadResult, QuadError>) -> QuadResult {
        match r {
            Ok(v) => v,
            Err(QuadError::NonConvergence(v)) => v,
            Err(e) => panic!("unexpected quadrature failure: {e:?}"),
        }
    }

    #[test]
    fn plain_interval() {
        let r = integrate_finite(&|_| ok(1.0), 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-13);
        let r = integrate_finite(&|x| ok(x.exp()), 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert_relative_eq!(r.value.re, 1f64.exp() - 1.0, max_relative = 1e-12);
    }

    #[test]
    fn inverse_sqrt_endpoint() {
        let spec = QuadratureSpec::default().singular_endpoints(-0.5, 0.0);
        let r = integrate_finite(&|x| ok(x.powf(-0.5)), 0.0, 1.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn beta_half_half_is_pi() {
        let spec = QuadratureSpec::with_tols(1e-12, 1e-15).singular_endpoints(-0.5, -0.5);
        let r = best(integrate_finite(
            &|x| ok(x.powf(-0.5) * (1.0 - x).powf(-0.5)),
            0.0,
            1.0,
            &spec,
        ));
        assert_relative_eq!(r.value.re, PI, max_relative = 1e-11);
    }

    #[test]
    fn beta_function_grid() {
        // B(p, q) for p, q in {0.1, 0.5, 0.9} against the gamma ratio
        for &p in &[0.1, 0.5, 0.9] {
            for &q in &[0.1, 0.5, 0.9] {
                let spec =
                    QuadratureSpec::with_tols(1e-11, 1e-15).singular_endpoints(p - 1.0, q - 1.0);
                let r = best(integrate_finite(
                    &|x| ok(x.powf(p - 1.0) * (1.0 - x).powf(q - 1.0)),
                    0.0,
                    1.0,
                    &spec,
                ));
                let exact = (gamma(Complex64::new(p, 0.0)).unwrap().value
                    * gamma(Complex64::new(q, 0.0)).unwrap().value
                    / gamma(Complex64::new(p + q, 0.0)).unwrap().value)
                    .re;
                assert_relative_eq!(r.value.re, exact, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn power_tail() {
        let spec = QuadratureSpec::default().decay(TailDecay::Power(-2.0));
        let r = integrate_semi_infinite(&|u| ok(u.powi(-2)), 1.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn exponential_tail() {
        let spec = QuadratureSpec::default().decay(TailDecay::Exponential(1.0));
        let r = integrate_semi_infinite(&|u| ok((-u).exp()), 0.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn probed_tails() {
        // decay hints withheld: the probe must classify both integrands
        let spec = QuadratureSpec::default();
        let r = integrate_semi_infinite(&|u| ok(u.powi(-2)), 1.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-8);
        let r = integrate_semi_infinite(&|u| ok((-2.0 * u).exp()), 0.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 0.5, max_relative = 1e-8);
        assert!(matches!(
            integrate_semi_infinite(&|u| ok(1.0 / u), 1.0, &spec),
            Err(QuadError::DivergentTail)
        ));
    }

    #[test]
    fn tail_with_edge_singularity() {
        // int_1^inf u^{-3/2} (u-1)^{-1/2} du = 2
        let spec = QuadratureSpec::default()
            .decay(TailDecay::Power(-2.0))
            .singular_endpoints(-0.5, 0.0);
        let g = |u: f64| ok(u.powf(-1.5) * (u - 1.0).powf(-0.5));
        let r = integrate_semi_infinite(&g, 1.0, &spec).unwrap();
        assert_relative_eq!(r.value.re, 2.0, max_relative = 1e-8);
    }

    #[test]
    fn separable_2d() {
        let spec = QuadratureSpec::default();
        let pspec = spec.decay(TailDecay::Power(-2.0));
        let r = integrate_2d(
            &|u, w| ok(u.powi(-2) * w.powi(-2)),
            Axis::SemiInfinite(1.0),
            Axis::SemiInfinite(1.0),
            &pspec,
            &pspec,
        )
        .unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-7);
        let r = integrate_2d(
            &|_, _| ok(1.0),
            Axis::Finite(0.0, 1.0),
            Axis::Finite(0.0, 1.0),
            &spec,
            &spec,
        )
        .unwrap();
        assert_relative_eq!(r.value.re, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn integrand_failure_carries_abscissa() {
        let spec = QuadratureSpec::default();
        let e = integrate_finite(
            &|x| {
                if x > 0.5 {
                    Err(EvalError::OnBranchCut)
                } else {
                    ok(1.0)
                }
            },
            0.0,
            1.0,
            &spec,
        );
        match e {
            Err(QuadError::IntegrandFailure { at, .. }) => assert!(at > 0.5),
            other => panic!("expected integrand failure, got {other:?}"),
        }
    }

    #[test]
    fn error_estimate_honesty() {
        // closed-form corpus; true error must stay within 3x the estimate
        // in at least 95% of cases
        let cases: Vec<(Box<dyn Fn(f64) -> Result<Complex64, EvalError>>, f64, f64, (f64, f64), f64)> = vec![
            (Box::new(|x: f64| ok(x.sin())), 0.0, PI, (0.0, 0.0), 2.0),
            (Box::new(|x: f64| ok(x * x)), 0.0, 1.0, (0.0, 0.0), 1.0 / 3.0),
            (Box::new(|x: f64| ok(1.0 / (1.0 + x * x))), 0.0, 1.0, (0.0, 0.0), PI / 4.0),
            (Box::new(|x: f64| ok(x.exp())), -1.0, 1.0, (0.0, 0.0), 1f64.exp() - (-1f64).exp()),
            (Box::new(|x: f64| ok(x.powf(-0.5) * (2.0 - x))), 0.0, 1.0, (-0.5, 0.0), 10.0 / 3.0),
            (Box::new(|x: f64| ok(x.powf(-0.3))), 0.0, 1.0, (-0.3, 0.0), 1.0 / 0.7),
            (Box::new(|x: f64| ok((1.0 - x).powf(-0.7))), 0.0, 1.0, (0.0, -0.7), 1.0 / 0.3),
            (Box::new(|x: f64| ok((x * (1.0 - x)).powf(-0.5))), 0.0, 1.0, (-0.5, -0.5), PI),
            (Box::new(|x: f64| ok(x.cos() * x)), 0.0, 1.0, (0.0, 0.0), 1f64.cos() + 1f64.sin() - 1.0),
            (Box::new(|x: f64| ok((2.0 * x).sin().powi(2))), 0.0, PI, (0.0, 0.0), PI / 2.0),
            (Box::new(|x: f64| ok(1.0 / (2.0 + x.sin()))), 0.0, 2.0 * PI, (0.0, 0.0), 2.0 * PI / 3f64.sqrt()),
            (Box::new(|x: f64| ok(x.sqrt())), 0.0, 1.0, (0.5, 0.0), 2.0 / 3.0),
            // B(5/4, 3/4)
            (Box::new(|x: f64| ok(x.powf(0.25) * (1.0 - x).powf(-0.25))), 0.0, 1.0, (0.25, -0.25), 1.1107207345395916),
            // sqrt(pi) erf(3)
            (Box::new(|x: f64| ok((-x * x).exp())), -3.0, 3.0, (0.0, 0.0), 1.7724146965190425),
            (Box::new(|x: f64| ok(1.0 / (1.0 + x).sqrt())), 0.0, 3.0, (0.0, 0.0), 2.0),
            (Box::new(|x: f64| ok(x.tan())), 0.0, 1.0, (0.0, 0.0), -(1f64.cos().ln())),
            (Box::new(|x: f64| ok((x + 0.01).ln())), 0.0, 1.0, (0.0, 0.0), 1.01 * 1.01f64.ln() - 1.0 - 0.01 * 0.01f64.ln()),
            (Box::new(|x: f64| ok(x.powi(7))), 0.0, 2.0, (0.0, 0.0), 32.0),
            (Box::new(|x: f64| ok((5.0 * x).cos())), 0.0, 1.0, (0.0, 0.0), 5f64.sin() / 5.0),
            (Box::new(|x: f64| ok(1.0 / (x + 0.05))), 0.0, 1.0, (0.0, 0.0), (1.05f64 / 0.05).ln()),
        ];
        let mut honest = 0usize;
        let mut prev_errors = Vec::new();
        for (f, a, b, exps, exact) in &cases {
            let spec = QuadratureSpec::default().singular_endpoints(exps.0, exps.1);
            let r = best(integrate_finite(&**f, *a, *b, &spec));
            let true_err = (r.value.re - exact).abs();
            if true_err <= 3.0 * r.err_est.max(1e-15) {
                honest += 1;
            } else {
                eprintln!(
                    "dishonest: [{a}, {b}] exps {exps:?}: true {true_err:.3e} est {:.3e}",
                    r.err_est
                );
            }
            prev_errors.push((true_err, *a, *b, exps.0, exps.1));
        }
        assert!(
            honest * 100 >= cases.len() * 95,
            "only {honest}/{} honest error estimates",
            cases.len()
        );
        // refinement monotonicity: tightening rel_tol must not worsen the
        // true error
        for (i, (f, a, b, exps, exact)) in cases.iter().enumerate() {
            let tight = QuadratureSpec::with_tols(1e-12, 1e-16).singular_endpoints(exps.0, exps.1);
            let r = best(integrate_finite(&**f, *a, *b, &tight));
            let true_err = (r.value.re - exact).abs();
            // at the rounding plateau the refined run may jitter within its
            // own (still honest) error bound
            assert!(
                true_err <= (prev_errors[i].0 + 1e-13).max(3.0 * r.err_est),
                "refinement worsened case {i}: {true_err} vs {}",
                prev_errors[i].0
            );
        }
    }
}
