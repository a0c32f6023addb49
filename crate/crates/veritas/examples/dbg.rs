use num_complex::Complex64;
use veritas::gegenbauer::{gegenbauer_c, gegenbauer_d};
use veritas::quad::{integrate_finite, integrate_semi_infinite, QuadratureSpec, TailDecay};
use veritas::value::{CutPoint, EvalError};

fn c(x: f64) -> Complex64 { Complex64::new(x, 0.0) }
fn rpow(x: f64, s: Complex64) -> Complex64 { (s * x.ln()).exp() }

fn main() {
    let l = c(0.3420164873185575);
    let a = c(0.6839946813860506);
    let n = c(0.4521380640182282);
    let (z1, z2): (f64, f64) = (1.5633706483566323, 1.7208813106989989);
    let s: f64 = ((z1 * z1 - 1.0) * (z2 * z2 - 1.0)).sqrt();
    let f = |t: f64| -> Result<Complex64, EvalError> {
        let d = gegenbauer_d(l, a, CutPoint::off_cut(c(z1 * z2 + t * s)))?;
        let ck = gegenbauer_c(n, a - 0.5, CutPoint::off_cut(c(t)))?;
        Ok(d.value * ck.value * rpow(t * t - 1.0, a - 1.0))
    };
    let p = (n - l).re - 2.0;
    let spec = QuadratureSpec::default()
        .singular_endpoints(a.re - 1.0, 0.0)
        .decay(TailDecay::Power(p));
    let r = integrate_semi_infinite(&f, 1.0, &spec).unwrap();
    println!("semi-inf  = {:?} err={:.2e} evals={}", r.value, r.err_est, r.evaluations);
    let s1 = QuadratureSpec::default().singular_endpoints(a.re - 1.0, 0.0);
    let r1 = integrate_finite(&f, 1.0, 3.0, &s1).unwrap();
    let r2 = integrate_finite(&f, 3.0, 50.0, &QuadratureSpec::default()).unwrap();
    let r3 = integrate_semi_infinite(&f, 50.0, &QuadratureSpec::default().decay(TailDecay::Power(p))).unwrap();
    println!("pieces    = {:?}", r1.value + r2.value + r3.value);
    println!("  (1,3)={:?} e={:.1e}", r1.value, r1.err_est);
    println!("  (3,50)={:?} e={:.1e}", r2.value, r2.err_est);
    println!("  (50,inf)={:?} e={:.1e}", r3.value, r3.err_est);
}
