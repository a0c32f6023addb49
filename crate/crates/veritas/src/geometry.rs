//! Kernel arguments appearing inside the product-formula integrands, plus the
//! corrected lower integration limit for the QQ kernel form.

/// Which power of the third trigonometric variable enters the B kernel.
///
/// The printed formula carries x3 cubed; the symmetric form suggested by the
/// hyperbolic analogue carries x3 squared. Both are kept so sweeps can decide
/// empirically which one closes the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BVariant {
    Cubic,
    Square,
}

impl Default for BVariant {
    fn default() -> Self {
        BVariant::Cubic
    }
}

impl std::str::FromStr for BVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic" => Ok(BVariant::Cubic),
            "square" => Ok(BVariant::Square),
            other => Err(format!("unknown b-variant {other:?}, expected cubic|square")),
        }
    }
}

/// A(y1,y2,y3) = (y1^2 + y2^2 + y3^2 - 1) / (2 y1 y2 y3).
pub fn kernel_a(y1: f64, y2: f64, y3: f64) -> f64 {
    (y1 * y1 + y2 * y2 + y3 * y3 - 1.0) / (2.0 * y1 * y2 * y3)
}

/// B(x1,x2,x3) = (2 - x1^2 - x2^2 - x3^2 + x1^2 x2^2 x3^k)
///   / (2 sqrt((1-x1^2)(1-x2^2)(1-x3^2))), k = 3 or 2 per variant.
pub fn kernel_b(x1: f64, x2: f64, x3: f64, variant: BVariant) -> f64 {
    let cross = match variant {
        BVariant::Cubic => x1 * x1 * x2 * x2 * x3 * x3 * x3,
        BVariant::Square => x1 * x1 * x2 * x2 * x3 * x3,
    };
    (2.0 - x1 * x1 - x2 * x2 - x3 * x3 + cross)
        / (2.0 * ((1.0 - x1 * x1) * (1.0 - x2 * x2) * (1.0 - x3 * x3)).sqrt())
}

/// C(y1,y2,y3) = (1 - y1^2 y2^2 - y1^2 y3^2 - y2^2 y3^2 + 2 y1^2 y2^2 y3^2)
///   / (2 y1 y2 y3 sqrt((y1^2-1)(y2^2-1)(y3^2-1))).
pub fn kernel_c(y1: f64, y2: f64, y3: f64) -> f64 {
    let (s1, s2, s3) = (y1 * y1, y2 * y2, y3 * y3);
    (1.0 - s1 * s2 - s1 * s3 - s2 * s3 + 2.0 * s1 * s2 * s3)
        / (2.0 * y1 * y2 * y3 * ((s1 - 1.0) * (s2 - 1.0) * (s3 - 1.0)).sqrt())
}

/// E(z,w) = (z^2 + w^2) / (2 w z).
pub fn kernel_e(z: f64, w: f64) -> f64 {
    (z * z + w * w) / (2.0 * w * z)
}

/// G(x,t) = (2 - x^2 - t^2) / (2 sqrt((1-x^2)(1-t^2))).
pub fn kernel_g(x: f64, t: f64) -> f64 {
    (2.0 - x * x - t * t) / (2.0 * ((1.0 - x * x) * (1.0 - t * t)).sqrt())
}

/// u(z,w) = (2 z^2 w^2 - z^2 - w^2) / (2 z w sqrt((z^2-1)(w^2-1))).
pub fn kernel_u(z: f64, w: f64) -> f64 {
    (2.0 * z * z * w * w - z * z - w * w)
        / (2.0 * z * w * ((z * z - 1.0) * (w * w - 1.0)).sqrt())
}

/// Z(y1,y2,u,w) = 2 y1^2 y2^2 - 1 + 4 y1 y2 sqrt((y1^2-1)(y2^2-1)) u w
///   + 2 (y1^2-1)(y2^2-1) w^2.
pub fn kernel_z(y1: f64, y2: f64, u: f64, w: f64) -> f64 {
    let (s1, s2) = (y1 * y1 - 1.0, y2 * y2 - 1.0);
    2.0 * y1 * y1 * y2 * y2 - 1.0 + 4.0 * y1 * y2 * (s1 * s2).sqrt() * u * w
        + 2.0 * s1 * s2 * w * w
}

/// W(x,y,u,w) = x y + sqrt(x^2-1) sqrt(y^2-1) u w + (x-1)(y-1)(w^2-1)/2.
pub fn kernel_w(x: f64, y: f64, u: f64, w: f64) -> f64 {
    x * y + ((x * x - 1.0) * (y * y - 1.0)).sqrt() * u * w
        + 0.5 * (x - 1.0) * (y - 1.0) * (w * w - 1.0)
}

/// Corrected lower limit of the kernel-form QQ integral:
/// y1 y2 + sqrt((y1^2-1)(y2^2-1)).
pub fn qq_lower_limit(y1: f64, y2: f64) -> f64 {
    y1 * y2 + ((y1 * y1 - 1.0) * (y2 * y2 - 1.0)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_kernels_exceed_one() {
        // arguments parametrized as cosh of positive reals stay above 1
        for &(t1, t2, t3) in &[(0.3, 0.7, 1.2), (0.9, 0.4, 1.5), (0.2, 1.1, 1.4)] {
            let (y1, y2) = (f64::cosh(t1), f64::cosh(t2));
            let y3 = f64::cosh(t1 + t2 + t3);
            assert!(kernel_a(y1, y2, y3) > 1.0);
            assert!(kernel_c(y1, y2, (y1 * y2 + 1.0) / (y1 + y2) * 0.999 + 0.001) > 1.0);
            let (z, w) = (y1, y1 + t3);
            assert!(kernel_e(z, w) > 1.0);
            assert!(kernel_u(z, w * 2.0) > 1.0);
            assert!(kernel_z(y1, y2, 1.3, 1.4) > 1.0);
            assert!(kernel_w(y1, y2, 1.3, 1.4) > 1.0);
        }
    }

    #[test]
    fn trig_kernels_reach_one_at_endpoint() {
        // B and G equal 1 when x3 (resp. t) hits the lower endpoint
        let (x1, x2) = (0.4, 0.6);
        let x3 = (x1 + x2) / (1.0 + x1 * x2);
        let b = kernel_b(x1, x2, x3, BVariant::Square);
        assert!((b - 1.0).abs() < 1e-12, "B = {b}");
        let g = kernel_g(0.5, 0.5);
        assert!((g - 1.0).abs() < 1e-12, "G = {g}");
    }

    #[test]
    fn a_reaches_one_at_corrected_lower_limit() {
        let (y1, y2) = (1.3, 1.7);
        let y3 = qq_lower_limit(y1, y2);
        assert!((kernel_a(y1, y2, y3) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn z_matches_w_under_variable_map() {
        // Z at (y1, y2) equals 2 yt^2 - 1 where yt^2 relates to W at
        // x = 2 y1^2 - 1, y = 2 y2^2 - 1
        let (y1, y2, u, w) = (1.2, 1.5, 1.3, 1.6);
        let x = 2.0 * y1 * y1 - 1.0;
        let y = 2.0 * y2 * y2 - 1.0;
        let z = kernel_z(y1, y2, u, w);
        let wv = kernel_w(x, y, u, w);
        assert!((z - wv).abs() < 1e-10, "Z = {z}, W = {wv}");
    }
}
