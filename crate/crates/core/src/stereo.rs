//! Stereographic spin coordinates `z = tan(theta/2) e^{i phi}` in homogeneous
//! form `(u : v)`, and a quadratic solver that returns roots in that form so
//! a vanishing leading coefficient yields the point at infinity.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spin::Direction;

/// Homogeneous complex coordinate `z = u / v`, scaled so `max(|u|, |v|) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stereo {
    u: Complex64,
    v: Complex64,
}

impl Stereo {
    pub const ZERO: Stereo = Stereo { u: Complex64::new(0.0, 0.0), v: Complex64::new(1.0, 0.0) };
    pub const INFINITY: Stereo = Stereo { u: Complex64::new(1.0, 0.0), v: Complex64::new(0.0, 0.0) };

    /// Returns `None` for `(0 : 0)` or non-finite input.
    pub fn new(u: Complex64, v: Complex64) -> Option<Self> {
        let scale = u.norm().max(v.norm());
        if !(scale.is_finite() && scale > 0.0) {
            return None;
        }
        Some(Stereo { u: u / scale, v: v / scale })
    }

    pub fn finite(z: Complex64) -> Option<Self> {
        Stereo::new(z, Complex64::new(1.0, 0.0))
    }

    pub fn from_direction(dir: Direction) -> Self {
        if dir.theta() == std::f64::consts::PI {
            return Stereo::INFINITY;
        }
        let (s, c) = (dir.theta() / 2.0).sin_cos();
        let u = Complex64::from_polar(s, dir.phi());
        Stereo::new(u, Complex64::new(c, 0.0)).expect("sin and cos of a real angle never both vanish")
    }

    pub fn numerator(&self) -> Complex64 {
        self.u
    }

    pub fn denominator(&self) -> Complex64 {
        self.v
    }

    /// `u / v`, or `None` at the point at infinity.
    pub fn value(&self) -> Option<Complex64> {
        (self.v.norm() > 0.0).then(|| self.u / self.v)
    }

    pub fn is_infinite(&self) -> bool {
        self.v.norm() == 0.0
    }

    pub fn to_direction(&self) -> Direction {
        let theta = 2.0 * self.u.norm().atan2(self.v.norm());
        let phi = if self.u.norm() == 0.0 || self.v.norm() == 0.0 { 0.0 } else { (self.u * self.v.conj()).arg() };
        Direction::new(theta.clamp(0.0, std::f64::consts::PI), phi).expect("theta within [0, pi]")
    }
}

/// Roots of `a z^2 + b z + c = 0` in homogeneous form.
///
/// One root comes from `q = -(b + sgn * sqrt(b^2 - 4ac)) / 2` with the sign
/// aligned to `b`, giving `z1 = q / a` and `z2 = c / q`. With `a = 0` the
/// first root is the point at infinity.
pub fn homogeneous_roots(a: Complex64, b: Complex64, c: Complex64) -> Result<(Stereo, Stereo)> {
    if a.norm() == 0.0 && b.norm() == 0.0 && c.norm() == 0.0 {
        return Err(Error::AllCoefficientsZero);
    }
    let disc = (b * b - a * c * 4.0).sqrt();
    let sign = if (b.conj() * disc).re >= 0.0 { 1.0 } else { -1.0 };
    let q = -(b + disc * sign) / 2.0;
    if q.norm() == 0.0 {
        // b = 0 and a*c = 0: double root at zero or at infinity
        let root = if a.norm() > 0.0 { Stereo::ZERO } else { Stereo::INFINITY };
        return Ok((root, root));
    }
    let first = Stereo::new(q, a).expect("q is nonzero");
    let second = Stereo::new(c, q).expect("q is nonzero");
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn direction_round_trip() {
        for &(theta, phi) in &[(0.3, 1.0), (2.9, -2.5), (PI / 2.0, PI), (0.0, 0.0), (PI, 0.0)] {
            let dir = Direction::new(theta, phi).unwrap();
            let back = Stereo::from_direction(dir).to_direction();
            assert!(dir.angle_error(&back) < 1e-14, "{dir:?} -> {back:?}");
        }
        assert!(Stereo::from_direction(Direction::DOWN).is_infinite());
        assert_eq!(Stereo::from_direction(Direction::UP), Stereo::ZERO);
    }

    #[test]
    fn monic_roots() {
        let (z1, z2) = homogeneous_roots(c(1.0, 0.0), c(-3.0, 0.0), c(2.0, 0.0)).unwrap();
        let mut roots = [z1.value().unwrap().re, z2.value().unwrap().re];
        roots.sort_by(f64::total_cmp);
        assert!((roots[0] - 1.0).abs() < 1e-15 && (roots[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn linear_case_has_root_at_infinity() {
        let (z1, z2) = homogeneous_roots(c(0.0, 0.0), c(2.0, 0.0), c(-1.0, 1.0)).unwrap();
        assert!(z1.is_infinite());
        assert!((z2.value().unwrap() - c(0.5, -0.5)).norm() < 1e-15);
        assert!(z1.to_direction().theta() == PI);
    }

    #[test]
    fn degenerate_cases() {
        let (z1, z2) = homogeneous_roots(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(z1.is_infinite() && z2.is_infinite());
        let (z1, z2) = homogeneous_roots(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!((z1, z2), (Stereo::ZERO, Stereo::ZERO));
        assert_eq!(homogeneous_roots(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)), Err(Error::AllCoefficientsZero));
    }

    #[test]
    fn avoids_cancellation() {
        // roots 1e-9 and 1e9
        let (z1, z2) = homogeneous_roots(c(1.0, 0.0), c(-(1e9 + 1e-9), 0.0), c(1.0, 0.0)).unwrap();
        let (big, small) = (z1.value().unwrap().re, z2.value().unwrap().re);
        assert!(((big - 1e9) / 1e9).abs() < 1e-15);
        assert!(((small - 1e-9) / 1e-9).abs() < 1e-15);
    }
}
