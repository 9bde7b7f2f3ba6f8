//! Real and complex 3-vectors with bilinear dot and cross products.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// The scalar field of the algebra.
pub type Cplx = Complex64;

const ZERO: Cplx = Cplx::new(0.0, 0.0);

/// Real 3-vector. Used for velocities, positions and auxiliary directions.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl RVec3 {
    pub const ZERO: RVec3 = RVec3::new(0.0, 0.0, 0.0);
    pub const X: RVec3 = RVec3::new(1.0, 0.0, 0.0);
    pub const Y: RVec3 = RVec3::new(0.0, 1.0, 0.0);
    pub const Z: RVec3 = RVec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        RVec3 { x, y, z }
    }

    pub fn dot(self, other: RVec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: RVec3) -> RVec3 {
        RVec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Promote to a complex vector with zero imaginary parts.
    pub fn to_complex(self) -> CVec3 {
        CVec3::from(self)
    }
}

impl From<[f64; 3]> for RVec3 {
    fn from(a: [f64; 3]) -> Self {
        RVec3::new(a[0], a[1], a[2])
    }
}

impl Add for RVec3 {
    type Output = RVec3;
    fn add(self, o: RVec3) -> RVec3 {
        RVec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for RVec3 {
    type Output = RVec3;
    fn sub(self, o: RVec3) -> RVec3 {
        RVec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for RVec3 {
    type Output = RVec3;
    fn neg(self) -> RVec3 {
        RVec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for RVec3 {
    type Output = RVec3;
    fn mul(self, k: f64) -> RVec3 {
        RVec3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Mul<RVec3> for f64 {
    type Output = RVec3;
    fn mul(self, v: RVec3) -> RVec3 {
        v * self
    }
}

impl Div<f64> for RVec3 {
    type Output = RVec3;
    fn div(self, k: f64) -> RVec3 {
        RVec3::new(self.x / k, self.y / k, self.z / k)
    }
}

/// Complex 3-vector: the Cartesian part of a [`BiQuaternion`](crate::BiQuaternion).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CVec3 {
    pub x: Cplx,
    pub y: Cplx,
    pub z: Cplx,
}

impl CVec3 {
    pub const ZERO: CVec3 = CVec3::new(ZERO, ZERO, ZERO);

    pub const fn new(x: Cplx, y: Cplx, z: Cplx) -> Self {
        CVec3 { x, y, z }
    }

    pub const fn real(x: f64, y: f64, z: f64) -> Self {
        CVec3::new(Cplx::new(x, 0.0), Cplx::new(y, 0.0), Cplx::new(z, 0.0))
    }

    pub fn components(self) -> [Cplx; 3] {
        [self.x, self.y, self.z]
    }

    /// Unconjugated bilinear dot product `Σ uᵢ vᵢ`.
    pub fn dot_u(self, other: CVec3) -> Cplx {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: CVec3) -> CVec3 {
        CVec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    /// Unconjugated self-dot. Complex in general; real for sums of real inputs.
    pub fn mag_sq(self) -> Cplx {
        self.dot_u(self)
    }

    pub fn re(self) -> RVec3 {
        RVec3::new(self.x.re, self.y.re, self.z.re)
    }

    pub fn im(self) -> RVec3 {
        RVec3::new(self.x.im, self.y.im, self.z.im)
    }

    pub fn is_finite(self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(self, other: CVec3) -> f64 {
        let d = self - other;
        d.components().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest componentwise modulus.
    pub fn max_abs(self) -> f64 {
        self.components()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Hermitian length `sqrt(Σ|cᵢ|²)`; only used for error measurement.
    pub fn euclidean_norm(self) -> f64 {
        self.components()
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl From<RVec3> for CVec3 {
    fn from(v: RVec3) -> Self {
        CVec3::real(v.x, v.y, v.z)
    }
}

impl Add for CVec3 {
    type Output = CVec3;
    fn add(self, o: CVec3) -> CVec3 {
        CVec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for CVec3 {
    type Output = CVec3;
    fn sub(self, o: CVec3) -> CVec3 {
        CVec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for CVec3 {
    type Output = CVec3;
    fn neg(self) -> CVec3 {
        CVec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<Cplx> for CVec3 {
    type Output = CVec3;
    fn mul(self, k: Cplx) -> CVec3 {
        CVec3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Mul<CVec3> for Cplx {
    type Output = CVec3;
    fn mul(self, v: CVec3) -> CVec3 {
        v * self
    }
}

impl Mul<f64> for CVec3 {
    type Output = CVec3;
    fn mul(self, k: f64) -> CVec3 {
        CVec3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Div<Cplx> for CVec3 {
    type Output = CVec3;
    fn div(self, k: Cplx) -> CVec3 {
        CVec3::new(self.x / k, self.y / k, self.z / k)
    }
}

impl Div<f64> for CVec3 {
    type Output = CVec3;
    fn div(self, k: f64) -> CVec3 {
        CVec3::new(self.x / k, self.y / k, self.z / k)
    }
}

/// Maps `-0.0` to `0.0` so that printed output has no signed zeros.
pub fn unsign_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Formats a complex number as `re+imi`, e.g. `0+1.25i`, `-0.75-0.5i`.
pub fn fmt_cplx(z: Cplx) -> String {
    let (re, im) = (unsign_zero(z.re), unsign_zero(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", re, sign, im.abs())
}

/// [`fmt_cplx`] in scientific notation with `digits` decimals.
pub fn fmt_cplx_sci(z: Cplx, digits: usize) -> String {
    let (re, im) = (unsign_zero(z.re), unsign_zero(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{:.*e}{}{:.*e}i", digits, re, sign, digits, im.abs())
}

impl fmt::Display for CVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            fmt_cplx(self.x),
            fmt_cplx(self.y),
            fmt_cplx(self.z)
        )
    }
}

impl fmt::Display for RVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            unsign_zero(self.x),
            unsign_zero(self.y),
            unsign_zero(self.z)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::I;

    #[test]
    fn dot_is_bilinear_not_hermitian() {
        let e = CVec3::real(1.0, 0.0, 0.0);
        assert_eq!(e.dot_u(e), Cplx::new(1.0, 0.0));
        let iz = CVec3::new(ZERO, ZERO, I);
        assert_eq!(iz.dot_u(iz), Cplx::new(-1.0, 0.0));
    }

    #[test]
    fn cross_is_right_handed() {
        let a = CVec3::real(0.5, 0.0, 0.0);
        let b = CVec3::real(0.0, 0.5, 0.0);
        assert_eq!(a.cross(b), CVec3::real(0.0, 0.0, 0.25));
        assert_eq!(RVec3::X.cross(RVec3::Y), RVec3::Z);
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_cplx(Cplx::new(0.0, 1.25)), "0+1.25i");
        assert_eq!(fmt_cplx(Cplx::new(-0.75, -0.5)), "-0.75-0.5i");
        assert_eq!(fmt_cplx(Cplx::new(-0.0, -0.0)), "0+0i");
        assert_eq!(fmt_cplx_sci(Cplx::new(0.01, -1.0), 2), "1.00e-2-1.00e0i");
    }
}
