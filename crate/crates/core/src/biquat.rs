//! Complexified Pauli quaternions `A = σ₀A₀ + σ·A`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::vector::{fmt_cplx, CVec3, Cplx, RVec3};
use crate::{EPS_NULL, I};

const ZERO: Cplx = Cplx::new(0.0, 0.0);
const ONE: Cplx = Cplx::new(1.0, 0.0);

/// Complex scalar part plus complex vector part.
///
/// Multiplication follows
///
/// ```text
/// (A₀ + A)(B₀ + B) = (A₀B₀ + A·B) + (A₀B + B₀A + i A×B)
/// ```
///
/// which is associative but not commutative. `σ₀ = 1` is central.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BiQuaternion {
    pub s: Cplx,
    pub v: CVec3,
}

impl BiQuaternion {
    pub const ZERO: BiQuaternion = BiQuaternion::new(ZERO, CVec3::ZERO);
    pub const ONE: BiQuaternion = BiQuaternion::new(ONE, CVec3::ZERO);
    pub const SIGMA_X: BiQuaternion = BiQuaternion::new(ZERO, CVec3::new(ONE, ZERO, ZERO));
    pub const SIGMA_Y: BiQuaternion = BiQuaternion::new(ZERO, CVec3::new(ZERO, ONE, ZERO));
    pub const SIGMA_Z: BiQuaternion = BiQuaternion::new(ZERO, CVec3::new(ZERO, ZERO, ONE));

    /// `[σ₀, σx, σy, σz]`.
    pub const BASIS: [BiQuaternion; 4] = [Self::ONE, Self::SIGMA_X, Self::SIGMA_Y, Self::SIGMA_Z];

    pub const fn new(s: Cplx, v: CVec3) -> Self {
        BiQuaternion { s, v }
    }

    /// Rejects NaN or infinite components.
    pub fn try_new(s: Cplx, v: CVec3) -> Result<Self> {
        let q = BiQuaternion { s, v };
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite("biquaternion components"))
        }
    }

    /// Real scalar plus real vector.
    pub fn from_real(s: f64, v: RVec3) -> Self {
        BiQuaternion::new(Cplx::new(s, 0.0), v.into())
    }

    pub fn scalar(s: Cplx) -> Self {
        BiQuaternion::new(s, CVec3::ZERO)
    }

    pub fn vector(v: CVec3) -> Self {
        BiQuaternion::new(ZERO, v)
    }

    /// `[s, v.x, v.y, v.z]`.
    pub fn components(&self) -> [Cplx; 4] {
        [self.s, self.v.x, self.v.y, self.v.z]
    }

    pub fn is_finite(&self) -> bool {
        self.s.is_finite() && self.v.is_finite()
    }

    /// The product rule. This is the only place `β = i` enters.
    pub fn qmul(&self, b: &BiQuaternion) -> BiQuaternion {
        let a = self;
        BiQuaternion {
            s: a.s * b.s + a.v.dot_u(b.v),
            v: b.v * a.s + a.v * b.s + a.v.cross(b.v) * I,
        }
    }

    /// Multiplies every component by `k`.
    pub fn scale(&self, k: Cplx) -> BiQuaternion {
        BiQuaternion::new(self.s * k, self.v * k)
    }

    /// Quaternionic conjugate `A₀ − A`. Components are not complex-conjugated.
    pub fn conj(&self) -> BiQuaternion {
        BiQuaternion::new(self.s, -self.v)
    }

    /// `A A* = A₀² − A·A`.
    pub fn square_norm(&self) -> Cplx {
        self.s * self.s - self.v.mag_sq()
    }

    /// `A* / (A A*)`, or [`Error::NullQuaternion`] when `|A A*| <= EPS_NULL`.
    pub fn inverse(&self) -> Result<BiQuaternion> {
        let n = self.square_norm();
        if n.norm() <= EPS_NULL {
            return Err(Error::NullQuaternion { norm: n.norm() });
        }
        let conj = self.conj();
        Ok(BiQuaternion::new(conj.s / n, conj.v / n))
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &BiQuaternion) -> f64 {
        (*self - *other)
            .components()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Componentwise absolute comparison.
    pub fn approx_eq(&self, other: &BiQuaternion, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// `Σ |componentᵢ|²`; a scale for relative error measurement.
    pub fn euclidean_sq(&self) -> f64 {
        self.components().iter().map(|c| c.norm_sqr()).sum()
    }
}

impl Mul for BiQuaternion {
    type Output = BiQuaternion;
    fn mul(self, rhs: BiQuaternion) -> BiQuaternion {
        self.qmul(&rhs)
    }
}

impl Add for BiQuaternion {
    type Output = BiQuaternion;
    fn add(self, rhs: BiQuaternion) -> BiQuaternion {
        BiQuaternion::new(self.s + rhs.s, self.v + rhs.v)
    }
}

impl Sub for BiQuaternion {
    type Output = BiQuaternion;
    fn sub(self, rhs: BiQuaternion) -> BiQuaternion {
        BiQuaternion::new(self.s - rhs.s, self.v - rhs.v)
    }
}

impl Neg for BiQuaternion {
    type Output = BiQuaternion;
    fn neg(self) -> BiQuaternion {
        BiQuaternion::new(-self.s, -self.v)
    }
}

impl fmt::Display for BiQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + σ·{}", fmt_cplx(self.s), self.v)
    }
}
