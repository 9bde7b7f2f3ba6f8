//! 2×2 complex matrix representation `A ↦ A₀ 1 + Ax σx + Ay σy + Az σz`.
//!
//! Everything here is a second evaluation path for the quaternion algebra.
//! Matrix products are computed entrywise and never routed back through
//! [`BiQuaternion::qmul`], so agreement between the two is a real check.

use std::ops::Mul;

use crate::biquat::BiQuaternion;
use crate::error::Result;
use crate::lorentz::{boost_event, BoostRotor, Event};
use crate::vector::{CVec3, Cplx};
use crate::I;

const ZERO: Cplx = Cplx::new(0.0, 0.0);
const ONE: Cplx = Cplx::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2c {
    pub m00: Cplx,
    pub m01: Cplx,
    pub m10: Cplx,
    pub m11: Cplx,
}

impl Mat2c {
    pub const IDENTITY: Mat2c = Mat2c::new(ONE, ZERO, ZERO, ONE);
    pub const PAULI_X: Mat2c = Mat2c::new(ZERO, ONE, ONE, ZERO);
    pub const PAULI_Y: Mat2c = Mat2c::new(ZERO, Cplx::new(0.0, -1.0), Cplx::new(0.0, 1.0), ZERO);
    pub const PAULI_Z: Mat2c = Mat2c::new(ONE, ZERO, ZERO, Cplx::new(-1.0, 0.0));

    /// `[1, σx, σy, σz]`.
    pub const BASIS: [Mat2c; 4] = [Self::IDENTITY, Self::PAULI_X, Self::PAULI_Y, Self::PAULI_Z];

    pub const fn new(m00: Cplx, m01: Cplx, m10: Cplx, m11: Cplx) -> Self {
        Mat2c { m00, m01, m10, m11 }
    }

    pub fn entries(&self) -> [Cplx; 4] {
        [self.m00, self.m01, self.m10, self.m11]
    }

    pub fn det(&self) -> Cplx {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn scale(&self, k: Cplx) -> Mat2c {
        Mat2c::new(self.m00 * k, self.m01 * k, self.m10 * k, self.m11 * k)
    }

    /// `[[m11, −m01], [−m10, m00]]`, i.e. `det(M) M⁻¹`.
    pub fn adjugate(&self) -> Mat2c {
        Mat2c::new(self.m11, -self.m01, -self.m10, self.m00)
    }

    pub fn max_abs_diff(&self, other: &Mat2c) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for Mat2c {
    type Output = Mat2c;
    fn mul(self, b: Mat2c) -> Mat2c {
        let a = self;
        Mat2c::new(
            a.m00 * b.m00 + a.m01 * b.m10,
            a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10,
            a.m10 * b.m01 + a.m11 * b.m11,
        )
    }
}

/// `[[A₀ + Az, Ax − iAy], [Ax + iAy, A₀ − Az]]`.
pub fn to_matrix(a: &BiQuaternion) -> Mat2c {
    Mat2c::new(
        a.s + a.v.z,
        a.v.x - I * a.v.y,
        a.v.x + I * a.v.y,
        a.s - a.v.z,
    )
}

/// Inverse of [`to_matrix`]; every 2×2 complex matrix decomposes uniquely.
pub fn from_matrix(m: &Mat2c) -> BiQuaternion {
    let half = Cplx::new(0.5, 0.0);
    BiQuaternion::new(
        (m.m00 + m.m11) * half,
        CVec3::new(
            (m.m01 + m.m10) * half,
            I * (m.m01 - m.m10) * half,
            (m.m00 - m.m11) * half,
        ),
    )
}

pub fn det(m: &Mat2c) -> Cplx {
    m.det()
}

/// The imaginary cross-product part of the boosted spatial vector,
/// `−i g V×X / c`.
pub fn spin_term(r: &BoostRotor, e: &Event) -> Result<CVec3> {
    let te = boost_event(r, e)?;
    Ok(CVec3::from(te.x_prime.im()) * I)
}

/// [`spin_term`] evaluated through the matrix product `M(R) M(L)`.
pub fn spin_term_via_matrix(r: &BoostRotor, e: &Event) -> Result<CVec3> {
    // boost_event performs the c check; reuse it instead of duplicating.
    boost_event(r, e)?;
    let product = to_matrix(&r.quat) * to_matrix(&e.quat());
    let x_prime = from_matrix(&product).v;
    Ok(CVec3::from(x_prime.im()) * I)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::make_boost;
    use crate::vector::RVec3;

    #[test]
    fn basis_maps_to_pauli_matrices() {
        for (q, m) in BiQuaternion::BASIS.iter().zip(Mat2c::BASIS) {
            assert_eq!(to_matrix(q), m);
            assert_eq!(from_matrix(&m), *q);
        }
    }

    #[test]
    fn pauli_basis_relations() {
        let [id, sx, sy, sz] = Mat2c::BASIS;
        for s in [sx, sy, sz] {
            assert_eq!(s * s, id);
        }
        let zero = Mat2c::new(ZERO, ZERO, ZERO, ZERO);
        let add = |a: Mat2c, b: Mat2c| {
            Mat2c::new(a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11)
        };
        assert_eq!(add(sx * sy, sy * sx), zero);
        assert_eq!(add(sy * sz, sz * sy), zero);
        assert_eq!(add(sz * sx, sx * sz), zero);
        assert_eq!(sx * sy, sz.scale(I));
        assert_eq!(sy * sz, sx.scale(I));
        assert_eq!(sz * sx, sy.scale(I));
    }

    #[test]
    fn boost_rotor_matrix() {
        let r = BiQuaternion::from_real(1.25, RVec3::new(-0.75, 0.0, 0.0));
        let m = to_matrix(&r);
        let want = Mat2c::new(
            Cplx::new(1.25, 0.0),
            Cplx::new(-0.75, 0.0),
            Cplx::new(-0.75, 0.0),
            Cplx::new(1.25, 0.0),
        );
        assert_eq!(m, want);
        assert!((det(&m) - ONE).norm() < 1e-15);
        assert_eq!(det(&Mat2c::IDENTITY), ONE);
    }

    #[test]
    fn conjugate_is_adjugate() {
        let a = BiQuaternion::new(
            Cplx::new(0.3, -0.2),
            CVec3::new(
                Cplx::new(1.0, 0.5),
                Cplx::new(-0.4, 0.1),
                Cplx::new(0.2, 0.9),
            ),
        );
        assert_eq!(to_matrix(&a.conj()), to_matrix(&a).adjugate());
    }

    #[test]
    fn spin_term_examples() {
        let r = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
        let e = Event::new(0.0, RVec3::Y, 1.0).unwrap();
        let s = spin_term(&r, &e).unwrap();
        let want = CVec3::new(ZERO, ZERO, Cplx::new(0.0, -0.75));
        assert!(s.max_abs_diff(want) < 1e-15);
        assert!(spin_term_via_matrix(&r, &e).unwrap().max_abs_diff(s) < 1e-15);

        let e = Event::new(0.4, RVec3::new(2.0, 0.0, 0.0), 1.0).unwrap();
        assert_eq!(spin_term(&r, &e).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn spin_term_rejects_mismatched_c() {
        let r = make_boost(RVec3::ZERO, 1.0).unwrap();
        let e = Event::new(0.0, RVec3::Y, 3.0).unwrap();
        assert!(spin_term(&r, &e).is_err());
        assert!(spin_term_via_matrix(&r, &e).is_err());
    }
}
