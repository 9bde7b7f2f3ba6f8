//! Reflection-symmetric sum of vectors and velocity composition.
//!
//! `A +̂ B = (A + B + iA×B) / (1 + A·B)` is the vector part of
//! `(1 + A)(1 + B)` divided by its scalar part, so it inherits
//! associativity from the quaternion product. It is not commutative: the
//! cross term flips sign when the arguments are swapped.

use crate::biquat::BiQuaternion;
use crate::error::{Error, Result};
use crate::lorentz::check_c;
use crate::vector::{CVec3, Cplx, RVec3};
use crate::{EPS_DEG, I};

/// Quotient and denominator of a reflection-symmetric sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReflSumResult {
    pub value: CVec3,
    /// `1 + a·b`.
    pub denom: Cplx,
}

impl ReflSumResult {
    /// `value · denom`, which should reproduce `a + b + i a×b`.
    pub fn numerator(&self) -> CVec3 {
        self.value * self.denom
    }
}

/// Which of the two reciprocals `(G ± iA×G)/(A·G)` to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `(a + b + i a×b) / (1 + a·b)`.
pub fn refl_sum(a: CVec3, b: CVec3) -> Result<ReflSumResult> {
    let denom = Cplx::new(1.0, 0.0) + a.dot_u(b);
    if denom.norm() <= EPS_DEG {
        return Err(Error::degenerate("refl_sum (1 + a·b)", denom, EPS_DEG));
    }
    let numerator = a + b + a.cross(b) * I;
    Ok(ReflSumResult {
        value: numerator / denom,
        denom,
    })
}

/// Reciprocal of `a` along the auxiliary direction `g`: `(g ± i a×g) / (a·g)`.
///
/// The result `a'` satisfies `a'·a = 1`, because `a×g` is orthogonal to `a`.
pub fn reciprocal(a: RVec3, g: RVec3, sign: Sign) -> Result<CVec3> {
    let ag = a.dot(g);
    if ag.abs() <= EPS_DEG {
        return Err(Error::degenerate("reciprocal (a·g)", ag, EPS_DEG));
    }
    let g_c = CVec3::from(g);
    let cross = CVec3::from(a.cross(g));
    Ok((g_c + cross * (I * sign.factor())) / ag)
}

fn check_speed(name: &'static str, w: RVec3, c: f64, strict: bool) -> Result<()> {
    if !w.is_finite() {
        return Err(Error::NonFinite(name));
    }
    let ratio = w.norm_sq() / (c * c);
    // Unit vectors built by normalisation may land a few ulps above c.
    let over = if strict {
        ratio >= 1.0
    } else {
        ratio > 1.0 + 1e-12
    };
    if over {
        return Err(Error::SuperluminalInput {
            name,
            speed: w.norm(),
            c,
        });
    }
    Ok(())
}

/// `W = (−v) +̂ u` in dimensional form:
/// `(−v + u − (i/c) v×u) / (1 − v·u/c²)`.
///
/// Requires `|v| < c` and `|u| <= c`.
pub fn compose_velocities(v: RVec3, u: RVec3, c: f64) -> Result<CVec3> {
    check_c(c)?;
    check_speed("v", v, c, true)?;
    check_speed("u", u, c, false)?;
    let denom = 1.0 - v.dot(u) / (c * c);
    if denom.abs() <= EPS_DEG {
        return Err(Error::degenerate(
            "compose_velocities (1 − v·u/c²)",
            denom,
            EPS_DEG,
        ));
    }
    let real = u - v;
    let imag = v.cross(u) * (-1.0 / c);
    let w = CVec3::from(real) + CVec3::from(imag) * I;
    Ok(w / denom)
}

/// The normalised boost product `R(v) U = prefactor · W` with `U = c + u`
/// and `W = c + w`.
///
/// `prefactor = g (1 − v·u/c²)` and `w` equals [`compose_velocities`].
pub fn normalized_boost_product(v: RVec3, u: RVec3, c: f64) -> Result<(Cplx, BiQuaternion)> {
    let rotor = crate::lorentz::make_boost(v, c)?;
    if !u.is_finite() {
        return Err(Error::NonFinite("u"));
    }
    let product = rotor.quat * BiQuaternion::from_real(c, u);
    let prefactor = product.s / c;
    if prefactor.norm() <= EPS_DEG {
        return Err(Error::degenerate(
            "normalized_boost_product (scalar part)",
            prefactor,
            EPS_DEG,
        ));
    }
    let w = BiQuaternion::new(Cplx::new(c, 0.0), product.v / prefactor);
    Ok((prefactor, w))
}

/// Unconjugated self-dot `w·w`.
pub fn mag_sq(w: CVec3) -> Cplx {
    w.mag_sq()
}

/// `a +̂ (scale · g_dir)`. Tends to `reciprocal(a, g_dir, Plus)` with error
/// `O(1/scale)` as `scale` grows.
pub fn refl_sum_limit(a: RVec3, g_dir: RVec3, scale: f64) -> Result<CVec3> {
    let ag = a.dot(g_dir);
    if ag.abs() <= EPS_DEG {
        return Err(Error::degenerate("refl_sum_limit (a·g)", ag, EPS_DEG));
    }
    Ok(refl_sum(a.into(), (g_dir * scale).into())?.value)
}

/// Projective form of the sum: vector part over scalar part of `(1 + a)(1 + b)`.
pub fn refl_sum_projective(a: CVec3, b: CVec3) -> Result<CVec3> {
    let one = Cplx::new(1.0, 0.0);
    let p = BiQuaternion::new(one, a) * BiQuaternion::new(one, b);
    if p.s.norm() <= EPS_DEG {
        return Err(Error::degenerate(
            "refl_sum_projective (scalar part)",
            p.s,
            EPS_DEG,
        ));
    }
    Ok(p.v / p.s)
}
