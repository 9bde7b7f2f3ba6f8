//! Quaternionic boosts of events and the real Lorentz boost they are
//! compared against.
//!
//! An event `L = ct + X` is boosted by left multiplication with the unit
//! rotor `R = g − g σ·V/c`. The result carries an imaginary spatial term
//! `−i g V×X / c` that the real boost does not have; both preserve the
//! interval `(ct)² − X·X`.

use crate::biquat::BiQuaternion;
use crate::error::{Error, Result};
use crate::vector::{CVec3, Cplx, RVec3};
use crate::{EPS_DEG, I};

pub(crate) fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(Error::NonpositiveC(c))
    }
}

/// `1/√(1 − (v/c)²)` for `|v| < c`.
pub fn lorentz_factor(v: RVec3, c: f64) -> Result<f64> {
    check_c(c)?;
    if !v.is_finite() {
        return Err(Error::NonFinite("boost velocity"));
    }
    let beta_sq = v.norm_sq() / (c * c);
    if beta_sq >= 1.0 {
        return Err(Error::SuperluminalInput {
            name: "v",
            speed: v.norm(),
            c,
        });
    }
    Ok(1.0 / (1.0 - beta_sq).sqrt())
}

/// A spacetime event `(t, x)` with its speed constant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    pub t: f64,
    pub x: RVec3,
    pub c: f64,
}

impl Event {
    pub fn new(t: f64, x: RVec3, c: f64) -> Result<Self> {
        check_c(c)?;
        if !t.is_finite() || !x.is_finite() {
            return Err(Error::NonFinite("event"));
        }
        Ok(Event { t, x, c })
    }

    /// `L = ct + X`.
    pub fn quat(&self) -> BiQuaternion {
        BiQuaternion::from_real(self.c * self.t, self.x)
    }

    /// `(ct)² − X·X`.
    pub fn interval(&self) -> f64 {
        let ct = self.c * self.t;
        ct * ct - self.x.norm_sq()
    }

    /// `(ct)² + X·X`, the scale against which interval errors are measured.
    pub fn euclidean_scale(&self) -> f64 {
        let ct = self.c * self.t;
        ct * ct + self.x.norm_sq()
    }
}

pub fn event_quat(e: &Event) -> BiQuaternion {
    e.quat()
}

pub fn interval(e: &Event) -> f64 {
    e.interval()
}

/// Unit-norm boost rotor `R = g − g σ·V/c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostRotor {
    pub g: f64,
    pub v: RVec3,
    pub c: f64,
    pub quat: BiQuaternion,
}

/// Builds the rotor for boost velocity `v`; `|v| < c` strictly.
pub fn make_boost(v: RVec3, c: f64) -> Result<BoostRotor> {
    let g = lorentz_factor(v, c)?;
    Ok(BoostRotor {
        g,
        v,
        c,
        quat: BiQuaternion::from_real(g, v * (-g / c)),
    })
}

impl BoostRotor {
    pub fn identity(c: f64) -> Result<Self> {
        make_boost(RVec3::ZERO, c)
    }

    fn check_event(&self, e: &Event) -> Result<()> {
        if self.c != e.c {
            return Err(Error::MismatchedC {
                rotor: self.c,
                event: e.c,
            });
        }
        Ok(())
    }
}

/// `R L = ct′ + X′` with complex `X′`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformedEvent {
    pub t_prime: f64,
    pub x_prime: CVec3,
}

impl TransformedEvent {
    /// `(ct′)² − X′·X′`, complex in form; the imaginary part vanishes for
    /// boosts of real events.
    pub fn interval(&self, c: f64) -> Cplx {
        let ct = c * self.t_prime;
        Cplx::new(ct * ct, 0.0) - self.x_prime.mag_sq()
    }
}

pub fn interval_of(te: &TransformedEvent, c: f64) -> Cplx {
    te.interval(c)
}

/// Quaternionic boost `L′ = R L`.
///
/// `t′ = g t − g X·V/c²` and `X′ = g(X − tV) − i g V×X / c`.
pub fn boost_event(r: &BoostRotor, e: &Event) -> Result<TransformedEvent> {
    r.check_event(e)?;
    let l = r.quat * e.quat();
    Ok(TransformedEvent {
        t_prime: l.s.re / e.c,
        x_prime: l.v,
    })
}

/// The standard real Lorentz boost:
/// `t′ = g(t − X·V/c²)`, `X′ = X + [(g − 1)(X·V)/V² − g t] V`.
pub fn le_boost(r: &BoostRotor, e: &Event) -> Result<(f64, RVec3)> {
    r.check_event(e)?;
    let v_sq = r.v.norm_sq();
    if v_sq == 0.0 {
        return Ok((e.t, e.x));
    }
    let xv = e.x.dot(r.v);
    let t_prime = r.g * (e.t - xv / (e.c * e.c));
    let x_prime = e.x + r.v * ((r.g - 1.0) * xv / v_sq - r.g * e.t);
    Ok((t_prime, x_prime))
}

/// Relativistic velocity addition `v ⊕ u`, the velocity `u` seen from a
/// frame moving at `−v`:
///
/// ```text
/// v ⊕ u = (v + u∥ + u⊥/γ(v)) / (1 + v·u/c²)
/// ```
///
/// with `u∥`, `u⊥` taken relative to `v`.
pub fn einstein_add(v: RVec3, u: RVec3, c: f64) -> Result<RVec3> {
    let gamma = lorentz_factor(v, c)?;
    if !u.is_finite() {
        return Err(Error::NonFinite("u"));
    }
    let denom = 1.0 + v.dot(u) / (c * c);
    if denom.abs() <= EPS_DEG {
        return Err(Error::degenerate(
            "einstein_add (1 + v·u/c²)",
            denom,
            EPS_DEG,
        ));
    }
    let v_sq = v.norm_sq();
    if v_sq == 0.0 {
        return Ok(u);
    }
    let u_par = v * (v.dot(u) / v_sq);
    let u_perp = u - u_par;
    Ok((v + u_par + u_perp / gamma) / denom)
}

fn non_collinear(x: RVec3, v: RVec3) -> Result<RVec3> {
    let vx = v.cross(x);
    let scale = v.norm() * x.norm();
    if scale == 0.0 || !scale.is_finite() || vx.norm() <= EPS_DEG * scale {
        return Err(Error::CollinearInput);
    }
    Ok(vx)
}

/// `m = {(X·V)V/V² − X} / |…|`; lies in the X–V plane, perpendicular to V.
pub fn m_vector(x: RVec3, v: RVec3) -> Result<RVec3> {
    non_collinear(x, v)?;
    let w = v * (x.dot(v) / v.norm_sq()) - x;
    Ok(w / w.norm())
}

/// `n = V×X / |V×X|`.
pub fn n_vector(x: RVec3, v: RVec3) -> Result<RVec3> {
    let vx = non_collinear(x, v)?;
    Ok(vx / vx.norm())
}

/// The product whose `c → 0` rotational limit is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    /// The quaternion product `R L`; limit axis is `n`.
    Reflection,
    /// The real Lorentz boost; limit axis is `m`.
    LorentzEinstein,
}

impl LimitKind {
    pub const ALL: [LimitKind; 2] = [LimitKind::Reflection, LimitKind::LorentzEinstein];

    pub fn name(self) -> &'static str {
        match self {
            LimitKind::Reflection => "reflection",
            LimitKind::LorentzEinstein => "lorentz_einstein",
        }
    }
}

/// `−c (R ∘ L) / (g |X||V|)` at a finite `c`, alongside the limit
/// `cos θ + i axis sin θ` it approaches as `c → 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationalLimitValue {
    pub scalar: Cplx,
    pub vector: CVec3,
    pub cos_theta: f64,
    pub sin_theta: f64,
    pub axis: CVec3,
}

impl RotationalLimitValue {
    pub fn value(&self) -> BiQuaternion {
        BiQuaternion::new(self.scalar, self.vector)
    }

    pub fn target(&self) -> BiQuaternion {
        BiQuaternion::new(
            Cplx::new(self.cos_theta, 0.0),
            self.axis * (I * self.sin_theta),
        )
    }

    /// Euclidean distance between value and target over all four complex components.
    pub fn deviation(&self) -> f64 {
        (self.value() - self.target()).euclidean_sq().sqrt()
    }
}

/// `1/g` for possibly superluminal `v`. When `|v| > c` the branch
/// `1/g = +i √((v/c)² − 1)` is taken, so that `1/g → i|V|/c` as `c → 0`.
pub fn inverse_lorentz_factor_complex(v: RVec3, c: f64) -> Cplx {
    let beta_sq = v.norm_sq() / (c * c);
    if beta_sq > 1.0 {
        Cplx::new(0.0, (beta_sq - 1.0).sqrt())
    } else {
        Cplx::new((1.0 - beta_sq).sqrt(), 0.0)
    }
}

/// Evaluates `−c (R ∘ L) / (g |X||V|)` with the complex Lorentz factor.
///
/// `|v| > c` is required so that `g` is imaginary.
pub fn rotational_limit(
    kind: LimitKind,
    x: RVec3,
    v: RVec3,
    t: f64,
    c: f64,
) -> Result<RotationalLimitValue> {
    check_c(c)?;
    if !x.is_finite() || !v.is_finite() || !t.is_finite() {
        return Err(Error::NonFinite("rotational limit input"));
    }
    let vx = non_collinear(x, v)?;
    if v.norm_sq() <= c * c {
        return Err(Error::SubluminalLimit { speed: v.norm(), c });
    }
    let g = Cplx::new(1.0, 0.0) / inverse_lorentz_factor_complex(v, c);
    let (xn, vn) = (x.norm(), v.norm());
    let cos_theta = (x.dot(v) / (xn * vn)).clamp(-1.0, 1.0);
    let sin_theta = vx.norm() / (xn * vn);

    let (raw, axis) = match kind {
        LimitKind::Reflection => {
            let rotor = BiQuaternion::new(g, CVec3::from(v) * (-g / c));
            let event = BiQuaternion::from_real(c * t, x);
            (rotor * event, n_vector(x, v)?)
        }
        LimitKind::LorentzEinstein => {
            let xv = x.dot(v);
            let scalar = g * (c * (t - xv / (c * c)));
            let coef = (g - 1.0) * (xv / v.norm_sq()) - g * t;
            let vector = CVec3::from(x) + CVec3::from(v) * coef;
            (BiQuaternion::new(scalar, vector), m_vector(x, v)?)
        }
    };
    let k = Cplx::new(-c, 0.0) / (g * (xn * vn));
    let value = raw.scale(k);
    Ok(RotationalLimitValue {
        scalar: value.s,
        vector: value.v,
        cos_theta,
        sin_theta,
        axis: axis.into(),
    })
}

/// Deviation from the limit at each `c`, and the ratio between successive
/// deviations. For evenly spaced decades the ratio is the empirical
/// convergence factor (≈ 10 for first-order convergence).
pub fn limit_convergence(
    kind: LimitKind,
    x: RVec3,
    v: RVec3,
    t: f64,
    cs: &[f64],
) -> Result<(Vec<f64>, Vec<f64>)> {
    let devs = cs
        .iter()
        .map(|&c| rotational_limit(kind, x, v, t, c).map(|r| r.deviation()))
        .collect::<Result<Vec<_>>>()?;
    let ratios = devs.windows(2).map(|w| w[0] / w[1]).collect();
    Ok((devs, ratios))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(t: f64, x: [f64; 3]) -> Event {
        Event::new(t, x.into(), 1.0).unwrap()
    }

    #[test]
    fn event_quaternion() {
        assert_eq!(ev(1.0, [0.0; 3]).quat(), BiQuaternion::ONE);
        assert_eq!(ev(0.0, [0.0, 1.0, 0.0]).quat(), BiQuaternion::SIGMA_Y);
        let e = Event::new(2.0, RVec3::new(0.5, -1.0, 0.25), 3.0).unwrap();
        let n = e.quat().square_norm();
        assert!((n.re - e.interval()).abs() < 1e-13);
        assert_eq!(n.im, 0.0);
    }

    #[test]
    fn event_rejects_bad_c() {
        assert!(matches!(
            Event::new(0.0, RVec3::ZERO, 0.0),
            Err(Error::NonpositiveC(_))
        ));
        assert!(Event::new(0.0, RVec3::ZERO, -1.0).is_err());
        assert!(Event::new(f64::NAN, RVec3::ZERO, 1.0).is_err());
    }

    #[test]
    fn rotor_construction() {
        let r = make_boost(RVec3::ZERO, 1.0).unwrap();
        assert_eq!(r.g, 1.0);
        assert_eq!(r.quat, BiQuaternion::ONE);

        let r = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
        assert!((r.g - 1.25).abs() < 1e-15);
        assert!(r.quat.approx_eq(
            &BiQuaternion::from_real(1.25, RVec3::new(-0.75, 0.0, 0.0)),
            1e-15
        ));
        assert!((r.quat.square_norm() - Cplx::new(1.0, 0.0)).norm() < 1e-12);

        let c = 299_792_458.0;
        let r = make_boost(RVec3::new(0.6 * c, 0.0, 0.0), c).unwrap();
        assert!((r.quat.square_norm() - Cplx::new(1.0, 0.0)).norm() < 1e-12);

        assert!(matches!(
            make_boost(RVec3::new(1.0, 0.0, 0.0), 1.0),
            Err(Error::SuperluminalInput { .. })
        ));
    }

    #[test]
    fn boost_at_rest_event() {
        let r = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
        let te = boost_event(&r, &ev(1.0, [0.0; 3])).unwrap();
        assert!((te.t_prime - 1.25).abs() < 1e-15);
        assert!(te.x_prime.max_abs_diff(CVec3::real(-0.75, 0.0, 0.0)) < 1e-15);
        assert!((te.interval(1.0) - Cplx::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn boost_perpendicular_event_has_imaginary_term() {
        let r = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
        let e = ev(0.0, [0.0, 1.0, 0.0]);
        let te = boost_event(&r, &e).unwrap();
        assert_eq!(te.t_prime, 0.0);
        let want = CVec3::new(
            Cplx::new(0.0, 0.0),
            Cplx::new(1.25, 0.0),
            Cplx::new(0.0, -0.75),
        );
        assert!(te.x_prime.max_abs_diff(want) < 1e-15);
        assert!((te.x_prime.mag_sq() - Cplx::new(1.0, 0.0)).norm() < 1e-12);
        assert!((interval_of(&te, 1.0) - Cplx::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(interval(&e), -1.0);
    }

    #[test]
    fn boost_matches_closed_forms() {
        let c = 2.0;
        let v = RVec3::new(0.7, -0.9, 0.4);
        let e = Event::new(0.8, RVec3::new(-1.5, 0.3, 2.2), c).unwrap();
        let r = make_boost(v, c).unwrap();
        let te = boost_event(&r, &e).unwrap();
        let g = r.g;
        let t_want = g * e.t - g * e.x.dot(v) / (c * c);
        assert!((te.t_prime - t_want).abs() < 1e-12);
        let x_want = CVec3::from((e.x - v * e.t) * g) + CVec3::from(v.cross(e.x) * (-g / c)) * I;
        assert!(te.x_prime.max_abs_diff(x_want) < 1e-12);
    }

    #[test]
    fn identity_boost() {
        let r = BoostRotor::identity(1.0).unwrap();
        let e = ev(0.3, [1.0, -2.0, 0.5]);
        let te = boost_event(&r, &e).unwrap();
        assert_eq!(te.t_prime, e.t);
        assert_eq!(te.x_prime, CVec3::from(e.x));
        assert_eq!(le_boost(&r, &e).unwrap(), (e.t, e.x));
    }

    #[test]
    fn mismatched_c() {
        let r = make_boost(RVec3::ZERO, 1.0).unwrap();
        let e = Event::new(0.0, RVec3::ZERO, 2.0).unwrap();
        assert!(matches!(
            boost_event(&r, &e),
            Err(Error::MismatchedC { .. })
        ));
        assert!(matches!(le_boost(&r, &e), Err(Error::MismatchedC { .. })));
    }

    #[test]
    fn le_boost_examples() {
        let r = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
        let (t, x) = le_boost(&r, &ev(0.0, [0.0, 1.0, 0.0])).unwrap();
        assert_eq!(t, 0.0);
        assert_eq!(x, RVec3::new(0.0, 1.0, 0.0));
        let (t, x) = le_boost(&r, &ev(1.0, [0.0; 3])).unwrap();
        assert!((t - 1.25).abs() < 1e-15);
        assert!((x - RVec3::new(-0.75, 0.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn einstein_examples() {
        let w = einstein_add(RVec3::new(0.5, 0.0, 0.0), RVec3::new(0.5, 0.0, 0.0), 1.0).unwrap();
        assert!((w - RVec3::new(0.8, 0.0, 0.0)).norm() <= 1e-15);
        let u = RVec3::new(0.1, 0.2, 0.3);
        assert_eq!(einstein_add(RVec3::ZERO, u, 1.0).unwrap(), u);
        assert!(einstein_add(RVec3::new(1.0, 0.0, 0.0), u, 1.0).is_err());
    }

    #[test]
    fn einstein_perpendicular() {
        // u ⊥ v: (v + u/γ) / 1
        let v = RVec3::new(0.6, 0.0, 0.0);
        let u = RVec3::new(0.0, 0.5, 0.0);
        let w = einstein_add(v, u, 1.0).unwrap();
        assert!((w - RVec3::new(0.6, 0.4, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn m_and_n_examples() {
        let x = RVec3::X;
        let v = RVec3::Y;
        assert_eq!(m_vector(x, v).unwrap(), RVec3::new(-1.0, 0.0, 0.0));
        assert_eq!(n_vector(x, v).unwrap(), RVec3::new(0.0, 0.0, -1.0));
        assert!(matches!(m_vector(x, x * 2.0), Err(Error::CollinearInput)));
        assert!(matches!(
            n_vector(RVec3::ZERO, v),
            Err(Error::CollinearInput)
        ));
    }

    #[test]
    fn reflection_limit_at_small_c() {
        let r = rotational_limit(LimitKind::Reflection, RVec3::X, RVec3::Y, 1.0, 1e-3).unwrap();
        assert!(r.cos_theta.abs() < 1e-15);
        assert!((r.sin_theta - 1.0).abs() < 1e-15);
        assert_eq!(r.axis, CVec3::real(0.0, 0.0, -1.0));
        assert!(r.scalar.norm() < 2e-3);
        let target = CVec3::new(
            Cplx::new(0.0, 0.0),
            Cplx::new(0.0, 0.0),
            Cplx::new(0.0, -1.0),
        );
        assert!(r.vector.max_abs_diff(target) < 2e-3);
    }

    #[test]
    fn le_limit_axis_is_m() {
        let r =
            rotational_limit(LimitKind::LorentzEinstein, RVec3::X, RVec3::Y, 1.0, 1e-4).unwrap();
        assert_eq!(r.axis, CVec3::real(-1.0, 0.0, 0.0));
        let dir = r.vector.im();
        assert!((dir / dir.norm() - RVec3::new(-1.0, 0.0, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn limit_converges_first_order() {
        for kind in LimitKind::ALL {
            let (_, ratios) =
                limit_convergence(kind, RVec3::X, RVec3::Y, 1.0, &[1e-1, 1e-2, 1e-3]).unwrap();
            for r in ratios {
                assert!((8.0..=12.0).contains(&r), "{kind:?}: {r}");
            }
        }
    }

    #[test]
    fn limit_rejections() {
        assert!(matches!(
            rotational_limit(LimitKind::Reflection, RVec3::X, RVec3::X, 1.0, 1e-3),
            Err(Error::CollinearInput)
        ));
        assert!(matches!(
            rotational_limit(LimitKind::Reflection, RVec3::X, RVec3::Y, 1.0, 0.0),
            Err(Error::NonpositiveC(_))
        ));
        assert!(matches!(
            rotational_limit(LimitKind::Reflection, RVec3::X, RVec3::Y, 1.0, 2.0),
            Err(Error::SubluminalLimit { .. })
        ));
    }

    #[test]
    fn complex_factor_branch() {
        let inv = inverse_lorentz_factor_complex(RVec3::new(2.0, 0.0, 0.0), 1e-3);
        assert_eq!(inv.re, 0.0);
        assert!(inv.im > 0.0);
        assert!((inv.im * 1e-3 - 2.0).abs() < 1e-6);
    }
}
