//! Seeded property campaigns.
//!
//! Every property draws its inputs for trial `i` from a ChaCha stream keyed
//! by `seed + i` and the property's own stream id, so a report depends only
//! on `(suite, seed, trials, c)`. Each property records the largest
//! deviation seen and passes iff it is within that property's tolerance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::biquat::BiQuaternion;
use crate::lorentz::{
    boost_event, einstein_add, le_boost, limit_convergence, m_vector, make_boost, n_vector, Event,
    LimitKind,
};
use crate::pauli_matrix::{from_matrix, spin_term, spin_term_via_matrix, to_matrix, Mat2c};
use crate::reflsum::{
    compose_velocities, mag_sq, reciprocal, refl_sum, refl_sum_limit, refl_sum_projective, Sign,
};
use crate::vector::{CVec3, Cplx, RVec3};
use crate::I;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Biquat,
    Reflsum,
    Lorentz,
    Matrix,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Biquat => "biquat",
            Suite::Reflsum => "reflsum",
            Suite::Lorentz => "lorentz",
            Suite::Matrix => "matrix",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CheckError;
    fn from_str(s: &str) -> Result<Self, CheckError> {
        match s {
            "biquat" => Ok(Suite::Biquat),
            "reflsum" => Ok(Suite::Reflsum),
            "lorentz" => Ok(Suite::Lorentz),
            "matrix" => Ok(Suite::Matrix),
            "all" => Ok(Suite::All),
            other => Err(CheckError::UnknownSuite(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("unknown suite {0:?} (expected biquat, reflsum, lorentz, matrix or all)")]
    UnknownSuite(String),
    #[error("unknown property {0:?} in tolerance override")]
    UnknownProperty(String),
    #[error("trials must be positive")]
    ZeroTrials,
    #[error("c must be positive and finite, got {0}")]
    BadC(f64),
    #[error("tolerance for {0} must be non-negative")]
    BadTolerance(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub c: f64,
    pub trials: usize,
    pub seed: u64,
    /// Keyed by full property id, e.g. `reflsum.associativity`.
    pub tolerance_overrides: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            c: 1.0,
            trials: 1000,
            seed: 42,
            tolerance_overrides: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: &'static str,
    pub trials: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl PropertyResult {
    pub fn id(&self) -> String {
        format!("{}.{}", self.suite, self.name)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub c: f64,
    pub properties: Vec<PropertyResult>,
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn get(&self, id: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.id() == id)
    }
}

type Trial = fn(&mut ChaCha8Rng, f64) -> f64;

enum Runner {
    /// Evaluated once per trial on fresh inputs.
    Random(Trial),
    /// A fixed configuration, evaluated once regardless of the trial count.
    Fixed(fn(f64) -> f64),
}

struct Property {
    suite: Suite,
    name: &'static str,
    tolerance: f64,
    runner: Runner,
}

const fn random(suite: Suite, name: &'static str, tolerance: f64, f: Trial) -> Property {
    Property {
        suite,
        name,
        tolerance,
        runner: Runner::Random(f),
    }
}

const fn fixed(suite: Suite, name: &'static str, tolerance: f64, f: fn(f64) -> f64) -> Property {
    Property {
        suite,
        name,
        tolerance,
        runner: Runner::Fixed(f),
    }
}

const PROPERTIES: &[Property] = &[
    random(Suite::Biquat, "associativity", 1e-12, biquat_associativity),
    random(
        Suite::Biquat,
        "conj_antihomomorphism",
        1e-12,
        biquat_conj_anti,
    ),
    random(
        Suite::Biquat,
        "inverse_antihomomorphism",
        1e-10,
        biquat_inverse_anti,
    ),
    random(
        Suite::Biquat,
        "inverse_identity",
        1e-10,
        biquat_inverse_identity,
    ),
    random(
        Suite::Biquat,
        "norm_multiplicativity",
        1e-12,
        biquat_norm_mult,
    ),
    random(Suite::Biquat, "identity_centrality", 0.0, biquat_identity),
    fixed(Suite::Biquat, "structure_constants", 0.0, biquat_structure),
    random(
        Suite::Reflsum,
        "projective_product",
        1e-12,
        reflsum_projective,
    ),
    random(
        Suite::Reflsum,
        "associativity",
        1e-12,
        reflsum_associativity,
    ),
    random(Suite::Reflsum, "symmetry_relation", 1e-10, reflsum_symmetry),
    random(Suite::Reflsum, "reciprocity", 1e-13, reflsum_reciprocity),
    random(
        Suite::Reflsum,
        "limiting_velocity",
        1e-12,
        reflsum_limiting_velocity,
    ),
    random(
        Suite::Reflsum,
        "einstein_magnitude",
        1e-12,
        reflsum_einstein_magnitude,
    ),
    random(
        Suite::Reflsum,
        "reciprocal_limit_rate",
        2.0,
        reflsum_limit_rate,
    ),
    random(Suite::Lorentz, "rotor_unit_norm", 1e-12, lorentz_rotor_norm),
    random(
        Suite::Lorentz,
        "boost_closed_form",
        1e-12,
        lorentz_closed_form,
    ),
    random(
        Suite::Lorentz,
        "interval_invariance",
        1e-10,
        lorentz_interval,
    ),
    random(
        Suite::Lorentz,
        "time_agreement",
        1e-12,
        lorentz_time_agreement,
    ),
    random(
        Suite::Lorentz,
        "spatial_magnitude_agreement",
        1e-10,
        lorentz_spatial_agreement,
    ),
    random(Suite::Lorentz, "mn_orthogonality", 1e-14, lorentz_mn),
    fixed(
        Suite::Lorentz,
        "limit_convergence",
        2.0,
        lorentz_limit_convergence,
    ),
    random(Suite::Matrix, "homomorphism", 1e-12, matrix_homomorphism),
    random(Suite::Matrix, "det_norm", 1e-12, matrix_det_norm),
    random(Suite::Matrix, "roundtrip", 1e-14, matrix_roundtrip),
    random(Suite::Matrix, "conj_transport", 0.0, matrix_conj_transport),
    fixed(Suite::Matrix, "basis_relations", 0.0, matrix_basis),
    random(Suite::Matrix, "spin_term_paths", 1e-13, matrix_spin_paths),
    random(
        Suite::Matrix,
        "spin_term_formula",
        1e-12,
        matrix_spin_formula,
    ),
];

/// Full ids (`suite.name`) of every property, with default tolerances.
pub fn property_catalog() -> Vec<(String, f64)> {
    PROPERTIES
        .iter()
        .map(|p| (format!("{}.{}", p.suite, p.name), p.tolerance))
        .collect()
}

/// RNG for trial `i` of the property with stream id `stream`.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
    rng.set_stream(stream);
    rng
}

pub fn run(suite: Suite, config: &RunConfig) -> Result<CheckReport, CheckError> {
    if config.trials == 0 {
        return Err(CheckError::ZeroTrials);
    }
    if !(config.c.is_finite() && config.c > 0.0) {
        return Err(CheckError::BadC(config.c));
    }
    let catalog = property_catalog();
    for (id, &tol) in &config.tolerance_overrides {
        if !catalog.iter().any(|(known, _)| known == id) {
            return Err(CheckError::UnknownProperty(id.clone()));
        }
        if tol.is_nan() || tol < 0.0 {
            return Err(CheckError::BadTolerance(id.clone()));
        }
    }

    let start = Instant::now();
    let mut properties = Vec::new();
    for (stream, prop) in PROPERTIES.iter().enumerate() {
        if !suite.includes(prop.suite) {
            continue;
        }
        let id = format!("{}.{}", prop.suite, prop.name);
        let tolerance = config
            .tolerance_overrides
            .get(&id)
            .copied()
            .unwrap_or(prop.tolerance);
        let (trials, max_deviation) = match prop.runner {
            Runner::Random(f) => {
                let max = (0..config.trials as u64)
                    .map(|i| f(&mut trial_rng(config.seed, stream as u64, i), config.c))
                    .fold(0.0, nan_max);
                (config.trials, max)
            }
            Runner::Fixed(f) => (1, f(config.c)),
        };
        properties.push(PropertyResult {
            suite: prop.suite,
            name: prop.name,
            trials,
            max_deviation,
            tolerance,
            passed: max_deviation <= tolerance,
        });
    }
    Ok(CheckReport {
        suite,
        trials: config.trials,
        seed: config.seed,
        c: config.c,
        properties,
        wall_time: start.elapsed(),
    })
}

// A NaN deviation must fail the property, so it propagates.
fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

// ---- samplers -------------------------------------------------------------

pub fn sample_cplx<R: Rng>(rng: &mut R) -> Cplx {
    Cplx::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

/// Components uniform in `[−1, 1] + [−1, 1]i`.
pub fn sample_biquat<R: Rng>(rng: &mut R) -> BiQuaternion {
    BiQuaternion::new(
        sample_cplx(rng),
        CVec3::new(sample_cplx(rng), sample_cplx(rng), sample_cplx(rng)),
    )
}

pub fn sample_cube<R: Rng>(rng: &mut R, half_width: f64) -> RVec3 {
    RVec3::new(
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
    )
}

/// Uniform in the open ball of the given radius.
pub fn sample_ball<R: Rng>(rng: &mut R, radius: f64) -> RVec3 {
    loop {
        let p = sample_cube(rng, 1.0);
        if p.norm_sq() < 1.0 {
            return p * radius;
        }
    }
}

pub fn sample_unit<R: Rng>(rng: &mut R) -> RVec3 {
    loop {
        let p = sample_ball(rng, 1.0);
        let n = p.norm();
        if n > 1e-3 {
            return p / n;
        }
    }
}

fn sample_mat<R: Rng>(rng: &mut R) -> Mat2c {
    Mat2c::new(
        sample_cplx(rng),
        sample_cplx(rng),
        sample_cplx(rng),
        sample_cplx(rng),
    )
}

/// Quaternion with `|A A*| >= 0.1`.
fn sample_invertible<R: Rng>(rng: &mut R) -> BiQuaternion {
    loop {
        let q = sample_biquat(rng);
        if q.square_norm().norm() >= 0.1 {
            return q;
        }
    }
}

fn sample_event<R: Rng>(rng: &mut R, c: f64) -> Event {
    Event {
        t: rng.gen_range(-1.0..=1.0),
        x: sample_cube(rng, c),
        c,
    }
}

// ---- biquat ---------------------------------------------------------------

fn biquat_associativity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b, c) = (sample_biquat(rng), sample_biquat(rng), sample_biquat(rng));
    ((a * b) * c).max_abs_diff(&(a * (b * c)))
}

fn biquat_conj_anti(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b) = (sample_biquat(rng), sample_biquat(rng));
    (a * b).conj().max_abs_diff(&(b.conj() * a.conj()))
}

fn biquat_inverse_anti(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b) = (sample_invertible(rng), sample_invertible(rng));
    let lhs = (a * b).inverse();
    let rhs = b.inverse().and_then(|bi| a.inverse().map(|ai| bi * ai));
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => l.max_abs_diff(&r),
        _ => f64::INFINITY,
    }
}

fn biquat_inverse_identity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = sample_invertible(rng);
    match a.inverse() {
        Ok(ai) => (ai * a)
            .max_abs_diff(&BiQuaternion::ONE)
            .max((a * ai).max_abs_diff(&BiQuaternion::ONE)),
        Err(_) => f64::INFINITY,
    }
}

/// Relative to `Σ|aᵢ|² Σ|bᵢ|²`, which bounds both sides.
fn biquat_norm_mult(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b) = (sample_biquat(rng), sample_biquat(rng));
    let lhs = (a * b).square_norm();
    let rhs = a.square_norm() * b.square_norm();
    (lhs - rhs).norm() / (a.euclidean_sq() * b.euclidean_sq())
}

fn biquat_identity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = sample_biquat(rng);
    (a * BiQuaternion::ONE)
        .max_abs_diff(&a)
        .max((BiQuaternion::ONE * a).max_abs_diff(&a))
}

fn biquat_structure(_c: f64) -> f64 {
    let one = Cplx::new(1.0, 0.0);
    // (coefficient, basis index) of σᵢσⱼ
    let table: [[(Cplx, usize); 4]; 4] = [
        [(one, 0), (one, 1), (one, 2), (one, 3)],
        [(one, 1), (one, 0), (I, 3), (-I, 2)],
        [(one, 2), (-I, 3), (one, 0), (I, 1)],
        [(one, 3), (I, 2), (-I, 1), (one, 0)],
    ];
    let mut worst: f64 = 0.0;
    for (i, row) in table.iter().enumerate() {
        for (j, &(coef, k)) in row.iter().enumerate() {
            let got = BiQuaternion::BASIS[i] * BiQuaternion::BASIS[j];
            worst = worst.max(got.max_abs_diff(&BiQuaternion::BASIS[k].scale(coef)));
        }
    }
    worst
}

// ---- reflsum --------------------------------------------------------------

fn reflsum_projective(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = CVec3::from(sample_ball(rng, 0.9));
    let b = CVec3::from(sample_ball(rng, 0.9));
    match (refl_sum(a, b), refl_sum_projective(a, b)) {
        (Ok(r), Ok(p)) => r.value.max_abs_diff(p),
        _ => f64::INFINITY,
    }
}

fn reflsum_associativity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = CVec3::from(sample_ball(rng, 0.9));
    let b = CVec3::from(sample_ball(rng, 0.9));
    let c = CVec3::from(sample_ball(rng, 0.9));
    let left = refl_sum(a, b).and_then(|ab| refl_sum(ab.value, c));
    let right = refl_sum(b, c).and_then(|bc| refl_sum(a, bc.value));
    match (left, right) {
        (Ok(l), Ok(r)) => l.value.max_abs_diff(r.value),
        _ => f64::INFINITY,
    }
}

fn reflsum_symmetry(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b, g) = loop {
        let a = sample_ball(rng, 0.9);
        let b = sample_ball(rng, 0.9);
        let g = sample_cube(rng, 1.0);
        if a.dot(g).abs() > 0.1 && b.dot(g).abs() > 0.1 {
            break (a, b, g);
        }
    };
    let lhs = reciprocal(a, g, Sign::Plus)
        .and_then(|ap| reciprocal(b, g, Sign::Minus).and_then(|bm| refl_sum(ap, bm)));
    let rhs = refl_sum(a.into(), b.into());
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => l.value.max_abs_diff(r.value),
        _ => f64::INFINITY,
    }
}

fn reflsum_reciprocity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, g) = loop {
        let a = sample_ball(rng, 1.0);
        let g = sample_cube(rng, 1.0);
        if a.dot(g).abs() > 0.1 {
            break (a, g);
        }
    };
    let one = Cplx::new(1.0, 0.0);
    [Sign::Plus, Sign::Minus]
        .iter()
        .map(|&s| match reciprocal(a, g, s) {
            Ok(r) => (r.dot_u(a.into()) - one).norm(),
            Err(_) => f64::INFINITY,
        })
        .fold(0.0, f64::max)
}

fn reflsum_limiting_velocity(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = sample_ball(rng, 1.0);
    let b = sample_unit(rng);
    match refl_sum(a.into(), b.into()) {
        Ok(r) => (mag_sq(r.value) - Cplx::new(1.0, 0.0)).norm(),
        Err(_) => f64::INFINITY,
    }
}

/// `|(−v) +̂ u|²` against `|v ⊕ u|²`, relative to the latter.
fn reflsum_einstein_magnitude(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let v = sample_ball(rng, 0.9 * c);
    let u = sample_ball(rng, 0.9 * c);
    match (compose_velocities(-v, u, c), einstein_add(v, u, c)) {
        (Ok(w), Ok(e)) => {
            let e_sq = e.norm_sq();
            (mag_sq(w) - Cplx::new(e_sq, 0.0)).norm() / e_sq
        }
        _ => f64::INFINITY,
    }
}

/// Distance of the error ratio between successive decades of scale from 10.
fn reflsum_limit_rate(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, g) = loop {
        let a = sample_ball(rng, 0.9);
        let g = sample_cube(rng, 1.0);
        if a.dot(g).abs() > 0.1 {
            break (a, g);
        }
    };
    let Ok(target) = reciprocal(a, g, Sign::Plus) else {
        return f64::INFINITY;
    };
    let errs: Vec<f64> = [1e3, 1e4, 1e5]
        .iter()
        .map(|&s| match refl_sum_limit(a, g, s) {
            Ok(w) => w.max_abs_diff(target),
            Err(_) => f64::NAN,
        })
        .collect();
    errs.windows(2)
        .map(|w| (w[0] / w[1] - 10.0).abs())
        .fold(0.0, nan_max)
}

// ---- lorentz --------------------------------------------------------------

fn sample_boost_pair(rng: &mut ChaCha8Rng, c: f64) -> (crate::lorentz::BoostRotor, Event) {
    let v = sample_ball(rng, 0.95 * c);
    let e = sample_event(rng, c);
    (make_boost(v, c).expect("subluminal by construction"), e)
}

fn lorentz_rotor_norm(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, _) = sample_boost_pair(rng, c);
    (r.quat.square_norm() - Cplx::new(1.0, 0.0)).norm()
}

fn lorentz_closed_form(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    let Ok(te) = boost_event(&r, &e) else {
        return f64::INFINITY;
    };
    let (g, v) = (r.g, r.v);
    let t_want = g * e.t - g * e.x.dot(v) / (c * c);
    let x_want = CVec3::from((e.x - v * e.t) * g) + CVec3::from(v.cross(e.x) * (-g / c)) * I;
    let scale = 1.0f64.max(te.x_prime.max_abs()).max((c * te.t_prime).abs());
    ((te.t_prime - t_want).abs() * c).max(te.x_prime.max_abs_diff(x_want)) / scale
}

/// Relative to `(ct)² + X·X` of the input event.
fn lorentz_interval(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    match boost_event(&r, &e) {
        Ok(te) => (te.interval(c) - Cplx::new(e.interval(), 0.0)).norm() / e.euclidean_scale(),
        Err(_) => f64::INFINITY,
    }
}

fn lorentz_time_agreement(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    match (boost_event(&r, &e), le_boost(&r, &e)) {
        (Ok(q), Ok((t, _))) => (q.t_prime - t).abs() / t.abs().max(1.0),
        _ => f64::INFINITY,
    }
}

fn lorentz_spatial_agreement(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    match (boost_event(&r, &e), le_boost(&r, &e)) {
        (Ok(q), Ok((_, x))) => {
            let le = x.norm_sq();
            (q.x_prime.mag_sq() - Cplx::new(le, 0.0)).norm() / le.max(1.0)
        }
        _ => f64::INFINITY,
    }
}

fn lorentz_mn(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (m, n) = loop {
        let x = sample_cube(rng, 1.0);
        let v = sample_cube(rng, 1.0);
        if let (Ok(m), Ok(n)) = (m_vector(x, v), n_vector(x, v)) {
            break (m, n);
        }
    };
    m.dot(n).abs()
}

/// `max |ratio − 10|` over both limit kinds at `c ∈ {1e−1, 1e−2, 1e−3}`.
fn lorentz_limit_convergence(_c: f64) -> f64 {
    LimitKind::ALL
        .iter()
        .map(
            |&kind| match limit_convergence(kind, RVec3::X, RVec3::Y, 1.0, &[1e-1, 1e-2, 1e-3]) {
                Ok((_, ratios)) => ratios.iter().map(|r| (r - 10.0).abs()).fold(0.0, nan_max),
                Err(_) => f64::INFINITY,
            },
        )
        .fold(0.0, nan_max)
}

// ---- matrix ---------------------------------------------------------------

fn matrix_homomorphism(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let (a, b) = (sample_biquat(rng), sample_biquat(rng));
    to_matrix(&(a * b)).max_abs_diff(&(to_matrix(&a) * to_matrix(&b)))
}

fn matrix_det_norm(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = sample_biquat(rng);
    (to_matrix(&a).det() - a.square_norm()).norm()
}

fn matrix_roundtrip(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let m = sample_mat(rng);
    to_matrix(&from_matrix(&m)).max_abs_diff(&m)
}

fn matrix_conj_transport(rng: &mut ChaCha8Rng, _c: f64) -> f64 {
    let a = sample_biquat(rng);
    to_matrix(&a.conj()).max_abs_diff(&to_matrix(&a).adjugate())
}

fn matrix_basis(_c: f64) -> f64 {
    let [id, sx, sy, sz] = Mat2c::BASIS;
    let one = Cplx::new(1.0, 0.0);
    let table: [[(Cplx, Mat2c); 4]; 4] = [
        [(one, id), (one, sx), (one, sy), (one, sz)],
        [(one, sx), (one, id), (I, sz), (-I, sy)],
        [(one, sy), (-I, sz), (one, id), (I, sx)],
        [(one, sz), (I, sy), (-I, sx), (one, id)],
    ];
    let mut worst: f64 = 0.0;
    for (i, row) in table.iter().enumerate() {
        for (j, (coef, m)) in row.iter().enumerate() {
            let product = Mat2c::BASIS[i] * Mat2c::BASIS[j];
            worst = worst.max(product.max_abs_diff(&m.scale(*coef)));
            let via_quat = to_matrix(&(BiQuaternion::BASIS[i] * BiQuaternion::BASIS[j]));
            worst = worst.max(product.max_abs_diff(&via_quat));
        }
    }
    worst
}

fn matrix_spin_paths(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    match (spin_term(&r, &e), spin_term_via_matrix(&r, &e)) {
        (Ok(q), Ok(m)) => q.max_abs_diff(m) / q.max_abs().max(1.0),
        _ => f64::INFINITY,
    }
}

fn matrix_spin_formula(rng: &mut ChaCha8Rng, c: f64) -> f64 {
    let (r, e) = sample_boost_pair(rng, c);
    let want = CVec3::from(r.v.cross(e.x) * (-r.g / c)) * I;
    match spin_term(&r, &e) {
        Ok(s) => s.max_abs_diff(want) / want.max_abs().max(1.0),
        Err(_) => f64::INFINITY,
    }
}
