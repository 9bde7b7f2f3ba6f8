//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; the process exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use pauliquat::check::{sample_ball, sample_biquat, sample_cube, sample_unit, trial_rng};
use pauliquat::lorentz::{
    boost_event, einstein_add, limit_convergence, m_vector, make_boost, n_vector, Event, LimitKind,
};
use pauliquat::pauli_matrix::{to_matrix, Mat2c};
use pauliquat::reflsum::{compose_velocities, mag_sq, reciprocal, refl_sum, refl_sum_limit, Sign};
use pauliquat::{BiQuaternion, CVec3, Cplx, RVec3, I};

const TRIALS: u64 = 1000;
const SEED: u64 = 42;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn rng(stream: u64, i: u64) -> rand_chacha::ChaCha8Rng {
    trial_rng(SEED, 1000 + stream, i)
}

fn max_over(stream: u64, f: impl Fn(&mut rand_chacha::ChaCha8Rng) -> f64) -> f64 {
    (0..TRIALS)
        .map(|i| f(&mut rng(stream, i)))
        .fold(0.0, f64::max)
}

/// Independent γ-form of relativistic velocity addition:
/// `(v + u/γ + γ/(c²(1+γ)) (v·u) v) / (1 + v·u/c²)`.
fn einstein_oracle(v: RVec3, u: RVec3, c: f64) -> RVec3 {
    let gamma = 1.0 / (1.0 - v.norm_sq() / (c * c)).sqrt();
    let vu = v.dot(u);
    let num = v + u / gamma + v * (gamma / (c * c * (1.0 + gamma)) * vu);
    num / (1.0 + vu / (c * c))
}

fn c1_quaternion_associativity() -> Outcome {
    let dev = max_over(1, |r| {
        let (a, b, c) = (sample_biquat(r), sample_biquat(r), sample_biquat(r));
        ((a * b) * c).max_abs_diff(&(a * (b * c)))
    });
    outcome(dev <= 1e-12, format!("max dev {dev:.3e} <= 1e-12"))
}

fn c2_norm_and_conjugate() -> Outcome {
    let norm_dev = max_over(2, |r| {
        let (a, b) = (sample_biquat(r), sample_biquat(r));
        let lhs = (a * b).square_norm();
        let rhs = a.square_norm() * b.square_norm();
        (lhs - rhs).norm() / (a.euclidean_sq() * b.euclidean_sq())
    });
    let conj_dev = max_over(3, |r| {
        let (a, b) = (sample_biquat(r), sample_biquat(r));
        (a * b).conj().max_abs_diff(&(b.conj() * a.conj()))
    });
    outcome(
        norm_dev <= 1e-12 && conj_dev <= 1e-12,
        format!("norm rel dev {norm_dev:.3e}, (AB)* dev {conj_dev:.3e}, both <= 1e-12"),
    )
}

fn c3_reflsum_associativity() -> Outcome {
    let dev = max_over(4, |r| {
        let a = CVec3::from(sample_ball(r, 0.9));
        let b = CVec3::from(sample_ball(r, 0.9));
        let c = CVec3::from(sample_ball(r, 0.9));
        let left = refl_sum(refl_sum(a, b).unwrap().value, c).unwrap().value;
        let right = refl_sum(a, refl_sum(b, c).unwrap().value).unwrap().value;
        left.max_abs_diff(right)
    });
    outcome(dev <= 1e-12, format!("max dev {dev:.3e} <= 1e-12"))
}

fn c4_symmetry_relation() -> Outcome {
    let dev = max_over(5, |r| {
        let (a, b, g) = loop {
            let a = sample_ball(r, 0.9);
            let b = sample_ball(r, 0.9);
            let g = sample_cube(r, 1.0);
            if a.dot(g).abs() > 0.1 && b.dot(g).abs() > 0.1 {
                break (a, b, g);
            }
        };
        let ap = reciprocal(a, g, Sign::Plus).unwrap();
        let bm = reciprocal(b, g, Sign::Minus).unwrap();
        refl_sum(ap, bm)
            .unwrap()
            .value
            .max_abs_diff(refl_sum(a.into(), b.into()).unwrap().value)
    });

    // collinear: a x̂, b x̂, g = x̂ with dyadic a, b is exact
    let (a, b) = (0.5, 0.25);
    let ap = reciprocal(RVec3::new(a, 0.0, 0.0), RVec3::X, Sign::Plus).unwrap();
    let bm = reciprocal(RVec3::new(b, 0.0, 0.0), RVec3::X, Sign::Minus).unwrap();
    let collinear = refl_sum(ap, bm).unwrap().value;
    let collinear_want = refl_sum(CVec3::real(a, 0.0, 0.0), CVec3::real(b, 0.0, 0.0))
        .unwrap()
        .value;
    let collinear_ok = collinear == collinear_want;

    // a x̂, b ŷ, g = x̂ + ŷ gives a x̂ + b ŷ + i ab ẑ
    let g = RVec3::new(1.0, 1.0, 0.0);
    let ap = reciprocal(RVec3::new(a, 0.0, 0.0), g, Sign::Plus).unwrap();
    let bm = reciprocal(RVec3::new(0.0, b, 0.0), g, Sign::Minus).unwrap();
    let perp = refl_sum(ap, bm).unwrap().value;
    let perp_want = CVec3::new(Cplx::new(a, 0.0), Cplx::new(b, 0.0), Cplx::new(0.0, a * b));
    let perp_ok = perp == perp_want;

    outcome(
        dev <= 1e-10 && collinear_ok && perp_ok,
        format!("max dev {dev:.3e} <= 1e-10, collinear exact {collinear_ok}, perpendicular exact {perp_ok}"),
    )
}

fn c5_einstein_postulate() -> Outcome {
    let dev = max_over(6, |r| {
        let a = sample_ball(r, 1.0);
        let b = sample_unit(r);
        (mag_sq(refl_sum(a.into(), b.into()).unwrap().value) - Cplx::new(1.0, 0.0)).norm()
    });
    outcome(dev <= 1e-12, format!("max |w·w − 1| {dev:.3e} <= 1e-12"))
}

fn c6_magnitude_equality() -> Outcome {
    let c = 1.0;
    let dev = max_over(7, |r| {
        let v = sample_ball(r, 0.9 * c);
        let u = sample_ball(r, 0.9 * c);
        let w = compose_velocities(-v, u, c).unwrap();
        let e = einstein_oracle(v, u, c).norm_sq();
        (mag_sq(w) - Cplx::new(e, 0.0)).norm() / e
    });
    outcome(dev <= 1e-12, format!("max relative dev {dev:.3e} <= 1e-12"))
}

fn c7_interval_invariance() -> Outcome {
    let c = 1.0;
    let dev = max_over(8, |r| {
        let v = sample_ball(r, 0.95 * c);
        let e = Event::new(sample_cube(r, 1.0).x, sample_cube(r, c), c).unwrap();
        let te = boost_event(&make_boost(v, c).unwrap(), &e).unwrap();
        (te.interval(c) - Cplx::new(e.interval(), 0.0)).norm() / e.euclidean_scale()
    });

    let rotor = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0).unwrap();
    let te = boost_event(&rotor, &Event::new(0.0, RVec3::Y, 1.0).unwrap()).unwrap();
    let want = CVec3::new(
        Cplx::new(0.0, 0.0),
        Cplx::new(1.25, 0.0),
        Cplx::new(0.0, -0.75),
    );
    let x_dev = te.x_prime.max_abs_diff(want);
    let i_dev = (te.interval(1.0) - Cplx::new(-1.0, 0.0)).norm();
    outcome(
        dev <= 1e-10 && x_dev <= 1e-12 && i_dev <= 1e-12,
        format!("max rel dev {dev:.3e} <= 1e-10; worked x′ dev {x_dev:.1e}, interval dev {i_dev:.1e} <= 1e-12"),
    )
}

fn c8_collinear_composition() -> Outcome {
    let mut worst: f64 = 0.0;
    for c in [1.0, 299_792_458.0] {
        let half = 0.5 * c;
        let refl =
            compose_velocities(RVec3::new(-half, 0.0, 0.0), RVec3::new(half, 0.0, 0.0), c).unwrap();
        let ein = einstein_add(RVec3::new(half, 0.0, 0.0), RVec3::new(half, 0.0, 0.0), c).unwrap();
        let target = CVec3::real(0.8 * c, 0.0, 0.0);
        worst = worst
            .max(refl.max_abs_diff(target) / c)
            .max(CVec3::from(ein).max_abs_diff(target) / c);
    }
    outcome(
        worst <= 1e-15,
        format!("max dev / c {worst:.3e} <= 1e-15 (c = 1 and c = 299792458)"),
    )
}

fn c9_matrix_representation() -> Outcome {
    let hom = max_over(9, |r| {
        let (a, b) = (sample_biquat(r), sample_biquat(r));
        to_matrix(&(a * b)).max_abs_diff(&(to_matrix(&a) * to_matrix(&b)))
    });
    let det = max_over(10, |r| {
        let a = sample_biquat(r);
        (to_matrix(&a).det() - a.square_norm()).norm()
    });
    // σᵢσⱼ = coefficient · σₖ with β = i
    let one = Cplx::new(1.0, 0.0);
    let table: [[(Cplx, usize); 4]; 4] = [
        [(one, 0), (one, 1), (one, 2), (one, 3)],
        [(one, 1), (one, 0), (I, 3), (-I, 2)],
        [(one, 2), (-I, 3), (one, 0), (I, 1)],
        [(one, 3), (I, 2), (-I, 1), (one, 0)],
    ];
    let mut basis_ok = true;
    for (i, row) in table.iter().enumerate() {
        for (j, &(coef, k)) in row.iter().enumerate() {
            let q = BiQuaternion::BASIS[i] * BiQuaternion::BASIS[j];
            let m = Mat2c::BASIS[i] * Mat2c::BASIS[j];
            basis_ok &= q == BiQuaternion::BASIS[k].scale(coef);
            basis_ok &= m == Mat2c::BASIS[k].scale(coef);
            basis_ok &= to_matrix(&q) == m;
        }
    }
    outcome(
        hom <= 1e-12 && det <= 1e-12 && basis_ok,
        format!("homomorphism {hom:.3e}, det vs norm {det:.3e} (<= 1e-12), 16 basis products exact {basis_ok}"),
    )
}

fn c10_rotational_limit() -> Outcome {
    let mut ratios = Vec::new();
    for kind in LimitKind::ALL {
        let (_, r) = limit_convergence(kind, RVec3::X, RVec3::Y, 1.0, &[1e-1, 1e-2, 1e-3]).unwrap();
        ratios.extend(r);
    }
    let ratios_ok = ratios.iter().all(|r| (8.0..=12.0).contains(r));
    let m = m_vector(RVec3::X, RVec3::Y).unwrap();
    let n = n_vector(RVec3::X, RVec3::Y).unwrap();
    let fixed_mn = m.dot(n).abs();
    let random_mn = max_over(11, |r| loop {
        let x = sample_cube(r, 1.0);
        let v = sample_cube(r, 1.0);
        if let (Ok(m), Ok(n)) = (m_vector(x, v), n_vector(x, v)) {
            break m.dot(n).abs();
        }
    });
    let ratio_text: Vec<String> = ratios.iter().map(|r| format!("{r:.3}")).collect();
    outcome(
        ratios_ok && fixed_mn <= 1e-14 && random_mn <= 1e-14,
        format!(
            "ratios [{}] in [8, 12]; m·n fixed {fixed_mn:.1e}, random max {random_mn:.1e} <= 1e-14",
            ratio_text.join(", ")
        ),
    )
}

fn c11_reciprocals() -> Outcome {
    let one = Cplx::new(1.0, 0.0);
    let dot_dev = max_over(12, |r| {
        let (a, g) = loop {
            let a = sample_ball(r, 1.0);
            let g = sample_cube(r, 1.0);
            if a.dot(g).abs() > 0.1 {
                break (a, g);
            }
        };
        let p = (reciprocal(a, g, Sign::Plus).unwrap().dot_u(a.into()) - one).norm();
        let m = (reciprocal(a, g, Sign::Minus).unwrap().dot_u(a.into()) - one).norm();
        p.max(m)
    });

    // error · scale must stay bounded and shrink 10× per decade
    let scales = [1e3, 1e4, 1e5];
    let mut rate_ok = true;
    let mut worst_ratio: f64 = 10.0;
    for (a, g) in [
        (RVec3::new(0.5, 0.0, 0.0), RVec3::X),
        (RVec3::new(0.5, 0.2, -0.1), RVec3::new(0.3, 1.0, 0.4)),
        (RVec3::new(-0.3, 0.6, 0.2), RVec3::new(-1.0, 0.5, 0.7)),
    ] {
        let target = reciprocal(a, g, Sign::Plus).unwrap();
        let errs: Vec<f64> = scales
            .iter()
            .map(|&s| refl_sum_limit(a, g, s).unwrap().max_abs_diff(target))
            .collect();
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            if (ratio - 10.0).abs() > (worst_ratio - 10.0).abs() {
                worst_ratio = ratio;
            }
            rate_ok &= (8.0..=12.0).contains(&ratio);
        }
    }
    outcome(
        dot_dev <= 1e-13 && rate_ok,
        format!("max |A′·A − 1| {dot_dev:.3e} <= 1e-13; limit error ratio per decade worst {worst_ratio:.3} (O(1/scale))"),
    )
}

fn c12_cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_pauliquat");
    let args = [
        "check", "all", "--seed", "42", "--trials", "1000", "--format", "json",
    ];
    let first = Command::new(bin).args(args).output();
    let second = Command::new(bin).args(args).output();
    match (first, second) {
        (Ok(a), Ok(b)) => {
            let exit_ok = a.status.code() == Some(0) && b.status.code() == Some(0);
            let identical = a.stdout == b.stdout && !a.stdout.is_empty();
            outcome(
                exit_ok && identical,
                format!(
                    "exit codes {:?}/{:?}, byte-identical {identical} ({} bytes)",
                    a.status.code(),
                    b.status.code(),
                    a.stdout.len()
                ),
            )
        }
        (Err(e), _) | (_, Err(e)) => outcome(false, format!("could not run {bin}: {e}")),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [Criterion; 12] = [
        ("1  quaternion associativity", c1_quaternion_associativity),
        (
            "2  norm multiplicativity and (AB)* = B*A*",
            c2_norm_and_conjugate,
        ),
        ("3  reflection-sum associativity", c3_reflsum_associativity),
        ("4  reciprocal symmetry relation", c4_symmetry_relation),
        ("5  limiting-velocity invariance", c5_einstein_postulate),
        (
            "6  magnitude equality with Einstein addition",
            c6_magnitude_equality,
        ),
        ("7  interval invariance", c7_interval_invariance),
        (
            "8  collinear composition 0.5c ⊕ 0.5c",
            c8_collinear_composition,
        ),
        ("9  matrix representation", c9_matrix_representation),
        ("10 rotational limit c → 0", c10_rotational_limit),
        ("11 reciprocals and G → ∞ limit", c11_reciprocals),
        ("12 CLI determinism", c12_cli_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let o = f();
        if !o.passed {
            failed += 1;
        }
        println!(
            "[{}] {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    let fast = elapsed < 10.0;
    if !fast {
        failed += 1;
    }
    println!(
        "[{}] suite runtime {elapsed:.2} s < 10 s",
        if fast { "PASS" } else { "FAIL" }
    );
    println!("{} of 13 acceptance lines passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
