//! The 2×2 complex matrix picture: products map to matrix products, the
//! quaternion norm to the determinant, and the spin term of a boost.

use pauliquat::lorentz::{make_boost, Event};
use pauliquat::pauli_matrix::{from_matrix, spin_term, spin_term_via_matrix, to_matrix};
use pauliquat::{BiQuaternion, CVec3, Cplx, RVec3};

fn main() -> pauliquat::Result<()> {
    for (name, q) in [
        ("σx", BiQuaternion::SIGMA_X),
        ("σy", BiQuaternion::SIGMA_Y),
        ("σz", BiQuaternion::SIGMA_Z),
    ] {
        let m = to_matrix(&q);
        println!("{name}: [[{}, {}], [{}, {}]]", m.m00, m.m01, m.m10, m.m11);
    }

    let a = BiQuaternion::new(
        Cplx::new(1.0, 0.0),
        CVec3::new(
            Cplx::new(0.0, 0.5),
            Cplx::new(0.2, 0.0),
            Cplx::new(0.0, -0.1),
        ),
    );
    let b = BiQuaternion::from_real(0.5, RVec3::new(1.0, 0.0, 2.0));
    let diff = to_matrix(&(a * b)).max_abs_diff(&(to_matrix(&a) * to_matrix(&b)));
    println!("\n|M(ab) - M(a)M(b)| = {diff:.3e}");
    println!(
        "det M(a) = {}, N(a) = {}",
        to_matrix(&a).det(),
        a.square_norm()
    );
    println!("roundtrip = {}", from_matrix(&to_matrix(&a)));

    let rotor = make_boost(RVec3::new(0.6, 0.0, 0.0), 1.0)?;
    let m = to_matrix(&rotor.quat);
    println!("\nboost rotor matrix, det {}", m.det());
    let e = Event::new(0.0, RVec3::new(0.0, 1.0, 0.0), 1.0)?;
    println!("spin term           = {}", spin_term(&rotor, &e)?);
    println!(
        "spin term (matrix)  = {}",
        spin_term_via_matrix(&rotor, &e)?
    );
    Ok(())
}
