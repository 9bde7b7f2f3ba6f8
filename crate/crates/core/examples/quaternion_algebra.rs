//! Products, conjugates, norms and inverses of complex quaternions.

use pauliquat::{BiQuaternion, CVec3, Cplx, I};

fn main() -> pauliquat::Result<()> {
    let [sx, sy, sz] = [
        BiQuaternion::SIGMA_X,
        BiQuaternion::SIGMA_Y,
        BiQuaternion::SIGMA_Z,
    ];

    // the vector units square to +1 and multiply like Pauli matrices
    println!("σx·σx = {}", sx * sx);
    println!("σx·σy = {}", sx * sy);
    println!("σy·σx = {}", sy * sx);
    println!("σy·σz = {}", sy * sz);

    let a = BiQuaternion::new(
        Cplx::new(1.0, 0.5),
        CVec3::new(Cplx::new(0.2, 0.0), I, Cplx::new(-0.3, 0.1)),
    );
    let b = BiQuaternion::from_real(2.0, [0.5, -1.0, 0.25].into());

    println!("\na       = {a}");
    println!("b       = {b}");
    println!("a·b     = {}", a * b);
    println!("conj(a) = {}", a.conj());
    println!("N(a)    = {}", a.square_norm());

    // the norm is multiplicative
    let lhs = (a * b).square_norm();
    let rhs = a.square_norm() * b.square_norm();
    println!("N(ab) - N(a)N(b) = {:.3e}", (lhs - rhs).norm());

    let inv = a.inverse()?;
    println!(
        "|a·a⁻¹ - 1| = {:.3e}",
        (a * inv).max_abs_diff(&BiQuaternion::ONE)
    );

    // 1 + σz has zero norm and no inverse
    let null = BiQuaternion::ONE + sz;
    match null.inverse() {
        Ok(_) => println!("unexpected inverse"),
        Err(e) => println!("inverse(1 + σz): {e}"),
    }
    Ok(())
}
