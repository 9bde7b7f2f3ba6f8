//! Composing velocities with the reflection sum and with Einstein addition.
//!
//! Collinear inputs agree exactly. Non-collinear ones differ by an imaginary
//! part, yet the squared magnitudes coincide.

use pauliquat::lorentz::einstein_add;
use pauliquat::reflsum::{compose_velocities, mag_sq, refl_sum};
use pauliquat::{CVec3, RVec3};

fn show(v: RVec3, u: RVec3, c: f64) -> pauliquat::Result<()> {
    // V +̂ U written through the composition law with the sign of v flipped
    let w = compose_velocities(-v, u, c)?;
    let e = einstein_add(v, u, c)?;
    println!("v = {v}, u = {u}, c = {c}");
    println!("  reflection sum  = {w}");
    println!("  einstein        = {e}");
    println!("  |w|² vs |e|²    = {} vs {}", mag_sq(w).re, e.norm_sq());
    Ok(())
}

fn main() -> pauliquat::Result<()> {
    show(RVec3::new(0.5, 0.0, 0.0), RVec3::new(0.5, 0.0, 0.0), 1.0)?;
    show(RVec3::new(0.5, 0.0, 0.0), RVec3::new(0.0, 0.5, 0.0), 1.0)?;
    show(
        RVec3::new(1.2e8, 0.0, 0.0),
        RVec3::new(0.0, 2.0e8, 0.0),
        2.998e8,
    )?;

    // light speed is closed under the sum
    let w = refl_sum(CVec3::real(0.3, 0.4, 0.0), CVec3::real(0.0, 0.0, 1.0))?;
    println!("\n0.3x + 0.4y  +̂  z   = {}", w.value);
    println!("its squared size   = {}", mag_sq(w.value));

    // superluminal inputs are rejected
    if let Err(e) = compose_velocities(RVec3::new(1.5, 0.0, 0.0), RVec3::ZERO, 1.0) {
        println!("\n|v| > c: {e}");
    }
    Ok(())
}
