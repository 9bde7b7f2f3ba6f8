//! Reciprocal vectors leave a reflection sum unchanged. Summing with a
//! vector that grows without bound along G lands on the reciprocal of A.

use pauliquat::reflsum::{reciprocal, refl_sum, refl_sum_limit, Sign};
use pauliquat::RVec3;

fn main() -> pauliquat::Result<()> {
    let a = RVec3::new(0.4, 0.1, 0.0);
    let b = RVec3::new(0.0, 0.3, -0.2);
    let g = RVec3::new(1.0, 2.0, 0.5);

    let ap = reciprocal(a, g, Sign::Plus)?;
    let bm = reciprocal(b, g, Sign::Minus)?;
    println!("A  = {a}\nB  = {b}\nG  = {g}");
    println!("A'+ = {ap}");
    println!("B'- = {bm}");
    println!("A'+ · A = {}", ap.dot_u(a.into()));
    println!("A +̂ B       = {}", refl_sum(a.into(), b.into())?.value);
    println!("A'+ +̂ B'-   = {}", refl_sum(ap, bm)?.value);

    println!("\nA +̂ λG approaching A'+:");
    for scale in [1e2, 1e4, 1e6] {
        let lim = refl_sum_limit(a, g, scale)?;
        println!("  λ = {scale:e}: gap {:.3e}", lim.max_abs_diff(ap));
    }
    Ok(())
}
