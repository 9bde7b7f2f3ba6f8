//! As c → 0 with |v| > c, the normalized boost of an event tends to the
//! rotation quaternion cos θ + i n sin θ. The gap shrinks tenfold per decade.

use pauliquat::lorentz::{limit_convergence, rotational_limit, LimitKind};
use pauliquat::RVec3;

fn main() -> pauliquat::Result<()> {
    let x = RVec3::new(1.0, 0.5, 0.0);
    let v = RVec3::new(0.2, 1.0, 0.3);
    let t = 1.0;
    let cs = [1e-1, 1e-2, 1e-3, 1e-4];

    for kind in LimitKind::ALL {
        println!("{}:", kind.name());
        let target = rotational_limit(kind, x, v, t, cs[0])?.target();
        println!("  target      {target}");
        for &c in &cs {
            let r = rotational_limit(kind, x, v, t, c)?;
            println!("  c = {c:e}  {}  dev {:.3e}", r.value(), r.deviation());
        }
        let (_, ratios) = limit_convergence(kind, x, v, t, &cs)?;
        println!("  ratios per decade {ratios:.3?}");
    }

    if let Err(e) = rotational_limit(LimitKind::Reflection, x, RVec3::new(2.0, 1.0, 0.0), t, 1.0) {
        println!("\nx ∥ v: {e}");
    }
    Ok(())
}
