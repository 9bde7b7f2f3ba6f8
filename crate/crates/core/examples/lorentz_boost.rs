//! Boosting an event with the quaternion rotor and with the textbook matrix.

use pauliquat::lorentz::{boost_event, le_boost, make_boost, Event};
use pauliquat::RVec3;

fn main() -> pauliquat::Result<()> {
    let c = 1.0;
    let rotor = make_boost(RVec3::new(0.6, 0.0, 0.0), c)?;
    println!("rotor  g = {}, R = {}", rotor.g, rotor.quat);

    for (t, x) in [
        (0.0, RVec3::new(0.0, 1.0, 0.0)),
        (2.0, RVec3::new(1.0, 0.0, 0.5)),
    ] {
        let e = Event::new(t, x, c)?;
        let q = boost_event(&rotor, &e)?;
        let (t_le, x_le) = le_boost(&rotor, &e)?;
        println!("\nevent t = {t}, x = {x}, interval {}", e.interval());
        println!("  quat  t' = {}, x' = {}", q.t_prime, q.x_prime);
        println!("  le    t' = {t_le}, x' = {x_le}");
        println!("  interval after quat boost = {}", q.interval(c));
    }

    // boosting faster than c is refused
    if let Err(e) = make_boost(RVec3::new(0.0, 1.0, 0.0), c) {
        println!("\n|v| = c: {e}");
    }
    Ok(())
}
