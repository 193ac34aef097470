//! F2-linear maps on F4^n that preserve the RT weight extend to block
//! lower triangular matrices over F2, even when they are not F4-linear.

use frobweight::extension::sublinear_rt_check;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    for n in 1..=2 {
        let rep = sublinear_rt_check(2, &[1, 1, 1], n, &caps)?;
        println!(
            "F4^{n} as F2^{}: {} subspaces, {} preserving maps, {} extend, family {} of size {}",
            2 * n,
            rep.codes,
            rep.maps_checked,
            rep.extendable,
            rep.family,
            rep.family_size
        );
        for (k, v) in &rep.checks {
            println!("    {k}: {v}");
        }
    }
    Ok(())
}
