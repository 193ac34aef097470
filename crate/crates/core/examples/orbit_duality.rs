//! Orbit partitions of the group of matrices (1 r; 0 u) acting on pairs
//! over F2[x,y]/(x^2,y^2,xy) and its character module, and how the
//! chi-duals exchange them.

use std::sync::Arc;

use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::{first_generating_character, Bimodule};
use frobweight::partitions::{upper_unit_group, verify_orbit_duality, DualityContext};
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    let r = Arc::new(build_ring(
        &RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
        &caps,
    )?);
    let hat = Bimodule::rhat(r.clone(), &caps)?;
    let gc = first_generating_character(&hat)?;
    let ctx = DualityContext::new(&hat, &gc, 2, &caps)?;
    let rep = verify_orbit_duality(&ctx, &upper_unit_group(&r), &caps)?;
    println!("|U| = {}", rep.group_order);
    for (i, name) in [
        "R^2 under U",
        "R^2 under U^T",
        "M^2 under U",
        "M^2 under U^T",
    ]
    .iter()
    .enumerate()
    {
        println!(
            "{name:<14} orbits {:>2} ({:>2} nonzero)  reflexive {}",
            rep.orbit_counts[i], rep.nonzero_orbit_counts[i], rep.reflexive[i]
        );
    }
    println!("dual equalities {:?}", rep.equalities);
    println!("containments    {:?}", rep.containments);
    Ok(())
}
