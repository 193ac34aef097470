//! Builds a few rings from specs and prints their units and whether they
//! are Frobenius.

use std::sync::Arc;

use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::is_frobenius_ring;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    let specs = [
        RingSpec::zn(12),
        RingSpec::gf(3, &[1, 0, 1]),
        RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(3)]),
        RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
        RingSpec::matrix(RingSpec::zn(2), 2),
    ];
    for spec in &specs {
        let r = Arc::new(build_ring(spec, &caps)?);
        let units: Vec<&str> = r.units().iter().map(|&u| r.label(u)).collect();
        println!(
            "{:<24} |R| = {:>2}  commutative = {:<5}  frobenius = {:<5}  units = {}",
            r.name(),
            r.size(),
            r.is_commutative(),
            is_frobenius_ring(&r)?,
            units.join(" ")
        );
    }
    Ok(())
}
