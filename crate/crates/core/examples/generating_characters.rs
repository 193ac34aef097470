//! Generating characters of R and of its character module, and the unit
//! relating any two of them.

use std::sync::Arc;

use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::{
    find_generating_characters, generating_characters_unit_related, Bimodule,
};
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    for spec in [
        RingSpec::zn(4),
        RingSpec::gf(2, &[1, 1, 1]),
        RingSpec::matrix(RingSpec::zn(2), 2),
        RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
    ] {
        let r = Arc::new(build_ring(&spec, &caps)?);
        for m in [
            Bimodule::regular(r.clone())?,
            Bimodule::rhat(r.clone(), &caps)?,
        ] {
            let gcs = find_generating_characters(&m);
            println!(
                "{:<28} {:>2} generating characters, pairwise unit-related: {}",
                m.name(),
                gcs.len(),
                generating_characters_unit_related(&m, &gcs)
            );
            if let Some(g) = gcs.first() {
                println!(
                    "{:<28} first one as exponents mod {}: {:?}",
                    "", g.m, g.table
                );
            }
        }
    }
    Ok(())
}
