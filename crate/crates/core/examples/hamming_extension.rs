//! Every Hamming-preserving linear map on every code in Z4^2 and F4^2
//! extends to a monomial matrix.

use std::sync::Arc;

use frobweight::extension::{run_alphabet_scenario, Scenario};
use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::Bimodule;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    for spec in [
        RingSpec::zn(4),
        RingSpec::gf(2, &[1, 1, 1]),
        RingSpec::zn(6),
    ] {
        let r = Arc::new(build_ring(&spec, &caps)?);
        for m in [Bimodule::regular(r.clone())?, Bimodule::rhat(r, &caps)?] {
            let rep = run_alphabet_scenario(Scenario::Hamming, &m, 2, &caps)?;
            println!(
                "{:<6} codes {:>3}  maps {:>4}  extend {:>4}  family {} ({})  passed {}",
                m.name(),
                rep.codes,
                rep.maps_checked,
                rep.extendable,
                rep.family,
                rep.family_size,
                rep.passed()
            );
        }
    }
    Ok(())
}
