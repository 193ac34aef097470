//! Rosenbloom-Tsfasman weight: preserving maps extend to invertible lower
//! triangular matrices.

use std::sync::Arc;

use frobweight::extension::{run_alphabet_scenario, Scenario};
use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::Bimodule;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    for spec in [
        RingSpec::zn(2),
        RingSpec::zn(4),
        RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
    ] {
        let m = Bimodule::regular(Arc::new(build_ring(&spec, &caps)?))?;
        for n in 1..=3 {
            let rep = run_alphabet_scenario(Scenario::Rt, &m, n, &caps)?;
            println!(
                "{:<6} n={n}  codes {:>4}  maps {:>5}  extend {:>5}  {}",
                m.name(),
                rep.codes,
                rep.maps_checked,
                rep.extendable,
                if rep.passed() { "ok" } else { "FAILED" }
            );
        }
    }
    Ok(())
}
