//! Homogeneous weights from the character-sum formula and from the
//! defining axioms, including a module with no generating character.

use std::sync::Arc;

use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::{first_generating_character, Bimodule};
use frobweight::weights::{homog_axioms_solve, homog_formula_table};
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    let local = RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]);
    for (spec, hat) in [
        (RingSpec::zn(4), false),
        (RingSpec::zn(8), false),
        (RingSpec::gf(2, &[1, 1, 1]), false),
        (
            RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
            false,
        ),
        (local.clone(), true),
        (local, false),
    ] {
        let r = Arc::new(build_ring(&spec, &caps)?);
        let m = if hat {
            Bimodule::rhat(r, &caps)?
        } else {
            Bimodule::regular(r)?
        };
        let axioms = homog_axioms_solve(&m)?;
        let row: Vec<String> = (0..m.size())
            .map(|v| format!("{}:{}", m.label(v as u32), axioms[v]))
            .collect();
        let formula = match first_generating_character(&m) {
            Ok(gc) => format!("{}", homog_formula_table(&m, &gc, &caps)? == axioms),
            Err(_) => "no generating character".into(),
        };
        println!("{:<26} formula agrees: {formula}", m.name());
        println!("    {}", row.join("  "));
    }
    Ok(())
}
