//! Character table of Z2 x Z4 and the orthogonality relations, computed
//! with exact cyclotomic sums.

use frobweight::abelian::{char_sum, decompose, orthogonality_check, Cyclotomic};
use frobweight::finring::{build_ring, RingSpec};
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    let g = build_ring(
        &RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(4)]),
        &caps,
    )?;
    let dec = decompose(g.add_table(), g.size())?;
    let m = dec.exponent();
    println!("invariant factors {:?}, exponent {m}", dec.orders());
    println!("chi(a) = zeta_{m}^k, table of k:");
    print!("{:>10}", "");
    for a in g.elements() {
        print!("{:>7}", g.label(a));
    }
    println!();
    for chi in dec.characters() {
        print!("{:>10}", format!("{:?}", chi.exps));
        for k in dec.char_table(&chi) {
            print!("{k:>7}");
        }
        println!();
    }
    let cyc = Cyclotomic::new(m, caps.conductor)?;
    let all: Vec<u32> = g.elements().collect();
    let sums: Vec<bool> = dec
        .characters()
        .map(|chi| char_sum(&chi, &all, &dec, &cyc).is_zero())
        .collect();
    println!(
        "sum over G vanishes for nonprincipal characters: {:?}",
        sums
    );
    println!("orthogonality holds: {}", orthogonality_check(&dec, &cyc));
    Ok(())
}
