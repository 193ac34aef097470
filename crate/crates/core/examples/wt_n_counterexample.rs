//! Over Z24 with N = (6), the map v -> v (2 1; 3 1) restricted to
//! C = {(0,y) : y even} preserves wt_N, yet no 2x2 matrix over Z24 both
//! agrees with it on C and preserves wt_N everywhere.

use frobweight::extension::wt_n_counterexample_analysis;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let r = wt_n_counterexample_analysis(&Caps::default())?;
    println!(
        "f = {:?} over Z24, invertible: {}",
        r.f_matrix.entries, r.f_invertible
    );
    println!(
        "f(3,0) = {}, wt_N(3,0) = {}, wt_N(f(3,0)) = {}",
        r.f_of_3_0, r.wt_n_of_3_0, r.wt_n_of_f_3_0
    );
    if let Some((v, fv)) = &r.global_violation {
        println!("f moves {v} to {fv}, changing wt_N");
    }
    println!(
        "|C| = {}, f|C preserves wt_N: {}, injective: {}, one of {} enumerated preserving maps",
        r.code_size, r.restriction_preserving, r.restriction_injective, r.enumerated_maps
    );
    if let Some(c) = &r.search.certificate {
        println!(
            "searched all {} matrices; {} agree with f on C",
            c.family_size, c.agreeing
        );
        println!(
            "agreeing matrices have c in {:?} and d in {:?}",
            r.c_values, r.d_values
        );
        for (v, k) in &c.eliminated_by_weight {
            println!("  {k:>5} fail to preserve wt_N first at {v}");
        }
    }
    println!("extension exists: {}", r.search.witness.is_some());
    Ok(())
}
