//! Left and right chi-duals of partitions of M^n, reflexivity and the
//! block-count inequality.

use std::sync::Arc;

use frobweight::finring::{build_ring, RingSpec};
use frobweight::frobenius::{first_generating_character, Bimodule};
use frobweight::partitions::{dual_inequalities, DualSide, DualityContext, Partition};
use frobweight::weights::WeightFn;
use frobweight::Caps;

fn main() -> frobweight::Result<()> {
    let caps = Caps::default();
    let r = Arc::new(build_ring(&RingSpec::zn(4), &caps)?);
    let m = Bimodule::regular(r.clone())?;
    let gc = first_generating_character(&m)?;
    let ctx = DualityContext::new(&m, &gc, 2, &caps)?;

    let ham = ctx.hamming_partition();
    let rt = WeightFn::Rt.partition(&ctx.space, m.zero());
    // {0}, {1,3}, {2} on each coordinate, as a partition of Z4 only
    let odd = Partition::from_labels([0, 1, 2, 1]);
    let nonrefl = Partition::from_labels([0, 1, 1, 2]);

    for (name, p, n) in [("hamming", &ham, 2), ("rt", &rt, 2)] {
        let l = ctx.dual_of_module_partition(p, DualSide::Left)?;
        let rr = ctx.dual_of_module_partition(p, DualSide::Right)?;
        println!(
            "Z4^{n} {name:<8} blocks {:>2}  left dual {:>2}  right dual {:>2}  reflexive {}",
            p.block_count(),
            l.block_count(),
            rr.block_count(),
            ctx.is_reflexive_module(p)?
        );
    }
    let one = DualityContext::new(&m, &gc, 1, &caps)?;
    for (name, p) in [("units", &odd), ("{1,2}", &nonrefl)] {
        let d = one.character_dual_module(p)?;
        let b = one.bidual_module(p)?;
        println!(
            "Z4   {name:<8} blocks {}  dual {}  bidual {:?}  {:?}",
            p.block_count(),
            d.block_count(),
            b.blocks(),
            dual_inequalities(p, &d, &b)?
        );
    }
    Ok(())
}
