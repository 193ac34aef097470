//! The full verification suite behind `frobweight verify-paper`: worked
//! examples, duality identities on random partitions, every extension
//! scenario and the structural checks, each reported as one named check.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abelian::{decompose, double_dual_check, orthogonality_check, Cyclotomic};
use crate::corpus::Corpus;
use crate::error::Result;
use crate::extension::{
    ex311, run_scenario, wt_n_counterexample, Expectation, Scenario, ScenarioReport, SCHEMA_VERSION,
};
use crate::finring::{build_ring, RingSpec, RingTable};
use crate::frobenius::{
    bass_unit_check, double_annihilator_check, find_generating_characters,
    first_generating_character, generating_characters_unit_related, is_frobenius_ring, theta_check,
    Bimodule,
};
use crate::partitions::{dual_inequalities, random_partition, DualSide, DualityContext};
use crate::weights::{homog_axioms_solve, homog_formula_table, Rational, WeightFn, WeightValue};
use crate::Caps;

pub const DEFAULT_SEED: u64 = 0x5eed_2016;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub scenarios: Vec<ScenarioReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    /// random partitions per bimodule and length
    pub random_partitions: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            random_partitions: 20,
        }
    }
}

fn check(id: &str, title: &str, passed: bool, detail: Value) -> Check {
    Check {
        id: id.into(),
        title: title.into(),
        passed,
        detail,
    }
}

fn ring(spec: RingSpec, caps: &Caps) -> Result<Arc<RingTable>> {
    Ok(Arc::new(build_ring(&spec, caps)?))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Homogeneous weight on `Z2 x Z2`, on `Z2^2` over `Z2`, and the additive
/// lift of the Hamming weight of `Z2`.
pub fn homogeneous_small_rings(caps: &Caps) -> Result<Check> {
    let r = ring(
        RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
        caps,
    )?;
    let m = Bimodule::regular(r.clone())?;
    let axioms = homog_axioms_solve(&m)?;
    let gc = first_generating_character(&m)?;
    let formula = homog_formula_table(&m, &gc, caps)?;
    let at = |l: &str| axioms[r.element(l).expect("label") as usize];
    let ring_ok =
        at("(0,0)") == q(0) && at("(1,1)") == q(0) && at("(0,1)") == q(2) && at("(1,0)") == q(2);

    let z2 = ring(RingSpec::zn(2), caps)?;
    let module = Bimodule::regular(z2)?.power(2, caps)?;
    let hat = homog_axioms_solve(&module)?;
    let module_ok = hat
        .iter()
        .enumerate()
        .all(|(v, &w)| w == if v == 0 { q(0) } else { q(2) });

    let lift = WeightFn::homogeneous(vec![q(0), q(1)]);
    let lv: Vec<WeightValue> = [[1, 0], [0, 1], [1, 1]]
        .iter()
        .map(|v| lift.value(v, 0))
        .collect();
    let lift_ok = lv == [1, 1, 2].map(|k| WeightValue::Rational(q(k)));
    Ok(check(
        "2",
        "homogeneous weight on Z2xZ2, on Z2^2 over Z2, and the additive lift",
        ring_ok && module_ok && lift_ok && formula == axioms,
        json!({
            "z2xz2": axioms.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "z2_squared_module": hat.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "lift": lv.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        }),
    ))
}

/// Homogeneous weight on `R^` for `R = F2[x,y]/(x^2,y^2,xy)` with the
/// evaluation-at-1 generating character.
pub fn homogeneous_rhat(caps: &Caps) -> Result<Check> {
    let r = ring(
        RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
        caps,
    )?;
    let m = Bimodule::rhat(r.clone(), caps)?;
    let psi = m
        .evaluation_character(r.one())
        .expect("R^ has evaluation characters");
    let gc = crate::frobenius::GenChar::new(&m, psi)?;
    let formula = homog_formula_table(&m, &gc, caps)?;
    let axioms = homog_axioms_solve(&m)?;
    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    for w in &formula {
        *hist.entry(w.to_string()).or_default() += 1;
    }
    let expected: BTreeMap<String, usize> = [
        ("0".to_string(), 1),
        ("1".to_string(), 6),
        ("2".to_string(), 1),
    ]
    .into();
    // |R chi| = 2 exactly for the weight-2 character, 4 for the other nonzero ones
    let cyclic_ok = (0..m.size() as u32).filter(|&v| v != m.zero()).all(|v| {
        let size = m.left_cyclic(v).count_ones(..);
        if formula[v as usize] == q(2) {
            size == 2
        } else {
            size == 4
        }
    });
    Ok(check(
        "3",
        "homogeneous weight on the character module of F2[x,y]/(x^2,y^2,xy)",
        hist == expected && formula == axioms && cyclic_ok,
        json!({"value_counts": hist, "axioms_agree": formula == axioms, "cyclic_sizes_ok": cyclic_ok}),
    ))
}

/// Hamming partitions are exchanged by both chi-duals.
pub fn hamming_self_duality(alphabets: &[Bimodule], caps: &Caps) -> Result<Check> {
    let mut rows = Vec::new();
    let mut ok = true;
    for m in alphabets {
        let gc = first_generating_character(m)?;
        for n in 1..=2 {
            let ctx = DualityContext::new(m, &gc, n, caps)?;
            let hm = ctx.hamming_partition();
            let hr = ctx.hamming_partition_ring();
            let mut good = true;
            for side in [DualSide::Left, DualSide::Right] {
                good &= ctx.dual_of_module_partition(&hm, side)? == hr;
                good &= ctx.dual_of_ring_partition(&hr, side)? == hm;
            }
            ok &= good;
            rows.push(json!({"alphabet": m.name(), "n": n, "ok": good}));
        }
    }
    Ok(check(
        "4",
        "Hamming partitions are chi-dual to each other",
        ok,
        json!(rows),
    ))
}

/// Bidual identities and the block-count inequalities on seeded random
/// partitions of `M^n` and `R^n`.
pub fn random_bidual_checks(
    alphabets: &[Bimodule],
    opts: &SuiteOptions,
    caps: &Caps,
) -> Result<Check> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (k, m) in alphabets.iter().enumerate() {
        let gc = first_generating_character(m)?;
        for n in 1..=2 {
            let ctx = DualityContext::new(m, &gc, n, caps)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((k as u64) << 8) ^ n as u64);
            let mut violations = 0;
            for _ in 0..opts.random_partitions {
                let u = ctx.universe();
                let p = random_partition(u, 6, &mut rng);
                let b = ctx.bidual_module(&p)?;
                let d = ctx.character_dual_module(&p)?;
                let l = ctx.dual_of_module_partition(&p, DualSide::Left)?;
                let r = ctx.dual_of_module_partition(&p, DualSide::Right)?;
                let good = ctx.chi_bidual_module(&p, DualSide::Left)? == b
                    && ctx.chi_bidual_module(&p, DualSide::Right)? == b
                    && dual_inequalities(&p, &d, &b)?.holds()
                    && l.block_count() == d.block_count()
                    && r.block_count() == d.block_count();
                let pr = random_partition(u, 6, &mut rng);
                let br = ctx.bidual_ring(&pr)?;
                let dr = ctx.character_dual_ring(&pr)?;
                let good_r = ctx.chi_bidual_ring(&pr, DualSide::Left)? == br
                    && ctx.chi_bidual_ring(&pr, DualSide::Right)? == br
                    && dual_inequalities(&pr, &dr, &br)?.holds();
                if !(good && good_r) {
                    violations += 1;
                }
            }
            ok &= violations == 0;
            rows.push(json!({"alphabet": m.name(), "n": n, "partitions": opts.random_partitions, "violations": violations}));
        }
    }
    Ok(check(
        "5",
        "bidual identity and dual block inequalities on random partitions",
        ok,
        json!(rows),
    ))
}

/// Groups of order at most 64 used for the character checks.
pub fn small_groups() -> Vec<RingSpec> {
    let z = RingSpec::zn;
    let p = RingSpec::product;
    let mut out: Vec<RingSpec> = (2..=64).map(z).collect();
    out.extend([
        p(vec![z(2), z(2)]),
        p(vec![z(2), z(2), z(2)]),
        p(vec![z(2), z(2), z(2), z(2)]),
        p(vec![z(2), z(2), z(2), z(2), z(2), z(2)]),
        p(vec![z(2), z(4)]),
        p(vec![z(4), z(4)]),
        p(vec![z(2), z(2), z(4)]),
        p(vec![z(3), z(3)]),
        p(vec![z(3), z(9)]),
        p(vec![z(2), z(6)]),
        p(vec![z(4), z(8)]),
        p(vec![z(8), z(8)]),
        p(vec![z(4), z(4), z(4)]),
        p(vec![z(2), z(3), z(6)]),
    ]);
    out
}

pub fn structural_checks(corpus: &Corpus, alphabets: &[Bimodule], caps: &Caps) -> Result<Check> {
    let mut detail = serde_json::Map::new();
    let mut ok = true;
    let rings = corpus.ring_tables(caps)?;
    let mut theta = Vec::new();
    let mut frob = Vec::new();
    for r in &rings {
        let t = theta_check(r, caps)?;
        ok &= t;
        theta.push(json!({"ring": r.name(), "ok": t}));
        let f = is_frobenius_ring(r)?;
        let expect = r.name() != "F2[x,y]/(x^2,y^2,x*y)";
        ok &= f == expect;
        frob.push(json!({"ring": r.name(), "frobenius": f}));
    }
    detail.insert("theta".into(), json!(theta));
    detail.insert("is_frobenius".into(), json!(frob));

    let mut ann = Vec::new();
    for m in alphabets {
        let rep = double_annihilator_check(m, caps)?;
        let gcs = find_generating_characters(m);
        let bass = bass_unit_check(m).is_ok();
        let related = generating_characters_unit_related(m, &gcs);
        ok &= rep.passed() && bass && related;
        ann.push(json!({
            "alphabet": m.name(),
            "ring": m.ring().name(),
            "double_annihilator": rep.passed(),
            "left_submodules": rep.left_submodules,
            "generating_characters": gcs.len(),
            "generating_characters_unit_related": related,
        }));
    }
    detail.insert("bimodules".into(), json!(ann));

    let mut groups = Vec::new();
    for spec in small_groups() {
        let r = build_ring(&spec, caps)?;
        let dec = decompose(r.add_table(), r.size())?;
        let cyc = Cyclotomic::new(dec.exponent(), caps.conductor)?;
        let orth = orthogonality_check(&dec, &cyc);
        let dd = double_dual_check(&dec, r.add_table(), caps)?;
        ok &= orth && dd.is_some();
        groups.push(json!({"group": spec.display_name(), "orders": dec.orders(), "orthogonal": orth, "subgroups": dd}));
    }
    detail.insert("groups".into(), json!(groups));
    Ok(check(
        "9",
        "theta bijection, double annihilators, Frobenius detection, character orthogonality, double dual",
        ok,
        Value::Object(detail),
    ))
}

pub fn run_suite(corpus: &Corpus, opts: &SuiteOptions, caps: &Caps) -> Result<SuiteReport> {
    let alphabets = corpus.alphabets(caps)?;
    let mut checks = Vec::new();
    let mut scenarios = Vec::new();

    let e = ex311(caps)?;
    checks.push(check(
        "1",
        "orbit partitions and their chi-duals for the group of matrices (1 r; 0 u) over F2[x,y]/(x^2,y^2,xy)",
        e.passed(),
        json!({"orbit_counts": e.details["orbit_counts"], "nonzero_orbit_counts": e.details["nonzero_orbit_counts"], "failed": e.failed_checks()}),
    ));
    scenarios.push(e);
    checks.push(homogeneous_small_rings(caps)?);
    checks.push(homogeneous_rhat(caps)?);
    checks.push(hamming_self_duality(&alphabets, caps)?);
    checks.push(random_bidual_checks(&alphabets, opts, caps)?);

    let mut rows = Vec::new();
    let mut ok = true;
    for kind in Scenario::ALL.into_iter().filter(|s| s.per_alphabet()) {
        for rep in run_scenario(kind, &alphabets, corpus.n, caps)? {
            if rep.expectation != Expectation::Observe {
                ok &= rep.passed();
            }
            rows.push(json!({
                "scenario": rep.scenario, "ring": rep.ring, "alphabet": rep.alphabet,
                "maps_checked": rep.maps_checked, "extendable": rep.extendable, "passed": rep.passed(),
            }));
            scenarios.push(rep);
        }
    }
    checks.push(check(
        "6",
        "extension scenarios over every corpus alphabet",
        ok,
        json!(rows),
    ));

    let w = wt_n_counterexample(caps)?;
    checks.push(check(
        "7",
        "wt_N over Z24: an injective preserving map on a code with no preserving extension",
        w.passed(),
        json!({"failed": w.failed_checks(), "details": w.details}),
    ));
    scenarios.push(w);

    let subl = run_scenario(Scenario::Sublinear, &[], 0, caps)?;
    checks.push(check(
        "8",
        "F2-linear RT-preserving maps on subspaces of F4^n extend with block lower triangular witnesses",
        subl.iter().all(ScenarioReport::passed),
        json!(subl.iter().map(|r| json!({"n": r.n, "maps_checked": r.maps_checked, "extendable": r.extendable})).collect::<Vec<_>>()),
    ));
    scenarios.extend(subl);

    checks.push(structural_checks(corpus, &alphabets, caps)?);
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        seed: opts.seed,
        checks,
        scenarios,
    })
}
