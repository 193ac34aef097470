//! Codes, weight-preserving linear maps, and the search for global
//! matrices extending them.
//!
//! `M^n` is indexed exactly like [`TupleSpace`] with base `|M|`, so an
//! element index of the power bimodule doubles as a coordinate tuple.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{cap_check, Error, Result};
use crate::finring::{
    build_ring, enumerate_group, is_invertible, MatrixFamily, MatrixR, RingSpec, RingTable,
};
use crate::frobenius::{first_generating_character, Bimodule};
use crate::lattice::elements;
use crate::partitions::{
    orbit_partition, upper_unit_group, verify_orbit_duality, ActionSide, ActionSpec, DualSide,
    DualityContext, Partition,
};
use crate::tuples::TupleSpace;
use crate::weights::{homog_axioms_solve, homog_formula_table, Submodule, UnitOrbits, WeightFn};
use crate::{Caps, Elem};

pub const SCHEMA_VERSION: u32 = 1;

/// `M^n` together with `M` and its coordinates.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub m: Bimodule,
    pub n: usize,
    pub mn: Bimodule,
    pub space: TupleSpace,
}

impl Ambient {
    pub fn new(m: &Bimodule, n: usize, caps: &Caps) -> Result<Self> {
        let mn = m.power(n, caps)?;
        let space = TupleSpace::new(m.size(), n, caps.universe)?;
        Ok(Ambient {
            m: m.clone(),
            n,
            mn,
            space,
        })
    }

    pub fn ring(&self) -> &RingTable {
        self.m.ring()
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }

    pub fn label(&self, x: Elem) -> &str {
        self.mn.label(x)
    }

    /// `x A` for a row vector `x` over `M`.
    pub fn apply(&self, x: Elem, a: &MatrixR) -> Elem {
        let v = self.space.decode(x);
        let mut out = vec![self.m.zero(); a.cols];
        for (j, o) in out.iter_mut().enumerate() {
            for (i, &vi) in v.iter().enumerate() {
                *o = self.m.add(*o, self.m.rmul(vi, a.get(i, j)));
            }
        }
        self.space.encode(&out)
    }

    /// `<x, r> = sum_i x_i r_i` in `M`.
    pub fn pair(&self, x: Elem, r: &[Elem]) -> Elem {
        let v = self.space.decode(x);
        v.iter().zip(r).fold(self.m.zero(), |acc, (&xi, &ri)| {
            self.m.add(acc, self.m.rmul(xi, ri))
        })
    }

    pub fn weight_partition(&self, w: &WeightFn) -> Partition {
        w.partition(&self.space, self.m.zero())
    }
}

/// A left submodule of `M^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Code {
    pub n: usize,
    pub generators: Vec<Elem>,
    pub minimal_gens: Vec<Elem>,
    /// sorted
    pub elements: Vec<Elem>,
}

impl Code {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// The code spanned by `gens`, with a generating subset found by greedy
/// removal.
pub fn span_code(amb: &Ambient, gens: &[Elem], caps: &Caps) -> Result<Code> {
    let sys = amb.mn.left_submodules();
    span_with(&sys, amb, gens, caps)
}

fn span_with(
    sys: &crate::lattice::ClosureSystem<'_>,
    amb: &Ambient,
    gens: &[Elem],
    caps: &Caps,
) -> Result<Code> {
    if let Some(&g) = gens.iter().find(|&&g| g as usize >= amb.size()) {
        return Err(Error::Invalid(format!(
            "generator index {g} outside M^{}",
            amb.n
        )));
    }
    let full = sys.close(gens.iter().copied());
    cap_check("code", full.count_ones(..) as u128, caps.code as u128)?;
    let mut minimal: Vec<Elem> = Vec::new();
    for &g in gens {
        if g != amb.mn.zero() && !minimal.contains(&g) {
            minimal.push(g);
        }
    }
    let mut i = 0;
    while i < minimal.len() {
        let rest: Vec<Elem> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &g)| g)
            .collect();
        if sys.close(rest.iter().copied()) == full {
            minimal = rest;
        } else {
            i += 1;
        }
    }
    Ok(Code {
        n: amb.n,
        generators: gens.to_vec(),
        minimal_gens: minimal,
        elements: elements(&full),
    })
}

/// All distinct codes spanned by at most `max_gens` elements, ordered by
/// size and then by element list.
pub fn codes_from_generators(amb: &Ambient, max_gens: usize, caps: &Caps) -> Result<Vec<Code>> {
    let sys = amb.mn.left_submodules();
    let mut seen: BTreeMap<(usize, Vec<Elem>), Code> = BTreeMap::new();
    let size = amb.size() as Elem;
    let mut sets: Vec<Vec<Elem>> = vec![vec![]];
    for k in 1..=max_gens {
        let mut next = Vec::new();
        for s in sets.iter().filter(|s| s.len() == k - 1) {
            let start = s.last().map_or(1, |&l| l + 1);
            for g in start..size {
                let mut t = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        sets.extend(next);
    }
    for s in sets {
        let c = span_with(&sys, amb, &s, caps)?;
        seen.entry((c.len(), c.elements.clone())).or_insert(c);
    }
    Ok(seen.into_values().collect())
}

/// Every code (left submodule of `M^n`).
pub fn all_codes(amb: &Ambient, caps: &Caps) -> Result<Vec<Code>> {
    let sys = amb.mn.left_submodules();
    let subs = sys.enumerate(caps.lattice)?;
    subs.iter()
        .map(|s| {
            let gens = elements(s);
            span_with(&sys, amb, &gens, caps)
        })
        .collect()
}

/// A left linear map on a code, materialized on every element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinMap {
    pub gens: Vec<Elem>,
    pub gen_images: Vec<Elem>,
    pub domain: Vec<Elem>,
    pub images: Vec<Elem>,
}

impl LinMap {
    pub fn image(&self, x: Elem) -> Option<Elem> {
        self.domain.binary_search(&x).ok().map(|i| self.images[i])
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<Elem> = self.images.iter().copied().collect();
        set.len() == self.images.len()
    }

    /// `v -> v A` restricted to `code`.
    pub fn from_matrix(amb: &Ambient, code: &Code, a: &MatrixR) -> LinMap {
        LinMap {
            gens: code.minimal_gens.clone(),
            gen_images: code.minimal_gens.iter().map(|&g| amb.apply(g, a)).collect(),
            domain: code.elements.clone(),
            images: code.elements.iter().map(|&x| amb.apply(x, a)).collect(),
        }
    }

    /// Additivity and left linearity on every pair and scalar.
    pub fn is_linear(&self, amb: &Ambient) -> bool {
        let mn = &amb.mn;
        self.domain.iter().zip(&self.images).all(|(&x, &fx)| {
            self.domain
                .iter()
                .zip(&self.images)
                .all(|(&y, &fy)| self.image(mn.add(x, y)) == Some(mn.add(fx, fy)))
                && amb
                    .ring()
                    .elements()
                    .all(|r| self.image(mn.lmul(r, x)) == Some(mn.lmul(r, fx)))
        })
    }

    pub fn agrees_with(&self, amb: &Ambient, a: &MatrixR) -> bool {
        self.domain
            .iter()
            .zip(&self.images)
            .all(|(&x, &fx)| amb.apply(x, a) == fx)
    }

    pub fn describe(&self, amb: &Ambient) -> Vec<[String; 2]> {
        self.gens
            .iter()
            .zip(&self.gen_images)
            .map(|(&g, &y)| [amb.label(g).to_string(), amb.label(y).to_string()])
            .collect()
    }
}

const UNSET: Elem = Elem::MAX;

/// Every linear map `f: C -> M^n` with `x ~ f(x)` in `pred` for all `x`.
///
/// Images are assigned to the generators one at a time; each assignment
/// is extended to the span `S + Rg` by `c + r g -> f(c) + r y`, which is
/// rejected as soon as two representations of an element disagree or an
/// element leaves its block.
pub fn enumerate_preserving_maps(
    amb: &Ambient,
    code: &Code,
    pred: &Partition,
    caps: &Caps,
) -> Result<Vec<LinMap>> {
    if pred.universe() != amb.size() {
        return Err(Error::UniverseMismatch(pred.universe(), amb.size()));
    }
    let k = code.minimal_gens.len() as u32;
    cap_check(
        "map candidates",
        (amb.size() as u128).saturating_pow(k),
        caps.map_candidates as u128,
    )?;
    let zero = amb.mn.zero();
    let mut img = vec![UNSET; amb.size()];
    if !pred.same_block(zero, zero) {
        return Ok(vec![]);
    }
    img[zero as usize] = zero;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_maps(amb, code, pred, &img, &[zero], &mut chosen, &mut out);
    Ok(out)
}

fn extend_maps(
    amb: &Ambient,
    code: &Code,
    pred: &Partition,
    img: &[Elem],
    members: &[Elem],
    chosen: &mut Vec<Elem>,
    out: &mut Vec<LinMap>,
) {
    let level = chosen.len();
    if level == code.minimal_gens.len() {
        debug_assert_eq!(members.len(), code.len());
        out.push(LinMap {
            gens: code.minimal_gens.clone(),
            gen_images: chosen.clone(),
            domain: code.elements.clone(),
            images: code.elements.iter().map(|&x| img[x as usize]).collect(),
        });
        return;
    }
    let g = code.minimal_gens[level];
    let mn = &amb.mn;
    let block = pred.block_of(g);
    'cand: for y in 0..amb.size() as Elem {
        if pred.block_of(y) != block {
            continue;
        }
        let mut next = img.to_vec();
        let mut grown = Vec::with_capacity(members.len() * 2);
        for &c in members {
            let fc = img[c as usize];
            for r in amb.ring().elements() {
                let x = mn.add(c, mn.lmul(r, g));
                let v = mn.add(fc, mn.lmul(r, y));
                match next[x as usize] {
                    UNSET => {
                        if !pred.same_block(x, v) {
                            continue 'cand;
                        }
                        next[x as usize] = v;
                        grown.push(x);
                    }
                    w if w != v => continue 'cand,
                    _ => {}
                }
            }
        }
        let mut all: Vec<Elem> = members.to_vec();
        all.extend(grown.iter().filter(|x| !members.contains(x)));
        chosen.push(y);
        extend_maps(amb, code, pred, &next, &all, chosen, out);
        chosen.pop();
    }
}

/// Why the members of a family fail to extend a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: String,
    pub family_size: usize,
    /// code word and the number of members first contradicted there
    pub eliminated_by_code: Vec<(String, usize)>,
    pub agreeing: usize,
    /// distinct values of each entry (row-major) among agreeing members
    pub agreeing_entry_values: Vec<Vec<String>>,
    /// agreeing members that fail to preserve the weight, by the first
    /// vector where they fail
    pub eliminated_by_weight: Vec<(String, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GlobalSearch {
    pub witness: Option<MatrixR>,
    pub certificate: Option<Certificate>,
}

/// Searches `family` for `A` with `f(v) = v A` on the domain and, if
/// `preserve` is given, `v ~ v A` on all of `M^n`. Exhausts the family and
/// returns a certificate when there is no such member.
pub fn find_global_matrix(
    amb: &Ambient,
    f: &LinMap,
    family: &[MatrixR],
    family_name: &str,
    preserve: Option<&Partition>,
) -> GlobalSearch {
    let preserves = |a: &MatrixR| -> Option<Elem> {
        let p = preserve?;
        (0..amb.size() as Elem).find(|&v| !p.same_block(v, amb.apply(v, a)))
    };
    for a in family {
        if f.agrees_with(amb, a) && preserves(a).is_none() {
            return GlobalSearch {
                witness: Some(a.clone()),
                certificate: None,
            };
        }
    }
    let mut by_code: BTreeMap<Elem, usize> = BTreeMap::new();
    let mut by_weight: BTreeMap<Elem, usize> = BTreeMap::new();
    let mut values: Vec<BTreeSet<Elem>> = vec![BTreeSet::new(); amb.n * amb.n];
    let mut agreeing = 0;
    for a in family {
        match f
            .domain
            .iter()
            .zip(&f.images)
            .find(|(&x, &fx)| amb.apply(x, a) != fx)
        {
            Some((&x, _)) => *by_code.entry(x).or_default() += 1,
            None => {
                agreeing += 1;
                for (i, &e) in a.entries.iter().enumerate() {
                    values[i].insert(e);
                }
                if let Some(v) = preserves(a) {
                    *by_weight.entry(v).or_default() += 1;
                }
            }
        }
    }
    let ring = amb.ring();
    GlobalSearch {
        witness: None,
        certificate: Some(Certificate {
            family: family_name.to_string(),
            family_size: family.len(),
            eliminated_by_code: by_code
                .into_iter()
                .map(|(x, c)| (amb.label(x).to_string(), c))
                .collect(),
            agreeing,
            agreeing_entry_values: values
                .into_iter()
                .map(|s| s.into_iter().map(|e| ring.label(e).to_string()).collect())
                .collect(),
            eliminated_by_weight: by_weight
                .into_iter()
                .map(|(v, c)| (amb.label(v).to_string(), c))
                .collect(),
        }),
    }
}

/// For each domain element `v`, the index of some `A_v` in `family` with
/// `f(v) = v A_v`, or `None`.
pub fn local_matrices(amb: &Ambient, f: &LinMap, family: &[MatrixR]) -> Vec<Option<usize>> {
    f.domain
        .iter()
        .zip(&f.images)
        .map(|(&x, &fx)| family.iter().position(|a| amb.apply(x, a) == fx))
        .collect()
}

/// For each `r` in `rs`, the index of some `A_r` in `group` with
/// `<f(x), r> = <x A_r, r>` on the whole domain.
pub fn a_r_matrices(
    amb: &Ambient,
    f: &LinMap,
    group: &[MatrixR],
    rs: &[Vec<Elem>],
) -> Result<Vec<usize>> {
    if local_matrices(amb, f, group).iter().any(Option::is_none) {
        return Err(Error::NoLocalRepresentation);
    }
    rs.iter()
        .map(|r| {
            group
                .iter()
                .position(|a| {
                    f.domain
                        .iter()
                        .zip(&f.images)
                        .all(|(&x, &fx)| amb.pair(fx, r) == amb.pair(amb.apply(x, a), r))
                })
                .ok_or(Error::NoLocalRepresentation)
        })
        .collect()
}

/// `A = (A_1 e_1^T, ..., A_n e_n^T)`: column `i` of `A` is column `i` of
/// the matrix found for the `i`-th standard basis vector.
pub fn assemble_from_basis(amb: &Ambient, f: &LinMap, group: &[MatrixR]) -> Result<MatrixR> {
    let ring = amb.ring();
    let n = amb.n;
    let basis: Vec<Vec<Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect();
    let idx = a_r_matrices(amb, f, group, &basis)?;
    let mut a = MatrixR::zero(ring, n, n);
    for (i, &k) in idx.iter().enumerate() {
        for row in 0..n {
            a.set(row, i, group[k].get(row, i));
        }
    }
    Ok(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub code_gens: Vec<String>,
    pub map_images: Vec<[String; 2]>,
    pub eliminated_family_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// What a scenario is expected to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// every preserving map extends
    AllExtend,
    /// some preserving map does not extend
    Counterexample,
    /// nothing is asserted about extendability
    Observe,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub schema_version: u32,
    pub scenario: String,
    pub ring: String,
    pub alphabet: String,
    pub n: usize,
    pub codes: usize,
    pub maps_checked: usize,
    pub extendable: usize,
    pub family: String,
    pub family_size: usize,
    pub expectation: Expectation,
    pub counterexamples: Vec<Counterexample>,
    /// named side conditions, all of which must hold
    pub checks: BTreeMap<String, bool>,
    #[serde(default)]
    pub details: BTreeMap<String, Value>,
}

impl ScenarioReport {
    fn new(scenario: Scenario, ring: &str, alphabet: &str, n: usize) -> Self {
        ScenarioReport {
            schema_version: SCHEMA_VERSION,
            scenario: scenario.name().to_string(),
            ring: ring.to_string(),
            alphabet: alphabet.to_string(),
            n,
            codes: 0,
            maps_checked: 0,
            extendable: 0,
            family: String::new(),
            family_size: 0,
            expectation: Expectation::AllExtend,
            counterexamples: vec![],
            checks: BTreeMap::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        let checks = self.checks.values().all(|&b| b);
        match self.expectation {
            Expectation::AllExtend => {
                checks && self.extendable == self.maps_checked && self.counterexamples.is_empty()
            }
            Expectation::Counterexample => checks && !self.counterexamples.is_empty(),
            Expectation::Observe => checks,
        }
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, &b)| !b)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// injective maps extend to automorphisms
    Injective,
    Hamming,
    Rt,
    SwcUnits,
    SwcTrivial,
    Homogeneous,
    Support,
    /// orbit-preserving maps under a non-monomial group, observed only
    LocalGlobal,
    Ex311,
    WtNCounterexample,
    Sublinear,
}

impl Scenario {
    pub const ALL: [Scenario; 11] = [
        Scenario::Injective,
        Scenario::Hamming,
        Scenario::Rt,
        Scenario::SwcUnits,
        Scenario::SwcTrivial,
        Scenario::Homogeneous,
        Scenario::Support,
        Scenario::LocalGlobal,
        Scenario::Ex311,
        Scenario::WtNCounterexample,
        Scenario::Sublinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Injective => "injective",
            Scenario::Hamming => "hamming",
            Scenario::Rt => "rt",
            Scenario::SwcUnits => "swc-units",
            Scenario::SwcTrivial => "swc-trivial",
            Scenario::Homogeneous => "homogeneous",
            Scenario::Support => "support",
            Scenario::LocalGlobal => "local-global",
            Scenario::Ex311 => "ex311",
            Scenario::WtNCounterexample => "wt-n-counterexample",
            Scenario::Sublinear => "sublinear",
        }
    }

    /// Runs over every corpus alphabet (as opposed to a fixed instance).
    pub fn per_alphabet(self) -> bool {
        !matches!(
            self,
            Scenario::Ex311 | Scenario::WtNCounterexample | Scenario::Sublinear
        )
    }
}

impl std::str::FromStr for Scenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown scenario '{s}'")))
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-code tallies from one predicate and one family.
#[derive(Debug, Default)]
struct CodeTally {
    maps: usize,
    extendable: usize,
    all_injective: bool,
    witnesses_sound: bool,
    counterexamples: Vec<Counterexample>,
    /// generator images of every preserving map
    image_sets: BTreeSet<Vec<Elem>>,
    extra_ok: bool,
}

type Extra<'a> = &'a (dyn Fn(&LinMap) -> bool + Sync);

fn tally_code(
    amb: &Ambient,
    code: &Code,
    pred: &Partition,
    family: &[MatrixR],
    family_name: &str,
    extra: Option<Extra<'_>>,
    caps: &Caps,
) -> Result<CodeTally> {
    let maps = enumerate_preserving_maps(amb, code, pred, caps)?;
    // first family member for each tuple of generator images
    let mut index: HashMap<Vec<Elem>, usize> = HashMap::new();
    for (i, a) in family.iter().enumerate() {
        index
            .entry(code.minimal_gens.iter().map(|&g| amb.apply(g, a)).collect())
            .or_insert(i);
    }
    let mut t = CodeTally {
        all_injective: true,
        witnesses_sound: true,
        extra_ok: true,
        ..Default::default()
    };
    let mut verified: HashSet<usize> = HashSet::new();
    for f in &maps {
        t.maps += 1;
        t.all_injective &= f.is_injective();
        t.image_sets.insert(f.gen_images.clone());
        if let Some(x) = extra {
            t.extra_ok &= x(f);
        }
        match index.get(&f.gen_images) {
            Some(&i) => {
                t.extendable += 1;
                let a = &family[i];
                // witness soundness, independent of the index
                t.witnesses_sound &= f.agrees_with(amb, a);
                if verified.insert(i) {
                    t.witnesses_sound &=
                        (0..amb.size() as Elem).all(|v| pred.same_block(v, amb.apply(v, a)));
                }
            }
            None => {
                let search = find_global_matrix(amb, f, family, family_name, None);
                t.counterexamples.push(Counterexample {
                    code_gens: code
                        .minimal_gens
                        .iter()
                        .map(|&g| amb.label(g).to_string())
                        .collect(),
                    map_images: f.describe(amb),
                    eliminated_family_size: family.len(),
                    certificate: search.certificate,
                });
            }
        }
    }
    Ok(t)
}

struct Totals {
    maps: usize,
    extendable: usize,
    all_injective: bool,
    witnesses_sound: bool,
    extra_ok: bool,
    counterexamples: Vec<Counterexample>,
    image_sets: Vec<BTreeSet<Vec<Elem>>>,
}

fn run_codes(
    amb: &Ambient,
    codes: &[Code],
    pred: &Partition,
    family: &[MatrixR],
    family_name: &str,
    extra: Option<Extra<'_>>,
    caps: &Caps,
) -> Result<Totals> {
    let rows: Vec<CodeTally> = codes
        .par_iter()
        .map(|c| tally_code(amb, c, pred, family, family_name, extra, caps))
        .collect::<Result<_>>()?;
    let mut t = Totals {
        maps: 0,
        extendable: 0,
        all_injective: true,
        witnesses_sound: true,
        extra_ok: true,
        counterexamples: vec![],
        image_sets: vec![],
    };
    for r in rows {
        t.maps += r.maps;
        t.extendable += r.extendable;
        t.all_injective &= r.all_injective;
        t.witnesses_sound &= r.witnesses_sound;
        t.extra_ok &= r.extra_ok;
        t.counterexamples.extend(r.counterexamples);
        t.image_sets.push(r.image_sets);
    }
    Ok(t)
}

fn alphabet_kind(m: &Bimodule) -> &'static str {
    if m.rhat_decomp().is_some() {
        "R^"
    } else {
        "R"
    }
}

/// `Q = {s e_i : s in S}` is a single block of `part` on `R^n`.
fn is_axis_block(space: &TupleSpace, part: &Partition, s: &[Elem]) -> bool {
    let q: BTreeSet<Elem> = (0..space.len())
        .flat_map(|i| s.iter().map(move |&x| space.unit_vector(i, x)))
        .collect();
    let first = part.block_of(*q.iter().next().expect("nonempty"));
    let block: BTreeSet<Elem> = (0..space.size() as Elem)
        .filter(|&y| part.block_of(y) == first)
        .collect();
    block == q
}

/// Runs one of the per-alphabet scenarios for codes of length `n` spanned
/// by at most two generators.
pub fn run_alphabet_scenario(
    kind: Scenario,
    m: &Bimodule,
    n: usize,
    caps: &Caps,
) -> Result<ScenarioReport> {
    let amb = Ambient::new(m, n, caps)?;
    let ring = amb.ring();
    let mut rep = ScenarioReport::new(kind, ring.name(), alphabet_kind(m), n);
    let codes = all_codes(&amb, caps)?;
    rep.codes = codes.len();
    let gc = first_generating_character(m)?;
    let ctx = DualityContext::new(m, &gc, n, caps)?;
    let units = ring.units().to_vec();
    let nonzero: Vec<Elem> = ring.elements().filter(|&r| r != ring.zero()).collect();

    let (pred, family_kind, extra): (
        Partition,
        MatrixFamily,
        Option<Box<dyn Fn(&LinMap) -> bool + Sync + '_>>,
    ) = match kind {
        Scenario::Injective => (
            Partition::from_labels((0..amb.size() as Elem).map(|x| x == amb.mn.zero())),
            MatrixFamily::Gl,
            None,
        ),
        Scenario::Hamming => {
            let p = amb.weight_partition(&WeightFn::Hamming);
            rep.checks
                .insert("partition_reflexive".into(), ctx.is_reflexive_module(&p)?);
            let dual = ctx.dual_of_module_partition(&p, DualSide::Left)?;
            rep.checks.insert(
                "weight_one_is_dual_block".into(),
                is_axis_block(&ctx.space, &dual, &nonzero),
            );
            (p, MatrixFamily::Mon, None)
        }
        Scenario::Rt => {
            let lt = enumerate_group(ring, n, &MatrixFamily::Lt, caps)?;
            let amb2 = amb.clone();
            let extra = move |f: &LinMap| {
                let local = local_matrices(&amb2, f, &lt).iter().all(Option::is_some);
                let assembled = assemble_from_basis(&amb2, f, &lt)
                    .map(|a| a.is_lower_triangular(amb2.ring()) && f.agrees_with(&amb2, &a))
                    .unwrap_or(false);
                local && assembled
            };
            (
                amb.weight_partition(&WeightFn::Rt),
                MatrixFamily::Lt,
                Some(Box::new(extra) as Box<_>),
            )
        }
        Scenario::SwcUnits | Scenario::SwcTrivial => {
            let g = if kind == Scenario::SwcUnits {
                units.clone()
            } else {
                vec![ring.one()]
            };
            let p = amb.weight_partition(&WeightFn::Swc(UnitOrbits::new(m, &g)?));
            let mon = enumerate_group(ring, n, &MatrixFamily::MonSub(g.clone()), caps)?;
            let orbits = orbit_partition(m, n, &ActionSpec::new(mon, ActionSide::Right), caps)?;
            rep.checks
                .insert("swc_is_orbit_partition".into(), orbits == p);
            rep.checks
                .insert("partition_reflexive".into(), ctx.is_reflexive_module(&p)?);
            let dual = ctx.dual_of_module_partition(&p, DualSide::Left)?;
            rep.checks.insert(
                "group_axis_is_dual_block".into(),
                is_axis_block(&ctx.space, &dual, &g),
            );
            rep.checks.insert(
                "swc_refines_hamming".into(),
                p.refines(&amb.weight_partition(&WeightFn::Hamming))?,
            );
            (p, MatrixFamily::MonSub(g), None)
        }
        Scenario::Homogeneous => {
            let table = homog_formula_table(m, &gc, caps)?;
            rep.checks.insert(
                "formula_matches_axioms".into(),
                homog_axioms_solve(m)? == table,
            );
            rep.details.insert(
                "homogeneous_weight".into(),
                json!(table.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
            );
            (
                amb.weight_partition(&WeightFn::homogeneous(table)),
                MatrixFamily::Mon,
                None,
            )
        }
        Scenario::Support => (
            amb.weight_partition(&WeightFn::Support),
            MatrixFamily::Diag,
            None,
        ),
        Scenario::LocalGlobal => {
            if n != 2 {
                return Err(Error::DimensionMismatch(
                    "local-global scenario uses 2x2 matrices".into(),
                ));
            }
            rep.expectation = Expectation::Observe;
            let p = orbit_partition(
                m,
                n,
                &ActionSpec::new(upper_unit_group(ring), ActionSide::Right),
                caps,
            )?;
            // the family is the group itself, built below
            (p, MatrixFamily::All, None)
        }
        _ => {
            return Err(Error::Invalid(format!(
                "{kind} is not a per-alphabet scenario"
            )))
        }
    };

    let family = if kind == Scenario::LocalGlobal {
        ActionSpec::new(upper_unit_group(ring), ActionSide::Right).closure(ring, caps)?
    } else {
        enumerate_group(ring, n, &family_kind, caps)?
    };
    rep.family = if kind == Scenario::LocalGlobal {
        "upper-unit".into()
    } else {
        family_kind.name().to_string()
    };
    rep.family_size = family.len();
    let totals = run_codes(
        &amb,
        &codes,
        &pred,
        &family,
        &rep.family,
        extra.as_deref(),
        caps,
    )?;
    rep.maps_checked = totals.maps;
    rep.extendable = totals.extendable;
    rep.counterexamples = totals.counterexamples;
    rep.checks
        .insert("witnesses_verified".into(), totals.witnesses_sound);
    if kind != Scenario::LocalGlobal && kind != Scenario::Support {
        rep.checks
            .insert("maps_injective".into(), totals.all_injective);
    }
    if kind == Scenario::Rt {
        rep.checks
            .insert("local_and_assembled_lt".into(), totals.extra_ok);
    }
    if kind == Scenario::Homogeneous {
        let ham = amb.weight_partition(&WeightFn::Hamming);
        let mon = enumerate_group(ring, n, &MatrixFamily::Mon, caps)?;
        let h = run_codes(&amb, &codes, &ham, &mon, "mon", None, caps)?;
        let equal = h.image_sets == totals.image_sets;
        rep.checks.insert("same_maps_as_hamming".into(), equal);
        rep.details.insert("hamming_maps".into(), json!(h.maps));
    }
    Ok(rep)
}

/// The orbit-duality example over `F2[x,y]/(x^2,y^2,xy)` with `M = R^`.
pub fn ex311(caps: &Caps) -> Result<ScenarioReport> {
    let ring = Arc::new(build_ring(
        &RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
        caps,
    )?);
    let m = Bimodule::rhat(ring.clone(), caps)?;
    let gc = first_generating_character(&m)?;
    let ctx = DualityContext::new(&m, &gc, 2, caps)?;
    let gens = upper_unit_group(&ring);
    let r = verify_orbit_duality(&ctx, &gens, caps)?;
    let mut rep = ScenarioReport::new(Scenario::Ex311, ring.name(), "R^", 2);
    rep.expectation = Expectation::Observe;
    rep.family = "upper-unit".into();
    rep.family_size = r.group_order;
    let names = ["P(R^2,U)", "P(R^2,U^T)", "P(M^2,U)", "P(M^2,U^T)"];
    for (i, name) in names.iter().enumerate() {
        rep.checks
            .insert(format!("{name} equals its chi-dual"), r.equalities[i]);
        rep.checks
            .insert(format!("{name} refines its chi-dual"), r.containments[i]);
        rep.checks
            .insert(format!("{name} reflexive"), r.reflexive[i]);
    }
    rep.checks.insert(
        "ring not frobenius".into(),
        !crate::frobenius::is_frobenius_ring(&ring)?,
    );
    rep.checks.insert(
        "nonzero orbit counts 17/20/20/17".into(),
        r.nonzero_orbit_counts == [17, 20, 20, 17],
    );
    rep.checks.insert(
        "right orbits on R^2 match left orbits on M^2".into(),
        r.orbit_counts[0] == r.orbit_counts[3] && r.orbit_counts[1] == r.orbit_counts[2],
    );
    rep.details.insert("partitions".into(), json!(names));
    rep.details
        .insert("orbit_counts".into(), json!(r.orbit_counts));
    rep.details
        .insert("nonzero_orbit_counts".into(), json!(r.nonzero_orbit_counts));
    rep.details
        .insert("group_order".into(), json!(r.group_order));
    Ok(rep)
}

/// Outcome of the `wt_N` counterexample over `Z24`.
#[derive(Debug, Clone, Serialize)]
pub struct WtNCounterexample {
    pub f_matrix: MatrixR,
    pub f_invertible: bool,
    pub f_of_3_0: String,
    pub wt_n_of_3_0: usize,
    pub wt_n_of_f_3_0: usize,
    /// first `v` (by index) with `wt_N(v) != wt_N(f(v))`
    pub global_violation: Option<(String, String)>,
    pub code_size: usize,
    pub restriction_preserving: bool,
    pub restriction_injective: bool,
    pub restriction_among_enumerated: bool,
    pub enumerated_maps: usize,
    pub c_values: Vec<String>,
    pub d_values: Vec<String>,
    pub search: GlobalSearch,
}

pub fn wt_n_counterexample_analysis(caps: &Caps) -> Result<WtNCounterexample> {
    let ring = Arc::new(build_ring(&RingSpec::zn(24), caps)?);
    let m = Bimodule::regular(ring.clone())?;
    let amb = Ambient::new(&m, 2, caps)?;
    let el = |s: &str| ring.element(s).expect("Z24 label");
    let vec2 = |a: &str, b: &str| amb.space.encode(&[el(a), el(b)]);
    let n_sub = Submodule::new(&m, &["0", "6", "12", "18"].map(el))?;
    let wt = WeightFn::WtN(n_sub.clone());
    let pred = amb.weight_partition(&wt);
    let a = MatrixR::from_rows(&[&[el("2"), el("1")], &[el("3"), el("1")]])?;
    let f_invertible = is_invertible(&a, &ring, caps)?.is_some();
    let x30 = vec2("3", "0");
    let fx30 = amb.apply(x30, &a);
    let wt_of = |x: Elem| n_sub.wt_n(&amb.space.decode(x));
    let global_violation = (0..amb.size() as Elem)
        .find(|&v| !pred.same_block(v, amb.apply(v, &a)))
        .map(|v| {
            (
                amb.label(v).to_string(),
                amb.label(amb.apply(v, &a)).to_string(),
            )
        });

    let two: Vec<Elem> = (0..24).filter(|y| y % 2 == 0).collect();
    let code = span_code(&amb, &[vec2("0", "2")], caps)?;
    let expected: BTreeSet<Elem> = two.iter().map(|&y| amb.space.encode(&[0, y])).collect();
    if code.elements.iter().copied().collect::<BTreeSet<_>>() != expected {
        return Err(Error::Invalid("code is not {(0,y) : y in (2)}".into()));
    }
    let f = LinMap::from_matrix(&amb, &code, &a);
    let restriction_preserving = f
        .domain
        .iter()
        .zip(&f.images)
        .all(|(&x, &y)| pred.same_block(x, y));
    let maps = enumerate_preserving_maps(&amb, &code, &pred, caps)?;
    let all = enumerate_group(&ring, 2, &MatrixFamily::All, caps)?;
    let search = find_global_matrix(&amb, &f, &all, "all", Some(&pred));
    let (c_values, d_values) = match &search.certificate {
        Some(c) => (
            c.agreeing_entry_values[2].clone(),
            c.agreeing_entry_values[3].clone(),
        ),
        None => (vec![], vec![]),
    };
    Ok(WtNCounterexample {
        f_matrix: a,
        f_invertible,
        f_of_3_0: amb.label(fx30).to_string(),
        wt_n_of_3_0: wt_of(x30),
        wt_n_of_f_3_0: wt_of(fx30),
        global_violation,
        code_size: code.len(),
        restriction_preserving,
        restriction_injective: f.is_injective(),
        restriction_among_enumerated: maps.contains(&f),
        enumerated_maps: maps.len(),
        c_values,
        d_values,
        search,
    })
}

pub fn wt_n_counterexample(caps: &Caps) -> Result<ScenarioReport> {
    let r = wt_n_counterexample_analysis(caps)?;
    let mut rep = ScenarioReport::new(Scenario::WtNCounterexample, "Z24", "R", 2);
    rep.expectation = Expectation::Counterexample;
    rep.codes = 1;
    rep.maps_checked = 1;
    rep.family = "all".into();
    rep.family_size = r.search.certificate.as_ref().map_or(0, |c| c.family_size);
    rep.extendable = usize::from(r.search.witness.is_some());
    rep.checks.insert("f invertible".into(), r.f_invertible);
    rep.checks
        .insert("f(3,0) = (6,3)".into(), r.f_of_3_0 == "(6,3)");
    rep.checks.insert(
        "f not wt_N-preserving on R^2".into(),
        r.global_violation.is_some(),
    );
    rep.checks.insert("|C| = 12".into(), r.code_size == 12);
    rep.checks
        .insert("f|C wt_N-preserving".into(), r.restriction_preserving);
    rep.checks
        .insert("f|C injective".into(), r.restriction_injective);
    rep.checks.insert(
        "f|C among enumerated maps".into(),
        r.restriction_among_enumerated,
    );
    rep.checks
        .insert("c in {3,15}".into(), r.c_values == ["3", "15"]);
    rep.checks
        .insert("d in {1,13}".into(), r.d_values == ["1", "13"]);
    rep.checks.insert(
        "all 331776 matrices searched".into(),
        rep.family_size == 331_776,
    );
    if r.search.witness.is_none() {
        rep.counterexamples.push(Counterexample {
            code_gens: vec!["(0,2)".into()],
            map_images: vec![["(0,2)".into(), "(6,2)".into()]],
            eliminated_family_size: rep.family_size,
            certificate: r.search.certificate.clone(),
        });
    }
    rep.details.insert("wt_N(3,0)".into(), json!(r.wt_n_of_3_0));
    rep.details
        .insert("wt_N(f(3,0))".into(), json!(r.wt_n_of_f_3_0));
    rep.details
        .insert("global_violation".into(), json!(r.global_violation));
    rep.details
        .insert("enumerated_maps".into(), json!(r.enumerated_maps));
    Ok(rep)
}

/// RT-preserving `F_q`-linear maps on subspaces of `F_{q^r}^n`.
///
/// `F_{q^r}` is built from `poly`; its elements are indexed by their
/// coordinate digits in the polynomial basis, so `F_{q^r}^n` and
/// `F_q^{rn}` share element indices. Witnesses are sought among
/// invertible block lower triangular matrices with `r x r` blocks.
pub fn sublinear_rt_check(q: u32, poly: &[u32], n: usize, caps: &Caps) -> Result<ScenarioReport> {
    let r = poly.len() - 1;
    let big = build_ring(&RingSpec::gf(q, poly), caps)?;
    let base = Arc::new(build_ring(&RingSpec::zn(q), caps)?);
    let fq = Bimodule::regular(base.clone())?;
    let amb = Ambient::new(&fq, r * n, caps)?;
    let digits = TupleSpace::new(q as usize, r, caps.universe)?;
    let mut rep = ScenarioReport::new(Scenario::Sublinear, &format!("F{q}"), big.name(), n);
    // phi: polynomial-basis digits; must be additive
    let phi_additive = big.elements().all(|a| {
        big.elements().all(|b| {
            let (x, y) = (digits.decode(a), digits.decode(b));
            let s: Vec<Elem> = x.iter().zip(&y).map(|(&u, &v)| base.add(u, v)).collect();
            digits.encode(&s) == big.add(a, b)
        })
    });
    rep.checks.insert("phi additive".into(), phi_additive);
    let big_space = TupleSpace::new(big.size(), n, caps.universe)?;
    let pred = WeightFn::Rt.partition(&big_space, big.zero());
    let codes = all_codes(&amb, caps)?;
    rep.codes = codes.len();
    let family_kind = MatrixFamily::BlockLt { block: r };
    let family = enumerate_group(&base, r * n, &family_kind, caps)?;
    rep.family = family_kind.name().to_string();
    rep.family_size = family.len();
    let totals = run_codes(&amb, &codes, &pred, &family, &rep.family, None, caps)?;
    rep.maps_checked = totals.maps;
    rep.extendable = totals.extendable;
    rep.counterexamples = totals.counterexamples;
    rep.checks
        .insert("witnesses_verified".into(), totals.witnesses_sound);
    rep.checks
        .insert("maps_injective".into(), totals.all_injective);

    if n == 1 && q == 2 && r == 2 {
        // x -> x^2 is F2-linear and injective but not F4-linear
        let frob: Vec<Elem> = big.elements().map(|x| big.mul(x, x)).collect();
        let f4_linear = big
            .elements()
            .any(|a| big.elements().all(|x| big.mul(x, a) == frob[x as usize]));
        let full = span_code(&amb, &(0..amb.size() as Elem).collect::<Vec<_>>(), caps)?;
        let f = LinMap {
            gens: full.minimal_gens.clone(),
            gen_images: full
                .minimal_gens
                .iter()
                .map(|&g| frob[g as usize])
                .collect(),
            domain: full.elements.clone(),
            images: full.elements.iter().map(|&x| frob[x as usize]).collect(),
        };
        rep.checks
            .insert("frobenius map F2-linear".into(), f.is_linear(&amb));
        rep.checks
            .insert("frobenius map not F4-linear".into(), !f4_linear);
        let w = find_global_matrix(&amb, &f, &family, "block-lt", Some(&pred)).witness;
        rep.checks
            .insert("frobenius map has block witness".into(), w.is_some());
        if let Some(w) = w {
            rep.details
                .insert("frobenius_witness".into(), json!(w.render(&base)));
        }
    }
    if n == 2 {
        // a second coordinate map: swap the two digits of each coordinate
        let perm: Vec<Elem> = (0..amb.size() as Elem)
            .map(|x| {
                let v = amb.space.decode(x);
                let w: Vec<Elem> = v.chunks(r).flat_map(|c| c.iter().rev().copied()).collect();
                amb.space.encode(&w)
            })
            .collect();
        let pred2 = pred.pull_back(&perm);
        let other = run_codes(&amb, &codes, &pred2, &family, &rep.family, None, caps)?;
        rep.details.insert(
            "second_basis".into(),
            json!({"maps_checked": other.maps, "extendable": other.extendable}),
        );
    }
    Ok(rep)
}

/// Runs a scenario on the given alphabets (ignored for fixed instances).
pub fn run_scenario(
    kind: Scenario,
    alphabets: &[Bimodule],
    n: usize,
    caps: &Caps,
) -> Result<Vec<ScenarioReport>> {
    match kind {
        Scenario::Ex311 => Ok(vec![ex311(caps)?]),
        Scenario::WtNCounterexample => Ok(vec![wt_n_counterexample(caps)?]),
        Scenario::Sublinear => Ok(vec![
            sublinear_rt_check(2, &[1, 1, 1], 1, caps)?,
            sublinear_rt_check(2, &[1, 1, 1], 2, caps)?,
        ]),
        _ => alphabets
            .iter()
            .map(|m| run_alphabet_scenario(kind, m, n, caps))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn regular(spec: RingSpec) -> Bimodule {
        Bimodule::regular(Arc::new(build_ring(&spec, &caps()).unwrap())).unwrap()
    }

    #[test]
    fn span_basics() {
        let amb = Ambient::new(&regular(RingSpec::zn(4)), 2, &caps()).unwrap();
        let zero = span_code(&amb, &[], &caps()).unwrap();
        assert_eq!(zero.elements, vec![0]);
        let e = [amb.space.unit_vector(0, 1), amb.space.unit_vector(1, 1)];
        let full = span_code(&amb, &e, &caps()).unwrap();
        assert_eq!(full.len(), 16);
        assert_eq!(full.minimal_gens.len(), 2);
        // (2,0) is redundant next to (1,0)
        let c = span_code(
            &amb,
            &[amb.space.encode(&[2, 0]), amb.space.encode(&[1, 0])],
            &caps(),
        )
        .unwrap();
        assert_eq!(c.minimal_gens, vec![amb.space.encode(&[1, 0])]);
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn zero_code_has_one_map() {
        let amb = Ambient::new(&regular(RingSpec::zn(3)), 2, &caps()).unwrap();
        let c = span_code(&amb, &[], &caps()).unwrap();
        let p = amb.weight_partition(&WeightFn::Hamming);
        let maps = enumerate_preserving_maps(&amb, &c, &p, &caps()).unwrap();
        assert_eq!(maps.len(), 1);
        let id = MatrixR::identity(amb.ring(), 2);
        assert_eq!(local_matrices(&amb, &maps[0], &[id]), vec![Some(0)]);
    }

    #[test]
    fn hamming_maps_on_f2_squared_are_monomial() {
        let amb = Ambient::new(&regular(RingSpec::zn(2)), 2, &caps()).unwrap();
        let full = span_code(&amb, &[1, 2], &caps()).unwrap();
        let p = amb.weight_partition(&WeightFn::Hamming);
        let maps = enumerate_preserving_maps(&amb, &full, &p, &caps()).unwrap();
        assert_eq!(maps.len(), 2);
        let mon = enumerate_group(amb.ring(), 2, &MatrixFamily::Mon, &caps()).unwrap();
        let from_mon: BTreeSet<Vec<Elem>> = mon
            .iter()
            .map(|a| LinMap::from_matrix(&amb, &full, a).images)
            .collect();
        let found: BTreeSet<Vec<Elem>> = maps.iter().map(|f| f.images.clone()).collect();
        assert_eq!(found, from_mon);
        assert!(maps.iter().all(|f| f.is_linear(&amb)));
    }

    #[test]
    fn rt_maps_on_full_space_are_lower_triangular() {
        for spec in [RingSpec::zn(3), RingSpec::zn(4)] {
            let amb = Ambient::new(&regular(spec), 2, &caps()).unwrap();
            let full = span_code(
                &amb,
                &[amb.space.unit_vector(0, 1), amb.space.unit_vector(1, 1)],
                &caps(),
            )
            .unwrap();
            let p = amb.weight_partition(&WeightFn::Rt);
            let maps = enumerate_preserving_maps(&amb, &full, &p, &caps()).unwrap();
            let lt = enumerate_group(amb.ring(), 2, &MatrixFamily::Lt, &caps()).unwrap();
            assert_eq!(maps.len(), lt.len());
        }
    }

    #[test]
    fn identity_map_is_found() {
        let amb = Ambient::new(&regular(RingSpec::zn(4)), 2, &caps()).unwrap();
        let c = span_code(&amb, &[amb.space.encode(&[1, 2])], &caps()).unwrap();
        let id = MatrixR::identity(amb.ring(), 2);
        let f = LinMap::from_matrix(&amb, &c, &id);
        let gl = enumerate_group(amb.ring(), 2, &MatrixFamily::Gl, &caps()).unwrap();
        let w = find_global_matrix(&amb, &f, &gl, "gl", None)
            .witness
            .unwrap();
        assert!(f.agrees_with(&amb, &w));
        let idx = a_r_matrices(
            &amb,
            &f,
            std::slice::from_ref(&id),
            &[vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(idx, vec![0, 0]);
        assert_eq!(
            assemble_from_basis(&amb, &f, std::slice::from_ref(&id)).unwrap(),
            id
        );
    }

    #[test]
    fn a_r_for_monomial_map_over_f3() {
        let amb = Ambient::new(&regular(RingSpec::zn(3)), 2, &caps()).unwrap();
        let c = span_code(&amb, &[amb.space.encode(&[1, 2])], &caps()).unwrap();
        let mon = enumerate_group(amb.ring(), 2, &MatrixFamily::Mon, &caps()).unwrap();
        let swap_scale = MatrixR::from_rows(&[&[0, 2], &[1, 0]]).unwrap();
        let f = LinMap::from_matrix(&amb, &c, &swap_scale);
        let rs: Vec<Vec<Elem>> = amb.space.iter().map(|x| amb.space.decode(x)).collect();
        assert_eq!(a_r_matrices(&amb, &f, &mon, &rs).unwrap().len(), 9);
        let a = assemble_from_basis(&amb, &f, &mon).unwrap();
        assert!(f.agrees_with(&amb, &a));
        // a map not given pointwise by monomial matrices is rejected
        let g = LinMap::from_matrix(&amb, &c, &MatrixR::from_rows(&[&[1, 1], &[0, 1]]).unwrap());
        assert!(matches!(
            a_r_matrices(&amb, &g, &mon, &rs),
            Err(Error::NoLocalRepresentation)
        ));
    }

    #[test]
    fn map_enumeration_cap() {
        let amb = Ambient::new(&regular(RingSpec::zn(4)), 2, &caps()).unwrap();
        let c = span_code(&amb, &[1, 4], &caps()).unwrap();
        let tight = Caps {
            map_candidates: 10,
            ..caps()
        };
        let p = amb.weight_partition(&WeightFn::Hamming);
        assert!(matches!(
            enumerate_preserving_maps(&amb, &c, &p, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn hamming_scenario_small() {
        let rep = run_alphabet_scenario(Scenario::Hamming, &regular(RingSpec::zn(4)), 2, &caps())
            .unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.maps_checked > 0);
    }

    #[test]
    fn scenario_names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(s.name().parse::<Scenario>().unwrap(), s);
        }
    }
}
