//! The `frobweight` command line front end.
//!
//! Exit codes: 0 when everything checked holds, 1 when a checked statement
//! fails, 2 on bad input or an exceeded cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::extension::{run_scenario, Scenario, ScenarioReport};
use crate::finring::{build_ring, MatrixR, RingSpec, RingTable};
use crate::frobenius::{
    find_generating_characters, first_generating_character, is_frobenius_ring, Bimodule,
};
use crate::partitions::{
    dual_inequalities, orbit_partition, verify_orbit_duality, ActionSide, ActionSpec, DualSide,
    DualityContext, Partition,
};
use crate::suite::{run_suite, SuiteOptions, DEFAULT_SEED};
use crate::tuples::TupleSpace;
use crate::weights::{homog_axioms_solve, homog_formula_table, Submodule, UnitOrbits, WeightFn};
use crate::{Caps, Elem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "frobweight",
    version,
    about = "Frobenius bimodules, dual partitions and the extension property"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Seed for the random partitions drawn by verify-paper
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest number of matrices or map candidates enumerated in one search
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Corpus file replacing the builtin ring list
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a ring given as a JSON spec
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Orbit partition of M^n under a matrix group
    Orbits(OrbitsArgs),
    /// Character duals of a partition of M^n
    DualPartition(DualArgs),
    /// Evaluate a weight on a vector
    Weight(WeightArgs),
    /// Run an extension scenario and optionally write its report
    Scenario(ScenarioArgs),
    /// Run every check and print one line per criterion
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum RingCmd {
    Info { spec: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    /// the ring as a bimodule over itself
    R,
    /// the character module of the ring
    Rhat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Transpose,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    pub ring: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// JSON list of generator matrices, rows of element labels or indices
    #[arg(long)]
    pub group: PathBuf,
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    pub side: SideArg,
    #[arg(long, value_enum, default_value_t = ModuleKind::R)]
    pub module: ModuleKind,
    /// Also check the orbit duality relations over the character module
    #[arg(long)]
    pub duality: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedPartition {
    Hamming,
    Rt,
    Homogeneous,
    Support,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    pub ring: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ModuleKind::Rhat)]
    pub module: ModuleKind,
    /// JSON list of blocks, each a list of vectors of labels
    #[arg(long, conflicts_with = "weight")]
    pub partition: Option<PathBuf>,
    /// Use the level sets of a weight instead of a partition file
    #[arg(long, value_enum)]
    pub weight: Option<NamedPartition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichWeight {
    Hamming,
    Rt,
    Homogeneous,
    Swc,
    WtN,
    Support,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(value_enum)]
    pub which: WhichWeight,
    pub ring: PathBuf,
    #[arg(long, value_enum, default_value_t = ModuleKind::R)]
    pub module: ModuleKind,
    /// Comma separated element labels or indices
    #[arg(long)]
    pub vector: String,
    /// Unit subgroup for swc (default: all units)
    #[arg(long)]
    pub units: Option<String>,
    /// Generators of the left submodule for wt-n
    #[arg(long)]
    pub submodule: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    pub name: String,
    /// Write the reports as a JSON array
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Restrict to one ring instead of the corpus
    #[arg(long)]
    pub ring: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub module: Option<ModuleKind>,
    /// Code length (default: the corpus length)
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Write the full suite report
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Random partitions per bimodule and length
    #[arg(long, default_value_t = 20)]
    pub partitions: usize,
}

/// Parses `args` and runs the command, writing to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn caps_for(g: &Global) -> Caps {
    let mut caps = Caps::default();
    if let Some(c) = g.cap {
        caps.family = c;
        caps.map_candidates = c;
        caps.group_closure = c;
    }
    caps
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<i32> {
    let caps = caps_for(&cli.global);
    let mut work = || match &cli.command {
        Command::Ring {
            cmd: RingCmd::Info { spec },
        } => ring_info(spec, &caps, out),
        Command::Orbits(a) => orbits(a, &caps, out),
        Command::DualPartition(a) => dual_partition_cmd(a, &caps, out),
        Command::Weight(a) => weight(a, &caps, out),
        Command::Scenario(a) => scenario(a, &cli.global, &caps, out),
        Command::VerifyPaper(a) => verify(a, &cli.global, &caps, out),
    };
    match cli.global.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Invalid(e.to_string()))?
            .install(work),
        None => work(),
    }
}

fn load_ring(path: &Path, caps: &Caps) -> Result<Arc<RingTable>> {
    let spec: RingSpec = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(Arc::new(build_ring(&spec, caps)?))
}

fn module_of(ring: Arc<RingTable>, kind: ModuleKind, caps: &Caps) -> Result<Bimodule> {
    match kind {
        ModuleKind::R => Bimodule::regular(ring),
        ModuleKind::Rhat => Bimodule::rhat(ring, caps),
    }
}

fn emit(out: &mut (dyn Write + Send), v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

/// Splits on commas outside brackets, so labels like `(1,0)` survive.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            parts.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() || !parts.is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// Looks up a label, falling back to a numeric index.
fn parse_elem(labels: &[String], tok: &str) -> Result<Elem> {
    if let Some(i) = labels.iter().position(|l| l == tok) {
        return Ok(i as Elem);
    }
    match tok.parse::<usize>() {
        Ok(i) if i < labels.len() => Ok(i as Elem),
        _ => Err(Error::Invalid(format!("unknown element '{tok}'"))),
    }
}

fn parse_list(labels: &[String], s: &str) -> Result<Vec<Elem>> {
    split_top_level(s)
        .iter()
        .map(|t| parse_elem(labels, t))
        .collect()
}

fn json_elem(labels: &[String], v: &Value) -> Result<Elem> {
    match v {
        Value::String(s) => parse_elem(labels, s),
        Value::Number(n) => n
            .as_u64()
            .filter(|&i| (i as usize) < labels.len())
            .map(|i| i as Elem)
            .ok_or_else(|| Error::Invalid(format!("element index {n} out of range"))),
        other => Err(Error::Invalid(format!("expected an element, got {other}"))),
    }
}

fn json_vector(labels: &[String], v: &Value) -> Result<Vec<Elem>> {
    match v {
        Value::Array(xs) => xs.iter().map(|x| json_elem(labels, x)).collect(),
        Value::String(s) => parse_list(labels, s),
        other => Err(Error::Invalid(format!("expected a vector, got {other}"))),
    }
}

fn parse_matrices(ring: &RingTable, v: &Value) -> Result<Vec<MatrixR>> {
    let mats = v
        .as_array()
        .ok_or_else(|| Error::Invalid("group file must be a JSON list of matrices".into()))?;
    mats.iter()
        .map(|m| {
            let rows = m
                .as_array()
                .ok_or_else(|| Error::Invalid("matrix must be a list of rows".into()))?;
            let rows: Vec<Vec<Elem>> = rows
                .iter()
                .map(|r| json_vector(ring.labels(), r))
                .collect::<Result<_>>()?;
            let refs: Vec<&[Elem]> = rows.iter().map(|r| r.as_slice()).collect();
            MatrixR::from_rows(&refs)
        })
        .collect()
}

fn vector_labels(m: &Bimodule, space: &TupleSpace, x: Elem) -> Vec<String> {
    space
        .decode(x)
        .iter()
        .map(|&c| m.label(c).to_string())
        .collect()
}

fn ring_vector_labels(r: &RingTable, space: &TupleSpace, x: Elem) -> Vec<String> {
    space
        .decode(x)
        .iter()
        .map(|&c| r.label(c).to_string())
        .collect()
}

fn render_blocks(p: &Partition, f: impl Fn(Elem) -> Vec<String>) -> Value {
    json!(p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| f(x)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn ring_info(spec: &Path, caps: &Caps, out: &mut (dyn Write + Send)) -> Result<i32> {
    let r = load_ring(spec, caps)?;
    let frob = is_frobenius_ring(&r)?;
    let gens: Vec<Value> = if frob {
        let m = Bimodule::regular(r.clone())?;
        find_generating_characters(&m)
            .iter()
            .map(|g| json!({"modulus": g.m, "values": g.table}))
            .collect()
    } else {
        vec![]
    };
    let hat = Bimodule::rhat(r.clone(), caps)?;
    emit(
        out,
        &json!({
            "ring": r.name(),
            "size": r.size(),
            "commutative": r.is_commutative(),
            "elements": r.labels(),
            "frobenius": frob,
            "units": r.units().len(),
            "unit_list": r.units().iter().map(|&u| r.label(u)).collect::<Vec<_>>(),
            "generating_characters": gens,
            "character_module": {
                "size": hat.size(),
                "generating_characters": find_generating_characters(&hat).len(),
            },
        }),
    )?;
    Ok(EXIT_OK)
}

fn orbits(a: &OrbitsArgs, caps: &Caps, out: &mut (dyn Write + Send)) -> Result<i32> {
    let r = load_ring(&a.ring, caps)?;
    let gens = parse_matrices(
        &r,
        &serde_json::from_str(&std::fs::read_to_string(&a.group)?)?,
    )?;
    if gens.iter().any(|g| g.rows != a.n || g.cols != a.n) {
        return Err(Error::DimensionMismatch(format!(
            "generators must be {0}x{0}",
            a.n
        )));
    }
    let side = match a.side {
        SideArg::Left => ActionSide::Left,
        SideArg::Right => ActionSide::Right,
        SideArg::Transpose => ActionSide::Transpose,
    };
    let spec = ActionSpec::new(gens.clone(), side);
    let group = spec.closure(&r, caps)?;
    let m = module_of(r.clone(), a.module, caps)?;
    let p = orbit_partition(&m, a.n, &spec, caps)?;
    let space = TupleSpace::new(m.size(), a.n, caps.universe)?;
    let mut report = json!({
        "ring": r.name(),
        "module": m.name(),
        "n": a.n,
        "side": format!("{:?}", a.side).to_lowercase(),
        "group_order": group.len(),
        "orbit_count": p.block_count(),
        "nonzero_orbit_count": p.block_count() - 1,
        "orbits": render_blocks(&p, |x| vector_labels(&m, &space, x)),
    });
    let mut code = EXIT_OK;
    if a.duality {
        let hat = Bimodule::rhat(r.clone(), caps)?;
        let gc = first_generating_character(&hat)?;
        let ctx = DualityContext::new(&hat, &gc, a.n, caps)?;
        let d = verify_orbit_duality(&ctx, &gens, caps)?;
        if !d.all_hold() {
            code = EXIT_VIOLATION;
        }
        report["duality"] = serde_json::to_value(&d)?;
    }
    emit(out, &report)?;
    Ok(code)
}

fn read_partition(path: &Path, m: &Bimodule, space: &TupleSpace) -> Result<Partition> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if v.is_object() {
        let p: Partition = serde_json::from_value(v)?;
        if p.universe() != space.size() {
            return Err(Error::UniverseMismatch(p.universe(), space.size()));
        }
        return Ok(p);
    }
    let blocks = v
        .as_array()
        .ok_or_else(|| Error::Invalid("partition must be a list of blocks".into()))?;
    let mut label = vec![u32::MAX; space.size()];
    for (b, block) in blocks.iter().enumerate() {
        let vs = block
            .as_array()
            .ok_or_else(|| Error::Invalid("block must be a list of vectors".into()))?;
        for vec in vs {
            let x = json_vector(m.labels(), vec)?;
            if x.len() != space.len() {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in M^{}",
                    x.len(),
                    space.len()
                )));
            }
            let slot = &mut label[space.encode(&x) as usize];
            if *slot != u32::MAX {
                return Err(Error::Invalid("blocks overlap".into()));
            }
            *slot = b as u32;
        }
    }
    if label.contains(&u32::MAX) {
        return Err(Error::Invalid("blocks do not cover M^n".into()));
    }
    Ok(Partition::from_labels(label))
}

fn dual_partition_cmd(a: &DualArgs, caps: &Caps, out: &mut (dyn Write + Send)) -> Result<i32> {
    let r = load_ring(&a.ring, caps)?;
    let m = module_of(r.clone(), a.module, caps)?;
    let gc = first_generating_character(&m)?;
    let ctx = DualityContext::new(&m, &gc, a.n, caps)?;
    let space = ctx.space;
    let p = match (&a.partition, a.weight) {
        (Some(path), _) => read_partition(path, &m, &space)?,
        (None, Some(w)) => {
            let wf = match w {
                NamedPartition::Hamming => WeightFn::Hamming,
                NamedPartition::Rt => WeightFn::Rt,
                NamedPartition::Support => WeightFn::Support,
                NamedPartition::Homogeneous => {
                    WeightFn::homogeneous(homog_formula_table(&m, &gc, caps)?)
                }
            };
            wf.partition(&space, m.zero())
        }
        (None, None) => return Err(Error::Invalid("give --partition or --weight".into())),
    };
    let left = ctx.dual_of_module_partition(&p, DualSide::Left)?;
    let right = ctx.dual_of_module_partition(&p, DualSide::Right)?;
    let dual = ctx.character_dual_module(&p)?;
    let bidual = ctx.bidual_module(&p)?;
    let ineq = dual_inequalities(&p, &dual, &bidual)?;
    let chi_ok = ctx.chi_bidual_module(&p, DualSide::Left)? == bidual
        && ctx.chi_bidual_module(&p, DualSide::Right)? == bidual;
    let ring_labels = |x| ring_vector_labels(&r, &space, x);
    emit(
        out,
        &json!({
            "ring": r.name(),
            "module": m.name(),
            "n": a.n,
            "blocks": p.block_count(),
            "left_dual": render_blocks(&left, ring_labels),
            "right_dual": render_blocks(&right, ring_labels),
            "dual_blocks": dual.block_count(),
            "bidual_blocks": bidual.block_count(),
            "reflexive": bidual == p,
            "chi_bidual_matches": chi_ok,
            "inequalities": ineq,
        }),
    )?;
    Ok(if ineq.holds() && chi_ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

/// Left submodule generated by `gens`.
fn left_span(m: &Bimodule, gens: &[Elem]) -> Vec<Elem> {
    let mut member = vec![false; m.size()];
    member[m.zero() as usize] = true;
    let mut elems = vec![m.zero()];
    let mut stack: Vec<Elem> = gens.to_vec();
    while let Some(x) = stack.pop() {
        if member[x as usize] {
            continue;
        }
        member[x as usize] = true;
        elems.push(x);
        for r in m.ring().elements() {
            stack.push(m.lmul(r, x));
        }
        for &y in &elems.clone() {
            stack.push(m.add(x, y));
        }
    }
    elems.sort_unstable();
    elems
}

fn weight(a: &WeightArgs, caps: &Caps, out: &mut (dyn Write + Send)) -> Result<i32> {
    let r = load_ring(&a.ring, caps)?;
    let m = module_of(r.clone(), a.module, caps)?;
    let v = parse_list(m.labels(), &a.vector)?;
    let mut extra = serde_json::Map::new();
    let wf = match a.which {
        WhichWeight::Hamming => WeightFn::Hamming,
        WhichWeight::Rt => WeightFn::Rt,
        WhichWeight::Support => WeightFn::Support,
        WhichWeight::Homogeneous => {
            let table = homog_axioms_solve(&m)?;
            if let Ok(gc) = first_generating_character(&m) {
                let formula = homog_formula_table(&m, &gc, caps)?;
                extra.insert("formula_agrees".into(), json!(formula == table));
            }
            WeightFn::homogeneous(table)
        }
        WhichWeight::Swc => {
            let group = match &a.units {
                Some(s) => parse_list(r.labels(), s)?,
                None => r.units().to_vec(),
            };
            let o = UnitOrbits::new(&m, &group)?;
            extra.insert(
                "orbit_representatives".into(),
                json!(o.reps.iter().map(|&x| m.label(x)).collect::<Vec<_>>()),
            );
            WeightFn::Swc(o)
        }
        WhichWeight::WtN => {
            let gens = parse_list(
                m.labels(),
                a.submodule
                    .as_deref()
                    .ok_or_else(|| Error::Invalid("wt-n needs --submodule".into()))?,
            )?;
            let n = Submodule::new(&m, &left_span(&m, &gens))?;
            extra.insert(
                "submodule".into(),
                json!(n.elements.iter().map(|&x| m.label(x)).collect::<Vec<_>>()),
            );
            WeightFn::WtN(n)
        }
    };
    let mut report = json!({
        "ring": r.name(),
        "module": m.name(),
        "weight": wf.name(),
        "vector": v.iter().map(|&x| m.label(x)).collect::<Vec<_>>(),
        "value": wf.value(&v, m.zero()),
    });
    for (k, x) in extra {
        report[k] = x;
    }
    emit(out, &report)?;
    Ok(EXIT_OK)
}

fn load_corpus(g: &Global) -> Result<Corpus> {
    match &g.corpus {
        Some(p) => Corpus::load(p),
        None => Ok(Corpus::default()),
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_json(path: &Path, v: &impl serde::Serialize) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

fn scenario(
    a: &ScenarioArgs,
    g: &Global,
    caps: &Caps,
    out: &mut (dyn Write + Send),
) -> Result<i32> {
    let kind: Scenario = a.name.parse()?;
    let corpus = load_corpus(g)?;
    let n = a.n.unwrap_or(corpus.n);
    let alphabets = if !kind.per_alphabet() {
        vec![]
    } else if let Some(path) = &a.ring {
        let r = load_ring(path, caps)?;
        match a.module {
            Some(k) => vec![module_of(r, k, caps)?],
            None => {
                let mut v = Vec::new();
                if is_frobenius_ring(&r)? {
                    v.push(Bimodule::regular(r.clone())?);
                }
                v.push(Bimodule::rhat(r, caps)?);
                v
            }
        }
    } else {
        let mut all = corpus.alphabets(caps)?;
        if let Some(k) = a.module {
            all.retain(|m| (m.name() == m.ring().name()) == (k == ModuleKind::R));
        }
        all
    };
    let reports: Vec<ScenarioReport> = run_scenario(kind, &alphabets, n, caps)?;
    for rep in &reports {
        writeln!(
            out,
            "{} {} ring={} alphabet={} n={} codes={} maps={} extendable={} counterexamples={} {}",
            status(rep.passed()),
            rep.scenario,
            rep.ring,
            rep.alphabet,
            rep.n,
            rep.codes,
            rep.maps_checked,
            rep.extendable,
            rep.counterexamples.len(),
            rep.failed_checks().join(","),
        )?;
    }
    if let Some(p) = &a.json {
        write_json(p, &reports)?;
    }
    Ok(if reports.iter().all(ScenarioReport::passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn verify(a: &VerifyArgs, g: &Global, caps: &Caps, out: &mut (dyn Write + Send)) -> Result<i32> {
    let corpus = load_corpus(g)?;
    let opts = SuiteOptions {
        seed: g.seed,
        random_partitions: a.partitions,
    };
    let rep = run_suite(&corpus, &opts, caps)?;
    for c in &rep.checks {
        writeln!(out, "{} [{}] {}", status(c.passed), c.id, c.title)?;
    }
    writeln!(
        out,
        "{}",
        if rep.passed() {
            "all checks passed"
        } else {
            "some checks failed"
        }
    )?;
    if let Some(p) = &a.json {
        write_json(p, &rep)?;
    }
    Ok(if rep.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
