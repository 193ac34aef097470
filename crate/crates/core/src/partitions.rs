//! Partitions of `R^n` and `M^n`, their character duals, and orbit
//! partitions of matrix groups.
//!
//! Every dual in this module is an instance of one construction: given a
//! partition `P` of a set `X`, a set `Y` and a pairing `e: X x Y -> Z_m`,
//! two points of `Y` are equivalent iff for every block `P_k` the sums
//! `sum_{x in P_k} zeta_m^{e(x,y)}` agree exactly in `Z[zeta_m]`.

use std::collections::HashMap;
use std::hash::Hash;

use petgraph::unionfind::UnionFind;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::{char_eval, decompose, AbelianDecomp, Cyclotomic};
use crate::error::{Error, Result};
use crate::finring::{group_closure, is_invertible, MatrixR, RingTable};
use crate::frobenius::{Bimodule, GenChar};
use crate::tuples::TupleSpace;
use crate::{Caps, Elem};

/// A partition of `0..universe` with blocks numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    block_of: Vec<u32>,
    blocks: usize,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    universe: usize,
    block_of: Vec<u32>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        if r.block_of.len() != r.universe {
            return Err(Error::UniverseMismatch(r.universe, r.block_of.len()));
        }
        Ok(Partition::from_labels(r.block_of))
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr {
            universe: p.block_of.len(),
            block_of: p.block_of,
        }
    }
}

impl Partition {
    /// Canonical partition grouping equal labels.
    pub fn from_labels<K: Hash + Eq>(labels: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, u32> = HashMap::new();
        let block_of: Vec<u32> = labels
            .into_iter()
            .map(|k| {
                let next = ids.len() as u32;
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition {
            blocks: ids.len(),
            block_of,
        }
    }

    pub fn singletons(universe: usize) -> Self {
        Partition {
            block_of: (0..universe as u32).collect(),
            blocks: universe,
        }
    }

    pub fn whole(universe: usize) -> Self {
        Partition {
            block_of: vec![0; universe],
            blocks: usize::from(universe > 0),
        }
    }

    pub fn universe(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, x: Elem) -> u32 {
        self.block_of[x as usize]
    }

    pub fn labels(&self) -> &[u32] {
        &self.block_of
    }

    pub fn same_block(&self, x: Elem, y: Elem) -> bool {
        self.block_of[x as usize] == self.block_of[y as usize]
    }

    /// Blocks as sorted element lists, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(x as Elem);
        }
        out
    }

    /// `true` iff every block of `self` lies inside a block of `q`.
    pub fn refines(&self, q: &Partition) -> Result<bool> {
        if self.universe() != q.universe() {
            return Err(Error::UniverseMismatch(self.universe(), q.universe()));
        }
        let mut image: Vec<Option<u32>> = vec![None; self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            let t = q.block_of[x];
            match image[b as usize] {
                None => image[b as usize] = Some(t),
                Some(s) if s != t => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }

    /// Relabels the universe: element `x` of the result is element `map[x]`
    /// of `self`.
    pub fn pull_back(&self, map: &[Elem]) -> Partition {
        Partition::from_labels(map.iter().map(|&y| self.block_of[y as usize]))
    }
}

/// Seeded random partition with at most `max_blocks` blocks.
pub fn random_partition<R: Rng>(universe: usize, max_blocks: usize, rng: &mut R) -> Partition {
    let k = rng.gen_range(1..=max_blocks.clamp(1, universe.max(1)));
    Partition::from_labels((0..universe).map(|_| rng.gen_range(0..k)))
}

/// A pairing `X x Y -> Z_m` between tuple spaces, given coordinatewise:
/// `e(x, y) = sum_i table[x_i][y_i] mod m`.
#[derive(Debug, Clone)]
pub struct Pairing {
    pub xs: TupleSpace,
    pub ys: TupleSpace,
    table: Vec<u32>,
    m: u32,
}

impl Pairing {
    pub fn new(xs: TupleSpace, ys: TupleSpace, table: Vec<u32>, m: u32) -> Self {
        assert_eq!(table.len(), xs.base() * ys.base());
        assert_eq!(xs.len(), ys.len());
        Pairing { xs, ys, table, m }
    }

    pub fn transposed(&self) -> Pairing {
        let (bx, by) = (self.xs.base(), self.ys.base());
        let mut t = vec![0; bx * by];
        for a in 0..bx {
            for b in 0..by {
                t[b * bx + a] = self.table[a * by + b];
            }
        }
        Pairing::new(self.ys, self.xs, t, self.m)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn eval(&self, x: &[Elem], y: &[Elem]) -> u32 {
        let by = self.ys.base();
        x.iter().zip(y).fold(0, |acc, (&a, &b)| {
            (acc + self.table[a as usize * by + b as usize]) % self.m
        })
    }
}

/// Dual of `p` (a partition of the `X` side) as a partition of `Y`.
pub fn pairing_dual(p: &Partition, pairing: &Pairing, cyc: &Cyclotomic) -> Result<Partition> {
    if p.universe() != pairing.xs.size() {
        return Err(Error::UniverseMismatch(p.universe(), pairing.xs.size()));
    }
    assert_eq!(cyc.m() % pairing.m, 0);
    let scale = (cyc.m() / pairing.m) as usize;
    let mm = cyc.m() as usize;
    let n = pairing.xs.len();
    let xs: Vec<Vec<Elem>> = pairing.xs.iter().map(|x| pairing.xs.decode(x)).collect();
    let deg = cyc.degree();
    let keys: Vec<Vec<i64>> = (0..pairing.ys.size() as Elem)
        .into_par_iter()
        .map(|y| {
            let yv = pairing.ys.decode(y);
            let mut hist = vec![0i64; p.block_count() * mm];
            for (x, xv) in xs.iter().enumerate() {
                let e = if n == 0 {
                    0
                } else {
                    pairing.eval(xv, &yv) as usize * scale
                };
                hist[p.block_of[x] as usize * mm + e] += 1;
            }
            let mut key = vec![0i64; p.block_count() * deg];
            for k in 0..p.block_count() {
                cyc.reduce_histogram_into(
                    &hist[k * mm..(k + 1) * mm],
                    &mut key[k * deg..(k + 1) * deg],
                );
            }
            key
        })
        .collect();
    Ok(Partition::from_labels(keys))
}

/// Character table of a group as a coordinate pairing table: entry
/// `[a][psi]` is the exponent of `psi(a)`.
fn character_table(dec: &AbelianDecomp) -> Vec<u32> {
    let s = dec.size();
    let mut t = vec![0; s * s];
    for psi in 0..s {
        let chi = dec.character(psi);
        for a in 0..s {
            t[a * s + psi] = char_eval(&chi, a as Elem, dec);
        }
    }
    t
}

/// Dual partition of a partition of the group `A` described by `dec`, as a
/// partition of its characters (indexed as in `dec`).
pub fn dual_partition(p: &Partition, dec: &AbelianDecomp, caps: &Caps) -> Result<Partition> {
    let sp = TupleSpace::new(dec.size(), 1, caps.universe)?;
    let cyc = Cyclotomic::new(dec.exponent(), caps.conductor)?;
    pairing_dual(
        p,
        &Pairing::new(sp, sp, character_table(dec), dec.exponent()),
        &cyc,
    )
}

/// The bidual of a partition of `A`, read back on `A`.
pub fn bidual_partition(p: &Partition, dec: &AbelianDecomp, caps: &Caps) -> Result<Partition> {
    let sp = TupleSpace::new(dec.size(), 1, caps.universe)?;
    let cyc = Cyclotomic::new(dec.exponent(), caps.conductor)?;
    let pairing = Pairing::new(sp, sp, character_table(dec), dec.exponent());
    let d = pairing_dual(p, &pairing, &cyc)?;
    pairing_dual(&d, &pairing.transposed(), &cyc)
}

/// Which of the two character dualities to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualSide {
    Left,
    Right,
}

/// Duality data for `R^n` and `M^n` with a fixed generating character.
#[derive(Debug, Clone)]
pub struct DualityContext<'a> {
    pub module: &'a Bimodule,
    pub gc: &'a GenChar,
    pub n: usize,
    /// `R^n` and `M^n` (same size)
    pub space: TupleSpace,
    cyc: Cyclotomic,
    /// `[r][v] = chi(r v)`
    rv: Vec<u32>,
    /// `[r][v] = chi(v r)`
    vr: Vec<u32>,
    ring_dec: AbelianDecomp,
}

impl<'a> DualityContext<'a> {
    pub fn new(module: &'a Bimodule, gc: &'a GenChar, n: usize, caps: &Caps) -> Result<Self> {
        let ring = module.ring();
        let q = ring.size();
        if module.size() != q {
            return Err(Error::NotGenerating);
        }
        let space = TupleSpace::new(q, n, caps.universe)?;
        let ring_dec = decompose(ring.add_table(), q)?;
        let m = num_integer::lcm(gc.m, ring_dec.exponent().max(module.decomp().exponent()));
        let cyc = Cyclotomic::new(m, caps.conductor)?;
        let mut rv = vec![0; q * q];
        let mut vr = vec![0; q * q];
        for r in ring.elements() {
            for v in 0..q as Elem {
                rv[r as usize * q + v as usize] = gc.eval(module.lmul(r, v));
                vr[r as usize * q + v as usize] = gc.eval(module.rmul(v, r));
            }
        }
        Ok(DualityContext {
            module,
            gc,
            n,
            space,
            cyc,
            rv,
            vr,
            ring_dec,
        })
    }

    pub fn universe(&self) -> usize {
        self.space.size()
    }

    fn ring_to_module(&self, table: &[u32]) -> Pairing {
        Pairing::new(self.space, self.space, table.to_vec(), self.gc.m)
    }

    /// Dual of a partition of `R^n`: the partition of `M^n` grouping `v` by
    /// block sums of `chi(<r,v>)` (left) or `chi(<v,r>)` (right).
    pub fn dual_of_ring_partition(&self, p: &Partition, side: DualSide) -> Result<Partition> {
        let t = match side {
            DualSide::Left => &self.rv,
            DualSide::Right => &self.vr,
        };
        pairing_dual(p, &self.ring_to_module(t), &self.cyc)
    }

    /// Dual of a partition of `M^n`: the partition of `R^n` grouping `r` by
    /// block sums of `chi(<v,r>)` (left) or `chi(<r,v>)` (right).
    pub fn dual_of_module_partition(&self, q: &Partition, side: DualSide) -> Result<Partition> {
        let t = match side {
            DualSide::Left => &self.vr,
            DualSide::Right => &self.rv,
        };
        pairing_dual(q, &self.ring_to_module(t).transposed(), &self.cyc)
    }

    fn module_char_pairing(&self) -> Pairing {
        Pairing::new(
            self.space,
            self.space,
            character_table(self.module.decomp()),
            self.module.decomp().exponent(),
        )
    }

    fn ring_char_pairing(&self) -> Pairing {
        Pairing::new(
            self.space,
            self.space,
            character_table(&self.ring_dec),
            self.ring_dec.exponent(),
        )
    }

    /// Abstract dual of a partition of `M^n`, on tuples of characters of `M`.
    pub fn character_dual_module(&self, p: &Partition) -> Result<Partition> {
        pairing_dual(p, &self.module_char_pairing(), &self.cyc)
    }

    /// Abstract bidual of a partition of `M^n`, read back on `M^n`.
    pub fn bidual_module(&self, p: &Partition) -> Result<Partition> {
        let pr = self.module_char_pairing();
        pairing_dual(
            &pairing_dual(p, &pr, &self.cyc)?,
            &pr.transposed(),
            &self.cyc,
        )
    }

    pub fn character_dual_ring(&self, p: &Partition) -> Result<Partition> {
        pairing_dual(p, &self.ring_char_pairing(), &self.cyc)
    }

    pub fn bidual_ring(&self, p: &Partition) -> Result<Partition> {
        let pr = self.ring_char_pairing();
        pairing_dual(
            &pairing_dual(p, &pr, &self.cyc)?,
            &pr.transposed(),
            &self.cyc,
        )
    }

    /// `[chi,r]`-dual of the `[chi,l]`-dual of a partition of `M^n`.
    pub fn chi_bidual_module(&self, p: &Partition, first: DualSide) -> Result<Partition> {
        let second = match first {
            DualSide::Left => DualSide::Right,
            DualSide::Right => DualSide::Left,
        };
        self.dual_of_ring_partition(&self.dual_of_module_partition(p, first)?, second)
    }

    pub fn chi_bidual_ring(&self, p: &Partition, first: DualSide) -> Result<Partition> {
        let second = match first {
            DualSide::Left => DualSide::Right,
            DualSide::Right => DualSide::Left,
        };
        self.dual_of_module_partition(&self.dual_of_ring_partition(p, first)?, second)
    }

    pub fn is_reflexive_module(&self, p: &Partition) -> Result<bool> {
        Ok(self.chi_bidual_module(p, DualSide::Left)? == *p)
    }

    pub fn is_reflexive_ring(&self, p: &Partition) -> Result<bool> {
        Ok(self.chi_bidual_ring(p, DualSide::Left)? == *p)
    }

    /// Hamming partition of `R^n` / `M^n` (same indexing, zero is index 0).
    pub fn hamming_partition(&self) -> Partition {
        let zero = self.module.zero();
        Partition::from_labels(
            self.space
                .iter()
                .map(|x| self.space.decode(x).iter().filter(|&&c| c != zero).count()),
        )
    }

    pub fn hamming_partition_ring(&self) -> Partition {
        let zero = self.module.ring().zero();
        Partition::from_labels(
            self.space
                .iter()
                .map(|x| self.space.decode(x).iter().filter(|&&c| c != zero).count()),
        )
    }
}

/// Outcome of the inequalities relating a partition to its dual and bidual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualInequalities {
    pub blocks: usize,
    pub dual_blocks: usize,
    pub bidual_refines: bool,
    /// `|P| = |P^|` exactly when the bidual is `P`
    pub equality_iff_reflexive: bool,
}

impl DualInequalities {
    pub fn holds(&self) -> bool {
        self.blocks <= self.dual_blocks && self.bidual_refines && self.equality_iff_reflexive
    }
}

pub fn dual_inequalities(
    p: &Partition,
    dual: &Partition,
    bidual: &Partition,
) -> Result<DualInequalities> {
    let refl = bidual == p;
    Ok(DualInequalities {
        blocks: p.block_count(),
        dual_blocks: dual.block_count(),
        bidual_refines: bidual.refines(p)?,
        equality_iff_reflexive: (p.block_count() == dual.block_count()) == refl,
    })
}

/// How a matrix `U` moves a row vector `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionSide {
    /// `v -> v U`, using the right action on the module
    Right,
    /// `v -> (U v^T)^T`, using the left action on the module
    Left,
    /// `v -> v U^T`, using the right action; agrees with `Left` when the
    /// two actions on the module coincide
    Transpose,
}

/// Generators of a matrix group and the side on which it acts.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub generators: Vec<MatrixR>,
    pub side: ActionSide,
}

impl ActionSpec {
    pub fn new(generators: Vec<MatrixR>, side: ActionSide) -> Self {
        ActionSpec { generators, side }
    }

    /// Checks every generator is invertible and returns the full group.
    pub fn closure(&self, ring: &RingTable, caps: &Caps) -> Result<Vec<MatrixR>> {
        for g in &self.generators {
            if is_invertible(g, ring, caps)?.is_none() {
                return Err(Error::Invalid(format!(
                    "generator {} is not invertible",
                    g.render(ring)
                )));
            }
        }
        group_closure(&self.generators, ring, caps)
    }
}

/// `v U` (right) or `(U v^T)^T` (left) or `v U^T` on `M^n`.
pub fn act(module: &Bimodule, v: &[Elem], u: &MatrixR, side: ActionSide) -> Vec<Elem> {
    let n = v.len();
    let mut out = vec![module.zero(); n];
    for (j, o) in out.iter_mut().enumerate() {
        let mut acc = module.zero();
        for (i, &vi) in v.iter().enumerate() {
            let term = match side {
                ActionSide::Right => module.rmul(vi, u.get(i, j)),
                ActionSide::Left => module.lmul(u.get(j, i), vi),
                ActionSide::Transpose => module.rmul(vi, u.get(j, i)),
            };
            acc = module.add(acc, term);
        }
        *o = acc;
    }
    debug_assert_eq!(out.len(), n);
    out
}

/// Orbit partition of `M^n` under the group generated by the action.
pub fn orbit_partition(
    module: &Bimodule,
    n: usize,
    action: &ActionSpec,
    caps: &Caps,
) -> Result<Partition> {
    for g in &action.generators {
        if g.rows != n || g.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "generator is {}x{}, expected {n}x{n}",
                g.rows, g.cols
            )));
        }
        if is_invertible(g, module.ring(), caps)?.is_none() {
            return Err(Error::Invalid(format!(
                "generator {} is not invertible",
                g.render(module.ring())
            )));
        }
    }
    let space = TupleSpace::new(module.size(), n, caps.universe)?;
    let mut uf = UnionFind::<usize>::new(space.size());
    let mut v = vec![0; n];
    for x in space.iter() {
        space.decode_into(x, &mut v);
        for g in &action.generators {
            let y = space.encode(&act(module, &v, g, action.side));
            uf.union(x as usize, y as usize);
        }
    }
    Ok(Partition::from_labels(
        (0..space.size()).map(|x| uf.find_mut(x)),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitDualityReport {
    /// `|P_{R^n,U}|, |P_{R^n,U^T}|, |P_{M^n,U}|, |P_{M^n,U^T}|`
    pub orbit_counts: [usize; 4],
    /// Same counts with the zero orbit `{0}` left out.
    pub nonzero_orbit_counts: [usize; 4],
    /// The four identities between orbit partitions and chi-duals, in the
    /// order of `orbit_counts`.
    pub equalities: [bool; 4],
    /// Each orbit partition refines the dual it is compared with.
    pub containments: [bool; 4],
    pub reflexive: [bool; 4],
    pub group_order: usize,
}

impl OrbitDualityReport {
    pub fn all_hold(&self) -> bool {
        self.equalities
            .iter()
            .chain(&self.containments)
            .chain(&self.reflexive)
            .all(|&b| b)
    }
}

/// Orbit partitions of `U` on `R^n` and `M^n` under right and transpose
/// actions, compared against their chi-duals.
///
/// `R^n` carries the ring's own multiplication, so its left and transpose
/// actions coincide. On `M^n` the transposed group acts through the left
/// module action.
pub fn verify_orbit_duality(
    ctx: &DualityContext<'_>,
    generators: &[MatrixR],
    caps: &Caps,
) -> Result<OrbitDualityReport> {
    let m = ctx.module;
    let ring = Bimodule::regular(m.ring_arc())?;
    let n = ctx.n;
    let group = ActionSpec::new(generators.to_vec(), ActionSide::Right).closure(m.ring(), caps)?;
    let orbit = |b: &Bimodule, side| {
        orbit_partition(b, n, &ActionSpec::new(generators.to_vec(), side), caps)
    };
    let p_r_u = orbit(&ring, ActionSide::Right)?;
    let p_r_ut = orbit(&ring, ActionSide::Left)?;
    let p_m_u = orbit(m, ActionSide::Right)?;
    let p_m_ut = orbit(m, ActionSide::Left)?;

    let d1 = ctx.dual_of_module_partition(&p_m_ut, DualSide::Right)?;
    let d2 = ctx.dual_of_module_partition(&p_m_u, DualSide::Left)?;
    let d3 = ctx.dual_of_ring_partition(&p_r_ut, DualSide::Right)?;
    let d4 = ctx.dual_of_ring_partition(&p_r_u, DualSide::Left)?;
    let nonzero = |p: &Partition| p.blocks().iter().filter(|b| !b.contains(&0)).count();
    Ok(OrbitDualityReport {
        nonzero_orbit_counts: [
            nonzero(&p_r_u),
            nonzero(&p_r_ut),
            nonzero(&p_m_u),
            nonzero(&p_m_ut),
        ],
        orbit_counts: [
            p_r_u.block_count(),
            p_r_ut.block_count(),
            p_m_u.block_count(),
            p_m_ut.block_count(),
        ],
        equalities: [p_r_u == d1, p_r_ut == d2, p_m_u == d3, p_m_ut == d4],
        containments: [
            p_r_u.refines(&d1)?,
            p_r_ut.refines(&d2)?,
            p_m_u.refines(&d3)?,
            p_m_ut.refines(&d4)?,
        ],
        reflexive: [
            ctx.is_reflexive_ring(&p_r_u)?,
            ctx.is_reflexive_ring(&p_r_ut)?,
            ctx.is_reflexive_module(&p_m_u)?,
            ctx.is_reflexive_module(&p_m_ut)?,
        ],
        group_order: group.len(),
    })
}

/// The group `{(1 r; 0 u) : r in R, u in R^*}` of upper unitriangular-like
/// matrices used for the non-Frobenius orbit count example.
pub fn upper_unit_group(ring: &RingTable) -> Vec<MatrixR> {
    let mut out = Vec::new();
    for r in ring.elements() {
        for &u in ring.units() {
            out.push(MatrixR::new(2, 2, vec![ring.one(), r, ring.zero(), u]).expect("2x2"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, enumerate_group, MatrixFamily, RingSpec};
    use crate::frobenius::first_generating_character;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn caps() -> Caps {
        Caps::default()
    }

    fn ring(spec: RingSpec) -> Arc<RingTable> {
        Arc::new(build_ring(&spec, &caps()).unwrap())
    }

    #[test]
    fn canonical_labels_and_refinement() {
        let p = Partition::from_labels([5, 5, 2, 7, 2]);
        assert_eq!(p.labels(), &[0, 0, 1, 2, 1]);
        assert_eq!(p.block_count(), 3);
        assert!(p.refines(&p).unwrap());
        assert!(Partition::singletons(5).refines(&p).unwrap());
        assert!(p.refines(&Partition::whole(5)).unwrap());
        assert!(!Partition::whole(5).refines(&p).unwrap());
        assert!(matches!(
            p.refines(&Partition::whole(4)),
            Err(Error::UniverseMismatch(5, 4))
        ));
    }

    #[test]
    fn partition_json_round_trip() {
        let p = Partition::from_labels([1, 0, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"universe":3,"block_of":[0,1,0]}"#);
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Partition>(r#"{"universe":2,"block_of":[0]}"#).is_err());
    }

    #[test]
    fn dual_of_whole_and_singletons() {
        for spec in [
            RingSpec::zn(4),
            RingSpec::zn(6),
            RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
        ] {
            let r = ring(spec);
            let dec = decompose(r.add_table(), r.size()).unwrap();
            let d = dual_partition(&Partition::whole(r.size()), &dec, &caps()).unwrap();
            assert_eq!(d.block_count(), 2);
            assert_eq!(d.blocks()[0], vec![0]);
            let s = dual_partition(&Partition::singletons(r.size()), &dec, &caps()).unwrap();
            assert_eq!(s, Partition::singletons(r.size()));
        }
    }

    #[test]
    fn zero_character_is_a_singleton_block() {
        let r = ring(RingSpec::zn(8));
        let dec = decompose(r.add_table(), 8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_partition(8, 4, &mut rng);
            let d = dual_partition(&p, &dec, &caps()).unwrap();
            assert_eq!(d.blocks()[0], vec![0]);
        }
    }

    #[test]
    fn hamming_partition_is_self_dual() {
        let r = ring(RingSpec::zn(4));
        let m = Bimodule::rhat(r, &caps()).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        let hm = ctx.hamming_partition();
        let hr = ctx.hamming_partition_ring();
        for side in [DualSide::Left, DualSide::Right] {
            assert_eq!(ctx.dual_of_module_partition(&hm, side).unwrap(), hr);
            assert_eq!(ctx.dual_of_ring_partition(&hr, side).unwrap(), hm);
        }
        assert!(ctx.is_reflexive_module(&hm).unwrap());
    }

    #[test]
    fn whole_module_dualizes_to_zero_and_rest() {
        let r = ring(RingSpec::zn(3));
        let m = Bimodule::regular(r).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        let d = ctx
            .dual_of_module_partition(&Partition::whole(9), DualSide::Left)
            .unwrap();
        assert_eq!(d.block_count(), 2);
        assert_eq!(d.blocks()[0], vec![0]);
    }

    #[test]
    fn homogeneous_partition_of_z2_squared_is_not_reflexive() {
        // classes {0}, {(1,1)} and {(0,1),(1,0)} from the homogeneous weight
        let r = ring(RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]));
        let m = Bimodule::regular(r).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 1, &caps()).unwrap();
        let w = [0, 2, 2, 0];
        let p = Partition::from_labels(w);
        assert_eq!(p.block_count(), 2);
        assert!(!ctx.is_reflexive_module(&p).unwrap());
        assert!(ctx.is_reflexive_module(&Partition::singletons(4)).unwrap());
    }

    #[test]
    fn identity_group_gives_singletons_and_trivial_duality() {
        let r = ring(RingSpec::zn(3));
        let m = Bimodule::regular(r.clone()).unwrap();
        let id = MatrixR::identity(&r, 2);
        let p = orbit_partition(
            &m,
            2,
            &ActionSpec::new(vec![id.clone()], ActionSide::Right),
            &caps(),
        )
        .unwrap();
        assert_eq!(p, Partition::singletons(9));
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        assert!(verify_orbit_duality(&ctx, &[id], &caps())
            .unwrap()
            .all_hold());
    }

    #[test]
    fn monomial_group_over_f3() {
        let r = ring(RingSpec::zn(3));
        let m = Bimodule::regular(r.clone()).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        let mon = enumerate_group(&r, 2, &MatrixFamily::Mon, &caps()).unwrap();
        let rep = verify_orbit_duality(&ctx, &mon, &caps()).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        // monomial orbits are the Hamming classes
        assert_eq!(rep.orbit_counts, [3, 3, 3, 3]);
        assert_eq!(rep.group_order, 8);
    }

    #[test]
    fn non_frobenius_orbit_counts() {
        let r = ring(RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]));
        let m = Bimodule::rhat(r.clone(), &caps()).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        let u = upper_unit_group(&r);
        assert_eq!(u.len(), 32);
        let rep = verify_orbit_duality(&ctx, &u, &caps()).unwrap();
        // brute force: 18 right orbits and 21 left orbits on R^2, of which
        // 17 and 20 are orbits of nonzero vectors
        assert_eq!(rep.orbit_counts, [18, 21, 21, 18]);
        assert_eq!(rep.nonzero_orbit_counts, [17, 20, 20, 17]);
        assert_eq!(rep.group_order, 32);
        assert!(rep.all_hold(), "{rep:?}");
    }

    #[test]
    fn chi_bidual_equals_abstract_bidual() {
        let r = ring(RingSpec::zn(4));
        let m = Bimodule::rhat(r, &caps()).unwrap();
        let gc = first_generating_character(&m).unwrap();
        let ctx = DualityContext::new(&m, &gc, 2, &caps()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let p = random_partition(16, 5, &mut rng);
            let b = ctx.bidual_module(&p).unwrap();
            assert_eq!(ctx.chi_bidual_module(&p, DualSide::Left).unwrap(), b);
            assert_eq!(ctx.chi_bidual_module(&p, DualSide::Right).unwrap(), b);
            let d = ctx.character_dual_module(&p).unwrap();
            assert!(dual_inequalities(&p, &d, &b).unwrap().holds());
        }
    }
}
