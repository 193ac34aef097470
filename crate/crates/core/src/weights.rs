//! Weight functions on `M` and `M^n`.
//!
//! Coordinates are module element indices; the zero of `M` is `m.zero()`.
//! Values are exact: integers, rationals, count vectors or index sets.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::abelian::Cyclotomic;
use crate::error::{Error, Result};
use crate::finring::check_unit_subgroup;
use crate::frobenius::{Bimodule, GenChar};
use crate::partitions::Partition;
use crate::tuples::TupleSpace;
use crate::{Caps, Elem};

pub type Rational = Ratio<i64>;

pub fn wt_hamming(v: &[Elem], zero: Elem) -> usize {
    v.iter().filter(|&&x| x != zero).count()
}

/// Largest 1-based index of a nonzero coordinate, 0 for the zero vector.
pub fn wt_rt(v: &[Elem], zero: Elem) -> usize {
    v.iter().rposition(|&x| x != zero).map_or(0, |i| i + 1)
}

/// 1-based positions of the nonzero coordinates.
pub fn support(v: &[Elem], zero: Elem) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != zero)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Which side `alpha` multiplies on in the unit sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSide {
    /// `chi(v alpha)`
    Right,
    /// `chi(alpha v)`
    Left,
}

/// `sum_{alpha in R^*} chi(v alpha)` (or `chi(alpha v)`) as an integer.
pub fn unit_character_sum(
    m: &Bimodule,
    gc: &GenChar,
    v: Elem,
    side: UnitSide,
    cyc: &Cyclotomic,
) -> Result<i64> {
    let mut hist = vec![0i64; cyc.m() as usize];
    let scale = cyc.m() / gc.m;
    for &a in m.ring().units() {
        let w = match side {
            UnitSide::Right => m.rmul(v, a),
            UnitSide::Left => m.lmul(a, v),
        };
        hist[(gc.eval(w) * scale) as usize] += 1;
    }
    cyc.from_histogram(&hist)
        .as_integer()
        .ok_or(Error::NonIntegerSum)
}

/// Homogeneous weight from the unit-sum formula:
/// `omega(v) = 1 - (1/|R^*|) sum_{alpha in R^*} chi(v alpha)`.
pub fn homog_formula(m: &Bimodule, gc: &GenChar, v: Elem, caps: &Caps) -> Result<Rational> {
    let cyc = Cyclotomic::new(gc.m, caps.conductor)?;
    let s = unit_character_sum(m, gc, v, UnitSide::Right, &cyc)?;
    let units = m.ring().units().len() as i64;
    Ok(Rational::from_integer(1) - Rational::new(s, units))
}

/// The formula on every element of `M`; also checks that the left and
/// right unit sums agree.
pub fn homog_formula_table(m: &Bimodule, gc: &GenChar, caps: &Caps) -> Result<Vec<Rational>> {
    let cyc = Cyclotomic::new(gc.m, caps.conductor)?;
    let units = m.ring().units().len() as i64;
    (0..m.size() as Elem)
        .map(|v| {
            let r = unit_character_sum(m, gc, v, UnitSide::Right, &cyc)?;
            let l = unit_character_sum(m, gc, v, UnitSide::Left, &cyc)?;
            if r != l {
                return Err(Error::Invalid(format!(
                    "left and right unit sums differ at {}",
                    m.label(v)
                )));
            }
            Ok(Rational::from_integer(1) - Rational::new(r, units))
        })
        .collect()
}

/// Homogeneous weight of `M` as a left module, solved from its defining
/// axioms: constant on generators of each cyclic submodule `Rv`, and
/// `sum_{w in Rv} omega(w) = |Rv|` for `v != 0`.
///
/// Cyclic submodules are processed by increasing size, so every element
/// of `Rv` that does not generate `Rv` already has a value.
pub fn homog_axioms_solve(m: &Bimodule) -> Result<Vec<Rational>> {
    let n = m.size();
    let mut classes: BTreeMap<Vec<usize>, Vec<Elem>> = BTreeMap::new();
    let mut cyclic: Vec<FixedBitSet> = Vec::with_capacity(n);
    for v in 0..n as Elem {
        let c = m.left_cyclic(v);
        classes.entry(c.ones().collect()).or_default().push(v);
        cyclic.push(c);
    }
    let mut order: Vec<(&Vec<usize>, &Vec<Elem>)> = classes.iter().collect();
    order.sort_by_key(|(c, _)| c.len());
    let mut omega: Vec<Option<Rational>> = vec![None; n];
    omega[m.zero() as usize] = Some(Rational::from_integer(0));
    for (c, gens) in order {
        if gens.contains(&m.zero()) {
            continue;
        }
        let mut known = Rational::from_integer(0);
        for &w in c {
            if !gens.contains(&(w as Elem)) {
                known += omega[w].ok_or(Error::SingularSystem)?;
            }
        }
        let x = (Rational::from_integer(c.len() as i64) - known)
            / Rational::from_integer(gens.len() as i64);
        for &g in gens {
            omega[g as usize] = Some(x);
        }
    }
    let omega: Vec<Rational> = omega
        .into_iter()
        .map(|x| x.ok_or(Error::SingularSystem))
        .collect::<Result<_>>()?;
    for v in 0..n {
        if v as Elem == m.zero() {
            continue;
        }
        let s: Rational = cyclic[v].ones().map(|w| omega[w]).sum();
        if s != Rational::from_integer(cyclic[v].count_ones(..) as i64) {
            return Err(Error::SingularSystem);
        }
    }
    Ok(omega)
}

/// Orbits of `M` under `v -> v u` for a subgroup `G` of `R^*`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnitOrbits {
    pub group: Vec<Elem>,
    /// minimal element of each orbit, ascending
    pub reps: Vec<Elem>,
    /// orbit number of each element
    pub orbit_of: Vec<u32>,
}

impl UnitOrbits {
    pub fn new(m: &Bimodule, group: &[Elem]) -> Result<Self> {
        check_unit_subgroup(m.ring(), group)?;
        let mut rep = vec![Elem::MAX; m.size()];
        for v in 0..m.size() as Elem {
            let r = group
                .iter()
                .map(|&u| m.rmul(v, u))
                .min()
                .expect("nonempty group");
            rep[v as usize] = r;
        }
        let mut reps: Vec<Elem> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let orbit_of = rep
            .iter()
            .map(|r| reps.binary_search(r).expect("rep") as u32)
            .collect();
        let mut group = group.to_vec();
        group.sort_unstable();
        Ok(UnitOrbits {
            group,
            reps,
            orbit_of,
        })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Symmetrized weight composition: how many coordinates fall in each
    /// orbit, ordered by orbit representative.
    pub fn swc(&self, v: &[Elem]) -> Vec<u32> {
        let mut out = vec![0; self.reps.len()];
        for &x in v {
            out[self.orbit_of[x as usize] as usize] += 1;
        }
        out
    }
}

/// A left submodule `N` of `M`, stored as a membership mask.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Submodule {
    pub elements: Vec<Elem>,
    #[serde(skip)]
    member: Vec<bool>,
}

impl Submodule {
    pub fn new(m: &Bimodule, elements: &[Elem]) -> Result<Self> {
        let mut member = vec![false; m.size()];
        for &x in elements {
            *member.get_mut(x as usize).ok_or(Error::NotASubmodule)? = true;
        }
        if !member[m.zero() as usize] {
            return Err(Error::NotASubmodule);
        }
        for &x in elements {
            for &y in elements {
                if !member[m.add(x, y) as usize] {
                    return Err(Error::NotASubmodule);
                }
            }
            for r in m.ring().elements() {
                if !member[m.lmul(r, x) as usize] {
                    return Err(Error::NotASubmodule);
                }
            }
        }
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        Ok(Submodule { elements, member })
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.member[x as usize]
    }

    /// Number of coordinates of `v` lying in `N`.
    pub fn wt_n(&self, v: &[Elem]) -> usize {
        v.iter().filter(|&&x| self.contains(x)).count()
    }
}

/// A weight on `M^n`.
#[derive(Debug, Clone)]
pub enum WeightFn {
    Hamming,
    Rt,
    /// `sum_i table[v_i]`; the homogeneous weight on `M^n` is this lift.
    Additive {
        name: String,
        table: Vec<Rational>,
    },
    Swc(UnitOrbits),
    WtN(Submodule),
    Support,
}

/// Value of a weight; only compared for equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum WeightValue {
    Count(usize),
    /// written as `"p/q"` (or `"p"`)
    Rational(#[serde(serialize_with = "ratio_as_string")] Rational),
    Vector(Vec<u32>),
    Set(Vec<usize>),
}

fn ratio_as_string<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl std::fmt::Display for WeightValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeightValue::Count(c) => write!(f, "{c}"),
            WeightValue::Rational(r) => write!(f, "{r}"),
            WeightValue::Vector(v) => write!(f, "{v:?}"),
            WeightValue::Set(s) => {
                let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

impl WeightFn {
    pub fn homogeneous(table: Vec<Rational>) -> Self {
        WeightFn::Additive {
            name: "homogeneous".into(),
            table,
        }
    }

    pub fn name(&self) -> String {
        match self {
            WeightFn::Hamming => "hamming".into(),
            WeightFn::Rt => "rt".into(),
            WeightFn::Additive { name, .. } => name.clone(),
            WeightFn::Swc(o) => format!("swc(|G|={})", o.group.len()),
            WeightFn::WtN(n) => format!("wtN(|N|={})", n.elements.len()),
            WeightFn::Support => "support".into(),
        }
    }

    pub fn value(&self, v: &[Elem], zero: Elem) -> WeightValue {
        match self {
            WeightFn::Hamming => WeightValue::Count(wt_hamming(v, zero)),
            WeightFn::Rt => WeightValue::Count(wt_rt(v, zero)),
            WeightFn::Additive { table, .. } => {
                WeightValue::Rational(v.iter().map(|&x| table[x as usize]).sum())
            }
            WeightFn::Swc(o) => WeightValue::Vector(o.swc(v)),
            WeightFn::WtN(n) => WeightValue::Count(n.wt_n(v)),
            WeightFn::Support => WeightValue::Set(support(v, zero)),
        }
    }

    /// The partition of `M^n` into level sets of the weight.
    pub fn partition(&self, space: &TupleSpace, zero: Elem) -> Partition {
        let mut buf = vec![0; space.len()];
        Partition::from_labels(space.iter().map(|x| {
            space.decode_into(x, &mut buf);
            self.value(&buf, zero)
        }))
    }
}
