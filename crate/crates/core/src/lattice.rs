//! Closure systems on a finite abelian group: subgroups closed under a
//! list of unary endomorphisms, and exhaustive enumeration of all of them.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::{cap_check, Result};
use crate::Elem;

/// Additive group with a set of endomorphisms. Closed sets are the
/// subgroups mapped into themselves by every endomorphism.
#[derive(Debug, Clone)]
pub struct ClosureSystem<'a> {
    size: usize,
    zero: Elem,
    add: &'a [Elem],
    maps: Vec<Vec<Elem>>,
}

impl<'a> ClosureSystem<'a> {
    pub fn new(size: usize, zero: Elem, add: &'a [Elem], maps: Vec<Vec<Elem>>) -> Self {
        ClosureSystem {
            size,
            zero,
            add,
            maps,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn grow(&self, set: &mut FixedBitSet, members: &mut Vec<Elem>, mut work: Vec<Elem>) {
        while let Some(w) = work.pop() {
            if set.put(w as usize) {
                continue;
            }
            for m in &self.maps {
                let x = m[w as usize];
                if !set.contains(x as usize) {
                    work.push(x);
                }
            }
            for &u in members.iter() {
                let s = self.add[u as usize * self.size + w as usize];
                if !set.contains(s as usize) {
                    work.push(s);
                }
            }
            let d = self.add[w as usize * self.size + w as usize];
            if !set.contains(d as usize) {
                work.push(d);
            }
            members.push(w);
        }
    }

    /// Smallest closed set containing `seeds`.
    pub fn close(&self, seeds: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.size);
        let mut members = Vec::new();
        let mut work: Vec<Elem> = seeds.into_iter().collect();
        work.push(self.zero);
        self.grow(&mut set, &mut members, work);
        set
    }

    /// Closure of `base ∪ {x}` for an already closed `base`.
    pub fn close_with(&self, base: &FixedBitSet, x: Elem) -> FixedBitSet {
        let mut set = base.clone();
        let mut members: Vec<Elem> = base.ones().map(|i| i as Elem).collect();
        self.grow(&mut set, &mut members, vec![x]);
        set
    }

    pub fn is_closed(&self, set: &FixedBitSet) -> bool {
        set.contains(self.zero as usize)
            && set.ones().all(|x| {
                self.maps.iter().all(|m| set.contains(m[x] as usize))
                    && set
                        .ones()
                        .all(|y| set.contains(self.add[x * self.size + y] as usize))
            })
    }

    /// All closed sets, ordered by size and then by element list.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<FixedBitSet>> {
        let bottom = self.close(std::iter::empty());
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(bottom.ones().collect());
        let mut queue = vec![bottom];
        let mut out = Vec::new();
        while let Some(s) = queue.pop() {
            for x in 0..self.size {
                if s.contains(x) {
                    continue;
                }
                let t = self.close_with(&s, x as Elem);
                let key: Vec<usize> = t.ones().collect();
                if seen.insert(key) {
                    cap_check("submodule lattice", seen.len() as u128, cap as u128)?;
                    queue.push(t);
                }
            }
            out.push(s);
        }
        out.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.ones().cmp(b.ones()))
        });
        Ok(out)
    }
}

pub fn elements(set: &FixedBitSet) -> Vec<Elem> {
    set.ones().map(|i| i as Elem).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, RingSpec};
    use crate::Caps;

    #[test]
    fn subgroups_of_z12_are_the_divisors() {
        let r = build_ring(&RingSpec::zn(12), &Caps::default()).unwrap();
        let sys = ClosureSystem::new(12, 0, r.add_table(), vec![]);
        let subs = sys.enumerate(1 << 10).unwrap();
        let sizes: Vec<usize> = subs.iter().map(|s| s.count_ones(..)).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        assert!(subs.iter().all(|s| sys.is_closed(s)));
    }

    #[test]
    fn subgroups_of_z2_cubed() {
        let r = build_ring(
            &RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
            &Caps::default(),
        )
        .unwrap();
        let sys = ClosureSystem::new(8, 0, r.add_table(), vec![]);
        // 1 + 7 + 7 + 1 subspaces of F2^3
        assert_eq!(sys.enumerate(1 << 10).unwrap().len(), 16);
        // ideals: closed under multiplication by every ring element
        let maps = (0..8)
            .map(|a| (0..8).map(|x| r.mul(a, x)).collect())
            .collect();
        let ideals = ClosureSystem::new(8, 0, r.add_table(), maps);
        // the maximal ideal squares to zero, so its subspaces are ideals
        assert_eq!(ideals.enumerate(1 << 10).unwrap().len(), 1 + 3 + 1 + 1);
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let r = build_ring(&RingSpec::zn(12), &Caps::default()).unwrap();
        let sys = ClosureSystem::new(12, 0, r.add_table(), vec![]);
        assert!(sys.enumerate(3).is_err());
    }
}
