//! Mixed-radix indexing of `V^n`.
//!
//! Coordinate `i` (0-based) carries weight `|V|^i`, so the first coordinate
//! is the least significant digit.

use crate::error::{cap_check, Result};
use crate::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    base: usize,
    n: usize,
    size: usize,
}

impl TupleSpace {
    pub fn new(base: usize, n: usize, cap: usize) -> Result<Self> {
        let size = (base as u128).pow(n as u32);
        cap_check("tuple space |V|^n", size, cap as u128)?;
        Ok(TupleSpace {
            base,
            n,
            size: size as usize,
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of tuples, `|V|^n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, v: &[Elem]) -> Elem {
        debug_assert_eq!(v.len(), self.n);
        let mut idx = 0usize;
        for &x in v.iter().rev() {
            idx = idx * self.base + x as usize;
        }
        idx as Elem
    }

    pub fn decode(&self, idx: Elem) -> Vec<Elem> {
        let mut out = vec![0; self.n];
        self.decode_into(idx, &mut out);
        out
    }

    pub fn decode_into(&self, idx: Elem, out: &mut [Elem]) {
        let mut idx = idx as usize;
        for slot in out.iter_mut() {
            *slot = (idx % self.base) as Elem;
            idx /= self.base;
        }
    }

    /// Coordinate `i` of the tuple with index `idx`.
    pub fn coord(&self, idx: Elem, i: usize) -> Elem {
        ((idx as usize / self.base.pow(i as u32)) % self.base) as Elem
    }

    /// Index of the tuple with `x` at coordinate `i` and zero elsewhere,
    /// assuming the zero element has index 0.
    pub fn unit_vector(&self, i: usize, x: Elem) -> Elem {
        (x as usize * self.base.pow(i as u32)) as Elem
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_first_coordinate_is_least_significant() {
        let s = TupleSpace::new(24, 2, 1 << 20).unwrap();
        assert_eq!(s.size(), 576);
        assert_eq!(s.encode(&[6, 3]), 6 + 3 * 24);
        assert_eq!(s.decode(6 + 3 * 24), vec![6, 3]);
        assert_eq!(s.coord(6 + 3 * 24, 1), 3);
        assert_eq!(s.unit_vector(1, 5), 5 * 24);
    }

    #[test]
    fn zero_length_space_has_one_tuple() {
        let s = TupleSpace::new(7, 0, 16).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.encode(&[]), 0);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(TupleSpace::new(64, 4, 1 << 20).is_err());
    }
}
