//! The shipped scenario corpus: which rings and alphabets the extension
//! scenarios and structural checks run over.
//!
//! The builtin corpus is identical to `corpus/corpus.json` at the
//! repository root; a test keeps the two in sync.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::finring::{build_ring, RingSpec, RingTable};
use crate::frobenius::{is_frobenius_ring, Bimodule};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub rings: Vec<RingSpec>,
    /// code length for the extension scenarios
    pub n: usize,
}

impl Default for Corpus {
    fn default() -> Self {
        Corpus {
            rings: vec![
                RingSpec::zn(2),
                RingSpec::zn(3),
                RingSpec::zn(4),
                RingSpec::zn(6),
                RingSpec::gf(2, &[1, 1, 1]),
                RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
                RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
            ],
            n: 2,
        }
    }
}

impl Corpus {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn ring_tables(&self, caps: &Caps) -> Result<Vec<Arc<RingTable>>> {
        self.rings
            .iter()
            .map(|s| Ok(Arc::new(build_ring(s, caps)?)))
            .collect()
    }

    /// Frobenius bimodules over the corpus rings: `R` itself when `R` is a
    /// Frobenius ring, and `R^` always.
    pub fn alphabets(&self, caps: &Caps) -> Result<Vec<Bimodule>> {
        let mut out = Vec::new();
        for r in self.ring_tables(caps)? {
            if is_frobenius_ring(&r)? {
                out.push(Bimodule::regular(r.clone())?);
            }
            out.push(Bimodule::rhat(r, caps)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_matches_shipped_file() {
        let shipped: Corpus =
            serde_json::from_str(include_str!("../../../corpus/corpus.json")).unwrap();
        assert_eq!(shipped, Corpus::default());
    }

    #[test]
    fn alphabets_skip_only_the_non_frobenius_ring() {
        let a = Corpus::default().alphabets(&Caps::default()).unwrap();
        assert_eq!(a.len(), 13);
    }
}
