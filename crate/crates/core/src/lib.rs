//! Finite rings, finite Frobenius bimodules and the MacWilliams extension
//! property, computed exhaustively and exactly.
//!
//! The crate is organised bottom-up:
//!
//! - [`finring`]: rings as dense Cayley tables, matrices over them and the
//!   matrix groups `GL_n`, `Mon_n`, `LT_n`.
//! - [`abelian`]: invariant-factor decomposition of finite abelian groups,
//!   characters, and exact cyclotomic integers for character sums.
//! - [`frobenius`]: bimodules (chiefly the character module `R^`),
//!   generating characters, the pairing isomorphisms and annihilators.
//! - [`partitions`]: partitions of `M^n`/`R^n`, character duals, chi-duals,
//!   reflexivity and orbit partitions of matrix groups.
//! - [`weights`]: Hamming, Rosenbloom-Tsfasman, homogeneous, swc, `wt_N`
//!   and support.
//! - [`extension`]: codes, weight-preserving linear maps and exhaustive
//!   searches for extending matrices.
//! - [`cli`]: the `frobweight` command line front end.
//!
//! Nothing in here uses floating point. Ring elements, characters and
//! tuples are plain indices into precomputed tables.

pub mod abelian;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod finring;
pub mod frobenius;
pub mod lattice;
pub mod partitions;
pub mod suite;
pub mod tuples;
pub mod weights;

pub use error::{Error, Result};

/// Element index into a ring, group or module table.
pub type Elem = u32;

/// Size limits for every exhaustive computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest ring (or module) built from a spec.
    pub ring_size: usize,
    /// Largest tuple space `|M|^n`.
    pub universe: usize,
    /// Largest matrix family enumerated in one search.
    pub family: usize,
    /// Largest matrix group closure.
    pub group_closure: usize,
    /// Largest enumerated code.
    pub code: usize,
    /// Largest number of image assignments tried when enumerating maps.
    pub map_candidates: usize,
    /// Largest cyclotomic conductor.
    pub conductor: usize,
    /// Largest submodule lattice.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_size: 4096,
            universe: 1 << 20,
            family: 1 << 24,
            group_closure: 1 << 16,
            code: 1 << 16,
            map_candidates: 1 << 24,
            conductor: 256,
            lattice: 1 << 16,
        }
    }
}
