//! Exact computations in wreath products `G ≀ Z` of a finite group `G` with
//! the integers.
//!
//! * [`group`]: finite groups, their subgroups and automorphisms.
//! * [`wreath`]: elements, words, normal forms and word metrics.
//! * [`dl`]: Diestel-Leader graphs and the Cayley graph correspondence.
//! * [`automorphisms`]: automorphisms of `G ≀ Z` built from compatible pairs.
//! * [`twisted`]: twisted conjugacy classes and Reidemeister numbers.
//! * [`classifier`]: deciding property R∞ with certificates.
//! * [`suite`]: the acceptance experiments.
//! * [`cli`]: the `wreathlab` command line.

pub mod error;
pub mod group;
pub mod wreath;
pub mod dl;
pub mod automorphisms;
pub mod twisted;
pub mod classifier;
pub mod suite;
pub mod cli;

pub use error::{Error, Result};

/// Resource caps shared by the searches. Every cap can be raised from the
/// command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    /// Largest BFS radius (`--ball-cap`).
    pub ball: usize,
    /// Largest order of a non-cyclic group whose automorphisms are
    /// enumerated (`--aut-cap`).
    pub aut: usize,
    /// Largest block or window carrier enumerated element by element
    /// (`--carrier-cap`).
    pub carrier: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { ball: 10, aut: group::DEFAULT_AUT_CAP, carrier: 10_000 }
    }
}
