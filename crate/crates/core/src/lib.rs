//! Quality-diversity meta-evolution over learned behaviour spaces.
//!
//! The crate evolves a population of MAP-Elites archives, each indexed by a
//! neural feature-map that projects high-dimensional base-features onto a
//! low-dimensional behaviour grid. CMA-ES adapts the feature-map weights
//! against an archive-level meta-objective, a circular database of every
//! evaluated solution lets new archives be rebuilt instantly, and SARSA(λ)
//! controls how many plain MAP-Elites generations run between meta-updates.
//!
//! The [`domain`] module provides the Rastrigin benchmark together with the
//! perturbed landscapes (dimension drops, sinusoidal dimension noise, linear
//! translations) used for meta-fitness and for the post-evolution adaptation
//! tests. [`baseline`] provides CVT-MAP-Elites and a fixed-feature-map
//! MAP-Elites under the same evaluation accounting for comparison.

pub mod archive;
pub mod baseline;
pub mod cmaes;
pub mod database;
pub mod domain;
pub mod eval;
pub mod feature_map;
pub mod meta;
pub mod report;
pub mod rl;
pub mod rng;
pub mod stats;

mod checkpoint;
mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
