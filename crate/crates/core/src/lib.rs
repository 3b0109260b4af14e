//! Exact re-derivation of the numerical and algebraic claims behind several
//! Fano threefold constructions: Chow-ring degrees, determinantal identities,
//! node counts over finite fields, adjunction genera, K3 lattice embeddings,
//! linear-system pullbacks and parameter-count ledgers.

pub mod poly;
pub mod chow;
pub mod linalg;
pub mod lattice;
pub mod zerodim;
pub mod birat;
pub mod catalog;
pub mod report;
pub mod cli;
