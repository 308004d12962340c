//! An exact-arithmetic engine for a family of combinatorial Hopf algebras
//! over the integers: the shuffle algebra, noncommutative symmetric
//! functions, the Hopf algebra of permutations, the word Hopf algebra on all
//! integer words, and the double word Hopf algebra of substitutions —
//! together with the endomorphism Hopf algebra `End(H)` of a finite-rank
//! Hopf algebra.
//!
//! Every structure map works over `Z` with unbounded integer coefficients,
//! and every axiom, duality and embedding claim is backed by an exhaustive
//! checker with explicit finiteness bounds (see [`hopf`]).

pub mod dwha;
pub mod endo;
pub mod hopf;
pub mod lincomb;
pub mod mpr;
pub mod nsymm;
pub mod shuffle_algebra;
pub mod text;
pub mod wha;
pub mod words;

pub use lincomb::{Coeff, LinComb, Tensor};
pub use words::{PermWord, Word};

/// Precondition and validation failures across the crate.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word has repeated letters")]
    RepeatedLetters,
    #[error("word is not a permutation word")]
    NotAPermutation,
    #[error("top and bottom words must have equal support")]
    SupportMismatch,
    #[error("substitution is not in run form")]
    NotWhaForm,
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("finite Hopf data violates the axiom: {0}")]
    InvalidHopfData(String),
    #[error("endomorphism rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("test words must have disjoint supports")]
    DisjointnessViolation,
}
