//! Cross intersecting set pair systems, exactly.
//!
//! A set pair system is an indexed family {(A_i, B_i)} of pairs of finite
//! sets. This crate verifies the cross and 1-cross intersection conditions,
//! evaluates the weight functional Σ(S) = Σ_i 1/C(|A_i|+|B_i|, |A_i|) in
//! exact rational arithmetic, builds the canonical constructions
//! (complementary pairs, the two complementary 5-cycles), translates between
//! 1-cross systems and biclique partitions of crown graphs, and searches
//! exhaustively for extremal systems with certified exhaustion.
//!
//! Everything on a verification path uses exact arithmetic; there is no
//! floating point. All values are immutable and safe to share across
//! threads.

pub mod biclique;
pub mod constructions;
pub mod io;
pub mod lemmas;
pub mod rat;
pub mod search;
pub mod system;

pub use rat::{binom, Rat};
pub use system::{
    ElementId, SetPair, SetPairSystem, Side, VerificationReport, VerifyMode, Violation,
    ViolationKind,
};
