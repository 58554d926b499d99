//! Exact arithmetic for Heegaard-Floer correction terms (`d`-invariants) of
//! lens spaces and of large integer surgeries on torus knots, together with
//! the linking-form and metabolizer machinery needed to run the additivity
//! obstruction to splitting a rational homology sphere into prime-power
//! pieces up to rational homology cobordism.
//!
//! Everything here is exact: `d`-invariants are `BigRational`s produced by
//! integer recursions, chain-complex homology is computed over the
//! two-element field, and the number-theoretic generators certify their
//! outputs by re-verification.

pub mod alexander;
pub mod cfk;
pub mod figures;
pub mod gf2;
pub mod lens;
pub mod linking;
pub mod obstruction;
pub mod rational;
pub mod report;
pub mod sieve;

pub use rational::Rat;
