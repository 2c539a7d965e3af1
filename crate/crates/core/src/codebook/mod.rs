//! Code families, derivation operators and basic analyzers.

mod bch;
mod code;
mod families;
mod ops;
pub mod structure;
mod word;

pub use bch::{build_bch_c13, BchCode, ParityCheck};
pub use code::{Code, DistanceSet, Family, WeightDistribution};
pub use families::{build_kerdock, build_rm1, build_trace_dual, gold_exponent_ok};
pub use ops::{extend_complement, kernel, kernel_contains, puncture, shorten, translate, Extension};
pub use word::Codeword;

/// How pairwise properties are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampling {
    Exhaustive,
    Random { seed: u64, pairs: u64 },
}
