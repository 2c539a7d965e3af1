//! Verification workbench for the combinatorics of Kerdock codes and the
//! duals of 2-error-correcting BCH codes.
//!
//! The crate builds the code families (first-order Reed-Muller, Kerdock via
//! the Galois ring GR(4, m-1) and the Gray map, BCH `C(1,3)` and its trace
//! duals), and analyzes them: weight distributions, t-designs, restrictions of
//! the Hamming scheme, and i-component decompositions of the minimum distance
//! graph with a flipped coordinate.
//!
//! All counting is exact. Large enumerations are parallelized with rayon.

pub mod bits;
pub mod codebook;
pub mod components;
pub mod design;
pub mod error;
pub mod field;
pub mod gf2;
pub mod harness;
pub mod ring;
pub mod scheme;
pub mod storage;

pub use codebook::{Code, Codeword, DistanceSet, Family, ParityCheck, WeightDistribution};
pub use components::{ComponentReport, ComponentSizes, DistanceBasis, Method};
pub use design::DesignReport;
pub use error::{Error, Result};
pub use field::GaloisField;
pub use gf2::SpanBasis;
pub use harness::{Claim, Effort, Report, Status};
pub use ring::{GaloisRing, RingElement};
pub use scheme::{IntersectionTensor, SchemeMode};
