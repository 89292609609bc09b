//! Exact combinatorial engine for polyhedral products over pseudomanifolds.
//!
//! Modules follow the pipeline: [`complex`] (canonical simplicial complexes),
//! [`pseudo`] (dual graphs and removal machinery), [`homology`] (integer
//! homology), [`mac`] (moment-angle homology, Golodness) and [`decomp`]
//! (symbolic decompositions and the 𝒫-membership prover).

pub mod complex;
pub mod decomp;
pub mod homology;
pub mod mac;
pub mod pairs;
pub mod pseudo;

pub use complex::{Simplex, SimplicialComplex, VertexSet};
pub use homology::{AbelianGroup, HomologyProfile};
pub use pairs::{AtomSpec, PairClass, PairKind};

/// Integer chain complex (the spec's `ChainComplexZ`).
pub type ChainComplexZ = homology::ChainComplex<num_bigint::BigInt>;
/// Rational chain complex used by the Betti-number oracle.
pub type ChainComplexQ = homology::ChainComplex<num_rational::BigRational>;

/// Engine version reported in CLI output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
