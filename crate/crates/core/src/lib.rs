//! Duality between classical spin models on hypergraphs and CSS stabilizer
//! states on the dual hypergraph.
//!
//! The partition function of a spin model on a hypergraph `H` equals, up to an
//! explicit power of two, the overlap of a product state with the CSS state
//! built on the dual hypergraph. Everything here is exact enumeration at desk
//! scale, backed by a small GF(2) layer:
//!
//! - [`gf2`]: packed bit vectors and matrices (rank, null space, span tests).
//! - [`hypergraph`]: the hypergraph value type with dual and orthogonal constructions.
//! - [`spin`]: spin Hamiltonians and two independent partition-function routes.
//! - [`css`]: CSS states, stabilizer-group weight distributions, dense statevectors.
//! - [`duality`]: the overlap identity and bit-flip / phase-flip stability probabilities.
//! - [`zoo`]: cycles, tori, toric-code hypergraphs and hexagonal 2-colexes.
//! - [`document`] and [`cli`]: the JSON model format and the command-line surface.

pub mod cli;
pub mod css;
pub mod document;
pub mod duality;
mod error;
pub mod gf2;
pub mod hypergraph;
mod numeric;
pub mod spin;
pub mod zoo;

pub use css::{CssState, WeightDistribution};
pub use document::{parse_model, serialize_model, DocumentError, ModelDocument};
pub use duality::{
    overlap_group_sum, sweep_stability, verify_duality, DualityReport, NoiseKind, StabilityCurve,
};
pub use error::{Error, Result};
pub use gf2::{in_span, BitMatrix, BitVector};
pub use hypergraph::Hypergraph;
pub use spin::{SpinConfig, SpinModel};
pub use zoo::Graph;
