//! Cooperative games on simplicial complexes.
//!
//! A coalition structure is a simplicial complex over the players
//! `1..=n`: a coalition is feasible exactly when it is contained in one of
//! the complex's facets. On top of that structure this crate provides
//!
//! * worth functions and the carrier/indicator game families,
//! * quasi-probabilistic individual values and their decomposition over
//!   the facets of the complex,
//! * the facet polytope, participation influences, and core/anticore/Weber
//!   computations for classical games,
//! * a multi-touch-attribution pipeline that turns journey logs into
//!   per-channel value reports,
//! * seeded verification suites behind the `scgt verify` subcommand.
//!
//! All numeric code is generic over [`scalar::Scalar`], with `f64` for the
//! data pipeline and arbitrary-precision rationals for exact checks.
//!
//! ```
//! use std::sync::Arc;
//! use scgt_core::{Face, FacetDistribution, SimplicialComplex, WorthFunction};
//! use scgt_core::values::reducible_group_value;
//!
//! // Feasible coalitions: everything inside {1,2} or {2,3}.
//! let complex = Arc::new(SimplicialComplex::from_facets(
//!     3,
//!     vec![Face::from_members([1, 2]), Face::from_members([2, 3])],
//! )?);
//!
//! // Worth of a coalition: its size.
//! let worth = WorthFunction::new(
//!     Arc::clone(&complex),
//!     complex.faces().into_iter().map(|f| (f, f.card() as f64)),
//! )?;
//!
//! // Shapley values per facet, averaged with the uniform facet weights.
//! let dist = FacetDistribution::uniform(&complex);
//! let values = reducible_group_value(&complex, &dist, &worth, None)?;
//! assert_eq!(values, vec![0.5, 1.0, 0.5]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod attribution;
pub mod complex;
mod feasibility;
pub mod fixtures;
pub mod games;
pub mod io;
pub mod polytope;
pub mod scalar;
pub mod values;
pub mod verify;

pub use complex::{ComplexError, Face, SimplicialComplex, Vertex};
pub use games::{GameBasisCoefficients, GameError, WorthFunction};
pub use scalar::Scalar;
pub use values::{
    FacetDecomposition, FacetDistribution, FacetLocalValue, GroupValue, QuasiValue, ValueError,
};
