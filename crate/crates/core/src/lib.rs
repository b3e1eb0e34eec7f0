//! Exact classification of integral maximal lattice-free simplices.
//!
//! Everything here is pure integer arithmetic over checked `i64` values
//! and needs only `alloc`. File formats, the command-line tool and the
//! threaded search driver live in the `latfree` crate.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod linalg;
pub mod polytope;

pub use classify::{
    facet_lattice_report, is_lattice_free, is_maximal_lattice_free, observation_holds,
    FacetLattice, FacetLatticeReport,
};
pub use enumerate::{
    axis_facet, axis_is_maximal, enumerate_3d, enumerate_3d_shard, enumerate_axis, merge_shards,
    sylvester_bounds, AxisLambda, ClassEntry, ClassificationResult, HnfParams3, ShardOutcome,
};
pub use equivalence::{
    are_equivalent, canonical_form, find_witness, CanonicalForm, EquivalenceWitness,
};
pub use error::{Error, Result};
pub use linalg::{ext_gcd, Bezout, HnfResult, IntMatrix};
pub use polytope::{FacetIneq, PointBudget, Region, Simplex, DEFAULT_POINT_BUDGET};
