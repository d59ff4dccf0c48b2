//! Exact-arithmetic computation of (bigraded) Betti numbers of
//! Stanley-Reisner rings, tightness and weak-tightness of simplicial
//! complexes, isomorph-free enumeration of all weakly tight complexes by the
//! germ construction, and the simplex-sphere-join classification of tight
//! complexes.
//!
//! Everything is exact: homology ranks come from elimination over ℚ with
//! arbitrary-precision rationals or over a prime field, never floats. The
//! independent Taylor-resolution oracle in [`taylor`] cross-checks the
//! Hochster engine in [`hochster`] entry by entry.

pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod sample;
pub mod table1;
pub mod taylor;

pub use classify::{classify_tight, verify_classification, TightDecomposition};
pub use complex::{FVector, Face, IsoClassKey, SimplicialComplex, VertexId};
pub use enumerate::{
    dmin_search, enumerate_wt, enumerate_wt_with, extend, filtration_lengths, germ_filtration,
    is_essential_wt_germ, is_wt_germ, replay_filtration, restrict_pair, Census, CensusEntry,
    DminResult, GermFilter, GermFiltration, WtGerm,
};
pub use error::{Error, Result};
pub use hochster::{
    bigraded_betti, check_lower_bounds, check_wt_recursion, is_tight, is_weakly_tight,
    sphere_count_characterization, tightness_report, total_betti, BettiTable, TightnessReport,
};
pub use homology::{
    boundary_matrices, homotopy_profile, induced_surjective, reduced_betti, HomotopyProfile,
    ReducedBettiVector,
};
pub use linalg::{rank, FieldSpec, Matrix};
pub use taylor::{oracle_diff, taylor_betti, Disagreement};
