//! Upper Koszul complexes, reduced homology and Betti tables.

pub mod betti;
pub mod complex;
pub mod field;

pub use betti::{
    betti_at, betti_from_quotient_order, betti_numbers, has_linear_resolution, is_componentwise_linear,
    lcm_lattice, linear_resolution_witness, BettiTable, CwlReport, GradedBetti, NonlinearWitness,
};
pub use complex::{reduced_homology_ranks, upper_koszul_complex, SimplicialComplex};
pub use field::FieldSpec;
