//! Exact construction and cohomology of the quaternionic unitary
//! Cayley–Klein Lie algebras `sq_ω(N+1)`.
//!
//! * [`exactnum`]: rationals and quaternions.
//! * [`ckalgebra`]: structure constants, subalgebras, grading automorphisms,
//!   the reversal isomorphism and contraction decompositions.
//! * [`realization`]: the quaternionic matrix realization.
//! * [`linalg`]: sparse fraction-free elimination, rank and nullspace.
//! * [`cohomology`]: cocycles, coboundaries and `H²(g, ℝ)`.

pub mod ckalgebra;
pub mod cohomology;
pub mod exactnum;
pub mod linalg;
pub mod realization;

pub use ckalgebra::{
    build_family, build_sq, build_subalgebra, grading_automorphism, omega_ab, reversal_isomorphism,
    semidirect_analysis, verify_jacobi, AlgebraError, Family, GeneratorId, OmegaPattern, StructureConstants,
    SubalgebraSelector,
};
pub use exactnum::{Quaternion, Rational};
pub use linalg::{NullspaceBasis, SparseRationalMatrix};
pub use cohomology::{
    classify_extension, cocycle_space, coboundary_space, derived_dimension, h2, unitary_type2_representative,
    unitary_type3_count, CohomologyError, CohomologyReport, ExtensionClass, ExtensionType, TwoCochain,
};
