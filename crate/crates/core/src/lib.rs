//! Polar Grassmannians as zero sets of tensor equations.
//!
//! Dense tensors over finite fields `GF(p)`, `GF(p²)` and over ℚ, the
//! p-product / pseudo-product algebra, exterior powers with
//! Grassmann–Plücker relations, reflexive σ-sesquilinear forms, and a
//! checker for the equation `X^σ ∘ᵏ (⊙ᵏ M_f) ∘ X = O` cutting out the
//! totally isotropic `k`-subspaces inside the Grassmannian.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod exterior;
pub mod field;
pub mod forms;
pub mod linalg;
pub mod polar;
pub mod props;
pub mod tensor;

pub use error::{Error, Result};
pub use exterior::{decompose, plucker_relations, satisfies_grassmannian, EquationSet, Subspace};
pub use field::{AnyField, Field, FieldSpec, FiniteField, Gf, Rationals, SigmaKind, Sign};
pub use forms::SesquilinearForm;
pub use polar::{
    in_polar_grassmannian, theorem_lhs, theorem_lhs_alt, verify_exhaustive, verify_sampled,
    MembershipVerdict, TheoremContext, VerificationReport,
};
pub use tensor::Tensor;
