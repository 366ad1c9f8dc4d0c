//! Semi-simplicity certificates for finite-dimensional commutative algebras.

mod algebra;
mod certificate;
mod idempotent;
pub mod hexagon;
pub mod linalg;
mod nonvanish;
mod seidenberg;
mod substitution;
mod univariate;
pub mod verify;

pub use algebra::{AlgebraJson, FDAlgebra, FactorHeader, ASSOCIATIVITY_CHECK_MAX_DIM};
pub use certificate::{Certificate, Member, Point, Verdict, Witness};
pub use idempotent::{eval_at, idempotent_summand_certificate, monogenic_polynomial, summand_idempotent};
pub use nonvanish::{nonvanishing_test, schedule_point, EXTRA_POINTS};
pub use seidenberg::{
    elimination_claims, elimination_resultant, member_unipoly, seidenberg_radical_check, Elimination, MembershipClaim};
pub use substitution::{check_substitution_homomorphism, toy_substitution, toy_tables};
pub use univariate::{
    coordinates, discriminant, field_summand_certificate, is_semisimple_univariate, nilpotent_witness,
    squarefree_witness, trace_form, trace_form_semisimple, trace_form_semisimple_bounded, TRACE_FORM_MAX_DIM,
};
pub use verify::verify;
