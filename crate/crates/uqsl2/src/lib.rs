//! Exact computer algebra for the q-deformed enveloping algebra of sl(2).
//!
//! Everything here is exact: coefficients live in the rational-function
//! field Q(q) ([`ratfunc::RatFuncQ`] over [`laurent::LaurentPoly`]), products
//! are normal-ordered into the PBW basis `S-^r K^l S+^m` by a terminating
//! rewrite system ([`pbw`]), and the Hopf axioms for the coproduct, counit,
//! and antipode are verified as structural identities ([`hopf`]). The
//! Casimir element and its centrality live in [`mod@casimir`]; the only floating
//! point in the crate is the diagnostic two-dimensional substitution in
//! [`eval`].
//!
//! The deformation parameter is the formal variable `q` itself. Where a
//! scale constant appears in the undeformed picture the usual dictionary is
//! `q = e^{hbar/2}`, but nothing here depends on that reading: the defining
//! relations are `q`-homogeneous and every identity is verified over Q(q).

pub mod casimir;
pub mod error;
pub mod eval;
pub mod hopf;
pub mod laurent;
pub mod pbw;
pub mod ratfunc;
pub mod rng;
pub mod tensor;

pub use casimir::{casimir, casimir_linear_denominator, casimir_second_form, is_central};
pub use error::Error;
pub use hopf::{antipode, coproduct, coproduct_mutated, counit, verify_hopf_axioms, HopfReport};
pub use laurent::LaurentPoly;
pub use pbw::{commutator, pbw_multiply, Monomial, PbwElement};
pub use ratfunc::RatFuncQ;
pub use tensor::TensorElement;
