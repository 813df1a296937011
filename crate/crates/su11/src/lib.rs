//! Harmonic analysis on the group SU(1,1).
//!
//! The crate is organized around the chain
//!
//! ```text
//! group kernel -> decompositions -> Haar integration -> principal series
//!                                                    -> spherical transforms
//! ```
//!
//! * [`group`] — SU(1,1) elements, the Cayley map from real unimodular
//!   matrices, the boundary Möbius action and its multiplicative/additive
//!   cocycles.
//! * [`decomp`] — closed-form Iwasawa (KAN) and Cartan (KAK) decompositions
//!   and their recompositions.
//! * [`haar`] — left-invariant Haar integration in Iwasawa and Cartan
//!   coordinates, with a left-invariance auditor.
//! * [`rep`] — the principal-series operators on truncated Fourier series
//!   over the circle, ladder operators, and a finite-difference bridge for
//!   the derived representation.
//! * [`spherical`] — character-typed function spaces, K-projections,
//!   spherical functions, and the Abel / Kangni-type spherical Fourier
//!   transforms.
//!
//! All operations are pure functions over immutable values; everything is
//! safe to share across threads. Quadrature reductions use a fixed pairwise
//! tree order so results are bit-for-bit reproducible.

pub mod angle;
pub mod decomp;
pub mod error;
pub mod group;
pub mod haar;
pub mod quad;
pub mod rep;
pub mod rng;
pub mod spherical;

pub use error::Error;
pub use group::{CirclePoint, GroupElement, RealMatrix2};
