//! Exact symbolic-algebra engine for residual intersections.
//!
//! The crate is organized in five layers:
//!
//! - [`polycore`]: exact coefficients (arbitrary-precision rationals, prime
//!   fields), monomials and monomial orders, multivariate polynomials,
//!   polynomial matrices and a text parser.
//! - [`gbengine`]: Buchberger Groebner bases for ideals and for submodules of
//!   free modules (also over quotients by an explicit modulus), with the
//!   derived ideal operations: membership, equality, intersection, colon,
//!   radical membership, dimension, Hilbert series and syzygies.
//! - [`koszul`]: the Koszul complex as a differential graded algebra: wedge
//!   products, differential, cycles, boundaries and homology representatives.
//! - [`kitt`]: the Kitt ideal of a pair a ⊆ I together with its homology
//!   form, the Fitting ideal of I/a, and a verification report covering the
//!   containment, independence and specialization properties.
//! - [`bekoszul`]: the Buchsbaum-Eisenbud complexes of a linear map
//!   (Eagon-Northcott, Buchsbaum-Rim), their connecting maps and a finite
//!   Koszul-Cech model for checking the lift formula.

// pub mod bekoszul;
// pub mod gbengine;
// pub mod kitt;
// pub mod koszul;
pub mod polycore;




pub use polycore::{FieldSpec, MonomialOrder, PolyMatrix, PolyRing, Polynomial};
