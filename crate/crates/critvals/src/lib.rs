//! Exact computation of affine Whitney stratifications of singular affine
//! varieties and of the stratified generalized critical values K(f) = K₀ ∪ K∞
//! of polynomial maps, over the rationals, with a floating-point oracle for
//! desk-scale validation.
//!
//! The symbolic pipeline never touches floating point: polynomials carry
//! arbitrary-precision rational coefficients and every geometric step
//! (singular loci, incidence varieties, failure loci, image closures) reduces
//! to Gröbner-basis eliminations. The `oracle` module samples varieties
//! numerically and searches for witness sequences; its verdicts are advisory
//! and feed only the test suite, never the symbolic results.

pub mod error;
pub mod groebner;
pub mod variety;
pub mod whitney;
pub mod poly;

pub use error::{Error, Result};
