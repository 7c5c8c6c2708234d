//! Exact arithmetic for the Pythagorean triangles of two externally
//! tangent circles.
//!
//! Two circles with radii `R1 > R2 > 0` touch externally at a point `I`.
//! Their common external tangent `T1T2`, the chords it induces, the line of
//! centers, and the external homothety center `K` cut the figure into
//! sixteen right triangles. This crate computes every side length exactly
//! (as single-term quadratic surds), classifies integer radii by how many
//! of those lengths are integers, generates and enumerates the fully
//! integral configurations, searches the two quartic diophantine equations
//! that control the only two irrational diagonals, and cross-checks all of
//! it against an independent floating-point coordinate reconstruction.
//!
//! The formula modules are generic over the integer scalar through
//! [`scalar::ExactInt`]; the crate-root aliases fix the default
//! arbitrary-precision instantiation:
//!
//! ```
//! use tangent_triangles::{lengths, Int, Rational};
//!
//! let radii = lengths::RadiiPair::from_integers(Int::from(560), Int::from(315)).unwrap();
//! let ls = lengths::compute_lengths(&radii);
//! assert_eq!(ls.x1.to_string(), "700");
//! assert_eq!(ls.t1t2.to_string(), "840");
//! assert_eq!(ls.d1.to_string(), "280*sqrt(13)");
//!
//! let triangles = lengths::assemble_triangles(&ls, &radii);
//! assert_eq!(triangles.len(), 16);
//! assert!(triangles.iter().all(lengths::verify_pythagorean));
//! # let _ = Rational::from(Int::from(1));
//! ```
//!
//! All values are immutable and all operations pure, so everything here is
//! safe to share across threads.

pub mod diophantine;
mod error;
pub mod generator;
pub mod integrality;
pub mod lengths;
pub mod oracle;
pub mod scalar;
pub mod surd;
pub mod triples;

pub use error::{Error, Result};

/// Default integer scalar: arbitrary precision, never overflows.
pub type Int = num_bigint::BigInt;

/// Exact rational over [`Int`].
pub type Rational = num_rational::Ratio<Int>;

/// Quadratic surd over [`Int`].
pub type Surd = surd::Surd<Int>;
