//! Exact symbolic computation for skein algebras of punctured spheres and
//! quantized K-theoretic Coulomb branches of the matching linear quiver gauge
//! theories.
//!
//! The arithmetic core ([`scalars`]) is generic over an integer coefficient
//! type; everything above it uses the big-integer aliases below.

pub mod error;
pub mod fusion;
pub mod grcoulomb;
pub mod linalg;
pub mod monopole;
pub mod qdiff;
pub mod scalars;
pub mod skeinrep;
pub mod random;
pub mod text;
pub mod verify;

use num_bigint::BigInt;

/// Exact scalar: reduced rational function with big-integer coefficients.
pub type Scalar = scalars::RatFunc<BigInt>;

/// Coefficient of an operator or graded element. Same representation as
/// [`Scalar`], but may mention coordinate atoms.
pub type CoordPoly = Scalar;

/// Laurent polynomial with big-integer coefficients.
pub type LaurentPoly = scalars::Poly<BigInt>;
