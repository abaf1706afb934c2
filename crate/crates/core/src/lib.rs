//! Exact arithmetic for elliptic curve torsion, isogeny and Galois image
//! computations over number fields of small degree.
//!
//! The layering runs bottom up:
//!
//! * [`arith`], [`rational`]: integer kernels (primality, factoring,
//!   square detection) and exact rationals.
//! * [`poly`]: dense univariate polynomials over a generic coefficient
//!   ring, with subresultant resultants over Z.
//! * [`zpoly`]: fast polynomials over F_p for word-sized p, the workhorse
//!   behind distinct-degree factoring and point counting.
//! * [`numfield`], [`residue`]: number fields Q[x]/(m) of degree up to a
//!   small cap, and their residue fields F_{p^f}.
//! * [`factor`]: factorization of univariate polynomials over Q and over
//!   number fields (Hensel lifting, recombination, norm descent).
//! * [`elliptic`], [`divpoly`]: Weierstrass curves over any field
//!   implemented here, the group law, and division polynomials with exact
//!   primitive parts.
//! * [`algebra`]: quotient rings Q[x]/(f) with zero-divisor-aware
//!   inversion, the workspace for evaluating multiples of a torsion
//!   abscissa without naming its field.
//! * [`torsion`], [`galois`], [`isogeny`], [`descent`]: the arithmetic
//!   applications: torsion subgroups over number fields, mod-l image
//!   certification, cyclic isogeny kernels with their twist data, and
//!   rank bounds by 2-isogeny descent.

pub mod algebra;
pub mod arith;
pub mod divpoly;
pub mod elliptic;
pub mod descent;
pub mod factor;
pub mod galois;
pub mod isogeny;
pub mod numfield;
pub mod poly;
pub mod rational;
pub mod residue;
pub mod torsion;
pub mod zpoly;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
