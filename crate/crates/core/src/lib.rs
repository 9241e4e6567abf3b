//! Exact-arithmetic toolkit for families of cyclic covers of the projective
//! line.
//!
//! A family is given by a triple `(m, N, a)`: the curves are normalizations
//! of `y^m = prod_i (x - t_i)^{a_i}` with `N` distinct branch points `t_i`
//! and local monodromies `a_i`. This crate enumerates such families up to
//! equivalence, computes their eigenspace invariants, decides totally
//! geodesic / not totally geodesic / undetermined status inside the Jacobian
//! locus, emits exact rational witness certificates for the negative
//! verdicts, and evaluates closed-form dimension bounds for totally geodesic
//! germs.
//!
//! All arithmetic is exact: arbitrary-precision rationals throughout, no
//! floating point anywhere.

pub mod bounds;
pub mod branch;
pub mod classify;
pub mod eigen;
pub mod error;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod witness;

pub use bounds::BoundReport;
pub use branch::{enumerate_candidates, enumerate_classes, BranchDatum, CanonicalDatum};
pub use classify::{Caveat, Classifier, Criterion, HyperellipticAllowlist, Status, Verdict};
pub use eigen::{EigenProfile, FamilyInvariants};
pub use error::{Error, Result};
pub use witness::{CoverModel, WitnessCertificate};

/// Exact scalar used throughout: arbitrary-precision rationals, always
/// stored reduced with positive denominator.
pub type Rational = num::BigRational;

/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Univariate polynomials over the exact scalar.
pub type Poly = poly::Polynomial<Rational>;

/// Univariate rational functions over the exact scalar.
pub type RatFun = ratfun::RationalFunction<Rational>;
