//! Construction and verification of diagonalizing gate sequences.
//!
//! For every odd integer `p = 2n + 1` there is a recursively defined word
//! `A_p(U; θ_p)` over an arbitrary gate `U`, its inverse and a family of
//! diagonal gates `D_1 .. D_n`, with the property that one application drives
//! the off-diagonal entry as `|b_out| = |b_in|^p`. Iterating the word
//! diagonalizes `U` doubly exponentially fast.
//!
//! This crate builds those words, evaluates them in floating point over a
//! generic scalar (`f32`/`f64`), computes the underlying coefficient tables
//! three independent ways (coupled recursion, nested-sum formulas and
//! specialized closed forms), certifies the conjectured coefficient values in
//! exact cyclotomic integer arithmetic, solves the associated integer
//! triangular system in exact big-integer arithmetic, and checks the
//! supporting trigonometric and binomial identities.
//!
//! The crate-root aliases fix the scalar to `f64`, which is what the CLI and
//! the verification suites use.

pub mod angle;
pub mod binomial;
pub mod coeffs;
pub mod cyclotomic;
pub mod error;
pub mod identities;
pub mod linsys;
pub mod sample;
pub mod scalar;
pub mod tolerances;
pub mod unitary;
pub mod word;

pub use angle::{PiRational, UnitAngle};
pub use coeffs::{chi, conjectured_v, eval_b, exact_verify, recurse_coeffs, CoeffTable, ExactCertificate};
pub use cyclotomic::{CyclotomicElement, CyclotomicRing};
pub use error::{Error, Result};
pub use identities::{lemma_a1, lemma_a2, lemma_a3, ruiz_identity, IdentityReport};
pub use linsys::{build_mn, hockey_stick_check, inverse_formula, solve_system, NestedTriangularMatrix};
pub use sample::{random_su2, random_su2_with_b_mag, trial_rng};
pub use scalar::Real;
pub use unitary::{make_lambda, DiagonalGate, Unitary2};
pub use word::{
    build_word, compose_words, convergence_report, iterate, normalize_word, Convention,
    ConvergenceRow, GateToken, GateWord,
};

/// `Unitary2` with the default `f64` scalar.
pub type Unitary64 = unitary::Unitary2<f64>;
/// `Unitary2` over `f32`.
pub type Unitary32 = unitary::Unitary2<f32>;
/// Coefficient table with the default `f64` scalar.
pub type CoeffTable64 = coeffs::CoeffTable<f64>;
