//! Default comparison tolerances, shared by the library and the verification
//! suites. All magnitudes being compared are <= 1 unless stated otherwise, so
//! the comparisons are absolute.

/// Unitarity and entrywise matrix comparisons.
pub const TAU_UNIT: f64 = 1e-12;

/// Coefficient-table comparisons. Looser than [`TAU_UNIT`] because the nested
/// sums accumulate more rounding than a handful of 2x2 products.
pub const TAU_COEFF: f64 = 1e-9;

/// One-step convergence residual for the proven laws (p <= 7).
pub const PROVEN_LAW: f64 = 1e-12;

/// One-step convergence residual in the conjectured regime (p >= 9).
pub const CONJECTURED_LAW: f64 = 1e-9;

/// A product factor this close to zero indicates an angle bug upstream.
pub const DEGENERATE_FACTOR: f64 = 1e-14;

/// Alternating cosine sum (absolute).
pub const LEMMA_A1: f64 = 1e-10;

/// Log-magnitude residual of the signed cosine product (absolute).
pub const LEMMA_A2: f64 = 1e-8;

/// Log-space residual of the sine product (relative to n*ln 2).
pub const LEMMA_A3: f64 = 1e-8;
