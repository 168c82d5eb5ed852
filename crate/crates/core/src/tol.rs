//! Numerical tolerances used across the crate.
//!
//! Two regimes: identities that hold exactly in the closed-form pulse
//! algebra (phase cancellations, diagonal actions) are checked at
//! [`EXACT_PHASE`], while anything routed through the series-based
//! matrix exponential or through multi-stage compilation gets the
//! looser [`ORACLE`] / [`MULTI_STAGE`] budgets.

/// Exact-phase identities: diagonal actions, pulse/inverse cancellation,
/// sector norm conservation. Closed-form arithmetic leaves only a few
/// ulps of rounding, so 1e-12 has orders of magnitude of headroom.
pub const EXACT_PHASE: f64 = 1e-12;

/// Comparisons against the series-based matrix exponential, which
/// accumulates truncation and squaring error.
pub const ORACLE: f64 = 1e-10;

/// Multi-stage compilations (three-level synthesis, chained encoded
/// gates) where several unitary factors compound rounding.
pub const MULTI_STAGE: f64 = 1e-9;

/// Phases smaller than this after normalization into (-pi, pi] are
/// treated as zero and the pulse is dropped. Exact cancellations produce
/// exact zeros; the threshold only guards float residue.
pub const ZERO_PHASE: f64 = 1e-14;

/// Squared amplitude allowed outside the code space before measurement
/// and logical restriction report leakage as an error rather than
/// renormalizing. Leakage above this indicates a compilation bug.
pub const LEAKAGE: f64 = 1e-10;

/// Unitarity defect allowed in a logical restriction of a physical
/// unitary before it is rejected as leaking.
pub const UNITARITY_DEFECT: f64 = 1e-9;

/// Largest matrix element allowed between different excitation-number
/// sectors for a unitary to count as sector preserving.
pub const SECTOR_LEAKAGE: f64 = 1e-12;

/// Hermiticity defect accepted by the matrix-exponential oracle.
pub const HERMITICITY: f64 = 1e-10;

/// Unitarity defect accepted on caller-supplied gate targets.
pub const TARGET_UNITARITY: f64 = 1e-10;
