//! Thresholds used by the numeric harness and the CLI.

/// Per-group residual bound for fields that solve the vacuum equations.
/// About 56 multiply-adds per point at O(1) amplitudes.
pub const IDENTITY_RESIDUAL: f64 = 1e-10;

/// Max discrepancy between the algebra-product and vector-calculus routes
/// on polynomial fields of degree at most 3 with coefficients in `[-1, 1]`.
pub const PATH_EQUIVALENCE: f64 = 1e-12;

/// Lower bound on the octonion `q_vec` residual for a plane wave that the
/// split algebra annihilates.
pub const DISCRIMINATION_FLOOR: f64 = 0.1;

/// Relative transversality tolerance for plane-wave polarizations.
pub const TRANSVERSALITY: f64 = 1e-12;

/// Step of the debug-only finite-difference mode.
pub const FD_STEP: f64 = 1e-3;

/// Default sampling box `[-10, 10]^4`.
pub const DEFAULT_BOUNDS: (f64, f64) = (-10.0, 10.0);
