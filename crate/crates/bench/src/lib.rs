//! Shared inputs for the benchmarks.

use bethe_core::Complex64;

/// Spectral parameters of the first degenerate three-magnon state of the seven-site ring.
pub fn qubit_params() -> [Complex64; 3] {
    [
        Complex64::new(-0.21990357430657, 0.0),
        Complex64::new(0.4327003993372, 0.5030656947652),
        Complex64::new(0.4327003993372, -0.5030656947652),
    ]
}
