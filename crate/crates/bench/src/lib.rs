//! Benchmark-only crate; the benches live under `benches/`.
//!
//! Shared fixtures for the benchmarks.

use omkit_core::geometry::RationalArrangement;
use omkit_core::matroid::CovectorSet;

/// The general-position five-plane arrangement.
pub fn gp53() -> RationalArrangement {
    RationalArrangement::general_position(5, 3).expect("valid parameters")
}

/// Coned covectors of the five-plane general-position arrangement.
pub fn coned_gp53_covectors() -> CovectorSet {
    gp53().cone().face_covectors().expect("within bounds")
}
