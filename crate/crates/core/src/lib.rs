//! Exact combinatorics of hyperplane arrangements and oriented matroids.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! rational arrangement --faces--> sign vectors --cone/mark--> oriented matroid
//!        |                                                         |
//!        +--normals--> chirotope --cocircuits--> covectors --------+
//! ```
//!
//! with classification (canonical forms under the signed-permutation group),
//! enumeration of oriented-matroid isomorphism classes, and a coordinate
//! catalog of small line and plane arrangements on top.
//!
//! All geometric decisions use arbitrary-precision rational arithmetic; there
//! is no floating point anywhere in the decision paths.

pub mod catalog;
pub mod chirotope;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod geometry;
pub mod io;
pub mod iso;
pub mod matroid;
pub mod poset;
pub mod sign;

pub use chirotope::Chirotope;
pub use error::{Error, Result};
pub use geometry::{GeometricFace, Hyperplane, Rat, RationalArrangement};
pub use iso::{CanonicalForm, Fingerprint};
pub use matroid::{AffineOrientedMatroid, AxiomReport, CovectorSet};
pub use poset::FacePoset;
pub use sign::{Sign, SignVector, SignedPermutation};
