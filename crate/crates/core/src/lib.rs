//! Exact topological invariants of smooth complete intersections in
//! projective space, and a finite verification of which convex rationally
//! connected complete intersections can exist.
//!
//! The layers build on each other:
//!
//! - [`exact_arith`]: big-integer polynomials, Gaussian integers, truncated
//!   power series.
//! - [`ci_topology`]: Euler characteristic, middle Betti number and
//!   Poincaré polynomial of a type `(d₁, …, d_l)` in `P^n`.
//! - [`lines_fibers`]: dimensions attached to lines on `X` and the fiber
//!   of lines through a point.
//! - [`classification`]: the vanishing-at-`i` case analysis and the
//!   obstruction pipeline, with exhaustive scans.

pub mod ci_topology;
pub mod classification;
pub mod exact_arith;
pub mod lines_fibers;

pub use ci_topology::{CIType, InvariantReport};
pub use classification::{LemmaCase, ScanReport, Verdict, VerdictKind};
pub use exact_arith::{GaussianInteger, IntPolynomial, Integer};
