//! Exact arithmetic for the slices of the permutahedron fixed by
//! permutation actions.
//!
//! The permutahedron of order `n` is the convex hull of the `n!` points
//! whose coordinates are the numbers `1..=n`. A permutation acting on
//! coordinates fixes a slice of it; for a permutation with `m` cycles of
//! lengths `l_1 >= ... >= l_m` that slice is an `(m-1)`-dimensional zonotope
//! with `m!` vertices and normalized volume `n^(m-2) * gcd(l_1, ..., l_m)`.
//! This crate computes those slices exactly — vertices, membership tests,
//! zonotope generators, volumes along three mutually independent routes, and
//! lattice-point counts of integer dilates — with arbitrary-precision
//! integers and rationals throughout. No floating point, ever.
//!
//! Modules:
//! - [`exact`]: scalar types (big integers, big rationals, points).
//! - [`matrix`]: integer matrices, minor gcds, one-equation lattice solving.
//! - [`perm`]: permutations, cycle types, inversion statistics.
//! - [`polytope`]: the fixed slice itself, in all of its descriptions.
//! - [`tree`]: labeled-tree enumeration by Prüfer sequences.
//! - [`volume`]: closed-form and tiling volumes, per-tree parallelotopes.
//! - [`ehrhart`]: dilate lattice-point counts and the interpolation oracle.
//! - [`subgroup`]: partition joins and subgroup-to-permutation reduction.

pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod matrix;
pub mod perm;
pub mod polytope;
pub mod subgroup;
pub mod tree;
pub mod volume;

pub use error::{Error, Result};
pub use exact::{Int, Rational, RationalPoint};
pub use perm::{CycleType, PairTable, Permutation};
pub use polytope::FixedPolytope;
pub use subgroup::SetPartition;
pub use tree::SpanningTree;
pub use volume::VolumeReport;
