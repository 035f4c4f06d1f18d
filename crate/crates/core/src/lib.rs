//! Exact toolkit around the minimum pentagon density of graphs with a given
//! edge density: solver-free verification of the positive-semidefinite
//! certificate at Turán densities, extremal constructions with exact
//! 5-cycle counts, and the numerical optimization curve for general edge
//! densities.
//!
//! The crate splits into three layers:
//!
//! * combinatorial plumbing — [`small`] (graphs on up to 8 vertices with
//!   canonical codes), [`graph`] (bitset adjacency for large graphs),
//!   [`graph6`] (interchange format) and [`c5`] (two independent 5-cycle
//!   counting backends);
//! * the certificate — [`poly`] (exact rationals, polynomials and rational
//!   functions in the parameter `k`), [`flagalg`] (rooted-flag products and
//!   the 21x34 coefficient table), [`cert`] (the matrices, positivity
//!   checks, per-class coefficients and null space) and [`identity`] (the
//!   finite-graph quadratic-form identity);
//! * the constructions — [`extremal`] (balanced multipartite graphs with
//!   closed-form counts) and [`fmin`] (the general-density objective, its
//!   constrained minimization and the randomized realization).
//!
//! Heavy inner loops go through [`par`], which maps over rayon when the
//! `parallel` feature (default) is enabled and sequentially otherwise.

pub mod c5;
pub mod cert;
pub mod error;
pub mod extremal;
pub mod flagalg;
pub mod fmin;
pub mod graph;
pub mod graph6;
pub mod identity;
pub mod par;
pub mod poly;
pub mod rng;
pub mod small;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::{PolyK, Rat, RatFnK};
pub use small::{CanonicalCode, RootedFlag, SmallGraph};
