//! Finite-group computation engine and graph analyzer for conjugacy-class
//! sizes.
//!
//! Given a finite group, realized concretely as a permutation group or a
//! Cayley table, this crate computes its conjugacy classes and builds two
//! graphs from them: the common-divisor graph on the distinct noncentral
//! class sizes (two sizes adjacent when they share a prime factor) and the
//! prime graph on the primes dividing some class size (two primes adjacent
//! when one class size is divisible by both). On top of those it checks a
//! family of structural claims — among them that a k-regular common-divisor
//! graph with k >= 1 is the complete graph on k+1 vertices — over a catalog
//! of built-in group families and user-supplied groups.

pub mod analysis;
pub mod arith;
pub mod bitset;
pub mod catalog;
pub mod classes;
mod error;
pub mod graphs;
pub mod group;
pub mod perm;

pub use analysis::{analyze, AnalysisConfig, AnalysisReport};
pub use catalog::{enumerate_catalog, make_family, CatalogEntry, FamilyFilter, FamilySpec};
pub use classes::{ClassEntry, ClassTable};
pub use error::{Error, Result};
pub use graphs::{build_delta, build_gamma, PrimeGraph, SizeGraph};
pub use group::{Group, GroupElement, DEFAULT_ORDER_CAP};
pub use perm::Permutation;
