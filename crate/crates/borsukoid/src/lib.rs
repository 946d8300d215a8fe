//! Exact Borsuk numbers and Kneser-graph chromatic numbers of matroids.
//!
//! A matroid's Borsuk number `f(M)` is the least number of parts into which
//! its basis family can be partitioned so that each part has
//! symmetric-difference diameter strictly below the diameter of the whole
//! family (`+inf` when there is a single basis). The matroid has the Borsuk
//! property when `f(M) <= n - c + 1`, with `n` elements and `c` connected
//! components.
//!
//! The crate computes these quantities exactly (the Borsuk number is the
//! chromatic number of the diameter graph on the bases, and equals the
//! chromatic number of the matroid Kneser graph whenever two disjoint bases
//! exist), generates the named matroid families these questions are studied
//! on, builds the constructive partitions behind the known bounds, and ships
//! a verification harness plus a small-matroid counterexample search for the
//! conjecture that every matroid with at least two bases has the Borsuk
//! property.
//!
//! ```
//! use borsukoid::{coloring, families, Budget, BorsukValue};
//!
//! let m = families::uniform(2, 4).unwrap();
//! let result = coloring::borsuk_number(&m, &Budget::unlimited()).unwrap();
//! assert_eq!(result.value, BorsukValue::Finite(2));
//! let cert = result.certificate.unwrap();
//! assert!(coloring::validate_certificate(&m, &cert).is_valid());
//! ```

pub mod coloring;
pub mod dsatur;
pub mod families;
pub mod graphs;
pub mod json;
pub mod matroid;
pub mod set;
pub mod verify;

pub use coloring::{BorsukResult, BorsukValue, Coloring, PartitionCertificate};
pub use dsatur::Budget;
pub use families::{LatticePathSpec, SimpleGraph};
pub use graphs::ConflictGraph;
pub use matroid::{Label, Matroid};
