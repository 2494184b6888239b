//! Exact resistance distances, Kirchhoff indices and matching numbers of
//! unicyclic graphs, with exhaustive enumeration for checking extremal claims.

pub mod enumeration;
pub mod families;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod rational;
pub mod resistance;
pub mod verification;

pub use enumeration::{canonical_code, enumerate_unicyclic, extremal_search, CanonicalCode, Invariant};
pub use families::FamilySpec;
pub use graph::{Graph, GraphError};
pub use rational::Rational;
pub use resistance::{kirchhoff_index, kirchhoff_vertex_sum};
