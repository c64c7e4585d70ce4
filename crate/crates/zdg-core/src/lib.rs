//! Zero-divisor graphs of finite commutative rings, threshold-graph
//! machinery, and constructive embeddings of arbitrary finite graphs into
//! zero-divisor graphs.
//!
//! The toolkit has six parts:
//! - [`graph`]: simple graphs, graph6/edgelist formats, induced-subgraph
//!   search, intersection representations, the finite extension-property
//!   check;
//! - [`threshold`]: threshold-graph recognition with certificates,
//!   forbidden-subgraph witnesses, nested-split decompositions, dismantling;
//! - [`ring`]: the finite-commutative-ring contract and its realizations
//!   (Boolean, modular, product, small Galois field, monomial quotient,
//!   structure-constant table);
//! - [`zdg`]: zero-divisor graph computation and threshold-related ring
//!   tests;
//! - [`embed`]: four constructive embedding backends plus the independent
//!   verifier;
//! - [`dotprod`]: the red/green/blue trichotomy embedding into A^2 and the
//!   2-dimensional dot product graph.

mod error;
pub mod graph;
pub mod ring;
pub mod threshold;
pub mod zdg;

pub use error::{Error, Result};
pub use ring::DEFAULT_ENUMERATION_CAP;
