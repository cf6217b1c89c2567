//! Exact computational toolkit for linear octagonal-quadrilateral networks.
//!
//! The network `L_n` consists of two parallel paths on `4n+1` vertices joined
//! by rung edges so that octagonal and quadrilateral faces alternate. Its
//! Laplacian splits, via the fixed-point-free involution swapping the two
//! paths, into a path block `L_A` and a weighted block `L_S`. Everything
//! downstream of that split — principal-minor sequences, their closed forms
//! over `Q(√14)`, the Kirchhoff index and the spanning-tree count — is
//! computed in exact arithmetic and cross-checked against brute-force oracles.
//!
//! Module map:
//! * [`arith`] — big integers, rationals and the quadratic field `Q(√14)`.
//! * [`matrix`] — dense symmetric integer matrices with fraction-free kernels.
//! * [`graph`] — construction of `L_n` and its Laplacian blocks.
//! * [`decompose`] — the involution split, exact characteristic polynomials,
//!   and numeric spectra.
//! * [`minors`] — the corner-minor sequences `c_k`, `e_k` and their closed forms.
//! * [`formulas`] — the headline closed forms: `b_{4n}`, `det L_S`, the
//!   Kirchhoff index and the complexity.
//! * [`oracle`] — independent ground truth: effective resistances, spectral
//!   sums, Matrix-Tree determinants, Wiener index.
//! * [`report`] — the machine-readable verification suite.
//!
//! ```
//! use chainspectra::{formulas, graph, oracle};
//!
//! // Closed forms need no matrix at all.
//! assert_eq!(formulas::kirchhoff(1).unwrap().to_string(), "2155/31");
//! assert_eq!(formulas::complexity(2).unwrap().to_string(), "929");
//!
//! // The brute-force oracles agree exactly.
//! let lap = graph::build_chain(1).unwrap().laplacian();
//! assert_eq!(oracle::kirchhoff_by_resistance(&lap).unwrap(), formulas::kirchhoff(1).unwrap());
//! assert_eq!(oracle::spanning_trees_mtt(&lap, 0).to_string(), "31");
//! ```

pub mod arith;
pub mod decompose;
mod error;
pub mod formulas;
pub mod graph;
pub mod matrix;
pub mod minors;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
