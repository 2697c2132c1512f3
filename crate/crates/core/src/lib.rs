//! Integral circulant graphs.
//!
//! A circulant graph `G(n; S)` lives on the residues mod `n`, with `u ~ v`
//! whenever `u − v` lies in the symbol `S`. This crate builds and classifies
//! such graphs and analyses the integral ones (those with integer spectra):
//!
//! * [`numtheory`]: factorization, φ, μ, divisors and Ramanujan sums.
//! * [`graph`]: symbols, gcd classes, divisor sets, connectivity, bipartiteness.
//! * [`spectral`]: numeric and exact spectra, rationality and bipartite tests.
//! * [`diameter`]: diameters by iterated sumsets, generator numbers, families
//!   with prescribed diameter.
//! * [`extremal`]: enumeration and the maximum order at fixed degree.
//! * [`quantum`]: walk operators, periods and perfect state transfer.
//! * [`parse`] and [`report`]: text input and JSON/CSV output.

pub mod diameter;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod numtheory;
pub mod parse;
pub mod quantum;
pub mod report;
pub mod residue;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{CirculantGraph, DivisorSet, SymbolSet};
