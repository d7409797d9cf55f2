//! Sequentially Cohen-Macaulay and Cohen-Macaulay edge ideals.
//!
//! Graphs are turned into square-free monomial ideals; the Alexander dual
//! of the edge ideal is generated by the minimal vertex covers. The crate
//! certifies linear quotients of the dual components, computes multigraded
//! Betti numbers through upper Koszul simplicial complexes, decides the
//! sequentially Cohen-Macaulay property and runs randomized campaigns over
//! the whisker results.

pub mod varset;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod quotients;
pub mod homology;
pub mod decide;
pub mod harness;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{Graph, WhiskerMap};
pub use monomial::{Monomial, MonomialIdeal};
pub use varset::{VarSet, VertexSet};
