//! Max-Cut on unit disk graphs.
//!
//! Compiles any graph of maximum degree 4 into a unit disk graph with an
//! exact proximity model whose maximum cut determines the original one:
//! `mc(U(G)) = mc(G) + 8k + t`, where `k` counts crossing gadgets and `t` the
//! subdivision vertices added along original edges. The crate also ships the
//! exact solvers and checkers used to certify each step.

pub mod certify;
pub mod cli;
pub mod drawing;
pub mod gadget;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod model;
pub mod random;
pub mod reduction;
pub mod render;
pub mod solvers;

pub use graph::{Cut, Edge, Graph};
pub use model::ProximityModel;
