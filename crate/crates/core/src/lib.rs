//! Triangle-congruence 3-graphs: geometry, hypergraph search, realizability,
//! Lagrangian bounds, density constructions and small Turán numbers.

pub mod bounds;
pub mod cli;
pub mod geometry;
pub mod hypergraph;
pub mod lagrangian;
pub mod realizability;
pub mod turan;
