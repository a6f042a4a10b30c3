//! Star edge colorings of Cartesian products of paths and cycles:
//! generators, verification with witnesses, explicit constructions,
//! exhaustive search and a command-line front end.

pub mod cli;
pub mod construct;
pub mod graph;
pub mod io;
pub mod solve;
pub mod tables;
pub mod verify;
