pub mod algebra;
pub mod combinatorics;
pub mod field;
pub mod group;
pub mod interval;
pub mod linalg;
pub mod models;
pub mod parse;
pub mod poly;
pub mod subspace;
pub mod engine;
pub mod semi;
pub mod io;
pub mod cli;
