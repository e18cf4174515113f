//! Few-cliques tree decompositions of map graphs and the DP solvers built on them.
//!
//! A map graph is given by its planar bipartite witness `B`; the pipeline is
//! witness -> half-square -> decomposition of `B` -> few-cliques decomposition
//! of `G` -> crossing-capped DP.

pub mod crossing;
pub mod decomposition;
pub mod few_cliques;
pub mod graph_core;
pub mod pipeline;
pub mod solvers;
pub mod testbench;

pub use decomposition::{NiceTreeDecomposition, TreeDecomposition};
pub use few_cliques::FewCliquesDecomposition;
pub use graph_core::{BipartiteWitness, Graph, MapGraph};
pub use pipeline::Instance;
pub use solvers::{Problem, SolveOptions, SolveResult};
