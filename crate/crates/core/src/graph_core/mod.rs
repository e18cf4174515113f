mod graph;
mod witness;

pub use graph::Graph;
pub use witness::{
    half_square, parse_witness, validate_witness, BipartiteWitness, MapGraph, ParseError,
    WitnessError, WitnessReport, WitnessViolation,
};
