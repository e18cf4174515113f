//! Crossing normalization: completing path systems inside a clique, rerouting
//! cycles and regrouping triangle packings so that few solution edges leave
//! any subtree of the few-cliques decomposition.

mod complete;
mod paths;
mod profile;
mod reroute;
mod sdr;
mod triangles;

pub use complete::complete_paths_to_cycle;
pub use paths::{PathSystem, PathSystemError};
pub use profile::{clique_fake_crossing, crossing_profile, CrossingProfile};
pub use reroute::{clique_fake_order, cycle_edges, normalize_cycle, reroute_cycle_in_clique};
pub use sdr::{system_of_distinct_representatives, SdrError};
pub use triangles::{normalize_triangle_packing, Triangle};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossingError {
    #[error("need at least 3 listed vertices, got {0}")]
    TooFewVertices(usize),
    #[error("listed vertices are not exactly the endpoints of the path system")]
    NotEndpoints,
    #[error("vertex {0} is listed twice")]
    Repeated(usize),
    #[error("not a simple cycle of the graph")]
    NotACycle,
    #[error("special {0} does not exist")]
    NoSuchSpecial(usize),
    #[error("triangle {0:?} is not inside clique {1}")]
    NotInHost([usize; 3], usize),
    #[error("triangles share vertex {0}")]
    Overlap(usize),
    #[error("vertex count {count} of clique {special} is not a multiple of 3")]
    NotDivisible { special: usize, count: usize },
    #[error(transparent)]
    Paths(#[from] PathSystemError),
}
