//! Instance generators, brute-force oracles and small fixtures.

mod fixtures;
mod generate;
mod oracle;
mod random;

pub use fixtures::{fig4_instance, fig4_nice, star_witness};
pub use generate::{generate, GenError, GenSpec};
pub use oracle::{brute_force_solve, OracleError, ORACLE_MAX_CYCLE, ORACLE_MAX_DELETION};
pub use random::{random_cycle, random_triangle_packing};
