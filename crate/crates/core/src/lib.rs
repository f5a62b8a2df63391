//! Parity game minimisation and solving.
//!
//! The crate reduces a parity game modulo strong bisimilarity or
//! divergence-sensitive stuttering equivalence, solves the (smaller)
//! quotient, and lifts the quotient's winning strategies back to the
//! original game. Both equivalences preserve the winner of every vertex.
//!
//! ```
//! use pgmin::{fixtures, reduction, solvers};
//!
//! let game = fixtures::g2(100);
//! let partition = reduction::refine_stuttering(&game);
//! let (quotient, map) = reduction::quotient(&game, &partition, reduction::Equivalence::Stuttering).unwrap();
//! assert_eq!(quotient.vertex_count(), 2);
//!
//! let direct = solvers::solve_zielonka(&game);
//! let reduced = solvers::solve_zielonka(&quotient);
//! for v in game.vertices() {
//!     assert_eq!(direct.winner(v), reduced.winner(map[v]));
//! }
//! ```

pub mod bench;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod generators;
mod graph;
pub mod reduction;
pub mod solvers;
pub mod strategy;

#[cfg(doctest)]
mod guide;

pub use error::{Error, Result};
pub use game::{Game, Player, Vertex};
