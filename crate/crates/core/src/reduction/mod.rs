//! Strong bisimilarity and divergence-sensitive stuttering equivalence
//! for parity games, and quotient construction.
//!
//! Both equivalences only relate vertices with equal priority and owner.
//! Stuttering equivalence additionally ignores how many steps it takes to
//! leave a block, as long as divergence (the ability to stay in a block
//! forever) matches.

mod oracle;
mod partition;
mod quotient;
mod refine;

pub use oracle::{is_stuttering_bisimulation, oracle_strong_pairs, oracle_stuttering_pairs, Relation};
pub use partition::{initial_partition, Block, Partition};
pub use quotient::{check_stable, quotient, Equivalence};
pub use refine::{compute_divergent, refine_strong, refine_stuttering};

use crate::game::{Game, Vertex};

/// Refines with the chosen equivalence.
pub fn refine(game: &Game, equivalence: Equivalence) -> Partition {
    match equivalence {
        Equivalence::Strong => refine_strong(game),
        Equivalence::Stuttering => refine_stuttering(game),
    }
}

/// Result of [`reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub partition: Partition,
    pub quotient: Game,
    /// Original vertex to quotient vertex.
    pub map: Vec<Vertex>,
}

/// Refines and quotients in one go.
pub fn reduce(game: &Game, equivalence: Equivalence) -> Reduction {
    let partition = refine(game, equivalence);
    let (quotient, map) = quotient::quotient(game, &partition, equivalence)
        .expect("refinement always yields a stable partition");
    Reduction { partition, quotient, map }
}
