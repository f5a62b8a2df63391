//! Lifting winning strategies from a stuttering quotient back to the
//! original game, and checking the result.
//!
//! A quotient strategy says which block to head for next. On the original
//! game the player has to get there through the vertices of the current
//! block. The lifted strategy (*mimick*) picks a concrete target vertex in
//! the chosen block and walks toward it along edges that stay inside the
//! current block; when the quotient strategy stays put (a divergent block)
//! it keeps moving inside the block.
//!
//! Quotient strategies produced by the solvers are memoryless, so all the
//! selections below only depend on the last vertex of the play so far.

mod mimick;
mod verify;

pub use mimick::{
    entry_set, lift_solution, lift_strategy, mimick_next, target_class, target_vertex, DistanceMetric,
    PathStrategyOracle,
};
pub use verify::{verify_strategy, Counterexample};

use crate::error::{Error, Result};
use crate::game::{Game, Player, Strategy, Vertex};
use crate::reduction::{check_stable, Equivalence, Partition, Reduction};
use crate::solvers::Solution;

/// Everything needed to lift one player's quotient strategy.
#[derive(Clone, Debug)]
pub struct LiftContext<'a> {
    pub game: &'a Game,
    pub partition: &'a Partition,
    pub quotient: &'a Game,
    /// Original vertex to quotient vertex (= block id).
    pub map: &'a [Vertex],
    /// Memoryless winning strategy of `player` on the quotient.
    pub quotient_strategy: &'a Strategy,
    /// Quotient vertices won by `player`.
    pub quotient_region: Vec<bool>,
    pub player: Player,
    pub metric: DistanceMetric,
}

impl<'a> LiftContext<'a> {
    pub fn new(
        game: &'a Game,
        partition: &'a Partition,
        quotient: &'a Game,
        map: &'a [Vertex],
        quotient_strategy: &'a Strategy,
        quotient_region: Vec<bool>,
    ) -> Result<LiftContext<'a>> {
        check_stable(game, partition, Equivalence::Stuttering)?;
        if map != partition.block_map() || quotient.vertex_count() != partition.block_count() {
            return Err(Error::Precondition("map is not the quotient map of the partition".into()));
        }
        if quotient_region.len() != quotient.vertex_count() {
            return Err(Error::Precondition("region size differs from quotient".into()));
        }
        quotient_strategy.check(quotient)?;
        let player = quotient_strategy.player();
        for b in quotient.vertices() {
            if quotient_region[b] && quotient.owner(b) == player && !quotient_strategy.is_defined(b) {
                return Err(Error::Precondition(format!("quotient strategy undefined at won block {b}")));
            }
        }
        Ok(LiftContext {
            game,
            partition,
            quotient,
            map,
            quotient_strategy,
            quotient_region,
            player,
            metric: DistanceMetric::Inert,
        })
    }

    /// Context for `player`, taking the quotient strategy and region from a
    /// solution of the quotient.
    pub fn from_solution(
        game: &'a Game,
        reduction: &'a Reduction,
        solution: &'a Solution,
        player: Player,
    ) -> Result<LiftContext<'a>> {
        let region = solution.winners().iter().map(|&w| w == player).collect();
        LiftContext::new(
            game,
            &reduction.partition,
            &reduction.quotient,
            &reduction.map,
            solution.strategy(player),
            region,
        )
    }

    pub fn with_metric(mut self, metric: DistanceMetric) -> Self {
        self.metric = metric;
        self
    }

    pub fn block_of(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    /// Original vertices whose block is won by the player.
    pub fn preimage_region(&self) -> Vec<Vertex> {
        self.game.vertices().filter(|&v| self.quotient_region[self.map[v]]).collect()
    }
}
