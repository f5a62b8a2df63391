//! Independent check that a memoryless strategy wins a vertex set.

use std::fmt;

use crate::game::{Game, Player, Strategy, Vertex};
use crate::graph::Subgraph;

/// Why a strategy does not win its claimed region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// The strategy has no move at a vertex of the player inside the region.
    Undefined(Vertex),
    /// A move of the strategy, or any move of the opponent, leaves the region.
    Escape { from: Vertex, to: Vertex },
    /// A cycle the opponent can enforce whose least priority favours them.
    /// The first vertex is repeated at the end.
    LosingCycle(Vec<Vertex>),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Undefined(v) => write!(f, "strategy undefined at {v}"),
            Counterexample::Escape { from, to } => write!(f, "edge {from} -> {to} leaves the region"),
            Counterexample::LosingCycle(cycle) => {
                let path: Vec<String> = cycle.iter().map(ToString::to_string).collect();
                write!(f, "losing cycle {}", path.join(" -> "))
            }
        }
    }
}

impl std::error::Error for Counterexample {}

/// Checks that `strategy` wins every vertex of `region` for `player`.
///
/// The region must be closed: the opponent cannot leave it and the
/// strategy never does. Then every cycle of the graph where `player`
/// follows `strategy` and the opponent keeps all edges must have a least
/// priority of `player`'s parity. The cycle condition is checked once per
/// opponent priority with an SCC decomposition.
pub fn verify_strategy(game: &Game, player: Player, region: &[Vertex], strategy: &Strategy) -> Result<(), Counterexample> {
    let n = game.vertex_count();
    let mut inside = vec![false; n];
    for &v in region {
        inside[v] = true;
    }
    for &v in region {
        if game.owner(v) == player {
            let w = strategy.get(v).ok_or(Counterexample::Undefined(v))?;
            if !inside[w] || !game.has_edge(v, w) {
                return Err(Counterexample::Escape { from: v, to: w });
            }
        } else if let Some(&w) = game.successors(v).iter().find(|&&w| !inside[w]) {
            return Err(Counterexample::Escape { from: v, to: w });
        }
    }

    let restricted = |v: Vertex| -> Vec<Vertex> {
        if game.owner(v) == player {
            vec![strategy.get(v).unwrap()]
        } else {
            game.successors(v).to_vec()
        }
    };
    let mut bad_priorities: Vec<u32> = region
        .iter()
        .map(|&v| game.priority(v))
        .filter(|&p| Player::of_priority(p) != player)
        .collect();
    bad_priorities.sort_unstable();
    bad_priorities.dedup();
    for q in bad_priorities {
        let sub = Subgraph::build(n, |v| inside[v] && game.priority(v) >= q, restricted);
        let sccs = sub.sccs();
        if let Some(v) = region
            .iter()
            .copied()
            .find(|&v| game.priority(v) == q && sccs.cyclic[sccs.component[v]])
        {
            let c = sccs.component[v];
            let within = Subgraph::build(n, |x| sub.is_member(x) && sccs.component[x] == c, |x| sub.successors(x).to_vec());
            let cycle = within.shortest_path(v, v).expect("cyclic component has a cycle through each member");
            return Err(Counterexample::LosingCycle(cycle));
        }
    }
    Ok(())
}
