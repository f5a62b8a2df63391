//! Signature-based partition refinement.
//!
//! Starting from the (priority, owner) partition, every round computes a
//! signature per vertex relative to the current partition and splits each
//! block by signature. The number of blocks only grows, so the loop stops
//! at the first round that does not split anything.

use crate::game::{Game, Vertex};
use crate::graph::Subgraph;

use super::partition::{initial_partition, Block, Partition};

/// Coarsest partition that is a strong bisimulation.
pub fn refine_strong(game: &Game) -> Partition {
    let mut partition = initial_partition(game);
    loop {
        let keys = game.vertices().map(|v| {
            let mut succ: Vec<Block> = game.successors(v).iter().map(|&w| partition.block_of(w)).collect();
            succ.sort_unstable();
            succ.dedup();
            (partition.block_of(v), succ)
        });
        let next = Partition::from_keys(keys);
        let done = next.block_count() == partition.block_count();
        partition = next;
        if done {
            break;
        }
    }
    let divergent = compute_divergent(game, &partition);
    let flags = partition.blocks().iter().map(|b| b.iter().any(|&v| divergent[v])).collect();
    partition.set_divergent(flags);
    partition
}

/// Edges that stay inside a block of `partition`.
fn inert_graph(game: &Game, partition: &Partition) -> Subgraph {
    Subgraph::build(
        game.vertex_count(),
        |_| true,
        |v| game.successors(v).iter().copied().filter(move |&w| partition.same_block(v, w)),
    )
}

/// Per vertex: whether an infinite path exists that never leaves the
/// vertex's block.
pub fn compute_divergent(game: &Game, partition: &Partition) -> Vec<bool> {
    inert_graph(game, partition).can_reach_cycle()
}

/// Stuttering signature of every vertex relative to `partition`: its
/// divergence bit and the blocks it can enter after a (possibly empty)
/// sequence of inert steps.
pub(crate) fn stuttering_signatures(game: &Game, partition: &Partition) -> Vec<(bool, Vec<Block>)> {
    let inert = inert_graph(game, partition);
    let divergent = inert.can_reach_cycle();
    let sccs = inert.sccs();

    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); sccs.count];
    for v in game.vertices() {
        members[sccs.component[v]].push(v);
    }
    // Components are numbered sinks first, so every inert successor
    // component is finished before it is needed.
    let mut exits: Vec<Vec<Block>> = Vec::with_capacity(sccs.count);
    for vertices in &members {
        let mut set = Vec::new();
        for &v in vertices {
            let own = partition.block_of(v);
            for &w in game.successors(v) {
                let b = partition.block_of(w);
                if b != own {
                    set.push(b);
                } else if sccs.component[w] != sccs.component[v] {
                    set.extend_from_slice(&exits[sccs.component[w]]);
                }
            }
        }
        set.sort_unstable();
        set.dedup();
        exits.push(set);
    }
    game.vertices().map(|v| (divergent[v], exits[sccs.component[v]].clone())).collect()
}

/// Coarsest partition that is a divergence-sensitive stuttering
/// bisimulation.
pub fn refine_stuttering(game: &Game) -> Partition {
    let mut partition = initial_partition(game);
    loop {
        let signatures = stuttering_signatures(game, &partition);
        let keys = signatures.into_iter().enumerate().map(|(v, sig)| (partition.block_of(v), sig));
        let next = Partition::from_keys(keys);
        let done = next.block_count() == partition.block_count();
        partition = next;
        if done {
            break;
        }
    }
    let divergent = compute_divergent(game, &partition);
    let flags: Vec<bool> = partition.blocks().iter().map(|b| divergent[b[0]]).collect();
    debug_assert!(partition.blocks().iter().all(|b| b.iter().all(|&v| divergent[v] == divergent[b[0]])));
    partition.set_divergent(flags);
    partition
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::Player;

    #[test]
    fn strong_examples() {
        let p = refine_strong(&fixtures::g3());
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2], vec![3]]);

        for n in 1..6 {
            assert_eq!(refine_strong(&fixtures::g2(n)).block_count(), n + 1);
        }

        let distinct = Game::from_parts(&[(0, Player::Even, &[1]), (1, Player::Even, &[2]), (2, Player::Even, &[0])]).unwrap();
        assert_eq!(refine_strong(&distinct).block_count(), 3);
    }

    #[test]
    fn divergence_examples() {
        let g5 = fixtures::g5();
        let p = crate::reduction::initial_partition(&g5);
        assert_eq!(compute_divergent(&g5, &p), vec![true, true, true]);

        let g2 = fixtures::g2(3);
        let p = crate::reduction::initial_partition(&g2);
        assert_eq!(compute_divergent(&g2, &p), vec![false, false, false, true]);

        let g1 = fixtures::g1();
        assert_eq!(compute_divergent(&g1, &Partition::discrete(2)), vec![false, false]);
    }

    #[test]
    fn stuttering_examples() {
        let p = refine_stuttering(&fixtures::g3());
        assert_eq!(p.blocks(), &[vec![0, 1, 2], vec![3]]);
        assert!(!p.is_divergent(0));
        assert!(p.is_divergent(1));

        for n in [1, 2, 3, 7, 50] {
            let p = refine_stuttering(&fixtures::g2(n));
            assert_eq!(p.block_count(), 2, "n = {n}");
        }

        assert_eq!(refine_stuttering(&fixtures::g1()).blocks(), &[vec![0], vec![1]]);
    }

    #[test]
    fn stuttering_splits_on_divergence() {
        // 0 and 1 share a label and both exit to 2, but only 0 can stall.
        let g = Game::from_parts(&[
            (1, Player::Odd, &[0, 2]),
            (1, Player::Odd, &[2]),
            (0, Player::Even, &[2]),
        ])
        .unwrap();
        let p = refine_stuttering(&g);
        assert_eq!(p.blocks(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn exit_sets_follow_inert_paths() {
        let g = fixtures::g2(3);
        let p = crate::reduction::initial_partition(&g);
        let sig = stuttering_signatures(&g, &p);
        assert_eq!(sig[0], (false, vec![1]));
        assert_eq!(sig[3], (true, vec![]));
    }
}
