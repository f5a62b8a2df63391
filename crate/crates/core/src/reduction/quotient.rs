use crate::error::{Error, Result};
use crate::game::{Game, RawGame, Vertex};

use super::partition::{Block, Partition};
use super::refine::{compute_divergent, stuttering_signatures};

/// Which equivalence a partition represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    Strong,
    Stuttering,
}

impl std::str::FromStr for Equivalence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(Equivalence::Strong),
            "stuttering" | "stut" => Ok(Equivalence::Stuttering),
            _ => Err(Error::InvalidParameter(format!("unknown equivalence {s:?}"))),
        }
    }
}

/// Checks that `partition` is a fixpoint of the refinement for `equivalence`.
pub fn check_stable(game: &Game, partition: &Partition, equivalence: Equivalence) -> Result<()> {
    if partition.vertex_count() != game.vertex_count() {
        return Err(Error::UnstablePartition("partition size differs from game".into()));
    }
    for block in partition.blocks() {
        let rep = block[0];
        if let Some(&v) = block
            .iter()
            .find(|&&v| game.priority(v) != game.priority(rep) || game.owner(v) != game.owner(rep))
        {
            return Err(Error::UnstablePartition(format!("{v} and {rep} differ in priority or owner")));
        }
    }
    match equivalence {
        Equivalence::Strong => {
            let succ_blocks = |v: Vertex| {
                let mut s: Vec<Block> = game.successors(v).iter().map(|&w| partition.block_of(w)).collect();
                s.sort_unstable();
                s.dedup();
                s
            };
            for block in partition.blocks() {
                let expected = succ_blocks(block[0]);
                if let Some(&v) = block.iter().find(|&&v| succ_blocks(v) != expected) {
                    return Err(Error::UnstablePartition(format!(
                        "{v} and {} reach different blocks in one step",
                        block[0]
                    )));
                }
            }
        }
        Equivalence::Stuttering => {
            let sig = stuttering_signatures(game, partition);
            for block in partition.blocks() {
                if let Some(&v) = block.iter().find(|&&v| sig[v] != sig[block[0]]) {
                    return Err(Error::UnstablePartition(format!(
                        "{v} and {} differ in divergence or exit blocks",
                        block[0]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Collapses every block to one vertex.
///
/// Priority and owner come from the block's least member. A block gets an
/// edge to every other block one of its members can step into. Self-loops
/// mark blocks with an internal edge (strong) or divergent blocks
/// (stuttering). Returns the quotient and the vertex-to-block map.
pub fn quotient(game: &Game, partition: &Partition, equivalence: Equivalence) -> Result<(Game, Vec<Vertex>)> {
    check_stable(game, partition, equivalence)?;
    let divergent = match equivalence {
        Equivalence::Stuttering => compute_divergent(game, partition),
        Equivalence::Strong => Vec::new(),
    };
    let mut raw = RawGame::with_vertices(partition.block_count());
    for (b, members) in partition.blocks().iter().enumerate() {
        let rep = members[0];
        raw.priority[b] = game.priority(rep);
        raw.owner[b] = game.owner(rep);
        let succ = &mut raw.successors[b];
        for &v in members {
            for &w in game.successors(v) {
                let target = partition.block_of(w);
                if target != b || equivalence == Equivalence::Strong {
                    succ.push(target);
                }
            }
        }
        if equivalence == Equivalence::Stuttering && divergent[rep] {
            succ.push(b);
        }
        assert!(!succ.is_empty(), "quotient block {b} has no successor");
    }
    Ok((Game::from_raw(raw)?, partition.block_map().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{stats, Player};
    use crate::reduction::{refine_strong, refine_stuttering};

    #[test]
    fn stuttering_quotient_of_chain() {
        let g = fixtures::g2(5);
        let (q, map) = quotient(&g, &refine_stuttering(&g), Equivalence::Stuttering).unwrap();
        assert_eq!(q, Game::from_parts(&[(1, Player::Odd, &[1]), (0, Player::Even, &[1])]).unwrap());
        assert_eq!(map, vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(
            crate::game::pgsolver::write_pgsolver(&q, crate::game::pgsolver::Convention::Min),
            "parity 1;\n0 1 1 1;\n1 0 0 1;"
        );
    }

    #[test]
    fn stuttering_quotient_keeps_divergence() {
        let g = fixtures::g5();
        let (q, _) = quotient(&g, &refine_stuttering(&g), Equivalence::Stuttering).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.successors(0), &[0, 1]);
        assert_eq!(q.successors(1), &[1]);
    }

    #[test]
    fn discrete_partition_gives_the_same_game() {
        let g = fixtures::g4();
        let p = refine_strong(&g);
        assert_eq!(p.block_count(), 3);
        let (q, _) = quotient(&g, &p, Equivalence::Strong).unwrap();
        assert_eq!(q, g);
        let (q, _) = quotient(&g, &refine_stuttering(&g), Equivalence::Stuttering).unwrap();
        assert_eq!(q, g);
    }

    #[test]
    fn unstable_partitions_are_rejected() {
        let g = fixtures::g3();
        let coarse = crate::reduction::initial_partition(&g);
        assert!(quotient(&g, &coarse, Equivalence::Strong).is_err());
        assert!(quotient(&g, &coarse, Equivalence::Stuttering).is_ok());
        let lumped = Partition::from_keys([0, 0, 0, 0]);
        assert!(matches!(quotient(&g, &lumped, Equivalence::Stuttering), Err(Error::UnstablePartition(_))));
    }

    #[test]
    fn quotient_of_quotient_is_stable() {
        let g = fixtures::g2(9);
        for eq in [Equivalence::Strong, Equivalence::Stuttering] {
            let p = match eq {
                Equivalence::Strong => refine_strong(&g),
                Equivalence::Stuttering => refine_stuttering(&g),
            };
            let (q, _) = quotient(&g, &p, eq).unwrap();
            let p2 = match eq {
                Equivalence::Strong => refine_strong(&q),
                Equivalence::Stuttering => refine_stuttering(&q),
            };
            let (q2, _) = quotient(&q, &p2, eq).unwrap();
            assert_eq!(stats(&q), stats(&q2));
        }
    }
}
