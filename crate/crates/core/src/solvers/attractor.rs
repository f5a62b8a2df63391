use std::collections::VecDeque;

use crate::game::{Game, Player, Vertex};

/// Vertices from which `player` can force the play into `target`.
///
/// Result is sorted ascending.
pub fn attractor(game: &Game, player: Player, target: &[Vertex]) -> Vec<Vertex> {
    let alive = vec![true; game.vertex_count()];
    let mut moves = vec![None; game.vertex_count()];
    let inside = attract(game, &alive, player, target, &mut moves);
    game.vertices().filter(|&v| inside[v]).collect()
}

/// Attractor within the subgame `alive`, by predecessor counting.
///
/// For every `player` vertex added (not already in `target`), `moves`
/// receives an edge into the set. Returns the membership mask.
pub(crate) fn attract(
    game: &Game,
    alive: &[bool],
    player: Player,
    target: &[Vertex],
    moves: &mut [Option<Vertex>],
) -> Vec<bool> {
    let mut inside = vec![false; game.vertex_count()];
    let mut remaining: Vec<usize> = vec![usize::MAX; game.vertex_count()];
    let mut queue = VecDeque::with_capacity(target.len());
    for &t in target {
        if !inside[t] {
            inside[t] = true;
            queue.push_back(t);
        }
    }
    while let Some(w) = queue.pop_front() {
        for &u in game.predecessors(w) {
            if !alive[u] || inside[u] {
                continue;
            }
            if game.owner(u) == player {
                inside[u] = true;
                moves[u] = Some(w);
                queue.push_back(u);
            } else {
                if remaining[u] == usize::MAX {
                    remaining[u] = game.successors(u).iter().filter(|&&x| alive[x]).count();
                }
                remaining[u] -= 1;
                if remaining[u] == 0 {
                    inside[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    inside
}
