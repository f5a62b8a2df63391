//! Recursive (McNaughton/Zielonka) algorithm, min-parity variant.

use crate::game::{Game, Player, Vertex};

use super::attractor::attract;
use super::Solution;

pub fn solve_zielonka(game: &Game) -> Solution {
    let n = game.vertex_count();
    let mut moves = vec![None; n];
    let all: Vec<Vertex> = game.vertices().collect();
    let [even, _odd] = solve_sub(game, all, &mut moves);
    let mut winner = vec![Player::Odd; n];
    for v in even {
        winner[v] = Player::Even;
    }
    Solution::from_moves(game, winner, &moves)
}

fn mask(n: usize, vertices: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

/// Solves the subgame on `sub` (a trap-closed vertex set, ascending).
///
/// On return, `moves[v]` is a winning move for every vertex whose owner
/// wins it. The tail recursion on the opponent's attractor complement is
/// a loop, so stack depth is bounded by the number of priorities.
fn solve_sub(game: &Game, mut sub: Vec<Vertex>, moves: &mut [Option<Vertex>]) -> [Vec<Vertex>; 2] {
    let n = game.vertex_count();
    let mut won: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
    loop {
        if sub.is_empty() {
            break;
        }
        let alive = mask(n, &sub);
        let least = sub.iter().map(|&v| game.priority(v)).min().unwrap();
        let alpha = Player::of_priority(least);
        let top: Vec<Vertex> = sub.iter().copied().filter(|&v| game.priority(v) == least).collect();
        for &u in &top {
            if game.owner(u) == alpha {
                moves[u] = game.successors(u).iter().copied().find(|&w| alive[w]);
            }
        }
        let attracted = attract(game, &alive, alpha, &top, moves);
        let rest: Vec<Vertex> = sub.iter().copied().filter(|&v| !attracted[v]).collect();
        let sub_won = solve_sub(game, rest, moves);
        let beta = alpha.opponent();
        if sub_won[beta.index()].is_empty() {
            won[alpha.index()].extend_from_slice(&sub);
            break;
        }
        let lost = attract(game, &alive, beta, &sub_won[beta.index()], moves);
        won[beta.index()].extend(sub.iter().copied().filter(|&v| lost[v]));
        sub.retain(|&v| !lost[v]);
    }
    won[0].sort_unstable();
    won[1].sort_unstable();
    won
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, G4_A, G4_B, G4_V};

    #[test]
    fn zielonka_examples() {
        let s = solve_zielonka(&fixtures::g1());
        assert_eq!(s.region(Player::Even), vec![0, 1]);

        let s = solve_zielonka(&fixtures::g4());
        assert_eq!(s.region(Player::Even), vec![G4_V, G4_A]);
        assert_eq!(s.region(Player::Odd), vec![G4_B]);
        assert_eq!(s.strategy(Player::Even).get(G4_V), Some(G4_A));

        let s = solve_zielonka(&fixtures::g5());
        assert_eq!(s.region(Player::Odd), vec![0, 1]);
        assert_eq!(s.region(Player::Even), vec![2]);
        assert_eq!(s.strategy(Player::Odd).get(1), Some(0));
        s.check(&fixtures::g5()).unwrap();
    }

    #[test]
    fn long_chain_does_not_recurse_deeply() {
        let g = fixtures::g2(50_000);
        let s = solve_zielonka(&g);
        assert_eq!(s.region(Player::Odd), Vec::<Vertex>::new());
    }
}
