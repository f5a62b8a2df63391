//! Exhaustive solver over memoryless strategies, for cross-checking the
//! real solvers on tiny games.
//!
//! For every memoryless strategy of the even player the remaining game is a
//! one-player game for odd, which odd wins from exactly the vertices that
//! can reach a cycle whose least priority is odd. By memoryless determinacy
//! even wins a vertex iff some strategy keeps it out of that set.

use crate::error::{Error, Result};
use crate::game::{Game, Player, Vertex};
use crate::graph::Subgraph;

use super::Solution;

pub const BRUTE_MAX_VERTICES: usize = 10;
pub const BRUTE_MAX_STRATEGIES: u64 = 1_000_000;

fn strategy_count(game: &Game, player: Player) -> u64 {
    game.vertices()
        .filter(|&v| game.owner(v) == player)
        .map(|v| game.successors(v).len() as u64)
        .fold(1u64, |acc, d| acc.saturating_mul(d))
}

pub fn solve_brute(game: &Game) -> Result<Solution> {
    if game.vertex_count() > BRUTE_MAX_VERTICES {
        return Err(Error::BoundExceeded(format!(
            "{} vertices, at most {BRUTE_MAX_VERTICES} supported",
            game.vertex_count()
        )));
    }
    for player in [Player::Even, Player::Odd] {
        let count = strategy_count(game, player);
        if count > BRUTE_MAX_STRATEGIES {
            return Err(Error::BoundExceeded(format!("{count} memoryless strategies for {player}")));
        }
    }
    let (even_won, even_moves) = even_region(game);
    let (odd_won, odd_moves) = even_region(&game.dual());
    debug_assert!(even_won.iter().zip(&odd_won).all(|(a, b)| a != b));
    let winner: Vec<Player> = even_won.iter().map(|&w| if w { Player::Even } else { Player::Odd }).collect();
    let moves: Vec<Option<Vertex>> = game
        .vertices()
        .map(|v| match game.owner(v) {
            Player::Even => even_moves[v],
            Player::Odd => odd_moves[v],
        })
        .collect();
    Ok(Solution::from_moves(game, winner, &moves))
}

/// Vertices odd wins in the one-player game left after even fixes `choice`.
fn odd_wins_against(game: &Game, choice: &[Option<Vertex>]) -> Vec<bool> {
    let edges = |v: Vertex| -> Vec<Vertex> {
        match choice[v] {
            Some(w) => vec![w],
            None => game.successors(v).to_vec(),
        }
    };
    let n = game.vertex_count();
    let full = Subgraph::build(n, |_| true, edges);
    let mut bad = vec![false; n];
    let mut odd_priorities: Vec<u32> = game.priorities().iter().copied().filter(|p| p % 2 == 1).collect();
    odd_priorities.sort_unstable();
    odd_priorities.dedup();
    for q in odd_priorities {
        // a cycle with least priority q lives in an SCC of the vertices
        // with priority >= q that contains a q-vertex
        let sub = Subgraph::build(n, |v| game.priority(v) >= q, |v| full.successors(v).to_vec());
        let sccs = sub.sccs();
        for v in game.vertices() {
            if game.priority(v) == q && sccs.cyclic[sccs.component[v]] {
                bad[v] = true;
            }
        }
    }
    // backward reachability of the bad cycles
    let mut won = bad.clone();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| bad[v]).collect();
    while let Some(w) = stack.pop() {
        for &u in game.predecessors(w) {
            if !won[u] && full.successors(u).contains(&w) {
                won[u] = true;
                stack.push(u);
            }
        }
    }
    won
}

/// Even's region and one uniform winning strategy on it.
fn even_region(game: &Game) -> (Vec<bool>, Vec<Option<Vertex>>) {
    let even: Vec<Vertex> = game.vertices().filter(|&v| game.owner(v) == Player::Even).collect();
    let mut digits = vec![0usize; even.len()];
    let mut choice = vec![None; game.vertex_count()];
    let mut union = vec![false; game.vertex_count()];
    let mut best: Option<(usize, Vec<Option<Vertex>>)> = None;
    loop {
        for (k, &v) in even.iter().enumerate() {
            choice[v] = Some(game.successors(v)[digits[k]]);
        }
        let odd = odd_wins_against(game, &choice);
        let won = odd.iter().filter(|&&o| !o).count();
        for v in game.vertices() {
            union[v] |= !odd[v];
        }
        if best.as_ref().is_none_or(|(b, _)| won > *b) {
            best = Some((won, choice.clone()));
        }
        // next strategy, odometer style
        let mut k = 0;
        while k < even.len() {
            digits[k] += 1;
            if digits[k] < game.successors(even[k]).len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == even.len() {
            break;
        }
    }
    let (won, moves) = best.unwrap();
    assert_eq!(
        won,
        union.iter().filter(|&&w| w).count(),
        "some memoryless strategy wins the whole region"
    );
    (union, moves)
}
