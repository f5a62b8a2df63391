//! Small progress measures.
//!
//! Runs on the max-parity form of the game. A measure assigns each vertex
//! either ⊤ or a tuple with one counter per odd priority, compared
//! lexicographically with the highest priority most significant. Measures
//! are lifted from a worklist seeded with every vertex in ascending order;
//! ⊤ marks the vertices the odd player wins.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::game::{convert_priorities, ConvertDirection, Game, Player, Vertex};

use super::Solution;

/// Per-vertex value in the progress-measure lattice. `None` is ⊤.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressMeasure(Option<Vec<u32>>);

impl ProgressMeasure {
    pub fn is_top(&self) -> bool {
        self.0.is_none()
    }
}

impl PartialOrd for ProgressMeasure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProgressMeasure {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(a), Some(b)) => a.iter().rev().cmp(b.iter().rev()),
        }
    }
}

struct Lattice {
    /// `bound[j]` = number of vertices with priority `2j + 1`.
    bound: Vec<u32>,
}

impl Lattice {
    fn new(game: &Game) -> Lattice {
        let slots = (game.max_priority() as usize).div_ceil(2);
        let mut bound = vec![0u32; slots];
        for &p in game.priorities() {
            if p % 2 == 1 {
                bound[(p / 2) as usize] += 1;
            }
        }
        Lattice { bound }
    }

    fn bottom(&self) -> ProgressMeasure {
        ProgressMeasure(Some(vec![0; self.bound.len()]))
    }

    /// Least measure `m` with `m >= rho` (even `priority`) or `m > rho`
    /// (odd `priority`), where only counters for priorities at least
    /// `priority` take part in the comparison.
    fn prog(&self, rho: &ProgressMeasure, priority: u32) -> ProgressMeasure {
        let Some(counters) = &rho.0 else {
            return ProgressMeasure(None);
        };
        let first = (priority / 2) as usize;
        let mut m = counters.clone();
        let len = m.len();
        for c in &mut m[..first.min(len)] {
            *c = 0;
        }
        if priority.is_multiple_of(2) {
            return ProgressMeasure(Some(m));
        }
        for j in first..m.len() {
            if m[j] < self.bound[j] {
                m[j] += 1;
                return ProgressMeasure(Some(m));
            }
            m[j] = 0;
        }
        ProgressMeasure(None)
    }
}

/// Lifts to the least fixpoint. A vertex is revisited only after one of
/// its successors changed.
fn lift_to_fixpoint(game: &Game) -> Vec<ProgressMeasure> {
    let lattice = Lattice::new(game);
    let mut rho = vec![lattice.bottom(); game.vertex_count()];
    let mut queued = vec![true; game.vertex_count()];
    let mut work: VecDeque<Vertex> = game.vertices().collect();
    while let Some(v) = work.pop_front() {
        queued[v] = false;
        if rho[v].is_top() {
            continue;
        }
        let p = game.priority(v);
        let candidates = game.successors(v).iter().map(|&w| lattice.prog(&rho[w], p));
        let lifted = match game.owner(v) {
            Player::Even => candidates.min().unwrap(),
            Player::Odd => candidates.max().unwrap(),
        };
        debug_assert!(lifted >= rho[v], "lifting is monotone");
        if lifted > rho[v] {
            rho[v] = lifted;
            for &u in game.predecessors(v) {
                if !queued[u] {
                    queued[u] = true;
                    work.push_back(u);
                }
            }
        }
    }
    rho
}

/// Even's winning region and a winning strategy on it, for a min-parity game.
fn even_region(game: &Game) -> (Vec<bool>, Vec<Option<Vertex>>) {
    let max_game = convert_priorities(game, ConvertDirection::MinToMax);
    let rho = lift_to_fixpoint(&max_game);
    let lattice = Lattice::new(&max_game);
    let mut moves = vec![None; game.vertex_count()];
    let won: Vec<bool> = rho.iter().map(|m| !m.is_top()).collect();
    for v in game.vertices() {
        if won[v] && game.owner(v) == Player::Even {
            let p = max_game.priority(v);
            moves[v] = game
                .successors(v)
                .iter()
                .copied()
                .min_by(|&a, &b| lattice.prog(&rho[a], p).cmp(&lattice.prog(&rho[b], p)));
        }
    }
    (won, moves)
}

pub fn solve_spm(game: &Game) -> Solution {
    let (even_won, even_moves) = even_region(game);
    // the odd player's strategy is the even strategy of the dual game
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
    Solution::from_moves(game, winner, &moves)
}
