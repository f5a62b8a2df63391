//! Complete parity game solvers.
//!
//! All solvers return a [`Solution`]: the winner of every vertex together
//! with a memoryless winning strategy for each player on their region.

mod attractor;
mod brute;
mod spm;
mod zielonka;

pub use attractor::attractor;
pub use brute::{solve_brute, BRUTE_MAX_STRATEGIES, BRUTE_MAX_VERTICES};
pub use spm::solve_spm;
pub use zielonka::solve_zielonka;

use crate::error::{Error, Result};
use crate::game::pgsolver::SolutionRecord;
use crate::game::{Game, Player, Strategy, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    winner: Vec<Player>,
    strategies: [Strategy; 2],
}

impl Solution {
    /// Assembles a solution from a winner function and one move per vertex,
    /// keeping the move only where the owner wins.
    pub(crate) fn from_moves(game: &Game, winner: Vec<Player>, moves: &[Option<Vertex>]) -> Solution {
        let n = game.vertex_count();
        let mut strategies = [Strategy::empty(Player::Even, n), Strategy::empty(Player::Odd, n)];
        for v in game.vertices() {
            let owner = game.owner(v);
            if owner == winner[v] {
                let w = moves[v].expect("winning owner has a move");
                strategies[owner.index()].set(v, w);
            }
        }
        Solution { winner, strategies }
    }

    pub fn winner(&self, v: Vertex) -> Player {
        self.winner[v]
    }

    pub fn winners(&self) -> &[Player] {
        &self.winner
    }

    pub fn strategy(&self, player: Player) -> &Strategy {
        &self.strategies[player.index()]
    }

    /// Vertices won by `player`, ascending.
    pub fn region(&self, player: Player) -> Vec<Vertex> {
        (0..self.winner.len()).filter(|&v| self.winner[v] == player).collect()
    }

    /// Checks the structural invariants: strategies are defined exactly on
    /// owned, won vertices and never leave the region.
    pub fn check(&self, game: &Game) -> Result<()> {
        for player in [Player::Even, Player::Odd] {
            let s = self.strategy(player);
            s.check(game)?;
            for v in game.vertices() {
                let expected = game.owner(v) == player && self.winner[v] == player;
                if s.is_defined(v) != expected {
                    return Err(Error::InvalidStrategy(format!("{player} strategy domain wrong at {v}")));
                }
                if let Some(w) = s.get(v) {
                    if self.winner[w] != player {
                        return Err(Error::InvalidStrategy(format!("{player} move {v} -> {w} leaves the region")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_record(&self) -> SolutionRecord {
        let moves = (0..self.winner.len()).map(|v| self.strategy(self.winner[v]).get(v)).collect();
        SolutionRecord { winner: self.winner.clone(), moves }
    }

    /// Rebuilds a solution from a file record, checking it against the game.
    pub fn from_record(game: &Game, record: &SolutionRecord) -> Result<Solution> {
        if record.winner.len() != game.vertex_count() {
            return Err(Error::InvalidStrategy("solution size differs from game".into()));
        }
        let n = game.vertex_count();
        let mut strategies = [Strategy::empty(Player::Even, n), Strategy::empty(Player::Odd, n)];
        for v in game.vertices() {
            let winner = record.winner[v];
            match (record.moves[v], game.owner(v) == winner) {
                (Some(w), true) => strategies[winner.index()].set(v, w),
                (None, false) => {}
                (Some(_), false) => {
                    return Err(Error::InvalidStrategy(format!("move given at {v} but its owner loses")))
                }
                (None, true) => return Err(Error::InvalidStrategy(format!("move missing at {v}"))),
            }
        }
        for s in &strategies {
            s.check(game)?;
        }
        Ok(Solution { winner: record.winner.clone(), strategies })
    }
}

/// Whether `v` and `u` are won by the same player.
pub fn winner_equivalent(solution: &Solution, v: Vertex, u: Vertex) -> bool {
    solution.winner(v) == solution.winner(u)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Zielonka,
    Spm,
    Brute,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Zielonka => "zielonka",
            Algorithm::Spm => "spm",
            Algorithm::Brute => "brute",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zielonka" => Ok(Algorithm::Zielonka),
            "spm" => Ok(Algorithm::Spm),
            "brute" => Ok(Algorithm::Brute),
            _ => Err(Error::InvalidParameter(format!("unknown algorithm {s:?}"))),
        }
    }
}

pub fn solve(game: &Game, algorithm: Algorithm) -> Result<Solution> {
    match algorithm {
        Algorithm::Zielonka => Ok(solve_zielonka(game)),
        Algorithm::Spm => Ok(solve_spm(game)),
        Algorithm::Brute => solve_brute(game),
    }
}
