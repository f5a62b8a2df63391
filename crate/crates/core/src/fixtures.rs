//! Small named games used throughout the tests and the guide.
//!
//! | name | shape |
//! |------|-------|
//! | `g1` | `v0 (0, even) <-> v1 (1, odd)` |
//! | `g2(n)` | odd chain `c1 -> .. -> cn` of priority 1 into an even sink `x` of priority 0 |
//! | `g3` | `v0 -> v1 -> w`, `v2 -> w`, all `v` at (0, even), `w` an odd sink of priority 1 |
//! | `g4` | even `v` choosing between sinks `a` (priority 0) and `b` (priority 1) |
//! | `g5` | odd cycle `c1 <-> c2` of priority 1 with an exit `c2 -> x` into an even sink |

use crate::game::{Game, Player, Vertex};

pub fn g1() -> Game {
    Game::from_parts(&[(0, Player::Even, &[1]), (1, Player::Odd, &[0])]).unwrap()
}

/// Chain of `n` odd vertices into the sink at index `n`.
pub fn g2(n: usize) -> Game {
    crate::generators::gen_chain(n, 1, Player::Odd, 0).unwrap()
}

pub fn g3() -> Game {
    crate::generators::gen_branch()
}

pub const G4_V: Vertex = 0;
pub const G4_A: Vertex = 1;
pub const G4_B: Vertex = 2;

pub fn g4() -> Game {
    Game::from_parts(&[
        (2, Player::Even, &[G4_A, G4_B]),
        (0, Player::Odd, &[G4_A]),
        (1, Player::Even, &[G4_B]),
    ])
    .unwrap()
}

pub fn g5() -> Game {
    crate::generators::gen_divergent_pair()
}
