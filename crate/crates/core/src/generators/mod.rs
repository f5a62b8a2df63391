//! Game families for tests and benchmarks.

mod rng;

pub use rng::{SplitMix64, Xoshiro256};

use crate::error::{Error, Result};
use crate::game::{Game, Player, Priority, RawGame, Vertex};

/// Seeded random game.
///
/// For each vertex in ascending order the generator draws, in this order:
/// the priority (uniform in `0..=max_priority`), the owner (0 even,
/// 1 odd), the out-degree `k` (uniform in `1..=min(max_degree, n)`), then
/// `k` distinct successors, redrawing any repeat. All draws use
/// [`Xoshiro256::below`].
pub fn gen_random(n: usize, max_degree: usize, max_priority: Priority, seed: u64) -> Result<Game> {
    if n == 0 || max_degree == 0 {
        return Err(Error::InvalidParameter("random games need n >= 1 and max degree >= 1".into()));
    }
    let mut rng = Xoshiro256::seed_from_u64(seed);
    let mut raw = RawGame::with_vertices(n);
    for v in 0..n {
        raw.priority[v] = rng.below(u64::from(max_priority) + 1) as Priority;
        raw.owner[v] = if rng.below(2) == 0 { Player::Even } else { Player::Odd };
        let k = 1 + rng.below(max_degree.min(n) as u64) as usize;
        let mut succ: Vec<Vertex> = Vec::with_capacity(k);
        while succ.len() < k {
            let w = rng.below(n as u64) as Vertex;
            if !succ.contains(&w) {
                succ.push(w);
            }
        }
        raw.successors[v] = succ;
    }
    Game::from_raw(raw)
}

/// `n` identical vertices `c1 -> c2 -> .. -> cn` feeding a sink `x` with a
/// self-loop. The chain vertices get `chain_priority` and `chain_owner`;
/// the sink (index `n`) gets `sink_priority` and belongs to even.
pub fn gen_chain(n: usize, chain_priority: Priority, chain_owner: Player, sink_priority: Priority) -> Result<Game> {
    if n == 0 {
        return Err(Error::InvalidParameter("chain length must be at least 1".into()));
    }
    let mut raw = RawGame::with_vertices(n + 1);
    for v in 0..n {
        raw.set_vertex(v, chain_priority, chain_owner, &[v + 1]);
    }
    raw.set_vertex(n, sink_priority, Player::Even, &[n]);
    Game::from_raw(raw)
}

/// Odd vertices `c1 <-> c2` at priority 1, with `c2 -> x` into an even
/// sink of priority 0.
pub fn gen_divergent_pair() -> Game {
    Game::from_parts(&[(1, Player::Odd, &[1]), (1, Player::Odd, &[0, 2]), (0, Player::Even, &[2])]).unwrap()
}

/// `v0 -> v1 -> w` and `v2 -> w`, where the `v`s are even at priority 0
/// and `w` is an odd sink at priority 1.
pub fn gen_branch() -> Game {
    Game::from_parts(&[
        (0, Player::Even, &[1]),
        (0, Player::Even, &[3]),
        (0, Player::Even, &[3]),
        (1, Player::Odd, &[3]),
    ])
    .unwrap()
}

/// Replaces every vertex of `base` by a path of `stretch` copies with the
/// same priority and owner; only the last copy keeps the original edges
/// (to the first copies of the successors). Vertex `v`'s copies are
/// `v * stretch .. (v + 1) * stretch`.
///
/// The copies are stuttering equivalent, but not strongly bisimilar,
/// to each other.
pub fn gen_stretched(base: &Game, stretch: usize) -> Result<Game> {
    if stretch == 0 {
        return Err(Error::InvalidParameter("stretch must be at least 1".into()));
    }
    let n = base.vertex_count() * stretch;
    let mut raw = RawGame::with_vertices(n);
    for v in base.vertices() {
        let first = v * stretch;
        for i in 0..stretch {
            let u = first + i;
            let succ: Vec<Vertex> = if i + 1 < stretch {
                vec![u + 1]
            } else {
                base.successors(v).iter().map(|&w| w * stretch).collect()
            };
            raw.set_vertex(u, base.priority(v), base.owner(v), &succ);
        }
    }
    Game::from_raw(raw)
}
