#![allow(dead_code)]

use pgmin::fixtures;
use pgmin::generators::{gen_random, Xoshiro256};
use pgmin::Game;

/// Random game whose size parameters are themselves drawn from `seed`.
pub fn sized_game(seed: u64, max_n: u64, max_degree: u64, max_priority: u64) -> Game {
    let mut rng = Xoshiro256::seed_from_u64(seed ^ 0xa5a5_5a5a);
    let n = 1 + rng.below(max_n) as usize;
    let d = 1 + rng.below(max_degree) as usize;
    let p = rng.below(max_priority + 1) as u32;
    gen_random(n, d, p, seed).unwrap()
}

pub fn fixture_games() -> Vec<(String, Game)> {
    let mut out = vec![
        ("g1".to_string(), fixtures::g1()),
        ("g3".to_string(), fixtures::g3()),
        ("g4".to_string(), fixtures::g4()),
        ("g5".to_string(), fixtures::g5()),
    ];
    for n in [1, 2, 5, 10] {
        out.push((format!("g2({n})"), fixtures::g2(n)));
    }
    out
}
