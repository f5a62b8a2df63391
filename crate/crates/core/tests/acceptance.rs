//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{fixture_games, sized_game};
use pgmin::bench::{run_benchmark, write_csv, BenchConfig, Method, CSV_COLUMNS, CSV_SCHEMA_VERSION};
use pgmin::game::pgsolver::{parse_pgsolver, write_pgsolver, Convention};
use pgmin::game::Path;
use pgmin::generators::{gen_chain, gen_random, Xoshiro256};
use pgmin::reduction::{
    oracle_strong_pairs, oracle_stuttering_pairs, reduce, refine_strong, refine_stuttering, Equivalence,
};
use pgmin::solvers::{solve_brute, solve_spm, solve_zielonka, Algorithm};
use pgmin::strategy::{lift_solution, lift_strategy, verify_strategy, LiftContext, PathStrategyOracle};
use pgmin::{Game, Player};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    } else {
        Ok(format!("{detail} in {t:.2?}"))
    }
}

fn solver_agreement() -> Outcome {
    let start = Instant::now();
    for seed in 0..500 {
        let g = sized_game(seed, 8, 3, 3);
        let z = solve_zielonka(&g);
        let s = solve_spm(&g);
        let b = solve_brute(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        if z.winners() != s.winners() || z.winners() != b.winners() {
            return Err(format!("seed {seed}: winner functions differ"));
        }
    }
    within(start, Duration::from_secs(60), "500 games agree".into())
}

fn winner_preservation() -> Outcome {
    let start = Instant::now();
    for seed in 0..500 {
        let g = sized_game(1000 + seed, 60, 4, 6);
        let direct = solve_zielonka(&g);
        for eq in [Equivalence::Strong, Equivalence::Stuttering] {
            let r = reduce(&g, eq);
            let q = solve_zielonka(&r.quotient);
            if let Some(v) = g.vertices().find(|&v| direct.winner(v) != q.winner(r.map[v])) {
                return Err(format!("seed {seed}, {eq:?}: vertex {v} changes winner"));
            }
        }
    }
    within(start, Duration::from_secs(120), "500 games, both quotients".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for seed in 0..200 {
        let g = sized_game(2000 + seed, 10, 3, 3);
        if !refine_strong(&g).same_classes(&oracle_strong_pairs(&g).to_partition()) {
            return Err(format!("seed {seed}: strong refinement differs from oracle"));
        }
        if !refine_stuttering(&g).same_classes(&oracle_stuttering_pairs(&g).to_partition()) {
            return Err(format!("seed {seed}: stuttering refinement differs from oracle"));
        }
    }
    within(start, Duration::from_secs(60), "200 games, both equivalences".into())
}

fn refinement_ordering() -> Outcome {
    let mut games = fixture_games();
    for seed in 0..300 {
        games.push((format!("random {seed}"), sized_game(3000 + seed, 60, 4, 6)));
    }
    for (name, g) in &games {
        let strong = reduce(g, Equivalence::Strong);
        let stut = reduce(g, Equivalence::Stuttering);
        if !strong.partition.refines(&stut.partition) {
            return Err(format!("{name}: a strong block spans two stuttering blocks"));
        }
        let (sv, se) = (strong.quotient.vertex_count(), strong.quotient.edge_count());
        let (tv, te) = (stut.quotient.vertex_count(), stut.quotient.edge_count());
        if !(tv <= sv && sv <= g.vertex_count() && te <= se && se <= g.edge_count()) {
            return Err(format!("{name}: size ordering violated"));
        }
    }
    Ok(format!("{} games", games.len()))
}

fn chain_family() -> Outcome {
    for n in [10, 100, 1000, 10000] {
        let g = gen_chain(n, 1, Player::Odd, 0).unwrap();
        let stut = reduce(&g, Equivalence::Stuttering);
        if (stut.quotient.vertex_count(), stut.quotient.edge_count()) != (2, 2) {
            return Err(format!("n={n}: stuttering quotient is not 2 vertices / 2 edges"));
        }
        let strong = reduce(&g, Equivalence::Strong);
        if strong.quotient.vertex_count() != n + 1 {
            return Err(format!("n={n}: strong quotient has {} vertices", strong.quotient.vertex_count()));
        }
    }
    Ok("n = 10, 100, 1000, 10000".into())
}

fn strategy_lifting() -> Outcome {
    let start = Instant::now();
    for seed in 0..500 {
        let g = sized_game(4000 + seed, 60, 4, 6);
        let r = reduce(&g, Equivalence::Stuttering);
        let qs = solve_zielonka(&r.quotient);
        for player in [Player::Even, Player::Odd] {
            let ctx = LiftContext::from_solution(&g, &r, &qs, player).map_err(|e| format!("seed {seed}: {e}"))?;
            let lifted = lift_strategy(&ctx).map_err(|e| format!("seed {seed}: {e}"))?;
            let region = ctx.preimage_region();
            verify_strategy(&g, player, &region, &lifted).map_err(|c| format!("seed {seed}, {player}: {c}"))?;
        }
        lift_solution(&g, &r, &qs).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    within(start, Duration::from_secs(180), "500 games, both players, 0 failures".into())
}

/// Random path ending in `end`, built backwards through the region and
/// consistent with `lifted` at the player's vertices.
fn backward_path(g: &Game, ctx: &LiftContext<'_>, lifted: &pgmin::game::Strategy, end: usize, rng: &mut Xoshiro256) -> Path {
    let len = rng.below(12) as usize;
    let mut rev = vec![end];
    for _ in 0..len {
        let x = *rev.last().unwrap();
        let preds: Vec<usize> = g
            .predecessors(x)
            .iter()
            .copied()
            .filter(|&p| ctx.quotient_region[ctx.block_of(p)])
            .filter(|&p| g.owner(p) != ctx.player || lifted.get(p) == Some(x))
            .collect();
        if preds.is_empty() {
            break;
        }
        rev.push(preds[rng.below(preds.len() as u64) as usize]);
    }
    rev.reverse();
    Path::new(g, rev).unwrap()
}

fn memoryless_collapse() -> Outcome {
    let mut checked = 0;
    for seed in 0..100 {
        let g = sized_game(5000 + seed, 40, 4, 4);
        let r = reduce(&g, Equivalence::Stuttering);
        let qs = solve_zielonka(&r.quotient);
        let mut rng = Xoshiro256::seed_from_u64(seed);
        for player in [Player::Even, Player::Odd] {
            let ctx = LiftContext::from_solution(&g, &r, &qs, player).map_err(|e| e.to_string())?;
            let lifted = lift_strategy(&ctx).map_err(|e| e.to_string())?;
            let ends: Vec<usize> = ctx.preimage_region().into_iter().filter(|&v| g.owner(v) == player).collect();
            if ends.is_empty() {
                continue;
            }
            let end = ends[rng.below(ends.len() as u64) as usize];
            let oracle = PathStrategyOracle { context: ctx.clone() };
            let mut answers = Vec::new();
            for _ in 0..50 {
                let path = backward_path(&g, &ctx, &lifted, end, &mut rng);
                answers.push(oracle.next(&path).map_err(|e| format!("seed {seed}: {e}"))?);
            }
            if answers.iter().any(|&a| a != answers[0]) {
                return Err(format!("seed {seed}, {player}: mimick_next depends on history at {end}"));
            }
            if lifted.get(end) != Some(answers[0]) {
                return Err(format!("seed {seed}, {player}: lifted strategy disagrees with mimick_next"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} endpoints x 50 paths agree"))
}

fn round_trip() -> Outcome {
    let mut games = fixture_games();
    for seed in 0..100 {
        games.push((format!("random {seed}"), sized_game(6000 + seed, 60, 4, 8)));
    }
    for (name, g) in &games {
        let text = write_pgsolver(g, Convention::Min);
        let back = parse_pgsolver(text.as_bytes(), Convention::Min).map_err(|e| format!("{name}: {e}"))?;
        if &back != g || write_pgsolver(&back, Convention::Min) != text {
            return Err(format!("{name}: min-convention round trip changed the game"));
        }
        let max = write_pgsolver(g, Convention::Max);
        let back = parse_pgsolver(max.as_bytes(), Convention::Max).map_err(|e| format!("{name}: {e}"))?;
        if write_pgsolver(&back, Convention::Max) != max {
            return Err(format!("{name}: max-convention text round trip differs"));
        }
    }
    let golden = [
        ((8, 3, 3, 42), include_str!("golden/random_8_3_3_42.gm")),
        ((20, 4, 6, 7), include_str!("golden/random_20_4_6_7.gm")),
        ((5, 2, 2, 0), include_str!("golden/random_5_2_2_0.gm")),
    ];
    for ((n, d, p, seed), expected) in golden {
        let first = write_pgsolver(&gen_random(n, d, p, seed).unwrap(), Convention::Min);
        let second = write_pgsolver(&gen_random(n, d, p, seed).unwrap(), Convention::Min);
        if first != second || first != expected {
            return Err(format!("gen_random({n},{d},{p},{seed}) differs from golden file"));
        }
    }
    Ok(format!("{} games, 3 golden files", games.len()))
}

fn performance_and_csv() -> Outcome {
    let g = gen_random(100_000, 5, 8, 9).unwrap();
    let start = Instant::now();
    let r = reduce(&g, Equivalence::Stuttering);
    let t = start.elapsed();
    if t > Duration::from_secs(10) {
        return Err(format!("stuttering reduction took {t:.2?}"));
    }
    let edges = g.edge_count();

    let mut games = Vec::new();
    for n in [25, 50, 100, 200] {
        for seed in 0..5 {
            games.push((format!("random-{n}-{seed}"), gen_random(n, 3, 6, seed).unwrap()));
        }
    }
    let config = BenchConfig {
        methods: Method::ALL.to_vec(),
        solvers: vec![Algorithm::Zielonka, Algorithm::Spm],
        repetitions: 2,
        jobs: 2,
    };
    let rows = run_benchmark(&games, &config).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows).map_err(|e| e.to_string())?;
    let text = String::from_utf8(buf).unwrap();
    let body = text
        .strip_prefix(CSV_SCHEMA_VERSION)
        .and_then(|s| s.strip_prefix('\n'))
        .ok_or("missing schema line")?;
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let header: Vec<String> = reader.headers().map_err(|e| e.to_string())?.iter().map(String::from).collect();
    if header != CSV_COLUMNS {
        return Err(format!("header {header:?}"));
    }
    let mut winners: HashMap<String, String> = HashMap::new();
    let mut count = 0;
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        for col in 7..10 {
            record[col].parse::<f64>().map_err(|_| format!("bad time {:?}", &record[col]))?;
        }
        let w = winners.entry(record[0].to_string()).or_insert_with(|| record[10].to_string());
        if *w != record[10] {
            return Err(format!("{}: winner_v0 differs across methods", &record[0]));
        }
        count += 1;
    }
    if count != 20 * 3 * 2 {
        return Err(format!("{count} rows"));
    }
    Ok(format!(
        "|V|=100000, |E|={edges} -> {} blocks in {t:.2?}; {count} CSV rows consistent",
        r.quotient.vertex_count()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("solver cross-validation", solver_agreement),
        ("winner preservation", winner_preservation),
        ("oracle equivalence", oracle_equivalence),
        ("refinement ordering", refinement_ordering),
        ("chain family", chain_family),
        ("strategy lifting", strategy_lifting),
        ("memoryless collapse", memoryless_collapse),
        ("round trip and determinism", round_trip),
        ("performance and bench csv", performance_and_csv),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
