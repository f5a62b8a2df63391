//! Benchmark harness: direct solving against reduce-then-solve.
//!
//! For every game, method and solver the harness records the original and
//! reduced sizes, the best-of-k reduction and solving times, and the winner
//! of vertex 0. Full winner functions are compared across all methods and
//! solvers of a game; any disagreement aborts the run.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::game::{Game, Player};
use crate::reduction::{reduce, Equivalence};
use crate::solvers::{solve, Algorithm};

pub const CSV_SCHEMA_VERSION: &str = "# pgmin-bench v1";
pub const CSV_COLUMNS: [&str; 12] = [
    "game", "method", "solver", "orig_v", "orig_e", "red_v", "red_e", "t_reduce_ms", "t_solve_ms", "t_total_ms",
    "winner_v0", "runs",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Strong,
    Stuttering,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Strong, Method::Stuttering];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Strong => "strong+solve",
            Method::Stuttering => "stuttering+solve",
        }
    }

    fn equivalence(self) -> Option<Equivalence> {
        match self {
            Method::Direct => None,
            Method::Strong => Some(Equivalence::Strong),
            Method::Stuttering => Some(Equivalence::Stuttering),
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "strong" | "strong+solve" => Ok(Method::Strong),
            "stuttering" | "stuttering+solve" => Ok(Method::Stuttering),
            _ => Err(Error::InvalidParameter(format!("unknown method {s:?}"))),
        }
    }
}

/// One measurement row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub game: String,
    pub method: Method,
    pub solver: Algorithm,
    pub orig_v: usize,
    pub orig_e: usize,
    pub red_v: usize,
    pub red_e: usize,
    pub reduce_us: u64,
    pub solve_us: u64,
    pub winner_v0: Player,
    /// Total time of every repetition, in microseconds.
    pub runs_us: Vec<u64>,
}

impl BenchRecord {
    pub fn total_us(&self) -> u64 {
        self.reduce_us + self.solve_us
    }
}

/// Microseconds as milliseconds with three decimals.
pub fn format_ms(us: u64) -> String {
    format!("{}.{:03}", us / 1000, us % 1000)
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub methods: Vec<Method>,
    pub solvers: Vec<Algorithm>,
    pub repetitions: usize,
    /// Worker threads; 1 runs everything serially.
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            methods: Method::ALL.to_vec(),
            solvers: vec![Algorithm::Zielonka],
            repetitions: 3,
            jobs: 1,
        }
    }
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

/// Measures one game under every configured method and solver.
fn bench_game(id: &str, game: &Game, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    let mut reference: Option<(String, Vec<Player>)> = None;
    for &method in &config.methods {
        for &solver in &config.solvers {
            let mut best: Option<(u64, u64, usize, usize, Vec<Player>)> = None;
            let mut runs = Vec::with_capacity(config.repetitions);
            for _ in 0..config.repetitions.max(1) {
                let (reduce_us, solve_us, red_v, red_e, winners) = match method.equivalence() {
                    None => {
                        let start = Instant::now();
                        let solution = solve(game, solver)?;
                        let solve_us = micros(start);
                        (0, solve_us, game.vertex_count(), game.edge_count(), solution.winners().to_vec())
                    }
                    Some(eq) => {
                        let start = Instant::now();
                        let reduction = reduce(game, eq);
                        let reduce_us = micros(start);
                        let start = Instant::now();
                        let solution = solve(&reduction.quotient, solver)?;
                        let solve_us = micros(start);
                        let winners = reduction.map.iter().map(|&b| solution.winner(b)).collect();
                        (
                            reduce_us,
                            solve_us,
                            reduction.quotient.vertex_count(),
                            reduction.quotient.edge_count(),
                            winners,
                        )
                    }
                };
                runs.push(reduce_us + solve_us);
                if best.as_ref().is_none_or(|b| reduce_us + solve_us < b.0 + b.1) {
                    best = Some((reduce_us, solve_us, red_v, red_e, winners));
                }
            }
            let (reduce_us, solve_us, red_v, red_e, winners) = best.unwrap();
            let label = format!("{}/{}", method.name(), solver.name());
            match &reference {
                None => reference = Some((label, winners.clone())),
                Some((ref_label, ref_winners)) => {
                    if let Some(v) = (0..winners.len()).find(|&v| winners[v] != ref_winners[v]) {
                        return Err(Error::WinnerMismatch {
                            game: id.to_string(),
                            detail: format!(
                                "vertex {v}: {ref_label} says {}, {label} says {}",
                                ref_winners[v], winners[v]
                            ),
                        });
                    }
                }
            }
            records.push(BenchRecord {
                game: id.to_string(),
                method,
                solver,
                orig_v: game.vertex_count(),
                orig_e: game.edge_count(),
                red_v,
                red_e,
                reduce_us,
                solve_us,
                winner_v0: winners[0],
                runs_us: runs,
            });
        }
    }
    Ok(records)
}

/// Runs every (game, method, solver) combination. Output rows follow the
/// order of `games`, then methods, then solvers, regardless of `jobs`.
pub fn run_benchmark(games: &[(String, Game)], config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let jobs = config.jobs.max(1).min(games.len().max(1));
    if jobs == 1 {
        let mut out = Vec::new();
        for (id, game) in games {
            out.extend(bench_game(id, game, config)?);
        }
        return Ok(out);
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<Vec<BenchRecord>>>>> = Mutex::new((0..games.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((id, game)) = games.get(i) else { break };
                let r = bench_game(id, game, config);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    let mut out = Vec::new();
    for r in results.into_inner().unwrap() {
        out.extend(r.expect("every game is measured")?);
    }
    Ok(out)
}

/// Writes the versioned header comment, the column header and all rows.
pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> Result<()> {
    writeln!(out, "{CSV_SCHEMA_VERSION}")?;
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_COLUMNS)?;
    for r in records {
        let runs: Vec<String> = r.runs_us.iter().map(|&us| format_ms(us)).collect();
        writer.write_record([
            r.game.clone(),
            r.method.name().to_string(),
            r.solver.name().to_string(),
            r.orig_v.to_string(),
            r.orig_e.to_string(),
            r.red_v.to_string(),
            r.red_e.to_string(),
            format_ms(r.reduce_us),
            format_ms(r.solve_us),
            format_ms(r.total_us()),
            r.winner_v0.index().to_string(),
            runs.join(";"),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn milliseconds_have_three_decimals() {
        assert_eq!(format_ms(0), "0.000");
        assert_eq!(format_ms(1234567), "1234.567");
        assert_eq!(format_ms(5), "0.005");
    }

    #[test]
    fn chain_rows() {
        let games = vec![("chain-200".to_string(), fixtures::g2(200))];
        let config = BenchConfig { solvers: vec![Algorithm::Zielonka, Algorithm::Spm], repetitions: 2, ..Default::default() };
        let rows = run_benchmark(&games, &config).unwrap();
        assert_eq!(rows.len(), 6);
        for r in &rows {
            assert_eq!(r.orig_v, 201);
            assert_eq!(r.winner_v0, Player::Even);
            assert_eq!(r.runs_us.len(), 2);
            match r.method {
                Method::Direct => assert_eq!(r.red_v, 201),
                Method::Strong => assert_eq!(r.red_v, 201),
                Method::Stuttering => assert_eq!((r.red_v, r.red_e), (2, 2)),
            }
        }
    }

    #[test]
    fn parallel_rows_keep_game_order() {
        let games: Vec<(String, Game)> = (0..6)
            .map(|s| (format!("random-{s}"), crate::generators::gen_random(30, 3, 4, s).unwrap()))
            .collect();
        let serial = run_benchmark(&games, &BenchConfig { repetitions: 1, ..Default::default() }).unwrap();
        let parallel = run_benchmark(&games, &BenchConfig { repetitions: 1, jobs: 3, ..Default::default() }).unwrap();
        let key = |r: &BenchRecord| (r.game.clone(), r.method, r.red_v, r.winner_v0);
        assert_eq!(serial.iter().map(key).collect::<Vec<_>>(), parallel.iter().map(key).collect::<Vec<_>>());
    }

    #[test]
    fn csv_layout() {
        let games = vec![("g1".to_string(), fixtures::g1())];
        let rows = run_benchmark(&games, &BenchConfig { repetitions: 1, ..Default::default() }).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_SCHEMA_VERSION);
        assert_eq!(lines[1], CSV_COLUMNS.join(","));
        assert_eq!(lines.len(), 5);
        assert!(lines[2].starts_with("g1,direct,zielonka,2,2,2,2,0.000,"));
    }
}
