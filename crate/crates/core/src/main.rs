use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pgmin::bench::{run_benchmark, write_csv, BenchConfig, Method};
use pgmin::game::pgsolver::{parse_pgsolver, parse_solution, write_pgsolver, write_solution, Convention};
use pgmin::game::{stats, Game, Player};
use pgmin::generators::{gen_branch, gen_chain, gen_divergent_pair, gen_random, gen_stretched};
use pgmin::reduction::{reduce, Equivalence};
use pgmin::solvers::{solve, Algorithm, Solution};
use pgmin::strategy::{lift_solution, verify_strategy};
use pgmin::Error;

#[derive(Parser)]
#[command(name = "pgmin", version, about = "Parity game reduction and solving")]
struct Cli {
    /// Priority convention of game files read and written
    #[arg(long, value_enum, default_value_t = ConventionArg::Max, global = true)]
    convention: ConventionArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Min,
    Max,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Min => Convention::Min,
            ConventionArg::Max => Convention::Max,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Zielonka,
    Spm,
    Brute,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Zielonka => Algorithm::Zielonka,
            AlgorithmArg::Spm => Algorithm::Spm,
            AlgorithmArg::Brute => Algorithm::Brute,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivalenceArg {
    Strong,
    Stuttering,
}

impl From<EquivalenceArg> for Equivalence {
    fn from(e: EquivalenceArg) -> Self {
        match e {
            EquivalenceArg::Strong => Equivalence::Strong,
            EquivalenceArg::Stuttering => Equivalence::Stuttering,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Chain,
    Stretched,
    DivergentPair,
    Branch,
}

#[derive(Subcommand)]
enum Command {
    /// Print vertex, edge and priority counts
    Info { game: PathBuf },
    /// Solve a game and print the solution
    Solve {
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Zielonka)]
        algorithm: AlgorithmArg,
        /// Reduce first, solve the quotient and lift the strategies back
        #[arg(long, value_enum)]
        equivalence: Option<EquivalenceArg>,
        game: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the quotient of a game and the vertex-to-block map
    Reduce {
        #[arg(long, value_enum, default_value_t = EquivalenceArg::Stuttering)]
        equivalence: EquivalenceArg,
        game: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Block map, one `<vertex> <block> <divergent>` line per vertex
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Generate a game
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 3)]
        max_priority: u32,
        #[arg(long, default_value_t = 4)]
        stretch: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a solution's strategies against a game
    Verify { game: PathBuf, solution: PathBuf },
    /// Compare direct solving with reduce-then-solve and write CSV
    Bench {
        /// Game files to measure in addition to generated ones
        games: Vec<PathBuf>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Comma-separated sizes for the generated family
        #[arg(long, value_delimiter = ',', default_value = "1000")]
        n: Vec<usize>,
        /// Generated games per size (distinct seeds)
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 8)]
        max_priority: u32,
        #[arg(long, default_value_t = 4)]
        stretch: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `all` or a comma-separated subset of direct,strong,stuttering
        #[arg(long, value_delimiter = ',', default_value = "all")]
        methods: Vec<String>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "zielonka")]
        algorithm: Vec<AlgorithmArg>,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_game(path: &Path, convention: Convention) -> pgmin::Result<Game> {
    let bytes = fs::read(path)?;
    parse_pgsolver(&bytes, convention)
}

fn emit(output: Option<&Path>, text: &str) -> pgmin::Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn generate(family: Family, n: usize, degree: usize, max_priority: u32, stretch: usize, seed: u64) -> pgmin::Result<Game> {
    match family {
        Family::Random => gen_random(n, degree, max_priority, seed),
        Family::Chain => gen_chain(n, 1, Player::Odd, 0),
        Family::Stretched => gen_stretched(&gen_random(n, degree, max_priority, seed)?, stretch),
        Family::DivergentPair => Ok(gen_divergent_pair()),
        Family::Branch => Ok(gen_branch()),
    }
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Random => "random",
        Family::Chain => "chain",
        Family::Stretched => "stretched",
        Family::DivergentPair => "divergent-pair",
        Family::Branch => "branch",
    }
}

/// Domain failure with a message for stderr (exit code 1).
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let convention: Convention = cli.convention.into();
    match cli.command {
        Command::Info { game } => {
            let g = read_game(&game, convention)?;
            let s = stats(&g);
            let present: Vec<String> = s.priorities_present.iter().map(ToString::to_string).collect();
            println!("vertices: {}", s.vertex_count);
            println!("edges: {}", s.edge_count);
            println!("priorities: {} [{}]", s.priority_count, present.join(","));
        }
        Command::Solve { algorithm, equivalence, game, output } => {
            let g = read_game(&game, convention)?;
            let solution: Solution = match equivalence {
                None => solve(&g, algorithm.into())?,
                Some(eq) => {
                    let reduction = reduce(&g, eq.into());
                    let quotient_solution = solve(&reduction.quotient, algorithm.into())?;
                    lift_solution(&g, &reduction, &quotient_solution)?
                }
            };
            emit(output.as_deref(), &write_solution(&solution.to_record()))?;
        }
        Command::Reduce { equivalence, game, output, map } => {
            let g = read_game(&game, convention)?;
            let reduction = reduce(&g, equivalence.into());
            emit(output.as_deref(), &write_pgsolver(&reduction.quotient, convention))?;
            if let Some(path) = map {
                fs::write(path, reduction.partition.dump()).map_err(Error::from)?;
            }
        }
        Command::Generate { family, n, degree, max_priority, stretch, seed, output } => {
            let g = generate(family, n, degree, max_priority, stretch, seed)?;
            emit(output.as_deref(), &write_pgsolver(&g, convention))?;
        }
        Command::Verify { game, solution } => {
            let g = read_game(&game, convention)?;
            let record = parse_solution(&fs::read(&solution).map_err(Error::from)?)?;
            let solution = Solution::from_record(&g, &record)?;
            for player in [Player::Even, Player::Odd] {
                let region = solution.region(player);
                if let Err(cex) = verify_strategy(&g, player, &region, solution.strategy(player)) {
                    return Err(Failure(format!("{player} strategy does not win its region: {cex}")));
                }
            }
            println!("ok");
        }
        Command::Bench {
            games,
            family,
            n,
            count,
            degree,
            max_priority,
            stretch,
            seed,
            methods,
            algorithm,
            repetitions,
            jobs,
            output,
        } => {
            let mut inputs = Vec::new();
            for path in &games {
                inputs.push((path.display().to_string(), read_game(path, convention)?));
            }
            if let Some(family) = family {
                for &size in &n {
                    for k in 0..count {
                        let s = seed + k;
                        let id = format!("{}-{size}-{s}", family_name(family));
                        inputs.push((id, generate(family, size, degree, max_priority, stretch, s)?));
                    }
                }
            }
            if inputs.is_empty() {
                return Err(Failure("no games given; pass files or --family".into()));
            }
            let methods = if methods.iter().any(|m| m == "all") {
                Method::ALL.to_vec()
            } else {
                methods.iter().map(|m| m.parse()).collect::<pgmin::Result<Vec<Method>>>()?
            };
            let config = BenchConfig {
                methods,
                solvers: algorithm.into_iter().map(Into::into).collect(),
                repetitions,
                jobs,
            };
            let records = run_benchmark(&inputs, &config)?;
            match output {
                Some(path) => write_csv(fs::File::create(path).map_err(Error::from)?, &records)?,
                None => write_csv(io::stdout().lock(), &records)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
