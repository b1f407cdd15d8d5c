//! `cecac`: solve, verify, generate and benchmark CECAC instances.
//!
//! Exit codes: 0 feasible / verified, 1 infeasible / rejected, 2 bad input,
//! 3 solver not applicable (or over its enumeration budget), 4 internal
//! verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cecac::bench::{run_suite, write_csv, Suite};
use cecac::io::{instance_to_json, read_instance, read_solution, SolutionFile};
use cecac::model::{check_solution, classify_with, ClassifyConfig};
use cecac::reductions::{
    clique_to_cecac_single_attr, clique_to_cecac_two_attrs, independent_set_to_cecac, random_instance,
    GeneratorParams, Graph,
};
use cecac::solver::oracle::OracleConfig;
use cecac::solver::{solve, SolveError, SolveOptions, SolverChoice};

#[derive(Parser)]
#[command(name = "cecac", version, about = "Committee elections with candidate attribute constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a maximum-profit committee and compare it against p.
    Solve {
        instance: PathBuf,
        /// auto, oracle, treedp, chaindp or fpt.
        #[arg(long, default_value = "auto")]
        solver: SolverChoice,
        /// Print the solution as JSON.
        #[arg(long)]
        json: bool,
        /// Ignore unknown fields in the instance file.
        #[arg(long)]
        lenient: bool,
    },
    /// Check a committee from a solution file against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Write a generated instance.
    Generate {
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        /// Edge-list file: `n m` then one `u v` pair per line.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        kprime: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Solver class of random instances.
        #[arg(long, value_enum, default_value = "general")]
        class: Class,
        #[arg(long, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark suite and write CSV.
    Bench {
        #[arg(long, default_value = "dichotomy")]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout if absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the class descriptor and the recommended solver.
    Classify {
        instance: PathBuf,
        #[arg(long)]
        lenient: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Random,
    Clique2,
    Clique1,
    Indset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Tree,
    Chain,
    General,
}

const FEASIBLE: u8 = 0;
const INFEASIBLE: u8 = 1;
const INPUT: u8 = 2;
const NOT_APPLICABLE: u8 = 3;
const INTERNAL: u8 = 4;

fn fail(code: u8, msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    code
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(match cli.command {
        Command::Solve {
            instance,
            solver,
            json,
            lenient,
        } => cmd_solve(&instance, solver, json, !lenient),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Generate {
            mode,
            graph,
            kprime,
            seed,
            class,
            m,
            l,
            d,
            k,
            out,
        } => {
            let params = match class {
                Class::Tree => GeneratorParams::tree_dp(m, l, d, k, seed),
                Class::Chain => GeneratorParams::chain_dp(m, l, d, k, seed),
                Class::General => GeneratorParams::general(m, l, d, k, 2, seed),
            };
            cmd_generate(mode, graph.as_deref(), kprime, params, out.as_deref())
        }
        Command::Bench {
            suite,
            trials,
            seed,
            csv,
        } => cmd_bench(suite, trials, seed, csv.as_deref()),
        Command::Classify { instance, lenient } => cmd_classify(&instance, !lenient),
    })
}

fn cmd_solve(path: &Path, choice: SolverChoice, json: bool, strict: bool) -> u8 {
    let instance = match read_instance(path, strict) {
        Ok(i) => i,
        Err(e) => return fail(INPUT, e),
    };
    let options = SolveOptions {
        oracle: OracleConfig::from_env(),
        ..SolveOptions::default()
    };
    let start = Instant::now();
    let solution = match solve(&instance, choice, &options) {
        Ok(s) => s,
        Err(e @ SolveError::InvalidInstance(_)) => return fail(INPUT, e),
        Err(e @ SolveError::VerificationFailed { .. }) => return fail(INTERNAL, e),
        Err(e) => return fail(NOT_APPLICABLE, e),
    };
    let file = SolutionFile::from_solution(&solution, start.elapsed().as_secs_f64() * 1000.0);
    if json {
        print!("{}", file.to_json());
    } else {
        println!("solver: {}", file.solver);
        match &solution.best {
            Some(best) if solution.feasible => {
                println!("feasible: committee {{{}}} with profit {}", best.committee.join(", "), best.profit);
            }
            Some(best) => println!(
                "infeasible: best committee {{{}}} reaches {} < {}",
                best.committee.join(", "),
                best.profit,
                instance.p
            ),
            None => println!("infeasible: no committee of size {} satisfies the constraints", instance.k),
        }
    }
    if solution.feasible {
        FEASIBLE
    } else {
        INFEASIBLE
    }
}

fn cmd_verify(instance: &Path, solution: &Path) -> u8 {
    let (instance, solution) = match (read_instance(instance, false), read_solution(solution)) {
        (Ok(i), Ok(s)) => (i, s),
        (Err(e), _) | (_, Err(e)) => return fail(INPUT, e),
    };
    let verdict = match check_solution(&instance, &solution.committee) {
        Ok(v) => v,
        Err(e) => {
            println!("rejected: {e}");
            return INFEASIBLE;
        }
    };
    if !verdict.size_ok {
        println!(
            "size mismatch: {} candidates listed, committee size is {}",
            solution.committee.len(),
            instance.k
        );
    }
    for &i in &verdict.violated {
        println!("violated: {}", instance.constraints[i]);
    }
    if !verdict.profit_ok {
        println!("profit {} below bound {}", verdict.profit, instance.p);
    }
    if verdict.all_ok() {
        println!("ok: profit {}", verdict.profit);
        FEASIBLE
    } else {
        INFEASIBLE
    }
}

fn cmd_generate(mode: Mode, graph: Option<&Path>, kprime: Option<usize>, params: GeneratorParams, out: Option<&Path>) -> u8 {
    let generated = match mode {
        Mode::Random => {
            if graph.is_some() || kprime.is_some() {
                return fail(INPUT, "--graph and --kprime do not apply to random instances");
            }
            random_instance(&params).map_err(|e| e.to_string())
        }
        _ => {
            let (Some(path), Some(kp)) = (graph, kprime) else {
                return fail(INPUT, "graph modes need --graph and --kprime");
            };
            let g = match read_graph(path) {
                Ok(g) => g,
                Err(e) => return fail(INPUT, e),
            };
            match mode {
                Mode::Clique2 => clique_to_cecac_two_attrs(&g, kp),
                Mode::Clique1 => clique_to_cecac_single_attr(&g, kp),
                _ => independent_set_to_cecac(&g, kp),
            }
            .map_err(|e| e.to_string())
        }
    };
    let instance = match generated {
        Ok(i) => i,
        Err(e) => return fail(INPUT, e),
    };
    let text = instance_to_json(&instance);
    match out {
        Some(path) => match fs::write(path, text) {
            Ok(()) => FEASIBLE,
            Err(e) => fail(INPUT, format!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            FEASIBLE
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_bench(suite: Suite, trials: usize, seed: u64, csv: Option<&Path>) -> u8 {
    // open the output first so an unwritable path fails before any work
    let sink: Box<dyn std::io::Write> = match csv {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => return fail(INPUT, format!("{}: {e}", path.display())),
        },
        None => Box::new(std::io::stdout()),
    };
    let rows = match run_suite(suite, trials, seed) {
        Ok(r) => r,
        Err(e) => return fail(INTERNAL, e),
    };
    match write_csv(sink, &rows) {
        Ok(()) => FEASIBLE,
        Err(e) => fail(INPUT, e),
    }
}

fn cmd_classify(path: &Path, strict: bool) -> u8 {
    let instance = match read_instance(path, strict) {
        Ok(i) => i,
        Err(e) => return fail(INPUT, e),
    };
    let c = classify_with(&instance, ClassifyConfig::default());
    let out = json!({
        "max_attrs_per_candidate": c.descriptor.max_attrs_per_candidate,
        "max_attr_occurrence": c.descriptor.max_attr_occurrence,
        "max_constraint_length": c.descriptor.max_constraint_length,
        "recommended": c.recommended,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("plain data"));
    FEASIBLE
}
