//! Command line front end for the toric-janet library.

pub mod input;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use toric_janet::completion::{TraceEvent, TraceRecord};
use toric_janet::janet::nm_vars;
use toric_janet::sample::{divisor_workload, naive_janet_scan};
use toric_janet::text::{format_binomial, format_monomial};
use toric_janet::{
    binomial_janet_basis_with, ip_solve, reduced_groebner_basis, CompletionOptions, JanetTree, ToricInstance,
    VarNames,
};

use input::{parse_ideal, parse_matrix, parse_nonneg, parse_vectors, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(#[from] toric_janet::Error),
}

impl CliError {
    /// 1 for bad input, 2 when the computation itself failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "toric-janet", version, about = "Janet bases of binomial ideals and toric integer programs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Janet basis of a binomial ideal file
    Basis {
        file: PathBuf,
        /// Print only the number of elements
        #[arg(long)]
        count: bool,
        /// Log the completion steps to stderr
        #[arg(long)]
        trace: bool,
    },
    /// Reduced Groebner basis of a binomial ideal file
    Gb {
        file: PathBuf,
        #[arg(long)]
        count: bool,
        /// Use plain Buchberger instead of autoreducing the Janet basis
        #[arg(long)]
        buchberger: bool,
    },
    /// Solve min c.x, Ax = b, x >= 0 integral, from a feasible point
    Ip(IpArgs),
    /// Compare Janet tree divisor search against a linear scan
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct IpArgs {
    /// Matrix file: `m n` then m rows
    #[arg(long)]
    pub matrix: PathBuf,
    /// File with lines `b: ...`, `c: ...`, `x0: ...`
    #[arg(long, conflicts_with_all = ["b", "c", "x0"])]
    pub vectors: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub x0: Option<String>,
    /// Ideal file with generators of the toric ideal, skipping the kernel step
    #[arg(long)]
    pub gens: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Number of variables; a comma list sweeps
    #[arg(long, value_delimiter = ',', default_value = "4")]
    pub n: Vec<u32>,
    /// Maximal total degree of the monomials; a comma list sweeps
    #[arg(long, value_delimiter = ',', default_value = "6")]
    pub d: Vec<u64>,
    #[arg(long, default_value_t = 200)]
    pub set_size: usize,
    #[arg(long, default_value_t = 1000)]
    pub queries: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Probability that a variable occurs in a sampled monomial
    #[arg(long, default_value_t = 1.0)]
    pub sparsity: f64,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parse_err(path: &Path) -> impl FnOnce(ParseError) -> CliError + '_ {
    move |source| CliError::Parse { path: path.to_path_buf(), source }
}

fn usage(what: &str) -> impl Fn(String) -> CliError + '_ {
    move |e| CliError::Usage(format!("--{what}: {e}"))
}

/// Runs a parsed command and returns what it prints on stdout.
pub fn run(cli: Cli) -> Result<String, CliError> {
    let mut out = String::new();
    match cli.command {
        Command::Basis { file, count, trace } => {
            let ideal = parse_ideal(&read(&file)?).map_err(parse_err(&file))?;
            let names = ideal.names.clone();
            let mut log = |r: &TraceRecord| eprintln!("{}", trace_line(r, &names));
            let opts = CompletionOptions {
                trace: if trace { Some(&mut log) } else { None },
                ..Default::default()
            };
            let basis = binomial_janet_basis_with(&ideal.generators, &ideal.order, opts)?;
            write_basis(&mut out, &basis, &ideal.names, count);
        }
        Command::Gb { file, count, buchberger } => {
            let ideal = parse_ideal(&read(&file)?).map_err(parse_err(&file))?;
            let gb = if buchberger {
                reduced_groebner_basis(&ideal.generators, &ideal.order)?
            } else {
                let basis = toric_janet::binomial_janet_basis(&ideal.generators, &ideal.order)?;
                toric_janet::autoreduce(&basis, &ideal.order)?
            };
            write_basis(&mut out, &gb, &ideal.names, count);
        }
        Command::Ip(args) => ip(&mut out, args)?,
        Command::Bench(args) => {
            let csv = bench(&args)?;
            match &args.output {
                Some(path) => std::fs::write(path, csv)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?,
                None => out = csv,
            }
        }
    }
    Ok(out)
}

fn write_basis(out: &mut String, basis: &[toric_janet::Binomial], names: &VarNames, count: bool) {
    if count {
        writeln!(out, "{}", basis.len()).unwrap();
    } else {
        for b in basis {
            writeln!(out, "{}", format_binomial(b, names)).unwrap();
        }
    }
}

fn trace_line(r: &TraceRecord, names: &VarNames) -> String {
    let event = match &r.event {
        TraceEvent::Seeded => "seeded".to_string(),
        TraceEvent::Selected { lead } => format!("select {}", format_monomial(lead, names)),
        TraceEvent::Displaced { count } => format!("displace {count}"),
        TraceEvent::Inserted { lead } => format!("insert {}", format_monomial(lead, names)),
        TraceEvent::Prolonged { count } => format!("prolong {count}"),
        TraceEvent::CriterionHit { discarded } => format!("criterion {}", format_binomial(discarded, names)),
        TraceEvent::ReducedToZero => "zero".to_string(),
        TraceEvent::Finished => "finished".to_string(),
    };
    format!("[{}] T={} Q={} {}", r.iteration, r.t_len, r.q_len, event)
}

fn ip(out: &mut String, args: IpArgs) -> Result<(), CliError> {
    let a = parse_matrix(&read(&args.matrix)?).map_err(parse_err(&args.matrix))?;
    let (b, c, x0) = match &args.vectors {
        Some(path) => parse_vectors(&read(path)?).map_err(parse_err(path))?,
        None => {
            let need = |v: &Option<String>, name: &str| {
                v.clone().ok_or_else(|| CliError::Usage(format!("--{name} is required without --vectors")))
            };
            (
                input::parse_ints(&need(&args.b, "b")?).map_err(usage("b"))?,
                parse_nonneg(&need(&args.c, "c")?).map_err(usage("c"))?,
                parse_nonneg(&need(&args.x0, "x0")?).map_err(usage("x0"))?,
            )
        }
    };
    let gens = match &args.gens {
        Some(path) => {
            let ideal = parse_ideal(&read(path)?).map_err(parse_err(path))?;
            if ideal.names.len() != a.ncols() {
                return Err(CliError::Usage(format!(
                    "--gens has {} variables, the matrix {} columns",
                    ideal.names.len(),
                    a.ncols()
                )));
            }
            Some(ideal.generators)
        }
        None => None,
    };
    let inst = ToricInstance::new(a, b, c, x0)?;
    let x = ip_solve(&inst, gens.as_deref())?;
    let shown: Vec<String> = x.iter().map(u64::to_string).collect();
    writeln!(out, "solution: {}", shown.join(" ")).unwrap();
    writeln!(out, "objective: {}", inst.cost(&x)).unwrap();
    Ok(())
}

/// CSV with one row per search structure and (n, d) pair.
pub fn bench(args: &BenchArgs) -> Result<String, CliError> {
    if args.n.contains(&0) {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    if !(0.0..=1.0).contains(&args.sparsity) {
        return Err(CliError::Usage("--sparsity must lie in [0, 1]".into()));
    }
    let mut csv = String::from("n,d,set_size,structure,mean_visits,mean_time_ns\n");
    for &n in &args.n {
        for &d in &args.d {
            bench_one(&mut csv, args, n, d)?;
        }
    }
    Ok(csv)
}

fn bench_one(csv: &mut String, args: &BenchArgs, n: u32, d: u64) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (set, queries) = divisor_workload(&mut rng, n, d, args.set_size, args.queries, args.sparsity);
    let nonmult = nm_vars(&set)?;
    let tree = JanetTree::build(n, set.iter().cloned().map(|u| (u, ())))?;
    let q = queries.len().max(1) as f64;

    let start = Instant::now();
    let mut visits = 0usize;
    for w in &queries {
        std::hint::black_box(tree.j_divisor(w));
        visits += tree.visit_count(w);
    }
    let tree_ns = start.elapsed().as_nanos() as f64 / q;

    let start = Instant::now();
    let mut scanned = 0usize;
    for w in &queries {
        scanned += std::hint::black_box(naive_janet_scan(&set, &nonmult, w)).1;
    }
    let naive_ns = start.elapsed().as_nanos() as f64 / q;

    // set_size is the number of distinct monomials actually drawn
    for (name, v, t) in [("janet-tree", visits, tree_ns), ("naive", scanned, naive_ns)] {
        writeln!(csv, "{n},{d},{},{name},{:.3},{t:.1}", set.len(), v as f64 / q).unwrap();
    }
    Ok(())
}
