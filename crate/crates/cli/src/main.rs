//! `tightsr`: compute bigraded Betti numbers of Stanley-Reisner rings, decide
//! tightness, enumerate weakly tight complexes, and cross-check the two
//! Betti-number engines.
//!
//! Complexes are read one per line in the facet text format
//! `m=<int>; facets=(a,b,c),(d,e),...` from stdin or `--in FILE`.
//!
//! Exit codes: 0 success, 1 oracle or golden-census mismatch, 2 usage error,
//! 3 violated mathematical precondition (named error on stderr).

use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tightsr_core as core;
use tightsr_core::{FieldSpec, SimplicialComplex};

#[derive(Parser)]
#[command(name = "tightsr", version, about = "Stanley-Reisner tightness toolkit")]
struct Cli {
    /// Coefficient field: Q or Fp:<prime>
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    /// Cap on worker threads for parallel sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Read complexes from this file instead of stdin
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bigraded Betti table of each input complex as JSON
    Betti,
    /// Print the total Betti number of each input complex
    Total,
    /// Print the tightness report of each input complex as JSON
    Check,
    /// Enumerate all weakly tight complexes with at most M vertices
    Enumerate {
        #[arg(long)]
        m: usize,
        /// Write census facet lines here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Also write a JSON-lines sidecar with index, f-vector, mdim and D̃
        #[arg(long, value_name = "FILE")]
        sidecar: Option<PathBuf>,
        /// Germ admission test
        #[arg(long, value_enum, default_value_t = Mode::Shortcut)]
        mode: Mode,
    },
    /// Classify each input complex as a simplex-sphere join or not tight
    Classify,
    /// Exhaustive D̃ minimization over the complexes of dimension D on [M]
    Dmin {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Print the essential germ filtration and all filtration lengths
    Germ,
    /// Simplicial wedge of each input complex at vertex V
    Wedge {
        #[arg(long)]
        v: usize,
    },
    /// Join of the two input complexes
    Join,
    /// Cross-check the Hochster engine against the Taylor oracle
    Verify {
        /// Run the independent Taylor-resolution oracle on every input
        #[arg(long)]
        oracle: bool,
    },
    /// Regenerate the census for m <= 5 and diff it against the golden file
    Table1 {
        /// Alternative golden fixture
        #[arg(long, value_name = "FILE")]
        golden: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Admit germs by the D̃ shortcut
    Shortcut,
    /// Admit germs by the full homology-surjection check
    Cond2,
}

impl From<Mode> for core::GermFilter {
    fn from(m: Mode) -> core::GermFilter {
        match m {
            Mode::Shortcut => core::GermFilter::DtildeShortcut,
            Mode::Cond2 => core::GermFilter::CondIiRank,
        }
    }
}

enum Failure {
    Usage(String),
    Math(core::Error),
    Mismatch(String),
}

impl From<core::Error> for Failure {
    fn from(e: core::Error) -> Failure {
        Failure::Math(e)
    }
}

fn read_inputs(path: &Option<PathBuf>) -> Result<Vec<SimplicialComplex>, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(line.parse::<SimplicialComplex>()?);
    }
    if out.is_empty() {
        return Err(Failure::Usage("no input complexes".into()));
    }
    Ok(out)
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let field: FieldSpec = cli.field.parse()?;
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }

    match cli.command {
        Command::Betti => {
            for k in read_inputs(&cli.input)? {
                let table = core::bigraded_betti(&k, &field)?;
                println!("{}", table.to_json());
            }
        }
        Command::Total => {
            for k in read_inputs(&cli.input)? {
                println!("{}", core::total_betti(&k, &field)?);
            }
        }
        Command::Check => {
            for k in read_inputs(&cli.input)? {
                let report = core::tightness_report(&k, &field)?;
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            }
        }
        Command::Enumerate {
            m,
            out,
            sidecar,
            mode,
        } => {
            let census = core::enumerate_wt_with(m, &field, mode.into())?;
            let mut lines = String::new();
            let mut side = String::new();
            for mm in 1..=m {
                for (idx, e) in census.entries(mm).iter().enumerate() {
                    lines.push_str(&format!("{}\n", e.complex));
                    side.push_str(&format!(
                        "{}\n",
                        serde_json::json!({
                            "m": mm,
                            "index": idx + 1,
                            "facets": e.complex.to_string(),
                            "f_vector": e.f_vector.0,
                            "mdim": e.mdim,
                            "dtilde": e.total_betti,
                        })
                    ));
                }
            }
            write_or_print(&out, &lines)?;
            if let Some(p) = sidecar {
                write_or_print(&Some(p), &side)?;
            }
        }
        Command::Classify => {
            for k in read_inputs(&cli.input)? {
                match core::classify_tight(&k) {
                    Some(d) => println!("tight: {d}"),
                    None => println!(
                        "not tight (D̃={}, bound={})",
                        core::total_betti(&k, &field)?,
                        core::hochster::tight_bound(&k)
                    ),
                }
            }
        }
        Command::Dmin { m, d } => {
            let r = core::dmin_search(m, d, &field)?;
            println!(
                "|Sigma({m},{d})| = {} classes up to isomorphism; min D̃ = {}",
                r.class_count, r.min_total
            );
            for k in &r.minimizers {
                println!("minimizer: {k}");
            }
        }
        Command::Germ => {
            for k in read_inputs(&cli.input)? {
                let f = core::germ_filtration(&k, &field)?;
                for (t, step) in f.steps.iter().enumerate() {
                    let subs = step
                        .sub_facets
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "step {t}: Y = {}; L = {}; r = {}; v = {}",
                        step.base, subs, step.simplex_padding, step.cone_vertex
                    );
                }
                let rebuilt = core::replay_filtration(&f)?;
                println!(
                    "length = {}; replay isomorphic = {}",
                    f.length(),
                    rebuilt.are_isomorphic(&k)?
                );
                let lengths: BTreeSet<usize> = core::filtration_lengths(&k, &field)?;
                println!(
                    "all filtration lengths = {{{}}}",
                    lengths
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
        }
        Command::Wedge { v } => {
            for k in read_inputs(&cli.input)? {
                println!("{}", k.simplicial_wedge(v)?);
            }
        }
        Command::Join => {
            let inputs = read_inputs(&cli.input)?;
            if inputs.len() != 2 {
                return Err(Failure::Usage(format!(
                    "join expects exactly two complexes, got {}",
                    inputs.len()
                )));
            }
            println!("{}", inputs[0].join(&inputs[1]));
        }
        Command::Verify { oracle } => {
            if !oracle {
                return Err(Failure::Usage("verify requires --oracle".into()));
            }
            let inputs = read_inputs(&cli.input)?;
            let mut bad = 0usize;
            for k in &inputs {
                let diffs = core::oracle_diff(k, &field)?;
                if diffs.is_empty() {
                    println!("ok: {k}");
                } else {
                    bad += 1;
                    for d in diffs {
                        println!(
                            "MISMATCH {k}: beta^(-{},{}): hochster={} taylor={}",
                            d.i, d.two_j, d.hochster, d.taylor
                        );
                    }
                }
            }
            if bad > 0 {
                return Err(Failure::Mismatch(format!(
                    "{bad} of {} inputs disagree",
                    inputs.len()
                )));
            }
        }
        Command::Table1 { golden } => {
            let entries = match golden {
                Some(p) => {
                    let text = std::fs::read_to_string(&p)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
                    core::table1::parse_golden(&text)?
                }
                None => core::table1::golden_entries(),
            };
            let census = core::enumerate_wt(5, &field)?;
            for m in 1..=5 {
                println!("m={}: {} classes", m, census.entries(m).len());
            }
            let mismatches = core::table1::diff_census(&census, &entries);
            if mismatches.is_empty() {
                println!("census matches the golden table");
            } else {
                for line in &mismatches {
                    println!("MISMATCH {line}");
                }
                return Err(Failure::Mismatch(format!(
                    "{} census mismatches",
                    mismatches.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
