use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use pcdyn_core::{
    affine_cycle_length, automorphism_order, certify_automorphism_order, certify_cycle_length, check_consistency,
    endo_preperiod, lg_normalize, periodic_subgroup, AffineMap, DynOptions, DynResult, ExponentVector, MultMode,
    OpCounter, PcAutomorphism, PcEndomorphism, PcError, PcPresentation, Verdict,
};
use pcdyn_harness::corpus::{read_map, read_presentation};
use pcdyn_harness::{
    brute_affine_cycle_length, brute_automorphism_order, load_corpus, run_bench, Algorithm, HarnessError, Result,
    DEFAULT_BUDGET,
};

// A closed stdout (e.g. piped into `head`) ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        out!($($arg)*);
        out!("\n");
    }};
}

#[derive(Parser)]
#[command(name = "pcdyn", version, about = "Automorphism orders and affine cycle lengths on finite pc groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Multiplication strategy in derived presentations.
    #[arg(long, global = true, default_value = "direct")]
    mode: MultMode,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Assert the per-level loop invariants while running.
    #[arg(long, global = true)]
    debug_invariants: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Consistency verdict by enumeration.
    Check { pcp: PathBuf },
    /// Presentation refining the LG-series, its weights, and the isomorphism.
    Normalize { pcp: PathBuf },
    /// Order of an automorphism.
    Order { pcp: PathBuf, aut: PathBuf },
    /// Cycle length of g under x -> t alpha(x).
    Cycle {
        pcp: PathBuf,
        aut: PathBuf,
        #[arg(long)]
        g: Option<ExponentVector>,
        /// Defaults to the file's `t` line, else the identity.
        #[arg(long)]
        t: Option<ExponentVector>,
    },
    /// Preperiod of g under an endomorphism.
    Preperiod {
        pcp: PathBuf,
        endo: PathBuf,
        #[arg(long)]
        g: ExponentVector,
    },
    /// Brute-force order, or cycle length when --g is given.
    Oracle {
        pcp: PathBuf,
        aut: PathBuf,
        #[arg(long)]
        g: Option<ExponentVector>,
        #[arg(long)]
        t: Option<ExponentVector>,
    },
    /// Order algorithms over a corpus directory, as CSV.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "algo1,generic,oracle")]
        algos: Vec<Algorithm>,
        /// Restrict to these group names.
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(pcp: &Path) -> Result<Arc<PcPresentation>> {
    Ok(Arc::new(read_presentation(pcp)?))
}

fn load_auto(pres: &Arc<PcPresentation>, path: &Path) -> Result<(PcAutomorphism, Option<ExponentVector>)> {
    let mf = read_map(path, pres)?;
    let a = PcAutomorphism::new(pres.clone(), mf.images).map_err(|source| HarnessError::File { path: path.to_owned(), source })?;
    Ok((a, mf.t))
}

fn checked(pres: &PcPresentation, v: Option<ExponentVector>) -> Result<ExponentVector> {
    let v = v.unwrap_or_else(|| pres.identity());
    pres.validate(&v)?;
    Ok(v)
}

fn print_levels(res: &DynResult, ctr: &OpCounter) {
    for (i, l) in res.levels.iter().enumerate() {
        outln!("level {} p={} dim={} value={}", i + 1, l.prime, l.dim, l.value);
    }
    outln!("mults {}", res.multiplications);
    outln!("total_mults {}", ctr.multiplications());
}

fn run(cli: Cli) -> Result<()> {
    let g = cli.global;
    let opts = DynOptions { mode: g.mode, debug_invariants: g.debug_invariants };
    let ctr = OpCounter::new();
    match cli.cmd {
        Cmd::Check { pcp } => {
            let pres = load(&pcp)?;
            let report = check_consistency(&pres, g.budget);
            outln!("{report}");
            match report.verdict {
                Verdict::Pass => {}
                Verdict::Unchecked { .. } => {
                    return Err(PcError::BudgetExceeded { budget: g.budget, order: pres.order().to_string() }.into())
                }
                _ => return Err(HarnessError::Usage(format!("{}: presentation is inconsistent", pcp.display()))),
            }
        }
        Cmd::Normalize { pcp } => {
            let pres = load(&pcp)?;
            out!("{}", lg_normalize(&pres, g.mode, &ctr)?.to_text());
        }
        Cmd::Order { pcp, aut } => {
            let pres = load(&pcp)?;
            let (alpha, _) = load_auto(&pres, &aut)?;
            let res = automorphism_order(&alpha, opts, &ctr)?;
            certify_automorphism_order(&alpha, &res.value, &OpCounter::new())?;
            outln!("order {}", res.value.value());
            outln!("factored {}", res.value);
            print_levels(&res, &ctr);
        }
        Cmd::Cycle { pcp, aut, g: gv, t } => {
            let pres = load(&pcp)?;
            let (alpha, file_t) = load_auto(&pres, &aut)?;
            let t = checked(&pres, t.or(file_t))?;
            let gv = checked(&pres, gv)?;
            let res = affine_cycle_length(&alpha, &t, &gv, opts, &ctr)?;
            certify_cycle_length(&AffineMap::new(t, alpha)?, &gv, &res.value, &OpCounter::new())?;
            outln!("cycle {}", res.value.value());
            outln!("factored {}", res.value);
            print_levels(&res, &ctr);
        }
        Cmd::Preperiod { pcp, endo, g: gv } => {
            let pres = load(&pcp)?;
            let mf = read_map(&endo, &pres)?;
            let phi = PcEndomorphism::new(pres.clone(), mf.images).map_err(|source| HarnessError::File { path: endo.clone(), source })?;
            let gv = checked(&pres, Some(gv))?;
            outln!("preperiod {}", endo_preperiod(&phi, &gv, &ctr)?);
            let per = periodic_subgroup(&phi, &ctr);
            outln!("periodic_order {}", per.order(&pres));
            for y in per.entries() {
                outln!("periodic_pcgs {y}");
            }
        }
        Cmd::Oracle { pcp, aut, g: gv, t } => {
            let pres = load(&pcp)?;
            let (alpha, file_t) = load_auto(&pres, &aut)?;
            match gv {
                None => outln!("order {}", brute_automorphism_order(&alpha, g.budget, &ctr)?),
                Some(gv) => {
                    let t = checked(&pres, t.or(file_t))?;
                    let gv = checked(&pres, Some(gv))?;
                    let a = AffineMap::new(t, alpha)?;
                    outln!("cycle {}", brute_affine_cycle_length(&a, &gv, g.budget, &ctr)?);
                }
            }
        }
        Cmd::Bench { corpus, algos, groups, out } => {
            let mut entries = load_corpus(&corpus)?;
            if !groups.is_empty() {
                entries.retain(|e| groups.contains(&e.name));
            }
            let report = run_bench(&entries, &algos, opts, g.budget)?;
            match out {
                Some(path) => {
                    let f = File::create(&path).map_err(|source| HarnessError::Io { path: path.clone(), source })?;
                    report.write_csv(f)?;
                    eprintln!("{} rows written to {}", report.records.len(), path.display());
                }
                None => report.write_csv(std::io::stdout().lock())?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
