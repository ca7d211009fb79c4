//! `jshift`: classify weighted backward shifts from spec files, build and
//! verify reachability witnesses, run finite-window probes, and replay the
//! bundled gallery of worked examples.
//!
//! Exit codes: 0 for certified verdicts and successful runs, 1 for input
//! errors, 2 for an honest Undecided classification.

mod gallery;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jshift_core::{
    build_witness, classify_bilateral, classify_j0, classify_salas_lp, classify_unilateral,
    format_rational, mixing_family, parse_rational, probe_sweep_threads, sqrt_exact,
    verify_witness, Ambient, Error, FiniteVector, Horizons, ProbeKind, ProbeQuery, Rational,
    Vector, Verdict, WeightSpec,
};

#[derive(Parser)]
#[command(
    name = "jshift",
    version,
    about = "Exact analysis of weighted backward shifts"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the shift described by a weight spec file
    Classify {
        /// weight spec file (JSON)
        #[arg(long)]
        spec: PathBuf,
        /// window-length horizon for bounded searches
        /// (default: JSHIFT_DEFAULT_HORIZON, else 64)
        #[arg(long)]
        horizon_n: Option<u64>,
        /// offset horizon for evidence scans
        /// (default: JSHIFT_DEFAULT_HORIZON, else 4096)
        #[arg(long)]
        horizon_j: Option<i64>,
    },
    /// Build a vector agreeing with x below a cut whose n-th shift image is
    /// exactly y, and verify the identity coordinate by coordinate
    Witness {
        /// weight spec file (JSON)
        #[arg(long)]
        spec: PathBuf,
        /// base vector file (JSON, finitely supported)
        #[arg(long)]
        x: PathBuf,
        /// target vector file (JSON)
        #[arg(long)]
        y: PathBuf,
        /// single power
        #[arg(long)]
        n: Option<u64>,
        /// inclusive power range `A..B`; prints the error table instead
        #[arg(long)]
        range: Option<String>,
        /// check coordinates 1..=W of the shift identity
        #[arg(long, default_value_t = 16)]
        verify_window: i64,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Exact lower bounds on how well n-th shift images can reach y: the
    /// smallest window error over a δ-ball at x, or with --preimage the
    /// smallest norm of any vector mapping onto y within --tol
    Probe {
        /// weight spec file (JSON)
        #[arg(long)]
        spec: PathBuf,
        /// base vector file for the window-error mode (default: 0)
        #[arg(long)]
        x: Option<PathBuf>,
        /// target vector file (JSON)
        #[arg(long)]
        y: PathBuf,
        /// radius of the ball around x (window-error mode)
        #[arg(long)]
        delta: Option<String>,
        /// switch to the minimal-preimage-norm mode
        #[arg(long)]
        preimage: bool,
        /// per-coordinate tolerance for --preimage (default: 0)
        #[arg(long)]
        tol: Option<String>,
        /// inclusive coordinate window `LO..HI`
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// inclusive power range `A..B`
        #[arg(long)]
        range: String,
        /// also write the rows as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        /// worker threads; the report is identical for every count
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// emit JSON instead of CSV on stdout
        #[arg(long)]
        json: bool,
    },
    /// Re-run a bundled worked example end to end, asserting its advertised
    /// exact outcomes
    Gallery {
        /// item name (omit and pass --all for every item)
        name: Option<String>,
        /// run every item in order
        #[arg(long)]
        all: bool,
        /// worker threads; the output is identical for every count
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Cmd::Classify {
            spec,
            horizon_n,
            horizon_j,
        } => cmd_classify(&spec, horizon_n, horizon_j),
        Cmd::Witness {
            spec,
            x,
            y,
            n,
            range,
            verify_window,
            json,
        } => cmd_witness(&spec, &x, &y, n, range, verify_window, json).map(|()| 0),
        Cmd::Probe {
            spec,
            x,
            y,
            delta,
            preimage,
            tol,
            window,
            range,
            csv,
            threads,
            json,
        } => cmd_probe(ProbeArgs {
            spec,
            x,
            y,
            delta,
            preimage,
            tol,
            window,
            range,
            csv,
            threads,
            json,
        })
        .map(|()| 0),
        Cmd::Gallery { name, all, threads } => cmd_gallery(name, all, threads).map(|()| 0),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<WeightSpec, Error> {
    WeightSpec::from_json_str(&read_file(path)?)
}

fn load_vector(path: &Path) -> Result<Vector, Error> {
    Vector::from_json_str(&read_file(path)?)
}

fn load_finite(path: &Path) -> Result<FiniteVector, Error> {
    match load_vector(path)? {
        Vector::Finite(v) => Ok(v),
        Vector::TailConstant(_) => Err(Error::InvalidVector(
            "the base vector must be finitely supported".into(),
        )),
    }
}

/// Inclusive `A..B` ranges for powers and coordinate windows.
fn parse_range<T: std::str::FromStr>(s: &str) -> Result<(T, T), Error> {
    let bad = || Error::Parse(format!("range {s:?}: expected the inclusive form A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn nonnegative(name: &str, s: &str) -> Result<Rational, Error> {
    let r = parse_rational(s)?;
    if r < parse_rational("0").expect("zero parses") {
        return Err(Error::Domain(format!(
            "{name} must be nonnegative, got {s}"
        )));
    }
    Ok(r)
}

fn resolve_horizons(n: Option<u64>, j: Option<i64>) -> Result<Horizons, Error> {
    let defaults = Horizons::default();
    let env = match std::env::var("JSHIFT_DEFAULT_HORIZON") {
        Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| {
            Error::Parse(format!("JSHIFT_DEFAULT_HORIZON: not a whole number: {v:?}"))
        })?),
        Err(_) => None,
    };
    Ok(Horizons {
        n: n.or(env).unwrap_or(defaults.n),
        j: j.or(env.map(|v| v as i64)).unwrap_or(defaults.j),
    })
}

fn cmd_classify(path: &Path, horizon_n: Option<u64>, horizon_j: Option<i64>) -> Result<u8, Error> {
    let spec = load_spec(path)?;
    let horizons = resolve_horizons(horizon_n, horizon_j)?;
    let classification = match spec.ambient() {
        Ambient::Unilateral => classify_unilateral(&spec, &horizons)?,
        Ambient::Bilateral => classify_bilateral(&spec)?,
    };
    let salas = match spec.ambient() {
        Ambient::Unilateral => Some(classify_salas_lp(&spec, horizons.j)?),
        Ambient::Bilateral => None,
    };
    let j0 = classify_j0(&spec, &horizons)?;
    let code = match classification.verdict {
        Verdict::CertifiedJClass | Verdict::CertifiedNotJClass => 0,
        Verdict::RefutedUpToHorizon | Verdict::Undecided => 2,
    };
    let report = serde_json::json!({
        "classification": classification,
        "salas": salas,
        "j0": j0,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(code)
}

fn render_sqrt(sq: &Rational) -> String {
    match sqrt_exact(sq) {
        Some(r) => format_rational(&r),
        None => format!("sqrt({})", format_rational(sq)),
    }
}

fn cmd_witness(
    spec: &Path,
    x: &Path,
    y: &Path,
    n: Option<u64>,
    range: Option<String>,
    verify_window: i64,
    json: bool,
) -> Result<(), Error> {
    let w = load_spec(spec)?;
    let xv = load_finite(x)?;
    let yv = load_vector(y)?;
    match (n, range) {
        (Some(n), None) => {
            let wit = build_witness(&w, &xv, &yv, n)?;
            let verify = verify_witness(&wit, 1, verify_window)?;
            let dump = wit.dump(1, verify_window)?;
            if json {
                let out = serde_json::json!({ "dump": dump, "verify": verify });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("dump serializes")
                );
            } else {
                println!("power n = {} (support cut n0 = {})", dump.n, dump.n0);
                match &dump.error_bound {
                    Some(e) => println!(
                        "exact distance to the base: {e} ({})",
                        dump.error_bound_float
                    ),
                    None => println!(
                        "exact squared distance to the base: {} ({})",
                        dump.error_bound_sq, dump.error_bound_float
                    ),
                }
                println!(
                    "shift identity on 1..={verify_window}: {}",
                    if verify.shift_identity_ok {
                        "ok"
                    } else {
                        "VIOLATED"
                    }
                );
                println!("nonzero coordinates up to {verify_window}:");
                for (k, re, im) in &dump.coordinates {
                    if re != "0/1" || im != "0/1" {
                        if im == "0/1" {
                            println!("  z_{k} = {re}");
                        } else {
                            println!("  z_{k} = {re} + ({im})i");
                        }
                    }
                }
            }
            Ok(())
        }
        (None, Some(r)) => {
            let (a, b) = parse_range::<u64>(&r)?;
            let family = mixing_family(&w, &xv, &yv, a, b)?;
            let rows = family.rows()?;
            if json {
                let out = serde_json::json!({
                    "certificate": family.certificate,
                    "rows": rows,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("rows serialize")
                );
            } else {
                let cert = &family.certificate;
                println!(
                    "certificate: C({}) = {} > 1 (weight floor {}, floor constant {})",
                    cert.window_len,
                    format_rational(&cert.window_floor),
                    format_rational(&cert.weight_floor),
                    format_rational(&cert.floor_constant),
                );
                println!("{:>4}  {:<20}  certificate bound", "n", "exact distance");
                for row in &rows {
                    println!(
                        "{:>4}  {:<20}  {}",
                        row.n,
                        render_sqrt(&row.exact_sq),
                        render_sqrt(&row.certificate_bound_sq),
                    );
                }
            }
            Ok(())
        }
        _ => Err(Error::Domain("pass exactly one of --n and --range".into())),
    }
}

struct ProbeArgs {
    spec: PathBuf,
    x: Option<PathBuf>,
    y: PathBuf,
    delta: Option<String>,
    preimage: bool,
    tol: Option<String>,
    window: String,
    range: String,
    csv: Option<PathBuf>,
    threads: usize,
    json: bool,
}

fn cmd_probe(args: ProbeArgs) -> Result<(), Error> {
    let w = load_spec(&args.spec)?;
    let yv = load_vector(&args.y)?;
    let window = parse_range::<i64>(&args.window)?;
    let n_range = parse_range::<u64>(&args.range)?;
    let kind = if args.preimage {
        if args.delta.is_some() {
            return Err(Error::Domain(
                "--delta belongs to the window-error mode; --preimage takes --tol".into(),
            ));
        }
        let tol = nonnegative("--tol", args.tol.as_deref().unwrap_or("0"))?;
        ProbeKind::PreimageNorm { tol }
    } else {
        if args.tol.is_some() {
            return Err(Error::Domain(
                "--tol belongs to --preimage; the window-error mode takes --delta".into(),
            ));
        }
        let delta = match &args.delta {
            Some(d) => nonnegative("--delta", d)?,
            None => {
                return Err(Error::Domain(
                    "the window-error mode needs --delta (or pass --preimage)".into(),
                ))
            }
        };
        let x = match &args.x {
            Some(p) => load_finite(p)?,
            None => FiniteVector::zero(w.ambient()),
        };
        ProbeKind::WindowError { x, delta }
    };
    let query = ProbeQuery {
        weights: w,
        y: yv,
        kind,
        window,
        n_range,
    };
    let report = probe_sweep_threads(&query, args.threads.max(1))?;
    if let Some(path) = &args.csv {
        fs::write(path, report.to_csv())
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    if args.json {
        println!("{}", report.to_json_string());
    } else {
        print!("{}", report.to_csv());
    }
    Ok(())
}

fn cmd_gallery(name: Option<String>, all: bool, threads: usize) -> Result<(), Error> {
    let threads = threads.max(1);
    match (name, all) {
        (Some(n), false) => {
            print!("{}", gallery::run_item(&n, threads)?);
            Ok(())
        }
        (None, true) => {
            print!("{}", gallery::run_all(threads)?);
            Ok(())
        }
        _ => Err(Error::Domain(format!(
            "name one gallery item or pass --all; items: {}",
            gallery::ITEM_NAMES.join(", ")
        ))),
    }
}
