//! `octofn` command-line tool.
//!
//! Exit status: 0 when every check passes, 1 when a check fails (the report is
//! still written), 2 for invalid arguments.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use octofn::cayley::check_multiplication_table;
use octofn::diffops::{apply_cr, CrOperator, OCT_VARS};
use octofn::fundsol::{
    decades, delta_pairing, demo_profile, pv_inner_integral, ComplexPoint, Cutoff, GaussianTest, Grid,
};
use octofn::kernel::{dim_formula, dimension_table, kernel_basis_with, monogenic_from_kernel};
use octofn::random::ExactRng;
use octofn::suites::{default_trials, random_kernel_element, run_suite, Suite, DEFAULT_SEED};
use octofn::Execution;

/// Default worker count for the parallel paths.
const THREADS_ENV: &str = "OCTOFN_THREADS";

#[derive(Parser, Debug)]
#[command(name = "octofn", version, about = "Exact computations for complexified octonion function theory")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel dimensions of the ultrahyperbolic operator for k = 0..=kmax.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: u32,
    },
    /// An explicit basis of the degree-k kernel.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// Run a seeded property suite.
    Verify {
        suite: Suite,
        /// Defaults: algebra 1000, operators 100, kernel 20, fischer 0.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Build Q_k = Dbar P_{k+1} from a random kernel element and check D Q_k = 0.
    Monogenic {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of basis elements given random coefficients.
        #[arg(long, default_value_t = 6)]
        picks: usize,
    },
    /// Pair E = conj(z)/(4 pi z) with L of a Gaussian and compare with its value at 0.
    Fundsol {
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 800)]
        cells: usize,
        /// Half-width of the grid; defaults to 10 sigma.
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        center_x: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        center_y: f64,
        #[arg(long, default_value_t = 1e-4)]
        tolerance: f64,
    },
    /// Cut-off sequence of the principal-value integral for a smooth profile.
    PvDemo {
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// R in the profile exp(-R^2 cos^2(pi/4 + t/2)).
        #[arg(long, default_value_t = 1.5)]
        profile_radius: f64,
        /// Cutoffs run from 10^-first to 10^-last.
        #[arg(long, default_value_t = 1)]
        first: i32,
        #[arg(long, default_value_t = 8)]
        last: i32,
        /// `symmetric`, `scaled:<ratio>` or `power:<exponent>`.
        #[arg(long, default_value = "symmetric", value_parser = parse_cutoff)]
        cutoff: Cutoff,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Also write (epsilon, re, im) rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_cutoff(s: &str) -> Result<Cutoff, String> {
    let number = |v: &str| v.parse::<f64>().map_err(|e| format!("bad number `{v}`: {e}"));
    match s.split_once(':') {
        None if s == "symmetric" => Ok(Cutoff::Symmetric),
        Some(("scaled", v)) => Ok(Cutoff::Scaled { ratio: number(v)? }),
        Some(("power", v)) => Ok(Cutoff::Power { exponent: number(v)? }),
        _ => Err(format!("unknown cutoff `{s}` (expected symmetric, scaled:<r> or power:<e>)")),
    }
}

/// A finished report in every supported format.
struct Artifact {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    text: String,
    passed: bool,
}

impl Artifact {
    fn render(&self, format: Format) -> Result<Vec<u8>> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)?;
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => csv_bytes(&self.header, &self.rows)?,
            Format::Text => self.text.clone().into_bytes(),
        })
    }
}

fn csv_bytes(header: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.into_inner().context("flushing csv")
}

fn dims(n: usize, kmax: u32, exec: Execution) -> Result<Artifact> {
    let rows = dimension_table(n, kmax, exec)?;
    let passed = rows.iter().all(|r| r.matched);
    let mut text = format!("{:>3} {:>3} {:>12} {:>12}  match\n", "n", "k", "computed", "formula");
    for r in &rows {
        text += &format!("{:>3} {:>3} {:>12} {:>12}  {}\n", r.n, r.k, r.computed, r.formula, r.matched);
    }
    Ok(Artifact {
        json: json!({ "n": n, "kmax": kmax, "rows": rows }),
        header: vec!["n", "k", "computed", "formula", "match"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.computed.to_string(),
                    r.formula.to_string(),
                    r.matched.to_string(),
                ]
            })
            .collect(),
        text,
        passed,
    })
}

fn basis(n: usize, k: u32, exec: Execution) -> Result<Artifact> {
    let b = kernel_basis_with(n, k, exec)?;
    let formula = dim_formula(n, k);
    let passed = b.len() as u128 == formula;
    let texts: Vec<String> = b.polynomials.iter().map(|p| p.to_string()).collect();
    let mut text = format!("dim H_{k}(C^{n}) = {} (formula {formula})\n", b.len());
    for t in &texts {
        text += t;
        text.push('\n');
    }
    Ok(Artifact {
        json: json!({ "n": n, "k": k, "dim": b.len(), "formula_dim": formula, "basis": b.polynomials }),
        header: vec!["index", "polynomial"],
        rows: texts.into_iter().enumerate().map(|(i, t)| vec![i.to_string(), t]).collect(),
        text,
        passed,
    })
}

fn verify(suite: Suite, trials: Option<usize>, seed: u64, exec: Execution) -> Result<Artifact> {
    let trials = trials.unwrap_or_else(|| default_trials(suite));
    let rep = run_suite(suite, trials, seed, exec);
    let mut text = format!("suite {suite}, seed {seed}, trials {trials}\n");
    for p in &rep.properties {
        if p.passed {
            text += &format!("PASS {} ({} checked)\n", p.name, p.checked);
        } else {
            text += &format!("FAIL {} ({}/{} failed)\n", p.name, p.failures, p.checked);
            if let Some(c) = &p.counterexample {
                text += &format!("  counterexample: {c}\n");
            }
        }
    }
    text += if rep.passed { "all properties hold\n" } else { "some properties failed\n" };
    Ok(Artifact {
        json: serde_json::to_value(&rep)?,
        header: vec!["suite", "seed", "property", "checked", "failures", "passed"],
        rows: rep
            .properties
            .iter()
            .map(|p| {
                vec![
                    suite.to_string(),
                    seed.to_string(),
                    p.name.clone(),
                    p.checked.to_string(),
                    p.failures.to_string(),
                    p.passed.to_string(),
                ]
            })
            .collect(),
        text,
        passed: rep.passed,
    })
}

fn monogenic(k: u32, seed: u64, picks: usize, exec: Execution) -> Result<Artifact> {
    if picks == 0 {
        bail!("--picks must be at least 1");
    }
    let lift = kernel_basis_with(OCT_VARS, k + 1, exec)?;
    let p = random_kernel_element(&lift, &mut ExactRng::seeded(seed), picks);
    let q = monogenic_from_kernel(&p)?;
    let residual = apply_cr(CrOperator::D, &q)?;
    let passed = residual.is_zero();
    let components = q.components();
    let text = format!(
        "k = {k}, seed = {seed}\nP_{} has {} terms, Q_{k} has {} terms\nD Q_{k} = 0: {passed}\n",
        k + 1,
        p.len(),
        q.len()
    );
    Ok(Artifact {
        json: json!({
            "k": k,
            "seed": seed,
            "picks": picks,
            "p": p,
            "q": q,
            "d_residual": residual,
            "monogenic": passed,
        }),
        header: vec!["seed", "component", "q_component"],
        rows: components
            .iter()
            .enumerate()
            .map(|(j, c)| vec![seed.to_string(), j.to_string(), c.to_string()])
            .collect(),
        text,
        passed,
    })
}

fn fundsol(
    sigma: f64,
    cells: usize,
    radius: Option<f64>,
    cx: f64,
    cy: f64,
    tolerance: f64,
    exec: Execution,
) -> Result<Artifact> {
    let phi = GaussianTest::new(sigma, ComplexPoint::new(cx, cy)?)?;
    let grid = Grid { cells, radius: radius.unwrap_or(10.0 * sigma) };
    let rep = delta_pairing(&phi, grid, exec)?;
    let passed = rep.abs_error <= tolerance + rep.skipped_cell_bound;
    let mut json = serde_json::to_value(&rep)?;
    json["tolerance"] = json!(tolerance);
    json["passed"] = json!(passed);
    let text = format!(
        "sigma {sigma}, grid {cells}^2 on half-width {}\ncomputed {} {:+}i, expected {}\nabs error {:.3e} (tolerance {tolerance:.0e}): {}\n",
        grid.radius,
        rep.computed[0],
        rep.computed[1],
        rep.expected,
        rep.abs_error,
        if passed { "PASS" } else { "FAIL" }
    );
    Ok(Artifact {
        json,
        header: vec!["sigma", "cells", "radius", "computed_re", "computed_im", "expected", "abs_error"],
        rows: vec![vec![
            sigma.to_string(),
            cells.to_string(),
            grid.radius.to_string(),
            rep.computed[0].to_string(),
            rep.computed[1].to_string(),
            rep.expected.to_string(),
            rep.abs_error.to_string(),
        ]],
        text,
        passed,
    })
}

#[allow(clippy::too_many_arguments)]
fn pv_demo(
    n: u32,
    profile_radius: f64,
    first: i32,
    last: i32,
    cutoff: Cutoff,
    tolerance: f64,
    csv: Option<PathBuf>,
    exec: Execution,
) -> Result<Artifact> {
    if last < first {
        bail!("--last must not be smaller than --first");
    }
    let f = demo_profile(profile_radius);
    let rep = pv_inner_integral(&f, n, &decades(first, last), cutoff, tolerance, exec)?;
    let rows: Vec<Vec<String>> = rep
        .epsilon_sequence
        .iter()
        .zip(&rep.partial_values)
        .map(|(e, v)| vec![e.to_string(), v[0].to_string(), v[1].to_string()])
        .collect();
    if let Some(path) = csv {
        fs::write(&path, csv_bytes(&["epsilon", "re", "im"], &rows)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = format!("n = {n}, cutoff {cutoff:?}\n");
    for r in &rows {
        text += &format!("eps {:>8}  {}\n", r[0], r[1]);
    }
    text += &format!(
        "spread {:.3e} (tolerance {tolerance:.0e}), extrapolated {}: {}\n",
        rep.spread,
        rep.extrapolated[0],
        if rep.converged { "converged" } else { "not converged" }
    );
    Ok(Artifact {
        json: serde_json::to_value(&rep)?,
        header: vec!["epsilon", "re", "im"],
        rows,
        text,
        passed: rep.converged,
    })
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v.parse().with_context(|| format!("{THREADS_ENV}={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    // The stored table and the Cayley-Dickson product must agree before anything else runs.
    check_multiplication_table()?;
    let exec = Execution::available();
    let artifact = match cli.command {
        Command::Dims { n, kmax } => dims(n, kmax, exec)?,
        Command::Basis { n, k } => basis(n, k, exec)?,
        Command::Verify { suite, trials, seed } => verify(suite, trials, seed, exec)?,
        Command::Monogenic { k, seed, picks } => monogenic(k, seed, picks, exec)?,
        Command::Fundsol { sigma, cells, radius, center_x, center_y, tolerance } => {
            fundsol(sigma, cells, radius, center_x, center_y, tolerance, exec)?
        }
        Command::PvDemo { n, profile_radius, first, last, cutoff, tolerance, csv } => {
            pv_demo(n, profile_radius, first, last, cutoff, tolerance, csv, exec)?
        }
    };
    let bytes = artifact.render(cli.format)?;
    match &cli.output {
        Some(path) => fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(artifact.passed)
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own for usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_syntax() {
        assert_eq!(parse_cutoff("symmetric"), Ok(Cutoff::Symmetric));
        assert_eq!(parse_cutoff("scaled:2"), Ok(Cutoff::Scaled { ratio: 2.0 }));
        assert_eq!(parse_cutoff("power:1.5"), Ok(Cutoff::Power { exponent: 1.5 }));
        assert!(parse_cutoff("power:x").is_err());
        assert!(parse_cutoff("symmetric:1").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
