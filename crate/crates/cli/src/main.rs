//! `sperner`: build and check the regular triangulation of the dilated
//! simplex, label it, and compute exact minima with certificates.
//!
//! Data goes to stdout (or `--out`); logs go to stderr. Exit codes: 0 on
//! success, 1 when a verification check fails, 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use sperner_core::hypergraph::{build_hypergraph, hyperedges_are_cells, HypergraphFile};
use sperner_core::labeling::{first_choice, is_sperner, LabelingFile};
use sperner_core::report::{bound_row, bounds_csv, bounds_table, label_summary, upper_bound};
use sperner_core::search::{
    branch_bound_min, brute_force_min, CertificateFile, Method, DEFAULT_BUDGET,
};
use sperner_core::triangulation::{GraphVariant, Triangulation};

#[derive(Parser)]
#[command(name = "sperner", version, about = "Regular simplex triangulations and Sperner labeling minima")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn k_parser() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(2..=16)
}

fn q_parser() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..=64)
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the triangulation (vertices and cells) as JSON
    Enumerate {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        #[arg(long, value_parser = q_parser())]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check triangulation axioms and the equivalence of all constructions
    Verify {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        #[arg(long, value_parser = q_parser())]
        q: u64,
    },
    /// Apply the first-choice labeling (or one from a file) and report counts
    Label {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        #[arg(long, value_parser = q_parser())]
        q: u64,
        /// JSON labeling file; defaults to the first-choice labeling
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// Also report the number of cells showing at least this many colors
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the simplex-lattice hypergraph and check it embeds in the cells
    Hypergraph {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        #[arg(long, value_parser = q_parser())]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the exact minimum number of non-monochromatic cells
    Minimize {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        #[arg(long, value_parser = q_parser())]
        q: u64,
        #[arg(long, value_enum, default_value = "bb")]
        method: MethodArg,
        /// Brute-force refuses labeling spaces larger than this
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads for branch and bound (1 = fully deterministic path)
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate produced by minimize
    CheckCert {
        /// Certificate JSON file
        cert: PathBuf,
    },
    /// Closed-form bounds for q = 1..=Q, as CSV or a table
    Bounds {
        #[arg(long, value_parser = k_parser())]
        k: u64,
        /// Largest q of the range
        #[arg(long, value_parser = q_parser())]
        q: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Fill the exact column by running branch and bound per row
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Bb,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Table,
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.cmd {
        Cmd::Enumerate { k, q, out } => {
            let t = Triangulation::build(k as usize, q as u32)?;
            eprintln!(
                "k={k} q={q}: {} vertices, {} cells",
                t.vertices().len(),
                t.cell_count()
            );
            write_output(&t.to_json(), out.as_deref())?;
            Ok(Outcome::Ok)
        }
        Cmd::Verify { k, q } => verify(k as usize, q as u32),
        Cmd::Label { k, q, labeling, j, out } => label(k as usize, q as u32, labeling, j, out),
        Cmd::Hypergraph { k, q, out } => {
            let t = Triangulation::build(k as usize, q as u32)?;
            let h = build_hypergraph(t.vertices())?;
            write_output(&HypergraphFile::new(t.vertices(), &h).to_json(), out.as_deref())?;
            if hyperedges_are_cells(&h, &t) {
                eprintln!("all {} hyperedges are cells of the triangulation", h.len());
                Ok(Outcome::Ok)
            } else {
                eprintln!("hyperedge embedding FAILED");
                Ok(Outcome::CheckFailed)
            }
        }
        Cmd::Minimize { k, q, method, budget, threads, out } => {
            minimize(k as usize, q as u32, method, budget, threads, out)
        }
        Cmd::CheckCert { cert } => {
            let text = fs::read_to_string(&cert)
                .with_context(|| format!("reading {}", cert.display()))?;
            let cert = CertificateFile::from_json(&text)?;
            if cert.check()? {
                println!(
                    "certificate valid: m({},{}) = {} ({})",
                    cert.k, cert.q, cert.m, cert.method
                );
                Ok(Outcome::Ok)
            } else {
                println!("certificate INVALID for k={} q={}", cert.k, cert.q);
                Ok(Outcome::CheckFailed)
            }
        }
        Cmd::Bounds { k, q, format, exact, threads, out } => {
            bounds(k as usize, q as u32, format, exact, threads, out)
        }
    }
}

fn verify(k: usize, q: u32) -> anyhow::Result<Outcome> {
    let t = Triangulation::from_permutations(k, q)?;
    let report = t.verify();
    let mut all_ok = report.passed();
    for check in &report.checks {
        println!(
            "{}: {} ({})",
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            check.details
        );
    }

    let unit = Triangulation::from_cliques(k, q, GraphVariant::UnitStep)?;
    let alt = Triangulation::from_cliques(k, q, GraphVariant::Alternating)?;
    let equivalent = t.cells() == unit.cells() && t.cells() == alt.cells();
    println!(
        "construction-equivalence: {} (permutations vs unit-step cliques vs alternating cliques)",
        if equivalent { "pass" } else { "FAIL" }
    );
    all_ok &= equivalent;

    Ok(if all_ok { Outcome::Ok } else { Outcome::CheckFailed })
}

fn label(
    k: usize,
    q: u32,
    labeling_path: Option<PathBuf>,
    j: Option<usize>,
    out: Option<PathBuf>,
) -> anyhow::Result<Outcome> {
    let t = Triangulation::build(k, q)?;
    let (labeling, source) = match labeling_path {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            let file = LabelingFile::from_json(&text)?;
            (file.into_labeling(t.vertices())?, "file")
        }
        None => (first_choice(t.vertices()), "first-choice"),
    };
    if !is_sperner(t.vertices(), &labeling) {
        eprintln!("labeling from {source} is not Sperner");
        return Ok(Outcome::CheckFailed);
    }
    let summary = label_summary(&t, &labeling, j)?;
    eprintln!(
        "{source} labeling on k={k} q={q}: {} of {} cells non-monochromatic",
        summary.nonmonochromatic, summary.cell_count
    );
    write_output(&summary.to_json(), out.as_deref())?;
    Ok(Outcome::Ok)
}

fn minimize(
    k: usize,
    q: u32,
    method: MethodArg,
    budget: u64,
    threads: usize,
    out: Option<PathBuf>,
) -> anyhow::Result<Outcome> {
    let t = Triangulation::build(k, q)?;
    let result = match method {
        MethodArg::Brute => brute_force_min(&t, budget)?,
        MethodArg::Bb => branch_bound_min(&t, threads.max(1)),
    };
    let upper = upper_bound(k, q)?;
    eprintln!(
        "computed m({k},{q}) = {} via {} in {:.3}s, {} nodes; first-choice bound {} {}",
        result.m,
        result.method.as_str(),
        result.wall_time.as_secs_f64(),
        result.nodes_explored,
        upper,
        if result.m as u64 == upper {
            "attained"
        } else {
            "not attained"
        }
    );
    if matches!(result.method, Method::Brute) && threads > 1 {
        eprintln!("note: brute force ignores --threads");
    }
    write_output(&CertificateFile::new(k, q, &result).to_json(), out.as_deref())?;
    Ok(Outcome::Ok)
}

fn bounds(
    k: usize,
    q_max: u32,
    format: FormatArg,
    exact: bool,
    threads: usize,
    out: Option<PathBuf>,
) -> anyhow::Result<Outcome> {
    let mut rows = Vec::new();
    for q in 1..=q_max {
        let mut row = bound_row(k, q)?;
        if exact {
            let t = Triangulation::build(k, q)?;
            let result = branch_bound_min(&t, threads.max(1));
            row.exact = Some(result.m as u64);
        }
        rows.push(row);
    }
    let text = match format {
        FormatArg::Csv => bounds_csv(&rows)?,
        FormatArg::Table => bounds_table(&rows)?,
    };
    write_output(&text, out.as_deref())?;
    Ok(Outcome::Ok)
}

fn write_output(data: &str, out: Option<&std::path::Path>) -> anyhow::Result<()> {
    let mut data = data.to_string();
    if !data.ends_with('\n') {
        data.push('\n');
    }
    match out {
        Some(path) => {
            fs::write(path, data).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{data}"),
    }
    Ok(())
}
