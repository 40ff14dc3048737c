//! The `kfold` command line.
//!
//! Exit codes: 0 success, 1 failed verification or bad input file, 2 invalid
//! parameters, 3 instance over a size limit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bounds_report, strictness_check};
use crate::coloring::{chi_k, color, ColoringDocument};
use crate::criticality::{chi_k_minus_v, is_chik_critical, is_chistar_critical};
use crate::error::Error;
use crate::families::{Family, FamilyParams};
use crate::graph::GenericGraph;
use crate::oracle::{exact_chi_k, exact_chi_k_via_lex};

#[derive(Debug, Parser)]
#[command(name = "kfold", version, about = "Optimal k-fold colorings of webs and antiwebs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct FamilyArgs {
    /// web or antiweb
    #[arg(long)]
    pub family: Family,
    /// Number of vertices
    #[arg(short = 'n', allow_negative_numbers = true)]
    pub n: i64,
    /// Distance parameter
    #[arg(short = 'p', allow_negative_numbers = true)]
    pub p: i64,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams, Error> {
        FamilyParams::new(self.family, self.n, self.p)
    }
}

#[derive(Debug, Args, Clone, Copy)]
pub struct FoldArg {
    /// Number of colors per vertex
    #[arg(short = 'k', allow_negative_numbers = true)]
    pub k: i64,
}

impl FoldArg {
    fn get(&self) -> Result<i64, Error> {
        if self.k < 1 {
            Err(Error::FoldNotPositive { k: self.k })
        } else {
            Ok(self.k)
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// k-th chromatic number from the closed form
    Chik {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        fold: FoldArg,
        #[arg(long)]
        json: bool,
    },
    /// Build an optimal k-fold coloring
    Color {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        fold: FoldArg,
        #[arg(long)]
        json: bool,
    },
    /// Check a coloring document (as printed by `color --json`)
    Verify {
        /// Coloring JSON file, or `-` for stdin
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// k-th chromatic number after deleting one vertex
    Minusv {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        fold: FoldArg,
        #[arg(long)]
        json: bool,
    },
    /// Decide χ_k-criticality and report the deciding condition
    Critical {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        fold: FoldArg,
        #[arg(long)]
        json: bool,
    },
    /// k·ω, χ_k, k·χ, χ̄ and ⌈kn/α⌉ with tightness flags
    Bounds {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        fold: FoldArg,
        #[arg(long)]
        json: bool,
    },
    /// Exact χ_k by exhaustive search (small graphs only)
    Oracle {
        #[arg(long, required_unless_present = "dimacs")]
        family: Option<Family>,
        #[arg(short = 'n', allow_negative_numbers = true, requires = "family")]
        n: Option<i64>,
        #[arg(short = 'p', allow_negative_numbers = true, requires = "family")]
        p: Option<i64>,
        /// Read an arbitrary graph in DIMACS .col format instead
        #[arg(long, conflicts_with = "family")]
        dimacs: Option<PathBuf>,
        #[command(flatten)]
        fold: FoldArg,
        /// Delete this (0-based) vertex first
        #[arg(long)]
        delete: Option<usize>,
        /// Color G ∘ K_k with one color per vertex instead
        #[arg(long)]
        via_lex: bool,
        #[arg(long)]
        json: bool,
    },
    /// CSV survey over all valid (n, p) with n_min ≤ n ≤ n_max.
    ///
    /// Columns: family,n,p,k,alpha,omega,chi_k,chi_k_minus_v,critical,chistar_critical
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        n_min: i64,
        #[arg(long)]
        n_max: i64,
        #[arg(short = 'k', long = "k", default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Write the graph in DIMACS .col format
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file (stdout when omitted)
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_validation() => 2,
            CliError::Core(Error::InstanceTooLarge { .. }) => 3,
            _ => 1,
        }
    }
}

pub const TABLE_HEADER: &str = "family,n,p,k,alpha,omega,chi_k,chi_k_minus_v,critical,chistar_critical";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Family,
    pub n: i64,
    pub p: i64,
    pub k: i64,
    pub alpha: i64,
    pub omega: i64,
    pub chi_k: i64,
    pub chi_k_minus_v: i64,
    pub critical: bool,
    pub chistar_critical: bool,
}

impl TableRow {
    pub fn compute(params: &FamilyParams, k: i64) -> Result<TableRow, Error> {
        let report = is_chik_critical(params, k)?;
        Ok(TableRow {
            family: params.family(),
            n: params.n(),
            p: params.p(),
            k,
            alpha: params.alpha(),
            omega: params.omega(),
            chi_k: report.chi_k,
            chi_k_minus_v: report.chi_k_minus_v,
            critical: report.is_critical,
            chistar_critical: is_chistar_critical(params).critical,
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.p,
            self.k,
            self.alpha,
            self.omega,
            self.chi_k,
            self.chi_k_minus_v,
            self.critical,
            self.chistar_critical
        )
    }
}

pub fn table_rows(family: Family, n_min: i64, n_max: i64, k: i64) -> Result<Vec<TableRow>, Error> {
    if k < 1 {
        return Err(Error::FoldNotPositive { k });
    }
    let params: Vec<FamilyParams> = FamilyParams::all_up_to(family, n_max)
        .filter(|f| f.n() >= n_min)
        .collect();
    params.par_iter().map(|f| TableRow::compute(f, k)).collect()
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn print_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs one command, writing its output to `out`; returns the exit status.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, CliError> {
    match &cli.command {
        Command::Chik { family, fold, json } => {
            let params = family.params()?;
            let k = fold.get()?;
            let value = chi_k(&params, k)?;
            if *json {
                print_json(
                    out,
                    &serde_json::json!({
                        "family": params.family(), "n": params.n(), "p": params.p(), "k": k, "chi_k": value,
                    }),
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Color { family, fold, json } => {
            let params = family.params()?;
            let k = fold.get()?;
            let doc = ColoringDocument::new(&params, k, &color(&params, k)?);
            if *json {
                print_json(out, &doc)?;
            } else {
                writeln!(out, "{k}-fold {}-coloring of {params}", doc.x)?;
                for (c, class) in doc.classes.iter().enumerate() {
                    let members: Vec<String> = class.iter().map(usize::to_string).collect();
                    writeln!(out, "color {}: {}", c + 1, members.join(" "))?;
                }
            }
        }
        Command::Verify { input, json } => {
            let doc: ColoringDocument = serde_json::from_str(&read_input(input)?)?;
            let verdict = doc.verify()?;
            if *json {
                print_json(out, &verdict)?;
            } else if verdict.valid {
                writeln!(out, "valid {}-fold coloring (x={})", verdict.k, verdict.x)?;
            } else {
                writeln!(out, "invalid {}-fold coloring (x={})", verdict.k, verdict.x)?;
                for v in &verdict.under_covered {
                    writeln!(out, "  vertex {v} has fewer than {} colors", verdict.k)?;
                }
                for (c, u, v) in &verdict.conflicts {
                    writeln!(out, "  color {c} on adjacent vertices {u} and {v}")?;
                }
            }
            return Ok(if verdict.valid { 0 } else { 1 });
        }
        Command::Minusv { family, fold, json } => {
            let params = family.params()?;
            let k = fold.get()?;
            let value = chi_k_minus_v(&params, k)?;
            if *json {
                print_json(
                    out,
                    &serde_json::json!({
                        "family": params.family(), "n": params.n(), "p": params.p(), "k": k, "chi_k_minus_v": value,
                    }),
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Critical { family, fold, json } => {
            let params = family.params()?;
            let report = is_chik_critical(&params, fold.get()?)?;
            if *json {
                print_json(out, &report)?;
            } else if report.is_critical {
                writeln!(out, "critical ({})", report.witness)?;
            } else {
                writeln!(out, "not critical ({})", report.witness)?;
            }
        }
        Command::Bounds { family, fold, json } => {
            let params = family.params()?;
            let k = fold.get()?;
            let r = bounds_report(&params, k)?;
            if *json {
                print_json(out, &r)?;
            } else {
                let s = strictness_check(&params, k)?;
                writeln!(out, "k·ω       {}", r.k_omega)?;
                writeln!(out, "χ_k       {}", r.chi_k)?;
                writeln!(out, "k·χ       {}", r.k_chi)?;
                writeln!(out, "χ̄         {}/{}", r.frac_chi.num, r.frac_chi.den)?;
                writeln!(out, "⌈kn/α⌉    {}", r.lex_lower)?;
                writeln!(
                    out,
                    "tight     ω={} χ={} χ̄={}",
                    r.tight.omega, r.tight.chi, r.tight.frac
                )?;
                writeln!(out, "strict    upper={} lower={}", s.upper_strict, s.lower_strict)?;
            }
        }
        Command::Oracle {
            family,
            n,
            p,
            dimacs,
            fold,
            delete,
            via_lex,
            json,
        } => {
            let k = fold.get()?;
            let mut graph = match (dimacs, family) {
                (Some(path), _) => GenericGraph::from_dimacs(&fs::read_to_string(path)?)?,
                (None, Some(f)) => {
                    let missing = |flag: &str| {
                        CliError::Io(io::Error::new(io::ErrorKind::InvalidInput, format!("missing {flag}")))
                    };
                    let n = n.ok_or_else(|| missing("-n"))?;
                    let p = p.ok_or_else(|| missing("-p"))?;
                    FamilyParams::new(*f, n, p)?.materialize()?
                }
                (None, None) => unreachable!("clap requires --family or --dimacs"),
            };
            if let Some(v) = delete {
                graph = graph.delete_vertex(*v)?.0;
            }
            let value = if *via_lex {
                exact_chi_k_via_lex(&graph, k as usize)?
            } else {
                exact_chi_k(&graph, k as usize)?
            };
            if *json {
                print_json(
                    out,
                    &serde_json::json!({
                        "vertices": graph.vertex_count(), "edges": graph.edge_count(), "k": k, "chi_k": value,
                    }),
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Table {
            family,
            n_min,
            n_max,
            k,
            json,
        } => {
            let rows = table_rows(*family, *n_min, *n_max, *k)?;
            if *json {
                print_json(out, &rows)?;
            } else {
                writeln!(out, "{TABLE_HEADER}")?;
                for row in &rows {
                    writeln!(out, "{}", row.to_csv())?;
                }
            }
        }
        Command::Export { family, output } => {
            let text = family.params()?.materialize()?.to_dimacs();
            match output {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(0)
}
