//! Command-line front end.
//!
//! Exit codes: `0` success (maximal / equivalent), `1` negative verdict
//! (`check` on a non-maximal simplex, `equiv` on inequivalent simplices),
//! `2` usage or input error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use latfree_core::{
    canonical_form, enumerate_axis, facet_lattice_report, find_witness, is_lattice_free,
    is_maximal_lattice_free, sylvester_bounds, PointBudget, DEFAULT_POINT_BUDGET,
};

use crate::error::CliError;
use crate::format::{read_simplex, CanonicalDoc};
use crate::parallel::enumerate_3d_parallel;
use crate::report::{
    AxisResults, CheckResults, DimInput, Enumerate3dResults, EquivResults, FileInput, NoInputs,
    PairInput, Report,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "latfree",
    version,
    about = "Classify integral maximal lattice-free simplices"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest coordinate box (in integer points) a lattice scan may visit.
    #[arg(long, default_value_t = DEFAULT_POINT_BUDGET, global = true)]
    pub point_budget: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all 3D classes by a bounded Hermite-normal-form search.
    #[command(name = "enumerate3d")]
    Enumerate3d {
        /// Worker threads; the output does not depend on this.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Enumerate maximal simplices conv(0, l1 e1, ..., ld ed).
    #[command(name = "enumerate-axis")]
    EnumerateAxis {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=6))]
        dim: u8,
    },
    /// Decide lattice-freeness and maximality of a simplex file.
    Check { file: PathBuf },
    /// Print the canonical form of a simplex file.
    Canon { file: PathBuf },
    /// Test two simplex files for unimodular equivalence.
    Equiv { first: PathBuf, second: PathBuf },
}

/// Runs one command, writing the report to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let budget = PointBudget(cli.point_budget);
    let json = cli.format == Format::Json;
    let started = Instant::now();
    let (text, code) = match &cli.command {
        Command::Enumerate3d { jobs } => {
            let result = enumerate_3d_parallel(usize::from(*jobs))?;
            let results = Enumerate3dResults::from(&result);
            let text = if json {
                Report::new("enumerate3d", NoInputs {}, results).to_json()
            } else {
                enumerate3d_text(&results)
            };
            (text, 0)
        }
        Command::EnumerateAxis { dim } => {
            let dim = usize::from(*dim);
            let lambdas = enumerate_axis(dim)?;
            let results = AxisResults::new(dim, sylvester_bounds(dim)?, &lambdas)?;
            let text = if json {
                Report::new("enumerate-axis", DimInput { dim }, results).to_json()
            } else {
                axis_text(&results)
            };
            (text, 0)
        }
        Command::Check { file } => {
            let s = read_simplex(file)?;
            let wrap = |e: latfree_core::Error| CliError::from(e).in_file(file);
            let lattice_free = is_lattice_free(&s, budget).map_err(wrap)?;
            let maximal = is_maximal_lattice_free(&s, budget).map_err(wrap)?;
            let facets = s.facets().map_err(wrap)?;
            let report = facet_lattice_report(&s, budget).map_err(wrap)?;
            let results = CheckResults::new(s.dim(), lattice_free, maximal, &facets, &report);
            let text = if json {
                let inputs = FileInput {
                    file: file.display().to_string(),
                };
                Report::new("check", inputs, results).to_json()
            } else {
                check_text(&results)
            };
            (text, if maximal { 0 } else { 1 })
        }
        Command::Canon { file } => {
            let s = read_simplex(file)?;
            let form = canonical_form(&s).map_err(|e| CliError::from(e).in_file(file))?;
            let doc = CanonicalDoc::from(&form);
            let text = if json {
                serde_json::to_string_pretty(&doc).expect("integers serialize")
            } else {
                canon_text(&doc)
            };
            (text, 0)
        }
        Command::Equiv { first, second } => {
            let s = read_simplex(first)?;
            let t = read_simplex(second)?;
            if s.dim() != t.dim() {
                return Err(CliError::Usage(format!(
                    "dimensions differ: {} vs {}",
                    s.dim(),
                    t.dim()
                )));
            }
            let witness = find_witness(&s, &t)?;
            let results = EquivResults {
                equivalent: witness.is_some(),
                witness: witness.as_ref().map(Into::into),
            };
            let code = if results.equivalent { 0 } else { 1 };
            let text = if json {
                let inputs = PairInput {
                    first: first.display().to_string(),
                    second: second.display().to_string(),
                };
                Report::new("equiv", inputs, results).to_json()
            } else {
                equiv_text(&results)
            };
            (text, code)
        }
    };
    match writeln!(out, "{text}") {
        // a closed downstream pipe (`| head`) is not a failure of ours
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            return Err(CliError::Io(e.to_string()))
        }
        _ => {}
    }
    eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
    Ok(code)
}

/// `21x1 + 14x2 + 6x3 + x4 <= 42`
pub fn format_inequality(normal: &[i64], rhs: i64) -> String {
    let mut s = String::new();
    for (j, &a) in normal.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 { "-" } else { "+" };
        if s.is_empty() {
            if a < 0 {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if a.unsigned_abs() != 1 {
            let _ = write!(s, "{}", a.unsigned_abs());
        }
        let _ = write!(s, "x{}", j + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    let _ = write!(s, " <= {rhs}");
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn enumerate3d_text(r: &Enumerate3dResults) -> String {
    let mut s = format!(
        "{} classes of integral maximal lattice-free simplices in dimension 3\n\n",
        r.class_count
    );
    let _ = writeln!(
        s,
        "{:>2}  {:<16}  {:<40}  {:<28}  {:>6}",
        "#", "(a,b,c,d,e,f)", "vertices", "canonical HNF", "tuples"
    );
    for (i, c) in r.classes.iter().enumerate() {
        let p = &c.params;
        let params = format!("({},{},{},{},{},{})", p.a, p.b, p.c, p.d, p.e, p.f);
        let vertices = c
            .representative
            .vertices
            .iter()
            .map(|v| format!("{v:?}"))
            .collect::<Vec<_>>()
            .join(" ")
            .replace(' ', "")
            .replace("][", "] [");
        let hnf = format!("{:?}", c.canonical_form.hnf).replace(' ', "");
        let _ = writeln!(
            s,
            "{:>2}  {:<16}  {:<40}  {:<28}  {:>6}",
            i + 1,
            params,
            vertices,
            hnf,
            c.multiplicity
        );
    }
    s.trim_end().to_string()
}

fn axis_text(r: &AxisResults) -> String {
    let mut s = format!(
        "{} maximal lattice-free axis simplices in dimension {}\nSylvester bounds: {:?}\n\n",
        r.count, r.dim, r.sylvester_bounds
    );
    for (i, row) in r.simplices.iter().enumerate() {
        let _ = writeln!(
            s,
            "{:>4}  {:<28}  {}",
            i + 1,
            format!("{:?}", row.lambdas),
            format_inequality(&row.facet.normal, row.facet.rhs)
        );
    }
    s.trim_end().to_string()
}

fn check_text(r: &CheckResults) -> String {
    let mut s = format!(
        "dimension: {}\nlattice-free: {}\nmaximal: {}\n",
        r.dim,
        yes_no(r.lattice_free),
        yes_no(r.maximal)
    );
    for f in &r.facets {
        let rank = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |r| r.to_string());
        let _ = writeln!(
            s,
            "facet {}: {:<32} interior points {:>4}  span rank {}  sublattice rank {}",
            f.opposite_vertex,
            format_inequality(&f.inequality.normal, f.inequality.rhs),
            f.interior_points,
            rank(f.span_rank),
            rank(f.sublattice_rank)
        );
    }
    match r.observation_holds {
        Some(b) => {
            let _ = writeln!(s, "observation holds: {}", yes_no(b));
        }
        None => s.push_str("observation holds: n/a (not maximal)\n"),
    }
    s.trim_end().to_string()
}

fn canon_text(doc: &CanonicalDoc) -> String {
    let mut s = format!("canonical form (dimension {}):\n", doc.dim);
    for row in &doc.hnf {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>6}")).collect();
        let _ = writeln!(s, "{}", cells.join(""));
    }
    s.trim_end().to_string()
}

fn equiv_text(r: &EquivResults) -> String {
    let mut s = format!("equivalent: {}\n", yes_no(r.equivalent));
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "first[j] = M * second[sigma[j]] + v");
        let _ = writeln!(s, "M = {:?}", w.m);
        let _ = writeln!(s, "v = {:?}", w.v);
        let _ = writeln!(s, "sigma = {:?}", w.sigma);
    }
    s.trim_end().to_string()
}
