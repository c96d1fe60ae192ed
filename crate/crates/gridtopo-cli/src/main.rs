//! Command line harness for the lattice-topology library: neighbor
//! listings, component partitions, manifold and good-pair checks, the
//! good-pair verdict table, Khalimsky surface checks, a Jordan-style
//! complement probe and a PGM rasterizer.
//!
//! Exit codes are uniform across subcommands: 0 when the checked
//! property holds (or the command is purely informational), 1 when the
//! property fails and a witness is reported, 2 on usage or input errors.
//! Verdicts go to stdout as JSON with a fixed field order; timing is
//! printed to stderr so identical runs produce identical stdout bytes.

#![forbid(unsafe_code)]

mod document;
mod render;
mod report;

use std::fmt;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use gridtopo::{
    complement_components, components, good_pair_table, is_digital_manifold, is_good_pair,
    jordan_check, khalimsky_space_on, AdjacencyPair, AdjacencySpec, GoodPairTable, Point,
    PointSet, Window,
};

use document::PointSetDocument;
use report::{
    partition_blocks, point_repr, print_json, ComponentsReport, GoodPairFailureRepr,
    GoodPairReport, JordanReportRepr, ManifoldFailureRepr, ManifoldReport, SurfaceReport,
};

/// Anything that should stop the command with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Core(gridtopo::Error),
    Io { path: String, source: std::io::Error },
    Document(String),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Document(msg) => write!(f, "invalid document: {msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gridtopo::Error> for CliError {
    fn from(e: gridtopo::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Parser)]
#[command(
    name = "gridtopo",
    version,
    about = "Adjacency, manifold and good-pair checks on the integer lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the neighbors of a point as a point-set document.
    Neighbors {
        /// Ambient dimension, 1 through 6.
        #[arg(long)]
        dim: usize,
        /// proto, omega, cubical:<k> or khalimsky.
        #[arg(long)]
        adjacency: String,
        /// Comma-separated coordinates, e.g. 0,-1.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Partition a point set, or its complement, into connected blocks.
    Components {
        /// Path of a point-set document, or - for stdin.
        #[arg(long)]
        input: String,
        /// proto, omega, cubical:<k> or khalimsky.
        #[arg(long)]
        adjacency: String,
        /// Partition the complement instead; the block reaching away
        /// from the set is flagged unbounded.
        #[arg(long)]
        complement: bool,
    },
    /// Check the four digital-manifold axioms for a point set.
    CheckManifold {
        /// Path of a point-set document, or - for stdin.
        #[arg(long)]
        input: String,
        /// Foreground adjacency.
        #[arg(long)]
        alpha: String,
        /// Background adjacency.
        #[arg(long)]
        beta: String,
    },
    /// Decide whether an adjacency pair is good.
    GoodPair {
        /// Ambient dimension, 2 through 6.
        #[arg(long)]
        dim: usize,
        /// Foreground adjacency.
        #[arg(long)]
        alpha: String,
        /// Background adjacency.
        #[arg(long)]
        beta: String,
    },
    /// Print good-pair verdicts for every cubical pair of a dimension.
    GoodPairTable {
        /// Table dimension, 2 through 4 (5 with --allow-slow).
        #[arg(long)]
        dim: usize,
        /// Permit the large dimension-5 computation.
        #[arg(long)]
        allow_slow: bool,
    },
    /// Check that the Khalimsky sphere around a point is a surface.
    SurfaceCheck {
        /// Ambient dimension, 1 through 3.
        #[arg(long)]
        dim: usize,
        /// Comma-separated coordinates of the center.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Only khalimsky is supported.
        #[arg(long, default_value = "khalimsky")]
        topology: String,
    },
    /// Count complement components and their contacts with the set.
    Jordan {
        /// Path of a point-set document, or - for stdin.
        #[arg(long)]
        input: String,
        /// Foreground adjacency.
        #[arg(long)]
        alpha: String,
        /// Background adjacency.
        #[arg(long)]
        beta: String,
    },
    /// Rasterize a planar point set to a binary PGM image.
    Render {
        /// Path of a point-set document, or - for stdin.
        #[arg(long)]
        input: String,
        /// Output PGM path.
        #[arg(long)]
        output: String,
        /// Viewport as x0,y0,x1,y1 (corners included); defaults to the
        /// set's bounding box.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(cli.command);
    eprintln!("timing: {:.2?}", started.elapsed());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand. `Ok(false)` means the checked property failed
/// and a witness was printed; errors mean the inputs were unusable.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Neighbors { dim, adjacency, point } => {
            let spec = parse_spec(&adjacency, dim)?;
            let p = parse_point(&point, dim)?;
            let neighbors = spec.neighbors(&p)?;
            println!("{}", PointSetDocument::from_set(&neighbors).to_json());
            Ok(true)
        }
        Command::Components { input, adjacency, complement } => {
            let set = PointSetDocument::load(&input)?.to_set()?;
            let spec = parse_spec(&adjacency, set.dim())?;
            let partition = if complement {
                complement_components(&spec, &set, None)?
            } else {
                components(&spec, &set)?
            };
            print_json(&ComponentsReport {
                command: "components",
                adjacency: spec.to_string(),
                complement,
                block_count: partition.len(),
                unbounded_index: partition.unbounded_index(),
                blocks: partition_blocks(&partition),
            });
            Ok(true)
        }
        Command::CheckManifold { input, alpha, beta } => {
            let set = PointSetDocument::load(&input)?.to_set()?;
            let pair = parse_pair(&alpha, &beta, set.dim())?;
            let window = default_window(&set);
            let verdict = is_digital_manifold(&set, &pair, &window)?;
            let failure = verdict.failure();
            print_json(&ManifoldReport {
                command: "check-manifold",
                alpha: pair.alpha().to_string(),
                beta: pair.beta().to_string(),
                holds: verdict.holds(),
                failed_axiom: failure.and_then(|f| f.axiom()),
                witness: failure.map(ManifoldFailureRepr::new),
            });
            Ok(verdict.holds())
        }
        Command::GoodPair { dim, alpha, beta } => {
            let pair = parse_pair(&alpha, &beta, dim)?;
            let verdict = is_good_pair(&pair)?;
            print_json(&GoodPairReport {
                command: "good-pair",
                dim,
                alpha: pair.alpha().to_string(),
                beta: pair.beta().to_string(),
                good: verdict.is_good(),
                witness: verdict.failure().map(GoodPairFailureRepr::new),
            });
            Ok(verdict.is_good())
        }
        Command::GoodPairTable { dim, allow_slow } => {
            let table = good_pair_table(dim, allow_slow)?;
            print!("{}", format_table(&table)?);
            Ok(true)
        }
        Command::SurfaceCheck { dim, point, topology } => {
            if topology != "khalimsky" {
                return Err(CliError::Usage(format!(
                    "unsupported topology {topology:?}; only khalimsky is available"
                )));
            }
            if !(1..=3).contains(&dim) {
                return Err(CliError::Usage(format!(
                    "surface recursion is supported for dimensions 1 through 3, got {dim}"
                )));
            }
            let p = parse_point(&point, dim)?;
            let sphere = AdjacencySpec::khalimsky(dim)?.neighbors(&p)?;
            let space = khalimsky_space_on(&sphere);
            let is_surface = space.is_k_surface(dim - 1);
            print_json(&SurfaceReport {
                command: "surface-check",
                dim,
                point: point_repr(&p),
                topology: "khalimsky",
                surface_rank: dim - 1,
                is_surface,
                sphere: PointSetDocument::from_set(&sphere),
            });
            Ok(is_surface)
        }
        Command::Jordan { input, alpha, beta } => {
            let set = PointSetDocument::load(&input)?.to_set()?;
            let pair = parse_pair(&alpha, &beta, set.dim())?;
            let outcome = jordan_check(&set, &pair)?;
            print_json(&JordanReportRepr {
                command: "jordan",
                alpha: pair.alpha().to_string(),
                beta: pair.beta().to_string(),
                component_count: outcome.component_count(),
                all_points_touch_all_blocks: outcome.all_points_touch_all_blocks(),
                two_sided: outcome.two_sided(),
                unbounded_index: outcome.partition().unbounded_index(),
                blocks: partition_blocks(outcome.partition()),
            });
            Ok(outcome.two_sided())
        }
        Command::Render { input, output, window } => {
            let set = PointSetDocument::load(&input)?.to_set()?;
            if set.dim() != 2 {
                return Err(CliError::Usage(format!(
                    "render needs a planar set, the document has dimension {}",
                    set.dim()
                )));
            }
            let viewport = match window {
                Some(text) => parse_window(&text, 2)?,
                None => set.bounding_window().ok_or_else(|| {
                    CliError::Usage(
                        "the set is empty; pass --window to pick a viewport".into(),
                    )
                })?,
            };
            let bytes = render::render_pgm(&set, &viewport);
            fs::write(&output, bytes)
                .map_err(|e| CliError::Io { path: output.clone(), source: e })?;
            Ok(true)
        }
    }
}

fn parse_spec(text: &str, dim: usize) -> Result<AdjacencySpec, CliError> {
    let spec = if text == "proto" {
        AdjacencySpec::proto(dim)
    } else if text == "omega" {
        AdjacencySpec::omega(dim)
    } else if text == "khalimsky" {
        AdjacencySpec::khalimsky(dim)
    } else if let Some(rank) = text.strip_prefix("cubical:") {
        let rank: usize = rank.parse().map_err(|_| {
            CliError::Usage(format!("the rank in {text:?} is not a whole number"))
        })?;
        AdjacencySpec::cubical(rank, dim)
    } else {
        return Err(CliError::Usage(format!(
            "unknown adjacency {text:?}; use proto, omega, cubical:<k> or khalimsky"
        )));
    };
    spec.map_err(CliError::Core)
}

fn parse_pair(alpha: &str, beta: &str, dim: usize) -> Result<AdjacencyPair, CliError> {
    Ok(AdjacencyPair::new(parse_spec(alpha, dim)?, parse_spec(beta, dim)?)?)
}

fn parse_integers(text: &str) -> Result<Vec<i32>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse().map_err(|_| {
                CliError::Usage(format!("{part:?} is not an integer coordinate"))
            })
        })
        .collect()
}

fn parse_point(text: &str, dim: usize) -> Result<Point, CliError> {
    let coords = parse_integers(text)?;
    if coords.len() != dim {
        return Err(CliError::Usage(format!(
            "point {text:?} has {} coordinates, expected {dim}",
            coords.len()
        )));
    }
    Ok(Point::new(&coords)?)
}

fn parse_window(text: &str, dim: usize) -> Result<Window, CliError> {
    let coords = parse_integers(text)?;
    if coords.len() != 2 * dim {
        return Err(CliError::Usage(format!(
            "window {text:?} has {} coordinates, expected {}",
            coords.len(),
            2 * dim
        )));
    }
    Ok(Window::new(Point::new(&coords[..dim])?, Point::new(&coords[dim..])?)?)
}

/// The exhaustive checks need one cell of margin around the set; two
/// keeps the default compatible with every checker.
fn default_window(set: &PointSet) -> Window {
    match set.bounding_window() {
        Some(bbox) => bbox.dilated(2),
        None => Window::around(Point::origin(set.dim()), 2),
    }
}

fn format_table(table: &GoodPairTable) -> Result<String, CliError> {
    use fmt::Write;

    let dim = table.dim();
    let mut out = String::new();
    let mut write =
        |line: &str| writeln!(out, "{line}").expect("string writer cannot fail");
    write(&format!("good-pair table, dimension {dim}"));
    write("rows: alpha (foreground), columns: beta (background)");
    write("");
    let mut header = format!("{:<12}", "");
    for k in 0..dim {
        header.push_str(&format!("{:<12}", format!("beta:{k}")));
    }
    write(header.trim_end());
    for l in 0..dim {
        let mut row = format!("{:<12}", format!("alpha:{l}"));
        for k in 0..dim {
            let verdict = table.verdict(l, k).expect("table is complete");
            row.push_str(&format!("{:<12}", if verdict.is_good() { "good" } else { "." }));
        }
        write(row.trim_end());
    }
    write("");
    let mut aliases = Vec::new();
    for k in 0..dim {
        let count = AdjacencySpec::cubical(k, dim)?.neighbor_count()?;
        aliases.push(format!("cubical:{k} = {count}-neighborhood"));
    }
    write(&format!("rank aliases: {}", aliases.join(", ")));
    write(&format!("good pairs: {} of {}", table.good_pairs().len(), dim * dim));
    Ok(out)
}
