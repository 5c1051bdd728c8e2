//! The `coinflip` command-line front end.
//!
//! Each subcommand is also callable as a function returning its report text,
//! so the binary stays a one-liner around [`run`].

pub mod render;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::lattice::{CoinSet, FlipKind};
use crate::oracle::solve;
use crate::shapes::{load_custom, ShapeSpec};

pub use table::{Family, TableFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coinflip",
    version,
    about = "Minimum coin moves to flip coin shapes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum moves, overlap and protrusions for one shape.
    Solve {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum)]
        flip: Option<FlipArg>,
        /// Also list the coin moves of the canonical placement.
        #[arg(long)]
        moves: bool,
    },
    /// Per-row data table for the triangle or rhombus family.
    Table {
        #[arg(value_enum)]
        family: Family,
        max_rows: u64,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// Write increments as `current - previous = diff`.
        #[arg(long)]
        verbose_diff: bool,
    },
    /// Draw the superimposition for one optimal placement.
    Render {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum)]
        flip: Option<FlipArg>,
        /// Index into the canonical list of optimal placements.
        #[arg(long, default_value_t = 0)]
        placement: usize,
        #[arg(long, value_enum, default_value_t)]
        format: RenderFormat,
    },
    /// Check closed forms against the oracle for rows 1..=MAX_ROWS.
    Verify { max_rows: u64 },
    /// Protrusion breakdown for every optimal placement.
    Analyze {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum)]
        flip: Option<FlipArg>,
    },
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(value_enum, required_unless_present = "shape_file")]
    kind: Option<ShapeKind>,
    #[arg(required_unless_present = "shape_file")]
    size: Option<u64>,
    /// Load coin coordinates from a shape file instead.
    #[arg(long, conflicts_with_all = ["kind", "size"])]
    shape_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShapeKind {
    Triangle,
    Rhombus,
    Hexagon,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlipArg {
    Rot180,
    MirrorH,
    MirrorV,
}

impl From<FlipArg> for FlipKind {
    fn from(f: FlipArg) -> Self {
        match f {
            FlipArg::Rot180 => FlipKind::Rotate180,
            FlipArg::MirrorH => FlipKind::MirrorHorizontal,
            FlipArg::MirrorV => FlipKind::MirrorVertical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum RenderFormat {
    #[default]
    Ascii,
    Svg,
}

/// Failure of a command, mapped to an exit code by [`run`].
#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    VerifyFailed(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Usage(e.to_string())
    }
}

impl ShapeArgs {
    fn resolve(&self) -> std::result::Result<(ShapeSpec, CoinSet), CommandError> {
        if let Some(path) = &self.shape_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CommandError::Usage(format!("{}: {e}", path.display())))?;
            let coins = load_custom(&text)
                .map_err(|e| CommandError::Usage(format!("{}: {e}", path.display())))?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            return Ok((ShapeSpec::Custom(name), coins));
        }
        // clap guarantees both are present without --shape-file
        let (Some(kind), Some(size)) = (self.kind, self.size) else {
            return Err(CommandError::Usage("missing shape".into()));
        };
        let spec = match kind {
            ShapeKind::Triangle => ShapeSpec::Triangle(size),
            ShapeKind::Rhombus => ShapeSpec::Rhombus(size),
            ShapeKind::Hexagon => ShapeSpec::Hexagon(size),
        };
        let coins = spec.generate()?.expect("built-in shapes have generators");
        Ok((spec, coins))
    }
}

fn pick_flip(spec: &ShapeSpec, flip: Option<FlipArg>) -> FlipKind {
    flip.map(FlipKind::from)
        .unwrap_or_else(|| spec.default_flip())
}

fn join_sizes(sizes: &[usize]) -> String {
    if sizes.is_empty() {
        return "none".into();
    }
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn cmd_solve(
    spec: &ShapeSpec,
    coins: &CoinSet,
    flip: FlipKind,
    show_moves: bool,
) -> Result<String> {
    let result = solve(coins, flip)?;
    let canonical = result.optimal_placements[0];
    let report = result.protrusions(coins, &canonical, spec.protrusion_arity())?;

    let mut out = String::new();
    let _ = writeln!(out, "shape: {spec}");
    let _ = writeln!(out, "flip: {flip}");
    let _ = writeln!(out, "total coins: {}", result.total_coins);
    let _ = writeln!(out, "max overlap: {}", result.max_overlap);
    let _ = writeln!(out, "min moves: {}", result.min_moves);
    let _ = writeln!(
        out,
        "optimal placements: {}",
        result.optimal_placements.len()
    );
    let _ = writeln!(out, "canonical placement: {canonical}");
    let _ = writeln!(out, "protrusions: {}", join_sizes(&report.size_multiset));
    if show_moves {
        let plan = result.move_plan(coins, &canonical)?;
        let _ = writeln!(out, "moves:");
        for m in &plan.moves {
            let _ = writeln!(out, "  {} -> {}", m.from, m.to);
        }
    }
    Ok(out)
}

pub fn cmd_table(
    family: Family,
    max_rows: u64,
    format: TableFormat,
    verbose_diff: bool,
) -> Result<String> {
    let rows = table::build_table(family, max_rows)?;
    Ok(match format {
        TableFormat::Csv => table::render_csv(family, &rows, verbose_diff),
        TableFormat::Markdown => table::render_markdown(family, &rows, verbose_diff),
    })
}

pub fn cmd_render(
    coins: &CoinSet,
    flip: FlipKind,
    placement_index: usize,
    format: RenderFormat,
) -> Result<String> {
    let result = solve(coins, flip)?;
    let placement =
        result
            .optimal_placements
            .get(placement_index)
            .ok_or(Error::PlacementIndexOutOfRange {
                index: placement_index,
                count: result.optimal_placements.len(),
            })?;
    let target = placement.target(coins)?;
    Ok(match format {
        RenderFormat::Ascii => {
            let mut text = format!(
                "placement {placement_index} of {}: {placement}\n\n",
                result.optimal_placements.len()
            );
            text.push_str(&render::render_ascii(coins, &target).to_text());
            text
        }
        RenderFormat::Svg => render::render_svg(coins, &target),
    })
}

/// Report text plus whether every check held.
pub fn cmd_verify(max_rows: u64) -> Result<(String, bool)> {
    if max_rows < 1 {
        return Err(Error::TooSmall {
            what: "max rows",
            value: max_rows,
            min: 1,
        });
    }
    let report = verify::verify(max_rows)?;
    let mut out = String::new();
    for row in &report.checked {
        out.push_str(&row.summary());
        out.push('\n');
    }
    match &report.failure {
        Some(failure) => out.push_str(&failure.to_string()),
        None => {
            let _ = writeln!(out, "all checks passed for rows 1..={max_rows}");
        }
    }
    Ok((out, report.passed()))
}

pub fn cmd_analyze(spec: &ShapeSpec, coins: &CoinSet, flip: FlipKind) -> Result<String> {
    let result = solve(coins, flip)?;
    let mut out = String::new();
    let _ = writeln!(out, "shape: {spec}");
    let _ = writeln!(out, "flip: {flip}");
    let _ = writeln!(
        out,
        "total coins {}, max overlap {}, min moves {}, optimal placements {}",
        result.total_coins,
        result.max_overlap,
        result.min_moves,
        result.optimal_placements.len()
    );
    let mut multisets = std::collections::BTreeSet::new();
    let mut all_triangular = true;
    for (i, placement) in result.optimal_placements.iter().enumerate() {
        let report = result.protrusions(coins, placement, spec.protrusion_arity())?;
        all_triangular &= report.all_triangular();
        multisets.insert(report.size_multiset.clone());
        let _ = writeln!(out, "\nplacement {i}: {placement}");
        let _ = writeln!(out, "  move sizes: {}", join_sizes(&report.size_multiset));
        let _ = writeln!(
            out,
            "  hole sizes: {}",
            join_sizes(&report.target_size_multiset())
        );
        for (label, comps) in [
            ("move", &report.source_components),
            ("hole", &report.target_components),
        ] {
            for c in comps {
                let shape = match c.triangle {
                    Some(t) => format!("{}-row {} triangle", t.rows, t.orientation),
                    None => "not a triangle".to_string(),
                };
                let first = c.coins.first().expect("components are nonempty");
                let noun = if c.size == 1 { "coin" } else { "coins" };
                let _ = writeln!(out, "  {label} {} {noun}, {shape}, from {first}", c.size);
            }
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "distinct size multisets: {}",
        multisets
            .iter()
            .map(|m| format!("[{}]", join_sizes(m)))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(
        out,
        "all protrusions triangular: {}",
        if all_triangular { "yes" } else { "no" }
    );
    Ok(out)
}

fn dispatch(command: Command) -> std::result::Result<String, CommandError> {
    match command {
        Command::Solve { shape, flip, moves } => {
            let (spec, coins) = shape.resolve()?;
            Ok(cmd_solve(&spec, &coins, pick_flip(&spec, flip), moves)?)
        }
        Command::Table {
            family,
            max_rows,
            format,
            verbose_diff,
        } => Ok(cmd_table(family, max_rows, format, verbose_diff)?),
        Command::Render {
            shape,
            flip,
            placement,
            format,
        } => {
            let (spec, coins) = shape.resolve()?;
            Ok(cmd_render(
                &coins,
                pick_flip(&spec, flip),
                placement,
                format,
            )?)
        }
        Command::Verify { max_rows } => {
            let (text, passed) = cmd_verify(max_rows)?;
            if passed {
                Ok(text)
            } else {
                Err(CommandError::VerifyFailed(text))
            }
        }
        Command::Analyze { shape, flip } => {
            let (spec, coins) = shape.resolve()?;
            Ok(cmd_analyze(&spec, &coins, pick_flip(&spec, flip))?)
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code: 0 on success, 1 when verification fails, 2 on usage
/// or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(CommandError::VerifyFailed(text)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: verification failed");
            EXIT_VERIFY_FAILED
        }
        Err(CommandError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Runs a command line and captures `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
