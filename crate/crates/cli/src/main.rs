use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use surfreal_cli::commands::{self, parse_axis, parse_k, EXIT_OK, EXIT_VERIFY};
use surfreal_cli::report::build_report;
use surfreal_cli::{CliError, Format, Output, SceneSpec};
use surfreal_core::{Construction, GraphName, SurfaceName};

#[derive(Parser)]
#[command(name = "surfreal", version, about = "Labeled surface triangulations and their exact geometric realizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all triangulations of a surface on a labeled graph.
    Enumerate {
        #[command(flatten)]
        target: Target,
        /// Exit with 3 unless exactly this many are found.
        #[arg(long)]
        expect: Option<usize>,
        /// Write the catalog as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a catalog into complementary pairs.
    Pairs {
        #[command(flatten)]
        target: Target,
    },
    /// Certify embeddings of cataloged triangulations on a point set.
    Verify {
        #[command(flatten)]
        scene: Scene,
        #[command(flatten)]
        pick: Pick,
        /// List every violating face pair.
        #[arg(long)]
        details: bool,
        /// Write a JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one realized triangulation as OFF, OBJ or exact JSON.
    Export {
        #[command(flatten)]
        scene: Scene,
        #[arg(long)]
        id: usize,
        /// off, obj or json
        #[arg(long, default_value = "off")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Squared distances, radii and face shape census.
    Metrics {
        #[command(flatten)]
        scene: Scene,
        /// Restrict to these vertex labels, e.g. ABCD.
        #[arg(long)]
        subset: Option<String>,
        /// Also report the census of this triangulation.
        #[arg(long)]
        id: Option<usize>,
    },
    /// Run every check and print one tagged line per result.
    Report {
        /// text or json
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    surface: String,
}

#[derive(Args)]
struct Scene {
    /// suspension, schlegel16cell, rp2-simplex, moebius, std-hyperoctahedron,
    /// std-simplex5 or std-octahedron
    #[arg(long)]
    construction: String,
    /// Homothety parameter, as p/q or a decimal (default 14/5 or 4).
    #[arg(long)]
    k: Option<String>,
    /// Delete this coordinate (x, y, z, w or an index) after building.
    #[arg(long)]
    project_drop_axis: Option<String>,
    /// Central projection onto the facet with these labels.
    #[arg(long)]
    schlegel_facet: Option<String>,
    /// Keep only the subcomplex on these labels.
    #[arg(long)]
    restrict: Option<String>,
}

#[derive(Args)]
struct Pick {
    #[arg(long, conflicts_with = "all")]
    id: Option<usize>,
    /// All triangulations (the default).
    #[arg(long)]
    all: bool,
}

fn target(t: &Target) -> Result<(GraphName, SurfaceName), CliError> {
    Ok((t.graph.parse()?, t.surface.parse()?))
}

fn scene(s: &Scene) -> Result<SceneSpec, CliError> {
    let construction: Construction = s.construction.parse()?;
    Ok(SceneSpec {
        construction,
        k: s.k.as_deref().map(parse_k).transpose()?,
        drop_axis: s.project_drop_axis.as_deref().map(parse_axis).transpose()?,
        schlegel_facet: s.schlegel_facet.clone(),
        restrict: s.restrict.clone(),
    })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Enumerate { target: t, expect, out } => {
            let (g, s) = target(t)?;
            commands::enumerate(g, s, *expect, out.as_ref())
        }
        Command::Pairs { target: t } => {
            let (g, s) = target(t)?;
            commands::pairs(g, s)
        }
        Command::Verify { scene: s, pick, details, out } => commands::verify(&scene(s)?, pick.id, *details, out.as_ref()),
        Command::Export { scene: s, id, format, out } => commands::export(&scene(s)?, *id, format.parse()?, out.as_ref()),
        Command::Metrics { scene: s, subset, id } => commands::metrics(&scene(s)?, subset.as_deref(), *id),
        Command::Report { format, out } => {
            let rep = build_report()?;
            let text = match format.parse::<Format>()? {
                Format::Json => serde_json::to_string_pretty(&rep)? + "\n",
                _ => rep.to_text(),
            };
            let code = if rep.all_ok() { EXIT_OK } else { EXIT_VERIFY };
            let mut o = Output {
                stdout: text.clone(),
                code,
                files: Vec::new(),
            };
            if let Some(p) = out {
                o.files.push((p.clone(), text));
            }
            Ok(o)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            for (path, content) in &out.files {
                if let Err(e) = std::fs::write(path, content) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
