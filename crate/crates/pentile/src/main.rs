use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pentile::atlas::{build_atlas, family_avc, family_pentagon};
use pentile::config::{resolve_tol, FileConfig, TOL_ENV};
use pentile::doc::{AvcDoc, PentagonDoc};
use pentile::export::{self, Format as ExportFormat};
use pentile::{fixture, Error};
use pentile_core::avc::DEFAULT_MAX_DEGREE;
use pentile_core::pentagon::solve_subdivision_family;
use pentile_core::realize::{holonomy, realize, RealizeError};
use pentile_core::tiling::{build_pentagonal_subdivision, build_tiling, census, verify_with_tol, Family, HalfEdgeMap, Report, Variant};
use pentile_core::{Angle, PentagonSpec, Radians, Reduction};
use serde_json::json;

const VARIANT_HELP: &str = "Tilings are named by their vertices of degree four or more, \
written with b, g, d, e for beta, gamma, delta, epsilon: T5bge3_7e5 has five \
vertices of type beta gamma epsilon^3 and seven of type epsilon^5.

Family 1 variants: T6e4 T4bge2_2e4 T4b2g2_2e4 T12e5 T5bge3_7e5 T10bge3_2e5 \
T2b2g2e_6bge3_4e5 T6b2g2e_3bge3_3e5
Family 2 variants: T6e4 T12e5 T5bge2_5de3_7e5 T10bge2_10de3_2e5 \
T10bge2_6de3_4e5 T15bge2_3de3_3e5

Exit status: 0 success, 1 verification failure, 2 usage or input error, \
3 numeric divergence.";

/// Spherical tilings by congruent a³b² pentagons.
#[derive(Debug, Parser)]
#[command(name = "pentile", version, after_long_help = VARIANT_HELP)]
struct Cli {
    /// Optional TOML file with `tol = <number>`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Verification tolerance; overrides PENTILE_TOL and the config file.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::One => Family::One,
            FamilyArg::Two => Family::Two,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReductionArg {
    CEqA,
    CEqB,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportTo {
    Json,
    Obj,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve for a pentagon. Default output is JSON.
    Solve {
        #[arg(long, value_enum, required_unless_present = "subdivision")]
        family: Option<FamilyArg>,
        #[arg(long, required_unless_present = "subdivision")]
        f: Option<u32>,
        /// Pentagon of the pentagonal subdivision of the platonic solid with
        /// this many triangles at a corner.
        #[arg(long, conflicts_with_all = ["family", "f"], requires = "delta")]
        subdivision: Option<u32>,
        #[arg(long, value_enum, default_value = "c-eq-a")]
        reduction: ReductionArg,
        /// The angle δ in units of π.
        #[arg(long)]
        delta: Option<f64>,
    },
    /// List the vertex types the family's pentagon allows.
    Avc {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        f: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Write the fixture of a tiling.
    Build {
        #[command(flatten)]
        source: BuildSource,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a tiling against a pentagon. Exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        input: MapInput,
    },
    /// Place a tiling on the sphere and report closure errors.
    Realize {
        #[command(flatten)]
        input: MapInput,
    },
    /// Place a tiling on the sphere and write it out.
    Export {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, value_enum, default_value = "json")]
        to: ExportTo,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build, verify and realize every tiling of both families.
    Atlas,
}

#[derive(Debug, Args)]
struct BuildSource {
    /// Variant name, or `sub3`, `sub4`, `sub5` for a pentagonal subdivision.
    #[arg(long)]
    variant: String,
    /// Family whose gluing to use; defaults to the first family listing the variant.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
}

#[derive(Debug, Args)]
struct MapInput {
    #[arg(long, conflicts_with = "variant", required_unless_present = "variant")]
    fixture: Option<PathBuf>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Face count of the pentagon; defaults to the tiling's.
    #[arg(long)]
    f: Option<u32>,
}

/// Failures with their exit status.
enum Failure {
    Verify,
    Divergence(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Realize(RealizeError::Divergence(_)) => Failure::Divergence(e.to_string()),
            e => Failure::Other(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn subdivision_degree(name: &str) -> Option<u32> {
    name.strip_prefix("sub").and_then(|n| n.parse().ok())
}

fn build_source(s: &BuildSource) -> Result<(String, HalfEdgeMap), Error> {
    if let Some(n) = subdivision_degree(&s.variant) {
        let map = build_pentagonal_subdivision(n)?;
        return Ok((census(&map).variant_name(), map));
    }
    let v = Variant::from_name(&s.variant)?;
    let family = match s.family {
        Some(f) => f.into(),
        None => v.families().next().expect("every variant has a family"),
    };
    Ok((v.name().to_string(), build_tiling(family, v)?))
}

fn load_input(input: &MapInput) -> Result<(HalfEdgeMap, PentagonSpec), Error> {
    let family: Family = input.family.into();
    let map = match (&input.fixture, &input.variant) {
        (Some(path), _) => fixture::from_str(&read(path)?)?.map,
        (None, Some(name)) => build_tiling(family, Variant::from_name(name)?)?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let f = input.f.unwrap_or_else(|| u32::try_from(map.face_count()).expect("face count fits"));
    Ok((map, family_pentagon(family, f)?))
}

fn tolerance(cli: &Cli) -> Result<f64, Error> {
    let file = cli.config.as_deref().map(FileConfig::load).transpose()?;
    let env = std::env::var(TOL_ENV).ok();
    Ok(resolve_tol(cli.tol, env.as_deref(), file.as_ref())?)
}

fn solve_text(p: &PentagonSpec) -> Result<String, Error> {
    let mut s = String::new();
    if let Some(f) = p.f {
        s += &format!("f        {f}\n");
    }
    for a in Angle::ALL {
        let v = p.value(a)?;
        let form = p.angle(a).linear.map(|l| format!("  {l}")).unwrap_or_default();
        s += &format!("{:<8} {:.6}π{form}\n", a.name(), v / std::f64::consts::PI);
    }
    s += &format!("a        {:.6}π\nb        {:.6}π\n", p.a.in_pi(), p.b.in_pi());
    Ok(s)
}

fn report_json(r: &Report, tol: f64) -> serde_json::Value {
    json!({
        "schema": "pentile/report/v1",
        "tol": tol,
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "census": r.census.t_notation(),
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let json_out = |default: OutFormat| cli.format.unwrap_or(default) == OutFormat::Json;
    match &cli.command {
        Command::Solve { family, f, subdivision, reduction, delta } => {
            let p = match (subdivision, family, f) {
                (Some(n), _, _) => {
                    let red = match reduction {
                        ReductionArg::CEqA => Reduction::CEqA,
                        ReductionArg::CEqB => Reduction::CEqB,
                    };
                    let delta = Radians::from_pi(delta.expect("clap requires delta"));
                    solve_subdivision_family(*n, red, delta).map_err(Error::from)?
                }
                (None, Some(fam), Some(f)) => family_pentagon((*fam).into(), *f).map_err(Error::from)?,
                _ => unreachable!("clap requires family and f"),
            };
            let text = if json_out(OutFormat::Json) { pretty(&PentagonDoc::from_spec(&p))? } else { solve_text(&p)? };
            emit(None, &text)?;
        }
        Command::Avc { family, f, max_degree } => {
            let set = family_avc((*family).into(), *f, *max_degree)?;
            let text = if json_out(OutFormat::Text) { pretty(&AvcDoc::from_set(&set))? } else { format!("{set}\n") };
            emit(None, &text)?;
        }
        Command::Build { source, out } => {
            let (name, map) = build_source(source)?;
            let text = fixture::to_string(&name, &map);
            emit(out.as_deref(), &text)?;
            if out.is_some() && !json_out(OutFormat::Text) {
                println!("{name}: {} faces", map.face_count());
            }
        }
        Command::Verify { input } => {
            let tol = tolerance(cli)?;
            let (map, p) = load_input(input)?;
            let report = verify_with_tol(&map, &p, tol);
            let text = if json_out(OutFormat::Text) { pretty(&report_json(&report, tol))? } else { format!("{report}\n") };
            emit(None, &text)?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::Realize { input } => {
            let (map, p) = load_input(input)?;
            let r = realize(&map, &p).map_err(Error::from)?;
            let hol = holonomy(&map, &p).map_err(Error::from)?.into_iter().fold(0.0, f64::max);
            let area = r.total_area() - 4.0 * std::f64::consts::PI;
            let text = if json_out(OutFormat::Text) {
                pretty(&json!({
                    "schema": "pentile/realize-summary/v1",
                    "faces": r.faces.len(),
                    "vertices": r.vertices.len(),
                    "max_closure_error": r.max_closure_error,
                    "max_holonomy": hol,
                    "area_minus_4pi": area,
                }))?
            } else {
                format!(
                    "faces     {}\nvertices  {}\nclosure   {:.3e}\nholonomy  {hol:.3e}\narea-4pi  {area:.3e}\n",
                    r.faces.len(),
                    r.vertices.len(),
                    r.max_closure_error
                )
            };
            emit(None, &text)?;
        }
        Command::Export { input, to, out } => {
            let (map, p) = load_input(input)?;
            let r = realize(&map, &p).map_err(Error::from)?;
            let format = match to {
                ExportTo::Json => ExportFormat::Json,
                ExportTo::Obj => ExportFormat::Obj,
                ExportTo::Svg => ExportFormat::Svg,
            };
            emit(out.as_deref(), &export::export(&r, format).map_err(Error::from)?)?;
        }
        Command::Atlas => {
            let atlas = build_atlas(tolerance(cli)?)?;
            let text = if json_out(OutFormat::Text) { pretty(&atlas)? } else { atlas.to_string() };
            emit(None, &text)?;
            if !atlas.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Divergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
