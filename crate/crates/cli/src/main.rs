//! `chebknot`: discriminants, roots, diagrams and renders of Chebyshev knots.

mod cache;
mod verify;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chebknot_core::diagram::{compute_diagram_in, enumerate_diagrams_in, is_knot_in};
use chebknot_core::{
    compute_r_exact, compute_r_numeric, render_svg, Error, IntPoly, KnotDiagram, Phi, RootDatabase,
    RootMode, Strand, SvgOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cache::Cache;

#[derive(Parser)]
#[command(name = "chebknot", version, about = "Chebyshev knots C(a, b, c, phi)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// root isolation strategy
    #[arg(long, global = true, value_enum, default_value_t = Mode::Adaptive)]
    mode: Mode,
    /// starting precision in bits for adaptive isolation
    #[arg(long, global = true)]
    precision: Option<u64>,
    /// directory for cached root databases
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// write the result here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Curve {
    a: u64,
    b: u64,
    c: u64,
}

#[derive(Subcommand)]
enum Command {
    /// The discriminant polynomial R_{a,b,c}
    Discriminant {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Real roots of R_{a,b,c} with multiplicities
    Roots {
        #[command(flatten)]
        curve: Curve,
    },
    /// Knot diagram of C(a,b,c,phi)
    Diagram {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// One diagram per interval between consecutive roots
    Enumerate {
        #[command(flatten)]
        curve: Curve,
    },
    /// Whether C(a,b,c,phi) is nonsingular
    Isknot {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Cross-check the discriminant and diagrams against independent oracles
    Verify {
        #[command(flatten)]
        curve: Curve,
    },
    /// SVG drawing of the diagram of C(a,b,c,phi)
    Render {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Adaptive,
    Certified,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Exact,
    Numeric,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io(_) => "Io",
            CliError::Usage(_) => "BadArgs",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::BadArgs(_) | Error::Parse(_)) | CliError::Usage(_) => 2,
            CliError::Core(Error::SingularCurve { .. }) => 3,
            _ => 1,
        }
    }
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    message: String,
}

#[derive(Serialize)]
struct DiscriminantJson<'a> {
    a: u64,
    b: u64,
    c: u64,
    method: Method,
    degree: usize,
    coefficients: &'a IntPoly,
}

#[derive(Serialize)]
struct IsKnotJson<'a> {
    a: u64,
    b: u64,
    c: u64,
    phi: &'a Phi,
    knot: bool,
    interval_index: usize,
}

struct Ctx {
    opts: Opts,
    cache: Cache,
}

impl Ctx {
    fn mode(&self) -> RootMode {
        match self.opts.mode {
            Mode::Adaptive => RootMode::Adaptive,
            Mode::Certified => RootMode::Certified,
        }
    }

    fn roots(&self, k: Curve) -> Result<RootDatabase, CliError> {
        self.cache
            .roots(k.a, k.b, k.c, self.mode(), self.opts.precision)
    }

    fn format(&self, allowed: &[Format]) -> Result<Format, CliError> {
        let f = self.opts.format.unwrap_or(allowed[0]);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(CliError::Usage(
                "format not available for this command".into(),
            ))
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

// rationals on the command line must already be reduced
fn parse_phi(s: &str) -> Result<Phi, CliError> {
    let phi: Phi = s.parse()?;
    let (u, v) = s.split_once('/').unwrap_or((s, "1"));
    if phi.num.to_string() != u.trim().trim_start_matches('+')
        || phi.den.to_string() != v.trim().trim_start_matches('+')
    {
        return Err(CliError::Usage(format!(
            "phi {s} is not in lowest terms with a positive denominator"
        )));
    }
    Ok(phi)
}

fn strand_char(s: Strand) -> char {
    match s {
        Strand::Over => 'O',
        Strand::Under => 'U',
    }
}

fn sign_char(s: i32) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

fn diagram_text(d: &KnotDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "C({}, {}, {}, {})  interval {}",
        d.a, d.b, d.c, d.phi, d.gap_index
    );
    for (k, cr) in d.crossings.iter().enumerate() {
        let _ = writeln!(
            out,
            "{k:>4}  ({}, {})  parity {:+}  qc {:+}  sign {:+}",
            cr.i, cr.j, cr.parity, cr.qc_sign, cr.sign
        );
    }
    let code: Vec<String> = d
        .gauss
        .iter()
        .map(|g| {
            format!(
                "{}{}{}",
                g.crossing,
                strand_char(g.strand),
                sign_char(g.sign)
            )
        })
        .collect();
    let _ = writeln!(out, "gauss {}", code.join(" "));
    out
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(n) = cli.opts.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ctx = Ctx {
        cache: Cache::new(cli.opts.cache_dir.clone()),
        opts: cli.opts,
    };
    let mut ok = true;
    let text = match cli.command {
        Command::Discriminant { curve: k, method } => {
            let fmt = ctx.format(&[Format::Json, Format::Text])?;
            let r = match method {
                Method::Exact => compute_r_exact(k.a, k.b, k.c)?,
                Method::Numeric => compute_r_numeric(k.a, k.b, k.c)?,
            };
            match fmt {
                Format::Text => format!("{}\n", r.to_text()),
                _ => json(&DiscriminantJson {
                    a: k.a,
                    b: k.b,
                    c: k.c,
                    method,
                    degree: r.degree(),
                    coefficients: &r,
                }),
            }
        }
        Command::Roots { curve: k } => {
            let fmt = ctx.format(&[Format::Json, Format::Text])?;
            let db = ctx.roots(k)?;
            match fmt {
                Format::Text => {
                    let mut out = String::new();
                    for cl in &db.clusters {
                        let (lo, hi) = cl.interval.to_f64_pair();
                        let _ = writeln!(out, "[{lo:.12e}, {hi:.12e}]  x{}", cl.multiplicity);
                    }
                    out
                }
                _ => json(&db),
            }
        }
        Command::Diagram { curve: k, phi } => {
            let fmt = ctx.format(&[Format::Json, Format::Text, Format::Svg])?;
            let phi = parse_phi(&phi)?;
            let d = compute_diagram_in(&ctx.roots(k)?, &phi)?;
            match fmt {
                Format::Text => diagram_text(&d),
                Format::Svg => render_svg(&d, &SvgOptions::default()),
                Format::Json => json(&d),
            }
        }
        Command::Enumerate { curve: k } => {
            let fmt = ctx.format(&[Format::Json, Format::Text])?;
            let ds = enumerate_diagrams_in(&ctx.roots(k)?)?;
            match fmt {
                Format::Text => ds.iter().map(diagram_text).collect::<Vec<_>>().join("\n"),
                _ => json(&ds),
            }
        }
        Command::Isknot { curve: k, phi } => {
            let fmt = ctx.format(&[Format::Json, Format::Text])?;
            let phi = parse_phi(&phi)?;
            let check = is_knot_in(&ctx.roots(k)?, &phi)?;
            match fmt {
                Format::Text => format!("{}\n", if check.knot { "knot" } else { "singular" }),
                _ => json(&IsKnotJson {
                    a: k.a,
                    b: k.b,
                    c: k.c,
                    phi: &phi,
                    knot: check.knot,
                    interval_index: check.interval_index,
                }),
            }
        }
        Command::Verify { curve: k } => {
            let fmt = ctx.format(&[Format::Json, Format::Text])?;
            let db = ctx.roots(k)?;
            let report = verify::run(k.a, k.b, k.c, &db)?;
            ok = report.ok;
            match fmt {
                Format::Text => {
                    let mut out = String::new();
                    for c in &report.checks {
                        let status = match c.status {
                            verify::Status::Pass => "PASS",
                            verify::Status::Fail => "FAIL",
                            verify::Status::Skipped => "SKIP",
                        };
                        let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
                    }
                    out
                }
                _ => json(&report),
            }
        }
        Command::Render { curve: k, phi } => {
            ctx.format(&[Format::Svg])?;
            let phi = parse_phi(&phi)?;
            let d = compute_diagram_in(&ctx.roots(k)?, &phi)?;
            render_svg(&d, &SvgOptions::default())
        }
    };
    match &ctx.opts.output {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let body = serde_json::to_string(&ErrorJson {
                error: e.kind(),
                message: e.message(),
            })
            .expect("error serializes");
            eprintln!("{body}");
            ExitCode::from(e.exit_code())
        }
    }
}
