//! The `visroute` command line. [`run`] does all the work and returns the
//! exit code, so the binary is a one-liner and tests can drive it.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::geom::Frame;
use crate::instance::{gen_random, parse, serialize, validate, Instance, VertexId};
use crate::lowerbounds::{default_eps, gen_grid, gen_zigzag, ratio_report, zigzag_report, Params};
use crate::render::{edge_list, render_svg, RenderOptions};
use crate::router::{route, Mode, Outcome, Trace};
use crate::theta6::{build_theta6, oracle_mismatches};
use crate::visibility::build_visibility_graph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "visroute",
    version,
    about = "Local routing on constrained visibility graphs"
)]
pub struct Cli {
    /// Worker threads for parallel runs (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance for structural and general-position violations.
    Validate(InputArgs),
    /// Generate an instance.
    Gen(GenArgs),
    /// Build the visibility graph or the constrained Θ₆-graph as JSON.
    Build(BuildArgs),
    /// Route between two vertices, or between all pairs.
    Route(RouteArgs),
    /// Compare the local edge test with the global Θ₆ construction.
    OracleCheck(InputArgs),
    /// Route on a lower-bound construction and report path-length ratios.
    Lowerbound(LowerboundArgs),
    /// Draw an instance, a graph and optionally a route as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance file.
    #[arg(short = 'i', long = "input")]
    pub input: PathBuf,
    /// Cone frame direction.
    #[arg(long, value_parser = parse_frame, default_value = "0,1")]
    pub frame: Frame,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Random,
    Grid,
    Zigzag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Vis,
    Theta6,
    None,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "random")]
    pub kind: Kind,
    /// Points (random, zigzag) or grid side (grid).
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fraction of a triangulation's edges kept as constraints.
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    #[arg(long, default_value_t = 10)]
    pub rho: i64,
    /// ε as `num/den` (default 1/(64ρ)).
    #[arg(long, value_parser = parse_ratio)]
    pub eps: Option<(u64, u64)>,
    /// Output file (default: stdout).
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "vis")]
    pub graph: GraphKind,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RouteArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Source id; with `-t` omitted too, every ordered pair is routed.
    #[arg(short = 's')]
    pub source: Option<VertexId>,
    #[arg(short = 't')]
    pub dest: Option<VertexId>,
    #[arg(long, value_parser = parse_mode, default_value = "vis")]
    pub mode: Mode,
    /// Step cap (default n²).
    #[arg(long)]
    pub max_steps: Option<usize>,
    /// Write the trace as JSON (single pair only).
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Draw the route as SVG (single pair only).
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LowerboundArgs {
    #[arg(long, value_enum, default_value = "zigzag")]
    pub kind: Kind,
    /// Sizes of the family, comma separated.
    #[arg(short = 'n', value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 1_000_000)]
    pub rho: i64,
    #[arg(long, value_parser = parse_ratio)]
    pub eps: Option<(u64, u64)>,
    #[arg(long, value_parser = parse_mode, default_value = "vis")]
    pub mode: Mode,
    /// Write the reports as a JSON array (default: stdout).
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Draw the largest instance with its route.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "vis")]
    pub graph: GraphKind,
    /// Overlay the route from `-s` to `-t`.
    #[arg(short = 's', requires = "dest")]
    pub source: Option<VertexId>,
    #[arg(short = 't', requires = "source")]
    pub dest: Option<VertexId>,
    #[arg(long, value_parser = parse_mode, default_value = "vis")]
    pub mode: Mode,
    #[arg(long, default_value_t = 800.0)]
    pub width: f64,
    #[arg(long, default_value_t = 800.0)]
    pub height: f64,
    /// Scale the axes independently.
    #[arg(long)]
    pub stretch: bool,
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub svg: PathBuf,
}

fn parse_frame(s: &str) -> Result<Frame, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("frame `{s}` is not `dx,dy`"))?;
    let dx = a.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let dy = b.trim().parse::<i64>().map_err(|e| e.to_string())?;
    Frame::new(dx, dy).map_err(|e| e.to_string())
}

fn parse_ratio(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once('/')
        .ok_or_else(|| format!("`{s}` is not `num/den`"))?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// A failure with its exit code.
#[derive(Debug)]
struct Fail(i32, String);

fn data<E: std::fmt::Display>(e: E) -> Fail {
    Fail(EXIT_DATA, e.to_string())
}

fn read_instance(path: &Path) -> Result<Instance, Fail> {
    let bytes = std::fs::read(path).map_err(|e| data(format!("{}: {e}", path.display())))?;
    parse(&bytes).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, body: &[u8], out: &mut dyn Write) -> Result<(), Fail> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| data(format!("{}: {e}", p.display()))),
        None => out.write_all(body).map_err(data),
    }
}

fn check_id(inst: &Instance, v: VertexId) -> Result<VertexId, Fail> {
    if v < inst.len() {
        Ok(v)
    } else {
        Err(data(format!(
            "vertex {v} out of range (n = {})",
            inst.len()
        )))
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(cli.command, &mut buf));
                let _ = out.write_all(&buf);
                r
            }
            Err(e) => Err(Fail(EXIT_USAGE, e.to_string())),
        },
        None => dispatch(cli.command, out),
    };
    match result {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Fail> {
    match cmd {
        Command::Validate(a) => cmd_validate(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Build(a) => cmd_build(a, out),
        Command::Route(a) => cmd_route(a, out),
        Command::OracleCheck(a) => cmd_oracle_check(a, out),
        Command::Lowerbound(a) => cmd_lowerbound(a, out),
        Command::Render(a) => cmd_render(a, out),
    }
}

fn say(out: &mut dyn Write, line: &str) -> Result<(), Fail> {
    writeln!(out, "{line}").map_err(data)
}

fn cmd_validate(a: InputArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let inst = read_instance(&a.input)?;
    let violations = validate(&inst, &a.frame);
    for v in &violations {
        say(out, &v.to_string())?;
    }
    if violations.is_empty() {
        say(
            out,
            &format!("OK n={} m={}", inst.len(), inst.constraints().len()),
        )?;
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_CHECK)
    }
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let (inst, header) = match a.kind {
        Kind::Random => (
            gen_random(a.n, a.seed, a.density).map_err(data)?,
            String::new(),
        ),
        Kind::Grid => {
            let g = gen_grid(a.n).map_err(data)?;
            (g.inst, format!("# grid n={} s={} t={}\n", a.n, g.s, g.t))
        }
        Kind::Zigzag => {
            let eps = a.eps.unwrap_or_else(|| default_eps(a.rho));
            let z = gen_zigzag(a.n, a.rho, eps).map_err(data)?;
            let header = format!(
                "# zigzag n={} rho={} eps={}/{} unit={} s={} t={}\n",
                a.n, a.rho, eps.0, eps.1, z.unit, z.s, z.t
            );
            (z.inst, header)
        }
    };
    let mut body = header.into_bytes();
    body.extend(serialize(&inst));
    write_out(a.output.as_deref(), &body, out)?;
    Ok(EXIT_OK)
}

fn cmd_build(a: BuildArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let inst = read_instance(&a.input.input)?;
    let g = build_visibility_graph(&inst);
    let json = match a.graph {
        GraphKind::Vis => g.to_json(),
        GraphKind::Theta6 => build_theta6(&inst, &g, a.input.frame)
            .map_err(data)?
            .to_json(),
        GraphKind::None => return Err(Fail(EXIT_USAGE, "build needs --graph vis|theta6".into())),
    };
    write_out(a.output.as_deref(), format!("{json}\n").as_bytes(), out)?;
    Ok(EXIT_OK)
}

fn outcome_word(o: &Outcome) -> &'static str {
    match o {
        Outcome::Reached => "REACHED",
        Outcome::StepCap => "STEP_CAP",
        Outcome::Error(_) => "ERROR",
    }
}

fn cmd_route(a: RouteArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let inst = read_instance(&a.input.input)?;
    let frame = a.input.frame;
    let g = build_visibility_graph(&inst);
    let t6 = match a.mode {
        Mode::Theta6 => Some(build_theta6(&inst, &g, frame).map_err(data)?),
        Mode::Vis => None,
    };
    let run_one = |s: VertexId, t: VertexId| -> Trace {
        match &t6 {
            Some(t6) => route(&inst, t6, s, t, a.mode, frame, a.max_steps),
            None => route(&inst, &g, s, t, a.mode, frame, a.max_steps),
        }
    };
    let mode_name = a.mode.to_string().to_ascii_lowercase();
    let n = inst.len();

    let (s, t) = match (a.source, a.dest) {
        (Some(s), Some(t)) => (check_id(&inst, s)?, check_id(&inst, t)?),
        (None, None) => {
            if a.trace.is_some() || a.svg.is_some() {
                return Err(Fail(EXIT_USAGE, "--trace and --svg need -s and -t".into()));
            }
            let pairs: Vec<(VertexId, VertexId)> = (0..n)
                .flat_map(|s| (0..n).filter(move |&t| t != s).map(move |t| (s, t)))
                .collect();
            let results: Vec<(VertexId, VertexId, Trace)> = pairs
                .par_iter()
                .map(|&(s, t)| (s, t, run_one(s, t)))
                .collect();
            let mut failed = 0;
            let mut max_steps = 0;
            for (s, t, tr) in &results {
                max_steps = max_steps.max(tr.step_count);
                if tr.outcome != Outcome::Reached {
                    failed += 1;
                    let why = tr.error.as_deref().unwrap_or("");
                    say(
                        out,
                        &format!(
                            "{} s={s} t={t} steps={} {why}",
                            outcome_word(&tr.outcome),
                            tr.step_count
                        ),
                    )?;
                }
            }
            say(
                out,
                &format!(
                    "PAIRS {} reached={} failed={failed} max_steps={max_steps} n={n} mode={mode_name}",
                    results.len(),
                    results.len() - failed
                ),
            )?;
            return Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK });
        }
        _ => return Err(Fail(EXIT_USAGE, "give both -s and -t, or neither".into())),
    };

    let tr = run_one(s, t);
    if let Some(p) = &a.trace {
        write_out(Some(p), format!("{}\n", tr.to_json()).as_bytes(), out)?;
    }
    if let Some(p) = &a.svg {
        let edges = match &t6 {
            Some(t6) => edge_list(t6, n),
            None => edge_list(&g, n),
        };
        let svg = render_svg(&inst, &edges, Some(&tr), &RenderOptions::default());
        write_out(Some(p), svg.as_bytes(), out)?;
    }
    let mut line = format!(
        "{} steps={} n={n} mode={mode_name}",
        outcome_word(&tr.outcome),
        tr.step_count
    );
    if let Some(e) = &tr.error {
        line.push_str(&format!(" error={e}"));
    }
    say(out, &line)?;
    Ok(if tr.outcome == Outcome::Reached {
        EXIT_OK
    } else {
        EXIT_CHECK
    })
}

fn cmd_oracle_check(a: InputArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let inst = read_instance(&a.input)?;
    let violations = validate(&inst, &a.frame);
    if let Some(v) = violations.first() {
        return Err(data(format!("instance is not in general position: {v}")));
    }
    let g = build_visibility_graph(&inst);
    let t6 = build_theta6(&inst, &g, a.frame).map_err(data)?;
    let bad = oracle_mismatches(&inst, &g, &t6);
    for (u, v) in &bad {
        say(out, &format!("MISMATCH {u} {v}"))?;
    }
    say(
        out,
        &format!("pairs={} mismatches={}", g.edge_count(), bad.len()),
    )?;
    Ok(if bad.is_empty() { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_lowerbound(a: LowerboundArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let mut reports = Vec::new();
    let mut drawing = None;
    let mut ok = true;
    for &n in &a.n {
        let (inst, rep) = match a.kind {
            Kind::Zigzag => {
                let eps = a.eps.unwrap_or_else(|| default_eps(a.rho));
                let z = gen_zigzag(n, a.rho, eps).map_err(data)?;
                let rep = zigzag_report(&z, a.mode).map_err(data)?;
                (z.inst, rep)
            }
            Kind::Grid => {
                let grid = gen_grid(n).map_err(data)?;
                let params = Params {
                    rho: None,
                    eps: None,
                    scale: grid.unit,
                };
                let mut rep = ratio_report(
                    &grid.inst,
                    grid.s,
                    grid.t,
                    a.mode,
                    Frame::canonical(),
                    "grid",
                    params,
                )
                .map_err(data)?;
                rep.n = n;
                (grid.inst, rep)
            }
            Kind::Random => {
                return Err(Fail(
                    EXIT_USAGE,
                    "lowerbound takes --kind zigzag or grid".into(),
                ))
            }
        };
        ok &= rep.outcome == Outcome::Reached && rep.checks.iter().all(|c| c.holds);
        let mut line = format!(
            "{} n={n} outcome={}",
            rep.construction,
            outcome_word(&rep.outcome)
        );
        if let Some(r) = rep.ratios.restricted_length {
            line.push_str(&format!(" restricted/shortest={r:.6}"));
        }
        if let Some(r) = rep.ratios.routed_length {
            line.push_str(&format!(" routed/shortest={r:.6}"));
        }
        for c in &rep.checks {
            line.push_str(&format!(
                " [{} {:.6} {} {:.6}: {}]",
                c.name,
                c.value,
                c.relation,
                c.bound,
                if c.holds { "holds" } else { "FAILS" }
            ));
        }
        if a.report.is_some() {
            say(out, &line)?;
        }
        drawing = Some((inst, rep.source, rep.dest));
        reports.push(rep);
    }
    let json = serde_json::to_string_pretty(&reports).map_err(data)?;
    write_out(a.report.as_deref(), format!("{json}\n").as_bytes(), out)?;
    if let (Some(p), Some((inst, s, t))) = (&a.svg, drawing) {
        let g = build_visibility_graph(&inst);
        let tr = match a.mode {
            Mode::Vis => route(&inst, &g, s, t, a.mode, Frame::canonical(), None),
            Mode::Theta6 => {
                let t6 = build_theta6(&inst, &g, Frame::canonical()).map_err(data)?;
                route(&inst, &t6, s, t, a.mode, Frame::canonical(), None)
            }
        };
        let opts = RenderOptions {
            keep_aspect: a.kind != Kind::Zigzag,
            ..RenderOptions::default()
        };
        let svg = render_svg(&inst, &edge_list(&g, inst.len()), Some(&tr), &opts);
        write_out(Some(p), svg.as_bytes(), out)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_render(a: RenderArgs, out: &mut dyn Write) -> Result<i32, Fail> {
    let inst = read_instance(&a.input.input)?;
    let frame = a.input.frame;
    let n = inst.len();
    let g = build_visibility_graph(&inst);
    let t6 = match (a.graph, a.mode, a.source) {
        (GraphKind::Theta6, _, _) | (_, Mode::Theta6, Some(_)) => {
            Some(build_theta6(&inst, &g, frame).map_err(data)?)
        }
        _ => None,
    };
    let edges = match a.graph {
        GraphKind::Vis => edge_list(&g, n),
        GraphKind::Theta6 => edge_list(t6.as_ref().expect("built above"), n),
        GraphKind::None => Vec::new(),
    };
    let trace = match (a.source, a.dest) {
        (Some(s), Some(t)) => {
            let (s, t) = (check_id(&inst, s)?, check_id(&inst, t)?);
            Some(match &t6 {
                Some(t6) if a.mode == Mode::Theta6 => route(&inst, t6, s, t, a.mode, frame, None),
                _ => route(&inst, &g, s, t, a.mode, frame, None),
            })
        }
        _ => None,
    };
    let opts = RenderOptions {
        width: a.width,
        height: a.height,
        keep_aspect: !a.stretch,
        labels: a.labels,
    };
    let svg = render_svg(&inst, &edges, trace.as_ref(), &opts);
    write_out(Some(&a.svg), svg.as_bytes(), out)?;
    Ok(EXIT_OK)
}
