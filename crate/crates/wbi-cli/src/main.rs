use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wbi::classes::{equiv_class, EquivClass};
use wbi::descent::{build_d_s_rho, build_d_sigma_s, family_diagram, lower_minmax, upper_minmax, FamilyRequest};
use wbi::diagram::{enumerate_st, st_leq};
use wbi::families::{family_class, family_class_bfs, FamilyModule, FamilySummary};
use wbi::hecke::{hull_or_cover, HullCoverKind, HullCoverRequest, HullCoverResult};
use wbi::verify::{render_table, run_suites, Suite};
use wbi::{Caps, Composition, Diagram, Error, Mode, Perm, Side, Subset, WeakInterval};

#[derive(Parser)]
#[command(name = "wbi", version, about = "Weak Bruhat intervals, their classes, diagrams and 0-Hecke modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// The descent-preserving class of a left interval.
    Class(IntervalArgs),
    /// D_{S;ρ}, D_{σ;S}, or a family diagram.
    Diagram(DiagramArgs),
    /// Min and max of the class of a lower or upper descent interval.
    Minmax(DescentArgs),
    /// Injective hull of a lower descent interval or a family module.
    Hull(HullArgs),
    /// Projective cover of an upper descent interval or a family module.
    Cover(HullArgs),
    /// Closed-form class summary of a family module.
    Family(FamilyArgs),
    /// Run the oracle sweeps.
    Verify(VerifyArgs),
    /// Hasse diagram of a class, or of ST(D^x) for a descent interval.
    Hasse(HasseArgs),
}

#[derive(Args)]
struct IntervalArgs {
    #[arg(long)]
    lo: String,
    #[arg(long)]
    hi: String,
}

#[derive(Args)]
struct DescentArgs {
    /// Descent set S, e.g. "{2,5}".
    #[arg(long = "S")]
    s: Option<String>,
    /// Upper end ρ of [w₀(S), ρ]_L.
    #[arg(long)]
    rho: Option<String>,
    /// Lower end σ of [σ, w₁(S)]_L.
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    descent: DescentArgs,
    /// Family diagram instead: P, V, X, Shat or Q.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Args)]
struct HullArgs {
    #[command(flatten)]
    descent: DescentArgs,
    /// Family module instead: P, V, X, Shat, Q, RV, RX or RShat.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    alpha: String,
    /// Also build the class by BFS and compare.
    #[arg(long)]
    bfs: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a comma-separated list of perm, poset, class, diagram, family, module.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
}

#[derive(Args)]
struct HasseArgs {
    #[arg(long)]
    lo: Option<String>,
    #[arg(long)]
    hi: Option<String>,
    #[command(flatten)]
    descent: DescentArgs,
}

enum Failure {
    Domain(Error),
    Usage(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn perm(s: &str) -> Result<Perm, Failure> {
    s.parse().map_err(Failure::Domain)
}

fn subset(s: &str) -> Result<Subset, Failure> {
    s.parse().map_err(Failure::Domain)
}

fn composition(s: &str) -> Result<Composition, Failure> {
    s.parse().map_err(Failure::Domain)
}

fn interval_json(iv: &WeakInterval) -> Value {
    json!({ "lo": iv.lo.to_string(), "hi": iv.hi.to_string() })
}

fn set_json(s: Subset) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("json value") + "\n"
}

fn no_dot(fmt: Format) -> Result<(), Failure> {
    if fmt == Format::Dot {
        Err(usage("dot output is only available for class and hasse"))
    } else {
        Ok(())
    }
}

enum Descent {
    Lower(Subset, Perm),
    Upper(Perm, Subset),
}

fn descent(a: &DescentArgs) -> Result<Descent, Failure> {
    let s = a.s.as_deref().ok_or_else(|| usage("--S is required"))?;
    let s = subset(s)?;
    match (&a.rho, &a.sigma) {
        (Some(r), None) => Ok(Descent::Lower(s, perm(r)?)),
        (None, Some(g)) => Ok(Descent::Upper(perm(g)?, s)),
        _ => Err(usage("give exactly one of --rho or --sigma")),
    }
}

fn descent_diagram(d: &Descent) -> Result<Diagram, Failure> {
    Ok(match d {
        Descent::Lower(s, rho) => build_d_s_rho(*s, rho)?,
        Descent::Upper(sigma, s) => build_d_sigma_s(sigma, *s)?.diagram().clone(),
    })
}

fn class_text(c: &EquivClass) -> String {
    let mut out = format!("class of {} intervals, ξ = {}\n", c.len(), c.xi);
    for (k, m) in c.members.iter().enumerate() {
        let tag = match (k == c.min_index, k == c.max_index) {
            (true, true) => "  min max",
            (true, false) => "  min",
            (false, true) => "  max",
            _ => "",
        };
        let _ = writeln!(out, "{k:>4}  {m}{tag}");
    }
    for &(a, b, i) in &c.hasse {
        let _ = writeln!(out, "  {a} -s{i}-> {b}");
    }
    out
}

fn cmd_class(a: &IntervalArgs, fmt: Format, caps: &Caps, mode: Mode) -> Out {
    let iv = WeakInterval::new(perm(&a.lo)?, perm(&a.hi)?, Side::Left)?;
    let c = equiv_class(&iv, caps, mode)?;
    Ok(match fmt {
        Format::Json => compact(&serde_json::to_value(c.to_json()).expect("class json")),
        Format::Dot => c.to_dot(),
        Format::Text => class_text(&c),
    })
}

fn diagram_text(d: &Diagram) -> String {
    let mut out = String::new();
    for y in (1..=d.height()).rev() {
        let row: String = (1..=d.width()).map(|x| if d.contains((x, y)) { '#' } else { '.' }).collect();
        let _ = writeln!(out, "{row}");
    }
    out
}

fn family_request(kind: &str, alpha: &Composition) -> Result<FamilyRequest, Failure> {
    Ok(match FamilyModule::parse(kind)? {
        FamilyModule::P => FamilyRequest::P(alpha.clone()),
        FamilyModule::V => FamilyRequest::V(alpha.clone()),
        FamilyModule::X => FamilyRequest::X(alpha.clone()),
        FamilyModule::ShatCanonical => FamilyRequest::ShatCanonical(alpha.clone()),
        FamilyModule::Q => FamilyRequest::Q(alpha.clone()),
        other => return Err(usage(format!("no family diagram for {}", other.name()))),
    })
}

fn cmd_diagram(a: &DiagramArgs, fmt: Format) -> Out {
    no_dot(fmt)?;
    let d = match (&a.family, &a.alpha) {
        (Some(k), Some(al)) => family_diagram(&family_request(k, &composition(al)?)?)?,
        (None, None) => descent_diagram(&descent(&a.descent)?)?,
        _ => return Err(usage("--family and --alpha go together")),
    };
    Ok(match fmt {
        Format::Json => compact(&serde_json::to_value(d.to_json()).expect("diagram json")),
        _ => diagram_text(&d),
    })
}

fn cmd_minmax(a: &DescentArgs, fmt: Format) -> Out {
    no_dot(fmt)?;
    let (min, max) = match descent(a)? {
        Descent::Lower(s, rho) => lower_minmax(s, &rho)?,
        Descent::Upper(sigma, s) => upper_minmax(&sigma, s)?,
    };
    Ok(match fmt {
        Format::Json => compact(&json!({ "min": interval_json(&min), "max": interval_json(&max) })),
        _ => format!("min {min}\nmax {max}\n"),
    })
}

fn hull_json(r: &HullCoverResult) -> Value {
    json!({
        "kind": match r.kind { HullCoverKind::InjectiveHull => "injective_hull", HullCoverKind::ProjectiveCover => "projective_cover" },
        "interval": interval_json(&r.interval),
        "A": set_json(r.a),
        "B": set_json(r.b),
        "projective_indecomposable": r.is_projective_indecomposable,
    })
}

fn cmd_hull(a: &HullArgs, kind: HullCoverKind, fmt: Format) -> Out {
    no_dot(fmt)?;
    let req = match (&a.family, &a.alpha) {
        (Some(k), Some(al)) => HullCoverRequest::Family {
            module: FamilyModule::parse(k)?,
            alpha: composition(al)?,
            kind,
        },
        (None, None) => match (descent(&a.descent)?, kind) {
            (Descent::Lower(s, rho), HullCoverKind::InjectiveHull) => HullCoverRequest::Lower { s, rho },
            (Descent::Upper(sigma, s), HullCoverKind::ProjectiveCover) => HullCoverRequest::Upper { sigma, s },
            (Descent::Upper(..), _) => return Err(usage("hull takes --S with --rho")),
            (Descent::Lower(..), _) => return Err(usage("cover takes --S with --sigma")),
        },
        _ => return Err(usage("--family and --alpha go together")),
    };
    let r = hull_or_cover(&req)?;
    Ok(match fmt {
        Format::Json => compact(&hull_json(&r)),
        _ => format!(
            "{} {}\nA = {}\nB = {}\nprojective indecomposable: {}\n",
            if kind == HullCoverKind::InjectiveHull { "hull" } else { "cover" },
            r.interval,
            r.a,
            r.b,
            r.is_projective_indecomposable
        ),
    })
}

fn summary_json(s: &FamilySummary) -> Value {
    json!({
        "kind": s.kind.name(),
        "alpha": s.alpha.to_string(),
        "interval": interval_json(&s.interval),
        "min": interval_json(&s.min),
        "max": interval_json(&s.max),
        "size": s.size,
        "diagram": serde_json::to_value(s.diagram.to_json()).expect("diagram json"),
    })
}

fn cmd_family(a: &FamilyArgs, fmt: Format, caps: &Caps, mode: Mode) -> Out {
    no_dot(fmt)?;
    let kind = FamilyModule::parse(&a.kind)?;
    let alpha = composition(&a.alpha)?;
    let s = family_class(kind, &alpha, caps, mode)?;
    let bfs = if a.bfs {
        let c = family_class_bfs(kind, &alpha, caps, mode)?;
        Some(c.min() == &s.min && c.max() == &s.max && c.len() == s.size)
    } else {
        None
    };
    Ok(match fmt {
        Format::Json => {
            let mut v = summary_json(&s);
            if let Some(ok) = bfs {
                v["bfs_agrees"] = json!(ok);
            }
            compact(&v)
        }
        _ => {
            let mut out = format!(
                "{} {}\ninterval {}\nmin {}\nmax {}\nsize {}\n",
                s.kind.name(),
                s.alpha,
                s.interval,
                s.min,
                s.max,
                s.size
            );
            if let Some(ok) = bfs {
                let _ = writeln!(out, "bfs agrees: {ok}");
            }
            out
        }
    })
}

fn cmd_verify(a: &VerifyArgs, fmt: Format, caps: &Caps, mode: Mode) -> Out {
    no_dot(fmt)?;
    let suites = Suite::parse_list(&a.suite)?;
    let reports = run_suites(&suites, a.nmax, caps, mode)?;
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let text = match fmt {
        Format::Json => compact(&json!(reports
            .iter()
            .map(|r| json!({
                "suite": r.suite.name(),
                "nmax": r.nmax,
                "checks": r.checks,
                "failed": r.failed,
                "failures": r.failures,
            }))
            .collect::<Vec<_>>())),
        _ => render_table(&reports),
    };
    if failed > 0 {
        print!("{text}");
        return Err(Failure::Checks(format!("{failed} checks failed")));
    }
    Ok(text)
}

fn st_hasse(d: &Diagram, caps: &Caps, mode: Mode) -> Result<String, Failure> {
    let tabs = enumerate_st(&d.x_reflect(), caps, mode)?;
    let m = tabs.len();
    let mut leq = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            leq[a][b] = st_leq(&tabs[a], &tabs[b])?;
        }
    }
    let mut out = String::from("digraph st {\n  rankdir=BT;\n");
    for (k, t) in tabs.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{t:?}\"];");
    }
    for a in 0..m {
        for b in 0..m {
            let cover = a != b && leq[a][b] && !(0..m).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
            if cover {
                let _ = writeln!(out, "  n{a} -> n{b};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn cmd_hasse(a: &HasseArgs, fmt: Format, caps: &Caps, mode: Mode) -> Out {
    if fmt == Format::Json {
        return Err(usage("hasse emits dot or text"));
    }
    match (&a.lo, &a.hi) {
        (Some(lo), Some(hi)) => {
            let iv = WeakInterval::new(perm(lo)?, perm(hi)?, Side::Left)?;
            Ok(equiv_class(&iv, caps, mode)?.to_dot())
        }
        (None, None) => st_hasse(&descent_diagram(&descent(&a.descent)?)?, caps, mode),
        _ => Err(usage("--lo and --hi go together")),
    }
}

fn run(cli: &Cli) -> Out {
    let caps = Caps::from_env();
    let mode = if cli.sequential { Mode::Sequential } else { Mode::Parallel };
    let fmt = cli.format;
    match &cli.command {
        Command::Class(a) => cmd_class(a, fmt, &caps, mode),
        Command::Diagram(a) => cmd_diagram(a, fmt),
        Command::Minmax(a) => cmd_minmax(a, fmt),
        Command::Hull(a) => cmd_hull(a, HullCoverKind::InjectiveHull, fmt),
        Command::Cover(a) => cmd_hull(a, HullCoverKind::ProjectiveCover, fmt),
        Command::Family(a) => cmd_family(a, fmt, &caps, mode),
        Command::Verify(a) => cmd_verify(a, fmt, &caps, mode),
        Command::Hasse(a) => cmd_hasse(a, fmt, &caps, mode),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(if e.is_resource() { 2 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({ "error": "usage", "message": msg }));
            ExitCode::from(3)
        }
        Err(Failure::Checks(msg)) => {
            eprintln!("{}", json!({ "error": "verification_failed", "message": msg }));
            ExitCode::from(1)
        }
    }
}
