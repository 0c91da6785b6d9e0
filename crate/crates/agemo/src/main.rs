//! Command-line frontend: algebra ingestion, one-shot computations,
//! component exploration and the bundled verification suite.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use agemo::catalog::{
    self, lambda, lambda_dprime, lambda_prime, lambda_tilde, naming_candidates, CompiledQuiver,
};
use agemo::config::Config;
use agemo::explore::{render_report, walk_component, Namer, ReportFormat};
use agemo::formats::{parse_algebra_table, parse_spec, SpecCall};
use agemo::homological::{
    certify_gp, cosyzygy, ext_profile, g_status, is_reflexive, is_torsionless, k_module, syzygy,
    transpose, tr_profile, HorizonVerdict,
};
use agemo::module::{dual, Module, Side};
use agemo::quiver::parse_quiver;
use agemo::scalar::{Field, Scalar};
use agemo::verify;

#[derive(Parser)]
#[command(
    name = "agemo",
    version,
    about = "Exact syzygy, cosyzygy and Gorenstein-projectivity computations \
             for finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Value for the parameter q of builtin algebras.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,

    /// Ground field: Q or F<p>.
    #[arg(long, global = true, default_value = "Q")]
    field: Field,

    /// Depth for Ext profiles and semi-GP checks.
    #[arg(long, global = true, default_value_t = 20)]
    horizon: usize,

    /// Step budget per direction when walking a component.
    #[arg(long, global = true, default_value_t = 12)]
    walk_horizon: usize,

    /// Seed for the randomized isomorphism tests.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format: json, dot or text.
    #[arg(long, global = true)]
    format: Option<ReportFormat>,

    /// Shorthand for --format dot.
    #[arg(long, global = true)]
    dot: bool,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra source file.
    Validate { path: PathBuf },
    /// Run one operation on a module over an algebra.
    ///
    /// Operations: dims, ext-profile, tr-profile, g-status, gp-certify, k.
    Compute {
        /// Builtin spec (e.g. "lambda:q=2") or a source file path.
        algebra: String,
        /// Module spec (e.g. "M:alpha=3", "Lm:alpha=1", "simple").
        module: String,
        /// Operation name.
        op: String,
    },
    /// Walk the cosyzygy-quiver component of a module.
    Explore {
        algebra: String,
        module: String,
    },
    /// Check every documented claim about the bundled worked example.
    VerifyPaper,
}

/// Usage and input errors exit with 2, failed checks with 1.
enum CliError {
    Usage(String),
    Check(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = Config::default();
    cfg.horizon = cli.horizon;
    cfg.walk_horizon = cli.walk_horizon;
    cfg.field = cli.field;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(q) = &cli.q {
        cfg.bindings.push(("q".into(), q.clone()));
    }
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let format = match (cli.format, cli.dot) {
        (Some(f), false) => Some(f),
        (None, true) => Some(ReportFormat::Dot),
        (None, false) => None,
        (Some(_), true) => {
            eprintln!("error: --format and --dot are mutually exclusive");
            return ExitCode::from(2);
        }
    };

    let result = match &cli.command {
        Command::Validate { path } => cmd_validate(path),
        Command::Compute { algebra, module, op } => {
            cmd_compute(&cfg, algebra, module, op, format.unwrap_or(ReportFormat::Text))
        }
        Command::Explore { algebra, module } => {
            cmd_explore(&cfg, algebra, module, format.unwrap_or(ReportFormat::Json))
        }
        Command::VerifyPaper => cmd_verify(&cfg, format.unwrap_or(ReportFormat::Text)),
    };

    match result {
        Ok(report) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{report}");
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

// ---------------------------------------------------------------------
// Algebra and module resolution.

enum LoadedAlgebra {
    /// A quiver-presented algebra; keeps the monomial basis around so
    /// the builtin module families can be constructed over it.
    Quiver(CompiledQuiver),
    Table(Arc<agemo::algebra::Algebra>),
}

impl LoadedAlgebra {
    fn algebra(&self) -> &Arc<agemo::algebra::Algebra> {
        match self {
            LoadedAlgebra::Quiver(cq) => &cq.algebra,
            LoadedAlgebra::Table(a) => a,
        }
    }

    fn quiver(&self) -> Option<&CompiledQuiver> {
        match self {
            LoadedAlgebra::Quiver(cq) => Some(cq),
            LoadedAlgebra::Table(_) => None,
        }
    }
}

fn looks_like_path(s: &str) -> bool {
    s.contains('/') || s.contains('.') && Path::new(s).exists() || s.ends_with(".quiver")
}

fn load_algebra_file(path: &Path) -> Result<LoadedAlgebra, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("quiver") {
        parse_quiver(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        Ok(LoadedAlgebra::Quiver(CompiledQuiver::compile(&text)))
    } else if first.starts_with("algebra") {
        let a = parse_algebra_table(&text)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        Ok(LoadedAlgebra::Table(a))
    } else {
        Err(CliError::usage(format!(
            "{}: unrecognized source (expected a `quiver` or `algebra` header)",
            path.display()
        )))
    }
}

fn spec_err(e: agemo::formats::SpecError) -> CliError {
    CliError::usage(e.to_string())
}

/// The q binding for a builtin algebra: explicit spec argument, then the
/// --q flag, then the default 2.
fn builtin_q(call: &SpecCall, cfg: &Config) -> Result<Scalar, CliError> {
    let raw = match call.get("q") {
        Some(v) => v.to_string(),
        None => cfg.binding("q").unwrap_or("2").to_string(),
    };
    let q = cfg
        .scalar(&raw)
        .map_err(|e| CliError::usage(format!("algebra parameter q: {e}")))?;
    if q.is_zero() {
        return Err(CliError::usage("algebra parameter q must be nonzero"));
    }
    Ok(q)
}

fn resolve_algebra(spec: &str, cfg: &Config) -> Result<LoadedAlgebra, CliError> {
    if looks_like_path(spec) {
        return load_algebra_file(Path::new(spec));
    }
    let call = parse_spec(spec).map_err(spec_err)?;
    match call.name.as_str() {
        "lambda" | "lambda_prime" | "lambda_dprime" | "lambda_tilde" => {
            call.allow_only(&["q"]).map_err(spec_err)?;
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown builtin algebra {other:?} (expected lambda, lambda_prime, lambda_dprime or lambda_tilde, or a file path)"
            )))
        }
    }
    match call.name.as_str() {
        "lambda" => Ok(LoadedAlgebra::Quiver(lambda(&builtin_q(&call, cfg)?))),
        "lambda_prime" => Ok(LoadedAlgebra::Quiver(lambda_prime(&builtin_q(&call, cfg)?))),
        "lambda_dprime" => Ok(LoadedAlgebra::Quiver(lambda_dprime())),
        "lambda_tilde" => Ok(LoadedAlgebra::Quiver(lambda_tilde(&builtin_q(&call, cfg)?))),
        _ => unreachable!(),
    }
}

fn parse_side(call: &SpecCall) -> Result<Side, CliError> {
    match call.get("side") {
        None | Some("left") => Ok(Side::Left),
        Some("right") => Ok(Side::Right),
        Some(other) => Err(CliError::usage(format!(
            "unknown side {other:?} (expected left or right)"
        ))),
    }
}

/// Resolves a module spec over the loaded algebra. The parametrized
/// families need the quiver presentation; `simple` and `regular` work
/// over any ingested algebra.
fn resolve_module(
    loaded: &LoadedAlgebra,
    spec: &str,
    cfg: &Config,
) -> Result<Module, CliError> {
    let call = parse_spec(spec).map_err(spec_err)?;
    let need_quiver = |call: &SpecCall| -> Result<&CompiledQuiver, CliError> {
        loaded.quiver().ok_or_else(|| {
            CliError::usage(format!(
                "module family {:?} needs a quiver-presented algebra",
                call.name
            ))
        })
    };
    let alpha = |call: &SpecCall| -> Result<Scalar, CliError> {
        call.rational("alpha", cfg.field).map_err(spec_err)
    };
    match call.name.as_str() {
        "M" => {
            call.allow_only(&["alpha"]).map_err(spec_err)?;
            Ok(catalog::module_m(need_quiver(&call)?, &alpha(&call)?))
        }
        "Mprime" => {
            call.allow_only(&["alpha"]).map_err(spec_err)?;
            let cq = need_quiver(&call)?;
            if call.get("alpha") == Some("inf") {
                return Ok(catalog::module_m_prime(cq, None));
            }
            Ok(catalog::module_m_prime(cq, Some(&alpha(&call)?)))
        }
        "Mtilde" => {
            call.allow_only(&["vertex", "alpha"]).map_err(spec_err)?;
            let vertex: usize = call
                .require("vertex")
                .map_err(spec_err)?
                .parse()
                .map_err(|_| CliError::usage("vertex must be 1 or 2"))?;
            Ok(catalog::module_m_tilde(need_quiver(&call)?, vertex, &alpha(&call)?))
        }
        "Lm" => {
            call.allow_only(&["alpha"]).map_err(spec_err)?;
            Ok(catalog::left_ideal_m(need_quiver(&call)?, &alpha(&call)?))
        }
        "mL" => {
            call.allow_only(&["alpha"]).map_err(spec_err)?;
            Ok(catalog::right_ideal_m(need_quiver(&call)?, &alpha(&call)?))
        }
        "U" => {
            call.allow_only(&["alpha", "side"]).map_err(spec_err)?;
            Ok(catalog::u_module(need_quiver(&call)?, &alpha(&call)?, parse_side(&call)?))
        }
        "simple" | "S" => {
            call.allow_only(&["side"]).map_err(spec_err)?;
            Ok(catalog::simple_local(loaded.algebra(), parse_side(&call)?))
        }
        "regular" => {
            call.allow_only(&["side"]).map_err(spec_err)?;
            Ok(Module::regular(Arc::clone(loaded.algebra()), parse_side(&call)?))
        }
        other => Err(CliError::usage(format!(
            "unknown module spec {other:?} (expected M, Mprime, Mtilde, Lm, mL, U, simple or regular)"
        ))),
    }
}

// ---------------------------------------------------------------------
// Subcommands.

fn cmd_validate(path: &Path) -> Result<String, CliError> {
    let loaded = load_algebra_file(path)?;
    let alg = loaded.algebra();
    let problems = alg.validate();
    let mut out = String::new();
    out.push_str(&format!(
        "{}: dim {} over {}, {} idempotent(s)\n",
        alg.name,
        alg.dim(),
        alg.field(),
        alg.idempotents().len()
    ));
    if problems.is_empty() {
        out.push_str("ok\n");
        Ok(out)
    } else {
        for p in &problems {
            out.push_str(&format!("invalid: {p}\n"));
        }
        Err(CliError::Check(out.trim_end().to_string()))
    }
}

fn verdict_text(v: &HorizonVerdict) -> String {
    match v {
        HorizonVerdict::HoldsExact => "✓(exact)".into(),
        HorizonVerdict::HoldsUpToHorizon(t) => format!("✓({t})"),
        HorizonVerdict::Fails { witness } => format!("✗(i={witness})"),
    }
}

fn render_value(value: serde_json::Value, text: String, format: ReportFormat) -> Result<String, CliError> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Text => Ok(text),
        ReportFormat::Dot => Err(CliError::usage("dot output only applies to explore")),
    }
}

fn cmd_compute(
    cfg: &Config,
    algebra: &str,
    module: &str,
    op: &str,
    format: ReportFormat,
) -> Result<String, CliError> {
    let loaded = resolve_algebra(algebra, cfg)?;
    let m = resolve_module(&loaded, module, cfg)?;
    let t = cfg.horizon;
    match op {
        "dims" => {
            let d = dual(&m);
            let value = serde_json::json!({
                "module": m.name,
                "dim": m.dim(),
                "dual_dim": d.dim(),
                "double_dual_dim": dual(&d).dim(),
                "syzygy_dim": syzygy(&m).dim(),
                "cosyzygy_dim": cosyzygy(&m).dim(),
                "transpose_dim": transpose(&m).dim(),
            });
            let text = format!(
                "{}: dim {}, dual {}, double dual {}, syzygy {}, cosyzygy {}, transpose {}\n",
                m.name,
                m.dim(),
                value["dual_dim"],
                value["double_dual_dim"],
                value["syzygy_dim"],
                value["cosyzygy_dim"],
                value["transpose_dim"],
            );
            render_value(value, text, format)
        }
        "ext-profile" => {
            let p = ext_profile(&m, t);
            let text = format!("{}: Ext^1..{} dims {:?}\n", p.module, p.horizon, p.dims);
            render_value(serde_json::to_value(&p).expect("serializes"), text, format)
        }
        "tr-profile" => {
            let p = tr_profile(&m, t);
            let fmt = |v: &[bool]| -> String {
                v.iter().map(|&b| if b { '+' } else { '-' }).collect()
            };
            let text = format!(
                "{}: (TR_i) i=1..{}: {}  i=-1..-{}: {}\n",
                p.module,
                p.horizon,
                fmt(&p.pos),
                p.horizon,
                fmt(&p.neg)
            );
            render_value(serde_json::to_value(&p).expect("serializes"), text, format)
        }
        "g-status" => {
            let g = g_status(&m, t, cfg.seed);
            let text = format!(
                "{}: G1 {}, G2 {}, G3 {}\n",
                g.module,
                verdict_text(&g.g1),
                verdict_text(&g.g2),
                if g.g3 { "✓" } else { "✗" }
            );
            render_value(serde_json::to_value(&g).expect("serializes"), text, format)
        }
        "gp-certify" => {
            let v = certify_gp(&m, t, cfg.seed);
            let text = format!("{}: {:?}\n", m.name, v);
            render_value(serde_json::to_value(&v).expect("serializes"), text, format)
        }
        "k" => {
            let (k, _) = k_module(&m);
            let value = serde_json::json!({
                "module": m.name,
                "k_dim": k.dim(),
                "torsionless": is_torsionless(&m),
                "reflexive": is_reflexive(&m),
            });
            let text = format!(
                "{}: dim K = {}, torsionless {}, reflexive {}\n",
                m.name,
                k.dim(),
                value["torsionless"],
                value["reflexive"]
            );
            render_value(value, text, format)
        }
        other => Err(CliError::usage(format!(
            "unknown operation {other:?} (expected dims, ext-profile, tr-profile, g-status, gp-certify or k)"
        ))),
    }
}

fn cmd_explore(
    cfg: &Config,
    algebra: &str,
    module: &str,
    format: ReportFormat,
) -> Result<String, CliError> {
    let loaded = resolve_algebra(algebra, cfg)?;
    let m = resolve_module(&loaded, module, cfg)?;
    // Name walked vertices against the parametrized families when the
    // algebra carries the parameter q and the start has a known α.
    let namer = match (loaded.quiver(), parse_spec(module).ok()) {
        (Some(cq), Some(call)) if cq.presentation.params.contains_key("q") => {
            let alpha = call
                .rational("alpha", cfg.field)
                .unwrap_or_else(|_| cfg.field.one());
            Namer::new(naming_candidates(cq, &alpha, 8), cfg.seed)
        }
        _ => Namer::empty(cfg.seed),
    };
    let (report, _) = walk_component(&m, cfg.walk_horizon, cfg.seed, &namer);
    Ok(render_report(&report, format))
}

fn cmd_verify(cfg: &Config, format: ReportFormat) -> Result<String, CliError> {
    if let Some(q) = cfg.binding("q") {
        if q != "2" {
            return Err(CliError::usage(
                "the bundled claim list is pinned to q = 2 (claim 8 switches to q = -1 internally)",
            ));
        }
    }
    let outcomes = verify::run_all(cfg);
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            let value: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "index": o.index,
                        "title": o.title,
                        "passed": o.passed(),
                        "detail": match &o.result {
                            Ok(d) => d.clone(),
                            Err(d) => d.clone(),
                        },
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&value).expect("report serializes");
            out.push('\n');
        }
        _ => {
            for o in &outcomes {
                out.push_str(&o.render());
                out.push('\n');
            }
        }
    }
    if outcomes.iter().all(|o| o.passed()) {
        Ok(out)
    } else {
        Err(CliError::Check(out.trim_end().to_string()))
    }
}
