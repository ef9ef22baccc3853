//! `selfsim` — evaluate hypergeometric functions, sample self-similar
//! solution branches of the degenerate model equations, and verify them by
//! finite-difference and reduced-equation residuals.

mod config;
mod output;

use clap::Parser;
use config::{dump_config, load_config, GridAxis, RunConfig};
use output::{fmt, report_csv, report_summary, write_csv};
use selfsim_core::families::{
    branch_summary, eval_branch, list_branches, FamilyId, SolutionBranch,
};
use selfsim_core::hyperfun::{
    clausen_3f2_integral, eval_kdf, eval_pfq, eval_psi2, kdf_partial, pfq_derivative,
    psi2_partial, EvalResult, KdfSpec, PfqSpec, Psi2Spec,
};
use selfsim_core::verify::{
    adjudicate_prefactors, default_grid, ode_residual, pde_residual_sweep, FdScheme,
};
use selfsim_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "selfsim",
    about = "Hypergeometric evaluators and self-similar solution branches of degenerate model PDEs",
    allow_negative_numbers = true,
    after_help = "Commands: eval, branch-eval, sample, verify, adjudicate, list.\n\
                  Exit codes: 0 success, 1 configuration error, 2 domain error, 3 convergence failure."
)]
struct Cli {
    /// eval | branch-eval | sample | verify | adjudicate | list
    command: Option<String>,

    /// JSON config file; flags given on the command line override it
    #[arg(long)]
    config: Option<String>,
    /// Write the merged configuration to this path before running
    #[arg(long)]
    dump_config: Option<String>,

    /// Function name for `eval`: 0f0, 1f1, 1f2, 2f1, 0f2, 3f2, 1f3, pfq, psi2, kdf, 3f2int
    #[arg(long = "fn")]
    function: Option<String>,
    /// Derivative order for `eval` (parameter-shift rule); 0 evaluates the function
    #[arg(long)]
    deriv: Option<u32>,
    /// Mixed-partial y-order for psi2/kdf derivatives
    #[arg(long)]
    deriv_y: Option<u32>,

    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    branch: Option<u32>,
    /// Multiplicative branch constant
    #[arg(long)]
    constant: Option<f64>,

    // family parameters
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long)]
    e_amp: Option<f64>,

    // scalar function arguments / point coordinates
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    a1: Option<f64>,
    #[arg(long)]
    a2: Option<f64>,
    #[arg(long)]
    a3: Option<f64>,
    #[arg(long)]
    c1: Option<f64>,
    #[arg(long)]
    c2: Option<f64>,
    #[arg(long)]
    c3: Option<f64>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long)]
    t: Option<f64>,

    // list-valued arguments, comma separated
    #[arg(long, value_delimiter = ',')]
    num: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    den: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    upper_joint: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    upper_x: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    upper_y: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    lower_joint: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    lower_x: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    lower_y: Option<Vec<f64>>,

    /// Grid axes as min:max:count[:log|lin]
    #[arg(long)]
    grid_x: Option<String>,
    #[arg(long)]
    grid_y: Option<String>,
    #[arg(long)]
    grid_t: Option<String>,

    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long)]
    consecutive_small: Option<usize>,
    #[arg(long)]
    quad_nodes: Option<usize>,
    /// Finite-difference step (defaults per family)
    #[arg(long)]
    fd_step: Option<f64>,

    /// Output path; `verify` writes <out>.csv and <out>.json
    #[arg(long)]
    out: Option<String>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

/// Distinguishes configuration problems (exit 1) from evaluation errors
/// (exit 2 for domain, 3 for convergence).
enum CmdError {
    Config(String),
    Run(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Run(e)
    }
}

type CmdResult<T> = std::result::Result<T, CmdError>;

/// Marks an error raised while interpreting the configuration.
fn cfg_phase<T>(r: Result<T>) -> CmdResult<T> {
    r.map_err(|e| CmdError::Config(e.to_string()))
}

fn run(cli: Cli) -> i32 {
    let config = match merge(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match dispatch(&config) {
        Ok(code) => code,
        Err(CmdError::Config(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CmdError::Run(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// defaults < config file < command-line flags
fn merge(cli: Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => load_config(path)?,
        None => RunConfig::new(""),
    };
    if let Some(cmd) = &cli.command {
        cfg.command = cmd.clone();
    }
    if cfg.command.is_empty() {
        return Err(Error::domain(
            "no command given (and none found in the config file)",
        ));
    }

    if let Some(v) = cli.function {
        cfg.function = Some(v);
    }
    if let Some(v) = cli.family {
        cfg.family = Some(v);
    }
    if let Some(v) = cli.branch {
        cfg.branch = Some(v);
    }
    if let Some(v) = cli.constant {
        cfg.constant = v;
    }
    if let Some(v) = cli.deriv {
        cfg.derivative_order = v;
    }
    if let Some(v) = cli.deriv_y {
        cfg.args.insert("deriv_y".into(), v as f64);
    }

    for (key, value) in [
        ("alpha", cli.alpha),
        ("beta", cli.beta),
        ("m", cli.m),
        ("n", cli.n),
        ("k", cli.k),
        ("nu", cli.nu),
        ("e_amp", cli.e_amp),
    ] {
        if let Some(v) = value {
            cfg.params.insert(key.into(), v);
        }
    }

    for (key, value) in [
        ("a", cli.a),
        ("b", cli.b),
        ("c", cli.c),
        ("a1", cli.a1),
        ("a2", cli.a2),
        ("a3", cli.a3),
        ("c1", cli.c1),
        ("c2", cli.c2),
        ("c3", cli.c3),
        ("x", cli.x),
        ("y", cli.y),
        ("t", cli.t),
    ] {
        if let Some(v) = value {
            cfg.args.insert(key.into(), v);
        }
    }

    for (key, value) in [
        ("num", cli.num),
        ("den", cli.den),
        ("upper_joint", cli.upper_joint),
        ("upper_x", cli.upper_x),
        ("upper_y", cli.upper_y),
        ("lower_joint", cli.lower_joint),
        ("lower_x", cli.lower_x),
        ("lower_y", cli.lower_y),
    ] {
        if let Some(v) = value {
            cfg.list_args.insert(key.into(), v);
        }
    }

    for (key, value) in [("x", cli.grid_x), ("y", cli.grid_y), ("t", cli.grid_t)] {
        if let Some(spec) = value {
            cfg.grid.insert(key.into(), GridAxis::parse(&spec)?);
        }
    }

    if let Some(v) = cli.rel_tol {
        cfg.eval.rel_tol = v;
    }
    if let Some(v) = cli.max_terms {
        cfg.eval.max_terms = v;
    }
    if let Some(v) = cli.consecutive_small {
        cfg.eval.consecutive_small = v;
    }
    if let Some(v) = cli.quad_nodes {
        cfg.quad_nodes = v;
    }
    if let Some(v) = cli.fd_step {
        cfg.fd_step = Some(v);
    }
    if let Some(v) = cli.out {
        cfg.out = Some(v);
    }
    if let Some(v) = cli.format {
        if v != "csv" && v != "json" {
            return Err(Error::domain(format!("unknown format '{v}'")));
        }
        cfg.format = v;
    }

    if let Some(path) = &cli.dump_config {
        dump_config(&cfg, path)?;
    }
    Ok(cfg)
}

fn dispatch(cfg: &RunConfig) -> Result<i32> {
    match cfg.command.as_str() {
        "eval" => cmd_eval(cfg),
        "branch-eval" => cmd_branch_eval(cfg),
        "sample" => cmd_sample(cfg),
        "verify" => cmd_verify(cfg),
        "adjudicate" => cmd_adjudicate(cfg),
        "list" => cmd_list(cfg),
        other => {
            eprintln!("error: unknown command '{other}'");
            Ok(1)
        }
    }
}

fn print_eval_result(cfg: &RunConfig, r: &EvalResult) -> i32 {
    if cfg.format == "json" {
        let json = serde_json::json!({
            "value": r.value,
            "terms_used": r.terms_used,
            "truncation_estimate": r.truncation_estimate,
            "converged": r.converged,
        });
        println!("{json}");
    } else {
        println!("value = {}", fmt(r.value));
        println!("terms_used = {}", r.terms_used);
        println!("truncation_estimate = {}", fmt(r.truncation_estimate));
        println!("converged = {}", r.converged);
    }
    if r.converged {
        0
    } else {
        3
    }
}

fn cmd_eval(cfg: &RunConfig) -> Result<i32> {
    let opts = cfg.eval_options()?;
    let name = cfg
        .function
        .as_deref()
        .ok_or_else(|| Error::domain("eval needs --fn"))?;
    let dx = cfg.derivative_order;
    let dy = cfg.args.get("deriv_y").map(|v| *v as u32).unwrap_or(0);
    let result = match name {
        "0f0" => pfq_result(&PfqSpec::f00(), cfg, dx, &opts)?,
        "1f1" => pfq_result(&PfqSpec::f11(cfg.arg("a")?, cfg.arg("c")?)?, cfg, dx, &opts)?,
        "2f1" => pfq_result(
            &PfqSpec::f21(cfg.arg("a")?, cfg.arg("b")?, cfg.arg("c")?)?,
            cfg,
            dx,
            &opts,
        )?,
        "1f2" => pfq_result(
            &PfqSpec::f12(cfg.arg("a")?, [cfg.arg("c1")?, cfg.arg("c2")?])?,
            cfg,
            dx,
            &opts,
        )?,
        "0f2" => pfq_result(
            &PfqSpec::f02([cfg.arg("c1")?, cfg.arg("c2")?])?,
            cfg,
            dx,
            &opts,
        )?,
        "3f2" => pfq_result(
            &PfqSpec::f32(
                [cfg.arg("a1")?, cfg.arg("a2")?, cfg.arg("a3")?],
                [cfg.arg("c1")?, cfg.arg("c2")?],
            )?,
            cfg,
            dx,
            &opts,
        )?,
        "1f3" => pfq_result(
            &PfqSpec::f13(
                cfg.arg("a")?,
                [cfg.arg("c1")?, cfg.arg("c2")?, cfg.arg("c3")?],
            )?,
            cfg,
            dx,
            &opts,
        )?,
        "pfq" => pfq_result(
            &PfqSpec::new(cfg.list_arg("num")?.to_vec(), cfg.list_arg("den")?.to_vec())?,
            cfg,
            dx,
            &opts,
        )?,
        "psi2" => {
            let spec = Psi2Spec::new(cfg.arg("a")?, cfg.arg("c1")?, cfg.arg("c2")?)?;
            let (x, y) = (cfg.arg("x")?, cfg.arg("y")?);
            if dx == 0 && dy == 0 {
                eval_psi2(&spec, x, y, &opts)?
            } else {
                psi2_partial(&spec, x, y, dx, dy, &opts)?
            }
        }
        "kdf" => {
            let spec = KdfSpec::new(
                cfg.list_args.get("upper_joint").cloned().unwrap_or_default(),
                cfg.list_args.get("upper_x").cloned().unwrap_or_default(),
                cfg.list_args.get("upper_y").cloned().unwrap_or_default(),
                cfg.list_args.get("lower_joint").cloned().unwrap_or_default(),
                cfg.list_args.get("lower_x").cloned().unwrap_or_default(),
                cfg.list_args.get("lower_y").cloned().unwrap_or_default(),
            )?;
            let (x, y) = (cfg.arg("x")?, cfg.arg("y")?);
            if dx == 0 && dy == 0 {
                eval_kdf(&spec, x, y, &opts)?
            } else {
                kdf_partial(&spec, x, y, dx, dy, &opts)?
            }
        }
        "3f2int" => {
            let v = clausen_3f2_integral(
                cfg.arg("a1")?,
                cfg.arg("a2")?,
                cfg.arg("a3")?,
                cfg.arg("c1")?,
                cfg.arg("c2")?,
                cfg.arg("x")?,
                cfg.quad_nodes,
            )?;
            EvalResult {
                value: v,
                terms_used: cfg.quad_nodes * cfg.quad_nodes,
                truncation_estimate: 0.0,
                converged: true,
            }
        }
        other => return Err(Error::domain(format!("unknown function '{other}'"))),
    };
    Ok(print_eval_result(cfg, &result))
}

fn pfq_result(
    spec: &PfqSpec,
    cfg: &RunConfig,
    deriv: u32,
    opts: &selfsim_core::hyperfun::EvalOptions,
) -> Result<EvalResult> {
    let x = cfg.arg("x")?;
    if deriv == 0 {
        eval_pfq(spec, x, opts)
    } else {
        pfq_derivative(spec, x, deriv, opts)
    }
}

fn cmd_branch_eval(cfg: &RunConfig) -> Result<i32> {
    let family = cfg.family_id()?;
    let index = cfg
        .branch
        .ok_or_else(|| Error::domain("branch-eval needs --branch"))?;
    let branch = SolutionBranch::with_constant(family, index, cfg.constant)?;
    let params = cfg.family_params()?;
    let point = cfg.point(family)?;
    let value = eval_branch(&branch, &params, &point, &cfg.eval_options()?)?;
    if cfg.format == "json" {
        println!("{}", serde_json::json!({ "u": value }));
    } else {
        println!("{}", fmt(value));
    }
    Ok(0)
}

fn cmd_sample(cfg: &RunConfig) -> Result<i32> {
    let family = cfg.family_id()?;
    let index = cfg
        .branch
        .ok_or_else(|| Error::domain("sample needs --branch"))?;
    let branch = SolutionBranch::with_constant(family, index, cfg.constant)?;
    let params = cfg.family_params()?;
    let opts = cfg.eval_options()?;
    let grid = cfg.family_grid(family)?;

    let mut rows = Vec::with_capacity(grid.len());
    for p in &grid {
        let u = eval_branch(&branch, &params, p, &opts)?;
        let mut row: Vec<f64> = family
            .axes()
            .iter()
            .filter_map(|&axis| p.get(axis))
            .collect();
        row.push(u);
        rows.push(row);
    }
    let mut header: Vec<&str> = family.axes().iter().map(|a| a.label()).collect();
    header.push("u");

    if cfg.format == "json" {
        let records: Vec<serde_json::Value> = rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, &v) in header.iter().zip(row.iter()) {
                    obj.insert(name.to_string(), serde_json::json!(v));
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let text = serde_json::to_string_pretty(&records)
            .map_err(|e| Error::domain(format!("cannot serialize samples: {e}")))?;
        match &cfg.out {
            Some(path) => std::fs::write(path, text + "\n")
                .map_err(|e| Error::domain(format!("cannot write {path}: {e}")))?,
            None => println!("{text}"),
        }
    } else {
        match &cfg.out {
            Some(path) => {
                let file = std::fs::File::create(path)
                    .map_err(|e| Error::domain(format!("cannot create {path}: {e}")))?;
                write_csv(file, &header, rows.into_iter())?;
            }
            None => write_csv(std::io::stdout().lock(), &header, rows.into_iter())?,
        }
    }
    Ok(0)
}

fn cmd_verify(cfg: &RunConfig) -> Result<i32> {
    let family = cfg.family_id()?;
    let index = cfg
        .branch
        .ok_or_else(|| Error::domain("verify needs --branch"))?;
    let branch = SolutionBranch::with_constant(family, index, cfg.constant)?;
    let params = cfg.family_params()?;
    let opts = cfg.eval_options()?;
    let mut scheme = FdScheme::default_for(family);
    if let Some(h) = cfg.fd_step {
        scheme = FdScheme::new(family.operator_order(), h)?;
    }
    let grid = if cfg.grid.is_empty() {
        default_grid(family, &params, &scheme)
    } else {
        cfg.family_grid(family)?
    };

    let report = pde_residual_sweep(&branch, &params, &grid, &scheme, &opts);
    // Same refinement rule as the acceptance gate: every point above the
    // noise floor must shrink at least 3x under h -> h/2.
    let verdict = if report.points.iter().all(|p| p.note.is_none()) && report.refines_at(3.0) {
        "CONSISTENT"
    } else {
        "INCONSISTENT"
    };
    let mut summary = report_summary(&report, verdict);

    // Reduced-equation residuals (families with a reduced form).
    if family != FamilyId::P0 {
        let sigma = selfsim_core::verify::default_sigma_points(family);
        let ode = ode_residual(&branch, &params, &sigma, &opts)?;
        summary["ode_max_rel_residual"] = serde_json::json!(ode.max_rel_residual);
    }

    match &cfg.out {
        Some(base) => {
            let csv_path = format!("{base}.csv");
            let json_path = format!("{base}.json");
            let file = std::fs::File::create(&csv_path)
                .map_err(|e| Error::domain(format!("cannot create {csv_path}: {e}")))?;
            report_csv(file, &report)?;
            let text = serde_json::to_string_pretty(&summary)
                .map_err(|e| Error::domain(format!("cannot serialize summary: {e}")))?;
            std::fs::write(&json_path, text + "\n")
                .map_err(|e| Error::domain(format!("cannot write {json_path}: {e}")))?;
            println!("{summary}");
        }
        None => {
            report_csv(std::io::stdout().lock(), &report)?;
            println!("{summary}");
        }
    }
    // verify reports its verdict in the summary; large residuals are not a
    // process failure
    Ok(0)
}

fn cmd_adjudicate(cfg: &RunConfig) -> Result<i32> {
    let family = cfg.family_id()?;
    let params = cfg.family_params()?;
    let opts = cfg.eval_options()?;
    let mut scheme = FdScheme::default_for(family);
    if let Some(h) = cfg.fd_step {
        scheme = FdScheme::new(family.operator_order(), h)?;
    }
    let grid = default_grid(family, &params, &scheme);
    let results = adjudicate_prefactors(family, &params, &grid, &scheme, &opts)?;

    let mut rows = Vec::new();
    for a in &results {
        println!(
            "{} branch {} ({}): P*omega {} | printed {}{}",
            a.family,
            a.branch_index,
            a.equation_tag,
            a.derived.flag.label(),
            a.printed.flag.label(),
            if a.proportional {
                " [proportional: printed form is a constant multiple of P*omega]"
            } else {
                ""
            }
        );
        rows.push(serde_json::json!({
            "family": a.family.label(),
            "branch": a.branch_index,
            "equation": a.equation_tag,
            "derived_flag": a.derived.flag.label(),
            "derived_max_rel_residual": a.derived.max_rel_residual,
            "derived_ratios": [a.derived.ratios.0, a.derived.ratios.1],
            "printed_flag": a.printed.flag.label(),
            "printed_max_rel_residual": a.printed.max_rel_residual,
            "printed_ratios": [a.printed.ratios.0, a.printed.ratios.1],
            "proportional": a.proportional,
        }));
    }
    let doc = serde_json::Value::Array(rows);
    if let Some(base) = &cfg.out {
        let path = format!("{base}.json");
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::domain(format!("cannot serialize adjudication: {e}")))?;
        std::fs::write(&path, text + "\n")
            .map_err(|e| Error::domain(format!("cannot write {path}: {e}")))?;
    } else if cfg.format == "json" {
        println!("{doc}");
    }
    Ok(0)
}

fn cmd_list(cfg: &RunConfig) -> Result<i32> {
    let families: Vec<FamilyId> = match &cfg.family {
        Some(name) => vec![FamilyId::parse(name)?],
        None => FamilyId::ALL.to_vec(),
    };
    let params = cfg.family_params()?;
    for family in families {
        for info in list_branches(family) {
            println!(
                "{} {} {} {} {}",
                family.label(),
                info.index,
                info.equation_tag,
                info.series_name,
                branch_summary(&info, &params)
            );
        }
    }
    Ok(0)
}
