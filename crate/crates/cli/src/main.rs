//! Command-line front end: single constants, pointwise coefficients,
//! threshold-root tables, closed-form-vs-oracle sweeps, and verification
//! runs. Data goes to stdout (one JSON object per line, or CSV for tables
//! and sweeps); messages go to stderr. Exit codes: 0 success, 2 invalid
//! parameters, 3 no closed form under `--method closed`, 4 numeric failure.

// validators use `!(x > 0.0)` so that NaN fails the check too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use clap::{Args, Parser, Subcommand, ValueEnum};
use poisson_sharp::{
    alpha_root, classify_regime, near_extremal_boundary, root_table_pairs, sharp_constant,
    validate, verify_bound, xn_exponent, BoundaryFunction, Error, EvaluationPoint, FormulaVariant,
    KernelParams, Method, NormIndex, QuadratureSpec, TabulatedData,
};
use rayon::prelude::*;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "poisson-sharp",
    version,
    about = "Sharp constants for gradient bounds of generalized Poisson integrals on the half-space"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Numeric,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Corrected,
    #[value(name = "as-printed")]
    AsPrinted,
}

#[derive(Args)]
struct KernelArgs {
    /// Space dimension n >= 3
    #[arg(long)]
    n: u32,
    /// Kernel exponent alpha >= 0
    #[arg(long)]
    alpha: f64,
    /// Kernel exponent beta > 0
    #[arg(long)]
    beta: f64,
    /// Kernel multiplier k != 0
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Norm index: a decimal >= 1, or `inf`
    #[arg(long)]
    p: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    variant: VariantArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    #[arg(long)]
    p: String,
    /// Evaluation height x_n > 0
    #[arg(long)]
    xn: f64,
    /// Boundary data family
    #[arg(long)]
    family: FamilyArg,
    /// Truncation radius (default 200 x_n)
    #[arg(long)]
    radius: Option<f64>,
    /// Constant value for --family constant
    #[arg(long, default_value_t = 1.0)]
    value: f64,
    /// Bump center, comma-separated (default: origin)
    #[arg(long)]
    center: Option<String>,
    /// Bump width (default: x_n / 10)
    #[arg(long)]
    width: Option<f64>,
    /// Bump height
    #[arg(long, default_value_t = 1.0)]
    height: f64,
    /// Direction parameter gamma = |z'|/z_n for the extremal families
    #[arg(long, default_value_t = 0.0)]
    zgamma: f64,
    /// CSV sample file for --family tabulated (header y1,...,y_{n-1},value)
    #[arg(long)]
    data: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Constant,
    Bump,
    KernelSign,
    KernelPower,
    Tabulated,
}

impl FamilyArg {
    fn as_str(&self) -> &'static str {
        match self {
            FamilyArg::Constant => "constant",
            FamilyArg::Bump => "bump",
            FamilyArg::KernelSign => "kernel-sign",
            FamilyArg::KernelPower => "kernel-power",
            FamilyArg::Tabulated => "tabulated",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Sharp constant for one parameter set (JSON)
    Constant(KernelArgs),
    /// Pointwise coefficient at height x_n (JSON)
    Coefficient {
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        xn: f64,
    },
    /// The p = infinity threshold root alpha_n(beta) (JSON)
    AlphaRoot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        beta: f64,
    },
    /// Reference tables as CSV; `remark2` is the published 24-entry
    /// threshold-root table (n = 3..6)
    Table { which: String },
    /// Closed-form vs oracle sweep over a CSV grid file with header
    /// n,alpha,beta,p (k = 1 per row); emits CSV
    Sweep {
        #[arg(long)]
        grid: PathBuf,
    },
    /// Verify the gradient bound for concrete boundary data (JSON)
    Verify(VerifyArgs),
}

fn p_json(p: &NormIndex) -> serde_json::Value {
    match p {
        NormIndex::Finite(v) => json!(v),
        NormIndex::Infinity => json!("inf"),
    }
}

fn constant_json(a: &KernelArgs) -> Result<serde_json::Value, Error> {
    let p: NormIndex = a.p.parse()?;
    let params = KernelParams::new(a.n, a.alpha, a.beta, a.k)?;
    validate(&params, &p)?;
    let method = match a.method {
        MethodArg::Auto => Method::Auto,
        MethodArg::Closed => Method::Closed,
        MethodArg::Numeric => Method::Numeric,
    };
    let variant = match a.variant {
        VariantArg::Corrected => FormulaVariant::Corrected,
        VariantArg::AsPrinted => FormulaVariant::AsPrinted,
    };
    let spec = QuadratureSpec::for_norm(&p);
    let c = sharp_constant(&params, &p, method, variant, &spec)?;
    let exponent = xn_exponent(&params, &p)?;
    Ok(json!({
        "n": a.n,
        "alpha": a.alpha,
        "beta": a.beta,
        "k": a.k,
        "p": p_json(&p),
        "constant": c.value,
        "method": c.method.as_str(),
        "branch": c.branch.as_str(),
        "variant": c.variant.as_str(),
        "xn_exponent": exponent,
        "est_error": c.est_error,
    }))
}

fn run_constant(a: &KernelArgs) -> Result<(), Error> {
    println!("{}", constant_json(a)?);
    Ok(())
}

fn run_coefficient(a: &KernelArgs, xn: f64) -> Result<(), Error> {
    if !(xn > 0.0) {
        return Err(Error::InvalidParams {
            field: "xn",
            reason: format!("evaluation height must be > 0, got {xn}"),
        });
    }
    let mut v = constant_json(a)?;
    let constant = v["constant"].as_f64().unwrap();
    let exponent = v["xn_exponent"].as_f64().unwrap();
    let obj = v.as_object_mut().unwrap();
    obj.insert("xn".into(), json!(xn));
    obj.insert("coefficient".into(), json!(constant / xn.powf(exponent)));
    println!("{v}");
    Ok(())
}

fn run_alpha_root(n: u32, beta: f64) -> Result<(), Error> {
    let r = alpha_root(n, beta)?;
    println!(
        "{}",
        json!({ "n": n, "beta": beta, "root": r.value, "residual": r.residual })
    );
    Ok(())
}

fn run_table(which: &str) -> Result<(), Error> {
    match which {
        "remark2" => {
            println!("n,beta,root");
            for (n, beta) in root_table_pairs() {
                let r = alpha_root(n, beta)?;
                println!("{n},{beta},{}", r.value);
            }
            Ok(())
        }
        other => Err(Error::InvalidParams {
            field: "table",
            reason: format!("unknown table `{other}` (available: remark2)"),
        }),
    }
}

struct GridRow {
    n: u32,
    alpha: f64,
    beta: f64,
    p: NormIndex,
}

fn parse_grid(path: &PathBuf) -> Result<Vec<GridRow>, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidParams {
        field: "grid",
        reason: format!("cannot read {}: {e}", path.display()),
    })?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().unwrap_or("").trim();
    if header != "n,alpha,beta,p" {
        return Err(Error::InvalidParams {
            field: "grid",
            reason: format!("expected header `n,alpha,beta,p`, got `{header}`"),
        });
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 4 {
            return Err(Error::InvalidParams {
                field: "grid",
                reason: format!("row {}: expected 4 fields, got {}", i + 2, fields.len()),
            });
        }
        let bad = |what: &str| Error::InvalidParams {
            field: "grid",
            reason: format!("row {}: cannot parse {what}", i + 2),
        };
        rows.push(GridRow {
            n: fields[0].trim().parse().map_err(|_| bad("n"))?,
            alpha: fields[1].trim().parse().map_err(|_| bad("alpha"))?,
            beta: fields[2].trim().parse().map_err(|_| bad("beta"))?,
            p: fields[3].trim().parse()?,
        });
    }
    Ok(rows)
}

fn sweep_row(row: &GridRow) -> Result<String, Error> {
    let params = KernelParams::new(row.n, row.alpha, row.beta, 1.0)?;
    let regime = classify_regime(&params, &row.p)?;
    let spec = QuadratureSpec::for_norm(&row.p);
    let numeric = sharp_constant(
        &params,
        &row.p,
        Method::Numeric,
        FormulaVariant::Corrected,
        &spec,
    )?;
    let closed = sharp_constant(
        &params,
        &row.p,
        Method::Closed,
        FormulaVariant::Corrected,
        &spec,
    );
    let (closed_s, diff_s) = match closed {
        Ok(c) => {
            let rel = (c.value - numeric.value).abs() / numeric.value.abs();
            (c.value.to_string(), rel.to_string())
        }
        Err(Error::OutOfRegime { .. }) => (String::new(), String::new()),
        Err(e) => return Err(e),
    };
    Ok(format!(
        "{},{},{},{},{},{},{},{}",
        row.n,
        row.alpha,
        row.beta,
        row.p,
        closed_s,
        numeric.value,
        diff_s,
        regime.branch.as_str()
    ))
}

fn run_sweep(grid: &PathBuf) -> Result<(), Error> {
    let rows = parse_grid(grid)?;
    // rows are independent; computed in parallel, emitted in input order
    let results: Vec<Result<String, Error>> = rows.par_iter().map(sweep_row).collect();
    println!("n,alpha,beta,p,closed,oracle,rel_diff,branch");
    for r in results {
        println!("{}", r?);
    }
    Ok(())
}

fn parse_center(s: &Option<String>, dim: usize) -> Result<Vec<f64>, Error> {
    match s {
        None => Ok(vec![0.0; dim]),
        Some(text) => {
            let vals: Result<Vec<f64>, _> = text.split(',').map(|t| t.trim().parse()).collect();
            let vals = vals.map_err(|_| Error::InvalidParams {
                field: "center",
                reason: format!("cannot parse `{text}` as comma-separated reals"),
            })?;
            if vals.len() != dim {
                return Err(Error::InvalidParams {
                    field: "center",
                    reason: format!("expected {dim} coordinates, got {}", vals.len()),
                });
            }
            Ok(vals)
        }
    }
}

fn read_tabulated(path: &PathBuf) -> Result<TabulatedData, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidParams {
        field: "data",
        reason: format!("cannot read {}: {e}", path.display()),
    })?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().unwrap_or("").trim();
    if header != "y1,y2,value" {
        return Err(Error::InvalidParams {
            field: "data",
            reason: format!("expected header `y1,y2,value`, got `{header}`"),
        });
    }
    let mut points: Vec<(f64, f64, f64)> = Vec::new();
    for (i, line) in lines.enumerate() {
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 3 {
            return Err(Error::InvalidParams {
                field: "data",
                reason: format!("row {}: expected 3 fields", i + 2),
            });
        }
        let parse = |s: &str| -> Result<f64, Error> {
            s.trim().parse().map_err(|_| Error::InvalidParams {
                field: "data",
                reason: format!("row {}: cannot parse `{s}`", i + 2),
            })
        };
        points.push((parse(f[0])?, parse(f[1])?, parse(f[2])?));
    }
    let mut y1: Vec<f64> = points.iter().map(|p| p.0).collect();
    let mut y2: Vec<f64> = points.iter().map(|p| p.1).collect();
    y1.sort_by(|a, b| a.partial_cmp(b).unwrap());
    y1.dedup();
    y2.sort_by(|a, b| a.partial_cmp(b).unwrap());
    y2.dedup();
    let m = y2.len();
    if points.len() != y1.len() * m {
        return Err(Error::InvalidParams {
            field: "data",
            reason: format!("samples do not form a full {}x{} tensor grid", y1.len(), m),
        });
    }
    let mut values = vec![f64::NAN; y1.len() * m];
    for (a, b, v) in points {
        let i = y1.partition_point(|x| *x < a);
        let j = y2.partition_point(|x| *x < b);
        values[i * m + j] = v;
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::InvalidParams {
            field: "data",
            reason: "duplicate or missing grid samples".into(),
        });
    }
    TabulatedData::new(y1, y2, values)
}

fn run_verify(a: &VerifyArgs) -> Result<(), Error> {
    let p: NormIndex = a.p.parse()?;
    let params = KernelParams::new(a.n, a.alpha, a.beta, a.k)?;
    validate(&params, &p)?;
    let dim = (a.n - 1) as usize;
    let x = EvaluationPoint::new(vec![0.0; dim], a.xn)?;
    let spec = QuadratureSpec::for_norm(&p);

    let family = match a.family {
        FamilyArg::Constant => BoundaryFunction::Constant(a.value),
        FamilyArg::Bump => BoundaryFunction::GaussianBump {
            center: parse_center(&a.center, dim)?,
            width: a.width.unwrap_or(a.xn / 10.0),
            height: a.height,
        },
        FamilyArg::KernelSign | FamilyArg::KernelPower => {
            if matches!(a.family, FamilyArg::KernelSign) && !p.is_infinite() {
                return Err(Error::InvalidParams {
                    field: "family",
                    reason: "kernel-sign is the p = inf extremal family".into(),
                });
            }
            let chi = a.zgamma.atan();
            let mut z = vec![0.0; a.n as usize];
            z[0] = chi.sin();
            z[a.n as usize - 1] = chi.cos();
            near_extremal_boundary(&params, &p, &x, &z, &spec)?
        }
        FamilyArg::Tabulated => {
            let path = a.data.as_ref().ok_or(Error::InvalidParams {
                field: "data",
                reason: "--family tabulated needs --data <file>".into(),
            })?;
            BoundaryFunction::Tabulated(read_tabulated(path)?)
        }
    };

    let report = verify_bound(&params, &p, &family, &x, a.radius, &spec)?;
    println!(
        "{}",
        json!({
            "n": a.n,
            "alpha": a.alpha,
            "beta": a.beta,
            "k": a.k,
            "p": p_json(&p),
            "xn": a.xn,
            "family": a.family.as_str(),
            "bound": report.bound,
            "measured": report.measured,
            "ratio": report.ratio,
            "truncation_radius": report.truncation_radius,
            "tail_estimate": report.tail_estimate,
        })
    );
    Ok(())
}

fn exit_code(err: &Error, cmd: &Cmd) -> u8 {
    match err {
        Error::InvalidParams { .. } | Error::Domain { .. } => 2,
        // out-of-regime means "no closed form here" for constant queries,
        // and plain bad parameters elsewhere (e.g. alpha-root below n-1)
        Error::OutOfRegime { .. } => match cmd {
            Cmd::Constant(_) | Cmd::Coefficient { .. } => 3,
            _ => 2,
        },
        Error::NumericFailure { .. } => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    eprintln!("# {}", argv.join(" "));

    let outcome = match &cli.cmd {
        Cmd::Constant(a) => run_constant(a),
        Cmd::Coefficient { kernel, xn } => run_coefficient(kernel, *xn),
        Cmd::AlphaRoot { n, beta } => run_alpha_root(*n, *beta),
        Cmd::Table { which } => run_table(which),
        Cmd::Sweep { grid } => run_sweep(grid),
        Cmd::Verify(a) => run_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e, &cli.cmd))
        }
    }
}
