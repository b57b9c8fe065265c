use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use binomial_euler::accel::euler_accelerate;
use binomial_euler::identities::{
    identity_sides, ljunggren_oracle, verify_many, IdentityId, QMode, VerifyOptions,
};
use binomial_euler::legendre::{all_representations, Representation};
use binomial_euler::seqfile::parse_sequence;
use binomial_euler::series::{binom_power_series, negbinom_series};
use binomial_euler::transforms::{
    binomial_transform, euler_transform, generalized_euler_transform, inverse_binomial_transform,
};
use binomial_euler::{Execution, MPoly, Rat, SeqView, Series};

const SCHEMA: u32 = 1;

pub struct Outcome {
    pub stdout: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            failed: false,
        }
    }
}

fn render_json(mut value: Value) -> String {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn read_sequence(path: &PathBuf) -> Result<Vec<Rat>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_sequence(&text)?)
}

fn parse_poly(s: &str) -> Result<MPoly> {
    s.parse::<MPoly>()
        .with_context(|| format!("parsing polynomial `{s}`"))
}

fn series_json(s: &Series) -> Value {
    Value::Array(s.coeffs().iter().map(|c| json!(c.to_string())).collect())
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Identity by equation label (eq1, eq7, ...) or alias (simons1, munarini10, ...).
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    identity: Vec<String>,
    /// Verify all ten identities.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Use this integer value for q instead of the symbol q.
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

pub fn verify(args: VerifyArgs, as_json: bool) -> Result<Outcome> {
    let ids: Vec<IdentityId> = if args.all {
        IdentityId::ALL.to_vec()
    } else {
        args.identity
            .iter()
            .map(|s| s.parse::<IdentityId>())
            .collect::<Result<_, _>>()?
    };
    let q = args.q.map_or(QMode::Symbolic, QMode::Integer);
    let opts = VerifyOptions {
        exec: if args.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        allow_q_below_n: true,
    };
    let reports = verify_many(&ids, args.n_max, q, &opts)?;
    let failed = reports.iter().any(|r| !r.all_pass);

    for report in &reports {
        for row in report.results.iter().filter(|r| r.q_below_n) {
            if let QMode::Integer(qv) = q {
                eprintln!(
                    "warning: QBelowN {} n={} q={qv}: the identity is stated for q >= n; evaluating anyway",
                    report.identity, row.n
                );
            }
        }
    }

    if as_json {
        let results: Vec<Value> = reports
            .iter()
            .flat_map(|report| {
                report.results.iter().map(move |row| {
                    json!({
                        "identity": report.identity.label(),
                        "n": row.n,
                        "pass": row.pass,
                        "diff": row.diff.to_string(),
                        "q_below_n": row.q_below_n,
                    })
                })
            })
            .collect();
        let q_value = match q {
            QMode::Symbolic => json!("symbolic"),
            QMode::Integer(v) => json!(v),
        };
        let value = json!({
            "command": "verify",
            "n_max": args.n_max,
            "q": q_value,
            "results": results,
            "all_pass": !failed,
        });
        return Ok(Outcome {
            stdout: render_json(value),
            failed,
        });
    }

    let mut out = String::new();
    for report in &reports {
        for row in &report.results {
            if row.pass {
                writeln!(out, "PASS {} n={}", report.identity, row.n)?;
            } else {
                writeln!(out, "FAIL {} n={} diff={}", report.identity, row.n, row.diff)?;
            }
        }
    }
    Ok(Outcome { stdout: out, failed })
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// Sequence file: one rational per line, `#` comments.
    file: PathBuf,
    /// Apply the inverse transform.
    #[arg(long)]
    inverse: bool,
}

pub fn transform(args: TransformArgs, as_json: bool) -> Result<Outcome> {
    let input = read_sequence(&args.file)?;
    let seq = SeqView::from_rats(input.clone())?;
    let out = if args.inverse {
        inverse_binomial_transform(&seq)
    } else {
        binomial_transform(&seq)
    };
    let values: Vec<String> = out.terms().iter().map(|t| t.to_string()).collect();
    if as_json {
        let input: Vec<String> = input.iter().map(|r| r.to_string()).collect();
        return Ok(Outcome::ok(render_json(json!({
            "command": "transform",
            "direction": if args.inverse { "inverse" } else { "forward" },
            "input": input,
            "output": values,
        }))));
    }
    Ok(Outcome::ok(values.iter().map(|v| format!("{v}\n")).collect()))
}

#[derive(Args, Debug)]
pub struct EulerArgs {
    /// Sequence file holding the coefficients a_0..a_N.
    file: PathBuf,
}

pub fn euler(args: EulerArgs, as_json: bool) -> Result<Outcome> {
    let f = SeqView::from_rats(read_sequence(&args.file)?)?.into_series();
    let out = euler_transform(&f);
    if as_json {
        return Ok(Outcome::ok(render_json(json!({
            "command": "euler",
            "order": out.order(),
            "coefficients": series_json(&out),
        }))));
    }
    Ok(Outcome::ok(out.to_string()))
}

#[derive(Args, Debug)]
pub struct GenEulerArgs {
    /// Sequence file holding the coefficients a_0..a_N.
    file: PathBuf,
    #[arg(long, default_value = "x", allow_hyphen_values = true)]
    x: String,
    #[arg(long, default_value = "alpha", allow_hyphen_values = true)]
    alpha: String,
}

pub fn gen_euler(args: GenEulerArgs, as_json: bool) -> Result<Outcome> {
    let f = SeqView::from_rats(read_sequence(&args.file)?)?.into_series();
    let x = parse_poly(&args.x)?;
    let alpha = parse_poly(&args.alpha)?;
    let out = generalized_euler_transform(&f, &x, &alpha);
    if as_json {
        return Ok(Outcome::ok(render_json(json!({
            "command": "gen-euler",
            "x": x.to_string(),
            "alpha": alpha.to_string(),
            "order": out.order(),
            "coefficients": series_json(&out),
        }))));
    }
    Ok(Outcome::ok(out.to_string()))
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SeriesKind {
    /// (1 - base t)^-(exponent + 1)
    Negbinom,
    /// (1 + base t)^exponent
    BinomPower,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    kind: SeriesKind,
    #[arg(long, allow_hyphen_values = true)]
    base: String,
    #[arg(long, allow_hyphen_values = true)]
    exponent: String,
    #[arg(long)]
    order: usize,
}

pub fn series(args: SeriesArgs, as_json: bool) -> Result<Outcome> {
    let base = parse_poly(&args.base)?;
    let exponent = parse_poly(&args.exponent)?;
    let out = match args.kind {
        SeriesKind::Negbinom => negbinom_series(&base, &exponent, args.order),
        SeriesKind::BinomPower => binom_power_series(&base, &exponent, args.order),
    };
    if as_json {
        let kind = match args.kind {
            SeriesKind::Negbinom => "negbinom",
            SeriesKind::BinomPower => "binom-power",
        };
        return Ok(Outcome::ok(render_json(json!({
            "command": "series",
            "kind": kind,
            "base": base.to_string(),
            "exponent": exponent.to_string(),
            "order": out.order(),
            "coefficients": series_json(&out),
        }))));
    }
    Ok(Outcome::ok(out.to_string()))
}

#[derive(Args, Debug)]
pub struct LegendreArgs {
    #[arg(long)]
    n: usize,
    /// rodrigues, rep20, rep21, rep22 or all.
    #[arg(long, default_value = "all")]
    rep: String,
}

pub fn legendre(args: LegendreArgs, as_json: bool) -> Result<Outcome> {
    let (polys, agree) = if args.rep == "all" {
        let (polys, agree) = all_representations(args.n);
        (polys, Some(agree))
    } else {
        let rep: Representation = args.rep.parse()?;
        (vec![(rep, rep.compute(args.n))], None)
    };
    if as_json {
        let reps: Vec<Value> = polys
            .iter()
            .map(|(r, p)| json!({ "rep": r.name(), "polynomial": p.to_string() }))
            .collect();
        let mut value = json!({
            "command": "legendre",
            "n": args.n,
            "representations": reps,
        });
        if let Some(agree) = agree {
            value["agree"] = json!(agree);
        }
        return Ok(Outcome {
            stdout: render_json(value),
            failed: agree == Some(false),
        });
    }
    let mut out = String::new();
    for (rep, p) in &polys {
        writeln!(out, "{}: {p}", rep.name())?;
    }
    if let Some(agree) = agree {
        writeln!(out, "{}", if agree { "AGREE" } else { "DISAGREE" })?;
    }
    Ok(Outcome {
        stdout: out,
        failed: agree == Some(false),
    })
}

#[derive(Args, Debug)]
#[command(after_help = "The file holds the positive parts c_k; the series summed is \
                        c_0 - c_1 + c_2 - ... = sum (-1)^k c_k.")]
pub struct AccelerateArgs {
    /// Sequence file holding c_0, c_1, ... (unsigned terms).
    file: PathBuf,
    /// Number m of forward differences beyond the zeroth.
    #[arg(long)]
    terms: usize,
    /// Target value as a decimal string; switches the table to absolute errors.
    #[arg(long, allow_hyphen_values = true)]
    reference: Option<String>,
    /// Render values as decimals with this many digits instead of exact p/q.
    #[arg(long)]
    digits: Option<usize>,
}

pub fn accelerate(args: AccelerateArgs, as_json: bool) -> Result<Outcome> {
    let c = read_sequence(&args.file)?;
    let mut table = euler_accelerate(&c, args.terms)?;
    if let Some(r) = &args.reference {
        table = table.with_reference(Rat::from_decimal_str(r)?);
    }
    let render = |r: &Rat| match args.digits {
        Some(d) => r.to_decimal(d),
        None => r.to_string(),
    };
    let with_errors = table.reference.is_some();
    let rows: Vec<(usize, String, String)> = (0..=args.terms)
        .map(|k| {
            let (plain, accel) = if with_errors {
                (
                    table.plain_error(k).expect("reference set"),
                    table.accel_error(k).expect("reference set"),
                )
            } else {
                (table.plain_partials[k].clone(), table.accel_partials[k].clone())
            };
            (k, render(&plain), render(&accel))
        })
        .collect();

    if as_json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(k, p, a)| json!({ "k": k, "plain": p, "accelerated": a }))
            .collect();
        let diffs: Vec<String> = table.diffs.iter().map(render).collect();
        return Ok(Outcome::ok(render_json(json!({
            "command": "accelerate",
            "terms": args.terms,
            "columns": if with_errors { "absolute_error" } else { "partial_sum" },
            "reference": table.reference.as_ref().map(render),
            "differences": diffs,
            "rows": rows,
        }))));
    }

    let mut out = String::new();
    let (h1, h2) = if with_errors {
        ("plain_error", "accelerated_error")
    } else {
        ("plain_sum", "accelerated_sum")
    };
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(h1.len());
    writeln!(out, "{:>3}  {:<w1$}  {}", "k", h1, h2)?;
    for (k, p, a) in &rows {
        writeln!(out, "{k:>3}  {p:<w1$}  {a}")?;
    }
    Ok(Outcome::ok(out))
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long)]
    identity: String,
    #[arg(long)]
    n: usize,
    /// Integer q; for eq11 this prints the coefficient of t^n in (x t + y)^n (1 + t)^q.
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
}

pub fn expand(args: ExpandArgs, as_json: bool) -> Result<Outcome> {
    let id: IdentityId = args.identity.parse()?;
    if let (IdentityId::Ljunggren11, Some(q)) = (id, args.q) {
        let coeff = ljunggren_oracle(args.n, q)?;
        if as_json {
            return Ok(Outcome::ok(render_json(json!({
                "command": "expand",
                "identity": id.label(),
                "n": args.n,
                "q": q,
                "coefficient": coeff.to_string(),
            }))));
        }
        return Ok(Outcome::ok(format!("{coeff}\n")));
    }
    if args.q.is_some() && !id.uses_q() {
        bail!("{id} has no parameter q");
    }
    let q = args.q.map_or(QMode::Symbolic, QMode::Integer);
    let (lhs, rhs) = identity_sides(id, args.n, q)?;
    if as_json {
        return Ok(Outcome::ok(render_json(json!({
            "command": "expand",
            "identity": id.label(),
            "n": args.n,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
        }))));
    }
    Ok(Outcome::ok(format!("lhs: {lhs}\nrhs: {rhs}\n")))
}
