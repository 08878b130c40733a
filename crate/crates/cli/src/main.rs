use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qhyper::algebra::{Algebra, Gen, NCPoly, Tag};
use qhyper::expr::{parse_poly, parse_ratfunc, Kind};
use qhyper::geometry::{self, Comparison};
use qhyper::qrat::parse_rational;
use qhyper::report::{ParamsEcho, Status};
use qhyper::suite::{run_suite, Bounds};
use qhyper::tangent::{format_tangent, function_algebra, ExtensionContext, Side, TangentModule};
use qhyper::uqsl2::{spin_decompose, HopfGen, UqModule};
use qhyper::{Error, Params};

#[derive(Parser)]
#[command(
    name = "qhyper",
    version,
    about = "Exact braided geometry of the quantum hyperboloid"
)]
struct Cli {
    /// Orbit constant c (a rational function of q, nonzero).
    #[arg(long, global = true, default_value = "1")]
    c: String,
    /// Bracket scale tau.
    #[arg(long, global = true, default_value = "4")]
    tau: String,
    /// Deformation parameter hbar.
    #[arg(long, global = true, default_value = "0")]
    hbar: String,
    /// `symbolic` or a rational value for q.
    #[arg(long, global = true, default_value = "symbolic")]
    q: String,
    /// Degree bound for the checks and operator extensions.
    #[arg(long, global = true)]
    degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    X,
    Y,
    H,
    #[value(name = "DU")]
    Du,
    #[value(name = "DV")]
    Dv,
    #[value(name = "DW")]
    Dw,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an algebra or tangent expression.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply X, Y, H or a braided vector field DU, DV, DW.
    Act {
        #[arg(value_enum, ignore_case = true)]
        op: Op,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Split an element into spin components.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The metric pairing of a left and a right tangent element.
    Pair { left: String, right: String },
    /// The connection along a left tangent element on a symbol combination.
    Connect { left: String, symbol: String },
    /// Run verification suites.
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
    },
    /// Derived tables next to the printed ones.
    Tables,
}

struct Outcome {
    text: String,
    json: serde_json::Value,
    failed: bool,
}

fn params(cli: &Cli) -> qhyper::Result<Params> {
    let p = Params::new(
        parse_ratfunc(&cli.c)?,
        parse_ratfunc(&cli.tau)?,
        parse_ratfunc(&cli.hbar)?,
    )?;
    if cli.q == "symbolic" {
        Ok(p)
    } else {
        p.specialized(&parse_rational(&cli.q)?)
    }
}

fn render(p: &NCPoly, kind: Kind) -> String {
    match kind {
        Kind::Tangent(side) => format_tangent(p, side),
        _ => p.to_string(),
    }
}

fn module(p: &Params, side: Side) -> qhyper::Result<TangentModule> {
    TangentModule::new(tangent_algebra(p)?, side)
}

fn tangent_algebra(p: &Params) -> qhyper::Result<std::sync::Arc<Algebra>> {
    if !p.hbar.is_zero() {
        return Err(Error::Usage("tangent computations need hbar = 0".into()));
    }
    Ok(function_algebra(p))
}

fn parse_kind(text: &str, p: &Params) -> qhyper::Result<(NCPoly, Kind)> {
    let (x, kind) = parse_poly(text, p)?;
    Ok((
        x,
        if kind == Kind::Scalar {
            Kind::Algebra
        } else {
            kind
        },
    ))
}

fn normal(x: &NCPoly, kind: Kind, p: &Params) -> qhyper::Result<NCPoly> {
    Ok(match kind {
        Kind::Tangent(side) => module(p, side)?.p_proj(x),
        _ => Algebra::new(p.clone(), Tag::Function).normal_form(x),
    })
}

fn single(result: String) -> Outcome {
    Outcome {
        json: json!({ "result": result }),
        text: result + "\n",
        failed: false,
    }
}

fn left_only(text: &str, p: &Params, what: &str) -> qhyper::Result<NCPoly> {
    match parse_poly(text, p)? {
        (x, Kind::Tangent(Side::Left)) => Ok(x),
        _ => Err(Error::Usage(format!(
            "{what} must be a left tangent expression such as u*V"
        ))),
    }
}

fn comparison_rows(title: &str, cs: &[Comparison], text: &mut String) -> Vec<serde_json::Value> {
    text.push_str(&format!("== {title}\n"));
    let mut rows = Vec::new();
    for c in cs {
        text.push_str(&format!(
            "{:<12} {}\n  derived: {}\n  printed: {}\n",
            c.status.as_str(),
            c.name,
            c.derived,
            c.printed
        ));
        if c.status != Status::Pass {
            text.push_str(&format!("  note: {}\n", c.detail));
        }
        rows.push(json!({
            "name": c.name,
            "derived": c.derived,
            "printed": c.printed,
            "status": c.status.as_str(),
            "detail": c.detail,
        }));
    }
    rows
}

fn run(cli: &Cli) -> qhyper::Result<Outcome> {
    let p = params(cli)?;
    match &cli.command {
        Command::Nf { expr } => {
            let (x, kind) = parse_kind(expr, &p)?;
            Ok(single(render(&normal(&x, kind, &p)?, kind)))
        }
        Command::Act { op, expr } => {
            let (x, kind) = parse_kind(expr, &p)?;
            let z = match op {
                Op::X => Some(HopfGen::X),
                Op::Y => Some(HopfGen::Y),
                Op::H => Some(HopfGen::H),
                _ => None,
            };
            let r = match (z, kind) {
                (Some(z), Kind::Tangent(side)) => module(&p, side)?.act(z, &x),
                (Some(z), _) => Algebra::new(p.clone(), Tag::Function).act(z, &x),
                (None, Kind::Tangent(_)) => {
                    return Err(Error::Usage("vector fields act on algebra elements".into()))
                }
                (None, _) => {
                    let alg = tangent_algebra(&p)?;
                    let f = alg.normal_form(&x);
                    let ctx = ExtensionContext::new(alg, cli.degree.unwrap_or(0).max(f.degree()))?;
                    let s = match op {
                        Op::Du => Gen::SymU,
                        Op::Dv => Gen::SymV,
                        _ => Gen::SymW,
                    };
                    ctx.extend_apply(s, &f)?
                }
            };
            Ok(single(render(&r, kind)))
        }
        Command::Decompose { expr } => {
            let (x, kind) = parse_kind(expr, &p)?;
            let parts = match kind {
                Kind::Tangent(side) => {
                    let m = module(&p, side)?;
                    spin_decompose(&m, &m.p_proj(&x))
                }
                _ => {
                    let alg = Algebra::new(p.clone(), Tag::Function);
                    spin_decompose(&alg, &alg.normal_form(&x))
                }
            };
            let mut text = String::new();
            let mut obj = serde_json::Map::new();
            for (s, v) in &parts {
                let r = render(v, kind);
                text.push_str(&format!("spin {s}: {r}\n"));
                obj.insert(s.to_string(), json!(r));
            }
            if parts.is_empty() {
                text.push_str("0\n");
            }
            Ok(Outcome {
                text,
                json: json!({ "components": obj }),
                failed: false,
            })
        }
        Command::Pair { left, right } => {
            let a = left_only(left, &p, "the first argument")?;
            let b = match parse_poly(right, &p)? {
                (x, Kind::Tangent(Side::Right)) => x,
                _ => {
                    return Err(Error::Usage(
                        "the second argument must be a right tangent expression such as U'*u"
                            .into(),
                    ))
                }
            };
            let t = geometry::metric_solve(tangent_algebra(&p)?)?;
            let rm = module(&p, Side::Right)?;
            let lm = module(&p, Side::Left)?;
            Ok(single(t.pair(&lm.p_proj(&a), &rm.p_proj(&b)).to_string()))
        }
        Command::Connect { left, symbol } => {
            let a = left_only(left, &p, "the first argument")?;
            let s = left_only(symbol, &p, "the second argument")?;
            let t = geometry::connection_derive(tangent_algebra(&p)?)?;
            Ok(single(format_tangent(&t.connect(&a, &s)?, Side::Left)))
        }
        Command::Verify { suites } => {
            let r = run_suite(suites, &p, &Bounds { degree: cli.degree })?;
            Ok(Outcome {
                text: r.to_text(),
                json: serde_json::to_value(&r).expect("report serializes"),
                failed: !r.passed(),
            })
        }
        Command::Tables => {
            let alg = tangent_algebra(&p)?;
            let mt = geometry::metric_solve(alg.clone())?;
            let ct = geometry::connection_derive(alg.clone())?;
            let lm = TangentModule::new(alg, Side::Left)?;
            let mut text = String::new();
            let metric = comparison_rows("metric", &geometry::compare_metric(&mt)?, &mut text);
            let connection =
                comparison_rows("connection", &geometry::compare_connection(&ct)?, &mut text);
            let projections = comparison_rows(
                "projections",
                &geometry::compare_projections(&lm)?,
                &mut text,
            );
            let summary = |rows: &[serde_json::Value]| {
                rows.iter()
                    .filter(|r| r["status"] == "PASS")
                    .count()
                    .to_string()
                    + "/"
                    + &rows.len().to_string()
            };
            text.push_str(&format!(
                "agree: metric {}, connection {}, projections {}\n",
                summary(&metric),
                summary(&connection),
                summary(&projections)
            ));
            let echo = ParamsEcho::new(&p, cli.degree.unwrap_or(4));
            Ok(Outcome {
                text,
                json: json!({ "params": echo, "metric": metric, "connection": connection, "projections": projections }),
                failed: false,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json") + "\n",
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, body) {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            if o.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() || matches!(e, Error::DivisionByZero) {
                2
            } else {
                1
            })
        }
    }
}
