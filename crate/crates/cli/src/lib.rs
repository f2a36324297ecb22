//! Command-line front end: parses polynomials, runs a decision procedure and
//! prints one JSON document on stdout.

pub mod output;
pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use plansub::classify::{classify_degree4, Family};
use plansub::hrc::{
    divergence_verdict, jacobian_det, refute_pair, tau, truncated_integral, Divergence, HrcRegion, PANELS,
};
use plansub::levelsets::decide_connected;
use plansub::positivity::{bruna_polynomial, bruna_witnesses, det_exact, hankel, leading_minors, BrunaOutcome};
use plansub::subres::subresultant;
use plansub::zeros::critical_point_exists;
use plansub::{BPoly, Rat, Var};
use serde_json::{json, Map, Value};

use crate::output::{rat, rats, upoly_in};
use crate::parse::{parse_poly, parse_rat, ParseError};

/// Exit status when a verdict was produced.
pub const EXIT_OK: i32 = 0;
/// Exit status when a procedure could not finish on valid input.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "plansub", version, about = "Exact decision procedures for planar polynomial submersions")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    json_pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VarArg {
    X,
    Y,
}

impl From<VarArg> for Var {
    fn from(v: VarArg) -> Var {
        match v {
            VarArg::X => Var::X,
            VarArg::Y => Var::Y,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a polynomial of degree at most 4.
    Classify {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Decide whether the gradient of p vanishes somewhere.
    Critical {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Try to certify that the level sets of p are connected.
    Connected {
        #[arg(allow_hyphen_values = true)]
        p: String,
        /// Level to certify (default 0).
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
    },
    /// The k-th subresultant of p and q eliminating a variable.
    Subres {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum)]
        var: VarArg,
        #[arg(long)]
        k: usize,
    },
    /// Show that q is not a Jacobian partner of a canonical family.
    Refute {
        #[arg(long)]
        family: u8,
        /// Parameter of families 2 and 4 (default 0).
        #[arg(long, allow_hyphen_values = true)]
        a02: Option<String>,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Sign-change witnesses of L for comma-separated b0,b1,...
    Bruna {
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Determinant of the Hankel matrix H_j^k.
    Hankel {
        j: usize,
        k: usize,
        /// Also list the leading principal minors.
        #[arg(long)]
        minors: bool,
    },
    /// Truncated integral of h over the family's half-Reeb region.
    HrcIntegral {
        #[arg(long)]
        family: u8,
        #[arg(long, allow_hyphen_values = true)]
        a02: Option<String>,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// The family's exponent tau of h.
    Tau {
        #[arg(long)]
        family: u8,
        #[arg(long, allow_hyphen_values = true)]
        a02: Option<String>,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot parse {what}: {source}")]
    Parse { what: &'static str, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] plansub::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(plansub::Error::LemmaViolation(_) | plansub::Error::WitnessSearchExhausted) => {
                EXIT_FAILURE
            }
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn poly(what: &'static str, text: &str) -> CliResult<BPoly> {
    parse_poly(text).map_err(|source| CliError::Parse { what, source })
}

fn number(what: &'static str, text: &str) -> CliResult<Rat> {
    parse_rat(text).map_err(|source| CliError::Parse { what, source })
}

/// Families 2 and 4 take `a02`, defaulting to 0.
fn family(id: u8, a02: Option<&str>) -> CliResult<Family> {
    let a = a02.map(|t| number("--a02", t)).transpose()?;
    let a = match id {
        2 | 4 => Some(a.unwrap_or_default()),
        _ => a,
    };
    Ok(Family::new(id, a)?)
}

fn family_inputs(f: &Family) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("family".into(), f.id().into());
    m.insert("a02".into(), output::opt_rat(f.a02()));
    m
}

/// `(command name, echoed inputs, result fields)`.
type Outcome = (&'static str, Map<String, Value>, Map<String, Value>);

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn execute(command: Command) -> CliResult<Outcome> {
    Ok(match command {
        Command::Classify { p } => {
            let p = poly("p", &p)?;
            let v = classify_degree4(&p)?;
            ("classify", obj(json!({ "p": p.to_string() })), output::verdict(&v))
        }
        Command::Critical { p } => {
            let p = poly("p", &p)?;
            let found = critical_point_exists(&p)?;
            let result = match found {
                Some(w) => json!({ "verdict": "CriticalPointExists", "witness": output::witness_box(&w) }),
                None => json!({ "verdict": "NoCriticalPoint", "witness": null }),
            };
            ("critical", obj(json!({ "p": p.to_string() })), obj(result))
        }
        Command::Connected { p, level } => {
            let p = poly("p", &p)?;
            let level = level.map(|l| number("--level", &l)).transpose()?.unwrap_or_default();
            let cert = decide_connected(&p, &level);
            let result = json!({
                "verdict": format!("{:?}", cert.tag),
                "certificate": output::connectedness(&cert),
                "revalidated": cert.revalidate(&p),
            });
            ("connected", obj(json!({ "p": p.to_string(), "level": rat(&level) })), obj(result))
        }
        Command::Subres { p, q, var, k } => {
            let (p, q) = (poly("p", &p)?, poly("q", &q)?);
            let var = Var::from(var);
            let r = subresultant(&p, &q, var, k)?;
            let inputs = json!({ "p": p.to_string(), "q": q.to_string(), "var": var.name(), "k": k });
            ("subres", obj(inputs), obj(json!({ "verdict": "Computed", "value": upoly_in(var.other(), &r) })))
        }
        Command::Refute { family: id, a02, q } => {
            let f = family(id, a02.as_deref())?;
            let q = poly("q", &q)?;
            if q.is_zero() {
                return Err(CliError::Input("q must be a nonzero polynomial".into()));
            }
            let cert = refute_pair(&f, &q)?;
            let mut result = output::refutation(&cert);
            result.insert("verdict".into(), "Refuted".into());
            result.insert("h".into(), jacobian_det(&f.polynomial(), &q).to_string().into());
            result.insert("verified".into(), cert.verify(&f, &q).into());
            let mut inputs = family_inputs(&f);
            inputs.insert("q".into(), q.to_string().into());
            ("refute", inputs, result)
        }
        Command::Bruna { b } => {
            let b = b
                .split(',')
                .map(|t| number("b", t))
                .collect::<CliResult<Vec<Rat>>>()?;
            let l = bruna_polynomial(&b);
            let mut result = obj(json!({ "L": l.to_string() }));
            match bruna_witnesses(&b)? {
                BrunaOutcome::IsZero => {
                    result.insert("verdict".into(), "IsZero".into());
                }
                BrunaOutcome::Witnesses { theta1, theta2 } => {
                    result.insert("verdict".into(), "Witnesses".into());
                    result.insert("theta1".into(), rat(&theta1));
                    result.insert("theta2".into(), rat(&theta2));
                    result.insert("L_theta1".into(), rat(&l.eval(&theta1)));
                    result.insert("L_theta2".into(), rat(&l.eval(&theta2)));
                }
            }
            ("bruna", obj(json!({ "b": rats(&b) })), result)
        }
        Command::Hankel { j, k, minors } => {
            let h = hankel(j, k)?;
            let mut result = obj(json!({
                "verdict": "Computed",
                "matrix": h.entries.iter().map(|row| rats(row)).collect::<Vec<_>>(),
                "det": rat(&det_exact(&h.entries)?),
            }));
            if minors {
                result.insert("minors".into(), rats(&leading_minors(&h.entries)?));
            }
            ("hankel", obj(json!({ "j": j, "k": k })), result)
        }
        Command::HrcIntegral { family: id, a02, h, eps } => {
            let f = family(id, a02.as_deref())?;
            let h = poly("h", &h)?;
            let eps = number("--eps", &eps)?;
            let value = truncated_integral(&f, &h, &eps)?;
            let result = json!({
                "verdict": "Computed",
                "value": value,
                "panels": PANELS,
                "region": HrcRegion::for_family(&f).to_string(),
            });
            let mut inputs = family_inputs(&f);
            inputs.insert("h".into(), h.to_string().into());
            inputs.insert("eps".into(), rat(&eps));
            ("hrc-integral", inputs, obj(result))
        }
        Command::Tau { family: id, a02, h } => {
            let f = family(id, a02.as_deref())?;
            let h = poly("h", &h)?;
            let t = tau(&f, &h)?;
            let divergence = match divergence_verdict(&f, &h) {
                Ok(Divergence::Diverges(_)) => "Diverges".into(),
                Ok(Divergence::FiniteOrUnknown(_)) => "FiniteOrUnknown".into(),
                Err(_) => Value::Null,
            };
            let mut inputs = family_inputs(&f);
            inputs.insert("h".into(), h.to_string().into());
            ("tau", inputs, obj(json!({ "verdict": "Computed", "tau": t, "divergence": divergence })))
        }
    })
}

/// Runs the command line `args` (program name first), writing JSON to `out`
/// and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((command, inputs, mut doc)) => {
            doc.insert("command".into(), command.into());
            doc.insert("inputs".into(), Value::Object(inputs));
            doc.insert("version".into(), env!("CARGO_PKG_VERSION").into());
            let doc = Value::Object(doc);
            let text = if cli.json_pretty {
                serde_json::to_string_pretty(&doc)
            } else {
                serde_json::to_string(&doc)
            }
            .expect("JSON values serialize");
            match writeln!(out, "{text}") {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "plansub: cannot write output: {e}");
                    EXIT_FAILURE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "plansub: error: {e}");
            e.exit_code()
        }
    }
}
