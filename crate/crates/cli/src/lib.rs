//! Batch front end for the `posyring` library.
//!
//! [`run`] parses an argument vector, performs one query and writes the
//! answer to `out`. Exit codes: 0 when an answer was computed (including
//! `false`), 1 for usage, parse and constraint errors, 2 for internal
//! failures.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use posyring::oracle::{member_by_euclid, member_by_linear_algebra, OracleConfig};
use posyring::parser::{format_with_names, identifiers};
use posyring::{
    atomic_status, buchberger, format, is_proper, member_laurent, member_laurent_with_certificate, member_posy,
    member_posy_with_certificate, parse, parse_laurent, parse_polynomial, pi, principal_generator, saturate,
    AtomicityVerdict, Error, Exponent, LaurentPolynomial, Point, Poly, Posynomial, Rational, RingContext, RingKind,
};

pub const ORACLE_ENV: &str = "POSYRING_ORACLE";

#[derive(Parser, Debug)]
#[command(name = "posyring", version, about = "Ideal membership in Laurent and posynomial rings over Q")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ring {
    Laurent,
    Posy,
}

impl Ring {
    fn kind(self) -> RingKind {
        match self {
            Ring::Laurent => RingKind::Laurent,
            Ring::Posy => RingKind::PosyQ,
        }
    }
}

#[derive(Args, Debug)]
struct VarsArg {
    /// Comma-separated variables, smallest first in the lex order.
    /// Defaults to the identifiers in order of first appearance.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide g ∈ <f1, ..., fk>.
    Member {
        #[arg(long, value_enum, default_value = "laurent")]
        ring: Ring,
        #[command(flatten)]
        vars: VarsArg,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Generators separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        /// Print a membership certificate for positive answers.
        #[arg(long)]
        certificate: bool,
    },
    /// Reduced lex Gröbner basis in the polynomial ring.
    Groebner {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Basis of <F(f1), ..., F(fk)> saturated by the product of all variables.
    Saturate {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Clear the common monomial factor of a Laurent polynomial.
    Normalize {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Multiply every exponent by m.
    Scale {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long)]
        m: u64,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Least m such that scaling by m makes every exponent an integer.
    Pi {
        #[command(flatten)]
        vars: VarsArg,
        /// Posynomials separated by ';'.
        #[arg(allow_hyphen_values = true)]
        fs: String,
    },
    /// Single generator of a univariate posynomial ideal.
    Generator {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Evaluate a Laurent polynomial at a point with nonzero coordinates.
    Eval {
        #[command(flatten)]
        vars: VarsArg,
        /// Assignments v1=a1,v2=a2,... covering every variable.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Is the ideal different from the whole ring?
    Proper {
        #[arg(long, value_enum, default_value = "laurent")]
        ring: Ring,
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Is f invertible?
    Unit {
        #[arg(long, value_enum, default_value = "laurent")]
        ring: Ring,
        #[command(flatten)]
        vars: VarsArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Bounded atomicity check for univariate posynomials.
    Atomic {
        #[arg(long)]
        bound: u64,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long, value_enum, default_value = "linear-algebra")]
        method: OracleMethod,
        #[arg(long, default_value_t = 6)]
        lambda: u32,
        #[arg(long, default_value_t = 8)]
        degree: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleMethod {
    LinearAlgebra,
    Euclid,
}

/// Failure of a single request.
#[derive(Debug)]
enum Failure {
    /// Bad input or violated precondition, exit code 1.
    Input(String),
    /// Bug or resource limit, exit code 2.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrderPrecondition(_) | Error::VariableIndex { .. } | Error::Overflow(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Answer of one request: text lines and its JSON counterpart.
struct Answer {
    text: String,
    result: Value,
    witness: Option<Value>,
}

impl Answer {
    fn boolean(b: bool) -> Self {
        Answer { text: b.to_string(), result: Value::Bool(b), witness: None }
    }

    fn string(s: String) -> Self {
        Answer { result: Value::String(s.clone()), text: s, witness: None }
    }

    fn list(items: Vec<String>) -> Self {
        Answer { text: items.join("\n"), result: json!(items), witness: None }
    }
}

/// Runs one request. Reads `POSYRING_ORACLE` to decide whether the hidden
/// `oracle` subcommand is available.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let oracle = std::env::var(ORACLE_ENV).is_ok_and(|v| v == "1");
    run_with(args, oracle, out, err)
}

pub fn run_with<I, S>(args: I, oracle_enabled: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    if matches!(cli.command, Command::Oracle { .. }) && !oracle_enabled {
        let _ = writeln!(err, "error: unrecognized subcommand 'oracle'\n\nUsage: posyring [OPTIONS] <COMMAND>");
        return 1;
    }

    let json_mode = cli.json;
    let outcome = match panic::catch_unwind(AssertUnwindSafe(|| execute(cli.command))) {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            Err(Failure::Internal(msg))
        }
    };

    match outcome {
        Ok(answer) => {
            if json_mode {
                let mut obj = json!({ "ok": true, "result": answer.result });
                if let Some(w) = answer.witness {
                    obj["witness"] = w;
                }
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(out, "{}", answer.text);
            }
            0
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Input(m) => (1, m),
                Failure::Internal(m) => (2, format!("internal error: {m}")),
            };
            if json_mode {
                let _ = writeln!(out, "{}", json!({ "ok": false, "error": msg }));
            }
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(';').map(str::trim).collect()
}

/// Ring context from `--vars`, or inferred from the expressions.
fn context(vars: &VarsArg, kind: RingKind, texts: &[&str]) -> Outcome<RingContext> {
    let names: Vec<String> = match &vars.vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for t in texts {
                for id in identifiers(t) {
                    if !names.contains(&id) {
                        names.push(id);
                    }
                }
            }
            if names.is_empty() {
                names.push("x".to_string());
            }
            names
        }
    };
    Ok(RingContext::new(names, kind)?)
}

fn parse_with<T>(
    what: &str,
    text: &str,
    ctx: &RingContext,
    p: impl Fn(&str, &RingContext) -> std::result::Result<T, posyring::ParseError>,
) -> Outcome<T> {
    p(text, ctx).map_err(|e| Failure::Input(format!("{what}: {e}")))
}

fn parse_list<T>(
    text: &str,
    ctx: &RingContext,
    p: impl Fn(&str, &RingContext) -> std::result::Result<T, posyring::ParseError>,
) -> Outcome<Vec<T>> {
    let parts = split_list(text);
    if parts.iter().all(|s| s.is_empty()) {
        return Err(Failure::Input("generator list must not be empty".to_string()));
    }
    parts.iter().enumerate().map(|(i, t)| parse_with(&format!("generator {}", i + 1), t, ctx, &p)).collect()
}

fn render<E: Exponent>(f: &Poly<E>, ctx: &RingContext) -> String {
    format(f, ctx)
}

fn execute(command: Command) -> Outcome<Answer> {
    match command {
        Command::Member { ring, vars, g, ideal, certificate } => {
            let ctx = context(&vars, ring.kind(), &[&g, &ideal])?;
            match ring {
                Ring::Laurent => {
                    let gp = parse_with("g", &g, &ctx, parse_laurent)?;
                    let fs = parse_list(&ideal, &ctx, parse_laurent)?;
                    if !certificate {
                        return Ok(Answer::boolean(member_laurent(&gp, &fs)?.member));
                    }
                    let r = member_laurent_with_certificate(&gp, &fs)?;
                    let mut answer = Answer::boolean(r.member);
                    if let Some(c) = r.certificate {
                        if !c.verify(&gp, &fs) {
                            return Err(Failure::Internal("certificate failed verification".to_string()));
                        }
                        let hs: Vec<String> = c.cofactors.iter().map(|h| render(h, &ctx)).collect();
                        answer.text = certificate_text(&answer.text, None, c.lambda, &hs);
                        answer.witness = Some(json!({ "lambda": c.lambda, "cofactors": hs }));
                    }
                    Ok(answer)
                }
                Ring::Posy => {
                    let gp = parse_with("g", &g, &ctx, parse)?;
                    let fs = parse_list(&ideal, &ctx, parse)?;
                    if !certificate {
                        return Ok(Answer::boolean(member_posy(&gp, &fs)?.member));
                    }
                    let r = member_posy_with_certificate(&gp, &fs)?;
                    let mut answer = Answer::boolean(r.member);
                    if let Some(c) = r.certificate {
                        if !c.verify(&gp, &fs) {
                            return Err(Failure::Internal("certificate failed verification".to_string()));
                        }
                        let hs: Vec<String> = c.cofactors.iter().map(|h| render(h, &ctx)).collect();
                        answer.text = certificate_text(&answer.text, Some(c.scale), c.lambda, &hs);
                        answer.witness = Some(json!({ "scale": c.scale, "lambda": c.lambda, "cofactors": hs }));
                    }
                    Ok(answer)
                }
            }
        }
        Command::Groebner { vars, ideal } => {
            let ctx = context(&vars, RingKind::Polynomial, &[&ideal])?;
            let fs = parse_list(&ideal, &ctx, parse_polynomial)?;
            let basis = buchberger(&fs, ctx.order())?;
            Ok(Answer::list(basis.elements().iter().map(|b| render(b, &ctx)).collect()))
        }
        Command::Saturate { vars, ideal } => {
            let ctx = context(&vars, RingKind::Laurent, &[&ideal])?;
            let fs = parse_list(&ideal, &ctx, parse_laurent)?;
            let basis = saturate(&fs)?;
            Ok(Answer::list(basis.elements().iter().map(|b| render(b, &ctx)).collect()))
        }
        Command::Normalize { vars, f } => {
            let ctx = context(&vars, RingKind::Laurent, &[&f])?;
            let fp = parse_with("f", &f, &ctx, parse_laurent)?;
            Ok(Answer::string(render(&fp.clear_factor(), &ctx)))
        }
        Command::Scale { vars, m, f } => {
            let ctx = context(&vars, RingKind::PosyQ, &[&f])?;
            let fp = parse_with("f", &f, &ctx, parse)?;
            Ok(Answer::string(render(&fp.phi(m)?, &ctx)))
        }
        Command::Pi { vars, fs } => {
            let ctx = context(&vars, RingKind::PosyQ, &[&fs])?;
            let list = parse_list(&fs, &ctx, parse)?;
            let m = pi(&list)?;
            Ok(Answer { text: m.to_string(), result: json!(m), witness: None })
        }
        Command::Generator { vars, ideal } => {
            let ctx = context(&vars, RingKind::PosyQ, &[&ideal])?;
            let fs = parse_list(&ideal, &ctx, parse)?;
            Ok(Answer::string(render(&principal_generator(&fs)?, &ctx)))
        }
        Command::Eval { vars, point, f } => {
            let ctx = context(&vars, RingKind::Laurent, &[&f])?;
            let fp = parse_with("f", &f, &ctx, parse_laurent)?;
            let p = parse_point(&point, &ctx)?;
            let v = fp.evaluate(&p)?;
            Ok(Answer::string(posyring::rational::to_string(&v)))
        }
        Command::Proper { ring, vars, ideal } => {
            let ctx = context(&vars, ring.kind(), &[&ideal])?;
            let proper = match ring {
                Ring::Laurent => is_proper(&parse_list(&ideal, &ctx, parse_laurent)?)?,
                Ring::Posy => {
                    let fs = parse_list(&ideal, &ctx, parse)?;
                    !member_posy(&Posynomial::one(ctx.arity()), &fs)?.member
                }
            };
            Ok(Answer::boolean(proper))
        }
        Command::Unit { ring, vars, f } => {
            let ctx = context(&vars, ring.kind(), &[&f])?;
            let unit = match ring {
                Ring::Laurent => parse_with("f", &f, &ctx, parse_laurent)?.is_unit(),
                Ring::Posy => parse_with("f", &f, &ctx, parse)?.is_unit(),
            };
            Ok(Answer::boolean(unit))
        }
        Command::Atomic { bound, f } => {
            let ctx = context(&VarsArg { vars: None }, RingKind::PosyQ, &[&f])?;
            if ctx.arity() != 1 {
                return Err(Error::NotUnivariate(ctx.arity()).into());
            }
            let fp = parse_with("f", &f, &ctx, parse)?;
            atomic_answer(&atomic_status(&fp, bound)?, ctx.variables())
        }
        Command::Oracle { vars, g, ideal, method, lambda, degree } => {
            let ctx = context(&vars, RingKind::Laurent, &[&g, &ideal])?;
            let gp = parse_with("g", &g, &ctx, parse_laurent)?;
            let fs: Vec<LaurentPolynomial> = parse_list(&ideal, &ctx, parse_laurent)?;
            let b = match method {
                OracleMethod::LinearAlgebra => member_by_linear_algebra(&gp, &fs, &OracleConfig::new(lambda, degree)?)?,
                OracleMethod::Euclid => member_by_euclid(&gp, &fs)?,
            };
            Ok(Answer::boolean(b))
        }
    }
}

fn certificate_text(head: &str, scale: Option<u64>, lambda: u32, hs: &[String]) -> String {
    let mut lines = vec![head.to_string()];
    if let Some(s) = scale {
        lines.push(format!("scale = {s}"));
    }
    lines.push(format!("lambda = {lambda}"));
    lines.extend(hs.iter().enumerate().map(|(i, h)| format!("h{} = {h}", i + 1)));
    lines.join("\n")
}

fn atomic_answer(v: &AtomicityVerdict, names: &[String]) -> Outcome<Answer> {
    Ok(match v {
        AtomicityVerdict::Atomic { prime } => Answer {
            text: v.to_string(),
            result: json!("atomic"),
            witness: Some(json!({ "eisenstein_prime": prime.to_string() })),
        },
        AtomicityVerdict::NotAtomic { scale_index, factor, polynomial } => {
            let cofactor =
                v.cofactor().ok_or_else(|| Failure::Internal("factor does not divide the polynomial".to_string()))?;
            let factor = format_with_names(factor, names);
            let polynomial = format_with_names(polynomial, names);
            let cofactor = format_with_names(&cofactor, names);
            Answer {
                text: format!("not atomic (n={scale_index}, factor {factor} of {polynomial})"),
                result: json!("not atomic"),
                witness: Some(json!({
                    "n": scale_index,
                    "factor": factor,
                    "cofactor": cofactor,
                    "polynomial": polynomial,
                })),
            }
        }
        AtomicityVerdict::UnknownUpTo { bound } => {
            Answer { text: v.to_string(), result: json!("unknown"), witness: Some(json!({ "bound": bound })) }
        }
    })
}

/// `v1=a1,v2=a2,...` with every context variable assigned exactly once.
fn parse_point(text: &str, ctx: &RingContext) -> Outcome<Point> {
    let mut coords: Vec<Option<Rational>> = vec![None; ctx.arity()];
    for part in text.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("point assignment '{}' is not of the form v=a", part.trim())))?;
        let name = name.trim();
        let idx = ctx
            .variables()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Failure::Input(format!("point assigns unknown variable '{name}'")))?;
        let value: Rational =
            value.trim().parse().map_err(|_| Failure::Input(format!("'{}' is not a rational number", value.trim())))?;
        if coords[idx].replace(value).is_some() {
            return Err(Failure::Input(format!("variable '{name}' assigned twice")));
        }
    }
    let coords = coords
        .into_iter()
        .zip(ctx.variables())
        .map(|(c, v)| c.ok_or_else(|| Failure::Input(format!("point does not assign '{v}'"))))
        .collect::<Outcome<Vec<_>>>()?;
    Ok(Point::new(coords)?)
}
