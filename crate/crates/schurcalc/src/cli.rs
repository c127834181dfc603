use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use schurcalc_core::balmer::{classify, enumerate_prime_truncations, ideal_closure, minimal_rectangles};
use schurcalc_core::characters::{induction_multiplicity, kronecker_multiplicity, mn_character};
use schurcalc_core::lr::{lr_coefficient, rectangular_lr_support, tensor_square_expansion};
use schurcalc_core::schur::{hook_vanishing_test, minimal_annihilating_rectangle, schur_of_object, schur_vanishes};
use schurcalc_core::{
    CharacterTables, Classification, CycleType, Error, GradedObject, IdealTruncation, Partition,
    Result, VerificationReport,
};

use crate::json;
use crate::suites::{resolve, run_suites, SuiteBounds};
use crate::tables::SharedTables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "schurcalc", version, about = "Partitions, Schur functors and tensor ideals, computed exactly")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transpose a partition.
    Transpose {
        #[arg(long)]
        lambda: Partition,
    },
    /// Specht dimension of a partition, or superdimension of a graded object.
    Dim(DimArgs),
    /// A character value, or a whole character table with --n.
    Char(CharArgs),
    /// Littlewood-Richardson coefficient, or the full product with no --outer.
    Lr(LrArgs),
    /// Kronecker multiplicity of V_lambda in V_mu ⊗ V_nu.
    Kron {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Graded dimensions of S_lambda(X).
    Schur {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        object: GradedObject,
    },
    /// Whether S_lambda kills 1^p ⊕ Σ1^q, or the minimal rectangle killing --object.
    Hook(HookArgs),
    /// Support of the product of the rectangles (p)^q and (r)^s.
    RectLr {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Every upward-closed set of partitions of size at most N passing the
    /// primality test, with its classification.
    Primes {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Classify an upward-closed set of partitions.
    Classify(ClassifyArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DimArgs {
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long, allow_hyphen_values = true)]
    object: Option<GradedObject>,
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long, conflicts_with_all = ["lambda", "rho"])]
    n: Option<usize>,
    #[arg(long, requires = "rho")]
    lambda: Option<Partition>,
    /// Cycle type of the conjugacy class.
    #[arg(long, requires = "lambda")]
    rho: Option<Partition>,
}

#[derive(Args, Debug)]
struct LrArgs {
    #[arg(long)]
    outer: Option<Partition>,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    /// Compute the outer coefficient from characters instead of tableaux.
    #[arg(long, requires = "outer")]
    characters: bool,
}

#[derive(Args, Debug)]
struct HookArgs {
    #[arg(long, requires = "p", requires = "q", conflicts_with = "object")]
    lambda: Option<Partition>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    object: Option<GradedObject>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["members", "generators", "file"])))]
struct ClassifyArgs {
    /// Members as partitions separated by ';', e.g. "2,1;3,1;2,2;2,1,1".
    #[arg(long, requires = "max_size")]
    members: Option<String>,
    /// Generators whose upward closure is classified.
    #[arg(long, requires = "max_size")]
    generators: Option<String>,
    /// JSON file holding {"max_size": N, "members": [[...], ...]}.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long = "max-size")]
    max_size: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Size bound for the lr-oracles and inclusions suites.
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// Write the JSON reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn emit(out: &mut dyn Write, as_json: bool, value: Value, text: String) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{value}")
    } else {
        writeln!(out, "{text}")
    }
}

fn parse_list(text: &str) -> Result<Vec<Partition>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn show_members(s: &IdealTruncation) -> String {
    let members: Vec<String> = s.sorted_members().iter().map(|m| format!("({m})")).collect();
    format!("{{{}}}", members.join(" "))
}

fn classification_text(c: &Classification) -> String {
    match c {
        Classification::Zero => "zero".into(),
        Classification::Prime(label) => format!("prime {label}"),
        Classification::NotPrime(Some(w)) => format!("not prime: ({}) and ({}) lie outside, their product inside", w.mu, w.nu),
        Classification::NotPrime(None) => "not prime: passes the truncated test but matches no P(p,q)".into(),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let j = cli.json;
    match &cli.command {
        Command::Transpose { lambda } => {
            let t = lambda.transpose();
            emit(out, j, json::partition(&t), t.to_string())?;
        }
        Command::Dim(DimArgs { lambda: Some(lambda), .. }) => {
            let d = lambda.specht_dim()?;
            emit(out, j, json!(d), d.to_string())?;
        }
        Command::Dim(DimArgs { object, .. }) => {
            let x = object.as_ref().expect("clap group requires one");
            let sdim = x.super_dimension();
            emit(
                out,
                j,
                json!({ "super_dimension": sdim, "even": x.even_total(), "odd": x.odd_total() }),
                sdim.to_string(),
            )?;
        }
        Command::Char(args) => char_command(args, j, out)?,
        Command::Lr(args) => match &args.outer {
            Some(outer) => {
                let c = if args.characters {
                    induction_multiplicity(&SharedTables::new(), outer, &[args.mu.clone(), args.nu.clone()])?
                } else {
                    lr_coefficient(outer, &args.mu, &args.nu)
                };
                emit(out, j, json!(c), c.to_string())?;
            }
            None => {
                let e = tensor_square_expansion(&args.mu, &args.nu);
                let lines: Vec<String> = e.iter().map(|(l, m)| format!("{m} {l}")).collect();
                emit(out, j, json::expansion(&e), lines.join("\n"))?;
            }
        },
        Command::Kron { lambda, mu, nu } => {
            let g = kronecker_multiplicity(&SharedTables::new(), lambda, mu, nu)?;
            emit(out, j, json!(g), g.to_string())?;
        }
        Command::Schur { lambda, object } => {
            let s = schur_of_object(lambda, object)?;
            emit(out, j, json::graded(&s), s.to_string())?;
        }
        Command::Hook(args) => match (&args.lambda, args.p, args.q, &args.object) {
            (Some(lambda), Some(p), Some(q), None) => {
                let v = hook_vanishing_test(lambda, p, q);
                emit(out, j, json!({ "vanishes": v }), v.to_string())?;
            }
            (Some(lambda), None, None, Some(x)) => {
                let v = schur_vanishes(lambda, x)?;
                emit(out, j, json!({ "vanishes": v }), v.to_string())?;
            }
            (None, None, None, Some(x)) => {
                let (cols, rows) = minimal_annihilating_rectangle(x)?;
                let rect = Partition::rectangle(cols, rows);
                emit(
                    out,
                    j,
                    json!({ "rectangle": json::partition(&rect), "columns": cols, "rows": rows }),
                    rect.to_string(),
                )?;
            }
            _ => {
                return Err(Error::Parse("hook needs --lambda with --p and --q, or --object".into()).into())
            }
        },
        Command::RectLr { p, q, r, s } => {
            for (name, v) in [("p", p), ("q", q), ("r", r), ("s", s)] {
                if *v == 0 {
                    return Err(Error::Parse(format!("--{name} must be positive")).into());
                }
            }
            let support = rectangular_lr_support(*p, *q, *r, *s);
            let lines: Vec<String> = support.iter().map(Partition::to_string).collect();
            emit(
                out,
                j,
                Value::Array(support.iter().map(json::partition).collect()),
                lines.join("\n"),
            )?;
        }
        Command::Primes { n } => {
            let found = enumerate_prime_truncations(*n)?;
            let mut values = Vec::new();
            let mut lines = Vec::new();
            for s in &found {
                let c = classify(s)?;
                values.push(json!({ "truncation": json::truncation(s), "classification": json::classification(&c) }));
                lines.push(format!("{}: {}", classification_text(&c), show_members(s)));
            }
            emit(out, j, Value::Array(values), lines.join("\n"))?;
        }
        Command::Classify(args) => {
            let s = match (&args.members, &args.generators, &args.file) {
                (Some(m), _, _) => IdealTruncation::new(args.max_size.expect("required"), parse_list(m)?)?,
                (_, Some(g), _) => ideal_closure(&parse_list(g)?, args.max_size.expect("required"))?,
                (_, _, Some(path)) => {
                    let text = std::fs::read_to_string(path)?;
                    let value: Value = serde_json::from_str(&text)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    json::truncation_from(&value)?
                }
                _ => unreachable!("clap group requires one source"),
            };
            let c = classify(&s)?;
            let mut value = json::classification(&c);
            let mut text = classification_text(&c);
            if !s.is_empty() {
                let rects = minimal_rectangles(&s)?;
                value["minimal_rectangles"] = Value::Array(rects.iter().map(json::partition).collect());
                let shown: Vec<String> = rects.iter().map(|r| format!("({r})")).collect();
                text.push_str(&format!("\nminimal rectangles: {}", shown.join(" ")));
            }
            emit(out, j, value, text)?;
        }
        Command::Verify(args) => return verify_command(args, j, out),
    }
    Ok(EXIT_OK)
}

fn char_command(args: &CharArgs, j: bool, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    if let Some(n) = args.n {
        let tables = SharedTables::new();
        let t = tables.table(n)?;
        let mut text = String::from("lambda");
        for c in t.classes() {
            text.push_str(&format!("\t{}", c.partition()));
        }
        for l in t.partitions() {
            text.push_str(&format!("\n{l}"));
            for v in t.row(l).expect("row of table") {
                text.push_str(&format!("\t{v}"));
            }
        }
        emit(out, j, json::character_table(t), text)?;
        return Ok(());
    }
    let (Some(lambda), Some(rho)) = (&args.lambda, &args.rho) else {
        return Err(Error::Parse("char needs --n, or --lambda with --rho".into()).into());
    };
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: rho.size(),
        }
        .into());
    }
    let v = mn_character(lambda, &CycleType::new(rho.clone()))?;
    emit(out, j, json!(v), v.to_string())?;
    Ok(())
}

fn verify_command(args: &VerifyArgs, j: bool, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let names = resolve(&args.suite)?;
    let mut bounds = SuiteBounds::default();
    if let Some(n) = args.max_n {
        bounds = bounds.with_max_n(n);
    }
    let reports = run_suites(&names, &bounds)?;
    let passed = reports.iter().all(|r| r.passed());
    let value = Value::Array(reports.iter().map(json::report).collect());
    let pretty = serde_json::to_string_pretty(&value).expect("serializable");
    match &args.out {
        Some(path) => {
            std::fs::write(path, format!("{pretty}\n"))?;
            let lines: Vec<String> = reports
                .iter()
                .map(|r| {
                    format!(
                        "{} {} checked={} counterexamples={} flagged={}",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.suite,
                        r.checks,
                        r.counterexamples.len(),
                        r.flagged.len()
                    )
                })
                .collect();
            let summary = json!({ "passed": passed, "out": path.display().to_string() });
            emit(out, j, summary, lines.join("\n"))?;
        }
        None => writeln!(out, "{pretty}")?,
    }
    Ok(exit_code(&reports))
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}
