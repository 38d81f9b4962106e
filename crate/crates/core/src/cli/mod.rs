//! Command-line front end. Output is assembled in partition order, so it is
//! byte-identical across runs and thread counts.

mod cache;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::golden::Golden;
use crate::habiro::HabiroElement;
use crate::interp::{schur_coeffs, MatrixJson};
use crate::knot::*;
use crate::partitions::Partition;
use crate::qring::LaurentV;
use crate::selftest;

pub use cache::Cache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "qinterp", version, about = "Interpolation polynomials, Habiro-ring arithmetic and gl_N knot expansions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// directory for cached matrices
    #[arg(long, global = true, env = "QINTERP_CACHE")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Args, Debug)]
struct KnotArgs {
    /// builtin knot: unknot or fig8
    #[arg(long, conflicts_with = "input")]
    knot: Option<String>,
    /// knot table JSON
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// C and D matrices over a bound
    Tables {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "3,3")]
        bound: String,
    },
    /// Schur expansion of F_lambda
    Fpoly {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// cyclotomic coefficients a_lambda of a knot
    ExpandKnot {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "2,1")]
        bound: String,
    },
    /// unified invariant of +1 or -1 surgery
    Unified {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
    },
    /// value of a Habiro element at a primitive root of unity
    EvalRoot {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        #[arg(long)]
        order: u64,
    },
    /// expansion of a Habiro element in powers of q - 1
    Taylor {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        #[arg(long)]
        digits: u32,
    },
    /// (q;q)_n divisibility of J_K(P'_lambda) for lambda below a bound
    Divisibility {
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// replays the golden examples and identities
    Selftest {
        /// directory holding replacement golden files
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn partition_arg(s: &str, n: usize) -> Result<Partition> {
    let p = Partition::parse(s)?;
    p.check_len(n)?;
    Ok(p)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("--N must be at least 1".into()));
    }
    Ok(())
}

fn check_trunc(t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::OutOfRange("--trunc must be at least 1".into()));
    }
    Ok(())
}

enum KnotSource {
    Builtin(String),
    File(PathBuf),
}

fn knot_source(k: &KnotArgs) -> Result<KnotSource> {
    match (&k.knot, &k.input) {
        (Some(name), None) => match name.as_str() {
            "unknot" | "fig8" | "figure-eight" | "4_1" => Ok(KnotSource::Builtin(name.clone())),
            _ => Err(Error::InvalidArgument(format!("unknown builtin knot {name:?}"))),
        },
        (None, Some(p)) => Ok(KnotSource::File(p.clone())),
        _ => Err(Error::InvalidArgument("exactly one of --knot and --input is required".into())),
    }
}

fn load_knot(src: &KnotSource, n: usize, bound: &Partition) -> Result<KnotTable> {
    match src {
        KnotSource::Builtin(name) => KnotTable::builtin(name, n, bound),
        KnotSource::File(p) => {
            let t = KnotTable::ingest(p)?;
            if t.nvars() != n {
                return Err(Error::NvarsMismatch(t.nvars(), n));
            }
            Ok(t)
        }
    }
}

fn render_schur(m: &BTreeMap<Partition, LaurentV>) -> String {
    let mut out = String::new();
    for (k, c) in m.iter().rev() {
        let s = c.to_text();
        let (neg, body) = if c.num_terms() == 1 {
            match s.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, s),
            }
        } else if c.leading_is_negative() {
            (true, format!("({})", (-c).to_text()))
        } else {
            (false, format!("({s})"))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k.is_empty() {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&format!("s_{k}"));
        } else {
            out.push_str(&format!("{body} s_{k}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Ctx {
    format: Format,
    cache: Cache,
}

/// Result of a subcommand: a JSON value and its text rendering.
struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn new<T: Serialize>(v: &T, text: String) -> Result<Report> {
        Ok(Report { json: serde_json::to_value(v)?, text, ok: true })
    }
}

fn cmd_tables(ctx: &Ctx, n: usize, bound: &str) -> Result<Report> {
    check_n(n)?;
    let b = partition_arg(bound, n)?;
    let (c, d) = ctx.cache.matrices(n, &b)?;
    let mut text = format!("C = (c[inner][outer]), N = {n}, bound {b}\n");
    for ((x, y), v) in &c.entries {
        text.push_str(&format!("c({x}, {y}) = {}\n", v.to_text()));
    }
    text.push_str("\nD = C^-1 = (d[inner][outer])\n");
    for ((x, y), v) in &d.entries {
        text.push_str(&format!("d({x}, {y}) = {}\n", v.to_text()));
    }
    let v = json!({"N": n, "bound": b, "C": MatrixJson::from(&c.to_rational()), "D": MatrixJson::from(&d)});
    Report::new(&v, text)
}

fn cmd_fpoly(n: usize, lambda: &str) -> Result<Report> {
    check_n(n)?;
    let l = partition_arg(lambda, n)?;
    let s = schur_coeffs(&l, n)?;
    let text = format!("F_{l} = {}\n", render_schur(&s));
    let keyed: BTreeMap<String, &LaurentV> = s.iter().map(|(k, v)| (k.key(), v)).collect();
    Report::new(&json!({"N": n, "lambda": l, "schur": keyed}), text)
}

fn cmd_expand(ctx: &Ctx, n: usize, knot: &KnotArgs, bound: &str) -> Result<Report> {
    check_n(n)?;
    let src = knot_source(knot)?;
    let b = partition_arg(bound, n)?;
    let k = load_knot(&src, n, &b)?;
    let (_, d) = ctx.cache.matrices(n, &b)?;
    let a = a_coeffs_from_matrix(&k, &d)?;
    let mut text = format!("knot {}, N = {n}, bound {b}\n", k.name());
    for (l, c) in &a.coeffs {
        text.push_str(&format!("a_{l} = {}\n", c.to_text()));
    }
    let v = json!({"knot": k.name(), "provenance": k.provenance(), "bound": b, "expansion": a});
    Report::new(&v, text)
}

/// `--input` for the Habiro commands may also hold a `{"trunc", "rep"}` element.
fn habiro_input(n: usize, knot: &KnotArgs, sign: &str, trunc: u32) -> Result<(HabiroElement, Value)> {
    check_n(n)?;
    check_trunc(trunc)?;
    let s = Sign::parse(sign)?;
    let src = knot_source(knot)?;
    if let KnotSource::File(p) = &src {
        let text = std::fs::read_to_string(p)?;
        let raw: Value = serde_json::from_str(&text)?;
        if raw.get("trunc").is_some() {
            let h: HabiroElement = serde_json::from_value(raw)?;
            let reduced = h.reduce_to(trunc.min(h.trunc()))?;
            return Ok((reduced, json!({"source": p.display().to_string()})));
        }
    }
    let k = load_knot(&src, n, &Partition::empty())?;
    let u = unified_invariant(&k, s, trunc)?;
    Ok((u.value.clone(), json!({"knot": k.name(), "sign": s, "cutoff": u.cutoff, "certificate": u.certificate})))
}

fn cmd_unified(n: usize, knot: &KnotArgs, sign: &str, trunc: u32) -> Result<Report> {
    check_n(n)?;
    check_trunc(trunc)?;
    let s = Sign::parse(sign)?;
    let src = knot_source(knot)?;
    let k = load_knot(&src, n, &Partition::empty())?;
    let u = unified_invariant(&k, s, trunc)?;
    let text = format!(
        "knot {}, N = {n}, sign {}, T = {trunc}\nsummed {} colors below size {}\nI = {}  mod (q;q)_{trunc}\n",
        k.name(),
        sign_text(s),
        u.terms,
        u.cutoff,
        u.value.rep().to_text()
    );
    Report::new(&u, text)
}

fn sign_text(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn cmd_eval_root(n: usize, knot: &KnotArgs, sign: &str, trunc: u32, order: u64) -> Result<Report> {
    if order == 0 || order > trunc as u64 {
        return Err(Error::OutOfRange(format!("--order must lie in 1..={trunc}")));
    }
    let (h, meta) = habiro_input(n, knot, sign, trunc)?;
    if order > h.trunc() as u64 {
        return Err(Error::OutOfRange(format!("--order must lie in 1..={}", h.trunc())));
    }
    let r = h.eval_root(order)?;
    let text = format!("value at a primitive {order}-th root of unity: {}\n", r.to_laurent().to_text());
    Report::new(&json!({"input": meta, "trunc": h.trunc(), "order": order, "value": r}), text)
}

fn cmd_taylor(n: usize, knot: &KnotArgs, sign: &str, trunc: u32, digits: u32) -> Result<Report> {
    if digits + 1 > trunc {
        return Err(Error::OutOfRange(format!("--digits must be below --trunc {trunc}")));
    }
    let (h, meta) = habiro_input(n, knot, sign, trunc)?;
    if digits + 1 > h.trunc() {
        return Err(Error::OutOfRange(format!("--digits must be below {}", h.trunc())));
    }
    let c = h.taylor_at_1(digits)?;
    let strs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    let text = format!("coefficients of (q-1)^0..(q-1)^{digits}: {}\n", strs.join(" "));
    Report::new(&json!({"input": meta, "trunc": h.trunc(), "digits": digits, "coeffs": strs}), text)
}

#[derive(Serialize)]
struct DivisibilityRow {
    #[serde(flatten)]
    pprime: PPrimeValue,
    /// `(q;q)_n` exponent of the weighted term of the surgery series
    weighted_divisibility: Option<u32>,
}

fn cmd_divisibility(ctx: &Ctx, n: usize, knot: &KnotArgs, lambda: &str, sign: &str) -> Result<Report> {
    check_n(n)?;
    let s = Sign::parse(sign)?;
    let src = knot_source(knot)?;
    let b = partition_arg(lambda, n)?;
    let k = load_knot(&src, n, &b)?;
    let (_, d) = ctx.cache.matrices(n, &b)?;
    let a = a_coeffs_from_matrix(&k, &d)?;
    let terms = literal_series_terms(&a, s, &b)?;
    let mut rows = Vec::new();
    let mut text = format!("knot {}, N = {n}, sign {}\n", k.name(), sign_text(s));
    for t in terms {
        let p = knot_pprime_value(&a, &t.lambda)?;
        let show = |x: Option<u32>| x.map(|m| m.to_string()).unwrap_or_else(|| "inf".into());
        text.push_str(&format!(
            "{}: J(P') = {}  (q;q)-exponent {}  weighted {}\n",
            t.lambda,
            p.value.to_text(),
            show(p.divisibility),
            show(t.divisibility)
        ));
        rows.push(DivisibilityRow { pprime: p, weighted_divisibility: t.divisibility });
    }
    Report::new(&json!({"knot": k.name(), "N": n, "sign": s, "lambda": b, "terms": rows}), text)
}

fn cmd_selftest(input: &Option<PathBuf>) -> Result<Report> {
    let g = match input {
        Some(dir) => Golden::load(dir)?,
        None => Golden::builtin(),
    };
    let results = selftest::run_all(&g);
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!("{} {:>2} {} -- {}\n", if r.passed { "PASS" } else { "FAIL" }, r.id, r.title, r.detail));
    }
    let ok = results.iter().all(|r| r.passed);
    let mut rep = Report::new(&json!({"passed": ok, "criteria": results}), text)?;
    rep.ok = ok;
    Ok(rep)
}

fn dispatch(cli: &Cli, ctx: &Ctx) -> Result<Report> {
    match &cli.command {
        Command::Tables { n, bound } => cmd_tables(ctx, *n, bound),
        Command::Fpoly { n, lambda } => cmd_fpoly(*n, lambda),
        Command::ExpandKnot { n, knot, bound } => cmd_expand(ctx, *n, knot, bound),
        Command::Unified { n, knot, sign, trunc } => cmd_unified(*n, knot, sign, *trunc),
        Command::EvalRoot { n, knot, sign, trunc, order } => cmd_eval_root(*n, knot, sign, *trunc, *order),
        Command::Taylor { n, knot, sign, trunc, digits } => cmd_taylor(*n, knot, sign, *trunc, *digits),
        Command::Divisibility { n, knot, lambda, sign } => cmd_divisibility(ctx, *n, knot, lambda, sign),
        Command::Selftest { input } => cmd_selftest(input),
    }
}

/// Exit status: 0 on success, 1 for integrity failures (and failed
/// selftests), 2 for usage and input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let cache = if cli.no_cache { Cache::disabled() } else { Cache::new(cli.cache_dir.clone()) };
    let ctx = Ctx { format: cli.format, cache };
    match dispatch(&cli, &ctx) {
        Ok(rep) => {
            let _ = match ctx.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rep.json).expect("serializable")),
                Format::Text => write!(out, "{}", rep.text),
            };
            if rep.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let obj = json!({"error": e.kind(), "message": e.to_string()});
            let _ = match ctx.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&obj).expect("serializable")),
                Format::Text => writeln!(err, "error: {e}"),
            };
            if e.is_integrity_failure() {
                1
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qinterp").chain(args.iter().copied()).chain(["--no-cache"]);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn fpoly_text() {
        let (code, out) = run_str(&["fpoly", "--N", "2", "--lambda", "2,1", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            "F_[2,1] = q^3 s_[2,1] - q^3 s_[2] - (q^3 + q^2 + q) s_[1,1] + (q^3 + q^2 + q) s_[1] - (q^2 + q)"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["fpoly", "--lambda", "1,1,1"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["unified", "--knot", "fig8", "--trunc", "2"]).0, 1);
        assert_eq!(run_str(&["unified", "--knot", "fig8", "--input", "x.json"]).0, 2);
        assert_eq!(run_str(&["eval-root", "--knot", "unknot", "--trunc", "3", "--order", "4"]).0, 2);
        let (code, out) = run_str(&["unified", "--knot", "unknot", "--sign", "-", "--trunc", "4"]);
        assert_eq!(code, 0, "{out}");
    }
}
