//! Command line front end used by the `rhombic` binary.
//!
//! Every object is read in the same text format its `Display` writes, from
//! a file or standard input.  Exit codes: 0 on success, 1 when the input is
//! not a valid object or a map does not apply to it, 2 on usage errors.

use std::fmt;
use std::fs;
use std::io::{BufRead, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::assemblee::{
    foata, foata_inv, format_cycles, format_labels, normalize_cycles, parse_cycles, Assemblee,
    CrossingRule, SignedPerm,
};
use crate::bijections::{
    arrow_zigzag, assemblee_of_cycles, fusion_exchange, fusion_exchange_inverse, insertion,
    insertion_inverse, zeta, zeta_inverse, Cycles,
};
use crate::laguerre::{
    mlh_to_sp, plain_to_star, rho, rho_inverse, sp_to_mlh, star_to_plain, Mlh, MlhStar,
};
use crate::render::{self, Format};
use crate::shapes::{parse_labels, Label};
use crate::tableaux::{PackedKind, Rat};
use crate::verify::{self, Options, VerifyError};

#[derive(Debug, Parser)]
#[command(
    name = "rhombic",
    version,
    about = "Rhombic alternative tableaux, assemblées, signed permutations and Laguerre histories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a bijection to an object; the direction follows the input kind.
    Convert(ConvertArgs),
    /// List every object of a kind and size.
    Enumerate(EnumerateArgs),
    /// Check identities by exhaustive enumeration.
    Verify(VerifyArgs),
    /// Draw an object as SVG, TikZ or ASCII.
    Render(RenderArgs),
    /// Print the statistics of an object as JSON.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    /// Kind of the input object; guessed from its text when absent.
    #[arg(long, value_enum)]
    pub from: Option<Kind>,
    /// Treat every non-empty line as a separate object.
    #[arg(long)]
    pub each: bool,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub via: Via,
    /// Required kind of the result.
    #[arg(long, value_enum)]
    pub to: Option<Kind>,
    /// Apply the inverse of a map from tableaux to tableaux.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// One of rat, rat_plus, at, at_plus, assemblee, signed_sp, signed_as, mlh, mlh_star.
    pub kind: String,
    pub n: usize,
    #[arg(default_value_t = 0)]
    pub r: usize,
    /// Print the statistics of each object after it.
    #[arg(long)]
    pub stats: bool,
    /// Print only the number of objects.
    #[arg(long)]
    pub count: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity to check; repeat for several.  All identities when absent.
    #[arg(long = "identity")]
    pub identities: Vec<String>,
    /// Largest size to check, overriding each identity's default.
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = RuleArg::Standard)]
    pub crossing_rule: RuleArg,
    /// List the identities and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "svg")]
    pub format: String,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Standard,
    StrictUpper,
}

/// Kinds of objects in text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Rat,
    Assemblee,
    Signed,
    Word,
    Cycles,
    Mlh,
    MlhStar,
    Parts,
    RhoPair,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Insertion,
    Zigzag,
    Fe,
    Zeta,
    Extend,
    Flatten,
    Split,
    Straighten,
    Rho,
    Sp2mlh,
    Star2plain,
    Foata,
    Iota,
    Epsword,
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

/// Failure of a command, split by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

fn domain(e: impl fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// A parsed object of any kind.
#[derive(Debug, Clone)]
pub enum Value {
    Rat(Rat),
    Assemblee(Assemblee),
    Signed(SignedPerm),
    Word(Vec<Label>),
    Cycles(Cycles),
    Mlh(Mlh),
    MlhStar(MlhStar),
    Parts(Vec<(Vec<Label>, Rat)>),
    RhoPair(SignedPerm, Vec<u32>),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Rat(_) => Kind::Rat,
            Value::Assemblee(_) => Kind::Assemblee,
            Value::Signed(_) => Kind::Signed,
            Value::Word(_) => Kind::Word,
            Value::Cycles(_) => Kind::Cycles,
            Value::Mlh(_) => Kind::Mlh,
            Value::MlhStar(_) => Kind::MlhStar,
            Value::Parts(_) => Kind::Parts,
            Value::RhoPair(..) => Kind::RhoPair,
        }
    }

    /// Parses `text` as `kind`, or guesses the kind from the text.
    pub fn parse(text: &str, kind: Option<Kind>) -> Result<Value, CliError> {
        let text = text.trim();
        let kind = kind.unwrap_or_else(|| guess_kind(text));
        Ok(match kind {
            Kind::Rat => Value::Rat(text.parse().map_err(domain)?),
            Kind::Assemblee => Value::Assemblee(text.parse().map_err(domain)?),
            Kind::Signed => Value::Signed(text.parse().map_err(domain)?),
            Kind::Word => Value::Word(parse_labels(text).map_err(domain)?),
            Kind::Cycles => Value::Cycles(parse_cycles(text).map_err(domain)?),
            Kind::Mlh => Value::Mlh(text.parse().map_err(domain)?),
            Kind::MlhStar => Value::MlhStar(text.parse().map_err(domain)?),
            Kind::RhoPair => {
                let (tau, sigma) = text.split_once('|').ok_or_else(|| {
                    CliError::Domain("expected `signed permutation | permutation`".into())
                })?;
                let sigma = sigma
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| CliError::Domain(format!("bad entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Value::RhoPair(tau.parse().map_err(domain)?, sigma)
            }
            Kind::Parts => return Err(CliError::Usage("split output cannot be read back".into())),
        })
    }
}

fn guess_kind(text: &str) -> Kind {
    let first = text.split_whitespace().next().unwrap_or("");
    if text.starts_with("shape") {
        Kind::Rat
    } else if text.starts_with('[') {
        Kind::Assemblee
    } else if text.starts_with('(') {
        Kind::Cycles
    } else if text.contains('|') {
        Kind::RhoPair
    } else if first.starts_with(['U', 'H', 'h', 'D']) {
        // Plain histories label every step, including up steps.
        let plain = text.split_whitespace().all(|t| {
            t.contains(':') && !t.contains(',') && !t.ends_with("!a") && !t.ends_with("!d")
        });
        if plain {
            Kind::Mlh
        } else {
            Kind::MlhStar
        }
    } else if text.split_whitespace().any(|t| t.starts_with('e')) {
        Kind::Word
    } else {
        Kind::Signed
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(t) => f.write_str(&t.to_line()),
            Value::Assemblee(a) => write!(f, "{a}"),
            Value::Signed(s) => write!(f, "{s}"),
            Value::Word(w) => f.write_str(&format_labels(w)),
            Value::Cycles(c) => f.write_str(&format_cycles(c)),
            Value::Mlh(h) => write!(f, "{h}"),
            Value::MlhStar(h) => write!(f, "{h}"),
            Value::Parts(parts) => {
                let lines: Vec<String> = parts
                    .iter()
                    .map(|(l, t)| format!("class: {} | {}", format_labels(l), t.to_line()))
                    .collect();
                f.write_str(&lines.join("\n"))
            }
            Value::RhoPair(tau, sigma) => {
                let s: Vec<String> = sigma.iter().map(u32::to_string).collect();
                write!(f, "{tau} | {}", s.join(" "))
            }
        }
    }
}

/// Reinterprets a positive permutation as a word for maps that expect one.
fn coerce(v: Value, via: Via) -> Value {
    match (v, via) {
        (Value::Signed(s), Via::Foata | Via::Iota | Via::Epsword) if s.neg().is_empty() => {
            Value::Word(s.values().iter().map(|&x| Label::Num(x as u32)).collect())
        }
        (v, _) => v,
    }
}

/// Applies `via` to `v`; the direction is chosen by the kind of `v`.
pub fn convert(v: Value, via: Via, inverse: bool) -> Result<Value, CliError> {
    let self_map = matches!(via, Via::Extend | Via::Flatten | Via::Straighten);
    if inverse && !self_map {
        return Err(CliError::Usage(
            "--inverse applies only to extend, flatten and straighten".into(),
        ));
    }
    let v = coerce(v, via);
    let kind = v.kind();
    Ok(match (via, v) {
        (Via::Insertion, Value::Rat(t)) => Value::Assemblee(insertion(&t).map_err(domain)?),
        (Via::Insertion, Value::Assemblee(p)) => Value::Rat(insertion_inverse(&p).map_err(domain)?),
        (Via::Zigzag, Value::Rat(t)) => Value::Cycles(arrow_zigzag(&t).map_err(domain)?),
        (Via::Zigzag, Value::Cycles(c)) => {
            let pi = assemblee_of_cycles(&c).map_err(domain)?;
            Value::Rat(insertion_inverse(&pi).map_err(domain)?)
        }
        (Via::Fe, Value::Assemblee(p)) => Value::Rat(fusion_exchange(&p).map_err(domain)?),
        (Via::Fe, Value::Rat(t)) => Value::Assemblee(fusion_exchange_inverse(&t).map_err(domain)?),
        (Via::Zeta, Value::Rat(t)) => Value::Signed(zeta(&t).map_err(domain)?),
        (Via::Zeta, Value::Signed(s)) => Value::Rat(zeta_inverse(&s).map_err(domain)?),
        (Via::Extend, Value::Rat(t)) => {
            Value::Rat(if inverse { t.restrict() } else { t.extend() }.map_err(domain)?)
        }
        (Via::Flatten, Value::Rat(t)) => {
            Value::Rat(if inverse { t.unflatten() } else { t.flatten() }.map_err(domain)?)
        }
        (Via::Straighten, Value::Rat(t)) => Value::Rat(
            if inverse {
                t.unstraighten()
            } else {
                t.straighten()
            }
            .map_err(domain)?,
        ),
        (Via::Split, Value::Rat(t)) => Value::Parts(t.split()),
        (Via::Rho, Value::Signed(s)) => {
            let (tau, sigma) = rho(&s).map_err(domain)?;
            Value::RhoPair(tau, sigma)
        }
        (Via::Rho, Value::RhoPair(tau, sigma)) => {
            Value::Signed(rho_inverse(&tau, &sigma).map_err(domain)?)
        }
        (Via::Sp2mlh, Value::Signed(s)) => Value::MlhStar(sp_to_mlh(&s).map_err(domain)?),
        (Via::Sp2mlh, Value::MlhStar(h)) => Value::Signed(mlh_to_sp(&h).map_err(domain)?),
        (Via::Star2plain, Value::MlhStar(h)) => Value::Mlh(star_to_plain(&h)),
        (Via::Star2plain, Value::Mlh(h)) => Value::MlhStar(plain_to_star(&h)),
        (Via::Foata, Value::Word(w)) => Value::Cycles(normalize_cycles(&foata(&w))),
        (Via::Foata, Value::Cycles(c)) => Value::Word(foata_inv(&c)),
        (Via::Iota, Value::Assemblee(p)) => Value::Word(p.iota().map_err(domain)?),
        (Via::Iota, Value::Word(w)) => Value::Assemblee(Assemblee::from_iota(&w).map_err(domain)?),
        (Via::Epsword, Value::Assemblee(p)) => Value::Word(p.eps_word().map_err(domain)?),
        (Via::Epsword, Value::Word(w)) => {
            Value::Assemblee(Assemblee::from_eps_word(&w).map_err(domain)?)
        }
        (via, _) => {
            return Err(CliError::Usage(format!(
                "--via {via} does not accept input of kind {kind}"
            )))
        }
    })
}

/// Statistics of an object as JSON.
pub fn stats(v: &Value) -> Json {
    let signed = |s: &SignedPerm| {
        let c = s.crossings();
        json!({
            "stats": s.stats(),
            "crossings": c,
            "is_assemblee": s.is_assemblee(),
        })
    };
    match v {
        Value::Rat(t) => {
            let (cols, diags, rows) = t.word().counts();
            let packed = match t.packed_kind() {
                PackedKind::Horizontal => "horizontal",
                PackedKind::Vertical => "vertical",
                PackedKind::Diagonal => "diagonal",
                PackedKind::NotPacked => "none",
            };
            json!({
                "kind": "rat",
                "size": t.len(),
                "columns": cols,
                "diagonals": diags,
                "rows": rows,
                "arrows": t.arrow_count(),
                "extended": t.is_extended(),
                "packed": packed,
                "stats": t.stats(),
            })
        }
        Value::Assemblee(p) => {
            let mut j = signed(&p.to_signed());
            j["kind"] = json!("assemblee");
            j["blocks"] = json!(p.num_blocks());
            j
        }
        Value::Signed(s) => {
            let mut j = signed(s);
            j["kind"] = json!("signed");
            j
        }
        Value::Mlh(h) => json!({
            "kind": "mlh",
            "length": h.len(),
            "marks": h.marks(),
            "weight": h.weight_exponent(),
            "heights": h.heights(),
        }),
        Value::MlhStar(h) => json!({
            "kind": "mlh-star",
            "length": h.len(),
            "marks": h.marks(),
            "weight": h.weight_exponent(),
            "heights": h.heights(),
        }),
        Value::Word(w) => json!({
            "kind": "word",
            "length": w.len(),
            "eps": w.iter().filter(|l| l.is_eps()).count(),
            "cycles": normalize_cycles(&foata(w)).len(),
        }),
        Value::Cycles(c) => json!({
            "kind": "cycles",
            "cycles": c.len(),
            "length": c.iter().map(Vec::len).sum::<usize>(),
        }),
        Value::Parts(parts) => json!({ "kind": "parts", "classes": parts.len() }),
        Value::RhoPair(tau, sigma) => json!({
            "kind": "rho-pair",
            "signed": signed(tau),
            "inversions": crate::laguerre::inversions(sigma),
        }),
    }
}

/// Draws an object; assemblées are drawn through their signed form.
pub fn render_value(v: &Value, format: Format) -> Result<String, CliError> {
    let r = match v {
        Value::Rat(t) => render::render_rat(t, format),
        Value::Signed(s) => render::render_signed(s, format),
        Value::Assemblee(p) => render::render_signed(&p.to_signed(), format),
        Value::Mlh(h) => render::render_mlh(h, format),
        Value::MlhStar(h) => render::render_mlh_star(h, format),
        other => {
            return Err(CliError::Usage(format!(
                "cannot render input of kind {}",
                other.kind()
            )))
        }
    };
    r.map_err(|e| CliError::Usage(e.to_string()))
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read input: {e}")))?;
            Ok(s)
        }
    }
}

/// Splits the input into objects: one per line with `--each`, else one.
/// Lines starting with `#` are comments.
fn objects(text: &str, each: bool) -> Vec<String> {
    let lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    if each {
        lines.map(str::to_string).collect()
    } else {
        let joined = lines.collect::<Vec<_>>().join("\n");
        if joined.is_empty() {
            Vec::new()
        } else {
            vec![joined]
        }
    }
}

/// Runs `f` on every input object, printing results and collecting errors.
/// Usage errors stop immediately; domain errors are reported per object.
fn for_each_object(
    input: &InputArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
    mut f: impl FnMut(Value) -> Result<String, CliError>,
) -> Result<(), CliError> {
    let text = read_input(input.input.as_ref(), stdin)?;
    let items = objects(&text, input.each);
    if items.is_empty() && !input.each {
        return Err(CliError::Usage("no input object".into()));
    }
    let mut failed = false;
    for (k, item) in items.iter().enumerate() {
        match Value::parse(item, input.from).and_then(&mut f) {
            Ok(s) => {
                let _ = writeln!(out, "{}", s.trim_end_matches('\n'));
            }
            Err(e @ CliError::Usage(_)) => return Err(e),
            Err(CliError::Domain(m)) => {
                let m = if input.each {
                    format!("line {}: {m}", k + 1)
                } else {
                    m
                };
                let _ = writeln!(err, "error: {m}");
                failed = true;
            }
        }
    }
    // Messages were printed per object; the empty message marks that.
    if failed {
        Err(CliError::Domain(String::new()))
    } else {
        Ok(())
    }
}

fn cmd_convert(
    a: &ConvertArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    for_each_object(&a.input, stdin, out, err, |v| {
        let input = v.to_string();
        let image = convert(v, a.via, a.inverse)?;
        if let Some(to) = a.to {
            if image.kind() != to {
                return Err(CliError::Usage(format!(
                    "--via {} produces {}, not {to}",
                    a.via,
                    image.kind()
                )));
            }
        }
        Ok(if a.json {
            json!({ "input": input, "via": a.via.to_string(), "kind": image.kind().to_string(), "output": image.to_string() })
                .to_string()
        } else {
            image.to_string()
        })
    })
}

fn cmd_render(
    a: &RenderArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let format: Format = a
        .format
        .parse()
        .map_err(|e: render::RenderError| CliError::Usage(e.to_string()))?;
    for_each_object(&a.input, stdin, out, err, |v| render_value(&v, format))
}

fn cmd_stats(
    a: &StatsArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    for_each_object(&a.input, stdin, out, err, |v| Ok(stats(&v).to_string()))
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::UnknownIdentity(_) | VerifyError::UnknownKind(_) => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Domain(e.to_string()),
    }
}

fn object_stats(o: &verify::Object) -> Json {
    let v = match o.clone() {
        verify::Object::Rat(t) => Value::Rat(t),
        verify::Object::Assemblee(a) => Value::Assemblee(a),
        verify::Object::Signed(s) => Value::Signed(s),
        verify::Object::Mlh(h) => Value::Mlh(h),
        verify::Object::MlhStar(h) => Value::MlhStar(h),
    };
    stats(&v)
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let objs = verify::enumerate_objects(&a.kind, a.n, a.r).map_err(verify_error)?;
    if a.count {
        let _ = writeln!(out, "{}", objs.len());
    } else if a.json {
        let items: Vec<Json> = objs
            .iter()
            .map(|o| {
                if a.stats {
                    json!({ "object": o.to_string(), "stats": object_stats(o) })
                } else {
                    json!(o.to_string())
                }
            })
            .collect();
        let _ = writeln!(out, "{}", Json::Array(items));
    } else {
        for o in &objs {
            if a.stats {
                let _ = writeln!(out, "{o}\t{}", object_stats(o));
            } else {
                let _ = writeln!(out, "{o}");
            }
        }
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if a.list {
        for i in verify::IDENTITIES {
            let _ = writeln!(out, "{:<7} n<={}  {}", i.id, i.default_max_n, i.description);
        }
        return Ok(());
    }
    let ids: Vec<&str> = if a.identities.is_empty() {
        verify::IDENTITIES.iter().map(|i| i.id).collect()
    } else {
        a.identities.iter().map(String::as_str).collect()
    };
    for id in &ids {
        verify::identity(id).map_err(verify_error)?;
    }
    let rule = match a.crossing_rule {
        RuleArg::Standard => CrossingRule::Standard,
        RuleArg::StrictUpper => CrossingRule::StrictUpper,
    };
    let opts = Options {
        max_n: a.max_n,
        rule,
    };
    let mut reports = Vec::new();
    for id in ids {
        let report = verify::check_identity(id, &opts).map_err(verify_error)?;
        if !a.json {
            let _ = write!(out, "{report}");
        }
        reports.push(report);
    }
    if a.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        let _ = writeln!(err, "failed: {}", failed.join(", "));
        Err(CliError::Domain(String::new()))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Convert(a) => cmd_convert(a, stdin, out, err),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Render(a) => cmd_render(a, stdin, out, err),
        Command::Stats(a) => cmd_stats(a, stdin, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(&e, CliError::Domain(m) if m.is_empty()) {
                let _ = writeln!(err, "{e}");
            }
            e.exit_code()
        }
    }
}
