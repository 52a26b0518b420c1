//! The `hyperlab` command line. Exit codes: 0 success, 1 verdict mismatch or
//! law violation, 2 usage or parse error.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::claims::{self, Divergence};
use crate::classify::{classify_all, Classification};
use crate::error::{Error, Result};
use crate::ideal::{self, Ideal, IdealSpec};
use crate::laws::{self, Grid, LawReport, Separation};
use crate::morphism::{GoodHom, HomSpec};
use crate::ring::{AxiomReport, Ring, RingSpec};
use crate::verdict::Predicate;

#[derive(Parser, Debug)]
#[command(name = "hyperlab", version, about = "Hyperideals of multiplicative hyperrings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the hyperring axioms of a ring, or describe a homomorphism.
    Describe {
        #[arg(long, required_unless_present = "hom")]
        ring: Option<String>,
        /// Homomorphism spec, inline JSON or a path.
        #[arg(long, conflicts_with = "ring")]
        hom: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Classify an ideal against all six predicates.
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        /// Expected verdicts, e.g. `prime=false,2ap=true,radical=6Z,min_primes=2Z|3Z`.
        #[arg(long)]
        expect: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Run registered laws over a grid.
    Laws {
        #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
        law: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Print the registry and exit.
        #[arg(long, conflicts_with_all = ["law", "all"])]
        list: bool,
        /// Exit 0 even when violations are found.
        #[arg(long)]
        allow_violations: bool,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: Output,
    },
    /// List grid ideals where one predicate holds and another fails.
    Search {
        #[arg(long)]
        holds: Predicate,
        #[arg(long)]
        fails: Predicate,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Restrict the grid to these rings (repeatable).
    #[arg(long)]
    ring: Vec<String>,
    /// Grid settings, e.g. `dmax=30,nmax=12`.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Reads inline JSON, or a file when the argument is not JSON.
fn load(arg: &str) -> Result<String> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(t.to_string());
    }
    let path = Path::new(t);
    if path.exists() {
        return std::fs::read_to_string(path).map_err(|e| Error::Spec(format!("{t}: {e}")));
    }
    Err(Error::Spec(format!("`{t}` is neither inline JSON nor a readable file")))
}

pub fn parse_ring(arg: &str) -> Result<Ring> {
    let spec: RingSpec =
        serde_json::from_str(&load(arg)?).map_err(|e| Error::Spec(format!("ring: {e}")))?;
    Ring::from_spec(&spec)
}

fn parse_hom(arg: &str) -> Result<GoodHom> {
    let spec: HomSpec =
        serde_json::from_str(&load(arg)?).map_err(|e| Error::Spec(format!("hom: {e}")))?;
    GoodHom::from_spec(&spec)
}

fn grid_from(args: &GridArgs) -> Result<Grid> {
    let mut grid = if args.ring.is_empty() {
        Grid::default()
    } else {
        Grid::with_rings(args.ring.iter().map(|r| parse_ring(r)).collect::<Result<_>>()?)
    };
    if let Some(g) = &args.grid {
        grid.apply_params(g)?;
    }
    if let Some(s) = args.seed {
        grid.seed = s;
    }
    Ok(grid)
}

#[derive(Serialize)]
struct Expectation {
    key: String,
    expected: String,
    actual: String,
    ok: bool,
}

fn check_expectations(ring: &Ring, c: &Classification, expect: &str) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for part in expect.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, want) = part
            .split_once('=')
            .ok_or_else(|| Error::Spec(format!("expectation `{part}` is not key=value")))?;
        let (key, want) = (key.trim(), want.trim());
        let canon = |s: &str| -> Result<String> {
            let spec: IdealSpec = s.parse()?;
            Ok(Ideal::from_spec(ring, &spec)?.to_string())
        };
        let (expected, actual) = match key {
            "radical" => (canon(want)?, c.radical.clone()),
            "min_primes" => {
                let mut e: Vec<String> =
                    want.split('|').filter(|s| !s.trim().is_empty()).map(canon).collect::<Result<_>>()?;
                let mut a = c.min_primes.clone();
                e.sort();
                a.sort();
                (e.join("|"), a.join("|"))
            }
            "proper" => (parse_bool(want)?.to_string(), c.proper.to_string()),
            _ => {
                let pred: Predicate = key.parse()?;
                (parse_bool(want)?.to_string(), c.verdict(pred).holds().to_string())
            }
        };
        out.push(Expectation { key: key.to_string(), ok: expected == actual, expected, actual });
    }
    Ok(out)
}

fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(Error::Spec(format!("expected a boolean, got `{s}`"))),
    }
}

fn emit(w: &mut dyn Write, format: Format, value: &Value, text: impl FnOnce() -> Vec<String>) -> Result<()> {
    let io = |e: std::io::Error| Error::Spec(format!("write failed: {e}"));
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(value).expect("serializable")).map_err(io),
        Format::Text => {
            for line in text() {
                writeln!(w, "{line}").map_err(io)?;
            }
            Ok(())
        }
    }
}

fn describe_ring(w: &mut dyn Write, ring: &Ring, format: Format) -> Result<i32> {
    let report: AxiomReport = ring.check_axioms();
    let lattice: Option<Vec<String>> = match ring.modulus() {
        Some(_) => Some(ideal::lattice(ring)?.iter().map(|i| i.to_string()).collect()),
        None => None,
    };
    let value = json!({ "ring": ring.to_string(), "spec": ring.spec(), "axioms": report, "lattice": lattice });
    emit(w, format, &value, || {
        let mut lines = vec![format!("ring {ring}"), format!("spec {}", serde_json::to_string(&ring.spec()).expect("spec"))];
        let flags = [
            ("associative", report.associative),
            ("distributive_inclusion", report.distributive_inclusion),
            ("strongly_distributive", report.strongly_distributive),
            ("absorbing_zero", report.absorbing_zero),
            ("commutative", report.commutative),
            ("negation_compatible", report.negation_compatible),
            ("proper", report.proper),
        ];
        lines.extend(flags.iter().map(|(k, v)| format!("{k}: {v}")));
        for (axiom, xs) in &report.counterexamples {
            lines.push(format!("counterexample {axiom}: {xs:?}"));
        }
        if let Some(l) = &lattice {
            lines.push(format!("lattice: {}", l.join(" ")));
        }
        lines
    })?;
    Ok(0)
}

fn describe_hom(w: &mut dyn Write, f: &GoodHom, format: Format) -> Result<i32> {
    let kernel = f.kernel()?;
    let value = json!({
        "hom": f.to_string(),
        "source": f.source().spec(),
        "target": f.target().spec(),
        "kernel": kernel.spec(),
    });
    emit(w, format, &value, || {
        vec![
            format!("hom {f}"),
            format!("source {}", f.source()),
            format!("target {}", f.target()),
            format!("kernel {kernel}"),
        ]
    })?;
    Ok(0)
}

fn classify_cmd(w: &mut dyn Write, ring: &Ring, ideal_arg: &str, expect: Option<&str>, format: Format) -> Result<i32> {
    let i = Ideal::from_spec(ring, &ideal_arg.parse()?)?;
    let c = classify_all(ring, &i)?;
    let divergences: Vec<Divergence> = claims::divergences(ring, &i, &c)?;
    let expectations = match expect {
        Some(e) => check_expectations(ring, &c, e)?,
        None => Vec::new(),
    };
    let code = i32::from(expectations.iter().any(|e| !e.ok));
    let value = json!({
        "ring_spec": ring.spec(),
        "ideal_spec": i.spec(),
        "classification": c,
        "divergences": divergences,
        "expectations": expectations,
    });
    emit(w, format, &value, || {
        let mut lines = vec![format!("ring {}", c.ring), format!("ideal {}", c.ideal), format!("proper {}", c.proper)];
        for p in Predicate::ALL {
            lines.push(format!("{p}: {}", c.verdict(p)));
        }
        lines.push(format!("radical: {}", c.radical));
        lines.push(format!("min_primes: {}", c.min_primes.join(" ")));
        for d in &divergences {
            lines.push(format!("divergence {}: claimed {}; computed {}", d.claim, d.claimed, d.computed));
        }
        for e in &expectations {
            let tag = if e.ok { "ok" } else { "MISMATCH" };
            lines.push(format!("expect {} {tag}: expected {} actual {}", e.key, e.expected, e.actual));
        }
        lines
    })?;
    Ok(code)
}

fn report_lines(r: &LawReport) -> Vec<String> {
    let companion = match r.companion_found {
        None => "n/a".to_string(),
        Some(found) => format!("{found}"),
    };
    let mut lines = vec![format!(
        "{} instances={} premises={} violations={} companion={}",
        r.law,
        r.instances,
        r.premises_satisfied,
        r.violations.len(),
        companion
    )];
    for v in &r.violations {
        lines.push(format!("  violation {} :: {}", v.instance, v.witness));
    }
    if let Some(c) = &r.companion {
        for s in &c.found {
            lines.push(format!("  companion {} {} :: {}", s.ring, s.instance, s.witness));
        }
        if c.total > c.found.len() {
            lines.push(format!("  companion ... {} more", c.total - c.found.len()));
        }
    }
    for n in &r.notes {
        lines.push(format!("  note {n}"));
    }
    lines
}

fn laws_cmd(w: &mut dyn Write, ids: &[String], all: bool, allow: bool, grid: &Grid, format: Format) -> Result<i32> {
    let reports = if all {
        laws::run_all(grid)?
    } else {
        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
        laws::run_laws(&ids, grid, false)?
    };
    let violated = reports.iter().any(|r| !r.violations.is_empty());
    emit(w, format, &serde_json::to_value(&reports).expect("serializable"), || {
        reports.iter().flat_map(report_lines).collect()
    })?;
    Ok(i32::from(violated && !allow))
}

fn list_cmd(w: &mut dyn Write, format: Format) -> Result<i32> {
    let laws = laws::list_laws();
    emit(w, format, &serde_json::to_value(laws).expect("serializable"), || {
        laws.iter()
            .map(|l| {
                let scope = if l.strongly_distributive_only { " [coset rings]" } else { "" };
                format!("{:6} {}{scope}", l.id, l.statement)
            })
            .collect()
    })?;
    Ok(0)
}

fn search_cmd(w: &mut dyn Write, holds: Predicate, fails: Predicate, grid: &Grid, format: Format) -> Result<i32> {
    let found: Vec<Separation> = laws::find_separating_examples(holds, fails, grid)?;
    let value = json!({ "holds": holds, "fails": fails, "grid": grid, "found": found });
    emit(w, format, &value, || {
        found.iter().map(|s| format!("{} {} :: {}", s.ring, s.instance, s.witness)).collect()
    })?;
    Ok(0)
}

fn dispatch(cli: Cli, w: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Describe { ring: Some(r), out, .. } => describe_ring(w, &parse_ring(&r)?, out.format),
        Command::Describe { hom: Some(h), out, .. } => describe_hom(w, &parse_hom(&h)?, out.format),
        Command::Describe { .. } => Err(Error::Spec("describe needs --ring or --hom".into())),
        Command::Classify { ring, ideal, expect, out } => {
            classify_cmd(w, &parse_ring(&ring)?, &ideal, expect.as_deref(), out.format)
        }
        Command::Laws { list: true, out, .. } => list_cmd(w, out.format),
        Command::Laws { law, all, allow_violations, grid, out, .. } => {
            laws_cmd(w, &law, all, allow_violations, &grid_from(&grid)?, out.format)
        }
        Command::Search { holds, fails, grid, out } => search_cmd(w, holds, fails, &grid_from(&grid)?, out.format),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Caps the global thread pool from `HYPERLAB_THREADS`.
pub fn configure_threads() {
    if let Some(n) = std::env::var("HYPERLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["hyperlab"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const Z23: &str = r#"{"family":"integer_scaled","multipliers":[2,3]}"#;

    #[test]
    fn classify_expectations() {
        let (code, out, _) = run_str(&[
            "classify", "--ring", Z23, "--ideal", "12Z",
            "--expect", "prime=false,primary=false,2a=false,2ap=true,radical=6Z,min_primes=2Z|3Z",
        ]);
        assert_eq!(code, 0, "{out}");
        let (code, _, _) = run_str(&["classify", "--ring", Z23, "--ideal", "12Z", "--expect", "prime=true"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["classify", "--ring", "{bad", "--ideal", "2Z"]).0, 2);
        assert_eq!(run_str(&["laws", "--law", "X1.1"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["classify", "--ring", Z23, "--ideal", "{0,1}"]).0, 2);
    }

    #[test]
    fn describe_round_trips_spec() {
        let coset = r#"{"family":"modular_coset","modulus":12,"coset":[0,6]}"#;
        let (code, out, _) = run_str(&["describe", "--ring", coset, "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["axioms"]["strongly_distributive"], true);
        let again = parse_ring(&v["spec"].to_string()).unwrap();
        assert_eq!(again, parse_ring(coset).unwrap());
    }
}
