//! Command-line front end. `run` returns the exit code and output instead of
//! touching the process, so the contract can be tested directly.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bundles::{annihilator, is_split_extension, saturate, splitting_type, SubbundleFamily};
use crate::catalog::{self, CatalogEntry};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::lie;
use crate::orbit::GoodQuadruple;
use crate::polymat::PolyMatrix;
use crate::qlike::{self, Mode, QLikeStructure};
use crate::scalar::Scalar;

pub const OK: i32 = 0;
pub const MISMATCH: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "qlike", version, about = "Exact bundle splittings over the projective line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Core,
    Catalog,
    Random,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Format {
    /// Emit JSON (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a line-per-field rendering of the same report.
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a structure and compute its bundles, heaven data and classification.
    Analyze {
        path: PathBuf,
        /// Ignore the conjugation and treat the structure as complex.
        #[arg(long)]
        complex: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Print the dual structure given by the annihilators.
    Dual {
        path: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Normal bundle of the twistor sphere of a good quadruple.
    Twistor {
        /// Catalog name such as `veronese:3`, `sp:6`, `adjoint:sl3:principal`.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        catalog: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// sl(2)-triple through a nilpotent of a classical algebra.
    LieJm {
        /// `sl3`, `so5`, `sp4`, …
        algebra: String,
        /// `principal`, `minimal`, a partition like `2+1`, `block`, or `basis:i`.
        nilpotent: String,
        #[command(flatten)]
        format: Format,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random cases of each kind.
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Write the catalog fixtures.
    CatalogRegen {
        #[arg(long, default_value = "fixtures/v1")]
        out: PathBuf,
        /// Compare with the files on disk instead of writing them.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Default, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    inputs_digest: Option<String>,
    verdict: &'a str,
    result: Value,
}

fn verdict(code: i32) -> &'static str {
    match code {
        0 => "ok",
        1 => "mismatch",
        2 => "invalid",
        _ => "internal",
    }
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// `path: value` lines for every leaf, in document order.
pub fn render_text(v: &Value) -> String {
    fn go(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) if !m.is_empty() => {
                for (k, x) in m {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    go(&p, x, out);
                }
            }
            Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in a.iter().enumerate() {
                    go(&format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
            _ => out.push_str(&format!("{prefix}: {v}\n")),
        }
    }
    let mut out = String::new();
    go("", v, &mut out);
    out
}

fn emit(command: &str, inputs: Option<&str>, code: i32, result: Value, format: Format) -> Outcome {
    let report = RunReport { command, inputs_digest: inputs.map(digest), verdict: verdict(code), result };
    let value = serde_json::to_value(&report).expect("reports serialize");
    let stdout = if format.text {
        render_text(&value)
    } else {
        serde_json::to_string_pretty(&value).expect("reports serialize") + "\n"
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn failure(e: &Error) -> Outcome {
    Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => failure(&e),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Analyze { path, complex, format } => analyze(&path, complex, format),
        Command::Dual { path, format } => {
            let text = read(&path)?;
            let s = QLikeStructure::parse(&text)?;
            let d = qlike::dualize(&s)?;
            Ok(emit("dual", Some(&text), OK, to_value(&d.to_json()), format))
        }
        Command::Twistor { catalog, file, format } => twistor(catalog.as_deref(), file.as_deref(), format),
        Command::LieJm { algebra, nilpotent, format } => lie_jm(&algebra, &nilpotent, format),
        Command::Verify { suite, seed, count, format } => verify(suite, seed, count, format),
        Command::CatalogRegen { out, check } => catalog_regen(&out, check),
    }
}

fn analyze(path: &Path, complex: bool, format: Format) -> Result<Outcome> {
    let text = read(path)?;
    let mut s = QLikeStructure::parse(&text)?;
    if complex {
        s.mode = Mode::Complex;
        s.conjugation = None;
    }
    let r = qlike::analyze(&s)?;
    let code = if !r.validation.is_valid() {
        2
    } else if !r.passed() {
        3
    } else {
        OK
    };
    let mut out = emit("analyze", Some(&text), code, to_value(&r), format);
    if let Some(f) = r.validation.first_failure().filter(|_| code == 2) {
        out.stderr = format!("invalid structure: {f}\n");
    }
    Ok(out)
}

fn twistor(name: Option<&str>, file: Option<&Path>, format: Format) -> Result<Outcome> {
    let (q, expected, text) = match (name, file) {
        (Some(n), _) => {
            let entry = catalog::quadruple_entry(n)?;
            let expected = entry
                .expected
                .iter()
                .find(|e| e.quantity == "normal")
                .map(|e| serde_json::from_value(e.value.clone()).expect("catalog splittings parse"));
            (catalog::build_quadruple(n)?, expected, None)
        }
        (None, Some(p)) => {
            let text = read(p)?;
            (GoodQuadruple::parse(&text)?, None, Some(text))
        }
        (None, None) => return Err(Error::invalid("give --catalog or --file")),
    };
    let o = catalog::run_twistor(&q, expected)?;
    let code = if o.report.matches == Some(false) {
        MISMATCH
    } else if o.report.passed() {
        OK
    } else {
        3
    };
    Ok(emit("twistor", text.as_deref(), code, to_value(&o), format))
}

fn lie_jm(algebra: &str, spec: &str, format: Format) -> Result<Outcome> {
    let m = lie::by_name(algebra)?;
    let y = m.coordinates(&catalog::nilpotent(&m, spec)?)?;
    let t = lie::jacobson_morozov(&m.algebra, &y)?;
    let result = json!({
        "algebra": m.name,
        "nilpotent": spec,
        "triple": t,
        "matrices": {
            "e": m.defining.act(&t.e),
            "h": m.defining.act(&t.h),
            "f": m.defining.act(&t.f),
        },
        "adjoint_multiplicities": lie::sl2_decompose(&m.algebra.adjoint(), &t)?,
        "defining_multiplicities": lie::sl2_decompose(&m.defining, &t)?,
    });
    Ok(emit("lie-jm", None, OK, result, format))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
struct Case {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    detail: String,
    /// The failing input, as JSON.
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<Value>,
}

fn case(name: impl Into<String>, r: Result<bool>, input: impl FnOnce() -> Value) -> Case {
    let name = name.into();
    match r {
        Ok(true) => Case { name, passed: true, detail: String::new(), input: None },
        Ok(false) => Case { name, passed: false, detail: "check failed".into(), input: Some(input()) },
        Err(e) => Case { name, passed: false, detail: e.to_string(), input: Some(input()) },
    }
}

fn verify(suite: Suite, seed: u64, count: usize, format: Format) -> Result<Outcome> {
    let mut cases = match suite {
        Suite::Core => core_suite()?,
        Suite::Catalog => catalog_suite()?,
        Suite::Random => random_suite(seed, count)?,
    };
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = cases.iter().all(|c| c.passed);
    let suite_name = match suite {
        Suite::Core => "core",
        Suite::Catalog => "catalog",
        Suite::Random => "random",
    };
    let result = json!({
        "suite": suite_name,
        "seed": seed,
        "cases": cases,
        "passed": passed,
    });
    Ok(emit("verify", None, if passed { OK } else { MISMATCH }, result, format))
}

fn catalog_suite() -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for entry in catalog::entries()? {
        let input = to_value(&entry);
        let r = catalog::evaluate(&entry);
        let detail = match &r {
            Ok(res) => res.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect(),
            Err(_) => Vec::new(),
        };
        let mut c = case(entry.name.clone(), r.map(|res| res.passed()), || input);
        if !detail.is_empty() {
            c.detail = detail.join("; ");
        }
        out.push(c);
    }
    Ok(out)
}

/// Identities that hold for every input: the antipodal involution, idempotent
/// saturation, double duality, and the splitting cross-checks.
fn core_suite() -> Result<Vec<Case>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    for d in 0..5usize {
        let f = BinaryForm::from_coeffs((0..=d).map(|a| Scalar::from_parts((a as i64 * 3 - 4, 1), (1 - a as i64, 2))).collect());
        let sign = if d % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
        let ok = f.antipodal_transform().antipodal_transform() == f.scale(&sign);
        out.push(case(format!("antipodal-involution:{d}"), Ok(ok), || json!(f.to_string())));
    }
    let mut structures: Vec<(String, QLikeStructure)> =
        catalog::STRUCTURE_ENTRIES.iter().map(|n| Ok((n.to_string(), catalog::build_structure(n)?))).collect::<Result<_>>()?;
    for i in 0..3 {
        structures.push((format!("random-{i}"), qlike::random_structure(&mut rng, 6, 2)?));
    }
    for (name, s) in &structures {
        let input = || to_value(&s.to_json());
        out.push(case(format!("saturation-idempotent:{name}"), saturation_idempotent(s), input));
        out.push(case(format!("double-dual:{name}"), double_dual(s), input));
        out.push(case(format!("splitting-cross-check:{name}"), cross_check(s), input));
        out.push(case(format!("nonsplitting:{name}"), nonsplitting(s), input));
    }
    // A constant subspace has a constant complement, so its sequence splits.
    let constant = SubbundleFamily::from_basis(PolyMatrix::from_columns(
        3,
        vec![vec![BinaryForm::constant(Scalar::one()), BinaryForm::zero(0), BinaryForm::constant(Scalar::one())]],
    ))?;
    out.push(case("constant-complement-splits", is_split_extension(&constant), || json!(constant.to_json())));
    Ok(out)
}

fn saturation_idempotent(s: &QLikeStructure) -> Result<bool> {
    let a = saturate(&s.spanning)?;
    let b = saturate(a.basis())?;
    Ok(a.same_family(&b)? && a.degrees() == b.degrees())
}

fn double_dual(s: &QLikeStructure) -> Result<bool> {
    let dd = qlike::dualize(&qlike::dualize(s)?)?;
    let a = qlike::bundles(s)?.minus;
    let b = qlike::bundles(&dd)?.minus;
    let ann = annihilator(&annihilator(&a)?)?;
    Ok(a.same_family(&b)? && a.same_family(&ann)?)
}

fn cross_check(s: &QLikeStructure) -> Result<bool> {
    let b = qlike::bundles(s)?;
    Ok(splitting_type(&b.minus)? == b.minus.splitting() && splitting_type(&b.plus)? == b.plus.splitting())
}

fn nonsplitting(s: &QLikeStructure) -> Result<bool> {
    Ok(!is_split_extension(&qlike::bundles(s)?.minus)?)
}

/// Seeded random structures and quadruples through the full pipelines.
fn random_suite(seed: u64, count: usize) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let s = qlike::random_structure(&mut rng, 8, 3)?;
        let input = || to_value(&s.to_json());
        out.push(case(format!("structure-{i:03}"), qlike::analyze(&s).map(|r| r.passed()), input));
    }
    for i in 0..count {
        let (q, expected) = catalog::random_quadruple(&mut rng)?;
        let input = || to_value(&q.to_json());
        let r = catalog::run_twistor(&q, Some(expected)).map(|o| o.report.passed());
        out.push(case(format!("quadruple-{i:03}"), r, input));
    }
    Ok(out)
}

/// Fixture files: one per catalog entry, plus the bare structures used as
/// command-line examples.
pub fn fixture_files() -> Result<Vec<(PathBuf, String)>> {
    let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("fixtures serialize") + "\n";
    let mut out = Vec::new();
    for e in catalog::entries()? {
        let file = format!("{}.json", e.name.replace([':', '+'], "-"));
        out.push((PathBuf::from("catalog").join(file), pretty(&to_value(&e))));
    }
    for (file, name) in [("quaternionic.json", "quaternionic:1"), ("conic_r3.json", "conic-r3"), ("complex_c4.json", "complex-c4")] {
        out.push((PathBuf::from("structures").join(file), pretty(&to_value(&catalog::build_structure(name)?.to_json()))));
    }
    Ok(out)
}

pub fn load_entry(text: &str) -> Result<CatalogEntry> {
    serde_json::from_str(text).map_err(|e| Error::Parse { input: "catalog entry".into(), position: e.column(), message: e.to_string() })
}

fn catalog_regen(out: &Path, check: bool) -> Result<Outcome> {
    let files = fixture_files()?;
    let mut stale = Vec::new();
    for (rel, content) in &files {
        let path = out.join(rel);
        if check {
            if std::fs::read_to_string(&path).ok().as_deref() != Some(content.as_str()) {
                stale.push(rel.display().to_string());
            }
        } else {
            let dir = path.parent().expect("fixture paths have a directory");
            std::fs::create_dir_all(dir).map_err(|e| Error::invalid(format!("cannot create {}: {e}", dir.display())))?;
            std::fs::write(&path, content).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let code = if stale.is_empty() { OK } else { MISMATCH };
    let mut stdout = String::new();
    for (rel, _) in &files {
        stdout.push_str(&format!("{}\n", out.join(rel).display()));
    }
    let stderr = stale.iter().map(|s| format!("stale fixture: {s}\n")).collect();
    Ok(Outcome { code, stdout, stderr })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_flattens_paths() {
        let v = json!({"a": {"b": 1, "c": [1, 2]}, "d": "x", "e": [{"f": true}]});
        assert_eq!(render_text(&v), "a.b: 1\na.c: [1,2]\nd: x\ne[0].f: true\n");
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(run(["qlike", "frobnicate"]).code, 2);
        assert_eq!(run(["qlike", "twistor", "--catalog", "torus:1"]).code, 2);
        assert_eq!(run(["qlike", "lie-jm", "sl3", "1+1"]).code, 2);
    }

    #[test]
    fn lie_jm_principal_sl3() {
        let o = run(["qlike", "lie-jm", "sl3", "principal"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["result"]["adjoint_multiplicities"], json!([0, 0, 1, 0, 1]));
        assert_eq!(v["result"]["defining_multiplicities"], json!([0, 0, 1]));
    }
}
