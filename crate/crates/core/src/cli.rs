//! Command-line front end.
//!
//! Every command produces an [`OutputDocument`], rendered as JSON (the
//! canonical form, keys sorted), CSV or aligned text. Exit codes: 0 success
//! or valid, 1 mathematically invalid, 2 bad parameters, 3 malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::fflinalg::{FpMatrix, FpVector, Modulus};
use crate::moebius::{
    self, Classification, IncidenceFailure, IncidenceMatrix, MoebiusPair, Side, Simplex,
};
use crate::pauli::{self, ClauseReport, PauliElement, Theorem2Report};
use crate::projgeom::{NullPolarity, ProjectivePoint};

pub const SCHEMA_VERSION: &str = "1";
/// Largest p accepted by `pair` and `nested`.
pub const MAX_PAIR_P: u32 = 7;
/// Brute-force budget of `check-theorem2`: p^(n+1) may not exceed this.
pub const THEOREM2_BUDGET: u64 = 1 << 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mobius-pauli",
    version,
    about = "Möbius pairs of simplices in PG(n,p) and commuting Pauli operators"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the Möbius pair for odd n ≥ 3 and prime p ≤ 7.
    Pair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
    },
    /// Re-verify a pair document (as written by `pair`).
    Verify {
        /// Path to the JSON document.
        file: PathBuf,
    },
    /// The nested pair spanned by some vertices of the first simplex.
    Nested {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Comma-separated, strictly increasing vertex indices.
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
    /// Classify a point of PG(n,2) given as a 0/1 string, e.g. 110000.
    Classify {
        #[arg(long)]
        vector: String,
    },
    /// The three-qubit example, end to end.
    PauliDemo,
    /// Brute-force check of the operator commutation pattern for PG(n,p).
    CheckTheorem2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Params(String),
    #[error("malformed input: {0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Params(_) => EXIT_PARAMS,
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

fn params(e: impl ToString) -> CliError {
    CliError::Params(e.to_string())
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

/// Envelope shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub parameters: Map<String, Value>,
    pub payload: Value,
}

impl OutputDocument {
    fn new(command: &str, parameters: Value, payload: Value) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            command: command.to_owned(),
            parameters: match parameters {
                Value::Object(m) => m,
                _ => Map::new(),
            },
            payload,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "payload": self.payload,
        })
    }

    pub fn from_value(v: &Value) -> Result<Self, CliError> {
        let s = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_owned)
                .ok_or_else(|| input(format!("missing string field {k:?}")))
        };
        Ok(OutputDocument {
            schema_version: s("schema_version")?,
            command: s("command")?,
            parameters: v
                .get("parameters")
                .and_then(Value::as_object)
                .cloned()
                .ok_or_else(|| input("missing object field \"parameters\""))?,
            payload: v
                .get("payload")
                .cloned()
                .ok_or_else(|| input("missing field \"payload\""))?,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["key", "value"]).expect("in-memory write");
                for (k, v) in flatten(&self.to_value()) {
                    w.write_record([k, v]).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
            }
            Format::Text => {
                let rows = flatten(&self.to_value());
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                rows.iter().fold(String::new(), |mut out, (k, v)| {
                    let _ = writeln!(out, "{k:<width$}  {v}");
                    out
                })
            }
        }
    }
}

/// Leaves of a JSON value keyed by dotted paths. Arrays of scalars stay on
/// one line, space-separated.
fn flatten(v: &Value) -> Vec<(String, String)> {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("null".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            _ => None,
        }
    }
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let key = |k: &str| {
            if prefix.is_empty() {
                k.to_owned()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    walk(&key(k), x, out);
                }
            }
            Value::Array(a) => {
                if let Some(items) = a.iter().map(scalar).collect::<Option<Vec<_>>>() {
                    out.push((prefix.to_owned(), items.join(" ")));
                } else {
                    for (i, x) in a.iter().enumerate() {
                        walk(&key(&i.to_string()), x, out);
                    }
                }
            }
            _ => out.push((prefix.to_owned(), scalar(v).unwrap_or_default())),
        }
    }
    let mut out = Vec::new();
    walk("", v, &mut out);
    out
}

fn check_pair_params(n: usize, p: u32) -> Result<(), CliError> {
    if n.is_multiple_of(2) {
        return Err(params("n must be odd"));
    }
    if n < 3 {
        return Err(params(
            "n must be at least 3 (n = 1 only gives the degenerate pair)",
        ));
    }
    if !crate::fflinalg::is_prime(p) {
        return Err(params("p must be prime"));
    }
    if p > MAX_PAIR_P {
        return Err(params(format!("p must be at most {MAX_PAIR_P}")));
    }
    Ok(())
}

fn coords(x: &ProjectivePoint) -> Value {
    json!(x.coords().entries())
}

fn points(xs: &[ProjectivePoint]) -> Value {
    Value::Array(xs.iter().map(coords).collect())
}

fn failure_json(f: &IncidenceFailure) -> Value {
    let name = |m: &IncidenceMatrix| match m {
        IncidenceMatrix::FirstOnSecond => "first_on_second",
        IncidenceMatrix::SecondOnFirst => "second_on_first",
    };
    match f {
        IncidenceFailure::NotASimplex(side) => json!({
            "kind": "not_a_simplex",
            "simplex": if *side == Side::First { "first" } else { "second" },
        }),
        IncidenceFailure::Row {
            matrix,
            index,
            count,
        } => json!({
            "kind": "row", "matrix": name(matrix), "index": index, "count": count,
        }),
        IncidenceFailure::Column {
            matrix,
            index,
            count,
        } => json!({
            "kind": "column", "matrix": name(matrix), "index": index, "count": count,
        }),
    }
}

/// Verification payload shared by `pair` and `verify`.
fn pair_payload(pair: &MoebiusPair) -> Result<(Value, bool), CliError> {
    let report = moebius::verify_moebius_pair(pair).map_err(input)?;
    let dual = moebius::dual_basis_check(pair).map_err(input)?;
    let center = if report.is_valid() {
        moebius::perspectivity_center(pair).map_err(input)?
    } else {
        None
    };
    let payload = json!({
        "n": pair.n(),
        "p": pair.modulus().get(),
        "a_matrix": pair.polarity.form().to_rows(),
        "first": points(pair.first.vertices()),
        "second": points(pair.second.vertices()),
        "incidence": {
            "first_on_second": report.first_on_second,
            "second_on_first": report.second_on_first,
        },
        "failures": report.failures.iter().map(failure_json).collect::<Vec<_>>(),
        "valid": report.is_valid(),
        "polarity_consistent": report.polarity_consistent,
        "dual_basis": dual,
        "center": center.as_ref().map(coords),
    });
    Ok((payload, report.is_valid()))
}

pub fn cmd_pair(n: usize, p: u32) -> Result<(OutputDocument, i32), CliError> {
    check_pair_params(n, p)?;
    let pair = moebius::build_moebius_pair(n, p).map_err(params)?;
    let (payload, valid) = pair_payload(&pair)?;
    let code = if valid { EXIT_OK } else { EXIT_INVALID };
    Ok((
        OutputDocument::new("pair", json!({"n": n, "p": p}), payload),
        code,
    ))
}

fn int_rows(v: Option<&Value>, what: &str) -> Result<Vec<Vec<u32>>, CliError> {
    let rows = v
        .and_then(Value::as_array)
        .ok_or_else(|| input(format!("{what} must be an array of arrays")))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| input(format!("{what} must be an array of arrays")))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| {
                            input(format!("{what} entries must be non-negative integers"))
                        })
                })
                .collect()
        })
        .collect()
}

/// Reads a pair document back into a [`MoebiusPair`] without checking any
/// incidence; that is left to verification.
pub fn pair_from_document(doc: &Value) -> Result<MoebiusPair, CliError> {
    let payload = doc.get("payload").ok_or_else(|| input("missing payload"))?;
    let p = payload
        .get("p")
        .and_then(Value::as_u64)
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| input("payload.p must be an integer"))?;
    let m = Modulus::new(p).map_err(input)?;
    let a = int_rows(payload.get("a_matrix"), "a_matrix")?;
    let size = a.len();
    if size == 0 || a.iter().any(|r| r.len() != size) {
        return Err(input("a_matrix must be square and nonempty"));
    }
    let check_entries = |rows: &[Vec<u32>], what: &str| -> Result<(), CliError> {
        if rows.iter().flatten().any(|&e| e >= p) {
            return Err(input(format!("{what} has entries outside 0..{p}")));
        }
        Ok(())
    };
    check_entries(&a, "a_matrix")?;
    let form = FpMatrix::new(m, size, size, a.into_iter().flatten().collect()).map_err(input)?;
    let polarity = NullPolarity::new(form).map_err(input)?;
    let simplex = |key: &str| -> Result<Simplex, CliError> {
        let rows = int_rows(payload.get(key), key)?;
        check_entries(&rows, key)?;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(input(format!(
                "{key} must hold {size} points with {size} coordinates"
            )));
        }
        let pts = rows
            .into_iter()
            .map(|r| {
                ProjectivePoint::new(FpVector::new(m, r)).map_err(|e| input(format!("{key}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Simplex::unchecked(pts))
    };
    MoebiusPair::new(simplex("first")?, simplex("second")?, polarity).map_err(input)
}

pub fn cmd_verify(text: &str) -> Result<(OutputDocument, i32), CliError> {
    let doc: Value = serde_json::from_str(text).map_err(input)?;
    let pair = pair_from_document(&doc)?;
    let (payload, valid) = pair_payload(&pair)?;
    let code = if valid { EXIT_OK } else { EXIT_INVALID };
    Ok((OutputDocument::new("verify", json!({}), payload), code))
}

pub fn cmd_nested(n: usize, p: u32, indices: &[usize]) -> Result<(OutputDocument, i32), CliError> {
    check_pair_params(n, p)?;
    let pair = moebius::build_moebius_pair(n, p).map_err(params)?;
    let nested = moebius::nested_pair(&pair, indices).map_err(params)?;
    let report = moebius::verify_moebius_pair(&nested.pair).map_err(params)?;
    let center = moebius::perspectivity_center(&nested.pair).map_err(params)?;
    let payload = json!({
        "indices": indices,
        "k": indices.len() - 1,
        "restricted": {
            "a_matrix": nested.pair.polarity.form().to_rows(),
            "first": points(nested.pair.first.vertices()),
            "second": points(nested.pair.second.vertices()),
            "center": center.as_ref().map(coords),
        },
        "ambient": {
            "first": points(&nested.ambient_first),
            "second": points(&nested.ambient_second),
            "center": center.as_ref().map(|c| json!(nested.embed(c.coords()).entries())),
        },
        "incidence": {
            "first_on_second": report.first_on_second,
            "second_on_first": report.second_on_first,
        },
        "valid": report.is_valid(),
    });
    let code = if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    Ok((
        OutputDocument::new(
            "nested",
            json!({"n": n, "p": p, "indices": indices}),
            payload,
        ),
        code,
    ))
}

pub fn cmd_classify(vector: &str) -> Result<(OutputDocument, i32), CliError> {
    let bits = vector
        .chars()
        .filter(|c| *c != ',')
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(params(format!(
                "vector may only contain 0 and 1 (found {c:?})"
            ))),
        })
        .collect::<Result<Vec<u32>, _>>()?;
    if bits.is_empty() || bits.len() % 2 == 1 {
        return Err(params("vector length must be even (n odd)"));
    }
    let v = FpVector::new(Modulus::new(2).expect("2 is prime"), bits.iter().copied());
    let class = moebius::classify_gf2_point(&v).map_err(params)?;
    let payload = match &class {
        Classification::OddWeight { indices } => json!({
            "class": "odd_weight",
            "indices": indices,
            "weight": indices.len(),
            "vertex": indices.len() == 1,
        }),
        Classification::EvenWeightCenter { weight, indices } => json!({
            "class": "even_weight_center",
            "indices": indices,
            "weight": weight,
            "full_pair": *weight == bits.len(),
        }),
        Classification::EdgePoint { vertices } => json!({
            "class": "edge_point",
            "indices": [vertices.0, vertices.1],
            "weight": 2,
        }),
    };
    let mut payload = payload;
    payload["vector"] = json!(bits);
    Ok((
        OutputDocument::new("classify", json!({"vector": vector}), payload),
        EXIT_OK,
    ))
}

fn clause_json(c: &ClauseReport) -> Value {
    json!({
        "a": c.a,
        "b": c.b,
        "c": c.c,
        "c_all": c.c_all(),
        "c_from_one": c.c_from_one(),
    })
}

fn theorem2_json(r: &Theorem2Report) -> Value {
    json!({
        "x_family": clause_json(&r.x_family),
        "y_family": clause_json(&r.y_family),
        "all_hold": r.all_hold(),
    })
}

pub fn cmd_pauli_demo() -> Result<(OutputDocument, i32), CliError> {
    let r = pauli::three_qubit_demo().map_err(input)?;
    let payload = json!({
        "t_matrix": r.t_matrix,
        "pq_table": r.pq_table,
        "triple_points": r.triple_points,
        "nested": r.nested.iter().map(|t| json!({
            "indices": t.indices,
            "first": t.first,
            "second": t.second,
            "center": t.center,
        })).collect::<Vec<_>>(),
        "center": r.center,
        "element_count": r.element_count,
        "commutation": r.commutation,
        "row_column_rule_holds": r.row_column_rule_holds,
        "off_center_polar": r.off_center_polar,
        "theorem2": theorem2_json(&r.theorem2),
    });
    let ok = r.row_column_rule_holds && r.theorem2.all_hold() && r.element_count == 48;
    Ok((
        OutputDocument::new("pauli-demo", json!({}), payload),
        if ok { EXIT_OK } else { EXIT_INVALID },
    ))
}

pub fn cmd_check_theorem2(n: usize, p: u32) -> Result<(OutputDocument, i32), CliError> {
    if n.is_multiple_of(2) {
        return Err(params("n must be odd"));
    }
    if n < 3 {
        return Err(params(
            "n must be at least 3 (n = 1 only gives the degenerate pair)",
        ));
    }
    if !crate::fflinalg::is_prime(p) {
        return Err(params("p must be prime"));
    }
    let work = (p as u64).checked_pow(n as u32 + 1).unwrap_or(u64::MAX);
    if work > THEOREM2_BUDGET {
        return Err(params(format!(
            "p^(n+1) = {work} exceeds the brute-force budget of {THEOREM2_BUDGET}"
        )));
    }
    let pair = moebius::build_moebius_pair(n, p).map_err(params)?;
    let t = if (n, p) == (5, 2) {
        pauli::basis_change_t()
    } else {
        pauli::find_symplectic_to_a(n, p).map_err(input)?
    };
    let (xs, ys) = pauli::lift_pair_to_operators(&pair, &t).map_err(input)?;
    let report = pauli::verify_theorem2(&xs, &ys).map_err(input)?;
    let family = |fam: &[PauliElement]| -> Value {
        if p == 2 {
            json!(fam
                .iter()
                .map(|a| a.label().map(|l| l.to_string()).unwrap_or_default())
                .collect::<Vec<_>>())
        } else {
            Value::Array(fam.iter().map(|a| json!(a.sympvec().entries())).collect())
        }
    };
    let payload = json!({
        "t_matrix": t.to_rows(),
        "x_family": family(&xs),
        "y_family": family(&ys),
        "theorem2": theorem2_json(&report),
    });
    let code = if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    Ok((
        OutputDocument::new("check-theorem2", json!({"n": n, "p": p}), payload),
        code,
    ))
}

/// Result of one invocation: exit code plus what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn dispatch(cli: &Cli) -> Result<(OutputDocument, i32), CliError> {
    match &cli.command {
        Command::Pair { n, p } => cmd_pair(*n, *p),
        Command::Verify { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| input(format!("{}: {e}", file.display())))?;
            cmd_verify(&text)
        }
        Command::Nested { n, p, indices } => cmd_nested(*n, *p, indices),
        Command::Classify { vector } => cmd_classify(vector),
        Command::PauliDemo => cmd_pauli_demo(),
        Command::CheckTheorem2 { n, p } => cmd_check_theorem2(*n, *p),
    }
}

/// Parses arguments, runs the command and writes `--output` if given.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Ok((doc, code)) => {
            let text = doc.render(cli.format);
            let mut stderr = String::new();
            if code == EXIT_INVALID {
                if let Some(fails) = doc.payload.get("failures").and_then(Value::as_array) {
                    for f in fails {
                        let _ = writeln!(stderr, "invalid: {f}");
                    }
                }
                if stderr.is_empty() {
                    stderr.push_str("invalid\n");
                }
            }
            match &cli.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr,
                    },
                    Err(e) => Outcome {
                        code: EXIT_INPUT,
                        stdout: String::new(),
                        stderr: format!("error: {}: {e}\n", path.display()),
                    },
                },
                None => Outcome {
                    code,
                    stdout: text,
                    stderr,
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_document() {
        let (doc, code) = cmd_pair(5, 2).unwrap();
        assert_eq!(code, EXIT_OK);
        assert_eq!(doc.payload["center"], json!([1, 1, 1, 1, 1, 1]));
        assert_eq!(doc.payload["valid"], json!(true));
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(cmd_pair(4, 2).unwrap_err().to_string(), "n must be odd");
        assert_eq!(cmd_pair(3, 4).unwrap_err().to_string(), "p must be prime");
        assert_eq!(cmd_pair(3, 11).unwrap_err().exit_code(), EXIT_PARAMS);
        assert_eq!(cmd_pair(1, 2).unwrap_err().exit_code(), EXIT_PARAMS);
        assert_eq!(
            cmd_nested(5, 2, &[0, 1, 2]).unwrap_err().exit_code(),
            EXIT_PARAMS
        );
        assert_eq!(cmd_classify("000000").unwrap_err().exit_code(), EXIT_PARAMS);
        assert_eq!(cmd_classify("10000").unwrap_err().exit_code(), EXIT_PARAMS);
        assert_eq!(cmd_classify("1a0000").unwrap_err().exit_code(), EXIT_PARAMS);
        assert_eq!(
            cmd_check_theorem2(5, 7).unwrap_err().exit_code(),
            EXIT_PARAMS
        );
    }

    #[test]
    fn verify_roundtrip() {
        let (doc, _) = cmd_pair(3, 5).unwrap();
        let text = doc.render(Format::Json);
        let (v, code) = cmd_verify(&text).unwrap();
        assert_eq!(code, EXIT_OK);
        assert_eq!(v.payload["valid"], json!(true));
        assert_eq!(OutputDocument::from_value(&doc.to_value()).unwrap(), doc);
        assert_eq!(
            cmd_verify(&text[..text.len() / 2]).unwrap_err().exit_code(),
            EXIT_INPUT
        );
    }

    #[test]
    fn flatten_projection() {
        let v = json!({"a": {"b": [1, 2]}, "c": [[1, 0], [0, 1]], "d": null});
        assert_eq!(
            flatten(&v),
            vec![
                ("a.b".to_owned(), "1 2".to_owned()),
                ("c.0".to_owned(), "1 0".to_owned()),
                ("c.1".to_owned(), "0 1".to_owned()),
                ("d".to_owned(), "null".to_owned()),
            ]
        );
    }

    #[test]
    fn csv_and_text_render() {
        let (doc, _) = cmd_classify("110000").unwrap();
        let csv = doc.render(Format::Csv);
        assert!(csv.starts_with("key,value\n"));
        assert!(csv.contains("payload.class,edge_point\n"));
        let text = doc.render(Format::Text);
        assert!(text
            .lines()
            .any(|l| l.starts_with("payload.class") && l.ends_with("edge_point")));
    }
}
