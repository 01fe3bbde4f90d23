use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use poset_trace::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const CONE: i32 = 3;
    pub const RANGE: i32 = 4;
    pub const INVARIANT: i32 = 5;
}

/// A failed command: exit code, short kind, message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn invariant(message: impl Into<String>) -> Self {
        Failure { code: exit::INVARIANT, kind: "invariant_breach", message: message.into() }
    }

    pub fn io(path: &str, e: std::io::Error) -> Self {
        Failure { code: exit::PARSE, kind: "io", message: format!("{path}: {e}") }
    }

    pub fn to_json(&self) -> Value {
        json!({"schema_version": SCHEMA_VERSION, "error": self.kind, "exit_code": self.code, "message": self.message})
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::DuplicateElement(_)
            | Error::UnknownElementInCover(_)
            | Error::UnknownElement(_)
            | Error::ReservedName(_)
            | Error::CycleDetected(_)
            | Error::ValueAtInfinity
            | Error::EmptyPoset
            | Error::Parse(_) => (exit::PARSE, "parse"),
            Error::NotInCone(_) => (exit::CONE, "not_in_cone"),
            Error::OutOfRange(_) | Error::BoxTooLarge(_) => (exit::RANGE, "out_of_range"),
            Error::NotComparable(..)
            | Error::IsAntichain
            | Error::NotInG
            | Error::PreconditionViolated(_)
            | Error::Overflow => (exit::INVARIANT, "invariant_breach"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

/// SHA-256 over the input files, each prefixed by its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Report {
    pub command: Value,
    pub input_digest: String,
    pub warnings: Vec<String>,
    pub result: Value,
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), self.command.clone());
        m.insert("input_digest".into(), json!(self.input_digest));
        m.insert("warnings".into(), json!(self.warnings));
        m.insert("result".into(), self.result.clone());
        if let Some(ms) = self.elapsed_ms {
            m.insert("elapsed_ms".into(), json!(ms));
        }
        Value::Object(m)
    }

    /// Two-column table of every leaf, keyed by its dotted path.
    pub fn to_table(&self) -> String {
        let mut rows = Vec::new();
        flatten("", &self.to_json(), &mut rows);
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
