use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::JointDistribution;
use crate::error::{PidError, Result};

/// On-disk encodings of a joint distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JointFormat {
    Json,
    Tsv,
}

impl FromStr for JointFormat {
    type Err = PidError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(JointFormat::Json),
            "tsv" => Ok(JointFormat::Tsv),
            other => Err(PidError::Validation(format!(
                "unknown format `{other}` (expected json or tsv)"
            ))),
        }
    }
}

impl JointFormat {
    /// Guesses the format from a file extension, defaulting to JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("tsv") | Some("txt") => JointFormat::Tsv,
            _ => JointFormat::Json,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonFile {
    n_sources: usize,
    source_alphabets: Vec<usize>,
    target_alphabet: usize,
    pmf: Vec<JsonEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEntry {
    state: Vec<usize>,
    p: f64,
}

pub fn load_joint(path: &Path, format: JointFormat) -> Result<JointDistribution> {
    let text = std::fs::read_to_string(path).map_err(|source| PidError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_joint(&text, format)
}

pub fn parse_joint(text: &str, format: JointFormat) -> Result<JointDistribution> {
    match format {
        JointFormat::Json => parse_json(text),
        JointFormat::Tsv => parse_tsv(text),
    }
}

fn parse_json(text: &str) -> Result<JointDistribution> {
    let file: JsonFile = serde_json::from_str(text).map_err(|e| PidError::Parse {
        line: e.line(),
        field: json_field(&e),
        message: e.to_string(),
    })?;
    if file.n_sources != file.source_alphabets.len() {
        return Err(PidError::Validation(format!(
            "n_sources is {} but source_alphabets has {} entries",
            file.n_sources,
            file.source_alphabets.len()
        )));
    }
    let pmf: Vec<(Vec<usize>, f64)> = file.pmf.into_iter().map(|e| (e.state, e.p)).collect();
    JointDistribution::from_pmf(file.source_alphabets, file.target_alphabet, &pmf)
}

fn json_field(e: &serde_json::Error) -> String {
    let msg = e.to_string();
    for key in ["n_sources", "source_alphabets", "target_alphabet", "pmf", "state", "p"] {
        if msg.contains(&format!("`{key}`")) {
            return key.to_string();
        }
    }
    "document".to_string()
}

fn parse_tsv(text: &str) -> Result<JointDistribution> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| PidError::Parse {
        line: 1,
        field: "header".into(),
        message: "empty file".into(),
    })?;
    let columns: Vec<&str> = header.split('\t').map(str::trim).collect();
    let n = columns.len().saturating_sub(2);
    let expected: Vec<String> = (1..=n)
        .map(|i| format!("s{i}"))
        .chain(["t".to_string(), "p".to_string()])
        .collect();
    if n == 0 || columns != expected {
        return Err(PidError::Parse {
            line: 1,
            field: "header".into(),
            message: format!("expected `s1 … sn t p` separated by tabs, got `{header}`"),
        });
    }

    let mut pmf = Vec::new();
    let mut alphabets = vec![1usize; n + 1];
    for (idx, line) in lines {
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        if fields.len() != n + 2 {
            return Err(PidError::Parse {
                line: lineno,
                field: "row".into(),
                message: format!("expected {} fields, got {}", n + 2, fields.len()),
            });
        }
        let mut state = Vec::with_capacity(n + 1);
        for (col, raw) in fields[..=n].iter().enumerate() {
            let sym: usize = raw.parse().map_err(|_| PidError::Parse {
                line: lineno,
                field: expected[col].clone(),
                message: format!("`{raw}` is not a nonnegative integer symbol"),
            })?;
            alphabets[col] = alphabets[col].max(sym + 1);
            state.push(sym);
        }
        let p: f64 = fields[n + 1].parse().map_err(|_| PidError::Parse {
            line: lineno,
            field: "p".into(),
            message: format!("`{}` is not a number", fields[n + 1]),
        })?;
        pmf.push((state, p));
    }
    let target = alphabets.pop().expect("n + 1 columns");
    JointDistribution::from_pmf(alphabets, target, &pmf)
}

/// Serialises the nonzero-mass outcomes in table order.
pub fn write_joint(dist: &JointDistribution, format: JointFormat) -> String {
    match format {
        JointFormat::Json => {
            let file = JsonFile {
                n_sources: dist.n_sources(),
                source_alphabets: dist.source_alphabets().to_vec(),
                target_alphabet: dist.target_alphabet(),
                pmf: dist.support().map(|(state, p)| JsonEntry { state, p }).collect(),
            };
            let mut s = serde_json::to_string_pretty(&file).expect("serialisable");
            s.push('\n');
            s
        }
        JointFormat::Tsv => {
            let mut out = String::new();
            for i in 1..=dist.n_sources() {
                let _ = write!(out, "s{i}\t");
            }
            out.push_str("t\tp\n");
            for (state, p) in dist.support() {
                for s in state {
                    let _ = write!(out, "{s}\t");
                }
                let _ = writeln!(out, "{p}");
            }
            out
        }
    }
}
