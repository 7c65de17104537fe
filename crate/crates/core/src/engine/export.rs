use serde::{Deserialize, Serialize};

use super::{derived_measure_table, Atoms, PidResult};
use crate::concepts::BaseConcept;
use crate::error::{PidError, Result};
use crate::lattice::{antichain_from_f, antichain_from_f_tilde, f_from_antichain, universe, Antichain};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomRecord {
    pub alpha: String,
    pub alpha_tilde: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub concept: String,
    pub alpha: String,
    pub value: f64,
}

/// The exported form of a [`PidResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub n: usize,
    pub concept: String,
    pub measure: String,
    pub digest: String,
    pub atoms: Vec<AtomRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRecord>>,
}

fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Atom records sorted by their `α` string.
pub(crate) fn atom_records(atoms: &Atoms) -> Vec<AtomRecord> {
    let mut records: Vec<AtomRecord> = atoms
        .iter()
        .map(|(f, v)| AtomRecord {
            alpha: antichain_from_f(f).to_string(),
            alpha_tilde: antichain_from_f_tilde(f).to_string(),
            value: clean(v),
        })
        .collect();
    records.sort_by(|a, b| a.alpha.cmp(&b.alpha));
    records
}

impl PidResult {
    pub fn to_json_value(&self, with_table: bool) -> Result<ResultJson> {
        let table = if with_table {
            let mut rows = Vec::new();
            for m in derived_measure_table(self.atoms())? {
                for (a, v) in m.iter() {
                    rows.push(TableRecord {
                        concept: m.concept().tag().into(),
                        alpha: a.to_string(),
                        value: clean(v),
                    });
                }
            }
            Some(rows)
        } else {
            None
        };
        Ok(ResultJson {
            n: self.n(),
            concept: self.meta().concept.tag().into(),
            measure: self.meta().measure.clone(),
            digest: self.meta().digest.clone(),
            atoms: atom_records(self.atoms()),
            table,
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self, with_table: bool) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_json_value(with_table)?).expect("serialisable");
        s.push('\n');
        Ok(s)
    }
}

/// A result file read back for checking.
#[derive(Clone, Debug, PartialEq)]
pub struct ImportedResult {
    pub concept: BaseConcept,
    pub measure: String,
    pub digest: String,
    pub atoms: Atoms,
}

pub fn parse_result_json(text: &str) -> Result<ImportedResult> {
    let doc: ResultJson = serde_json::from_str(text).map_err(|e| PidError::Parse {
        line: e.line(),
        field: "document".into(),
        message: e.to_string(),
    })?;
    let n = doc.n;
    let u = universe(n)?;
    let concept: BaseConcept = doc.concept.parse()?;
    let mut values: Vec<Option<f64>> = vec![None; u.atoms().len()];
    for rec in &doc.atoms {
        let alpha = Antichain::parse(n, &rec.alpha)?;
        let f = f_from_antichain(&alpha)?;
        if antichain_from_f_tilde(&f).to_string() != rec.alpha_tilde {
            return Err(PidError::Validation(format!(
                "atom {} has alpha_tilde {}, expected {}",
                rec.alpha,
                rec.alpha_tilde,
                antichain_from_f_tilde(&f)
            )));
        }
        if !rec.value.is_finite() {
            return Err(PidError::Validation(format!("atom {} is not finite", rec.alpha)));
        }
        let i = u.atom_index(&f).expect("f_α is an atom");
        if values[i].replace(rec.value).is_some() {
            return Err(PidError::Validation(format!("duplicate atom {}", rec.alpha)));
        }
    }
    let missing: Vec<String> = u
        .atoms()
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_none())
        .map(|(f, _)| antichain_from_f(f).to_string())
        .collect();
    if !missing.is_empty() {
        return Err(PidError::Completeness {
            concept: "atoms".into(),
            missing: missing.join(", "),
        });
    }
    Ok(ImportedResult {
        concept,
        measure: doc.measure,
        digest: doc.digest,
        atoms: Atoms::new(n, values.into_iter().map(|v| v.expect("complete")).collect())?,
    })
}
