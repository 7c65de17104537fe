use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::{domain_for_concept, in_domain, BaseConcept};
use crate::error::{PidError, Result};
use crate::info::JointDistribution;
use crate::lattice::{Antichain, SourceSet};

/// A base-concept measure given on every antichain of its domain.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureAssignment {
    concept: BaseConcept,
    n: usize,
    domain: Vec<Antichain>,
    values: Vec<f64>,
    index: HashMap<Antichain, usize>,
}

impl MeasureAssignment {
    /// Checks that `values` covers the domain exactly once with finite
    /// numbers.
    pub fn new(concept: BaseConcept, n: usize, values: impl IntoIterator<Item = (Antichain, f64)>) -> Result<Self> {
        let domain = domain_for_concept(concept, n)?;
        let index: HashMap<Antichain, usize> = domain.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let mut slots: Vec<Option<f64>> = vec![None; domain.len()];
        for (alpha, v) in values {
            if alpha.n() != n {
                return Err(PidError::Validation(format!(
                    "antichain {alpha} is over {} sources, expected {n}",
                    alpha.n()
                )));
            }
            let i = *index.get(&alpha).ok_or_else(|| PidError::Domain {
                context: concept.tag().into(),
                antichain: alpha.to_string(),
            })?;
            if !v.is_finite() {
                return Err(PidError::Validation(format!("value {v} at {alpha} is not finite")));
            }
            if slots[i].replace(v).is_some() {
                return Err(PidError::Validation(format!("duplicate value for {alpha}")));
            }
        }
        let missing: Vec<String> = domain
            .iter()
            .zip(&slots)
            .filter(|(_, v)| v.is_none())
            .map(|(a, _)| a.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(PidError::Completeness {
                concept: concept.tag().into(),
                missing: summarize(&missing),
            });
        }
        Ok(MeasureAssignment {
            concept,
            n,
            domain,
            values: slots.into_iter().map(|v| v.expect("complete")).collect(),
            index,
        })
    }

    /// Evaluates `value` on every antichain of the domain.
    pub fn from_fn(concept: BaseConcept, n: usize, mut value: impl FnMut(&Antichain) -> f64) -> Result<Self> {
        let domain = domain_for_concept(concept, n)?;
        let pairs: Vec<(Antichain, f64)> = domain
            .into_iter()
            .map(|a| {
                let v = value(&a);
                (a, v)
            })
            .collect();
        Self::new(concept, n, pairs)
    }

    pub fn concept(&self) -> BaseConcept {
        self.concept
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> &[Antichain] {
        &self.domain
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, alpha: &Antichain) -> Option<f64> {
        self.index.get(alpha).map(|&i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Antichain, f64)> {
        self.domain.iter().zip(self.values.iter().copied())
    }

    /// The measure-file JSON form, keys in canonical order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = write!(out, "  \"concept\": {}", serde_json::Value::from(self.concept.tag()));
        for (a, v) in self.iter() {
            let _ = write!(
                out,
                ",\n  {}: {}",
                serde_json::Value::from(a.to_string()),
                serde_json::Value::from(v)
            );
        }
        out.push_str("\n}\n");
        out
    }
}

fn summarize(missing: &[String]) -> String {
    const SHOWN: usize = 5;
    let head = missing[..missing.len().min(SHOWN)].join(", ");
    if missing.len() > SHOWN {
        format!("{head} and {} more", missing.len() - SHOWN)
    } else {
        head
    }
}

/// The `concept` field of a measure file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureFileConcept {
    Concept(BaseConcept),
    /// Synergistic-disclosure values on antichains with at least two
    /// collections, to be completed by [`msd_wrap`].
    SynergisticDisclosure,
}

/// A parsed measure file, not yet checked for completeness.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureFile {
    pub concept: MeasureFileConcept,
    pub entries: Vec<(Antichain, f64)>,
}

pub const SYNERGISTIC_DISCLOSURE_TAG: &str = "synergistic-disclosure";

/// Reads a JSON object of antichain strings to numbers plus a `concept`
/// field.
pub fn parse_measure_file(text: &str, n: usize) -> Result<MeasureFile> {
    let map: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text).map_err(|e| PidError::Parse {
        line: e.line(),
        field: "document".into(),
        message: e.to_string(),
    })?;
    let line_of = |key: &str| {
        let needle = serde_json::Value::from(key).to_string();
        text.find(&needle)
            .map_or(1, |pos| text[..pos].matches('\n').count() + 1)
    };
    let concept = match map.get("concept") {
        Some(serde_json::Value::String(tag)) if tag == SYNERGISTIC_DISCLOSURE_TAG => {
            MeasureFileConcept::SynergisticDisclosure
        }
        Some(serde_json::Value::String(tag)) => {
            MeasureFileConcept::Concept(tag.parse().map_err(|e: PidError| PidError::Parse {
                line: line_of("concept"),
                field: "concept".into(),
                message: e.to_string(),
            })?)
        }
        _ => {
            return Err(PidError::Parse {
                line: 1,
                field: "concept".into(),
                message: "missing string field `concept`".into(),
            })
        }
    };
    let mut entries = Vec::with_capacity(map.len().saturating_sub(1));
    let mut seen: BTreeMap<Antichain, String> = BTreeMap::new();
    for (key, value) in &map {
        if key == "concept" {
            continue;
        }
        let parse_err = |message: String| PidError::Parse {
            line: line_of(key),
            field: key.clone(),
            message,
        };
        let alpha = Antichain::parse(n, key).map_err(|e| parse_err(e.to_string()))?;
        let v = value
            .as_f64()
            .ok_or_else(|| parse_err(format!("expected a number, got {value}")))?;
        if let Some(prev) = seen.insert(alpha.clone(), key.clone()) {
            return Err(parse_err(format!("`{key}` and `{prev}` name the same antichain")));
        }
        entries.push((alpha, v));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(MeasureFile { concept, entries })
}

impl MeasureFile {
    /// Validates the entries against the concept's domain; synergistic
    /// disclosure values are completed with the distribution's self terms.
    pub fn into_assignment(self, n: usize, dist: Option<&JointDistribution>) -> Result<MeasureAssignment> {
        match self.concept {
            MeasureFileConcept::Concept(c) => MeasureAssignment::new(c, n, self.entries),
            MeasureFileConcept::SynergisticDisclosure => {
                let dist = dist
                    .ok_or_else(|| PidError::Validation("synergistic-disclosure values need a distribution".into()))?;
                let sd: BTreeMap<Antichain, f64> = self.entries.into_iter().collect();
                msd_wrap(&sd, dist)
            }
        }
    }
}

/// Modified synergistic disclosure: supplied values on antichains with at
/// least two collections, `I(aᶜ:T|a)` at every `{a}`.
pub fn msd_wrap(sd_values: &BTreeMap<Antichain, f64>, dist: &JointDistribution) -> Result<MeasureAssignment> {
    let n = dist.n_sources();
    let concept = BaseConcept::WeakSynergy;
    for alpha in sd_values.keys() {
        if alpha.n() != n || !in_domain(concept, alpha) {
            return Err(PidError::Domain {
                context: SYNERGISTIC_DISCLOSURE_TAG.into(),
                antichain: alpha.to_string(),
            });
        }
    }
    let domain = domain_for_concept(concept, n)?;
    let missing: Vec<String> = domain
        .iter()
        .filter(|a| a.len() >= 2 && !sd_values.contains_key(a))
        .map(|a| a.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(PidError::Completeness {
            concept: SYNERGISTIC_DISCLOSURE_TAG.into(),
            missing: summarize(&missing),
        });
    }
    MeasureAssignment::from_fn(concept, n, |alpha| {
        if alpha.len() >= 2 {
            sd_values[alpha]
        } else {
            let a: SourceSet = alpha.collections()[0];
            dist.conditional_mi(a.complement(), a)
        }
    })
}
