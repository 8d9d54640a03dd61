//! The JSON document emitted by every command, and its plain-text view.

use serde::Serialize;
use serde_json::{json, Value};
use sgpcalc_core::classify::ClassificationReport;
use sgpcalc_core::invariants::InvariantReport;
use sgpcalc_core::propositions::PropositionOutcome;
use sgpcalc_core::{FractionalIdeal, IdealArithmetic, Result, SemigroupRing};

pub const SCHEMA_VERSION: u32 = 1;

/// Samuel values reported alongside the invariants: `ℓ(R/m^(n+1))` for
/// `n = 0..=SAMUEL_UPTO`.
pub const SAMUEL_UPTO: u32 = 6;

#[derive(Clone, Debug, Default)]
pub struct Document {
    pub invariants: Option<InvariantReport>,
    pub ideal: Option<Value>,
    pub classification: Option<ClassificationReport>,
    pub outcomes: Option<Vec<PropositionOutcome>>,
    pub hilbert: Option<Vec<usize>>,
}

pub fn ideal_section(ring: &SemigroupRing, ideal: &FractionalIdeal) -> Result<Value> {
    let mut v = json!({
        "generators": ideal.minimal_generators(),
        "sporadic": ideal.sporadic(),
        "threshold": ideal.threshold(),
        "mu": ideal.mu(),
    });
    if ring.is_integral(ideal)? {
        v["colength"] = json!(ideal.colength()?);
    }
    Ok(v)
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}

impl Document {
    pub fn to_value(&self) -> Value {
        let mut doc = json!({ "schema_version": SCHEMA_VERSION });
        if let Some(inv) = &self.invariants {
            doc["semigroup"] = json!({
                "generators": inv.generators,
                "frobenius": inv.frobenius,
                "gaps": inv.gaps,
                "pf": inv.pseudo_frobenius,
                "type": inv.ring_type,
                "symmetric": inv.symmetric,
                "nearly_gorenstein": inv.nearly_gorenstein,
            });
            let mut invariants = json!({
                "e": inv.multiplicity,
                "embdim": inv.embedding_dimension,
                "eli": inv.eli,
                "ulr": inv.ulr,
                "gll_mono": inv.gll_mono.g,
                "gll_witness": inv.gll_mono.witness,
                "gll_exact_flag": inv.gll_exact,
                "gr_cm": inv.gr_cm,
                "samuel": inv.samuel,
            });
            if let Some(index) = inv.index {
                invariants["index"] = json!(index);
            }
            doc["invariants"] = invariants;
        }
        if let Some(ideal) = &self.ideal {
            doc["ideal"] = ideal.clone();
        }
        if let Some(c) = &self.classification {
            doc["classification"] = json!({
                "elias": c.elias,
                "burch": c.burch,
                "ulrich": c.ulrich,
                "evidence": {
                    "type_of_quotient": c.elias_evidence.type_of_quotient,
                    "type_of_ideal": c.elias_evidence.type_of_ideal,
                    "m_times_ideal": to_value(&c.burch_evidence.m_times_ideal),
                    "m_times_colon": to_value(&c.burch_evidence.m_times_colon),
                    "mu": c.mu,
                    "e": c.multiplicity,
                    "ulrich_witness_ok": c.ulrich_witness_ok,
                    "socle_criterion": c.socle_criterion,
                    "colon_criteria": to_value(&c.colon_criteria),
                    "witness_search": "monomial",
                },
            });
        }
        if let Some(outcomes) = &self.outcomes {
            doc["outcomes"] = to_value(outcomes);
        }
        if let Some(lengths) = &self.hilbert {
            doc["hilbert"] = json!({ "lengths": lengths });
        }
        doc
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("json");
        text.push('\n');
        text
    }

    /// Flattened `key: value` lines of the JSON document.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        flatten("", &self.to_value(), &mut out);
        out
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}
