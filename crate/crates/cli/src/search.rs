//! Corpus search: every proposition over every enumerated instance.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sgpcalc_core::propositions::{
    Certificate, Evaluator, Instance, InstanceDescriptor, PropositionId, Shape,
};
use sgpcalc_core::{FractionalIdeal, NumericalSemigroup, Result, SemigroupRing};

use crate::enumerate::{default_bound, enumerate_ideals, enumerate_semigroups};
use crate::report::SCHEMA_VERSION;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_genus: usize,
    /// Largest ideal generator; `None` means `c + 2e` per semigroup.
    pub gen_bound: Option<i64>,
    /// Generators per ideal for single-ideal statements.
    pub max_gens: usize,
    /// Generators per ideal for statements about pairs of ideals.
    pub pair_max_gens: usize,
    pub props: Vec<PropositionId>,
    /// Violations per semigroup and proposition that carry a certificate;
    /// the rest are listed by instance only.
    pub certificates_per_semigroup: usize,
    #[serde(skip, default)]
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_genus: 8,
            gen_bound: None,
            max_gens: 4,
            pair_max_gens: 2,
            props: PropositionId::ALL.to_vec(),
            certificates_per_semigroup: 2,
            jobs: 1,
        }
    }
}

/// One violating instance. The certificate is present for the first
/// `certificates_per_semigroup` violations of each semigroup; the rest can be
/// reproduced with `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: InstanceDescriptor,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionSummary {
    pub instances_checked: u64,
    pub hypotheses_held: u64,
    pub violations: Vec<Violation>,
}

impl PropositionSummary {
    fn absorb(&mut self, other: PropositionSummary) {
        self.instances_checked += other.instances_checked;
        self.hypotheses_held += other.hypotheses_held;
        self.violations.extend(other.violations);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub config: SearchConfig,
    pub semigroups_checked: usize,
    pub ideals_enumerated: usize,
    pub propositions: BTreeMap<PropositionId, PropositionSummary>,
}

impl SearchReport {
    /// Compact JSON with sorted keys and a trailing newline. Violation lists
    /// run to hundreds of thousands of entries, so the report is not indented.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut text = serde_json::to_string(&value).expect("value serializes");
        text.push('\n');
        text
    }
}

struct SemigroupResult {
    ideals: usize,
    summaries: BTreeMap<PropositionId, PropositionSummary>,
}

type Ideal = FractionalIdeal;

struct Recorder<'a, 'r> {
    ev: &'a Evaluator<'r, SemigroupRing>,
    certificates: usize,
}

impl Recorder<'_, '_> {
    fn record(
        &self,
        summary: &mut PropositionSummary,
        id: PropositionId,
        inst: &Instance<Ideal>,
    ) -> Result<()> {
        let v = self.ev.evaluate(id, inst)?;
        summary.instances_checked += 1;
        if v.hypotheses_hold {
            summary.hypotheses_held += 1;
        }
        if v.violation() {
            let certificate = if summary.violations.len() < self.certificates {
                Some(Certificate::build(self.ev.ring(), id, inst, &v)?)
            } else {
                None
            };
            summary.violations.push(Violation {
                instance: self.ev.describe(inst)?,
                witness: v.witness,
                certificate,
            });
        }
        Ok(())
    }
}

fn ring_instances(ring: &SemigroupRing, id: PropositionId) -> Vec<Option<i64>> {
    let s = ring.semigroup();
    match id {
        PropositionId::SuperficialColength => s.generators().iter().map(|&a| Some(a)).collect(),
        PropositionId::LoewyBoundFromInjectivity | PropositionId::LoewyBoundFromRegularForm => {
            if !s.is_symmetric() {
                return Vec::new();
            }
            let top = default_bound(s);
            (1..=top).filter(|&a| s.contains(a)).map(Some).collect()
        }
        _ => vec![None],
    }
}

fn check_semigroup(s: &NumericalSemigroup, config: &SearchConfig) -> Result<SemigroupResult> {
    let semigroup = Arc::new(s.clone());
    let ring = SemigroupRing::new(Arc::clone(&semigroup));
    let ev = Evaluator::new(&ring)?;
    let rec = Recorder {
        ev: &ev,
        certificates: config.certificates_per_semigroup,
    };
    let bound = config.gen_bound.unwrap_or_else(|| default_bound(s));
    let ideals = enumerate_ideals(&semigroup, bound, config.max_gens);
    let pool: Vec<&Ideal> = ideals
        .iter()
        .filter(|i| i.mu() <= config.pair_max_gens)
        .collect();

    let mut summaries = BTreeMap::new();
    for &id in &config.props {
        let mut summary = PropositionSummary::default();
        match id.shape() {
            Shape::Ring => {
                for x in ring_instances(&ring, id) {
                    let inst = Instance {
                        x,
                        ..Instance::default()
                    };
                    rec.record(&mut summary, id, &inst)?;
                }
            }
            Shape::Single => {
                for i in &ideals {
                    let xs: Vec<Option<i64>> = if id == PropositionId::ColonCriterionAtGenerator {
                        s.generators()
                            .iter()
                            .filter(|&&a| i.contains(a))
                            .map(|&a| Some(a))
                            .collect()
                    } else {
                        vec![None]
                    };
                    for x in xs {
                        let inst = Instance {
                            i: Some(i.clone()),
                            x,
                            ..Instance::default()
                        };
                        rec.record(&mut summary, id, &inst)?;
                    }
                }
            }
            Shape::Pair | Shape::Linked => {
                for &i in &pool {
                    for &other in &pool {
                        let mut inst = Instance {
                            i: Some(i.clone()),
                            ..Instance::default()
                        };
                        if id.shape() == Shape::Pair {
                            inst.j = Some(other.clone());
                        } else {
                            inst.k = Some(other.clone());
                        }
                        rec.record(&mut summary, id, &inst)?;
                    }
                }
            }
        }
        summaries.insert(id, summary);
    }
    Ok(SemigroupResult {
        ideals: ideals.len(),
        summaries,
    })
}

/// Runs the configured search. The report does not depend on `jobs`.
pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    let corpus: Vec<NumericalSemigroup> = enumerate_semigroups(config.max_genus)?
        .into_iter()
        .filter(|s| s.genus() > 0)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<SemigroupResult> = pool.install(|| {
        corpus
            .par_iter()
            .map(|s| check_semigroup(s, config))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut propositions: BTreeMap<PropositionId, PropositionSummary> = config
        .props
        .iter()
        .map(|&id| (id, PropositionSummary::default()))
        .collect();
    let mut ideals = 0;
    for result in results {
        ideals += result.ideals;
        for (id, summary) in result.summaries {
            propositions.entry(id).or_default().absorb(summary);
        }
    }
    for summary in propositions.values_mut() {
        summary
            .violations
            .sort_by(|a, b| a.instance.cmp(&b.instance));
    }
    Ok(SearchReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        semigroups_checked: corpus.len(),
        ideals_enumerated: ideals,
        propositions,
    })
}
