//! Structural properties checked over the whole enumerated corpus.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use sgpcalc_core::classify::{classify, is_burch};
use sgpcalc_core::invariants::{
    elias_index, gll_monomial, gr_is_cm, index_of_gorenstein, reduction_number_of_m, samuel_length,
    ulrich_index,
};
use sgpcalc_core::{FractionalIdeal, IdealArithmetic, NumericalSemigroup, Result, SemigroupRing};

use crate::enumerate::{default_bound, enumerate_ideals, enumerate_semigroups};

/// Counts for one property: how many instances were examined and which
/// ones failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: u64,
    pub violations: Vec<String>,
}

pub const PROPERTIES: &[&str] = &[
    "colon criterion implies Elias",
    "socle criterion implies Elias",
    "Elias ideals closed under inclusion",
    "powers of m and valuation truncations are Burch",
    "Ulrich iff multiplicity translate equals mE",
    "type of quotient at most type of ideal",
    "double canonical duality",
    "Gorenstein index bounded by gll and e",
    "Cohen-Macaulay graded ring: eli = ulr + 1 = gll",
    "Samuel differences stabilize at e",
    "colength of multiplicity ideal is e",
];

struct Tally {
    results: Vec<PropertyResult>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            results: PROPERTIES
                .iter()
                .map(|&name| PropertyResult {
                    name,
                    ..PropertyResult::default()
                })
                .collect(),
        }
    }

    fn check(&mut self, idx: usize, ok: bool, describe: impl FnOnce() -> String) {
        let r = &mut self.results[idx];
        r.checked += 1;
        if !ok {
            r.violations.push(describe());
        }
    }

    fn absorb(&mut self, other: Tally) {
        for (mine, theirs) in self.results.iter_mut().zip(other.results) {
            mine.checked += theirs.checked;
            mine.violations.extend(theirs.violations);
        }
    }
}

fn check_semigroup(s: &NumericalSemigroup) -> Result<Tally> {
    let mut t = Tally::new();
    let semigroup = Arc::new(s.clone());
    let ring = SemigroupRing::new(Arc::clone(&semigroup));
    let ideals = enumerate_ideals(&semigroup, default_bound(s), 4);
    let k = ring.canonical()?;
    let e = s.multiplicity();
    let c = s.conductor();

    let mut elias = Vec::with_capacity(ideals.len());
    for ideal in &ideals {
        let report = classify(&ring, ideal, None)?;
        let here = || format!("{s} {ideal}");
        elias.push(report.elias);
        let any_colon = report.colon_criteria.iter().any(|c| c.holds);
        t.check(0, !any_colon || report.elias, here);
        t.check(1, !report.socle_criterion || report.elias, here);
        t.check(4, report.ulrich == report.ulrich_witness_ok, here);
        let ev = report.elias_evidence;
        t.check(5, ev.type_of_quotient <= ev.type_of_ideal, here);
        let dual = ring.colon_q(&k, ideal)?;
        t.check(6, ring.colon_q(&k, &dual)? == *ideal, here);
    }

    for (a, big) in ideals.iter().enumerate() {
        if !elias[a] {
            continue;
        }
        for (b, small) in ideals.iter().enumerate() {
            if small.is_subset(big) {
                t.check(2, elias[b], || format!("{s} {small} inside Elias {big}"));
            }
        }
    }

    for n in 1..=5 {
        let power = ring.power_of_maximal(n)?;
        t.check(3, is_burch(&ring, &power)?, || format!("{s} m^{n}"));
    }
    for v in 1..=default_bound(s) {
        let truncation = FractionalIdeal::from_generators(
            &semigroup,
            &(v..v + c.max(0) + e)
                .filter(|&z| s.contains(z))
                .collect::<Vec<_>>(),
        )?;
        t.check(3, is_burch(&ring, &truncation)?, || {
            format!("{s} S ∩ [{v},oo)")
        });
    }

    let eli = elias_index(&ring)?;
    let ulr = ulrich_index(&ring)?;
    let gll = gll_monomial(&ring)?.g;
    if s.is_symmetric() {
        let index = index_of_gorenstein(&ring)?;
        t.check(7, index <= gll && index as i64 <= e, || {
            format!("{s} index {index}")
        });
    }
    if gr_is_cm(&ring)? {
        let r = reduction_number_of_m(&ring, e)?;
        t.check(8, eli == gll && gll == ulr + 1 && r == ulr, || {
            format!("{s} eli {eli} ulr {ulr} gll {gll} reduction {r}")
        });
    }
    for n in c.max(0) as u32..c.max(0) as u32 + 4 {
        let diff = samuel_length(&ring, n + 1)? as i64 - samuel_length(&ring, n)? as i64;
        t.check(9, diff == e, || format!("{s} n={n} difference {diff}"));
    }
    let colength = ring.colength(&ring.principal(e)?)? as i64;
    t.check(10, colength == e, || format!("{s} colength {colength}"));
    Ok(t)
}

/// Runs every property over the semigroups of genus `1..=max_genus` and the
/// ideals generated by at most four elements of `S ∩ [1, c + 2e]`.
pub fn check_corpus(max_genus: usize, jobs: usize) -> Result<Vec<PropertyResult>> {
    let corpus: Vec<NumericalSemigroup> = enumerate_semigroups(max_genus)?
        .into_iter()
        .filter(|s| s.genus() > 0)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let tallies = pool.install(|| {
        corpus
            .par_iter()
            .map(check_semigroup)
            .collect::<Result<Vec<_>>>()
    })?;
    let mut total = Tally::new();
    for t in tallies {
        total.absorb(t);
    }
    Ok(total.results)
}
