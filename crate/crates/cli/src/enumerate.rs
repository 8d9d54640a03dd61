//! Corpus enumeration: semigroups by genus and monomial ideals by generators.

use std::collections::HashSet;
use std::sync::Arc;

use sgpcalc_core::{FractionalIdeal, NumericalSemigroup, Result};

/// Every numerical semigroup of genus at most `max_genus`, each exactly once.
///
/// Walks the semigroup tree: the children of `S` are `S \ {a}` for the
/// minimal generators `a` larger than the Frobenius number. The order is by
/// genus, then by parent, then by the removed generator.
pub fn enumerate_semigroups(max_genus: usize) -> Result<Vec<NumericalSemigroup>> {
    let mut all = vec![NumericalSemigroup::new(&[1])?];
    let mut level_start = 0;
    for _ in 0..max_genus {
        let level_end = all.len();
        for idx in level_start..level_end {
            let children: Vec<i64> = all[idx]
                .generators()
                .iter()
                .copied()
                .filter(|&a| a > all[idx].frobenius())
                .collect();
            for a in children {
                let child = all[idx].without_generator(a)?;
                all.push(child);
            }
        }
        level_start = level_end;
    }
    Ok(all)
}

/// All distinct nonzero proper ideals generated by at most `max_gens`
/// elements of `S ∩ [1, bound]`, in order of first appearance when subsets
/// are listed by size and then lexicographically.
pub fn enumerate_ideals(
    semigroup: &Arc<NumericalSemigroup>,
    bound: i64,
    max_gens: usize,
) -> Vec<FractionalIdeal> {
    let candidates: Vec<i64> = (1..=bound).filter(|&z| semigroup.contains(z)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    for size in 1..=max_gens {
        subsets(&candidates, size, 0, &mut chosen, &mut |gens| {
            // Generators differing by an element of S are redundant; the
            // smaller subset already produced this ideal.
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(i, &a)| gens[i + 1..].iter().any(|&b| semigroup.contains(b - a)));
            if redundant {
                return;
            }
            let ideal =
                FractionalIdeal::from_generators(semigroup, gens).expect("nonempty generator list");
            if seen.insert(ideal.normal_form().clone()) {
                out.push(ideal);
            }
        });
    }
    out
}

fn subsets(
    items: &[i64],
    size: usize,
    start: usize,
    chosen: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for idx in start..items.len() {
        chosen.push(items[idx]);
        subsets(items, size, idx + 1, chosen, visit);
        chosen.pop();
    }
}

/// Default ideal generator bound `c + 2e`.
pub fn default_bound(semigroup: &NumericalSemigroup) -> i64 {
    semigroup.conductor().max(0) + 2 * semigroup.multiplicity()
}
