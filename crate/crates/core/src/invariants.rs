//! Ring invariants: Hilbert-Samuel lengths, regularity of initial forms,
//! Elias and Ulrich indices, generalized Loewy length over monomial
//! parameters, reduction numbers and superficial elements.
//!
//! All searches run over monomials `t^a`. Every search has a hard bound of
//! `c + 2` (or `max(c, e) + 2` for reduction numbers); reaching it means the
//! arithmetic is wrong, and is reported as [`Error::BoundExceeded`].

use serde::Serialize;

use crate::arith::{IdealArithmetic, SemigroupRing};
use crate::classify::{type_of_ideal, type_of_quotient};
use crate::error::{Error, Result};

fn search_bound<A: IdealArithmetic>(ring: &A) -> u32 {
    (ring.conductor().max(0) + 2) as u32
}

fn require_nonzero_element<A: IdealArithmetic>(ring: &A, a: i64) -> Result<()> {
    if a > 0 && ring.in_semigroup(a) {
        Ok(())
    } else {
        Err(Error::NotInSemigroup(a))
    }
}

/// `ℓ(R/m^n)`. The Samuel function at `n` is `samuel_length(n + 1)`.
pub fn samuel_length<A: IdealArithmetic>(ring: &A, n: u32) -> Result<usize> {
    ring.colength(&ring.power_of_maximal(n)?)
}

/// Whether the initial form of `t^a` is a nonzerodivisor of the associated
/// graded ring, i.e. `ord(s + a) = ord(s) + ord(a)` for every `s` in `S`.
///
/// Checked for all `s` with `s + a` inside the order window. Beyond
/// `c + n·e` every element has order at least `n`, so violations, which
/// come from short factorizations, show up early.
pub fn is_ord_regular<A: IdealArithmetic>(ring: &A, a: i64) -> Result<bool> {
    require_nonzero_element(ring, a)?;
    let t = ring.ord(a)?;
    for s in 0..ring.ord_window() - a {
        if ring.in_semigroup(s) && ring.ord(s + a)? != ring.ord(s)? + t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// In dimension one the associated graded ring is Cohen-Macaulay iff the
/// initial form of `t^e` is regular.
pub fn gr_is_cm<A: IdealArithmetic>(ring: &A) -> Result<bool> {
    is_ord_regular(ring, ring.multiplicity())
}

/// Generalized Loewy length over monomial parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GllWitness {
    /// Least `n` with `m^n` inside some principal monomial ideal.
    pub g: u32,
    /// Least `a` with `m^g ⊆ t^a R`.
    pub witness: i64,
}

pub fn gll_monomial<A: IdealArithmetic>(ring: &A) -> Result<GllWitness> {
    let bound = search_bound(ring);
    for n in 1..=bound {
        let power = ring.power_of_maximal(n)?;
        let least = ring.min_element(&power);
        for a in 1..=least {
            if !ring.in_semigroup(a) {
                continue;
            }
            if ring.is_subset(&power, &ring.principal(a)?) {
                return Ok(GllWitness { g: n, witness: a });
            }
        }
    }
    Err(Error::BoundExceeded {
        what: "generalized Loewy length",
        bound: bound as i64,
    })
}

/// Least `s >= 1` with `m^s` Elias.
pub fn elias_index<A: IdealArithmetic>(ring: &A) -> Result<u32> {
    let bound = search_bound(ring);
    for s in 1..=bound {
        let power = ring.power_of_maximal(s)?;
        if type_of_quotient(ring, &power)? == type_of_ideal(ring, &power)? {
            return Ok(s);
        }
    }
    Err(Error::BoundExceeded {
        what: "Elias index",
        bound: bound as i64,
    })
}

/// Least `s >= 1` with `μ(m^s) = e`.
pub fn ulrich_index<A: IdealArithmetic>(ring: &A) -> Result<u32> {
    let bound = search_bound(ring);
    let e = ring.multiplicity() as usize;
    for s in 1..=bound {
        if ring.mu(&ring.power_of_maximal(s)?)? == e {
            return Ok(s);
        }
    }
    Err(Error::BoundExceeded {
        what: "Ulrich index",
        bound: bound as i64,
    })
}

/// For a Gorenstein ring an `m`-primary ideal has `δ(R/I) = 1` exactly when
/// it is Elias, so the index equals the Elias index.
pub fn index_of_gorenstein<A: IdealArithmetic>(ring: &A) -> Result<u32> {
    if !ring.is_symmetric() {
        return Err(Error::NotGorenstein);
    }
    elias_index(ring)
}

/// Least `n` with `m^(n+1) = t^a m^n`.
pub fn reduction_number_of_m<A: IdealArithmetic>(ring: &A, a: i64) -> Result<u32> {
    require_nonzero_element(ring, a)?;
    let x = ring.principal(a)?;
    let bound = (ring.conductor().max(ring.multiplicity()) + 2) as u32;
    let mut current = ring.unit()?;
    for n in 0..=bound {
        let next = ring.power_of_maximal(n + 1)?;
        if ring.equal(&next, &ring.product(&x, &current)?) {
            return Ok(n);
        }
        current = next;
    }
    Err(Error::NotAReduction(a))
}

/// Constant used in the superficiality check: `max(c, 1)`.
pub fn superficial_constant<A: IdealArithmetic>(ring: &A) -> u32 {
    ring.conductor().max(1) as u32
}

/// Checks `(m^(n+1) :_R t^a) ∩ m^c = m^n` for `c <= n <= n_max`, with `c`
/// from [`superficial_constant`]. The verdict is window-verified: only the
/// listed `n` are tested.
pub fn is_superficial_monomial<A: IdealArithmetic>(ring: &A, a: i64, n_max: u32) -> Result<bool> {
    require_nonzero_element(ring, a)?;
    let c = superficial_constant(ring);
    let x = ring.principal(a)?;
    let floor = ring.power_of_maximal(c)?;
    for n in c..=n_max {
        let colon = ring.colon_r(&ring.power_of_maximal(n + 1)?, &x)?;
        let lhs = ring.intersect(&colon, &floor)?;
        if !ring.equal(&lhs, &ring.power_of_maximal(n)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default upper end for [`is_superficial_monomial`]: `c + 2e`.
pub fn default_superficial_range<A: IdealArithmetic>(ring: &A) -> u32 {
    (ring.conductor().max(0) + 2 * ring.multiplicity()) as u32
}

/// Outcome of the injectivity test behind the bound `Gll <= index + t - 1`
/// for a monomial `x = t^a` of order `t` in a Gorenstein ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GllBoundCheck {
    pub a: i64,
    pub t: u32,
    /// The index of the ring.
    pub s: u32,
    /// Entry `i - 1` says whether `m^(i-1)/m^i -> m^(i+t-1)/m^(i+t)` is
    /// injective.
    pub injective_by_level: Vec<bool>,
    pub injective_up_to_s: bool,
    pub gll_mono: u32,
    /// `gll_mono <= s + t - 1`; only evaluated when injective.
    pub gll_bound_holds: Option<bool>,
    /// `μ(m^(s+t-1))`.
    pub mu_of_power: usize,
    /// `μ(m^(s+t-1)) > 1` implies `m^(s+t-1) ⊆ t^a R`; only evaluated when
    /// injective.
    pub containment_holds: Option<bool>,
}

/// Multiplication by a monomial sends distinct monomials to distinct
/// monomials, so the graded map at level `i` is injective iff every `s'` of
/// order `i - 1` has `ord(s' + a) = i + t - 1`.
pub fn check_gll_bound<A: IdealArithmetic>(ring: &A, a: i64) -> Result<GllBoundCheck> {
    if !ring.is_symmetric() {
        return Err(Error::NotGorenstein);
    }
    require_nonzero_element(ring, a)?;
    let t = ring.ord(a)?;
    let s = index_of_gorenstein(ring)?;
    let c = ring.conductor().max(0);
    let e = ring.multiplicity();

    let mut injective_by_level = Vec::with_capacity(s as usize);
    for i in 1..=s {
        // Elements of order exactly i - 1 lie below c + i·e.
        let top = c + i as i64 * e;
        if top + a > ring.ord_window() {
            return Err(Error::OutOfWindow {
                needed: top + a,
                window: ring.ord_window(),
            });
        }
        let mut ok = true;
        for sp in 0..top {
            if ring.in_semigroup(sp) && ring.ord(sp)? == i - 1 && ring.ord(sp + a)? != i + t - 1 {
                ok = false;
                break;
            }
        }
        injective_by_level.push(ok);
    }
    let injective_up_to_s = injective_by_level.iter().all(|&b| b);

    let gll = gll_monomial(ring)?;
    let n = s + t - 1;
    let power = ring.power_of_maximal(n)?;
    let mu_of_power = ring.mu(&power)?;
    let (gll_bound_holds, containment_holds) = if injective_up_to_s {
        let contained = ring.is_subset(&power, &ring.principal(a)?);
        (Some(gll.g <= n), Some(mu_of_power <= 1 || contained))
    } else {
        (None, None)
    };

    Ok(GllBoundCheck {
        a,
        t,
        s,
        injective_by_level,
        injective_up_to_s,
        gll_mono: gll.g,
        gll_bound_holds,
        mu_of_power,
        containment_holds,
    })
}

/// Summary of the invariants of one semigroup ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub ring_type: usize,
    pub symmetric: bool,
    /// `m ⊆ trace of the canonical module`.
    pub nearly_gorenstein: bool,
    pub eli: u32,
    pub ulr: u32,
    pub gll_mono: GllWitness,
    /// `gll_mono` equals the true generalized Loewy length. Known exactly
    /// when it meets the lower bound `eli`, which always happens when the
    /// associated graded ring is Cohen-Macaulay.
    pub gll_exact: bool,
    /// Present only for symmetric semigroups.
    pub index: Option<u32>,
    pub gr_cm: bool,
    /// `ℓ(R/m^(n+1))` for `n = 0, 1, ...`.
    pub samuel: Vec<usize>,
}

impl InvariantReport {
    /// Computes every invariant, with Samuel values for `n = 0..=samuel_upto`.
    pub fn compute(ring: &SemigroupRing, samuel_upto: u32) -> Result<Self> {
        let s = ring.semigroup();
        let trace = ring.trace_of_canonical()?;
        let nearly_gorenstein = ring.is_subset(&ring.maximal()?, &trace);
        let eli = elias_index(ring)?;
        let gll_mono = gll_monomial(ring)?;
        let samuel = (0..=samuel_upto)
            .map(|n| samuel_length(ring, n + 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(InvariantReport {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            gaps: s.gaps().to_vec(),
            pseudo_frobenius: s.pseudo_frobenius().to_vec(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            ring_type: s.ring_type(),
            symmetric: s.is_symmetric(),
            nearly_gorenstein,
            eli,
            ulr: ulrich_index(ring)?,
            gll_mono,
            gll_exact: gll_mono.g == eli,
            index: if s.is_symmetric() { Some(eli) } else { None },
            gr_cm: gr_is_cm(ring)?,
            samuel,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::WindowOracle;

    fn ring(gens: &[i64]) -> SemigroupRing {
        SemigroupRing::from_generators(gens).unwrap()
    }

    #[test]
    fn samuel_lengths() {
        // Frozen from the bit-set oracle: S \ m^2 = {0, 4, 6, 7}.
        assert_eq!(samuel_length(&ring(&[4, 6, 7]), 2), Ok(4));
        assert_eq!(samuel_length(&ring(&[4, 6, 7]), 0), Ok(0));
        for n in 0..6 {
            assert_eq!(samuel_length(&ring(&[1]), n), Ok(n as usize));
        }
        let r = ring(&[4, 5, 11]);
        let lengths: Vec<usize> = (1..=5).map(|n| samuel_length(&r, n).unwrap()).collect();
        assert_eq!(lengths, vec![1, 4, 7, 11, 15]);
    }

    #[test]
    fn ord_regularity() {
        assert_eq!(is_ord_regular(&ring(&[4, 6, 7]), 4), Ok(true));
        assert_eq!(is_ord_regular(&ring(&[4, 5, 11]), 4), Ok(false));
        assert_eq!(is_ord_regular(&ring(&[1]), 1), Ok(true));
        assert_eq!(
            is_ord_regular(&ring(&[4, 5, 11]), 7),
            Err(Error::NotInSemigroup(7))
        );
        assert_eq!(gr_is_cm(&ring(&[4, 6, 7])), Ok(true));
        assert_eq!(gr_is_cm(&ring(&[4, 5, 11])), Ok(false));
        assert_eq!(gr_is_cm(&ring(&[2, 3])), Ok(true));
    }

    #[test]
    fn loewy_length() {
        assert_eq!(
            gll_monomial(&ring(&[4, 6, 7])),
            Ok(GllWitness { g: 3, witness: 4 })
        );
        assert_eq!(
            gll_monomial(&ring(&[4, 5, 11])),
            Ok(GllWitness { g: 3, witness: 4 })
        );
        assert_eq!(
            gll_monomial(&ring(&[2, 3])),
            Ok(GllWitness { g: 2, witness: 2 })
        );
        assert_eq!(
            gll_monomial(&ring(&[1])),
            Ok(GllWitness { g: 1, witness: 1 })
        );
    }

    #[test]
    fn elias_and_ulrich_indices() {
        assert_eq!(elias_index(&ring(&[4, 5, 11])), Ok(2));
        assert_eq!(elias_index(&ring(&[4, 6, 7])), Ok(3));
        assert_eq!(elias_index(&ring(&[2, 3])), Ok(2));
        assert_eq!(ulrich_index(&ring(&[4, 6, 7])), Ok(2));
        assert_eq!(ulrich_index(&ring(&[4, 5, 11])), Ok(3));
        assert_eq!(ulrich_index(&ring(&[2, 3])), Ok(1));
        assert_eq!(elias_index(&ring(&[1])), Ok(1));
        assert_eq!(ulrich_index(&ring(&[1])), Ok(1));
    }

    #[test]
    fn gorenstein_index() {
        assert_eq!(index_of_gorenstein(&ring(&[4, 6, 7])), Ok(3));
        assert_eq!(index_of_gorenstein(&ring(&[2, 3])), Ok(2));
        assert_eq!(
            index_of_gorenstein(&ring(&[4, 5, 11])),
            Err(Error::NotGorenstein)
        );
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(reduction_number_of_m(&ring(&[4, 6, 7]), 4), Ok(2));
        assert_eq!(reduction_number_of_m(&ring(&[2, 3]), 2), Ok(1));
        assert_eq!(
            reduction_number_of_m(&ring(&[4, 6, 7]), 7),
            Err(Error::NotAReduction(7))
        );
        assert_eq!(reduction_number_of_m(&ring(&[1]), 1), Ok(0));
    }

    #[test]
    fn superficial_elements() {
        let r = ring(&[4, 6, 7]);
        let n_max = default_superficial_range(&r);
        assert_eq!(n_max, 18);
        assert_eq!(is_superficial_monomial(&r, 4, n_max), Ok(true));
        assert_eq!(is_superficial_monomial(&r, 7, n_max), Ok(false));
        let r = ring(&[1]);
        assert_eq!(is_superficial_monomial(&r, 1, 7), Ok(true));
    }

    #[test]
    fn gll_bound_checks() {
        let r = ring(&[4, 6, 7]);
        let check = check_gll_bound(&r, 4).unwrap();
        assert_eq!((check.t, check.s), (1, 3));
        assert_eq!(check.injective_by_level, vec![true, true, true]);
        assert_eq!(check.gll_bound_holds, Some(true));
        assert_eq!(check.mu_of_power, 4);
        assert_eq!(check.containment_holds, Some(true));

        let check = check_gll_bound(&r, 8).unwrap();
        assert_eq!(check.t, 2);
        assert!(check.injective_by_level[0]);

        let check = check_gll_bound(&ring(&[2, 3]), 2).unwrap();
        assert_eq!((check.t, check.s), (1, 2));
        assert!(check.injective_up_to_s);
        assert_eq!(check.gll_bound_holds, Some(true));

        assert_eq!(
            check_gll_bound(&ring(&[4, 5, 11]), 4),
            Err(Error::NotGorenstein)
        );
    }

    #[test]
    fn reports() {
        let r = InvariantReport::compute(&ring(&[4, 6, 7]), 4).unwrap();
        assert_eq!(r.multiplicity, 4);
        assert_eq!(r.ring_type, 1);
        assert!(r.symmetric && r.nearly_gorenstein && r.gr_cm && r.gll_exact);
        assert_eq!((r.eli, r.ulr, r.index), (3, 2, Some(3)));
        assert_eq!(r.gll_mono, GllWitness { g: 3, witness: 4 });
        assert_eq!(r.samuel[..3], [1, 4, 8]);

        let r = InvariantReport::compute(&ring(&[4, 5, 11]), 4).unwrap();
        assert_eq!(r.ring_type, 2);
        assert!(r.nearly_gorenstein);
        assert!(!r.gr_cm);
        assert_eq!((r.eli, r.ulr, r.gll_mono.g, r.index), (2, 3, 3, None));
        assert!(!r.gll_exact);
    }

    #[test]
    fn oracle_agrees_on_ring_invariants() {
        for gens in [
            vec![4, 6, 7],
            vec![4, 5, 11],
            vec![2, 3],
            vec![5, 7, 9],
            vec![3, 7, 11],
        ] {
            let fast = ring(&gens);
            let slow = WindowOracle::new(&gens).unwrap();
            assert_eq!(elias_index(&fast), elias_index(&slow), "{gens:?}");
            assert_eq!(ulrich_index(&fast), ulrich_index(&slow), "{gens:?}");
            assert_eq!(gll_monomial(&fast), gll_monomial(&slow), "{gens:?}");
            assert_eq!(gr_is_cm(&fast), gr_is_cm(&slow), "{gens:?}");
            let e = fast.multiplicity();
            assert_eq!(
                reduction_number_of_m(&fast, e),
                reduction_number_of_m(&slow, e)
            );
            for n in 0..6 {
                assert_eq!(samuel_length(&fast, n), samuel_length(&slow, n));
            }
        }
    }
}
