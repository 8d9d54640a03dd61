//! Elias, Burch and Ulrich verdicts for integral ideals, together with the
//! sufficient criteria for the Elias property.
//!
//! Nonzerodivisors are always monomials `t^a` with `a` a nonzero element of
//! the semigroup, so every existential criterion here is a monomial-witness
//! search.

use serde::Serialize;

use crate::arith::IdealArithmetic;
use crate::error::{Error, Result};
use crate::ideal::NormalForm;

fn require_integral<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<()> {
    if ring.is_integral(e)? {
        Ok(())
    } else {
        Err(Error::NotIntegral)
    }
}

fn require_proper<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<()> {
    require_integral(ring, e)?;
    if ring.contains(e, 0) {
        Err(Error::ImproperIdeal)
    } else {
        Ok(())
    }
}

fn require_nonzero_element<A: IdealArithmetic>(ring: &A, a: i64) -> Result<()> {
    if a > 0 && ring.in_semigroup(a) {
        Ok(())
    } else {
        Err(Error::NotInSemigroup(a))
    }
}

/// `type(E) = μ(K :_Q E)`.
pub fn type_of_ideal<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<usize> {
    ring.mu(&ring.colon_q(&ring.canonical()?, e)?)
}

/// `type(R/E)`, the socle dimension of `R/E`.
pub fn type_of_quotient<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<usize> {
    require_proper(ring, e)?;
    ring.socle_dimension(e)
}

/// Both sides of the Elias comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EliasEvidence {
    pub type_of_quotient: usize,
    pub type_of_ideal: usize,
}

impl EliasEvidence {
    pub fn holds(&self) -> bool {
        self.type_of_quotient == self.type_of_ideal
    }
}

pub fn elias_evidence<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<EliasEvidence> {
    Ok(EliasEvidence {
        type_of_quotient: type_of_quotient(ring, e)?,
        type_of_ideal: type_of_ideal(ring, e)?,
    })
}

pub fn is_elias<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<bool> {
    Ok(elias_evidence(ring, e)?.holds())
}

/// `(E :_Q m) ⊆ R`, which forces `E` to be Elias.
pub fn elias_socle_criterion<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<bool> {
    require_integral(ring, e)?;
    ring.is_integral(&ring.colon_q(e, &ring.maximal()?)?)
}

/// `t^a ∈ m (t^a R :_Q E)`, which forces `E` to be Elias.
pub fn elias_colon_criterion<A: IdealArithmetic>(ring: &A, e: &A::Ideal, a: i64) -> Result<bool> {
    require_integral(ring, e)?;
    require_nonzero_element(ring, a)?;
    let colon = ring.colon_q(&ring.principal(a)?, e)?;
    Ok(ring.contains(&ring.product(&ring.maximal()?, &colon)?, a))
}

/// The two products compared by the Burch property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurchEvidence {
    /// `mE`.
    pub m_times_ideal: NormalForm,
    /// `m (E :_R m)`.
    pub m_times_colon: NormalForm,
}

impl BurchEvidence {
    pub fn holds(&self) -> bool {
        self.m_times_ideal != self.m_times_colon
    }
}

/// Burch evidence for any integral ideal, the unit ideal included.
pub fn burch_evidence<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<BurchEvidence> {
    require_integral(ring, e)?;
    let m = ring.maximal()?;
    let colon = ring.colon_r(e, &m)?;
    Ok(BurchEvidence {
        m_times_ideal: ring.normal_form(&ring.product(&m, e)?),
        m_times_colon: ring.normal_form(&ring.product(&m, &colon)?),
    })
}

pub fn is_burch<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<bool> {
    require_proper(ring, e)?;
    Ok(burch_evidence(ring, e)?.holds())
}

pub fn is_ulrich<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<bool> {
    require_integral(ring, e)?;
    Ok(ring.mu(e)? == ring.multiplicity() as usize)
}

/// `t^e E = m E`, with `e` the multiplicity.
pub fn ulrich_witness_ok<A: IdealArithmetic>(ring: &A, e: &A::Ideal) -> Result<bool> {
    require_integral(ring, e)?;
    let shifted = ring.product(&ring.principal(ring.multiplicity())?, e)?;
    Ok(ring.equal(&shifted, &ring.product(&ring.maximal()?, e)?))
}

/// Outcome of the test "`t^a ∈ m (t^a R :_Q E)` iff `E = t^a R`" for a
/// minimal generator `a` of the semigroup lying in `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalCriterion {
    pub criterion: bool,
    pub is_principal: bool,
}

impl PrincipalCriterion {
    pub fn consistent(&self) -> bool {
        self.criterion == self.is_principal
    }
}

pub fn principal_criterion<A: IdealArithmetic>(
    ring: &A,
    e: &A::Ideal,
    a: i64,
) -> Result<PrincipalCriterion> {
    require_integral(ring, e)?;
    if !ring.semigroup_generators().contains(&a) {
        return Err(Error::PreconditionFailed(format!(
            "{a} is not a minimal generator of the semigroup"
        )));
    }
    if !ring.contains(e, a) {
        return Err(Error::PreconditionFailed(format!(
            "{a} is not in the ideal"
        )));
    }
    Ok(PrincipalCriterion {
        criterion: elias_colon_criterion(ring, e, a)?,
        is_principal: ring.equal(e, &ring.principal(a)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColonCriterion {
    pub a: i64,
    pub holds: bool,
}

/// Every verdict for one ideal together with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ideal: NormalForm,
    pub generators: Vec<i64>,
    pub mu: usize,
    pub colength: usize,
    pub multiplicity: i64,
    pub elias: bool,
    pub elias_evidence: EliasEvidence,
    pub burch: bool,
    pub burch_evidence: BurchEvidence,
    pub ulrich: bool,
    pub ulrich_witness_ok: bool,
    pub socle_criterion: bool,
    pub colon_criteria: Vec<ColonCriterion>,
}

/// Classifies a proper integral ideal. Without explicit witnesses the colon
/// criterion is tried at every minimal generator of `E` and of the
/// semigroup.
pub fn classify<A: IdealArithmetic>(
    ring: &A,
    e: &A::Ideal,
    witnesses: Option<&[i64]>,
) -> Result<ClassificationReport> {
    require_proper(ring, e)?;
    let generators = ring.minimal_generators(e)?;
    let witnesses: Vec<i64> = match witnesses {
        Some(w) => w.to_vec(),
        None => {
            let mut w = generators.clone();
            w.extend(ring.semigroup_generators());
            w.sort_unstable();
            w.dedup();
            w
        }
    };
    let colon_criteria = witnesses
        .iter()
        .map(|&a| {
            Ok(ColonCriterion {
                a,
                holds: elias_colon_criterion(ring, e, a)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let elias_evidence = elias_evidence(ring, e)?;
    let burch_evidence = burch_evidence(ring, e)?;
    Ok(ClassificationReport {
        ideal: ring.normal_form(e),
        mu: generators.len(),
        generators,
        colength: ring.colength(e)?,
        multiplicity: ring.multiplicity(),
        elias: elias_evidence.holds(),
        elias_evidence,
        burch: burch_evidence.holds(),
        burch_evidence,
        ulrich: is_ulrich(ring, e)?,
        ulrich_witness_ok: ulrich_witness_ok(ring, e)?,
        socle_criterion: elias_socle_criterion(ring, e)?,
        colon_criteria,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SemigroupRing;
    use crate::oracle::WindowOracle;

    fn ring(gens: &[i64]) -> SemigroupRing {
        SemigroupRing::from_generators(gens).unwrap()
    }

    #[test]
    fn ideal_and_quotient_types() {
        let r = ring(&[4, 5, 11]);
        let m2 = r.power_of_maximal(2).unwrap();
        assert_eq!(type_of_ideal(&r, &m2), Ok(3));
        assert_eq!(type_of_quotient(&r, &m2), Ok(3));
        let m = r.maximal().unwrap();
        assert_eq!(type_of_quotient(&r, &m), Ok(1));
        assert_eq!(type_of_ideal(&r, &r.principal(9).unwrap()), Ok(2));

        let r = ring(&[4, 6, 7]);
        let m3 = r.power_of_maximal(3).unwrap();
        assert_eq!(type_of_ideal(&r, &m3), Ok(4));
        assert_eq!(type_of_quotient(&r, &m3), Ok(4));
        assert_eq!(
            type_of_quotient(&r, &r.unit().unwrap()),
            Err(Error::ImproperIdeal)
        );
        assert_eq!(
            type_of_quotient(&r, &r.ideal(&[-1]).unwrap()),
            Err(Error::NotIntegral)
        );
    }

    #[test]
    fn elias_verdicts() {
        let r = ring(&[4, 5, 11]);
        let m = r.maximal().unwrap();
        let m2 = r.power_of_maximal(2).unwrap();
        let i = r.ideal(&[8, 9, 15, 16, 22]).unwrap();
        assert_eq!(is_elias(&r, &m2), Ok(true));
        assert_eq!(is_elias(&r, &m), Ok(false));
        assert_eq!(is_elias(&r, &i), Ok(true));

        assert_eq!(elias_colon_criterion(&r, &i, 9), Ok(true));
        assert_eq!(elias_colon_criterion(&r, &m2, 9), Ok(false));
        assert_eq!(elias_socle_criterion(&r, &m2), Ok(true));

        let r = ring(&[4, 6, 7]);
        assert_eq!(elias_socle_criterion(&r, &r.maximal().unwrap()), Ok(false));
        let p = r.principal(6).unwrap();
        assert_eq!(elias_colon_criterion(&r, &p, 6), Ok(true));
    }

    #[test]
    fn principal_criterion_cases() {
        let r = ring(&[4, 6, 7]);
        let c = principal_criterion(&r, &r.principal(4).unwrap(), 4).unwrap();
        assert!(c.criterion && c.is_principal && c.consistent());
        let c = principal_criterion(&r, &r.ideal(&[4, 6]).unwrap(), 4).unwrap();
        assert!(!c.criterion && !c.is_principal && c.consistent());
        let r = ring(&[2, 3]);
        let c = principal_criterion(&r, &r.ideal(&[2, 3]).unwrap(), 2).unwrap();
        assert!(!c.criterion && !c.is_principal);
        assert!(matches!(
            principal_criterion(&r, &r.ideal(&[3]).unwrap(), 2),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn burch_verdicts() {
        let r = ring(&[4, 6, 7]);
        for t in 1..=5 {
            assert_eq!(
                is_burch(&r, &r.power_of_maximal(t).unwrap()),
                Ok(true),
                "m^{t}"
            );
        }
        let e = r.ideal(&[7, 8]).unwrap();
        let ev = burch_evidence(&r, &e).unwrap();
        assert_eq!(ev.m_times_ideal.to_string(), "{[11,oo)}");
        assert_eq!(ev.m_times_colon, ev.m_times_ideal);
        assert_eq!(is_burch(&r, &e), Ok(false));
        assert_eq!(is_burch(&r, &r.ideal(&[4, 6]).unwrap()), Ok(false));
        assert_eq!(is_burch(&r, &r.unit().unwrap()), Err(Error::ImproperIdeal));
    }

    #[test]
    fn ulrich_verdicts() {
        let r = ring(&[4, 6, 7]);
        let m2 = r.power_of_maximal(2).unwrap();
        assert_eq!(is_ulrich(&r, &m2), Ok(true));
        assert_eq!(ulrich_witness_ok(&r, &m2), Ok(true));
        assert_eq!(is_ulrich(&r, &r.maximal().unwrap()), Ok(false));
        let i = r.ideal(&[4, 6]).unwrap();
        assert_eq!(is_ulrich(&r, &i), Ok(false));
        assert_eq!(ulrich_witness_ok(&r, &i), Ok(false));
        let mi = r.product(&r.maximal().unwrap(), &i).unwrap();
        assert!(mi.contains(11));
        assert!(!r
            .product(&r.principal(4).unwrap(), &i)
            .unwrap()
            .contains(11));
    }

    #[test]
    fn classification_reports() {
        let r = ring(&[4, 5, 11]);
        let rep = classify(&r, &r.power_of_maximal(2).unwrap(), None).unwrap();
        assert!(rep.elias && rep.burch && !rep.ulrich);
        assert_eq!(rep.mu, 3);

        let r = ring(&[4, 6, 7]);
        let rep = classify(&r, &r.power_of_maximal(3).unwrap(), None).unwrap();
        assert!(rep.elias && rep.burch && rep.ulrich && rep.ulrich_witness_ok);

        let rep = classify(&r, &r.ideal(&[7, 8]).unwrap(), Some(&[4, 7])).unwrap();
        assert!(!rep.burch && !rep.ulrich);
        assert_eq!(rep.colon_criteria.len(), 2);
        assert_eq!(rep.generators, vec![7, 8]);
    }

    #[test]
    fn oracle_agrees_on_classification() {
        for gens in [vec![4, 6, 7], vec![4, 5, 11], vec![3, 5, 7], vec![5, 6, 13]] {
            let fast = ring(&gens);
            let slow = WindowOracle::new(&gens).unwrap();
            for ideal in [
                vec![7, 8],
                vec![8, 9, 15],
                vec![10],
                vec![11, 12, 13, 14],
                vec![5, 9],
            ] {
                let a = fast.ideal(&ideal).unwrap();
                let b = slow.ideal(&ideal).unwrap();
                assert_eq!(
                    classify(&fast, &a, None),
                    classify(&slow, &b, None),
                    "{gens:?} {ideal:?}"
                );
            }
        }
    }
}
