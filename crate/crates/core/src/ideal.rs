//! Monomial fractional ideals of a numerical semigroup ring.
//!
//! A fractional ideal is a set `E` of integers that is bounded below and
//! closed under adding elements of `S`. It is stored as its members below a
//! threshold `N` (the sporadic part) together with `N` itself, where every
//! integer `>= N` is a member and `N - 1` is not. Negative members stand for
//! monomials of the total ring of fractions.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Canonical description of a fractional ideal, independent of its parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub sporadic: Vec<i64>,
    pub threshold: i64,
}

impl NormalForm {
    /// Normalizes a membership predicate over `[lo, hi)` where every integer
    /// `>= hi` is assumed to be a member and nothing below `lo` is.
    pub fn from_predicate(lo: i64, hi: i64, mut member: impl FnMut(i64) -> bool) -> Self {
        let mut threshold = hi;
        while threshold > lo && member(threshold - 1) {
            threshold -= 1;
        }
        let sporadic = (lo..threshold).filter(|&z| member(z)).collect();
        NormalForm {
            sporadic,
            threshold,
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.threshold || self.sporadic.binary_search(&z).is_ok()
    }

    pub fn min_element(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.threshold)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for z in &self.sporadic {
            write!(f, "{z},")?;
        }
        write!(f, "[{},oo)}}", self.threshold)
    }
}

/// A nonzero monomial fractional ideal of `k[[S]]`.
#[derive(Clone)]
pub struct FractionalIdeal {
    parent: Arc<NumericalSemigroup>,
    form: NormalForm,
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.form == other.form && same_parent(&self.parent, &other.parent)
    }
}

impl Eq for FractionalIdeal {}

fn same_parent(a: &Arc<NumericalSemigroup>, b: &Arc<NumericalSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a.generators() == b.generators()
}

impl FractionalIdeal {
    fn from_form(parent: &Arc<NumericalSemigroup>, form: NormalForm) -> Self {
        FractionalIdeal {
            parent: Arc::clone(parent),
            form,
        }
    }

    fn check_parent(&self, other: &Self) -> Result<()> {
        if same_parent(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// The ideal `(t^g1, ..., t^gk)`, i.e. the union of the translates
    /// `g_i + S`.
    pub fn from_generators(parent: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Ok(Self::from_form(parent, generated_form(parent, gens)))
    }

    /// Rebuilds an ideal from a stored normal form, checking closure.
    pub fn from_normal_form(parent: &Arc<NumericalSemigroup>, form: NormalForm) -> Result<Self> {
        let tail = form.threshold..form.threshold + parent.multiplicity();
        let gens: Vec<i64> = form.sporadic.iter().copied().chain(tail).collect();
        let ideal = Self::from_generators(parent, &gens)?;
        if ideal.form != form {
            return Err(Error::PreconditionFailed(format!(
                "{form} is not a normalized ideal of {parent}"
            )));
        }
        Ok(ideal)
    }

    pub fn principal(parent: &Arc<NumericalSemigroup>, a: i64) -> Self {
        Self::from_form(parent, generated_form(parent, &[a]))
    }

    /// The ring itself.
    pub fn unit(parent: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(parent, 0)
    }

    pub fn maximal(parent: &Arc<NumericalSemigroup>) -> Self {
        Self::from_form(parent, generated_form(parent, parent.generators()))
    }

    /// The canonical ideal `K = {z : F - z not in S}`, normalized so that
    /// `min K = 0`.
    pub fn canonical(parent: &Arc<NumericalSemigroup>) -> Self {
        let f = parent.frobenius();
        let form = NormalForm::from_predicate(0, f + 1, |z| !parent.contains(f - z));
        Self::from_form(parent, form)
    }

    /// `m^n`: exponents `s` of `S` with `ord(s) >= n`.
    pub fn power_of_maximal(parent: &Arc<NumericalSemigroup>, n: u32) -> Result<Self> {
        if n == 0 {
            return Ok(Self::unit(parent));
        }
        let bound = parent.conductor().max(0) + n as i64 * parent.multiplicity();
        if bound > parent.window() {
            return Err(Error::OutOfWindow {
                needed: bound,
                window: parent.window(),
            });
        }
        let table = parent.ord_table();
        let form = NormalForm::from_predicate(0, bound, |z| table.get(z).is_some_and(|o| o >= n));
        Ok(Self::from_form(parent, form))
    }

    pub fn parent(&self) -> &Arc<NumericalSemigroup> {
        &self.parent
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.form
    }

    pub fn sporadic(&self) -> &[i64] {
        &self.form.sporadic
    }

    pub fn threshold(&self) -> i64 {
        self.form.threshold
    }

    pub fn min(&self) -> i64 {
        self.form.min_element()
    }

    pub fn contains(&self, z: i64) -> bool {
        self.form.contains(z)
    }

    pub fn is_integral(&self) -> bool {
        self.min() >= 0
            && self.form.sporadic.iter().all(|&z| self.parent.contains(z))
            && (self.form.threshold..=self.parent.frobenius()).all(|z| self.parent.contains(z))
    }

    /// Integral and different from the unit ideal.
    pub fn is_proper(&self) -> bool {
        self.is_integral() && !self.contains(0)
    }

    fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NotIntegral)
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.min() < other.min() {
            return false;
        }
        self.form
            .sporadic
            .iter()
            .filter(|&&z| z < other.threshold())
            .all(|&z| other.contains(z))
            && (self.threshold()..other.threshold()).all(|z| other.contains(z))
    }

    /// Members `g` with `g - a` outside the ideal for every minimal
    /// generator `a` of `S`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let e = self.parent.multiplicity();
        let gens = self.parent.generators();
        (self.min()..self.threshold() + e)
            .filter(|&z| self.contains(z) && gens.iter().all(|&a| !self.contains(z - a)))
            .collect()
    }

    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `a + E`, the product with the principal ideal `(t^a)`.
    pub fn translate(&self, a: i64) -> Self {
        let form = NormalForm {
            sporadic: self.form.sporadic.iter().map(|z| z + a).collect(),
            threshold: self.form.threshold + a,
        };
        Self::from_form(&self.parent, form)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(self.product_raw(other))
    }

    pub(crate) fn product_raw(&self, other: &Self) -> Self {
        let left = self.minimal_generators();
        let right = other.minimal_generators();
        let mut sums: Vec<i64> = left
            .iter()
            .flat_map(|&g| right.iter().map(move |&h| g + h))
            .collect();
        sums.sort_unstable();
        sums.dedup();
        let form = generated_form(&self.parent, &sums);
        debug_assert!(
            form.threshold <= (self.threshold() + other.min()).min(other.threshold() + self.min())
        );
        Self::from_form(&self.parent, form)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(self.sum_raw(other))
    }

    pub(crate) fn sum_raw(&self, other: &Self) -> Self {
        let lo = self.min().min(other.min());
        let hi = self.threshold().min(other.threshold());
        let form = NormalForm::from_predicate(lo, hi, |z| self.contains(z) || other.contains(z));
        Self::from_form(&self.parent, form)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(self.intersect_raw(other))
    }

    pub(crate) fn intersect_raw(&self, other: &Self) -> Self {
        let lo = self.min().max(other.min());
        let hi = self.threshold().max(other.threshold());
        let form = NormalForm::from_predicate(lo, hi, |z| self.contains(z) && other.contains(z));
        Self::from_form(&self.parent, form)
    }

    /// `(E :_Q F) = {z : z + F ⊆ E}`, allowing negative exponents.
    pub fn colon_q(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(self.colon_q_raw(other))
    }

    pub(crate) fn colon_q_raw(&self, other: &Self) -> Self {
        let gens = other.minimal_generators();
        let lo = self.min() - other.min();
        let hi = self.threshold() - other.min();
        // z + F ⊆ E iff z + g ∈ E for each generator g of F; only the
        // generators with z + g below the threshold of E can fail.
        let form = NormalForm::from_predicate(lo, hi, |z| {
            gens.iter()
                .take_while(|&&g| z + g < self.threshold())
                .all(|&g| self.contains(z + g))
        });
        Self::from_form(&self.parent, form)
    }

    /// `(E :_R F) = (E :_Q F) ∩ R`; `E` must be integral.
    pub fn colon_r(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        self.require_integral()?;
        Ok(self.colon_r_raw(other))
    }

    pub(crate) fn colon_r_raw(&self, other: &Self) -> Self {
        self.colon_q_raw(other)
            .intersect_raw(&Self::unit(&self.parent))
    }

    /// `ℓ(R/E) = |S \ E|`.
    pub fn colength(&self) -> Result<usize> {
        self.require_integral()?;
        Ok(self
            .parent
            .elements_in(0, self.threshold())
            .filter(|&z| !self.contains(z))
            .count())
    }

    /// Cohen-Macaulay type of `E`: `μ(K :_Q E)` by canonical duality.
    pub fn type_of_ideal(&self) -> usize {
        Self::canonical(&self.parent).colon_q_raw(self).mu()
    }

    /// `type(R/E)`, the socle dimension `|(E :_R m) \ E|`.
    pub fn type_of_quotient(&self) -> Result<usize> {
        self.require_integral()?;
        if self.contains(0) {
            return Err(Error::ImproperIdeal);
        }
        Ok(self.socle_dimension_raw())
    }

    pub(crate) fn socle_dimension_raw(&self) -> usize {
        let socle = self.colon_r_raw(&Self::maximal(&self.parent));
        socle
            .form
            .sporadic
            .iter()
            .copied()
            .chain(socle.threshold()..self.threshold())
            .filter(|&z| !self.contains(z))
            .count()
    }
}

/// Trace of the canonical module, `(R :_Q K) K`.
pub fn trace_of_canonical(parent: &Arc<NumericalSemigroup>) -> FractionalIdeal {
    let k = FractionalIdeal::canonical(parent);
    FractionalIdeal::unit(parent)
        .colon_q_raw(&k)
        .product_raw(&k)
}

/// Normal form of `∪ (g + S)`.
fn generated_form(parent: &NumericalSemigroup, gens: &[i64]) -> NormalForm {
    let lo = *gens.iter().min().expect("nonempty generators");
    let c = parent.conductor().max(0);
    let hi = gens.iter().map(|&g| g + c).min().unwrap();
    NormalForm::from_predicate(lo, hi, |z| gens.iter().any(|&g| parent.contains(z - g)))
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.form, self.parent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    fn ideal(s: &Arc<NumericalSemigroup>, gens: &[i64]) -> FractionalIdeal {
        FractionalIdeal::from_generators(s, gens).unwrap()
    }

    fn nf(sporadic: &[i64], threshold: i64) -> NormalForm {
        NormalForm {
            sporadic: sporadic.to_vec(),
            threshold,
        }
    }

    #[test]
    fn from_generators_examples() {
        let s = sg(&[4, 6, 7]);
        assert_eq!(ideal(&s, &[7, 8]).normal_form(), &nf(&[7, 8], 11));
        let s = sg(&[4, 5, 11]);
        let i = ideal(&s, &[8, 9, 15, 16, 22]);
        assert_eq!(i.normal_form(), &nf(&[8, 9], 12));
        assert_eq!(i.minimal_generators(), vec![8, 9, 15]);
        assert_eq!(i.mu(), 3);
        assert_eq!(ideal(&s, &[0]), FractionalIdeal::unit(&s));
        assert_eq!(
            FractionalIdeal::from_generators(&s, &[]),
            Err(Error::EmptyGenerators)
        );
    }

    #[test]
    fn minimal_generators_of_powers() {
        let s = sg(&[4, 6, 7]);
        assert_eq!(
            FractionalIdeal::maximal(&s).minimal_generators(),
            vec![4, 6, 7]
        );
        let m2 = FractionalIdeal::power_of_maximal(&s, 2).unwrap();
        assert_eq!(m2.minimal_generators(), vec![8, 10, 11, 13]);
        assert_eq!(m2.mu(), 4);
    }

    #[test]
    fn products() {
        let s = sg(&[4, 6, 7]);
        let m = FractionalIdeal::maximal(&s);
        let e = ideal(&s, &[7, 8]);
        assert_eq!(m.product(&e).unwrap().normal_form(), &nf(&[], 11));
        assert_eq!(e.product(&FractionalIdeal::unit(&s)).unwrap(), e);
        let four = FractionalIdeal::principal(&s, 4);
        assert_eq!(four.product(&e).unwrap().normal_form(), &nf(&[11, 12], 15));
    }

    #[test]
    fn sums() {
        let s = sg(&[4, 6, 7]);
        let e = ideal(&s, &[7, 8]);
        let four = FractionalIdeal::principal(&s, 4);
        assert_eq!(e.sum(&four).unwrap().normal_form(), &nf(&[4, 7, 8], 10));
        assert_eq!(e.sum(&e).unwrap(), e);
        let unit = FractionalIdeal::unit(&s);
        assert_eq!(e.sum(&unit).unwrap(), unit);
    }

    #[test]
    fn colons() {
        let s = sg(&[4, 5, 11]);
        let k = FractionalIdeal::canonical(&s);
        let m2 = FractionalIdeal::power_of_maximal(&s, 2).unwrap();
        assert_eq!(k.colon_q(&m2).unwrap().normal_form(), &nf(&[-4], 0));
        let nine = FractionalIdeal::principal(&s, 9);
        assert_eq!(nine.colon_q(&nine).unwrap(), FractionalIdeal::unit(&s));
        let i = ideal(&s, &[8, 9, 15, 16, 22]);
        assert!(nine.colon_q(&i).unwrap().contains(5));
        assert_eq!(nine.colon_r(&m2).unwrap().normal_form(), &nf(&[], 9));

        let s = sg(&[4, 6, 7]);
        let m = FractionalIdeal::maximal(&s);
        let e = ideal(&s, &[7, 8]);
        assert_eq!(e.colon_r(&m).unwrap().normal_form(), &nf(&[7, 8], 10));
        assert_eq!(m.colon_r(&m).unwrap(), FractionalIdeal::unit(&s));
        assert!(m.colon_q(&m).unwrap().contains(9));
    }

    #[test]
    fn colon_r_requires_integral() {
        let s = sg(&[4, 6, 7]);
        let frac = ideal(&s, &[-3]);
        assert_eq!(
            frac.colon_r(&FractionalIdeal::maximal(&s)),
            Err(Error::NotIntegral)
        );
    }

    #[test]
    fn parent_mismatch() {
        let a = FractionalIdeal::maximal(&sg(&[4, 6, 7]));
        let b = FractionalIdeal::maximal(&sg(&[2, 3]));
        assert_eq!(a.product(&b), Err(Error::ParentMismatch));
        assert_eq!(a.colon_q(&b), Err(Error::ParentMismatch));
        // Structurally equal parents are the same ring.
        let c = FractionalIdeal::maximal(&sg(&[4, 6, 7]));
        assert!(a.product(&c).is_ok());
    }

    #[test]
    fn intersections() {
        let s = sg(&[4, 6, 7]);
        let e = ideal(&s, &[7, 8]);
        assert_eq!(e.intersect(&e).unwrap(), e);
        assert_eq!(e.intersect(&FractionalIdeal::unit(&s)).unwrap(), e);
        let four = FractionalIdeal::principal(&s, 4);
        let six = FractionalIdeal::principal(&s, 6);
        assert_eq!(
            four.intersect(&six).unwrap().normal_form(),
            &nf(&[10, 12, 14], 16)
        );
    }

    #[test]
    fn colengths() {
        let s = sg(&[4, 5, 11]);
        assert_eq!(
            FractionalIdeal::power_of_maximal(&s, 2).unwrap().colength(),
            Ok(4)
        );
        let s = sg(&[4, 6, 7]);
        assert_eq!(FractionalIdeal::principal(&s, 4).colength(), Ok(4));
        assert_eq!(FractionalIdeal::unit(&s).colength(), Ok(0));
        assert_eq!(ideal(&s, &[-1]).colength(), Err(Error::NotIntegral));
    }

    #[test]
    fn canonical_ideals() {
        let s = sg(&[4, 5, 11]);
        assert_eq!(
            FractionalIdeal::canonical(&s).normal_form(),
            &nf(&[0, 1, 4, 5, 6], 8)
        );
        let s = sg(&[4, 6, 7]);
        assert_eq!(FractionalIdeal::canonical(&s), FractionalIdeal::unit(&s));
        let s = sg(&[1]);
        assert_eq!(FractionalIdeal::canonical(&s), FractionalIdeal::unit(&s));
    }

    #[test]
    fn types() {
        let s = sg(&[4, 5, 11]);
        let m2 = FractionalIdeal::power_of_maximal(&s, 2).unwrap();
        assert_eq!(m2.type_of_ideal(), 3);
        assert_eq!(m2.type_of_quotient(), Ok(3));
        assert_eq!(FractionalIdeal::principal(&s, 5).type_of_ideal(), 2);
        assert_eq!(FractionalIdeal::maximal(&s).type_of_quotient(), Ok(1));

        let s = sg(&[4, 6, 7]);
        let m3 = FractionalIdeal::power_of_maximal(&s, 3).unwrap();
        let dual = FractionalIdeal::canonical(&s).colon_q(&m3).unwrap();
        assert_eq!(dual.normal_form(), &nf(&[-4], -2));
        assert_eq!(dual.minimal_generators(), vec![-4, -2, -1, 1]);
        assert_eq!(m3.type_of_ideal(), 4);
        assert_eq!(m3.type_of_quotient(), Ok(4));
        assert_eq!(
            FractionalIdeal::unit(&s).type_of_quotient(),
            Err(Error::ImproperIdeal)
        );
    }

    #[test]
    fn traces() {
        let s = sg(&[4, 6, 7]);
        assert_eq!(trace_of_canonical(&s), FractionalIdeal::unit(&s));
        let s = sg(&[4, 5, 11]);
        let tr = trace_of_canonical(&s);
        assert_eq!(tr.normal_form(), &nf(&[4, 5], 8));
        assert_eq!(tr, FractionalIdeal::maximal(&s));
        let s = sg(&[1]);
        assert_eq!(trace_of_canonical(&s), FractionalIdeal::unit(&s));
    }

    #[test]
    fn powers_of_maximal() {
        let s = sg(&[4, 6, 7]);
        assert_eq!(
            FractionalIdeal::power_of_maximal(&s, 2)
                .unwrap()
                .normal_form(),
            &nf(&[8], 10)
        );
        assert_eq!(
            FractionalIdeal::power_of_maximal(&s, 3)
                .unwrap()
                .normal_form(),
            &nf(&[12], 14)
        );
        assert_eq!(
            FractionalIdeal::power_of_maximal(&s, 1).unwrap(),
            FractionalIdeal::maximal(&s)
        );
        assert_eq!(
            FractionalIdeal::power_of_maximal(&s, 0).unwrap(),
            FractionalIdeal::unit(&s)
        );
        assert!(matches!(
            FractionalIdeal::power_of_maximal(&s, 10_000),
            Err(Error::OutOfWindow { .. })
        ));
    }

    #[test]
    fn subsets_and_integrality() {
        let s = sg(&[4, 6, 7]);
        let m = FractionalIdeal::maximal(&s);
        let m2 = FractionalIdeal::power_of_maximal(&s, 2).unwrap();
        assert!(m2.is_subset(&m));
        assert!(!m.is_subset(&m2));
        assert!(m.is_proper());
        assert!(!FractionalIdeal::unit(&s).is_proper());
        assert!(!ideal(&s, &[-4]).is_integral());
        // 9 is a gap, so (9) is not inside the ring.
        assert!(!ideal(&s, &[9]).is_integral());
    }

    #[test]
    fn normal_form_round_trip() {
        let s = sg(&[4, 5, 11]);
        let i = ideal(&s, &[8, 9, 15]);
        let back = FractionalIdeal::from_normal_form(&s, i.normal_form().clone()).unwrap();
        assert_eq!(back, i);
        assert!(FractionalIdeal::from_normal_form(&s, nf(&[8, 9], 14)).is_err());
    }
}
