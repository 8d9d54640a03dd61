//! The operations every ideal-arithmetic backend provides.
//!
//! Two backends exist: [`SemigroupRing`] works on normal forms and generator
//! lists, and [`crate::oracle::WindowOracle`] works on raw bit sets over a
//! finite window. Invariants and proposition checks are written against this
//! trait so either backend can evaluate them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{trace_of_canonical, FractionalIdeal, NormalForm};
use crate::semigroup::NumericalSemigroup;

pub trait IdealArithmetic {
    type Ideal: Clone;

    /// Minimal generators of the semigroup.
    fn semigroup_generators(&self) -> Vec<i64>;
    fn multiplicity(&self) -> i64;
    fn conductor(&self) -> i64;
    fn is_symmetric(&self) -> bool;
    fn in_semigroup(&self, z: i64) -> bool;
    /// Upper end of the range on which `ord` is available.
    fn ord_window(&self) -> i64;
    fn ord(&self, s: i64) -> Result<u32>;

    fn ideal(&self, gens: &[i64]) -> Result<Self::Ideal>;
    fn canonical(&self) -> Result<Self::Ideal>;
    fn power_of_maximal(&self, n: u32) -> Result<Self::Ideal>;

    fn product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn intersect(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn colon_q(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn colon_r(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;

    fn contains(&self, a: &Self::Ideal, z: i64) -> bool;
    fn is_subset(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool;
    fn min_element(&self, a: &Self::Ideal) -> i64;
    fn minimal_generators(&self, a: &Self::Ideal) -> Result<Vec<i64>>;
    /// `|(a :_R m) \ a|` for an integral ideal.
    fn socle_dimension(&self, a: &Self::Ideal) -> Result<usize>;
    /// `|S \ a|` for an integral ideal.
    fn colength(&self, a: &Self::Ideal) -> Result<usize>;
    fn normal_form(&self, a: &Self::Ideal) -> NormalForm;

    fn unit(&self) -> Result<Self::Ideal> {
        self.ideal(&[0])
    }

    fn principal(&self, a: i64) -> Result<Self::Ideal> {
        self.ideal(&[a])
    }

    fn maximal(&self) -> Result<Self::Ideal> {
        self.ideal(&self.semigroup_generators())
    }

    fn equal(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool {
        self.is_subset(a, b) && self.is_subset(b, a)
    }

    fn mu(&self, a: &Self::Ideal) -> Result<usize> {
        Ok(self.minimal_generators(a)?.len())
    }

    fn is_integral(&self, a: &Self::Ideal) -> Result<bool> {
        Ok(self.is_subset(a, &self.unit()?))
    }

    fn is_proper(&self, a: &Self::Ideal) -> Result<bool> {
        Ok(self.is_integral(a)? && !self.contains(a, 0))
    }

    fn trace_of_canonical(&self) -> Result<Self::Ideal> {
        let k = self.canonical()?;
        let dual = self.colon_q(&self.unit()?, &k)?;
        self.product(&dual, &k)
    }
}

/// The semigroup ring `k[[S]]` with normal-form arithmetic.
#[derive(Clone, Debug)]
pub struct SemigroupRing {
    semigroup: Arc<NumericalSemigroup>,
}

impl SemigroupRing {
    pub fn new(semigroup: Arc<NumericalSemigroup>) -> Self {
        SemigroupRing { semigroup }
    }

    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        Ok(Self::new(Arc::new(NumericalSemigroup::new(gens)?)))
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn require_integral(&self, a: &FractionalIdeal) -> Result<()> {
        if a.is_integral() {
            Ok(())
        } else {
            Err(Error::NotIntegral)
        }
    }
}

impl IdealArithmetic for SemigroupRing {
    type Ideal = FractionalIdeal;

    fn semigroup_generators(&self) -> Vec<i64> {
        self.semigroup.generators().to_vec()
    }

    fn multiplicity(&self) -> i64 {
        self.semigroup.multiplicity()
    }

    fn conductor(&self) -> i64 {
        self.semigroup.conductor()
    }

    fn is_symmetric(&self) -> bool {
        self.semigroup.is_symmetric()
    }

    fn in_semigroup(&self, z: i64) -> bool {
        self.semigroup.contains(z)
    }

    fn ord_window(&self) -> i64 {
        self.semigroup.window()
    }

    fn ord(&self, s: i64) -> Result<u32> {
        self.semigroup.ord(s)
    }

    fn ideal(&self, gens: &[i64]) -> Result<FractionalIdeal> {
        FractionalIdeal::from_generators(&self.semigroup, gens)
    }

    fn canonical(&self) -> Result<FractionalIdeal> {
        Ok(FractionalIdeal::canonical(&self.semigroup))
    }

    fn power_of_maximal(&self, n: u32) -> Result<FractionalIdeal> {
        FractionalIdeal::power_of_maximal(&self.semigroup, n)
    }

    fn product(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> Result<FractionalIdeal> {
        a.product(b)
    }

    fn sum(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> Result<FractionalIdeal> {
        a.sum(b)
    }

    fn intersect(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> Result<FractionalIdeal> {
        a.intersect(b)
    }

    fn colon_q(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> Result<FractionalIdeal> {
        a.colon_q(b)
    }

    fn colon_r(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> Result<FractionalIdeal> {
        a.colon_r(b)
    }

    fn contains(&self, a: &FractionalIdeal, z: i64) -> bool {
        a.contains(z)
    }

    fn is_subset(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> bool {
        a.is_subset(b)
    }

    fn min_element(&self, a: &FractionalIdeal) -> i64 {
        a.min()
    }

    fn minimal_generators(&self, a: &FractionalIdeal) -> Result<Vec<i64>> {
        Ok(a.minimal_generators())
    }

    fn socle_dimension(&self, a: &FractionalIdeal) -> Result<usize> {
        self.require_integral(a)?;
        Ok(a.socle_dimension_raw())
    }

    fn colength(&self, a: &FractionalIdeal) -> Result<usize> {
        a.colength()
    }

    fn normal_form(&self, a: &FractionalIdeal) -> NormalForm {
        a.normal_form().clone()
    }

    fn equal(&self, a: &FractionalIdeal, b: &FractionalIdeal) -> bool {
        a == b
    }

    fn mu(&self, a: &FractionalIdeal) -> Result<usize> {
        Ok(a.mu())
    }

    fn is_integral(&self, a: &FractionalIdeal) -> Result<bool> {
        Ok(a.is_integral())
    }

    fn trace_of_canonical(&self) -> Result<FractionalIdeal> {
        Ok(trace_of_canonical(&self.semigroup))
    }
}
