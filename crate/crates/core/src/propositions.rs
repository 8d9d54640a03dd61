//! The proposition catalog: each entry evaluates its hypotheses and its
//! conclusion on an explicit instance, so a failure of the implication is
//! reported as data rather than assumed away.
//!
//! Nonzerodivisors are monomials `t^a`. When an instance leaves `x` open,
//! the least `a` satisfying the hypotheses that mention `x` is used.

use std::cell::{Cell, RefCell};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::IdealArithmetic;
use crate::classify::{self, burch_evidence, elias_colon_criterion, principal_criterion};
use crate::error::{Error, Result};
use crate::ideal::NormalForm;
use crate::invariants::{self, GllWitness};
use crate::oracle::WindowOracle;

/// What an instance of a proposition has to supply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// The ring alone, plus an optional monomial `x`.
    Ring,
    /// One ideal `I`.
    Single,
    /// Two ideals `I`, `J`.
    Pair,
    /// Ideals `I`, `K`, with `J` defaulting to `(K :_R I)`.
    Linked,
}

macro_rules! propositions {
    ($($variant:ident = $code:literal, $shape:ident;)*) => {
        /// Identifier of a checkable statement.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum PropositionId {
            $($variant,)*
        }

        impl PropositionId {
            pub const ALL: &'static [PropositionId] = &[$(PropositionId::$variant,)*];

            pub fn code(self) -> &'static str {
                match self {
                    $(PropositionId::$variant => $code,)*
                }
            }

            pub fn shape(self) -> Shape {
                match self {
                    $(PropositionId::$variant => Shape::$shape,)*
                }
            }
        }

        impl FromStr for PropositionId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($code => Ok(PropositionId::$variant),)*
                    _ => Err(Error::UnknownProposition(s.to_string())),
                }
            }
        }
    };
}

propositions! {
    IndexBelowLoewyLength = "P2.3g", Ring;
    SuperficialColength = "L2.13", Ring;
    LoewyBoundFromInjectivity = "T2.20", Ring;
    LoewyBoundFromRegularForm = "C2.21", Ring;
    GradedCohenMacaulayIndices = "T3.5", Ring;
    ReductionNumberIsUlrichIndex = "C3.8a", Ring;
    ColonCriterionGivesElias = "P3.11", Single;
    ColonCriterionAtGenerator = "P3.14", Single;
    ProductInPrincipalGivesElias = "C3.15", Pair;
    UlrichEliasIsBurch = "P3.18", Single;
    UlrichSquareIsBurch = "P3.19", Single;
    SumWithProductIsBurch = "P3.21", Pair;
    ProductInPrincipalIsBurch = "P3.22", Pair;
    NonBurchPairIsElias = "C3.24", Pair;
    ProductInSquareNotBurch = "P3.25", Pair;
    ProductInSquareNotUlrichFirst = "C3.26a", Pair;
    ProductInSquareNotUlrichSecond = "C3.26b", Pair;
    LinkedIdealsShareBurch = "P3.27", Linked;
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for PropositionId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for PropositionId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The objects a statement quantifies over.
#[derive(Clone, Debug)]
pub struct Instance<I> {
    pub i: Option<I>,
    pub j: Option<I>,
    pub k: Option<I>,
    pub x: Option<i64>,
}

impl<I> Default for Instance<I> {
    fn default() -> Self {
        Instance {
            i: None,
            j: None,
            k: None,
            x: None,
        }
    }
}

/// Serializable description of an instance: semigroup and ideal generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub semigroup: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    /// The exponent of `x` used, when the statement mentions one.
    pub witness: Option<i64>,
}

impl Verdict {
    pub fn violation(&self) -> bool {
        self.hypotheses_hold && !self.conclusion_holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionOutcome {
    pub proposition: PropositionId,
    pub instance: InstanceDescriptor,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<i64>,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub violation: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

struct IdealFacts<I> {
    ideal: I,
    times_m: I,
    burch: Cell<Option<bool>>,
    elias: Cell<Option<bool>>,
    ulrich: Cell<Option<bool>>,
}

fn cached(cell: &Cell<Option<bool>>, compute: impl FnOnce() -> Result<bool>) -> Result<bool> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = compute()?;
    cell.set(Some(v));
    Ok(v)
}

/// Evaluates propositions over one ring, memoizing per-ideal verdicts so a
/// corpus run does not recompute them for every pair.
pub struct Evaluator<'a, A: IdealArithmetic> {
    ring: &'a A,
    m: A::Ideal,
    eli: Cell<Option<u32>>,
    ulr: Cell<Option<u32>>,
    gll: Cell<Option<GllWitness>>,
    gr_cm: Cell<Option<bool>>,
    facts: RefCell<HashMap<NormalForm, Rc<IdealFacts<A::Ideal>>>>,
}

fn precondition(msg: &str) -> Error {
    Error::PreconditionFailed(msg.to_string())
}

impl<'a, A: IdealArithmetic> Evaluator<'a, A> {
    pub fn new(ring: &'a A) -> Result<Self> {
        Ok(Evaluator {
            ring,
            m: ring.maximal()?,
            eli: Cell::new(None),
            ulr: Cell::new(None),
            gll: Cell::new(None),
            gr_cm: Cell::new(None),
            facts: RefCell::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &'a A {
        self.ring
    }

    fn eli(&self) -> Result<u32> {
        if let Some(v) = self.eli.get() {
            return Ok(v);
        }
        let v = invariants::elias_index(self.ring)?;
        self.eli.set(Some(v));
        Ok(v)
    }

    fn ulr(&self) -> Result<u32> {
        if let Some(v) = self.ulr.get() {
            return Ok(v);
        }
        let v = invariants::ulrich_index(self.ring)?;
        self.ulr.set(Some(v));
        Ok(v)
    }

    fn gll(&self) -> Result<GllWitness> {
        if let Some(v) = self.gll.get() {
            return Ok(v);
        }
        let v = invariants::gll_monomial(self.ring)?;
        self.gll.set(Some(v));
        Ok(v)
    }

    fn gr_cm(&self) -> Result<bool> {
        cached(&self.gr_cm, || invariants::gr_is_cm(self.ring))
    }

    fn facts(&self, ideal: &A::Ideal) -> Result<Rc<IdealFacts<A::Ideal>>> {
        let key = self.ring.normal_form(ideal);
        if let Some(f) = self.facts.borrow().get(&key) {
            return Ok(Rc::clone(f));
        }
        let f = Rc::new(IdealFacts {
            ideal: ideal.clone(),
            times_m: self.ring.product(ideal, &self.m)?,
            burch: Cell::new(None),
            elias: Cell::new(None),
            ulrich: Cell::new(None),
        });
        self.facts.borrow_mut().insert(key, Rc::clone(&f));
        Ok(f)
    }

    fn burch(&self, f: &IdealFacts<A::Ideal>) -> Result<bool> {
        cached(
            &f.burch,
            || Ok(burch_evidence(self.ring, &f.ideal)?.holds()),
        )
    }

    fn elias(&self, f: &IdealFacts<A::Ideal>) -> Result<bool> {
        cached(&f.elias, || classify::is_elias(self.ring, &f.ideal))
    }

    fn ulrich(&self, f: &IdealFacts<A::Ideal>) -> Result<bool> {
        cached(&f.ulrich, || classify::is_ulrich(self.ring, &f.ideal))
    }

    fn proper(&self, ideal: &A::Ideal) -> Result<bool> {
        self.ring.is_proper(ideal)
    }

    fn require_element(&self, a: i64) -> Result<()> {
        if a > 0 && self.ring.in_semigroup(a) {
            Ok(())
        } else {
            Err(Error::NotInSemigroup(a))
        }
    }

    fn ideal_i<'b>(&self, inst: &'b Instance<A::Ideal>, proper: bool) -> Result<&'b A::Ideal> {
        let i = inst
            .i
            .as_ref()
            .ok_or_else(|| precondition("instance needs an ideal I"))?;
        if proper && !self.proper(i)? {
            return Err(precondition("I must be a proper nonzero ideal of R"));
        }
        if !self.ring.is_integral(i)? {
            return Err(precondition("I must be an ideal of R"));
        }
        Ok(i)
    }

    fn ideal_j<'b>(&self, inst: &'b Instance<A::Ideal>) -> Result<&'b A::Ideal> {
        let j = inst
            .j
            .as_ref()
            .ok_or_else(|| precondition("instance needs an ideal J"))?;
        if !self.ring.is_integral(j)? {
            return Err(precondition("J must be an ideal of R"));
        }
        Ok(j)
    }

    /// The given `x`, checked against `pred`, or else the least candidate
    /// in `1..=bound` that lies in `S` and satisfies `pred`.
    fn witness(
        &self,
        given: Option<i64>,
        bound: i64,
        mut pred: impl FnMut(i64) -> Result<bool>,
    ) -> Result<(bool, Option<i64>)> {
        if let Some(a) = given {
            self.require_element(a)?;
            return Ok((pred(a)?, Some(a)));
        }
        for a in 1..=bound {
            if self.ring.in_semigroup(a) && pred(a)? {
                return Ok((true, Some(a)));
            }
        }
        Ok((false, None))
    }

    pub fn evaluate(&self, id: PropositionId, inst: &Instance<A::Ideal>) -> Result<Verdict> {
        use PropositionId::*;
        let ring = self.ring;
        let e = ring.multiplicity();
        let verdict = |h: bool, c: bool, w: Option<i64>| Verdict {
            hypotheses_hold: h,
            conclusion_holds: c,
            witness: w,
        };
        match id {
            IndexBelowLoewyLength => {
                let h = ring.is_symmetric();
                let c = h && {
                    let s = self.eli()?;
                    s <= self.gll()?.g && s as i64 <= e
                };
                Ok(verdict(h, c, None))
            }
            SuperficialColength => {
                let a = inst.x.unwrap_or(e);
                self.require_element(a)?;
                let h = invariants::is_superficial_monomial(
                    ring,
                    a,
                    invariants::default_superficial_range(ring),
                )?;
                let c = ring.colength(&ring.principal(a)?)? as i64 == e;
                Ok(verdict(h, c, Some(a)))
            }
            LoewyBoundFromInjectivity => {
                let a = inst.x.unwrap_or(e);
                self.require_element(a)?;
                if !ring.is_symmetric() {
                    return Ok(verdict(false, false, Some(a)));
                }
                let check = invariants::check_gll_bound(ring, a)?;
                let n = check.s + check.t - 1;
                let contained = ring.is_subset(&ring.power_of_maximal(n)?, &ring.principal(a)?);
                let c = check.gll_mono <= n && (check.mu_of_power <= 1 || contained);
                Ok(verdict(check.injective_up_to_s, c, Some(a)))
            }
            LoewyBoundFromRegularForm => {
                let a = inst.x.unwrap_or(e);
                self.require_element(a)?;
                if !ring.is_symmetric() {
                    return Ok(verdict(false, false, Some(a)));
                }
                let h = invariants::is_ord_regular(ring, a)?;
                let s = self.eli()?;
                let t = ring.ord(a)?;
                let g = self.gll()?.g;
                Ok(verdict(h, s <= g && g < s + t, Some(a)))
            }
            GradedCohenMacaulayIndices => {
                let h = self.gr_cm()?;
                let g = self.gll()?.g;
                let c = self.eli()? == g && g == self.ulr()? + 1;
                Ok(verdict(h, c, None))
            }
            ReductionNumberIsUlrichIndex => {
                let h = self.gr_cm()?;
                let c = invariants::reduction_number_of_m(ring, e)? == self.ulr()?;
                Ok(verdict(h, c, Some(e)))
            }
            ColonCriterionGivesElias => {
                let i = self.ideal_i(inst, true)?;
                let gens = ring.semigroup_generators();
                let (h, w) = match inst.x {
                    Some(a) => (elias_colon_criterion(ring, i, a)?, Some(a)),
                    None => {
                        let mut found = (false, None);
                        for &a in &gens {
                            if elias_colon_criterion(ring, i, a)? {
                                found = (true, Some(a));
                                break;
                            }
                        }
                        found
                    }
                };
                let c = self.elias(&*self.facts(i)?)?;
                Ok(verdict(h, c, w))
            }
            ColonCriterionAtGenerator => {
                let i = self.ideal_i(inst, true)?;
                let a = match inst.x {
                    Some(a) => a,
                    None => ring
                        .semigroup_generators()
                        .into_iter()
                        .find(|&a| ring.contains(i, a))
                        .ok_or_else(|| precondition("I contains no minimal generator of S"))?,
                };
                let pc = principal_criterion(ring, i, a)?;
                Ok(verdict(true, pc.consistent(), Some(a)))
            }
            ProductInPrincipalGivesElias => {
                let i = self.ideal_i(inst, true)?;
                let j = self.ideal_j(inst)?;
                let ij = ring.product(i, j)?;
                let jm = self.facts(j)?;
                let (h, w) = self.witness(inst.x, ring.min_element(&ij), |a| {
                    Ok(ring.contains(&jm.times_m, a) && ring.is_subset(&ij, &ring.principal(a)?))
                })?;
                let c = self.elias(&*self.facts(i)?)?;
                Ok(verdict(h, c, w))
            }
            UlrichEliasIsBurch => {
                let f = self.facts(self.ideal_i(inst, true)?)?;
                let h = self.ulrich(&f)? && self.elias(&f)?;
                Ok(verdict(h, self.burch(&f)?, None))
            }
            UlrichSquareIsBurch => {
                let i = self.ideal_i(inst, true)?;
                let f = self.facts(i)?;
                let h = self.ulrich(&f)? && {
                    let square = ring.product(i, i)?;
                    let with_colon = ring.product(i, &ring.colon_r(i, &self.m)?)?;
                    !ring.equal(&square, &with_colon)
                };
                Ok(verdict(h, self.burch(&f)?, None))
            }
            SumWithProductIsBurch => {
                let i = self.ideal_i(inst, true)?;
                let j = self.ideal_j(inst)?;
                let fi = self.facts(i)?;
                let fj = self.facts(j)?;
                let h = !ring.is_subset(&fj.times_m, &fi.times_m);
                let sum = ring.sum(i, &fj.times_m)?;
                let c = self.burch(&*self.facts(&sum)?)?;
                Ok(verdict(h, c, None))
            }
            ProductInPrincipalIsBurch => {
                let i = self.ideal_i(inst, true)?;
                let j = self.ideal_j(inst)?;
                let fi = self.facts(i)?;
                let fj = self.facts(j)?;
                let (h, w) = if ring.is_subset(&fj.times_m, &fi.times_m) {
                    (false, None)
                } else {
                    let ij = ring.product(i, j)?;
                    self.witness(inst.x, ring.min_element(&ij), |a| {
                        Ok(ring.is_subset(&ij, &ring.principal(a)?))
                    })?
                };
                Ok(verdict(h, self.burch(&fi)?, w))
            }
            NonBurchPairIsElias => {
                let i = self.ideal_i(inst, true)?;
                let j = self.ideal_j(inst)?;
                let fi = self.facts(i)?;
                let fj = self.facts(j)?;
                let (h, w) = if self.burch(&fi)? || !self.proper(j)? {
                    (false, None)
                } else {
                    let ij = ring.product(i, j)?;
                    self.witness(inst.x, ring.min_element(&ij), |a| {
                        Ok(ring.contains(&fj.times_m, a)
                            && ring.is_subset(&ij, &ring.principal(a)?))
                    })?
                };
                let c = self.elias(&fi)? && self.proper(j)? && self.elias(&fj)?;
                Ok(verdict(h, c, w))
            }
            ProductInSquareNotBurch
            | ProductInSquareNotUlrichFirst
            | ProductInSquareNotUlrichSecond => {
                let i = self.ideal_i(inst, true)?;
                let j = self.ideal_j(inst)?;
                let fi = self.facts(i)?;
                let fj = self.facts(j)?;
                // The second variant swaps the roles in the membership test.
                let (member, times_m) = if id == ProductInSquareNotUlrichSecond {
                    (j, &fi.times_m)
                } else {
                    (i, &fj.times_m)
                };
                let needs_proper_j = id != ProductInSquareNotBurch;
                let (h, w) = if needs_proper_j && !self.proper(j)? {
                    (false, None)
                } else {
                    let ij = ring.product(i, j)?;
                    self.witness(inst.x, ring.min_element(&ij) / 2, |a| {
                        Ok(ring.contains(member, a)
                            && ring.contains(times_m, a)
                            && ring.is_subset(&ij, &ring.principal(2 * a)?))
                    })?
                };
                let c = match id {
                    ProductInSquareNotBurch => !self.burch(&fi)?,
                    _ => {
                        let both = self.elias(&fi)? && self.proper(j)? && self.elias(&fj)?;
                        let f = if id == ProductInSquareNotUlrichFirst {
                            &fi
                        } else {
                            &fj
                        };
                        both && !self.ulrich(f)?
                    }
                };
                Ok(verdict(h, c, w))
            }
            LinkedIdealsShareBurch => {
                let i = self.ideal_i(inst, false)?;
                let k = inst
                    .k
                    .as_ref()
                    .ok_or_else(|| precondition("instance needs an ideal K"))?;
                if !ring.is_integral(k)? {
                    return Err(precondition("K must be an ideal of R"));
                }
                let j = match &inst.j {
                    Some(_) => self.ideal_j(inst)?.clone(),
                    None => ring.colon_r(k, i)?,
                };
                let fi = self.facts(i)?;
                let fj = self.facts(&j)?;
                let h = ring.equal(i, &ring.colon_r(k, &j)?)
                    && ring.equal(&j, &ring.colon_r(k, i)?)
                    && ring.equal(&fi.times_m, &fj.times_m);
                let c = self.burch(&fi)? == self.burch(&fj)?;
                Ok(verdict(h, c, None))
            }
        }
    }

    pub fn describe(&self, inst: &Instance<A::Ideal>) -> Result<InstanceDescriptor> {
        let gens = |x: &Option<A::Ideal>| -> Result<Option<Vec<i64>>> {
            x.as_ref()
                .map(|i| self.ring.minimal_generators(i))
                .transpose()
        };
        Ok(InstanceDescriptor {
            semigroup: self.ring.semigroup_generators(),
            i: gens(&inst.i)?,
            j: gens(&inst.j)?,
            k: gens(&inst.k)?,
            x: inst.x,
        })
    }

    /// Evaluates and packages the result; violations carry a certificate.
    pub fn outcome(
        &self,
        id: PropositionId,
        inst: &Instance<A::Ideal>,
    ) -> Result<PropositionOutcome> {
        let v = self.evaluate(id, inst)?;
        let certificate = if v.violation() {
            Some(Certificate::build(self.ring, id, inst, &v)?)
        } else {
            None
        };
        Ok(PropositionOutcome {
            proposition: id,
            instance: self.describe(inst)?,
            witness: v.witness,
            hypotheses_hold: v.hypotheses_hold,
            conclusion_holds: v.conclusion_holds,
            violation: v.violation(),
            certificate,
        })
    }
}

/// Self-contained record of a violation: inputs, every intermediate ideal
/// in normal form, and the numeric invariants used. It can be rechecked
/// from scratch with the bit-set oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub proposition: PropositionId,
    pub semigroup: Vec<i64>,
    pub inputs: BTreeMap<String, Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<i64>,
    pub intermediates: BTreeMap<String, NormalForm>,
    pub values: BTreeMap<String, i64>,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
}

type Evidence = (BTreeMap<String, NormalForm>, BTreeMap<String, i64>);

fn evidence<A: IdealArithmetic>(
    ring: &A,
    id: PropositionId,
    inputs: &[(&str, &A::Ideal)],
    x: Option<i64>,
) -> Result<Evidence> {
    let mut ideals = BTreeMap::new();
    let mut values = BTreeMap::new();
    let nf = |i: &A::Ideal| ring.normal_form(i);
    let m = ring.maximal()?;
    values.insert("e".to_string(), ring.multiplicity());
    ideals.insert("m".to_string(), nf(&m));

    if id.shape() == Shape::Ring {
        values.insert("eli".into(), invariants::elias_index(ring)? as i64);
        values.insert("ulr".into(), invariants::ulrich_index(ring)? as i64);
        let gll = invariants::gll_monomial(ring)?;
        values.insert("gll_mono".into(), gll.g as i64);
        values.insert("gll_witness".into(), gll.witness);
        values.insert("gr_cm".into(), invariants::gr_is_cm(ring)? as i64);
        values.insert("symmetric".into(), ring.is_symmetric() as i64);
        for n in 1..=gll.g {
            ideals.insert(format!("m^{n}"), nf(&ring.power_of_maximal(n)?));
        }
    }

    for (name, ideal) in inputs {
        ideals.insert(name.to_string(), nf(ideal));
        let times_m = ring.product(ideal, &m)?;
        let colon = ring.colon_r(ideal, &m)?;
        ideals.insert(format!("{name}*m"), nf(&times_m));
        ideals.insert(format!("{name}:m"), nf(&colon));
        ideals.insert(format!("m*({name}:m)"), nf(&ring.product(&m, &colon)?));
        values.insert(format!("mu({name})"), ring.mu(ideal)? as i64);
        if ring.is_proper(ideal)? {
            let ev = classify::elias_evidence(ring, ideal)?;
            values.insert(format!("type(R/{name})"), ev.type_of_quotient as i64);
            values.insert(format!("type({name})"), ev.type_of_ideal as i64);
        }
    }

    let lookup = |name: &str| inputs.iter().find(|(n, _)| *n == name).map(|(_, i)| *i);
    if let (Some(i), Some(j)) = (lookup("I"), lookup("J")) {
        ideals.insert("I*J".into(), nf(&ring.product(i, j)?));
        if id == PropositionId::SumWithProductIsBurch {
            let sum = ring.sum(i, &ring.product(j, &m)?)?;
            let colon = ring.colon_r(&sum, &m)?;
            ideals.insert("I+J*m".into(), nf(&sum));
            ideals.insert("(I+J*m)*m".into(), nf(&ring.product(&sum, &m)?));
            ideals.insert("m*((I+J*m):m)".into(), nf(&ring.product(&m, &colon)?));
        }
    }
    if let Some(i) = lookup("I") {
        if id == PropositionId::UlrichSquareIsBurch {
            ideals.insert("I*I".into(), nf(&ring.product(i, i)?));
            ideals.insert(
                "I*(I:m)".into(),
                nf(&ring.product(i, &ring.colon_r(i, &m)?)?),
            );
        }
    }
    if let Some(a) = x {
        let xr = ring.principal(a)?;
        ideals.insert("xR".into(), nf(&xr));
        ideals.insert("x^2R".into(), nf(&ring.principal(2 * a)?));
        values.insert("ord(x)".into(), ring.ord(a)? as i64);
        values.insert("colength(xR)".into(), ring.colength(&xr)? as i64);
        if let Some(i) = lookup("I") {
            let colon = ring.colon_q(&xr, i)?;
            ideals.insert("xR:I".into(), nf(&colon));
            ideals.insert("m*(xR:I)".into(), nf(&ring.product(&m, &colon)?));
        }
    }
    Ok((ideals, values))
}

fn named_inputs<I>(inst: &Instance<I>) -> Vec<(&'static str, &I)> {
    [("I", &inst.i), ("J", &inst.j), ("K", &inst.k)]
        .into_iter()
        .filter_map(|(n, i)| i.as_ref().map(|i| (n, i)))
        .collect()
}

impl Certificate {
    pub fn build<A: IdealArithmetic>(
        ring: &A,
        id: PropositionId,
        inst: &Instance<A::Ideal>,
        verdict: &Verdict,
    ) -> Result<Self> {
        let mut inst = inst.clone();
        if id == PropositionId::LinkedIdealsShareBurch && inst.j.is_none() {
            if let (Some(i), Some(k)) = (&inst.i, &inst.k) {
                inst.j = Some(ring.colon_r(k, i)?);
            }
        }
        let x = verdict.witness.or(inst.x);
        let named = named_inputs(&inst);
        let (intermediates, values) = evidence(ring, id, &named, x)?;
        let inputs = named
            .iter()
            .map(|(n, i)| Ok((n.to_string(), ring.minimal_generators(i)?)))
            .collect::<Result<_>>()?;
        Ok(Certificate {
            proposition: id,
            semigroup: ring.semigroup_generators(),
            inputs,
            x,
            intermediates,
            values,
            hypotheses_hold: verdict.hypotheses_hold,
            conclusion_holds: verdict.conclusion_holds,
        })
    }

    /// Recomputes the certificate with the bit-set oracle. Returns the list
    /// of discrepancies; an empty list means the violation is confirmed.
    pub fn reverify(&self) -> Result<Vec<String>> {
        let oracle = WindowOracle::new(&self.semigroup)?;
        self.reverify_with(&oracle)
    }

    pub fn reverify_with<A: IdealArithmetic>(&self, ring: &A) -> Result<Vec<String>> {
        let mut problems = Vec::new();
        if ring.semigroup_generators() != self.semigroup {
            problems.push("semigroup generators differ".to_string());
            return Ok(problems);
        }
        let ideal = |name: &str| -> Result<Option<A::Ideal>> {
            self.inputs.get(name).map(|g| ring.ideal(g)).transpose()
        };
        let inst = Instance {
            i: ideal("I")?,
            j: ideal("J")?,
            k: ideal("K")?,
            x: self.x,
        };
        let (intermediates, values) =
            evidence(ring, self.proposition, &named_inputs(&inst), self.x)?;
        for (name, form) in &self.intermediates {
            match intermediates.get(name) {
                Some(f) if f == form => {}
                Some(f) => problems.push(format!("{name}: recorded {form}, recomputed {f}")),
                None => problems.push(format!("{name}: not recomputed")),
            }
        }
        for (name, value) in &self.values {
            match values.get(name) {
                Some(v) if v == value => {}
                Some(v) => problems.push(format!("{name}: recorded {value}, recomputed {v}")),
                None => problems.push(format!("{name}: not recomputed")),
            }
        }
        if intermediates.len() != self.intermediates.len() || values.len() != self.values.len() {
            problems.push("recomputed evidence has different entries".to_string());
        }
        let v = Evaluator::new(ring)?.evaluate(self.proposition, &inst)?;
        if v.hypotheses_hold != self.hypotheses_hold || v.conclusion_holds != self.conclusion_holds
        {
            problems.push(format!(
                "verdict recomputed as hypotheses={} conclusion={}",
                v.hypotheses_hold, v.conclusion_holds
            ));
        }
        if !v.violation() {
            problems.push("recomputed verdict is not a violation".to_string());
        }
        Ok(problems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SemigroupRing;

    fn ring(gens: &[i64]) -> SemigroupRing {
        SemigroupRing::from_generators(gens).unwrap()
    }

    fn pair(r: &SemigroupRing, i: &[i64], j: &[i64]) -> Instance<crate::FractionalIdeal> {
        Instance {
            i: Some(r.ideal(i).unwrap()),
            j: Some(r.ideal(j).unwrap()),
            ..Instance::default()
        }
    }

    #[test]
    fn codes_round_trip() {
        assert_eq!(PropositionId::ALL.len(), 18);
        for &id in PropositionId::ALL {
            assert_eq!(id.code().parse::<PropositionId>(), Ok(id));
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(serde_json::from_str::<PropositionId>(&json).unwrap(), id);
        }
        assert_eq!(
            "P9.99".parse::<PropositionId>(),
            Err(Error::UnknownProposition("P9.99".into()))
        );
    }

    #[test]
    fn product_in_principal_violation() {
        let r = ring(&[4, 6, 7]);
        let ev = Evaluator::new(&r).unwrap();
        let inst = pair(&r, &[7, 8], &[4]);
        let out = ev
            .outcome(PropositionId::ProductInPrincipalIsBurch, &inst)
            .unwrap();
        assert!(out.hypotheses_hold);
        assert!(!out.conclusion_holds);
        assert!(out.violation);
        assert_eq!(out.witness, Some(4));
        let cert = out.certificate.unwrap();
        assert_eq!(
            cert.intermediates["J*m"].to_string(),
            "{8,10,11,12,[14,oo)}"
        );
        assert_eq!(cert.intermediates["I*m"].to_string(), "{[11,oo)}");
        assert_eq!(cert.reverify().unwrap(), Vec::<String>::new());
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let r = ring(&[4, 6, 7]);
        let ev = Evaluator::new(&r).unwrap();
        let inst = pair(&r, &[7, 8], &[4]);
        let mut cert = ev
            .outcome(PropositionId::ProductInPrincipalIsBurch, &inst)
            .unwrap()
            .certificate
            .unwrap();
        cert.intermediates.insert(
            "I*m".into(),
            NormalForm {
                sporadic: vec![11],
                threshold: 13,
            },
        );
        assert!(!cert.reverify().unwrap().is_empty());
    }

    #[test]
    fn ring_statements() {
        let r = ring(&[4, 6, 7]);
        let ev = Evaluator::new(&r).unwrap();
        let none = Instance::default();
        for id in [
            PropositionId::GradedCohenMacaulayIndices,
            PropositionId::IndexBelowLoewyLength,
            PropositionId::LoewyBoundFromInjectivity,
            PropositionId::LoewyBoundFromRegularForm,
            PropositionId::ReductionNumberIsUlrichIndex,
            PropositionId::SuperficialColength,
        ] {
            let v = ev.evaluate(id, &none).unwrap();
            assert!(v.hypotheses_hold && v.conclusion_holds, "{id}");
        }
        let r = ring(&[4, 5, 11]);
        let ev = Evaluator::new(&r).unwrap();
        let v = ev
            .evaluate(PropositionId::GradedCohenMacaulayIndices, &none)
            .unwrap();
        assert!(!v.hypotheses_hold);
        assert!(!v.conclusion_holds);
        let v = ev
            .evaluate(PropositionId::IndexBelowLoewyLength, &none)
            .unwrap();
        assert!(!v.hypotheses_hold);
    }

    #[test]
    fn single_ideal_statements() {
        let r = ring(&[4, 6, 7]);
        let ev = Evaluator::new(&r).unwrap();
        let m2 = Instance {
            i: Some(r.power_of_maximal(2).unwrap()),
            ..Instance::default()
        };
        let v = ev.evaluate(PropositionId::UlrichEliasIsBurch, &m2).unwrap();
        assert!(!v.hypotheses_hold && !v.violation());

        let r = ring(&[4, 5, 11]);
        let ev = Evaluator::new(&r).unwrap();
        let i = Instance {
            i: Some(r.ideal(&[8, 9, 15, 16, 22]).unwrap()),
            x: Some(9),
            ..Instance::default()
        };
        let v = ev
            .evaluate(PropositionId::ColonCriterionGivesElias, &i)
            .unwrap();
        assert!(v.hypotheses_hold && v.conclusion_holds);

        let unit = Instance {
            i: Some(r.unit().unwrap()),
            ..Instance::default()
        };
        assert!(matches!(
            ev.evaluate(PropositionId::UlrichEliasIsBurch, &unit),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn linked_statement_defaults_j() {
        let r = ring(&[4, 6, 7]);
        let ev = Evaluator::new(&r).unwrap();
        let inst = Instance {
            i: Some(r.ideal(&[4]).unwrap()),
            k: Some(r.ideal(&[8]).unwrap()),
            ..Instance::default()
        };
        let v = ev
            .evaluate(PropositionId::LinkedIdealsShareBurch, &inst)
            .unwrap();
        assert!(v.hypotheses_hold && v.conclusion_holds);
    }
}
