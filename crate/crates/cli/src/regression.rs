//! Regression cases stored as JSON files: a semigroup, named ideals and a
//! list of checks with pinned values. Cases run against any
//! [`IdealArithmetic`] implementation, so the same file exercises the fast
//! path and the window oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use sgpcalc_core::classify::{elias_colon_criterion, is_burch, is_elias, is_ulrich};
use sgpcalc_core::invariants::{
    check_gll_bound, elias_index, gll_monomial, gr_is_cm, index_of_gorenstein,
    reduction_number_of_m, samuel_length, ulrich_index,
};
use sgpcalc_core::propositions::{Evaluator, Instance, PropositionId};
use sgpcalc_core::{Error, IdealArithmetic};

use crate::parse::{format_ideal, format_semigroup, parse_ideal, parse_semigroup};
use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegressionCase {
    pub name: String,
    pub description: String,
    /// Semigroup literal such as `<4,6,7>`.
    pub semigroup: String,
    /// Ideal literals by name. `m`, `R`, `K` and `trace` are predefined.
    #[serde(default)]
    pub ideals: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    /// Set when a stated claim about this instance disagrees with the
    /// computed values pinned in `checks`.
    #[serde(default)]
    pub discrepancy: Option<Discrepancy>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Discrepancy {
    pub claimed: String,
    pub computed: String,
}

/// An ideal expression: a name, or an operation on subexpressions.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Expr {
    Name(String),
    Op(Box<Op>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    Product(Expr, Expr),
    Sum(Expr, Expr),
    Intersect(Expr, Expr),
    ColonQ(Expr, Expr),
    ColonR(Expr, Expr),
    /// `m^n`.
    PowerOfMaximal(u32),
    /// The ideal generated by the listed exponents.
    Generators(Vec<i64>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Op(op) => match &**op {
                Op::Product(a, b) => write!(f, "({a})({b})"),
                Op::Sum(a, b) => write!(f, "({a} + {b})"),
                Op::Intersect(a, b) => write!(f, "({a} ∩ {b})"),
                Op::ColonQ(a, b) => write!(f, "({a} :_Q {b})"),
                Op::ColonR(a, b) => write!(f, "({a} :_R {b})"),
                Op::PowerOfMaximal(n) => write!(f, "m^{n}"),
                Op::Generators(g) => write!(f, "{}", format_ideal(g)),
            },
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case", deny_unknown_fields)]
pub enum Check {
    MinimalGenerators {
        ideal: Expr,
        value: Vec<i64>,
    },
    Contains {
        ideal: Expr,
        element: i64,
        value: bool,
    },
    Subset {
        left: Expr,
        right: Expr,
        value: bool,
    },
    Equal {
        left: Expr,
        right: Expr,
        value: bool,
    },
    Mu {
        ideal: Expr,
        value: usize,
    },
    Elias {
        ideal: Expr,
        value: bool,
    },
    Burch {
        ideal: Expr,
        value: bool,
    },
    Ulrich {
        ideal: Expr,
        value: bool,
    },
    ColonCriterion {
        ideal: Expr,
        a: i64,
        value: bool,
    },
    Invariant {
        name: String,
        value: Value,
    },
    ReductionNumber {
        a: i64,
        value: u32,
    },
    GllBound {
        a: i64,
        t: u32,
        injective_up_to_s: bool,
        gll_bound_holds: bool,
        mu_of_power: usize,
        containment_holds: bool,
    },
    Proposition {
        id: PropositionId,
        #[serde(default)]
        i: Option<String>,
        #[serde(default)]
        j: Option<String>,
        #[serde(default)]
        k: Option<String>,
        #[serde(default)]
        x: Option<i64>,
        hypotheses_hold: bool,
        conclusion_holds: bool,
        #[serde(default)]
        witness: Option<i64>,
    },
}

/// Outcome of one check: what was compared and whether it matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub label: String,
    pub expected: Value,
    pub actual: Value,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl RegressionCase {
    pub fn semigroup_generators(&self) -> Result<Vec<i64>, CliError> {
        Ok(parse_semigroup(&self.semigroup)?)
    }
}

/// Loads every `*.json` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<RegressionCase>, CliError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|ext| ext == "json"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
        })
        .collect()
}

struct Context<'a, A: IdealArithmetic> {
    ring: &'a A,
    case: &'a RegressionCase,
}

impl<A: IdealArithmetic> Context<'_, A> {
    fn named(&self, name: &str) -> Result<A::Ideal, CliError> {
        let ring = self.ring;
        Ok(match name {
            "m" => ring.maximal()?,
            "R" => ring.unit()?,
            "K" => ring.canonical()?,
            "trace" => ring.trace_of_canonical()?,
            _ => {
                let literal = self.case.ideals.get(name).ok_or_else(|| {
                    CliError::Usage(format!("{}: unknown ideal {name}", self.case.name))
                })?;
                ring.ideal(&parse_ideal(literal)?)?
            }
        })
    }

    fn eval(&self, expr: &Expr) -> Result<A::Ideal, CliError> {
        let ring = self.ring;
        Ok(match expr {
            Expr::Name(n) => self.named(n)?,
            Expr::Op(op) => match &**op {
                Op::Product(a, b) => ring.product(&self.eval(a)?, &self.eval(b)?)?,
                Op::Sum(a, b) => ring.sum(&self.eval(a)?, &self.eval(b)?)?,
                Op::Intersect(a, b) => ring.intersect(&self.eval(a)?, &self.eval(b)?)?,
                Op::ColonQ(a, b) => ring.colon_q(&self.eval(a)?, &self.eval(b)?)?,
                Op::ColonR(a, b) => ring.colon_r(&self.eval(a)?, &self.eval(b)?)?,
                Op::PowerOfMaximal(n) => ring.power_of_maximal(*n)?,
                Op::Generators(g) => ring.ideal(g)?,
            },
        })
    }

    fn optional(&self, name: &Option<String>) -> Result<Option<A::Ideal>, CliError> {
        name.as_deref().map(|n| self.named(n)).transpose()
    }

    fn invariant(&self, name: &str, len: usize) -> Result<Value, CliError> {
        let ring = self.ring;
        Ok(match name {
            "e" => json!(ring.multiplicity()),
            "embdim" => json!(ring.semigroup_generators().len()),
            "symmetric" => json!(ring.is_symmetric()),
            "type" => json!(ring.mu(&ring.canonical()?)?),
            "nearly_gorenstein" => {
                json!(ring.is_subset(&ring.maximal()?, &ring.trace_of_canonical()?))
            }
            "eli" => json!(elias_index(ring)?),
            "ulr" => json!(ulrich_index(ring)?),
            "gll_mono" => json!(gll_monomial(ring)?.g),
            "gll_witness" => json!(gll_monomial(ring)?.witness),
            "index" => json!(index_of_gorenstein(ring)?),
            "gr_cm" => json!(gr_is_cm(ring)?),
            "samuel" => json!((1..=len as u32)
                .map(|n| samuel_length(ring, n))
                .collect::<Result<Vec<_>, Error>>()?),
            _ => return Err(CliError::Usage(format!("unknown invariant {name}"))),
        })
    }

    fn run(&self, check: &Check) -> Result<CheckResult, CliError> {
        let ring = self.ring;
        let result = |label: String, expected: Value, actual: Value| CheckResult {
            label,
            expected,
            actual,
        };
        Ok(match check {
            Check::MinimalGenerators { ideal, value } => result(
                format!("minimal generators of {ideal}"),
                json!(value),
                json!(ring.minimal_generators(&self.eval(ideal)?)?),
            ),
            Check::Contains {
                ideal,
                element,
                value,
            } => result(
                format!("{element} ∈ {ideal}"),
                json!(value),
                json!(ring.contains(&self.eval(ideal)?, *element)),
            ),
            Check::Subset { left, right, value } => result(
                format!("{left} ⊆ {right}"),
                json!(value),
                json!(ring.is_subset(&self.eval(left)?, &self.eval(right)?)),
            ),
            Check::Equal { left, right, value } => result(
                format!("{left} = {right}"),
                json!(value),
                json!(ring.equal(&self.eval(left)?, &self.eval(right)?)),
            ),
            Check::Mu { ideal, value } => result(
                format!("μ({ideal})"),
                json!(value),
                json!(ring.mu(&self.eval(ideal)?)?),
            ),
            Check::Elias { ideal, value } => result(
                format!("{ideal} is Elias"),
                json!(value),
                json!(is_elias(ring, &self.eval(ideal)?)?),
            ),
            Check::Burch { ideal, value } => result(
                format!("{ideal} is Burch"),
                json!(value),
                json!(is_burch(ring, &self.eval(ideal)?)?),
            ),
            Check::Ulrich { ideal, value } => result(
                format!("{ideal} is Ulrich"),
                json!(value),
                json!(is_ulrich(ring, &self.eval(ideal)?)?),
            ),
            Check::ColonCriterion { ideal, a, value } => result(
                format!("{a} ∈ m({a} :_Q {ideal})"),
                json!(value),
                json!(elias_colon_criterion(ring, &self.eval(ideal)?, *a)?),
            ),
            Check::Invariant { name, value } => {
                let len = value.as_array().map_or(0, Vec::len);
                result(name.clone(), value.clone(), self.invariant(name, len)?)
            }
            Check::ReductionNumber { a, value } => result(
                format!("reduction number of m with respect to {a}"),
                json!(value),
                json!(reduction_number_of_m(ring, *a)?),
            ),
            Check::GllBound {
                a,
                t,
                injective_up_to_s,
                gll_bound_holds,
                mu_of_power,
                containment_holds,
            } => {
                let c = check_gll_bound(ring, *a)?;
                result(
                    format!("Loewy bound with respect to {a}"),
                    json!([
                        t,
                        injective_up_to_s,
                        gll_bound_holds,
                        mu_of_power,
                        containment_holds
                    ]),
                    json!([
                        c.t,
                        c.injective_up_to_s,
                        c.gll_bound_holds,
                        c.mu_of_power,
                        c.containment_holds
                    ]),
                )
            }
            Check::Proposition {
                id,
                i,
                j,
                k,
                x,
                hypotheses_hold,
                conclusion_holds,
                witness,
            } => {
                let inst = Instance {
                    i: self.optional(i)?,
                    j: self.optional(j)?,
                    k: self.optional(k)?,
                    x: *x,
                };
                let v = Evaluator::new(ring)?.evaluate(*id, &inst)?;
                result(
                    format!("{id} hypotheses, conclusion, witness"),
                    json!([hypotheses_hold, conclusion_holds, witness]),
                    json!([v.hypotheses_hold, v.conclusion_holds, v.witness]),
                )
            }
        })
    }
}

/// Runs every check of `case` over `ring`, which must be built from the
/// case's semigroup.
pub fn run_case<A: IdealArithmetic>(
    ring: &A,
    case: &RegressionCase,
) -> Result<Vec<CheckResult>, CliError> {
    let gens = case.semigroup_generators()?;
    if ring.semigroup_generators() != gens {
        return Err(CliError::Usage(format!(
            "{}: ring {} does not match {}",
            case.name,
            format_semigroup(&ring.semigroup_generators()),
            case.semigroup
        )));
    }
    let ctx = Context { ring, case };
    case.checks.iter().map(|c| ctx.run(c)).collect()
}
