//! Numerical semigroups: normal form, membership, and the combinatorial
//! invariants of the associated semigroup ring `k[[t^a1, ..., t^an]]`.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A numerical semigroup `S = <a1, ..., an>` with every invariant computed
/// eagerly at construction.
///
/// Membership is exact for every integer: below the window it is read from a
/// bit set, and everything at or above the conductor is a member. The order
/// table only covers `[0, window)`.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
    symmetric: bool,
    members: Vec<u64>,
    ord: OrdTable,
}

/// Maximal factorization length of every semigroup element below a window.
///
/// `ord(s) >= n` exactly when `t^s` lies in the `n`-th power of the maximal
/// ideal.
#[derive(Clone, Debug)]
pub struct OrdTable {
    values: Vec<u32>,
}

const NOT_MEMBER: u32 = u32::MAX;

impl OrdTable {
    fn build(generators: &[i64], window: i64, is_member: impl Fn(i64) -> bool) -> Self {
        let mut values = vec![NOT_MEMBER; window as usize];
        values[0] = 0;
        for s in 1..window {
            if !is_member(s) {
                continue;
            }
            let best = generators
                .iter()
                .filter(|&&a| a <= s)
                .map(|&a| values[(s - a) as usize])
                .filter(|&v| v != NOT_MEMBER)
                .max()
                .expect("every nonzero element is a generator plus an element");
            values[s as usize] = best + 1;
        }
        OrdTable { values }
    }

    pub fn window(&self) -> i64 {
        self.values.len() as i64
    }

    /// `None` for non-members and for values outside the window.
    pub fn get(&self, s: i64) -> Option<u32> {
        if s < 0 {
            return None;
        }
        match self.values.get(s as usize) {
            Some(&v) if v != NOT_MEMBER => Some(v),
            _ => None,
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least element of each residue class modulo `a`, by shortest paths over
/// the residues.
fn apery_by_residues(a: i64, generators: &[i64]) -> Vec<i64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut dist = vec![i64::MAX; a as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let nd = d + g;
            let nr = (nd % a) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators` with the default window
    /// `max(2(c + 4e), 2c + e(c + 2e + 4))`.
    pub fn new(generators: &[i64]) -> Result<Self> {
        Self::with_window(generators, 0)
    }

    /// Like [`NumericalSemigroup::new`] but with a window of at least
    /// `min_window`.
    pub fn with_window(generators: &[i64], min_window: i64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let g = generators.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(Error::NonCoprime(g));
        }

        let e0 = *generators.iter().min().unwrap();
        let apery = apery_by_residues(e0, generators);
        let frobenius = apery.iter().max().copied().unwrap() - e0;
        let conductor = frobenius + 1;

        // Membership up to c + e0 is enough to find minimal generators.
        let scan = conductor + e0 + 1;
        let in_s = |z: i64| z >= 0 && (z >= conductor || apery[(z % e0) as usize] <= z);

        let mut minimal = Vec::new();
        for z in 1..scan {
            if !in_s(z) {
                continue;
            }
            let decomposable = (1..=z / 2).any(|x| in_s(x) && in_s(z - x));
            if !decomposable {
                minimal.push(z);
            }
        }
        let e = minimal[0];

        let default_window =
            (2 * (conductor + 4 * e)).max(2 * conductor + e * (conductor + 2 * e + 4));
        let window = default_window.max(min_window).max(conductor + 1);

        let mut members = vec![0u64; (window as usize).div_ceil(64)];
        for z in 0..window {
            if in_s(z) {
                members[(z / 64) as usize] |= 1 << (z % 64);
            }
        }

        let gaps: Vec<i64> = (1..conductor).filter(|&z| !in_s(z)).collect();
        let pseudo_frobenius: Vec<i64> = gaps
            .iter()
            .copied()
            .filter(|&f| minimal.iter().all(|&a| in_s(f + a)))
            .collect();
        let symmetric = frobenius < 0 || pseudo_frobenius == [frobenius];

        let ord = OrdTable::build(&minimal, window, in_s);

        Ok(NumericalSemigroup {
            generators: minimal,
            frobenius,
            gaps,
            pseudo_frobenius,
            symmetric,
            members,
            ord,
        })
    }

    /// Minimal generators in increasing order.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer outside `S`; `-1` when `S` is all of `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Gaps `f` with `f + s` in `S` for every nonzero `s` in `S`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen-Macaulay type of the ring; the discrete valuation ring `<1>`
    /// has type 1.
    pub fn ring_type(&self) -> usize {
        self.pseudo_frobenius.len().max(1)
    }

    /// Symmetric semigroups are exactly those with Gorenstein rings.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn window(&self) -> i64 {
        self.ord.window()
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z > self.frobenius {
            return true;
        }
        self.members[(z / 64) as usize] >> (z % 64) & 1 == 1
    }

    /// The `a` least elements of `S` in each residue class mod `a`, sorted.
    pub fn apery_set(&self, a: i64) -> Result<Vec<i64>> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotInSemigroup(a));
        }
        let mut found = vec![false; a as usize];
        let mut out = Vec::with_capacity(a as usize);
        let mut z = 0;
        while out.len() < a as usize {
            let r = (z % a) as usize;
            if !found[r] && self.contains(z) {
                found[r] = true;
                out.push(z);
            }
            z += 1;
        }
        Ok(out)
    }

    /// Maximal number of parts in a factorization of `s` into nonzero
    /// elements.
    pub fn ord(&self, s: i64) -> Result<u32> {
        if !self.contains(s) {
            return Err(Error::NotInSemigroup(s));
        }
        self.ord.get(s).ok_or(Error::OutOfWindow {
            needed: s,
            window: self.window(),
        })
    }

    pub fn ord_table(&self) -> &OrdTable {
        &self.ord
    }

    /// Elements of `S` in `[lo, hi)`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..hi).filter(move |&z| self.contains(z))
    }

    /// The semigroup `S \ {a}` for a minimal generator `a`, which is again a
    /// numerical semigroup.
    pub fn without_generator(&self, a: i64) -> Result<Self> {
        if !self.generators.contains(&a) {
            return Err(Error::PreconditionFailed(format!(
                "{a} is not a minimal generator of {self}"
            )));
        }
        // Generators of S \ {a}: the other generators plus a + g for every g
        // and 2a, 3a; normalization drops the redundant ones.
        let mut gens: Vec<i64> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| g != a)
            .collect();
        gens.extend(self.generators.iter().map(|&g| a + g));
        gens.push(2 * a);
        gens.push(3 * a);
        Self::new(&gens)
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
