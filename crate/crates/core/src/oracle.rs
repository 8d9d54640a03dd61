//! Brute-force ideal arithmetic on bit sets over a fixed integer window.
//!
//! Nothing here uses normal forms, generator lists of ideals, or the order
//! table of [`crate::NumericalSemigroup`]: the semigroup is rebuilt from its
//! generators by dynamic programming, products are Minkowski sums of bit
//! sets, colons are intersections of shifted copies, and `ord` is read off
//! iterated products of the maximal ideal. It exists to cross-check the
//! normal-form arithmetic and to re-verify counterexample certificates.
//!
//! Every set is stored on `[lo, hi)`; integers below `lo` are never members
//! and integers `>= hi` always are. Each constructed set is checked to end in
//! a run of `e` members, which together with closure under `e` proves the
//! tail assumption. When that check fails the window is too small and the
//! operation reports [`Error::OutOfWindow`].

use crate::arith::IdealArithmetic;
use crate::error::{Error, Result};
use crate::ideal::NormalForm;

/// Membership bits of one set on the oracle window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSet {
    bits: Vec<u64>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

/// Bits `[start, start + len)` of `src` as a fresh bit vector.
fn extract(src: &[u64], start: usize, len: usize) -> Vec<u64> {
    let n = word_count(len);
    let mut out = vec![0u64; n];
    let (w0, sh) = (start / 64, start % 64);
    for (k, slot) in out.iter_mut().enumerate() {
        let lo = src.get(w0 + k).copied().unwrap_or(0);
        let v = if sh == 0 {
            lo
        } else {
            let hi = src.get(w0 + k + 1).copied().unwrap_or(0);
            (lo >> sh) | (hi << (64 - sh))
        };
        *slot = v;
    }
    if !len.is_multiple_of(64) {
        out[n - 1] &= (1u64 << (len % 64)) - 1;
    }
    out
}

/// Brute-force arithmetic for one numerical semigroup.
#[derive(Clone, Debug)]
pub struct WindowOracle {
    generators: Vec<i64>,
    lo: i64,
    hi: i64,
    /// Semigroup membership on `[0, hi)`.
    semigroup: Vec<bool>,
    frobenius: i64,
    multiplicity: i64,
    atoms: Vec<i64>,
    /// `ord` for every member of `S` below `hi - c - 2e`, the range on which
    /// every power needed to decide it fits the window.
    ord: Vec<u32>,
}

impl WindowOracle {
    /// Oracle with a window sized from the semigroup: `[-L, 2L)` with
    /// `L = 3c + (e + 4)e + 16`.
    pub fn new(generators: &[i64]) -> Result<Self> {
        let (c, e) = conductor_and_multiplicity(generators)?;
        let l = 3 * c + (e + 4) * e + 16;
        Self::with_window(generators, -l, 2 * l)
    }

    pub fn with_window(generators: &[i64], lo: i64, hi: i64) -> Result<Self> {
        let (c, e) = conductor_and_multiplicity(generators)?;
        if lo > 0 || hi - c - 2 * e <= e {
            return Err(Error::OutOfWindow {
                needed: c + 3 * e + 1,
                window: hi,
            });
        }
        let mut semigroup = vec![false; hi as usize];
        semigroup[0] = true;
        for z in 1..hi {
            semigroup[z as usize] = generators
                .iter()
                .any(|&g| g <= z && semigroup[(z - g) as usize]);
        }
        let frobenius = (0..hi)
            .rev()
            .find(|&z| !semigroup[z as usize])
            .unwrap_or(-1);
        let multiplicity = (1..hi).find(|&z| semigroup[z as usize]).unwrap();
        let member = |z: i64| z >= 0 && semigroup[z as usize];
        let atoms = (1..=c + e)
            .filter(|&z| member(z) && !(1..z).any(|x| member(x) && member(z - x)))
            .collect();
        let mut oracle = WindowOracle {
            generators: generators.to_vec(),
            lo,
            hi,
            semigroup,
            frobenius,
            multiplicity,
            atoms,
            ord: Vec::new(),
        };
        oracle.ord = oracle.ord_from_powers()?;
        Ok(oracle)
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    fn span(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    fn member_s(&self, z: i64) -> bool {
        z >= 0 && (z >= self.hi || self.semigroup[z as usize])
    }

    fn scan(&self, mut f: impl FnMut(i64) -> bool) -> Result<WindowSet> {
        let mut bits = vec![0u64; word_count(self.span())];
        for z in self.lo..self.hi {
            if f(z) {
                set_bit(&mut bits, (z - self.lo) as usize);
            }
        }
        self.checked(WindowSet { bits })
    }

    fn checked(&self, set: WindowSet) -> Result<WindowSet> {
        let top = (self.hi - self.multiplicity).max(self.lo);
        let tail_ok = (top..self.hi).all(|z| get_bit(&set.bits, (z - self.lo) as usize));
        if tail_ok {
            Ok(set)
        } else {
            Err(Error::OutOfWindow {
                needed: self.hi + 1,
                window: self.hi,
            })
        }
    }

    pub fn member(&self, set: &WindowSet, z: i64) -> bool {
        if z < self.lo {
            false
        } else if z >= self.hi {
            true
        } else {
            get_bit(&set.bits, (z - self.lo) as usize)
        }
    }

    /// Membership bits of `set` on `[from, to)`, tail included.
    fn materialize(&self, set: &WindowSet, from: i64, to: i64) -> Vec<u64> {
        let len = (to - from) as usize;
        let mut out = vec![0u64; word_count(len)];
        for z in from..to {
            if self.member(set, z) {
                set_bit(&mut out, (z - from) as usize);
            }
        }
        out
    }

    fn ord_from_powers(&self) -> Result<Vec<u32>> {
        let limit = self.hi - self.conductor() - 2 * self.multiplicity;
        let mut ord = vec![0u32; limit as usize];
        let m = self.ideal(&self.generators)?;
        let mut power = m.clone();
        let mut n = 1;
        while self.min_element(&power) < limit {
            for z in 1..limit {
                if self.member(&power, z) {
                    ord[z as usize] = n;
                }
            }
            power = self.minkowski(&power, &m)?;
            n += 1;
        }
        Ok(ord)
    }

    fn minkowski(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        let span = self.span() as i64;
        // z = x + y with z < hi and y >= lo forces x < hi - lo.
        let b_from = 2 * self.lo - self.hi;
        let b_ext = self.materialize(b, b_from, self.hi - self.lo + 1);
        let mut out = vec![0u64; word_count(span as usize)];
        for x in self.lo..(self.hi - self.lo) {
            if !self.member(a, x) {
                continue;
            }
            // Bit z - lo of the result reads b at z - x.
            let start = (self.lo - x - b_from) as usize;
            let shifted = extract(&b_ext, start, span as usize);
            for (o, s) in out.iter_mut().zip(shifted) {
                *o |= s;
            }
        }
        self.checked(WindowSet { bits: out })
    }

    fn colon(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        let span = self.span();
        // z + y with z in [lo, hi), y in [lo, hi - lo).
        let a_from = 2 * self.lo;
        let a_ext = self.materialize(a, a_from, 2 * self.hi - self.lo);
        let mut out = vec![u64::MAX; word_count(span)];
        if !span.is_multiple_of(64) {
            let n = out.len();
            out[n - 1] = (1u64 << (span % 64)) - 1;
        }
        for y in self.lo..(self.hi - self.lo) {
            if !self.member(b, y) {
                continue;
            }
            let start = (self.lo + y - a_from) as usize;
            let shifted = extract(&a_ext, start, span);
            for (o, s) in out.iter_mut().zip(shifted) {
                *o &= s;
            }
        }
        self.checked(WindowSet { bits: out })
    }
}

/// Conductor and multiplicity by brute force: scan until `e` consecutive
/// members appear.
fn conductor_and_multiplicity(generators: &[i64]) -> Result<(i64, i64)> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
        return Err(Error::NonPositive(bad));
    }
    let e = *generators.iter().min().unwrap();
    let mut member = vec![true];
    let mut run = 0;
    let mut z = 0i64;
    // Bail out if no run of length e ever appears (gcd > 1).
    let limit = e * generators.iter().max().unwrap() + 1;
    while run < e {
        z += 1;
        if z > limit {
            return Err(Error::NonCoprime(0));
        }
        let m = generators
            .iter()
            .any(|&g| g <= z && member[(z - g) as usize]);
        member.push(m);
        run = if m { run + 1 } else { 0 };
    }
    Ok((z - e + 1, e))
}

impl IdealArithmetic for WindowOracle {
    type Ideal = WindowSet;

    /// Atoms: nonzero members that are not a sum of two nonzero members.
    fn semigroup_generators(&self) -> Vec<i64> {
        self.atoms.clone()
    }

    fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f.max(0)).all(|z| self.member_s(z) != self.member_s(f - z))
    }

    fn in_semigroup(&self, z: i64) -> bool {
        self.member_s(z)
    }

    fn ord_window(&self) -> i64 {
        self.ord.len() as i64
    }

    fn ord(&self, s: i64) -> Result<u32> {
        if !self.member_s(s) {
            return Err(Error::NotInSemigroup(s));
        }
        if s >= self.ord_window() {
            return Err(Error::OutOfWindow {
                needed: s,
                window: self.ord_window(),
            });
        }
        Ok(self.ord[s as usize])
    }

    fn ideal(&self, gens: &[i64]) -> Result<WindowSet> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        self.scan(|z| gens.iter().any(|&g| self.member_s(z - g)))
    }

    fn canonical(&self) -> Result<WindowSet> {
        let f = self.frobenius;
        self.scan(|z| !self.member_s(f - z))
    }

    fn power_of_maximal(&self, n: u32) -> Result<WindowSet> {
        let m = self.maximal()?;
        let mut power = self.unit()?;
        for _ in 0..n {
            power = self.minkowski(&power, &m)?;
        }
        Ok(power)
    }

    fn product(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        self.minkowski(a, b)
    }

    fn sum(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        let bits = a.bits.iter().zip(&b.bits).map(|(x, y)| x | y).collect();
        self.checked(WindowSet { bits })
    }

    fn intersect(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        let bits = a.bits.iter().zip(&b.bits).map(|(x, y)| x & y).collect();
        self.checked(WindowSet { bits })
    }

    fn colon_q(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        self.colon(a, b)
    }

    fn colon_r(&self, a: &WindowSet, b: &WindowSet) -> Result<WindowSet> {
        if !self.is_integral(a)? {
            return Err(Error::NotIntegral);
        }
        let q = self.colon(a, b)?;
        self.intersect(&q, &self.unit()?)
    }

    fn contains(&self, a: &WindowSet, z: i64) -> bool {
        self.member(a, z)
    }

    fn is_subset(&self, a: &WindowSet, b: &WindowSet) -> bool {
        a.bits.iter().zip(&b.bits).all(|(x, y)| x & !y == 0)
    }

    fn min_element(&self, a: &WindowSet) -> i64 {
        (self.lo..self.hi)
            .find(|&z| self.member(a, z))
            .unwrap_or(self.hi)
    }

    fn minimal_generators(&self, a: &WindowSet) -> Result<Vec<i64>> {
        // E \ mE; the top e positions are in mE by the tail check.
        let me = self.minkowski(a, &self.maximal()?)?;
        Ok((self.lo..self.hi)
            .filter(|&z| self.member(a, z) && !self.member(&me, z))
            .collect())
    }

    fn socle_dimension(&self, a: &WindowSet) -> Result<usize> {
        let col = self.colon_r(a, &self.maximal()?)?;
        Ok((self.lo..self.hi)
            .filter(|&z| self.member(&col, z) && !self.member(a, z))
            .count())
    }

    fn colength(&self, a: &WindowSet) -> Result<usize> {
        if !self.is_integral(a)? {
            return Err(Error::NotIntegral);
        }
        Ok((0..self.hi)
            .filter(|&z| self.member_s(z) && !self.member(a, z))
            .count())
    }

    fn normal_form(&self, a: &WindowSet) -> NormalForm {
        NormalForm::from_predicate(self.lo, self.hi, |z| self.member(a, z))
    }

    fn equal(&self, a: &WindowSet, b: &WindowSet) -> bool {
        a == b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extract_crosses_words() {
        let src = vec![u64::MAX << 60, 0b1011];
        let got = extract(&src, 62, 6);
        assert_eq!(got, vec![0b101111]);
    }

    #[test]
    fn semigroup_data() {
        let o = WindowOracle::new(&[4, 6, 7]).unwrap();
        assert_eq!(o.conductor(), 10);
        assert_eq!(o.multiplicity(), 4);
        assert!(o.is_symmetric());
        assert_eq!(o.semigroup_generators(), vec![4, 6, 7]);
        let o = WindowOracle::new(&[4, 5, 11, 8]).unwrap();
        assert_eq!(o.semigroup_generators(), vec![4, 5, 11]);
        assert!(!o.is_symmetric());
        assert_eq!(o.ord(15).unwrap(), 3);
        assert_eq!(o.ord(11).unwrap(), 1);
    }

    #[test]
    fn example_ideals() {
        let o = WindowOracle::new(&[4, 6, 7]).unwrap();
        let e = o.ideal(&[7, 8]).unwrap();
        let m = o.maximal().unwrap();
        let me = o.product(&m, &e).unwrap();
        assert_eq!(
            o.normal_form(&me),
            NormalForm {
                sporadic: vec![],
                threshold: 11
            }
        );
        let col = o.colon_r(&e, &m).unwrap();
        assert_eq!(
            o.normal_form(&col),
            NormalForm {
                sporadic: vec![7, 8],
                threshold: 10
            }
        );

        let o = WindowOracle::new(&[4, 5, 11]).unwrap();
        let k = o.canonical().unwrap();
        let m2 = o.power_of_maximal(2).unwrap();
        let dual = o.colon_q(&k, &m2).unwrap();
        assert_eq!(
            o.normal_form(&dual),
            NormalForm {
                sporadic: vec![-4],
                threshold: 0
            }
        );
        assert_eq!(o.minimal_generators(&dual).unwrap(), vec![-4, 2, 3]);
    }

    #[test]
    fn small_window_is_reported() {
        let o = WindowOracle::with_window(&[4, 6, 7], -4, 16).unwrap_err();
        assert!(matches!(o, Error::OutOfWindow { .. }));
    }

    #[test]
    fn non_coprime_generators_rejected() {
        assert!(WindowOracle::new(&[4, 6]).is_err());
    }
}
