//! Arithmetic of a single numerical semigroup.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::window;

const UNREACHABLE: i64 = i64::MAX;

/// Least element of each residue class modulo `modulus` in the monoid
/// generated by `generators`, by shortest paths on the residue graph.
/// Unreachable classes hold `i64::MAX`.
pub(crate) fn residue_minima(generators: &[i64], modulus: i64) -> Vec<i64> {
    let n = modulus as usize;
    let mut dist = vec![UNREACHABLE; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let next = (r + (g % modulus) as usize) % n;
            let cand = d + g;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}

/// A numerical semigroup `S = <n_1, ..., n_ν>` held by its minimal generators.
///
/// Membership is answered from the Apéry set with respect to the
/// multiplicity: `z ∈ S` iff `z >= ω_{z mod m}`. The order function is a
/// dynamic-programming table that is filled lazily behind a lock, so a
/// semigroup can be shared freely between threads. Cloning is cheap.
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

struct Inner {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    genus: usize,
    // ord(z) for 0 <= z < len, -1 for non-members
    orders: RwLock<Vec<i32>>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal system.
    pub fn from_generators(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&neg) = raw.iter().find(|&&g| g < 0) {
            return Err(Error::NegativeGenerator(neg));
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = raw.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NonCoprime(g));
        }

        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let m = sorted[0];
        let mut kept = vec![m];
        let mut apery = residue_minima(&kept, m);
        for &g in &sorted[1..] {
            let r = (g % m) as usize;
            if apery[r] != UNREACHABLE && g >= apery[r] {
                continue;
            }
            kept.push(g);
            apery = residue_minima(&kept, m);
        }
        Ok(Self::from_minimal(kept, apery))
    }

    fn from_minimal(generators: Vec<i64>, apery: Vec<i64>) -> Self {
        let m = generators[0];
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        let genus = apery.iter().map(|&w| (w / m) as usize).sum();
        NumericalSemigroup {
            inner: Arc::new(Inner {
                generators,
                apery,
                frobenius,
                genus,
                orders: RwLock::new(Vec::new()),
            }),
        }
    }

    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        Self::from_minimal(vec![1], vec![0])
    }

    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.inner.generators[0]
    }

    /// Largest integer not in `S`; `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.inner.frobenius + 1
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.inner.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.multiplicity() == 1
    }

    /// End of the default order window, `conductor + k·m`.
    pub fn window_end(&self) -> i64 {
        self.conductor() + window::multiplier() * self.multiplicity()
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        let m = self.multiplicity();
        z >= self.inner.apery[(z % m) as usize]
    }

    /// Sorted gaps `ℕ ∖ S`.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius()).filter(|&z| !self.contains(z)).collect()
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[i64] {
        &self.inner.apery
    }

    /// Apéry set with respect to `n ∈ S`, indexed by residue mod `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n == self.multiplicity() {
            return Ok(self.inner.apery.clone());
        }
        Ok(residue_minima(self.generators(), n))
    }

    /// Maximal factorization length of `s`, or `None` when `s ∉ S`.
    pub fn order(&self, s: i64) -> Option<u32> {
        if !self.contains(s) {
            return None;
        }
        let idx = s as usize;
        {
            let table = self.inner.orders.read().expect("order table poisoned");
            if idx < table.len() {
                return Some(table[idx] as u32);
            }
        }
        let mut table = self.inner.orders.write().expect("order table poisoned");
        if idx >= table.len() {
            let target = idx
                .max(2 * table.len())
                .max(self.window_end().max(0) as usize);
            self.extend_orders(&mut table, target);
        }
        Some(table[idx] as u32)
    }

    fn extend_orders(&self, table: &mut Vec<i32>, upto: usize) {
        let gens = self.generators();
        for z in table.len()..=upto {
            let v = z as i64;
            let ord = if v == 0 {
                0
            } else if !self.contains(v) {
                -1
            } else {
                gens.iter()
                    .take_while(|&&g| g <= v)
                    .map(|&g| table[(v - g) as usize])
                    .filter(|&o| o >= 0)
                    .max()
                    .map_or(-1, |o| o + 1)
            };
            table.push(ord);
        }
    }

    /// Every factorization of `z` over the minimal generators.
    pub fn factorizations(&self, z: i64) -> Vec<Factorization> {
        let mut out = Vec::new();
        if !self.contains(z) {
            return out;
        }
        let gens = self.generators();
        let mut coeffs = vec![0u32; gens.len()];
        self.enumerate(gens.len() - 1, z, &mut coeffs, &mut out);
        out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out
    }

    fn enumerate(&self, idx: usize, rest: i64, coeffs: &mut [u32], out: &mut Vec<Factorization>) {
        let gens = self.generators();
        if idx == 0 {
            if rest % gens[0] == 0 {
                coeffs[0] = (rest / gens[0]) as u32;
                out.push(Factorization::new(coeffs.to_vec(), gens));
                coeffs[0] = 0;
            }
            return;
        }
        let g = gens[idx];
        let mut c = 0;
        while c * g <= rest {
            if self.contains(rest - c * g) {
                coeffs[idx] = c as u32;
                self.enumerate(idx - 1, rest - c * g, coeffs, out);
            }
            c += 1;
        }
        coeffs[idx] = 0;
    }

    /// Set of factorization lengths of `z`; empty when `z ∉ S`.
    pub fn length_set(&self, z: i64) -> BTreeSet<u32> {
        if !self.contains(z) {
            return BTreeSet::new();
        }
        self.length_sets_upto(z).swap_remove(z as usize)
    }

    /// Length sets of every integer in `[0, upto]`, by an unbounded knapsack
    /// over the generators.
    pub fn length_sets_upto(&self, upto: i64) -> Vec<BTreeSet<u32>> {
        let n = upto.max(0) as usize + 1;
        let mut sets = vec![BTreeSet::new(); n];
        sets[0].insert(0);
        for &g in self.generators() {
            let g = g as usize;
            for v in g..n {
                if sets[v - g].is_empty() {
                    continue;
                }
                let shifted: Vec<u32> = sets[v - g].iter().map(|l| l + 1).collect();
                sets[v].extend(shifted);
            }
        }
        sets
    }

    /// Parses `"6,7,10"`.
    pub fn parse(input: &str) -> Result<Self> {
        Self::from_generators(&parse_integer_list(input)?)
    }
}

/// Parses a comma-separated list of decimal integers.
pub fn parse_integer_list(input: &str) -> Result<Vec<i64>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: format!("{:?}: {e}", tok.trim()),
            })
        })
        .collect()
}

/// Renders integers as `"6,7,10"`.
pub fn format_integer_list(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_integer_list(self.generators()))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators() == other.generators()
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators().hash(state);
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let gens = Vec::<i64>::deserialize(deserializer)?;
        Self::from_generators(&gens).map_err(serde::de::Error::custom)
    }
}

/// A coefficient vector over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factorization {
    pub coeffs: Vec<u32>,
    pub value: i64,
    pub length: u32,
}

impl Factorization {
    pub fn new(coeffs: Vec<u32>, generators: &[i64]) -> Self {
        let value = coeffs
            .iter()
            .zip(generators)
            .map(|(&c, &g)| c as i64 * g)
            .sum();
        let length = coeffs.iter().sum();
        Factorization {
            coeffs,
            value,
            length,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]).unwrap_err(),
            Error::EmptyGenerators
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]).unwrap_err(),
            Error::ZeroGenerator
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(),
            Error::NonCoprime(2)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[-3, 4]).unwrap_err(),
            Error::NegativeGenerator(-3)
        );
    }

    #[test]
    fn minimal_system() {
        assert_eq!(sg(&[4, 5, 8, 9]).generators(), &[4, 5]);
        assert_eq!(sg(&[10, 7, 6, 6]).generators(), &[6, 7, 10]);
        assert_eq!(sg(&[1, 5, 7]).generators(), &[1]);
        assert_eq!(sg(&[3, 4, 5, 6, 7, 8]).generators(), &[3, 4, 5]);
    }

    #[test]
    fn naturals() {
        let n = sg(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert!(n.gaps().is_empty());
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.order(5), Some(5));
    }

    #[test]
    fn membership_and_gaps() {
        let s = sg(&[6, 7, 10]);
        assert_eq!(s.frobenius(), 15);
        assert_eq!(s.multiplicity(), 6);
        assert!(!s.contains(15));
        assert!(s.contains(0));
        assert!(!s.contains(-6));
        assert!(sg(&[5, 14, 17]).contains(28));
        assert_eq!(sg(&[2, 3]).gaps(), vec![1]);
        assert_eq!(sg(&[3, 4]).gaps(), vec![1, 2, 5]);
        assert_eq!(sg(&[4, 5]).gaps(), vec![1, 2, 3, 6, 7, 11]);
        assert_eq!(sg(&[4, 5]).genus(), 6);
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[5, 14, 17]).apery_set(5).unwrap(), vec![0, 31, 17, 28, 14]);
        assert_eq!(sg(&[6, 7, 10]).apery_set(6).unwrap(), vec![0, 7, 14, 21, 10, 17]);
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(sg(&[3, 4]).apery_set(4).unwrap(), vec![0, 9, 6, 3]);
        assert_eq!(sg(&[3, 4]).apery_set(5), Err(Error::NotAMember(5)));
        assert_eq!(sg(&[3, 4]).apery_set(0), Err(Error::NotAMember(0)));
    }

    #[test]
    fn orders() {
        let s = sg(&[6, 7, 10]);
        assert_eq!(s.order(21), Some(3));
        assert_eq!(s.order(0), Some(0));
        assert_eq!(s.order(15), None);
        let t = sg(&[6, 7, 9, 11]);
        assert_eq!(t.order(14), Some(2));
        assert_eq!(t.order(9), Some(1));
        // far beyond the initial window
        assert_eq!(sg(&[3, 4]).order(3000), Some(1000));
    }

    #[test]
    fn factorization_sets() {
        let s = sg(&[4, 5]);
        let f: Vec<Vec<u32>> = s.factorizations(20).into_iter().map(|f| f.coeffs).collect();
        assert_eq!(f, vec![vec![0, 4], vec![5, 0]]);
        assert_eq!(s.length_set(20), BTreeSet::from([4, 5]));
        assert_eq!(s.length_set(0), BTreeSet::from([0]));
        assert!(s.length_set(11).is_empty());
        assert!(s.factorizations(-4).is_empty());

        let t = sg(&[6, 7, 10]);
        let f = t.factorizations(21);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].coeffs, vec![0, 3, 0]);
        assert_eq!(f[0].length, 3);
        assert_eq!(t.length_set(21), BTreeSet::from([3]));
        assert_eq!(t.factorizations(0)[0].coeffs, vec![0, 0, 0]);
    }

    #[test]
    fn parse_and_render() {
        let s: NumericalSemigroup = " 6, 7,10".parse().unwrap();
        assert_eq!(s.to_string(), "6,7,10");
        assert!(matches!(
            NumericalSemigroup::parse("6,x"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(NumericalSemigroup::parse(""), Err(Error::EmptyGenerators));
    }
}
