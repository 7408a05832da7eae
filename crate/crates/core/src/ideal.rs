//! Relative ideals, proper semigroup ideals and their invariants.
//!
//! Every relative ideal `F` of `S` satisfies `F + m ⊆ F`, so it is determined
//! by the least element of each residue class modulo the multiplicity. That
//! profile is the stored representation: sums and differences of ideals are
//! exact operations on profiles, with no truncation window involved.

use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{format_integer_list, NumericalSemigroup};
use crate::tangent_cone::blowup;

/// A relative ideal of `parent`, stored as its per-residue minima modulo the
/// parent's multiplicity.
#[derive(Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    parent: NumericalSemigroup,
    mins: Vec<i64>,
}

impl RelativeIdeal {
    /// The relative ideal `raw + S`. Generators may be any integers.
    pub fn from_generators(parent: &NumericalSemigroup, raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let m = parent.multiplicity();
        let ap = parent.apery();
        let mins = (0..m)
            .map(|r| {
                raw.iter()
                    .map(|&g| g + ap[(r - g).rem_euclid(m) as usize])
                    .min()
                    .expect("non-empty generators")
            })
            .collect();
        Ok(RelativeIdeal {
            parent: parent.clone(),
            mins,
        })
    }

    /// Builds an ideal from a membership predicate that is known to describe a
    /// relative ideal of `parent` whose members all lie at or above `lower`
    /// and which contains every integer from `upper` on.
    pub fn from_membership<F>(parent: &NumericalSemigroup, lower: i64, upper: i64, pred: F) -> Self
    where
        F: Fn(i64) -> bool,
    {
        let m = parent.multiplicity();
        let mut mins = vec![i64::MAX; m as usize];
        let mut missing = m;
        let mut z = lower;
        while missing > 0 {
            let r = z.rem_euclid(m) as usize;
            if mins[r] == i64::MAX && (z >= upper || pred(z)) {
                mins[r] = z;
                missing -= 1;
            }
            z += 1;
        }
        RelativeIdeal {
            parent: parent.clone(),
            mins,
        }
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// Least element of each residue class modulo the parent's multiplicity.
    pub fn residue_minima(&self) -> &[i64] {
        &self.mins
    }

    fn modulus(&self) -> i64 {
        self.parent.multiplicity()
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.mins[z.rem_euclid(self.modulus()) as usize]
    }

    pub fn min(&self) -> i64 {
        *self.mins.iter().min().expect("non-empty profile")
    }

    /// Smallest `c` with `[c, ∞) ⊆ F`.
    pub fn conductor(&self) -> i64 {
        self.mins.iter().max().expect("non-empty profile") - self.modulus() + 1
    }

    /// Members in `[min, upto]`.
    pub fn members_upto(&self, upto: i64) -> Vec<i64> {
        (self.min()..=upto).filter(|&z| self.contains(z)).collect()
    }

    /// Least element congruent to each residue modulo `n`.
    pub fn apery_wrt(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.parent.contains(n) {
            return Err(Error::NotAMember(n));
        }
        let mut out = vec![i64::MAX; n as usize];
        let mut missing = n;
        let mut z = self.min();
        while missing > 0 {
            let r = z.rem_euclid(n) as usize;
            if out[r] == i64::MAX && self.contains(z) {
                out[r] = z;
                missing -= 1;
            }
            z += 1;
        }
        Ok(out)
    }

    /// Unique minimal generating set relative to the parent.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.parent.generators();
        let top = *self.mins.iter().max().expect("non-empty profile");
        (self.min()..=top)
            .filter(|&z| self.contains(z) && gens.iter().all(|&g| !self.contains(z - g)))
            .collect()
    }

    pub fn shift(&self, x: i64) -> Self {
        let m = self.modulus();
        let mut mins = vec![0; m as usize];
        for &v in &self.mins {
            mins[(v + x).rem_euclid(m) as usize] = v + x;
        }
        RelativeIdeal {
            parent: self.parent.clone(),
            mins,
        }
    }

    /// `F + G`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let m = self.modulus() as usize;
        let mins = (0..m)
            .map(|r| {
                (0..m)
                    .map(|a| self.mins[a] + other.mins[(r + m - a) % m])
                    .min()
                    .expect("m >= 1")
            })
            .collect();
        Ok(RelativeIdeal {
            parent: self.parent.clone(),
            mins,
        })
    }

    /// `F + F + ... + F` (`k >= 1` summands).
    pub fn multiple(&self, k: usize) -> Self {
        let mut acc = self.clone();
        for _ in 1..k.max(1) {
            acc = acc.sum(self).expect("same parent");
        }
        acc
    }

    /// `F - G = {z ∈ ℤ : z + G ⊆ F}`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let m = self.modulus() as usize;
        // z + G ⊆ F iff z + (least element of each class of G) ∈ F
        let mins = (0..m)
            .map(|r| {
                (0..m)
                    .map(|b| self.mins[(r + b) % m] - other.mins[b])
                    .max()
                    .expect("m >= 1")
            })
            .collect();
        Ok(RelativeIdeal {
            parent: self.parent.clone(),
            mins,
        })
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.mins.len() == other.mins.len()
            && self.mins.iter().zip(&other.mins).all(|(a, b)| a >= b)
    }

    /// Set equality, ignoring which semigroup each side is an ideal of.
    pub fn same_set(&self, other: &Self) -> bool {
        if self.min() != other.min() {
            return false;
        }
        let top = self.conductor().max(other.conductor());
        (self.min()..=top).all(|z| self.contains(z) == other.contains(z))
    }

    fn same_parent(&self, other: &Self) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// The parent semigroup viewed as an ideal of itself.
    pub fn whole(parent: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            parent: parent.clone(),
            mins: parent.apery().to_vec(),
        }
    }

    /// The maximal ideal `M = S ∖ {0}`.
    pub fn maximal(parent: &NumericalSemigroup) -> Self {
        let mut mins = parent.apery().to_vec();
        mins[0] = parent.multiplicity();
        RelativeIdeal {
            parent: parent.clone(),
            mins,
        }
    }

    /// Whether this set, read as a set of integers, is a semigroup equal to `s`.
    pub fn equals_semigroup(&self, s: &NumericalSemigroup) -> bool {
        self.same_set(&RelativeIdeal::whole(s))
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}+<{}>",
            format_integer_list(&self.minimal_generators()),
            self.parent
        )
    }
}

/// A proper ideal `E = {e_1, ..., e_r} + S` with `0 ∉ E`.
#[derive(Clone)]
pub struct SemigroupIdeal {
    inner: Arc<IdealInner>,
}

struct IdealInner {
    set: RelativeIdeal,
    generators: Vec<i64>,
    // ord_E(min + i), 0 for non-members
    orders: RwLock<Vec<u32>>,
}

impl SemigroupIdeal {
    pub fn from_generators(parent: &NumericalSemigroup, raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroInIdeal);
        }
        if let Some(&bad) = raw.iter().find(|&&g| !parent.contains(g)) {
            return Err(Error::GeneratorNotInS(bad));
        }
        let set = RelativeIdeal::from_generators(parent, raw)?;
        Ok(Self::from_set(set))
    }

    fn from_set(set: RelativeIdeal) -> Self {
        let generators = set.minimal_generators();
        SemigroupIdeal {
            inner: Arc::new(IdealInner {
                set,
                generators,
                orders: RwLock::new(Vec::new()),
            }),
        }
    }

    /// Accepts a relative ideal that lies inside `S ∖ {0}`.
    pub fn from_relative(set: RelativeIdeal) -> Result<Self> {
        if set.contains(0) {
            return Err(Error::ZeroInIdeal);
        }
        let whole = RelativeIdeal::whole(set.parent());
        if !set.is_subset_of(&whole) {
            let bad = set
                .minimal_generators()
                .into_iter()
                .find(|&g| !set.parent().contains(g))
                .unwrap_or_else(|| set.min());
            return Err(Error::GeneratorNotInS(bad));
        }
        Ok(Self::from_set(set))
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        self.inner.set.parent()
    }

    pub fn as_relative(&self) -> &RelativeIdeal {
        &self.inner.set
    }

    /// Minimal generators in increasing order.
    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    pub fn is_principal(&self) -> bool {
        self.inner.generators.len() == 1
    }

    pub fn contains(&self, z: i64) -> bool {
        self.inner.set.contains(z)
    }

    pub fn min(&self) -> i64 {
        self.inner.generators[0]
    }

    /// Apéry set of `E` with respect to `n ∈ S`, indexed by residue.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        let s = self.parent();
        let ap = s.apery_set(n)?;
        Ok((0..n)
            .map(|r| {
                self.generators()
                    .iter()
                    .map(|&e| e + ap[(r - e).rem_euclid(n) as usize])
                    .min()
                    .expect("non-empty generators")
            })
            .collect())
    }

    /// Apéry set with respect to the multiplicity.
    pub fn apery_m(&self) -> Vec<i64> {
        self.inner.set.residue_minima().to_vec()
    }

    /// `ord_E(e) = max{l + 1 : e ∈ lM + E}`, or `None` when `e ∉ E`.
    pub fn order(&self, e: i64) -> Option<u32> {
        if !self.contains(e) {
            return None;
        }
        let idx = (e - self.min()) as usize;
        {
            let table = self.inner.orders.read().expect("order table poisoned");
            if idx < table.len() {
                return Some(table[idx]);
            }
        }
        let mut table = self.inner.orders.write().expect("order table poisoned");
        if idx >= table.len() {
            let s = self.parent();
            let floor = (self.inner.set.conductor() + 4 * s.multiplicity() - self.min()).max(0);
            let target = idx.max(2 * table.len()).max(floor as usize);
            let base = self.min();
            let gens = s.generators();
            for i in table.len()..=target {
                let v = base + i as i64;
                let ord = if !self.contains(v) {
                    0
                } else {
                    gens.iter()
                        .filter(|&&g| v - g >= base && self.contains(v - g))
                        .map(|&g| table[(v - g - base) as usize] + 1)
                        .max()
                        .unwrap_or(1)
                };
                table.push(ord);
            }
        }
        Some(table[idx])
    }
}

impl PartialEq for SemigroupIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.inner.set == other.inner.set
    }
}

impl Eq for SemigroupIdeal {}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}+<{}>",
            format_integer_list(self.generators()),
            self.parent()
        )
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_integer_list(self.generators()))
    }
}

/// The ideal `E' = {e_1 - m, ..., e_r - m} + S'` of the blowup `S'`.
pub fn blowup_ideal(e: &SemigroupIdeal) -> RelativeIdeal {
    let s = e.parent();
    let m = s.multiplicity();
    let shifted: Vec<i64> = e.generators().iter().map(|&g| g - m).collect();
    RelativeIdeal::from_generators(&blowup(s), &shifted).expect("non-empty generators")
}

/// Microinvariant vectors `(a(E), b(E))`, indexed by residue mod `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealMicroinvariants {
    pub apery: Vec<i64>,
    pub blowup_apery: Vec<i64>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

pub fn ab_vectors_ideal(e: &SemigroupIdeal) -> IdealMicroinvariants {
    let m = e.parent().multiplicity();
    let alpha = e.apery_m();
    let alpha_prime = blowup_ideal(e)
        .apery_wrt(m)
        .expect("m lies in the blowup");
    let a = alpha
        .iter()
        .zip(&alpha_prime)
        .map(|(x, y)| ((x - y) / m) as u32)
        .collect();
    let b = alpha
        .iter()
        .map(|&x| e.order(x).expect("Apéry elements are members"))
        .collect();
    IdealMicroinvariants {
        apery: alpha,
        blowup_apery: alpha_prime,
        a,
        b,
    }
}

/// The standard canonical ideal `K(S) = {x ∈ ℕ : f(S) - x ∉ S}`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    RelativeIdeal::from_membership(s, 0, f + 1, |x| !s.contains(f - x))
}

/// `E` is canonical iff `E = min(E) + K(S)`.
pub fn is_canonical(e: &SemigroupIdeal) -> bool {
    canonical_ideal(e.parent()).shift(e.min()) == *e.as_relative()
}

/// `F1 - F2`.
pub fn ideal_difference(f1: &RelativeIdeal, f2: &RelativeIdeal) -> Result<RelativeIdeal> {
    f1.difference(f2)
}
