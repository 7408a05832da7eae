//! Exhaustive enumeration of semigroups, ideals and odd shifts within bounds.
//!
//! Semigroups come from the genus tree: the children of `S` are `S ∖ {g}` for
//! every minimal generator `g > f(S)`, which visits each numerical semigroup
//! exactly once. Ideals are enumerated through their minimal generating
//! antichains. A minimal generator `e_j` of an ideal satisfies
//! `e_j <= min(E) + f(S)`, since otherwise `e_j - min(E)` would lie in `S`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ideal::{canonical_ideal, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;

/// An upper bound either given outright or as `f(S) + k·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Absolute(i64),
    FrobeniusPlusMultiples(i64),
}

impl Bound {
    pub fn resolve(&self, s: &NumericalSemigroup) -> i64 {
        match *self {
            Bound::Absolute(v) => v,
            Bound::FrobeniusPlusMultiples(k) => s.frobenius() + k * s.multiplicity(),
        }
    }
}

/// Bounds of an enumerated corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub max_genus: usize,
    pub max_multiplicity: Option<i64>,
    /// Largest number of minimal generators of an enumerated ideal.
    pub ideal_gen_budget: usize,
    /// Upper bound on `min(E)`.
    pub ideal_min_bound: Bound,
    /// Upper bound on `b`.
    pub b_bound: Bound,
    /// Also include every canonical ideal `x + K(S) ⊆ M` with `x` within
    /// `ideal_min_bound`, whatever its number of generators.
    pub include_canonical_ideals: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_genus: 8,
            max_multiplicity: None,
            ideal_gen_budget: 2,
            ideal_min_bound: Bound::FrobeniusPlusMultiples(1),
            b_bound: Bound::FrobeniusPlusMultiples(2),
            include_canonical_ideals: true,
        }
    }
}

impl CorpusSpec {
    pub fn with_max_genus(max_genus: usize) -> Self {
        CorpusSpec {
            max_genus,
            ..CorpusSpec::default()
        }
    }
}

/// Key that orders semigroups by genus, then by generator list.
pub fn canonical_key(s: &NumericalSemigroup) -> (usize, Vec<i64>) {
    (s.genus(), s.generators().to_vec())
}

/// Children of `s` in the genus tree.
pub fn tree_children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let f = s.frobenius();
    let gens = s.generators();
    gens.iter()
        .filter(|&&g| g > f)
        .map(|&g| {
            let mut cands: Vec<i64> = gens.iter().copied().filter(|&n| n != g).collect();
            cands.extend(gens.iter().map(|&n| g + n));
            cands.push(3 * g);
            NumericalSemigroup::from_generators(&cands).expect("removing one element keeps gcd 1")
        })
        .collect()
}

/// Every numerical semigroup of genus at most `max_genus` (including ℕ) and
/// multiplicity at most `max_multiplicity`, sorted by [`canonical_key`].
pub fn semigroups(max_genus: usize, max_multiplicity: Option<i64>) -> Vec<NumericalSemigroup> {
    let fits = |s: &NumericalSemigroup| max_multiplicity.is_none_or(|m| s.multiplicity() <= m);
    let root = NumericalSemigroup::naturals();
    let mut out = Vec::new();
    let mut level = vec![root];
    for genus in 0..=max_genus {
        out.extend(level.iter().filter(|s| fits(s)).cloned());
        if genus == max_genus {
            break;
        }
        // multiplicity never decreases down the tree
        level = level
            .iter()
            .flat_map(tree_children)
            .filter(|c| fits(c))
            .collect();
    }
    out.sort_by_key(canonical_key);
    out
}

/// Semigroups selected by a corpus spec.
pub fn corpus_semigroups(spec: &CorpusSpec) -> Vec<NumericalSemigroup> {
    semigroups(spec.max_genus, spec.max_multiplicity)
}

/// Proper ideals of `s` whose minimal generators form an antichain of at most
/// `spec.ideal_gen_budget` elements with `min(E)` within the bound, plus the
/// canonical ideals if requested. Sorted by generator list.
pub fn ideals(s: &NumericalSemigroup, spec: &CorpusSpec) -> Vec<SemigroupIdeal> {
    let m = s.multiplicity();
    let f = s.frobenius();
    let min_bound = spec.ideal_min_bound.resolve(s);
    let mut lists: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<i64> = Vec::new();
    for first in (m..=min_bound).filter(|&x| s.contains(x)) {
        stack.push(first);
        extend_antichain(s, first + f, spec.ideal_gen_budget, &mut stack, &mut lists);
        stack.pop();
    }
    let mut out: Vec<SemigroupIdeal> = lists
        .into_iter()
        .map(|g| SemigroupIdeal::from_generators(s, &g).expect("antichain of members"))
        .collect();
    if spec.include_canonical_ideals {
        let k = canonical_ideal(s);
        for x in m..=min_bound {
            let shifted = k.shift(x);
            if let Ok(e) = SemigroupIdeal::from_relative(shifted) {
                if !out.iter().any(|o| o == &e) {
                    out.push(e);
                }
            }
        }
    }
    out.sort_by(|a, b| a.generators().cmp(b.generators()));
    out
}

fn extend_antichain(
    s: &NumericalSemigroup,
    top: i64,
    budget: usize,
    stack: &mut Vec<i64>,
    out: &mut BTreeSet<Vec<i64>>,
) {
    out.insert(stack.clone());
    if stack.len() >= budget {
        return;
    }
    let last = *stack.last().expect("non-empty");
    for next in (last + 1..=top).filter(|&x| s.contains(x)) {
        if stack.iter().all(|&e| !s.contains(next - e)) {
            stack.push(next);
            extend_antichain(s, top, budget, stack, out);
            stack.pop();
        }
    }
}

/// Odd members of `s` up to `spec.b_bound`, increasing.
pub fn odd_shifts(s: &NumericalSemigroup, spec: &CorpusSpec) -> Vec<i64> {
    let top = spec.b_bound.resolve(s);
    (1..=top).step_by(2).filter(|&b| s.contains(b)).collect()
}
