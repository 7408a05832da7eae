//! Homogeneity of integers, semigroups, ideals and duplications.
//!
//! An integer is homogeneous for `S` when it is not in `S` or all of its
//! factorizations have the same length.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::duplication::{duplicate, sumset_shift, DuplicationInput};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::is_gr_ci;
use crate::verdict::{DupVerdict, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomogeneityContext {
    /// An Apéry element of the semigroup.
    AperyElement,
    /// `element = β - e` for an ideal Apéry element and an ideal generator.
    IdealDifference { beta: i64, generator: i64 },
    /// Different generators give different singleton length sets for `β - e_j`.
    MismatchAcrossGenerators {
        beta: i64,
        per_generator: Vec<GeneratorLengths>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorLengths {
    pub generator: i64,
    pub difference: i64,
    pub lengths: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneityWitness {
    pub element: i64,
    pub lengths: Vec<u32>,
    pub context: HomogeneityContext,
}

fn homogeneous_witness(witness: Option<HomogeneityWitness>) -> Verdict {
    match witness {
        None => Verdict::yes(),
        Some(w) => Verdict::no(Witness::Homogeneity(w)),
    }
}

/// Length sets of the requested integers from one knapsack pass.
fn length_sets_of(s: &NumericalSemigroup, values: &[i64]) -> Vec<BTreeSet<u32>> {
    let top = values.iter().copied().max().unwrap_or(0).max(0);
    let table = s.length_sets_upto(top);
    values
        .iter()
        .map(|&v| {
            if v < 0 {
                BTreeSet::new()
            } else {
                table[v as usize].clone()
            }
        })
        .collect()
}

/// Every Apéry element has a single factorization length.
pub fn is_homogeneous_semigroup(s: &NumericalSemigroup) -> Verdict {
    let ap = s.apery();
    let sets = length_sets_of(s, ap);
    let witness = ap.iter().zip(sets).find(|(_, l)| l.len() > 1).map(|(&w, l)| {
        HomogeneityWitness {
            element: w,
            lengths: l.into_iter().collect(),
            context: HomogeneityContext::AperyElement,
        }
    });
    homogeneous_witness(witness)
}

/// For every Apéry element `β` of `E` and every generator `e_j`, `β - e_j` is
/// homogeneous for `S`, and the non-empty sets `L(β - e_j)` coincide over `j`.
pub fn is_homogeneous_ideal(e: &SemigroupIdeal) -> Verdict {
    let s = e.parent();
    let gens = e.generators();
    let betas = e.apery_m();
    let mut sorted = betas.clone();
    sorted.sort_unstable();
    let diffs: Vec<i64> = sorted
        .iter()
        .flat_map(|&b| gens.iter().map(move |&g| b - g))
        .collect();
    let sets = length_sets_of(s, &diffs);
    for (i, &beta) in sorted.iter().enumerate() {
        let row = &sets[i * gens.len()..(i + 1) * gens.len()];
        for (&g, l) in gens.iter().zip(row) {
            if l.len() > 1 {
                return homogeneous_witness(Some(HomogeneityWitness {
                    element: beta - g,
                    lengths: l.iter().copied().collect(),
                    context: HomogeneityContext::IdealDifference {
                        beta,
                        generator: g,
                    },
                }));
            }
        }
        let present: Vec<GeneratorLengths> = gens
            .iter()
            .zip(row)
            .filter(|(_, l)| !l.is_empty())
            .map(|(&g, l)| GeneratorLengths {
                generator: g,
                difference: beta - g,
                lengths: l.iter().copied().collect(),
            })
            .collect();
        if present.windows(2).any(|w| w[0].lengths != w[1].lengths) {
            let all: BTreeSet<u32> = present.iter().flat_map(|p| p.lengths.clone()).collect();
            return homogeneous_witness(Some(HomogeneityWitness {
                element: beta,
                lengths: all.into_iter().collect(),
                context: HomogeneityContext::MismatchAcrossGenerators {
                    beta,
                    per_generator: present,
                },
            }));
        }
    }
    Verdict::yes()
}

/// First Apéry element of `S` lying in `2E + b`, if any.
pub fn apery_in_double_sumset(input: &DuplicationInput) -> Option<i64> {
    let two = sumset_shift(input.ideal(), 2, input.b());
    let mut ap = input.semigroup().apery().to_vec();
    ap.sort_unstable();
    ap.into_iter().find(|&d| two.contains(d))
}

/// `S ⋈^b E` is homogeneous iff `S` and `E` are homogeneous and no Apéry
/// element of `S` lies in `2E + b`.
pub fn is_homogeneous_duplication(input: &DuplicationInput) -> DupVerdict {
    let hs = is_homogeneous_semigroup(input.semigroup());
    let he = is_homogeneous_ideal(input.ideal());
    let avoid = match apery_in_double_sumset(input) {
        None => Verdict::yes(),
        Some(element) => Verdict::no(Witness::AperyInSumset { element }),
    };
    let mut criterion = Verdict::all([
        ("homogeneous_s", &hs),
        ("homogeneous_e", &he),
        ("apery_avoids_2e_plus_b", &avoid),
    ]);
    // keep the concrete witness when only one part failed
    if !criterion.holds {
        let failed: Vec<&Verdict> = [&hs, &he, &avoid].into_iter().filter(|v| !v.holds).collect();
        if failed.len() == 1 {
            criterion = failed[0].clone();
        }
    }
    DupVerdict {
        criterion,
        direct: is_homogeneous_semigroup(&duplicate(input)),
    }
}

/// If no Apéry element of `S` lies in `2E + b`, then no Apéry element of `E`
/// lies in `3E + b`. Returns whether the implication holds on this instance.
pub fn lemma_3eb_check(input: &DuplicationInput) -> bool {
    if apery_in_double_sumset(input).is_some() {
        return true;
    }
    let three = sumset_shift(input.ideal(), 3, input.b());
    input.ideal().apery_m().iter().all(|&beta| !three.contains(beta))
}

pub const HOMTYPE_NOTE: &str =
    "of homogeneous type only if the input semigroup is of homogeneous type (user-asserted); not homogeneous by construction";

/// A duplication by a principal ideal `{s} + S` with `2s + b ∈ Ap_m(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomtypeCandidate {
    pub s: i64,
    pub b: i64,
    pub t: Vec<i64>,
    pub is_gr_ci_t: bool,
    pub is_homogeneous_t: bool,
    pub note: String,
}

/// Every `(s, b)` with `s ∈ M`, `b ∈ S` odd, `b <= 2f(S) + n_ν` and
/// `2s + b ∈ Ap_m(S)`, with the duplication `S ⋈^b ({s} + S)`.
pub fn homtype_candidates(s: &NumericalSemigroup) -> Vec<HomtypeCandidate> {
    let m = s.multiplicity();
    let b_cap = 2 * s.frobenius() + s.generators().last().copied().unwrap_or(1);
    let mut apery = s.apery().to_vec();
    apery.sort_unstable();
    let mut out = Vec::new();
    for b in (1..=b_cap).step_by(2).filter(|&b| s.contains(b)) {
        for &w in &apery {
            let twice = w - b;
            if twice < 2 * m || twice % 2 != 0 {
                continue;
            }
            let sv = twice / 2;
            if !s.contains(sv) {
                continue;
            }
            let e = SemigroupIdeal::from_generators(s, &[sv]).expect("s is a positive member");
            let input = DuplicationInput::new(e, b).expect("b is odd and in S");
            let t = duplicate(&input);
            out.push(HomtypeCandidate {
                s: sv,
                b,
                is_gr_ci_t: is_gr_ci(&t).holds,
                is_homogeneous_t: is_homogeneous_semigroup(&t).holds,
                t: t.generators().to_vec(),
                note: HOMTYPE_NOTE.to_string(),
            });
        }
    }
    out.sort_by_key(|c| (c.s, c.b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn input(s: &[i64], e: &[i64], b: i64) -> DuplicationInput {
        let s = sg(s);
        DuplicationInput::new(SemigroupIdeal::from_generators(&s, e).unwrap(), b).unwrap()
    }

    #[test]
    fn semigroups() {
        assert!(is_homogeneous_semigroup(&sg(&[4, 5])).holds);
        assert!(is_homogeneous_semigroup(&sg(&[6, 7, 10])).holds);
        assert!(!is_homogeneous_semigroup(&sg(&[8, 10, 15, 21])).holds);
        assert!(is_homogeneous_semigroup(&NumericalSemigroup::naturals()).holds);
    }

    #[test]
    fn ideals() {
        let s = sg(&[4, 5]);
        assert!(is_homogeneous_ideal(&SemigroupIdeal::from_generators(&s, &[5, 8]).unwrap()).holds);
        assert!(is_homogeneous_ideal(&SemigroupIdeal::from_generators(&s, &[5]).unwrap()).holds);

        let s = sg(&[6, 7, 9, 11]);
        let e = SemigroupIdeal::from_generators(&s, &[7, 11, 12]).unwrap();
        let v = is_homogeneous_ideal(&e);
        assert!(!v.holds);
        let Some(Witness::Homogeneity(w)) = v.witness else {
            panic!("expected a homogeneity witness");
        };
        assert_eq!(w.element, 21);
        let HomogeneityContext::MismatchAcrossGenerators { beta, per_generator } = w.context else {
            panic!("expected a cross-generator mismatch");
        };
        assert_eq!(beta, 21);
        let by_gen: Vec<(i64, i64, Vec<u32>)> = per_generator
            .into_iter()
            .map(|p| (p.generator, p.difference, p.lengths))
            .collect();
        assert_eq!(by_gen, vec![(7, 14, vec![2]), (12, 9, vec![1])]);
    }

    #[test]
    fn duplications() {
        let i = input(&[4, 5], &[5, 8], 5);
        assert_eq!(duplicate(&i).generators(), &[8, 10, 15, 21]);
        let v = is_homogeneous_duplication(&i);
        assert!(!v.criterion.holds && v.agree());
        assert_eq!(
            v.criterion.witness,
            Some(Witness::AperyInSumset { element: 15 })
        );

        let i = input(&[4, 5], &[5, 8], 9);
        assert_eq!(duplicate(&i).generators(), &[8, 10, 19, 25]);
        let v = is_homogeneous_duplication(&i);
        assert!(v.criterion.holds && v.agree());

        // <8,10,23,29> and <8,10,23> come from b = 13
        let i = input(&[4, 5], &[5, 8], 13);
        assert_eq!(duplicate(&i).generators(), &[8, 10, 23, 29]);
        assert!(is_homogeneous_duplication(&i).direct.holds);
        let i = input(&[4, 5], &[5], 13);
        assert_eq!(duplicate(&i).generators(), &[8, 10, 23]);
        let v = is_homogeneous_duplication(&i);
        assert!(v.criterion.holds && v.direct.holds);
        let i = input(&[4, 5], &[5], 9);
        assert!(is_homogeneous_duplication(&i).direct.holds);

        let i = input(&[4, 5], &[5], 5);
        let v = is_homogeneous_duplication(&i);
        assert!(!v.criterion.holds && !v.direct.holds);
    }

    #[test]
    fn lemma_3eb() {
        assert!(lemma_3eb_check(&input(&[4, 5], &[5, 8], 9)));
        assert!(lemma_3eb_check(&input(&[4, 5], &[5, 8], 5)));
    }

    #[test]
    fn candidates() {
        let c = homtype_candidates(&sg(&[6, 7, 10]));
        let hit = c.iter().find(|c| c.s == 7 && c.b == 7).expect("(7, 7) candidate");
        assert_eq!(hit.t, vec![12, 14, 20, 21]);
        assert!(!hit.is_gr_ci_t);
        assert!(!hit.is_homogeneous_t);
        assert!(homtype_candidates(&sg(&[2, 3])).is_empty());
        assert!(homtype_candidates(&NumericalSemigroup::naturals()).is_empty());
        for c in homtype_candidates(&sg(&[4, 5])) {
            assert!(!c.is_homogeneous_t, "{c:?}");
        }
    }
}
