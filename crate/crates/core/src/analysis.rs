//! Precomputed predicate bundles.
//!
//! A corpus sweep evaluates many `(E, b)` against one `S` and many `b`
//! against one `E`. [`SemigroupFacts`] and [`IdealFacts`] hold everything that
//! depends on `S` or `E` alone, and [`DuplicationAnalysis`] combines them with
//! the facts of `T = S ⋈^b E` into every two-sided duplication theorem.

use std::collections::{BTreeMap, BTreeSet};

use crate::duplication::{duplicate, DuplicationInput};
use crate::homogeneity::{apery_in_double_sumset, is_homogeneous_ideal, is_homogeneous_semigroup};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::{
    ab_vectors, beta_gamma_profile, canonical_verdict, ideal_profile, is_symmetric, mpure,
    principal_verdict, AperyProfile, MPurity, RectangularityProfile,
};
use crate::verdict::{DupVerdict, PropertyReport, Verdict, Witness};

/// Every semigroup-level predicate, computed once.
#[derive(Debug, Clone)]
pub struct SemigroupFacts {
    pub semigroup: NumericalSemigroup,
    pub profile: AperyProfile,
    pub gr_cm: Verdict,
    pub mpurity: MPurity,
    pub mpure: Verdict,
    pub symmetric: Verdict,
    pub rectangularity: RectangularityProfile,
    pub gamma_rect: Verdict,
    pub beta_rect: Verdict,
    pub homogeneous: Verdict,
}

impl SemigroupFacts {
    pub fn of(s: &NumericalSemigroup) -> Self {
        let profile = ab_vectors(s);
        let gr_cm = match first_mismatch(&profile) {
            None => Verdict::yes(),
            Some(i) => Verdict::no(Witness::ResidueMismatch {
                residue: i,
                a: profile.a_vector[i],
                b: profile.b_vector[i],
            }),
        };
        let mpurity = mpure(s);
        let mpure = mpurity.verdict();
        let rectangularity = beta_gamma_profile(s);
        let apery: BTreeSet<i64> = s.apery().iter().copied().collect();
        SemigroupFacts {
            semigroup: s.clone(),
            gamma_rect: rectangularity.gamma_verdict(&apery),
            beta_rect: rectangularity.beta_verdict(&apery),
            symmetric: is_symmetric(s),
            homogeneous: is_homogeneous_semigroup(s),
            profile,
            gr_cm,
            mpurity,
            mpure,
            rectangularity,
        }
    }

    pub fn gr_ci(&self) -> Verdict {
        Verdict::all([("gr_cm", &self.gr_cm), ("gamma_rect", &self.gamma_rect)])
    }

    pub fn gr_gorenstein(&self) -> Verdict {
        Verdict::all([
            ("gr_cm", &self.gr_cm),
            ("mpure", &self.mpure),
            ("symmetric", &self.symmetric),
        ])
    }

    pub fn expected_canonical_module(&self) -> Verdict {
        Verdict::all([("gr_cm", &self.gr_cm), ("mpure", &self.mpure)])
    }

    /// Named verdicts, as shown in reports.
    pub fn properties(&self) -> PropertyReport {
        let mut r = PropertyReport::default();
        r.record("gr_cm", &self.gr_cm);
        r.record("mpure", &self.mpure);
        r.record("symmetric", &self.symmetric);
        r.record("gamma_rect", &self.gamma_rect);
        r.record("beta_rect", &self.beta_rect);
        r.record("gr_ci", &self.gr_ci());
        r.record("gr_gorenstein", &self.gr_gorenstein());
        r.record("expected_canonical_module", &self.expected_canonical_module());
        r.record("homogeneous", &self.homogeneous);
        r
    }
}

fn first_mismatch(p: &AperyProfile) -> Option<usize> {
    p.a_vector.iter().zip(&p.b_vector).position(|(a, b)| a != b)
}

/// Every ideal-level predicate, computed once.
#[derive(Debug, Clone)]
pub struct IdealFacts {
    pub ideal: SemigroupIdeal,
    pub profile: AperyProfile,
    pub gr_cm: Verdict,
    pub canonical: Verdict,
    pub principal: Verdict,
    pub homogeneous: Verdict,
}

impl IdealFacts {
    pub fn of(e: &SemigroupIdeal) -> Self {
        let profile = ideal_profile(e);
        let gr_cm = match first_mismatch(&profile) {
            None => Verdict::yes(),
            Some(i) => Verdict::no(Witness::ResidueMismatch {
                residue: i,
                a: profile.a_vector[i],
                b: profile.b_vector[i],
            }),
        };
        IdealFacts {
            ideal: e.clone(),
            canonical: canonical_verdict(e),
            principal: principal_verdict(e),
            homogeneous: is_homogeneous_ideal(e),
            profile,
            gr_cm,
        }
    }

    pub fn properties(&self) -> PropertyReport {
        let mut r = PropertyReport::default();
        r.record("gr_cm", &self.gr_cm);
        r.record("canonical", &self.canonical);
        r.record("principal", &self.principal);
        r.record("homogeneous", &self.homogeneous);
        r
    }
}

/// Names of the duplication theorems, in report order.
pub const THEOREMS: [&str; 6] = [
    "beta_rect",
    "ci",
    "cm",
    "gamma_rect",
    "gorenstein",
    "homogeneous",
];

/// `T = S ⋈^b E` with each duplication theorem evaluated from both sides.
#[derive(Debug, Clone)]
pub struct DuplicationAnalysis {
    pub t: NumericalSemigroup,
    pub t_facts: SemigroupFacts,
    pub theorems: BTreeMap<&'static str, DupVerdict>,
}

impl DuplicationAnalysis {
    pub fn new(input: &DuplicationInput) -> Self {
        let sf = SemigroupFacts::of(input.semigroup());
        let ef = IdealFacts::of(input.ideal());
        Self::with_facts(input, &sf, &ef)
    }

    /// Same as [`DuplicationAnalysis::new`] with the `S` and `E` sides supplied.
    pub fn with_facts(input: &DuplicationInput, sf: &SemigroupFacts, ef: &IdealFacts) -> Self {
        let t = duplicate(input);
        let tf = SemigroupFacts::of(&t);
        let avoid = match apery_in_double_sumset(input) {
            None => Verdict::yes(),
            Some(element) => Verdict::no(Witness::AperyInSumset { element }),
        };
        let mut theorems = BTreeMap::new();
        theorems.insert(
            "cm",
            DupVerdict {
                criterion: Verdict::all([("gr_cm_s", &sf.gr_cm), ("gr_cm_e", &ef.gr_cm)]),
                direct: tf.gr_cm.clone(),
            },
        );
        theorems.insert(
            "gorenstein",
            DupVerdict {
                criterion: Verdict::all([
                    ("mpure_s", &sf.mpure),
                    ("canonical_e", &ef.canonical),
                    ("gr_cm_s", &sf.gr_cm),
                ]),
                direct: tf.gr_gorenstein(),
            },
        );
        theorems.insert(
            "ci",
            DupVerdict {
                criterion: Verdict::all([("gr_ci_s", &sf.gr_ci()), ("principal_e", &ef.principal)]),
                direct: tf.gr_ci(),
            },
        );
        theorems.insert(
            "gamma_rect",
            DupVerdict {
                criterion: Verdict::all([
                    ("gamma_rect_s", &sf.gamma_rect),
                    ("principal_e", &ef.principal),
                ]),
                direct: tf.gamma_rect.clone(),
            },
        );
        theorems.insert(
            "beta_rect",
            DupVerdict {
                criterion: Verdict::all([
                    ("beta_rect_s", &sf.beta_rect),
                    ("principal_e", &ef.principal),
                ]),
                direct: tf.beta_rect.clone(),
            },
        );
        let parts = [&sf.homogeneous, &ef.homogeneous, &avoid];
        let failed: Vec<&Verdict> = parts.iter().copied().filter(|v| !v.holds).collect();
        let criterion = if failed.len() == 1 {
            failed[0].clone()
        } else {
            Verdict::all([
                ("homogeneous_s", parts[0]),
                ("homogeneous_e", parts[1]),
                ("apery_avoids_2e_plus_b", parts[2]),
            ])
        };
        theorems.insert(
            "homogeneous",
            DupVerdict {
                criterion,
                direct: tf.homogeneous.clone(),
            },
        );
        DuplicationAnalysis {
            t,
            t_facts: tf,
            theorems,
        }
    }

    pub fn theorem(&self, name: &str) -> &DupVerdict {
        &self.theorems[name]
    }

    pub fn all_agree(&self) -> bool {
        self.theorems.values().all(DupVerdict::agree)
    }

    /// Theorems whose two sides disagree.
    pub fn disagreements(&self) -> Vec<&'static str> {
        self.theorems
            .iter()
            .filter(|(_, v)| !v.agree())
            .map(|(&k, _)| k)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::is_homogeneous_duplication;
    use crate::tangent_cone::{is_dup_ci, is_dup_cm, is_dup_gorenstein};

    fn input(s: &[i64], e: &[i64], b: i64) -> DuplicationInput {
        let s = NumericalSemigroup::from_generators(s).unwrap();
        let e = SemigroupIdeal::from_generators(&s, e).unwrap();
        DuplicationInput::new(e, b).unwrap()
    }

    #[test]
    fn matches_standalone_predicates() {
        for i in [
            input(&[3, 4], &[3, 8], 3),
            input(&[5, 14, 17], &[14, 20, 22], 17),
            input(&[10, 11, 12, 13], &[10, 11, 12], 11),
            input(&[5, 6, 7], &[5, 13], 5),
            input(&[4, 5], &[5, 8], 5),
            input(&[4, 5], &[5], 9),
            input(&[6, 7, 10], &[7], 7),
        ] {
            let a = DuplicationAnalysis::new(&i);
            assert_eq!(a.theorem("cm"), &is_dup_cm(&i));
            assert_eq!(a.theorem("gorenstein"), &is_dup_gorenstein(&i));
            assert_eq!(a.theorem("ci"), &is_dup_ci(&i));
            assert_eq!(a.theorem("homogeneous"), &is_homogeneous_duplication(&i));
            assert!(a.all_agree(), "{:?}", a.disagreements());
        }
    }

    #[test]
    fn property_names() {
        let s = NumericalSemigroup::from_generators(&[10, 11, 12, 13]).unwrap();
        let p = SemigroupFacts::of(&s).properties();
        assert_eq!(p.get("mpure"), Some(true));
        assert_eq!(p.get("symmetric"), Some(false));
        assert_eq!(p.get("gr_cm"), Some(true));
        assert!(p.witnesses.contains_key("symmetric"));
        assert!(!p.witnesses.contains_key("mpure"));
    }
}
