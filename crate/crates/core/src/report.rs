//! Serializable reports for single instances.
//!
//! Every map is a `BTreeMap` and every list has a fixed order, so the same
//! instance always serializes to the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{DuplicationAnalysis, IdealFacts, SemigroupFacts};
use crate::duplication::DuplicationInput;
use crate::homogeneity::{homtype_candidates, lemma_3eb_check, HomtypeCandidate};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::{AperyProfile, RectangularityProfile};
use crate::verdict::{PropertyReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub semigroup: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
}

impl SemigroupSummary {
    pub fn of(s: &NumericalSemigroup) -> Self {
        SemigroupSummary {
            generators: s.generators().to_vec(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            genus: s.genus(),
            gaps: s.gaps(),
        }
    }
}

/// One duplication theorem, evaluated from `(S, E, b)` and directly on `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub criterion: Verdict,
    pub direct: Verdict,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicationSection {
    pub summary: SemigroupSummary,
    /// `Ap_{2m}(T)` indexed by residue.
    pub apery_2m: Vec<i64>,
    pub theorems: BTreeMap<String, TheoremCheck>,
    pub all_agree: bool,
    pub lemma_3e_plus_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub instance: Instance,
    pub semigroup: SemigroupSummary,
    /// Keyed by `semigroup`, `ideal` and `duplication`.
    pub profiles: BTreeMap<String, AperyProfile>,
    pub properties: BTreeMap<String, PropertyReport>,
    pub rectangularity: BTreeMap<String, RectangularityProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duplication: Option<DuplicationSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homtype_candidates: Option<Vec<HomtypeCandidate>>,
}

impl ReportDocument {
    /// Whether the two sides of every duplication theorem agree (vacuously
    /// true without a duplication).
    pub fn all_agree(&self) -> bool {
        self.duplication.as_ref().is_none_or(|d| d.all_agree)
    }

    /// Whether every recorded verdict holds.
    pub fn all_hold(&self) -> bool {
        self.properties
            .values()
            .all(|p| p.verdicts.values().all(|&v| v))
            && self
                .duplication
                .as_ref()
                .is_none_or(|d| d.theorems.values().all(|t| t.direct.holds))
    }
}

fn base_document(sf: &SemigroupFacts, ideal: Option<&IdealFacts>, b: Option<i64>) -> ReportDocument {
    let s = &sf.semigroup;
    let mut doc = ReportDocument {
        instance: Instance {
            semigroup: s.generators().to_vec(),
            ideal: ideal.map(|f| f.ideal.generators().to_vec()),
            b,
        },
        semigroup: SemigroupSummary::of(s),
        profiles: BTreeMap::new(),
        properties: BTreeMap::new(),
        rectangularity: BTreeMap::new(),
        duplication: None,
        homtype_candidates: None,
    };
    doc.profiles.insert("semigroup".into(), sf.profile.clone());
    doc.properties.insert("semigroup".into(), sf.properties());
    doc.rectangularity
        .insert("semigroup".into(), sf.rectangularity.clone());
    if let Some(ef) = ideal {
        doc.profiles.insert("ideal".into(), ef.profile.clone());
        doc.properties.insert("ideal".into(), ef.properties());
    }
    doc
}

pub(crate) fn base_report(sf: &SemigroupFacts) -> ReportDocument {
    base_document(sf, None, None)
}

/// Invariants and predicates of `s`, and of `e` when given.
pub fn info_report(s: &NumericalSemigroup, e: Option<&SemigroupIdeal>) -> ReportDocument {
    let sf = SemigroupFacts::of(s);
    let ef = e.map(IdealFacts::of);
    base_document(&sf, ef.as_ref(), None)
}

/// Everything in [`info_report`] for `S` and `E`, plus `T = S ⋈^b E` and the
/// two-sided evaluation of each duplication theorem.
pub fn dup_report(input: &DuplicationInput) -> ReportDocument {
    let sf = SemigroupFacts::of(input.semigroup());
    let ef = IdealFacts::of(input.ideal());
    dup_report_with(input, &sf, &ef)
}

pub(crate) fn dup_report_with(
    input: &DuplicationInput,
    sf: &SemigroupFacts,
    ef: &IdealFacts,
) -> ReportDocument {
    let analysis = DuplicationAnalysis::with_facts(input, sf, ef);
    let mut doc = base_document(sf, Some(ef), Some(input.b()));
    let t = &analysis.t;
    doc.profiles
        .insert("duplication".into(), analysis.t_facts.profile.clone());
    doc.properties
        .insert("duplication".into(), analysis.t_facts.properties());
    doc.rectangularity.insert(
        "duplication".into(),
        analysis.t_facts.rectangularity.clone(),
    );
    let theorems = analysis
        .theorems
        .iter()
        .map(|(&name, v)| {
            (
                name.to_string(),
                TheoremCheck {
                    criterion: v.criterion.clone(),
                    direct: v.direct.clone(),
                    agree: v.agree(),
                },
            )
        })
        .collect();
    doc.duplication = Some(DuplicationSection {
        summary: SemigroupSummary::of(t),
        apery_2m: t
            .apery_set(2 * input.semigroup().multiplicity())
            .expect("2m lies in T"),
        theorems,
        all_agree: analysis.all_agree(),
        lemma_3e_plus_b: lemma_3eb_check(input),
    });
    doc
}

/// [`info_report`] with the homogeneous-type candidates attached.
pub fn homtype_report(s: &NumericalSemigroup) -> ReportDocument {
    let mut doc = info_report(s, None);
    doc.homtype_candidates = Some(homtype_candidates(s));
    doc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_fields() {
        let s = NumericalSemigroup::from_generators(&[10, 11, 12, 13]).unwrap();
        let doc = info_report(&s, None);
        let p = &doc.properties["semigroup"];
        assert_eq!(p.get("mpure"), Some(true));
        assert_eq!(p.get("symmetric"), Some(false));
        assert_eq!(p.get("gr_cm"), Some(true));
        assert_eq!(doc.semigroup.frobenius, 29);
        assert!(doc.duplication.is_none());
        assert!(!doc.all_hold());
    }

    #[test]
    fn naturals_satisfy_everything() {
        let doc = info_report(&NumericalSemigroup::naturals(), None);
        assert!(doc.all_hold());
        assert_eq!(doc.semigroup.frobenius, -1);
    }

    #[test]
    fn dup_fields() {
        let s = NumericalSemigroup::from_generators(&[5, 14, 17]).unwrap();
        let e = SemigroupIdeal::from_generators(&s, &[14, 20, 22]).unwrap();
        let doc = dup_report(&DuplicationInput::new(e, 17).unwrap());
        let d = doc.duplication.as_ref().unwrap();
        assert_eq!(d.apery_2m, vec![0, 61, 62, 73, 34, 45, 56, 57, 28, 79]);
        assert!(d.theorems["cm"].criterion.holds && d.theorems["cm"].agree);
        assert!(d.all_agree && d.lemma_3e_plus_b);
        assert_eq!(doc.instance.b, Some(17));
    }
}
