//! Named filters over an enumerated corpus.

use std::fmt;
use std::str::FromStr;

use crate::analysis::{IdealFacts, SemigroupFacts};
use crate::corpus::{self, CorpusSpec};
use crate::duplication::DuplicationInput;
use crate::error::{Error, Result};
use crate::homogeneity::homtype_candidates;
use crate::report::{base_report, dup_report_with, ReportDocument};
use crate::semigroup::NumericalSemigroup;
use crate::validate::ExecMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    GrCm,
    NotGrCm,
    Mpure,
    NotMpure,
    Symmetric,
    NotSymmetric,
    MpureAndNotSymmetric,
    Homogeneous,
    NotHomogeneous,
    GammaRect,
    GrCi,
    GrGorenstein,
    ExpectedCanonicalModule,
    HomtypeCandidate,
    /// `S ⋈^b E` has a Gorenstein tangent cone while `S` does not.
    GorensteinDupFromNonGorenstein,
    /// `S ⋈^b E` is homogeneous.
    HomogeneousDup,
    /// Some duplication theorem evaluates differently on its two sides.
    DupDisagreement,
}

const NAMES: [(&str, Predicate); 17] = [
    ("gr-cm", Predicate::GrCm),
    ("not-gr-cm", Predicate::NotGrCm),
    ("mpure", Predicate::Mpure),
    ("not-mpure", Predicate::NotMpure),
    ("symmetric", Predicate::Symmetric),
    ("not-symmetric", Predicate::NotSymmetric),
    ("mpure-and-not-symmetric", Predicate::MpureAndNotSymmetric),
    ("homogeneous", Predicate::Homogeneous),
    ("not-homogeneous", Predicate::NotHomogeneous),
    ("gamma-rect", Predicate::GammaRect),
    ("gr-ci", Predicate::GrCi),
    ("gr-gorenstein", Predicate::GrGorenstein),
    ("expected-canonical-module", Predicate::ExpectedCanonicalModule),
    ("homtype-candidate", Predicate::HomtypeCandidate),
    (
        "gorenstein-dup-from-non-gorenstein",
        Predicate::GorensteinDupFromNonGorenstein,
    ),
    ("homogeneous-dup", Predicate::HomogeneousDup),
    ("dup-disagreement", Predicate::DupDisagreement),
];

impl Predicate {
    pub fn names() -> impl Iterator<Item = &'static str> {
        NAMES.iter().map(|(n, _)| *n)
    }

    fn on_semigroup(self, f: &SemigroupFacts) -> Option<bool> {
        use Predicate::*;
        Some(match self {
            GrCm => f.gr_cm.holds,
            NotGrCm => !f.gr_cm.holds,
            Mpure => f.mpure.holds,
            NotMpure => !f.mpure.holds,
            Symmetric => f.symmetric.holds,
            NotSymmetric => !f.symmetric.holds,
            MpureAndNotSymmetric => f.mpure.holds && !f.symmetric.holds,
            Homogeneous => f.homogeneous.holds,
            NotHomogeneous => !f.homogeneous.holds,
            GammaRect => f.gamma_rect.holds,
            GrCi => f.gr_ci().holds,
            GrGorenstein => f.gr_gorenstein().holds,
            ExpectedCanonicalModule => f.expected_canonical_module().holds,
            _ => return None,
        })
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, p)| *p)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = NAMES
            .iter()
            .find(|(_, p)| p == self)
            .map(|(n, _)| *n)
            .expect("every predicate is named");
        f.write_str(name)
    }
}

/// Reports for every corpus instance satisfying `predicate`, in corpus order.
/// Semigroup predicates yield one report per semigroup; duplication
/// predicates yield one per `(E, b)`.
pub fn search(
    semigroups: &[NumericalSemigroup],
    spec: &CorpusSpec,
    predicate: Predicate,
    mode: ExecMode,
) -> Vec<ReportDocument> {
    let unit = |s: &NumericalSemigroup| search_one(s, spec, predicate);
    let parts: Vec<Vec<ReportDocument>> = match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            semigroups.par_iter().map(unit).collect()
        }
        _ => semigroups.iter().map(unit).collect(),
    };
    parts.into_iter().flatten().collect()
}

fn search_one(s: &NumericalSemigroup, spec: &CorpusSpec, predicate: Predicate) -> Vec<ReportDocument> {
    use Predicate::*;
    let sf = SemigroupFacts::of(s);
    if let Some(hit) = predicate.on_semigroup(&sf) {
        return if hit { vec![base_report(&sf)] } else { vec![] };
    }
    if predicate == HomtypeCandidate {
        let cands = homtype_candidates(s);
        if cands.is_empty() {
            return vec![];
        }
        let mut doc = base_report(&sf);
        doc.homtype_candidates = Some(cands);
        return vec![doc];
    }
    if predicate == GorensteinDupFromNonGorenstein
        && (sf.gr_gorenstein().holds || !sf.mpure.holds || !sf.gr_cm.holds)
    {
        return vec![];
    }
    let mut out = Vec::new();
    for e in corpus::ideals(s, spec) {
        let ef = IdealFacts::of(&e);
        if predicate == GorensteinDupFromNonGorenstein && !ef.canonical.holds {
            continue;
        }
        for b in corpus::odd_shifts(s, spec) {
            let input = DuplicationInput::new(e.clone(), b).expect("odd member of S");
            let doc = dup_report_with(&input, &sf, &ef);
            let d = doc.duplication.as_ref().expect("duplication section");
            let keep = match predicate {
                GorensteinDupFromNonGorenstein => d.theorems["gorenstein"].criterion.holds,
                HomogeneousDup => d.theorems["homogeneous"].direct.holds,
                DupDisagreement => !d.all_agree,
                _ => unreachable!("semigroup predicates handled above"),
            };
            if keep {
                out.push(doc);
            }
        }
    }
    out
}
