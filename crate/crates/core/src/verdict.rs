//! Boolean verdicts with checkable witnesses, and the report that collects them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::homogeneity::HomogeneityWitness;

/// Evidence for a false verdict. Each variant carries enough data to re-run
/// the defining check by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `a_i != b_i` at this residue.
    ResidueMismatch { residue: usize, a: u32, b: u32 },
    /// The ≤_M-maximal Apéry elements and their orders.
    MaximalOrders { maximal: Vec<i64>, orders: Vec<u32> },
    /// `δ_i + δ_{m-i+1} != δ_m` for this 1-based index of the sorted Apéry set.
    SymmetryFailure { index: usize, left: i64, right: i64, top: i64 },
    /// `E != min(E) + K(S)`: smallest integer where the two sets differ.
    NotCanonical { shift: i64, first_difference: i64 },
    /// Apéry set differs from the rectangle; elements on either side only.
    NotRectangular { only_in_rectangle: Vec<i64>, only_in_apery: Vec<i64> },
    /// The ideal has more than one minimal generator.
    NotPrincipal { generators: Vec<i64> },
    Homogeneity(HomogeneityWitness),
    /// `δ ∈ 2E + b` for this Apéry element of `S`.
    AperyInSumset { element: i64 },
    /// Conjunction failed on the named parts.
    Conjunction { failed: Vec<String> },
}

/// A predicate outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    /// Conjunction of named verdicts; the witness lists every failed part.
    pub fn all<'a, I>(parts: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a Verdict)>,
    {
        let failed: Vec<String> = parts
            .into_iter()
            .filter(|(_, v)| !v.holds)
            .map(|(name, _)| name.to_string())
            .collect();
        if failed.is_empty() {
            Verdict::yes()
        } else {
            Verdict::no(Witness::Conjunction { failed })
        }
    }
}

/// A theorem evaluated twice: through its numerical criterion on `(S, E, b)`
/// and directly on the duplication `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DupVerdict {
    pub criterion: Verdict,
    pub direct: Verdict,
}

impl DupVerdict {
    pub fn agree(&self) -> bool {
        self.criterion.holds == self.direct.holds
    }

    pub fn holds(&self) -> bool {
        self.criterion.holds
    }
}

/// Named verdicts with the witnesses of the false ones. Keys are sorted so
/// serialized reports are byte-stable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
}

impl PropertyReport {
    pub fn record(&mut self, name: &str, verdict: &Verdict) {
        self.verdicts.insert(name.to_string(), verdict.holds);
        if let Some(w) = &verdict.witness {
            if !verdict.holds {
                self.witnesses.insert(name.to_string(), w.clone());
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.verdicts.get(name).copied()
    }
}
