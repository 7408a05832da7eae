//! Cross-validation of the duplication theorems and their supporting lemmas
//! over an enumerated corpus.
//!
//! The work is split into one unit per semigroup. Units are independent; with
//! the `parallel` feature they run on the rayon pool, and results are merged
//! in corpus order either way, so the summary does not depend on scheduling.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{DuplicationAnalysis, IdealFacts, SemigroupFacts};
use crate::corpus::{self, CorpusSpec};
use crate::duplication::{duplicate, order_transfer_check, predicted_apery, DuplicationInput};
use crate::error::Error;
use crate::homogeneity::{homtype_candidates, is_homogeneous_semigroup, lemma_3eb_check};
use crate::ideal::{blowup_ideal, canonical_ideal, RelativeIdeal, SemigroupIdeal};
use crate::limits::{blowup_ideal_by_limit, blowup_by_limit};
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::{blowup, is_symmetric_by_canonical, AperyProfile, RectangularityProfile};
use crate::window::check_multiples;

/// Counterexamples kept per check; the tally counts all of them.
pub const MAX_EXAMPLES_PER_CHECK: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Rayon work-stealing over semigroups; sequential when the `parallel`
    /// feature is off.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub evaluated: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub semigroup: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationIssue {
    pub semigroup: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<i64>>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub semigroups: u64,
    pub ideals: u64,
    pub triples: u64,
    pub checks: BTreeMap<String, CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    pub stabilization_failures: Vec<StabilizationIssue>,
}

impl ValidationSummary {
    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0 && self.stabilization_failures.is_empty()
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.values().map(|t| t.violations).sum()
    }

    pub fn tally(&self, check: &str) -> CheckTally {
        self.checks.get(check).copied().unwrap_or_default()
    }

    fn merge(&mut self, other: ValidationSummary) {
        self.semigroups += other.semigroups;
        self.ideals += other.ideals;
        self.triples += other.triples;
        for (name, t) in other.checks {
            let e = self.checks.entry(name).or_default();
            e.evaluated += t.evaluated;
            e.violations += t.violations;
        }
        for c in other.counterexamples {
            let kept = self
                .counterexamples
                .iter()
                .filter(|k| k.check == c.check)
                .count();
            if kept < MAX_EXAMPLES_PER_CHECK {
                self.counterexamples.push(c);
            }
        }
        self.stabilization_failures
            .extend(other.stabilization_failures);
    }
}

/// The corpus described by `spec`, swept in full.
pub fn validate_corpus(spec: &CorpusSpec, mode: ExecMode) -> ValidationSummary {
    validate_semigroups(&corpus::corpus_semigroups(spec), spec, mode)
}

/// Every listed semigroup with the ideals and shifts that `spec` enumerates.
pub fn validate_semigroups(
    semigroups: &[NumericalSemigroup],
    spec: &CorpusSpec,
    mode: ExecMode,
) -> ValidationSummary {
    let unit = |s: &NumericalSemigroup| {
        let pairs: Vec<(SemigroupIdeal, Vec<i64>)> = corpus::ideals(s, spec)
            .into_iter()
            .map(|e| (e, corpus::odd_shifts(s, spec)))
            .collect();
        validate_unit(s, &pairs)
    };
    run(semigroups, mode, unit)
}

/// Ideals of one semigroup, each with the shifts to try.
type IdealShifts = Vec<(SemigroupIdeal, Vec<i64>)>;

/// Explicit `(S, E, b)` triples, grouped by semigroup in the given order.
pub fn validate_instances(instances: &[DuplicationInput], mode: ExecMode) -> ValidationSummary {
    let mut groups: Vec<(NumericalSemigroup, IdealShifts)> = Vec::new();
    for i in instances {
        let pair = (i.ideal().clone(), vec![i.b()]);
        match groups.iter_mut().find(|(s, _)| s == i.semigroup()) {
            Some((_, pairs)) => pairs.push(pair),
            None => groups.push((i.semigroup().clone(), vec![pair])),
        }
    }
    let semigroups: Vec<NumericalSemigroup> = groups.iter().map(|(s, _)| s.clone()).collect();
    run(&semigroups, mode, |s| {
        let (_, pairs) = groups.iter().find(|(g, _)| g == s).expect("grouped");
        validate_unit(s, pairs)
    })
}

fn run<F>(semigroups: &[NumericalSemigroup], mode: ExecMode, unit: F) -> ValidationSummary
where
    F: Fn(&NumericalSemigroup) -> ValidationSummary + Sync,
{
    let parts: Vec<ValidationSummary> = match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            semigroups.par_iter().map(&unit).collect()
        }
        _ => semigroups.iter().map(&unit).collect(),
    };
    let mut total = ValidationSummary::default();
    for p in parts {
        total.merge(p);
    }
    total
}

struct Recorder {
    out: ValidationSummary,
    semigroup: Vec<i64>,
    ideal: Option<Vec<i64>>,
    b: Option<i64>,
}

impl Recorder {
    fn check<D: FnOnce() -> String>(&mut self, name: &str, ok: bool, detail: D) {
        let t = self.out.checks.entry(name.to_string()).or_default();
        t.evaluated += 1;
        if !ok {
            t.violations += 1;
            let kept = self
                .out
                .counterexamples
                .iter()
                .filter(|c| c.check == name)
                .count();
            if kept < MAX_EXAMPLES_PER_CHECK {
                self.out.counterexamples.push(Counterexample {
                    check: name.to_string(),
                    semigroup: self.semigroup.clone(),
                    ideal: self.ideal.clone(),
                    b: self.b,
                    detail: detail(),
                });
            }
        }
    }

    fn stabilization(&mut self, err: Error) {
        self.out.stabilization_failures.push(StabilizationIssue {
            semigroup: self.semigroup.clone(),
            ideal: self.ideal.clone(),
            message: err.to_string(),
        });
    }

    fn at(&mut self, ideal: Option<&SemigroupIdeal>, b: Option<i64>) {
        self.ideal = ideal.map(|e| e.generators().to_vec());
        self.b = b;
    }
}

fn validate_unit(s: &NumericalSemigroup, pairs: &[(SemigroupIdeal, Vec<i64>)]) -> ValidationSummary {
    let mut rec = Recorder {
        out: ValidationSummary {
            semigroups: 1,
            ..Default::default()
        },
        semigroup: s.generators().to_vec(),
        ideal: None,
        b: None,
    };
    let sf = SemigroupFacts::of(s);
    semigroup_checks(&mut rec, &sf);
    let k = canonical_ideal(s);
    for f in [RelativeIdeal::whole(s), RelativeIdeal::maximal(s), k.clone()] {
        duality_check(&mut rec, &k, &f);
    }
    for (e, bs) in pairs {
        rec.out.ideals += 1;
        rec.at(Some(e), None);
        let ef = IdealFacts::of(e);
        ideal_checks(&mut rec, &sf, &ef);
        duality_check(&mut rec, &k, e.as_relative());
        let mut homogeneous_at: Vec<(i64, bool)> = Vec::new();
        for &b in bs {
            let input = match DuplicationInput::new(e.clone(), b) {
                Ok(i) => i,
                Err(_) => continue,
            };
            rec.out.triples += 1;
            rec.at(Some(e), Some(b));
            let a = DuplicationAnalysis::with_facts(&input, &sf, &ef);
            triple_checks(&mut rec, &input, &sf, &ef, &a);
            let h = a.theorem("homogeneous");
            homogeneous_at.push((b, h.criterion.holds && h.direct.holds));
        }
        rec.at(Some(e), None);
        stabilization_in_b(&mut rec, &sf, e, &homogeneous_at);
    }
    rec.out
}

fn semigroup_checks(rec: &mut Recorder, sf: &SemigroupFacts) {
    let s = &sf.semigroup;
    rec.at(None, None);
    a_ge_b(rec, "a_ge_b_semigroup", &sf.profile);
    box_chain(rec, "apery_gamma_beta_chain", s, &sf.rectangularity);
    rec.check(
        "symmetry_tests_agree",
        sf.symmetric.holds == is_symmetric_by_canonical(s),
        || format!("sorted-Apéry test says {}", sf.symmetric.holds),
    );
    let (cond1, cond2) = order_shift_conditions(
        s.apery(),
        s.multiplicity(),
        check_multiples(s.multiplicity(), s.window_end(), max_of(s.apery())),
        |z| s.order(z),
    );
    rec.check(
        "semigroup_lemma_equivalence",
        cond1 == cond2 && cond2 == sf.gr_cm.holds,
        || format!("(1)={cond1} (2)={cond2} a=b:{}", sf.gr_cm.holds),
    );
    if sf.mpure.holds && sf.symmetric.holds {
        let top = max_of(s.apery());
        let m = s.multiplicity();
        let lambda = check_multiples(m, s.window_end(), top);
        let base = s.order(top).expect("member");
        let shifts_ok = (1..=lambda).all(|l| s.order(top + l * m) == Some(base + l as u32));
        rec.check("top_apery_order_shift", shifts_ok == sf.gr_cm.holds, || {
            format!("shift identity {shifts_ok}, gr_cm {}", sf.gr_cm.holds)
        });
    }
    match blowup_by_limit(s) {
        Ok((lim, _)) => rec.check("blowup_limit", lim == blowup(s), || {
            format!("limit {lim:?} closed form {:?}", blowup(s))
        }),
        Err(e) => rec.stabilization(e),
    }
    for c in homtype_candidates(s) {
        rec.check("homtype_not_homogeneous", !c.is_homogeneous_t, || {
            format!("s={} b={} T={:?}", c.s, c.b, c.t)
        });
    }
}

fn ideal_checks(rec: &mut Recorder, sf: &SemigroupFacts, ef: &IdealFacts) {
    let e = &ef.ideal;
    let s = e.parent();
    a_ge_b(rec, "a_ge_b_ideal", &ef.profile);
    let alpha = e.apery_m();
    let (cond1, cond2) = order_shift_conditions(
        &alpha,
        s.multiplicity(),
        check_multiples(s.multiplicity(), s.window_end(), max_of(&alpha)),
        |z| e.order(z),
    );
    rec.check(
        "ideal_lemma_equivalence",
        cond1 == cond2 && cond2 == ef.gr_cm.holds,
        || format!("(1)={cond1} (2)={cond2} a=b:{}", ef.gr_cm.holds),
    );
    if sf.gr_cm.holds && ef.principal.holds {
        rec.check("principal_ideal_cm", ef.gr_cm.holds, || {
            format!("a(E)={:?} b(E)={:?}", ef.profile.a_vector, ef.profile.b_vector)
        });
    }
    match blowup_ideal_by_limit(e) {
        Ok((lim, _)) => {
            let closed = blowup_ideal(e);
            rec.check("blowup_ideal_limit", lim.same_set(&closed), || {
                format!("limit {lim:?} closed form {closed:?}")
            })
        }
        Err(err) => rec.stabilization(err),
    }
}

fn triple_checks(
    rec: &mut Recorder,
    input: &DuplicationInput,
    sf: &SemigroupFacts,
    ef: &IdealFacts,
    a: &DuplicationAnalysis,
) {
    for (name, v) in &a.theorems {
        rec.check(&format!("dup_{name}"), v.agree(), || {
            format!("criterion {} direct {}", v.criterion.holds, v.direct.holds)
        });
    }
    let t = &a.t;
    let s = input.semigroup();
    let e = input.ideal();
    let b = input.b();
    let mut candidates = input.generator_candidates();
    candidates.sort_unstable();
    rec.check("dup_generator_minimality", t.generators() == candidates, || {
        format!("candidates {candidates:?} minimal {:?}", t.generators())
    });
    let limit = t.conductor() + 2 * t.multiplicity();
    let bad = (0..=limit).find(|&z| {
        let expected = if z % 2 == 0 {
            s.contains(z / 2)
        } else {
            z >= b && e.contains((z - b) / 2)
        };
        t.contains(z) != expected
    });
    rec.check("dup_parity_split", bad.is_none(), || {
        format!("membership differs at {}", bad.unwrap_or_default())
    });
    let predicted = predicted_apery(input);
    let actual = t.apery_set(2 * s.multiplicity()).expect("2m lies in T");
    rec.check("dup_apery", predicted == actual, || {
        format!("predicted {predicted:?} actual {actual:?}")
    });
    rec.check("lemma_3e_plus_b", lemma_3eb_check(input), String::new);
    rec.check(
        "order_transfer",
        order_transfer_check(input, s.conductor()),
        String::new,
    );
    box_chain(rec, "apery_gamma_beta_chain_t", t, &a.t_facts.rectangularity);
    a_ge_b(rec, "a_ge_b_t", &a.t_facts.profile);
    if ef.canonical.holds {
        rec.check("canonical_dup_symmetric", a.t_facts.symmetric.holds, || {
            format!("T = {t:?}")
        });
        rec.check(
            "mpure_transfer",
            a.t_facts.mpurity.is_mpure == sf.mpurity.is_mpure,
            || {
                format!(
                    "mpure(S)={} mpure(T)={}",
                    sf.mpurity.is_mpure, a.t_facts.mpurity.is_mpure
                )
            },
        );
        if sf.mpurity.is_mpure {
            let beta_m = max_of(&ef.profile.elements);
            let delta_m = max_of(s.apery());
            let lhs = t.order(2 * beta_m + b);
            let rhs = s.order(delta_m).map(|o| o + 1);
            rec.check("mpure_transfer_order", lhs == rhs, || {
                format!("ord_T(2β_m+b)={lhs:?} ord_S(δ_m)+1={rhs:?}")
            });
        }
    }
}

/// If the homogeneous-duplication criterion holds for one `b`, it holds for
/// every odd `b ∈ S` beyond the largest Apéry element.
fn stabilization_in_b(
    rec: &mut Recorder,
    sf: &SemigroupFacts,
    e: &SemigroupIdeal,
    homogeneous_at: &[(i64, bool)],
) {
    if !homogeneous_at.iter().any(|&(_, h)| h) {
        return;
    }
    let s = &sf.semigroup;
    let top = max_of(s.apery());
    for &(b, h) in homogeneous_at.iter().filter(|(b, _)| *b > top) {
        rec.b = Some(b);
        rec.check("homogeneous_stabilization", h, String::new);
    }
    let far = (2 * top + 1..).find(|&b| b % 2 == 1 && s.contains(b)).expect("S is cofinite");
    rec.b = Some(far);
    let input = DuplicationInput::new(e.clone(), far).expect("odd member");
    let h = is_homogeneous_semigroup(&duplicate(&input)).holds;
    rec.check("homogeneous_stabilization", h, String::new);
    rec.b = None;
}

fn duality_check(rec: &mut Recorder, k: &RelativeIdeal, f: &RelativeIdeal) {
    let back = k
        .difference(f)
        .and_then(|kf| k.difference(&kf))
        .expect("same parent");
    rec.check("canonical_duality", back == *f, || {
        format!("F = {f:?}, K-(K-F) = {back:?}")
    });
}

fn a_ge_b(rec: &mut Recorder, name: &str, p: &AperyProfile) {
    let ok = p.a_vector.iter().zip(&p.b_vector).all(|(a, b)| a >= b);
    rec.check(name, ok, || format!("a={:?} b={:?}", p.a_vector, p.b_vector));
}

fn box_chain(rec: &mut Recorder, name: &str, s: &NumericalSemigroup, r: &RectangularityProfile) {
    let ap_in_gamma = s.apery().iter().all(|x| r.gamma_box.binary_search(x).is_ok());
    let gamma_in_beta = r.gamma_box.iter().all(|x| r.beta_box.binary_search(x).is_ok());
    rec.check(name, ap_in_gamma && gamma_in_beta, || {
        format!("Ap ⊆ Γ: {ap_in_gamma}, Γ ⊆ B: {gamma_in_beta}")
    });
}

fn max_of(v: &[i64]) -> i64 {
    *v.iter().max().expect("non-empty")
}

/// Truncated forms of the two order-shift conditions for the Apéry elements
/// `alpha` of a semigroup or ideal with order function `ord`:
/// (1) `ord(e + m) = ord(e) + 1` for every member `e` up to the last visited
/// multiple, scanned as integers; (2) `ord(α + λm) = ord(α) + λ` for every
/// Apéry element and `1 <= λ <= lambda`.
fn order_shift_conditions<F>(alpha: &[i64], m: i64, lambda: i64, ord: F) -> (bool, bool)
where
    F: Fn(i64) -> Option<u32>,
{
    let low = *alpha.iter().min().expect("non-empty");
    let high = max_of(alpha) + (lambda - 1) * m;
    let cond1 = (low..=high).all(|z| match ord(z) {
        None => true,
        Some(o) => ord(z + m) == Some(o + 1),
    });
    let cond2 = alpha.iter().all(|&a| {
        let base = ord(a).expect("Apéry elements are members");
        (1..=lambda).all(|l| ord(a + l * m) == Some(base + l as u32))
    });
    (cond1, cond2)
}
