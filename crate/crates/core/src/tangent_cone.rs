//! Tangent-cone predicates expressed through Apéry sets and orders.
//!
//! The associated graded ring of `k[[S]]` is Cohen-Macaulay exactly when the
//! microinvariants `a_i(S)` and `b_i(S)` agree; the analogous statement holds
//! for ideals. Gorenstein and complete-intersection tangent cones reduce to
//! M-purity, symmetry and γ-rectangularity of the Apéry set. The `is_dup_*`
//! functions evaluate each characterization for a numerical duplication
//! twice, once from `(S, E, b)` and once directly on `T`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::duplication::{duplicate, DuplicationInput};
use crate::ideal::{ab_vectors_ideal, canonical_ideal, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::verdict::{DupVerdict, Verdict, Witness};

/// `S' = <m, n_2 - m, ..., n_ν - m>`.
pub fn blowup(s: &NumericalSemigroup) -> NumericalSemigroup {
    let m = s.multiplicity();
    let mut gens = vec![m];
    gens.extend(s.generators()[1..].iter().map(|&g| g - m));
    NumericalSemigroup::from_generators(&gens).expect("blowup generators are coprime")
}

/// Apéry set of `S` with respect to `base`, together with the microinvariant
/// vectors, all indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyProfile {
    pub base: i64,
    pub elements: Vec<i64>,
    pub a_vector: Vec<u32>,
    pub b_vector: Vec<u32>,
}

impl AperyProfile {
    fn first_mismatch(&self) -> Option<usize> {
        self.a_vector
            .iter()
            .zip(&self.b_vector)
            .position(|(a, b)| a != b)
    }
}

/// `a_i = (ω_i - ω'_i) / m` and `b_i = ord_S(ω_i)`.
pub fn ab_vectors(s: &NumericalSemigroup) -> AperyProfile {
    let m = s.multiplicity();
    let omega = s.apery().to_vec();
    let omega_prime = blowup(s).apery_set(m).expect("m lies in the blowup");
    let a_vector = omega
        .iter()
        .zip(&omega_prime)
        .map(|(w, wp)| ((w - wp) / m) as u32)
        .collect();
    let b_vector = omega
        .iter()
        .map(|&w| s.order(w).expect("Apéry elements are members"))
        .collect();
    AperyProfile {
        base: m,
        elements: omega,
        a_vector,
        b_vector,
    }
}

/// Microinvariant profile of an ideal, in the same shape as for semigroups.
pub fn ideal_profile(e: &SemigroupIdeal) -> AperyProfile {
    let ab = ab_vectors_ideal(e);
    AperyProfile {
        base: e.parent().multiplicity(),
        elements: ab.apery,
        a_vector: ab.a,
        b_vector: ab.b,
    }
}

fn ab_verdict(profile: &AperyProfile) -> Verdict {
    match profile.first_mismatch() {
        None => Verdict::yes(),
        Some(i) => Verdict::no(Witness::ResidueMismatch {
            residue: i,
            a: profile.a_vector[i],
            b: profile.b_vector[i],
        }),
    }
}

/// Cohen-Macaulayness of `gr_m(k[[S]])`: `a(S) = b(S)`.
pub fn is_gr_cm(s: &NumericalSemigroup) -> Verdict {
    ab_verdict(&ab_vectors(s))
}

/// Cohen-Macaulayness of `gr_m(I)` for the monomial ideal of `E`: `a(E) = b(E)`.
pub fn is_gr_ideal_cm(e: &SemigroupIdeal) -> Verdict {
    ab_verdict(&ideal_profile(e))
}

/// Result of the M-purity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPurity {
    pub is_mpure: bool,
    /// ≤_M-maximal Apéry elements in increasing order.
    pub maximal_elements: Vec<i64>,
    pub orders: Vec<u32>,
}

impl MPurity {
    pub fn verdict(&self) -> Verdict {
        if self.is_mpure {
            Verdict::yes()
        } else {
            Verdict::no(Witness::MaximalOrders {
                maximal: self.maximal_elements.clone(),
                orders: self.orders.clone(),
            })
        }
    }
}

/// `δ_i ≤_M δ_j` iff some Apéry `δ_k` has `δ_i + δ_k = δ_j` and the orders add.
/// `S` is M-pure when all maximal elements share one order.
pub fn mpure(s: &NumericalSemigroup) -> MPurity {
    let mut ap = s.apery().to_vec();
    ap.sort_unstable();
    let ord: HashMap<i64, u32> = ap
        .iter()
        .map(|&d| (d, s.order(d).expect("member")))
        .collect();
    let below = |lo: i64, hi: i64| {
        let k = hi - lo;
        k > 0 && ord.get(&k).is_some_and(|&ok| ord[&lo] + ok == ord[&hi])
    };
    let maximal_elements: Vec<i64> = ap
        .iter()
        .copied()
        .filter(|&d| !ap.iter().any(|&other| below(d, other)))
        .collect();
    let orders: Vec<u32> = maximal_elements.iter().map(|d| ord[d]).collect();
    let is_mpure = orders.windows(2).all(|w| w[0] == w[1]);
    MPurity {
        is_mpure,
        maximal_elements,
        orders,
    }
}

/// Symmetry via the sorted Apéry set: `δ_i + δ_{m-i+1} = δ_m` for `2 <= i <= m-1`.
pub fn is_symmetric(s: &NumericalSemigroup) -> Verdict {
    let mut d = s.apery().to_vec();
    d.sort_unstable();
    let m = d.len();
    let top = d[m - 1];
    for i in 2..m {
        let (left, right) = (d[i - 1], d[m - i]);
        if left + right != top {
            return Verdict::no(Witness::SymmetryFailure {
                index: i,
                left,
                right,
                top,
            });
        }
    }
    Verdict::yes()
}

/// Symmetry tested as `K(S) = S`.
pub fn is_symmetric_by_canonical(s: &NumericalSemigroup) -> bool {
    canonical_ideal(s).equals_semigroup(s)
}

/// `gr_m(ω_R)` is a canonical module of `gr_m(R)`: CM tangent cone and M-pure.
pub fn expected_canonical_module(s: &NumericalSemigroup) -> Verdict {
    let cm = is_gr_cm(s);
    let mp = mpure(s).verdict();
    Verdict::all([("gr_cm", &cm), ("mpure", &mp)])
}

/// β/γ data of the Apéry set with respect to the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangularityProfile {
    /// The generators `n_2, ..., n_ν`.
    pub generators: Vec<i64>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    /// `B(S)` as a set of integers.
    pub beta_box: Vec<i64>,
    /// `Γ(S)` as a set of integers.
    pub gamma_box: Vec<i64>,
    /// Number of coefficient tuples spanning each box.
    pub beta_tuples: u64,
    pub gamma_tuples: u64,
    pub is_beta_rect: bool,
    pub is_gamma_rect: bool,
}

impl RectangularityProfile {
    pub fn gamma_verdict(&self, apery: &BTreeSet<i64>) -> Verdict {
        rect_verdict(&self.gamma_box, apery)
    }

    pub fn beta_verdict(&self, apery: &BTreeSet<i64>) -> Verdict {
        rect_verdict(&self.beta_box, apery)
    }
}

fn rect_verdict(rect: &[i64], apery: &BTreeSet<i64>) -> Verdict {
    let rect: BTreeSet<i64> = rect.iter().copied().collect();
    if &rect == apery {
        return Verdict::yes();
    }
    Verdict::no(Witness::NotRectangular {
        only_in_rectangle: rect.difference(apery).copied().collect(),
        only_in_apery: apery.difference(&rect).copied().collect(),
    })
}

fn box_values(gens: &[i64], bounds: &[u32]) -> Vec<i64> {
    let mut values = BTreeSet::from([0i64]);
    for (&g, &k) in gens.iter().zip(bounds) {
        values = values
            .iter()
            .flat_map(|&x| (0..=k as i64).map(move |l| x + l * g))
            .collect();
    }
    values.into_iter().collect()
}

/// `β_S(n_i)` is the largest `h` with `h·n_i ∈ Ap_m(S)` and `ord(h·n_i) = h`;
/// `γ_S(n_i)` additionally asks that `h·n_i` has a unique maximal
/// factorization. Both conditions are closed downwards in `h`.
pub fn beta_gamma_profile(s: &NumericalSemigroup) -> RectangularityProfile {
    let m = s.multiplicity();
    let in_apery = |v: i64| s.contains(v) && !s.contains(v - m);
    let generators = s.generators()[1..].to_vec();
    let mut beta = Vec::with_capacity(generators.len());
    let mut gamma = Vec::with_capacity(generators.len());
    for &n in &generators {
        let (mut b, mut g, mut unique_so_far) = (0u32, 0u32, true);
        let mut h = 1u32;
        loop {
            let v = h as i64 * n;
            if !in_apery(v) || s.order(v) != Some(h) {
                break;
            }
            b = h;
            if unique_so_far {
                let maximal = s
                    .factorizations(v)
                    .iter()
                    .filter(|f| f.length == h)
                    .count();
                if maximal == 1 {
                    g = h;
                } else {
                    unique_so_far = false;
                }
            }
            h += 1;
        }
        beta.push(b);
        gamma.push(g);
    }
    let apery: BTreeSet<i64> = s.apery().iter().copied().collect();
    let beta_box = box_values(&generators, &beta);
    let gamma_box = box_values(&generators, &gamma);
    let tuples = |v: &[u32]| {
        v.iter()
            .fold(1u64, |acc, &k| acc.saturating_mul(k as u64 + 1))
    };
    let is_beta_rect = beta_box.iter().copied().collect::<BTreeSet<_>>() == apery;
    let is_gamma_rect = gamma_box.iter().copied().collect::<BTreeSet<_>>() == apery;
    RectangularityProfile {
        beta_tuples: tuples(&beta),
        gamma_tuples: tuples(&gamma),
        generators,
        beta,
        gamma,
        beta_box,
        gamma_box,
        is_beta_rect,
        is_gamma_rect,
    }
}

pub fn is_gamma_rectangular(s: &NumericalSemigroup) -> Verdict {
    let apery = s.apery().iter().copied().collect();
    beta_gamma_profile(s).gamma_verdict(&apery)
}

pub fn is_beta_rectangular(s: &NumericalSemigroup) -> Verdict {
    let apery = s.apery().iter().copied().collect();
    beta_gamma_profile(s).beta_verdict(&apery)
}

/// Complete-intersection tangent cone: CM and γ-rectangular Apéry set.
pub fn is_gr_ci(s: &NumericalSemigroup) -> Verdict {
    let cm = is_gr_cm(s);
    let rect = is_gamma_rectangular(s);
    Verdict::all([("gr_cm", &cm), ("gamma_rect", &rect)])
}

/// Gorenstein tangent cone: CM, M-pure and symmetric.
pub fn is_gr_gorenstein(s: &NumericalSemigroup) -> Verdict {
    let cm = is_gr_cm(s);
    let mp = mpure(s).verdict();
    let sym = is_symmetric(s);
    Verdict::all([("gr_cm", &cm), ("mpure", &mp), ("symmetric", &sym)])
}

pub fn canonical_verdict(e: &SemigroupIdeal) -> Verdict {
    let shifted = canonical_ideal(e.parent()).shift(e.min());
    let own = e.as_relative();
    if shifted == *own {
        return Verdict::yes();
    }
    let top = shifted.conductor().max(own.conductor());
    let first_difference = (e.min()..=top)
        .find(|&z| shifted.contains(z) != own.contains(z))
        .unwrap_or(top);
    Verdict::no(Witness::NotCanonical {
        shift: e.min(),
        first_difference,
    })
}

pub fn principal_verdict(e: &SemigroupIdeal) -> Verdict {
    if e.is_principal() {
        Verdict::yes()
    } else {
        Verdict::no(Witness::NotPrincipal {
            generators: e.generators().to_vec(),
        })
    }
}

/// CM tangent cone of `S ⋈^b E`: `a(S) = b(S)` and `a(E) = b(E)`.
pub fn is_dup_cm(input: &DuplicationInput) -> DupVerdict {
    let t = duplicate(input);
    let cm_s = is_gr_cm(input.semigroup());
    let cm_e = is_gr_ideal_cm(input.ideal());
    DupVerdict {
        criterion: Verdict::all([("gr_cm_s", &cm_s), ("gr_cm_e", &cm_e)]),
        direct: is_gr_cm(&t),
    }
}

/// Gorenstein tangent cone of `S ⋈^b E`: `S` M-pure, `E` canonical and
/// `gr(S)` CM; directly, `T` has a CM tangent cone and is M-pure and symmetric.
pub fn is_dup_gorenstein(input: &DuplicationInput) -> DupVerdict {
    let t = duplicate(input);
    let s = input.semigroup();
    let mp = mpure(s).verdict();
    let canon = canonical_verdict(input.ideal());
    let cm = is_gr_cm(s);
    DupVerdict {
        criterion: Verdict::all([("mpure_s", &mp), ("canonical_e", &canon), ("gr_cm_s", &cm)]),
        direct: is_gr_gorenstein(&t),
    }
}

/// Complete-intersection tangent cone of `S ⋈^b E`: `gr(S)` CI and `E` principal.
pub fn is_dup_ci(input: &DuplicationInput) -> DupVerdict {
    let t = duplicate(input);
    let ci = is_gr_ci(input.semigroup());
    let principal = principal_verdict(input.ideal());
    DupVerdict {
        criterion: Verdict::all([("gr_ci_s", &ci), ("principal_e", &principal)]),
        direct: is_gr_ci(&t),
    }
}
