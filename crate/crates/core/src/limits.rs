//! Blowups computed from their limit definitions.
//!
//! `S' = ⋃_l (lM - lM)` and `E' = ⋃_l ((E + (l-1)M) - lM)` are increasing
//! unions. Once `(l+1)M = lM + m` and `E + lM = E + (l-1)M + m`, every later
//! term equals the current one, so the iteration stops there. A step cap
//! turns nontermination into [`Error::StabilizationFailure`].

use crate::error::{Error, Result};
use crate::ideal::{RelativeIdeal, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;

/// Largest `l` tried before giving up.
pub fn step_cap(s: &NumericalSemigroup) -> usize {
    let m = s.multiplicity();
    (s.window_end() / m).max(m + 1) as usize
}

fn to_semigroup(set: &RelativeIdeal) -> NumericalSemigroup {
    let m = set.parent().multiplicity();
    let mut gens = vec![m];
    gens.extend(set.residue_minima().iter().copied().filter(|&v| v > 0));
    NumericalSemigroup::from_generators(&gens).expect("contains the parent")
}

/// `S'` as the stabilized union of `lM - lM`, with the `l` where it settled.
pub fn blowup_by_limit(s: &NumericalSemigroup) -> Result<(NumericalSemigroup, usize)> {
    let m = s.multiplicity();
    let big_m = RelativeIdeal::maximal(s);
    let mut power = big_m.clone();
    for l in 1..=step_cap(s) {
        let next = power.sum(&big_m)?;
        if next == power.shift(m) {
            let stable = power.difference(&power)?;
            return Ok((to_semigroup(&stable), l));
        }
        power = next;
    }
    Err(Error::StabilizationFailure {
        what: "lM - lM",
        cap: step_cap(s),
    })
}

/// `E'` as the stabilized union of `(E + (l-1)M) - lM`, as a set of integers
/// (an ideal of the parent `S`, which is contained in `S'`).
pub fn blowup_ideal_by_limit(e: &SemigroupIdeal) -> Result<(RelativeIdeal, usize)> {
    let s = e.parent();
    let m = s.multiplicity();
    let big_m = RelativeIdeal::maximal(s);
    let mut power = big_m.clone(); // lM
    let mut shifted = e.as_relative().clone(); // E + (l-1)M
    for l in 1..=step_cap(s) {
        let next_power = power.sum(&big_m)?;
        let next_shifted = shifted.sum(&big_m)?;
        if next_power == power.shift(m) && next_shifted == shifted.shift(m) {
            return Ok((shifted.difference(&power)?, l));
        }
        power = next_power;
        shifted = next_shifted;
    }
    Err(Error::StabilizationFailure {
        what: "(E + (l-1)M) - lM",
        cap: step_cap(s),
    })
}
