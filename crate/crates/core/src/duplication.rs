//! Numerical duplication `S ⋈^b E = 2·S ∪ (2·E + b)` and ideal sumsets.
//!
//! Two different operations share the "2E" notation: `duplicate` doubles the
//! elements of `E`, while `sumset_shift` forms the ideal sum `E + E + ... + b`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{RelativeIdeal, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;

/// A validated triple `(S, E, b)` with `b` odd and in `S`.
#[derive(Debug, Clone)]
pub struct DuplicationInput {
    semigroup: NumericalSemigroup,
    ideal: SemigroupIdeal,
    b: i64,
}

impl DuplicationInput {
    pub fn new(ideal: SemigroupIdeal, b: i64) -> Result<Self> {
        if b.rem_euclid(2) == 0 {
            return Err(Error::EvenB(b));
        }
        let semigroup = ideal.parent().clone();
        if !semigroup.contains(b) {
            return Err(Error::BNotInS(b));
        }
        Ok(DuplicationInput {
            semigroup,
            ideal,
            b,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn ideal(&self) -> &SemigroupIdeal {
        &self.ideal
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `{2n_i} ∪ {2e_j + b}` in the order the construction lists them.
    pub fn generator_candidates(&self) -> Vec<i64> {
        let mut gens: Vec<i64> = self.semigroup.generators().iter().map(|n| 2 * n).collect();
        gens.extend(self.ideal.generators().iter().map(|e| 2 * e + self.b));
        gens
    }
}

/// `S ⋈^b E`, generated by `2n_1, ..., 2n_ν, 2e_1 + b, ..., 2e_r + b`.
pub fn duplicate(input: &DuplicationInput) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&input.generator_candidates())
        .expect("an odd generator makes the duplication coprime")
}

/// `kE + b`: every sum of `k` elements of `E`, shifted by `b`.
pub fn sumset_shift(e: &SemigroupIdeal, k: usize, b: i64) -> RelativeIdeal {
    e.as_relative().multiple(k.max(1)).shift(b)
}

/// Apéry set of the duplication with respect to `2m`, as predicted from the
/// Apéry sets of `S` and `E`: `{2δ_i} ∪ {2β_i + b}`, indexed by residue.
pub fn predicted_apery(input: &DuplicationInput) -> Vec<i64> {
    let m2 = 2 * input.semigroup.multiplicity();
    let mut out = vec![0; m2 as usize];
    let ideal_apery = input.ideal.apery_m();
    let values = input
        .semigroup
        .apery()
        .iter()
        .map(|d| 2 * d)
        .chain(ideal_apery.iter().map(|x| 2 * x + input.b));
    for v in values {
        out[(v % m2) as usize] = v;
    }
    out
}

/// Checks the order transfer between `S` and `T = S ⋈^b E` on `[0, window]`:
/// `ord_T(2s) = ord_S(s)` for every `s ∈ S`, and every maximal factorization
/// of an odd `t ∈ T` with `t <= 2·window + b` uses exactly one odd generator.
pub fn order_transfer_check(input: &DuplicationInput, window: i64) -> bool {
    let s = &input.semigroup;
    let t = duplicate(input);
    let even_ok = (0..=window)
        .filter(|&z| s.contains(z))
        .all(|z| t.order(2 * z) == s.order(z));
    if !even_ok {
        return false;
    }
    let odd_gens: BTreeSet<usize> = t
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| *g % 2 == 1)
        .map(|(i, _)| i)
        .collect();
    (1..=2 * window + input.b)
        .step_by(2)
        .filter(|&z| t.contains(z))
        .all(|z| {
            let ord = t.order(z).expect("member");
            t.factorizations(z)
                .iter()
                .filter(|f| f.length == ord)
                .all(|f| odd_gens.iter().map(|&i| f.coeffs[i]).sum::<u32>() == 1)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(s: &[i64], e: &[i64], b: i64) -> DuplicationInput {
        let s = NumericalSemigroup::from_generators(s).unwrap();
        let e = SemigroupIdeal::from_generators(&s, e).unwrap();
        DuplicationInput::new(e, b).unwrap()
    }

    #[test]
    fn rejects_bad_b() {
        let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        let e = SemigroupIdeal::from_generators(&s, &[3, 8]).unwrap();
        assert_eq!(
            DuplicationInput::new(e.clone(), 4).unwrap_err(),
            Error::EvenB(4)
        );
        assert_eq!(DuplicationInput::new(e, 5).unwrap_err(), Error::BNotInS(5));
    }

    #[test]
    fn known_duplications() {
        assert_eq!(duplicate(&input(&[3, 4], &[3, 8], 3)).generators(), &[6, 8, 9, 19]);
        assert_eq!(
            duplicate(&input(&[10, 11, 12, 13], &[10, 11, 12], 11)).generators(),
            &[20, 22, 24, 26, 31, 33, 35]
        );
        assert_eq!(duplicate(&input(&[4, 5], &[5], 5)).generators(), &[8, 10, 15]);
        assert_eq!(
            duplicate(&input(&[5, 6, 7], &[5, 13], 5)).generators(),
            &[10, 12, 14, 15, 31]
        );
        assert_eq!(
            duplicate(&input(&[6, 7, 22], &[6, 21], 7)).generators(),
            &[12, 14, 19, 44, 49]
        );
    }

    #[test]
    fn apery_of_duplication() {
        let i = input(&[5, 14, 17], &[14, 20, 22], 17);
        let t = duplicate(&i);
        let expected = vec![0, 61, 62, 73, 34, 45, 56, 57, 28, 79];
        assert_eq!(t.apery_set(10).unwrap(), expected);
        assert_eq!(predicted_apery(&i), expected);
    }

    #[test]
    fn sumsets() {
        let s = NumericalSemigroup::from_generators(&[4, 5]).unwrap();
        let e1 = SemigroupIdeal::from_generators(&s, &[5, 8]).unwrap();
        let two = sumset_shift(&e1, 2, 5);
        assert_eq!(two.minimal_generators(), vec![15, 18, 21]);
        assert!(two.contains(15));
        assert_eq!(sumset_shift(&e1, 1, 0), *e1.as_relative());
        let e2 = SemigroupIdeal::from_generators(&s, &[5]).unwrap();
        let two = sumset_shift(&e2, 2, 5);
        assert_eq!(two.minimal_generators(), vec![15]);
    }

    #[test]
    fn order_transfer() {
        assert!(order_transfer_check(&input(&[3, 4], &[3, 8], 3), 40));
        assert!(order_transfer_check(&input(&[5, 14, 17], &[14, 20, 22], 17), 80));
        assert!(order_transfer_check(&input(&[3, 4], &[3, 8], 3), 0));
    }
}
