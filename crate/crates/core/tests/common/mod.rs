//! Brute-force reference implementations. Nothing here calls the library
//! beyond reading generator lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Exceeds the Frobenius number, which is at most `(a_1 - 1)(a_k - 1) - 1`.
pub fn frobenius_bound(gens: &[i64]) -> i64 {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    lo * hi
}

/// Membership table of `⟨gens⟩` on `0..=upto`.
pub fn members(gens: &[i64], upto: i64) -> Vec<bool> {
    let mut t = vec![false; (upto + 1) as usize];
    t[0] = true;
    for z in 1..=upto {
        t[z as usize] = gens.iter().any(|&g| g <= z && t[(z - g) as usize]);
    }
    t
}

pub fn frobenius(gens: &[i64]) -> i64 {
    let t = members(gens, frobenius_bound(gens));
    (0..t.len()).rev().find(|&z| !t[z]).map_or(-1, |z| z as i64)
}

pub fn gaps(gens: &[i64]) -> Vec<i64> {
    let t = members(gens, frobenius_bound(gens));
    (0..t.len() as i64).filter(|&z| !t[z as usize]).collect()
}

/// Every coefficient vector of `z` over `gens`, by nested recursion.
pub fn factorizations(gens: &[i64], z: i64) -> Vec<Vec<u32>> {
    fn go(gens: &[i64], i: usize, rest: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut c = 0;
        while c as i64 * gens[i] <= rest {
            cur.push(c);
            go(gens, i + 1, rest - c as i64 * gens[i], cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    if z >= 0 {
        go(gens, 0, z, &mut Vec::new(), &mut out);
    }
    out
}

pub fn length_set(gens: &[i64], z: i64) -> BTreeSet<u32> {
    factorizations(gens, z).iter().map(|f| f.iter().sum()).collect()
}

pub fn max_length(gens: &[i64], z: i64) -> Option<u32> {
    length_set(gens, z).into_iter().next_back()
}

/// Least member of each residue class mod `n`.
pub fn apery(gens: &[i64], n: i64) -> Vec<i64> {
    let top = frobenius_bound(gens) + n;
    let t = members(gens, top);
    (0..n)
        .map(|r| (0..).map(|k| r + k * n).find(|&z| t[z as usize]).unwrap())
        .collect()
}

/// Minimal generators of a semigroup whose table runs past twice its largest
/// generator.
pub fn minimal_generators(t: &[bool]) -> Vec<i64> {
    (1..t.len())
        .filter(|&z| t[z] && !(1..z).any(|x| t[x] && t[z - x]))
        .map(|z| z as i64)
        .collect()
}

pub fn is_symmetric(gens: &[i64]) -> bool {
    let f = frobenius(gens);
    let t = members(gens, f.max(0));
    (0..=f).all(|x| t[x as usize] != t[(f - x) as usize])
}

/// Generators of the blowup: `m` and `n_i - m`.
pub fn blowup_gens(gens: &[i64]) -> Vec<i64> {
    let m = *gens.iter().min().unwrap();
    let mut out = vec![m];
    out.extend(gens.iter().map(|&n| n - m).filter(|&d| d > 0));
    out
}

/// `(a, b)` microinvariants of a semigroup.
pub fn ab(gens: &[i64]) -> (Vec<u32>, Vec<u32>) {
    let m = *gens.iter().min().unwrap();
    let w = apery(gens, m);
    let wp = apery(&blowup_gens(gens), m);
    let a = w.iter().zip(&wp).map(|(x, y)| ((x - y) / m) as u32).collect();
    let b = w.iter().map(|&x| max_length(gens, x).unwrap()).collect();
    (a, b)
}

/// Membership of `egens + ⟨sgens⟩` on `lo..=hi` (negative shifts allowed).
pub fn ideal_contains(sgens: &[i64], egens: &[i64], z: i64) -> bool {
    let top = z - egens.iter().min().unwrap();
    if top < 0 {
        return false;
    }
    let t = members(sgens, top);
    egens.iter().any(|&e| z - e >= 0 && t[(z - e) as usize])
}

pub fn ideal_apery(sgens: &[i64], egens: &[i64], n: i64) -> Vec<i64> {
    let ap = apery(sgens, n);
    (0..n)
        .map(|r| {
            egens
                .iter()
                .map(|&e| e + ap[(r - e).rem_euclid(n) as usize])
                .min()
                .unwrap()
        })
        .collect()
}

/// `ord_E(z) = max_j (1 + ord_S(z - e_j))` over generators with `z - e_j ∈ S`.
pub fn ideal_order(sgens: &[i64], egens: &[i64], z: i64) -> Option<u32> {
    egens
        .iter()
        .filter_map(|&e| max_length(sgens, z - e).map(|l| l + 1))
        .max()
}

pub fn ideal_ab(sgens: &[i64], egens: &[i64]) -> (Vec<u32>, Vec<u32>) {
    let m = *sgens.iter().min().unwrap();
    let alpha = ideal_apery(sgens, egens, m);
    let shifted: Vec<i64> = egens.iter().map(|e| e - m).collect();
    let alpha_p = ideal_apery(&blowup_gens(sgens), &shifted, m);
    let a = alpha.iter().zip(&alpha_p).map(|(x, y)| ((x - y) / m) as u32).collect();
    let b = alpha
        .iter()
        .map(|&x| ideal_order(sgens, egens, x).unwrap())
        .collect();
    (a, b)
}

/// Minimal generators of `2S ∪ (2E + b)`.
pub fn duplication_gens(sgens: &[i64], egens: &[i64], b: i64) -> Vec<i64> {
    let m = *sgens.iter().min().unwrap();
    let top = 2 * (frobenius_bound(sgens) + egens.iter().max().unwrap() + m) + b + 2;
    let half = members(sgens, top);
    let t: Vec<bool> = (0..=top)
        .map(|z| {
            if z % 2 == 0 {
                half[(z / 2) as usize]
            } else {
                let h = (z - b) / 2;
                z >= b && egens.iter().any(|&e| h - e >= 0 && half[(h - e) as usize])
            }
        })
        .collect();
    minimal_generators(&t)
}

/// Every numerical semigroup of genus at most `g`, as sorted gap lists, by
/// testing every subset of `1..2g` for closure of its complement.
pub fn semigroups_by_gaps(g: usize) -> Vec<Vec<i64>> {
    let top = (2 * g).saturating_sub(1) as i64;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << top) {
        if mask.count_ones() as usize > g {
            continue;
        }
        let gap = |z: i64| z >= 1 && z <= top && mask >> (z - 1) & 1 == 1;
        let closed = (1..=top).filter(|&x| !gap(x)).all(|x| {
            (x..=top - x).filter(|&y| !gap(y)).all(|y| !gap(x + y))
        });
        if closed {
            out.push((1..=top).filter(|&z| gap(z)).collect());
        }
    }
    out
}
