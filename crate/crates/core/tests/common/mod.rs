// Independent oracles shared by the integration tests. None of these call
// into the library's own algorithms.
#![allow(dead_code)]

use messiaen::rational::{from_frac, Rational};
use messiaen::{Dur, Rhythm};
use proptest::prelude::*;

/// Every subset of Z/12 (as membership vectors) fixed by some t in 1..=11.
pub fn brute_force_limited() -> Vec<u16> {
    let mut out = Vec::new();
    for mask in 0u16..4096 {
        let members: Vec<bool> = (0..12).map(|i| mask >> i & 1 == 1).collect();
        let fixed = (1..12).any(|t| (0..12).all(|i| members[i] == members[(i + t) % 12]));
        if fixed {
            out.push(mask);
        }
    }
    out
}

/// Number of distinct translates, by collecting them.
pub fn distinct_translates(members: &[u8]) -> usize {
    let mut seen: Vec<Vec<u8>> = Vec::new();
    for t in 0..12 {
        let mut moved: Vec<u8> = members.iter().map(|m| (m + t) % 12).collect();
        moved.sort_unstable();
        if !seen.contains(&moved) {
            seen.push(moved);
        }
    }
    seen.len()
}

/// Iterates `out[i] = seq[m[i]]` from the identity until it comes back.
pub fn order_by_iteration(mapping: &[usize]) -> u64 {
    let start: Vec<usize> = (0..mapping.len()).collect();
    let mut cur = start.clone();
    let mut k = 0;
    loop {
        cur = mapping.iter().map(|&i| cur[i]).collect();
        k += 1;
        if cur == start {
            return k;
        }
    }
}

/// All permutations of 0..n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn factorial_u128(n: u32) -> u128 {
    (1..=n as u128).product()
}

pub fn rhythm_of(values: &[(u64, u64)]) -> Rhythm {
    let durs = values.iter().map(|&(n, d)| Dur::from_frac(n, d).unwrap()).collect();
    Rhythm::new(durs, "double croche").unwrap()
}

pub fn ints(values: &[u64]) -> Rhythm {
    Rhythm::from_ints(values).unwrap()
}

pub fn dur_value() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=16, 1u64..=6)
}

pub fn rhythm_strategy(max_len: usize) -> impl Strategy<Value = Rhythm> {
    prop::collection::vec(dur_value(), 1..=max_len).prop_map(|v| rhythm_of(&v))
}

/// Palindromes built by mirroring a random half.
pub fn palindrome_strategy(max_half: usize) -> impl Strategy<Value = Rhythm> {
    (prop::collection::vec(dur_value(), 0..=max_half), prop::option::of(dur_value())).prop_filter_map(
        "nonempty",
        |(half, mid)| {
            let mut v = half.clone();
            v.extend(mid);
            v.extend(half.iter().rev());
            (!v.is_empty()).then(|| rhythm_of(&v))
        },
    )
}

pub fn ratio_strategy() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| from_frac(n, d))
}

pub fn perm_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max_n).prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
}
