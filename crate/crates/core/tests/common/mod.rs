//! Brute-force oracles shared by the integration tests. They work on plain
//! integer vectors and never call into the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn lee(a: u64, q: u64) -> u64 {
    a.min(q - a)
}

/// Every codeword reachable as `sum c_i r_i` with `c_i` in `Z_q`.
pub fn span(rows: &[Vec<u64>], q: u64) -> BTreeSet<Vec<u64>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut words = BTreeSet::from([vec![0; n]]);
    for row in rows {
        let mut next = BTreeSet::new();
        for w in &words {
            for c in 0..q {
                next.insert(w.iter().zip(row).map(|(&a, &b)| (a + c * b) % q).collect::<Vec<_>>());
            }
        }
        words = next;
    }
    words
}

/// `(d_H, d_L)` over the nonzero words, `None` for the zero code.
pub fn min_distances(words: &BTreeSet<Vec<u64>>, q: u64) -> Option<(u64, u64)> {
    words
        .iter()
        .filter(|w| w.iter().any(|&a| a != 0))
        .map(|w| {
            let h = w.iter().filter(|&&a| a != 0).count() as u64;
            let l = w.iter().map(|&a| lee(a, q)).sum::<u64>();
            (h, l)
        })
        .fold(None, |acc, (h, l)| match acc {
            None => Some((h, l)),
            Some((bh, bl)) => Some((bh.min(h), bl.min(l))),
        })
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian(n: u32, k: u32, p: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= p.pow(n - i) - 1;
        den *= p.pow(i + 1) - 1;
    }
    num / den
}

/// `(p, e)` with `p^e = q`.
pub fn prime_power(q: u64) -> (u64, u32) {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    (p, e)
}

/// Exponent `e` with `p^e = size`.
pub fn log_exact(size: usize, p: u64) -> u32 {
    let mut e = 0;
    let mut r = size as u64;
    while r > 1 {
        assert_eq!(r % p, 0, "{size} is not a power of {p}");
        r /= p;
        e += 1;
    }
    e
}

/// `μ_q` as an exact fraction `(numerator, denominator)`.
pub fn mu(q: u64) -> (u64, u64) {
    let total: u64 = (1..q).map(|a| lee(a, q)).sum();
    (total, q - 1)
}
