//! Enumeration of connected integral circulants and the maximum order `N(k)`
//! attainable at a given degree `k`.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{proper_divisors, DivisorSet};
use crate::numtheory::{euler_phi, gcd};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralCandidate {
    pub divisors: DivisorSet,
    pub degree: u64,
}

/// Every nonempty `D ⊆ D_n` with `gcd(D, n) = 1`, tagged with its degree.
///
/// Subsets are listed in increasing bitmask order over the sorted proper
/// divisors of `n` (bit `i` selects the `i`-th smallest).
pub fn enumerate_integral(n: u64) -> Vec<IntegralCandidate> {
    if n < 2 {
        return Vec::new();
    }
    let ds = proper_divisors(n).expect("n ≥ 2");
    let phis: Vec<u64> = ds.iter().map(|&d| euler_phi(n / d).unwrap()).collect();
    let m = ds.len();
    assert!(m < 32, "too many divisors of {n} to enumerate");
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let (mut g, mut degree) = (n, 0);
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        for i in (0..m).filter(|i| mask >> i & 1 == 1) {
            g = gcd(g, ds[i]);
            degree += phis[i];
            members.push(ds[i]);
        }
        if g == 1 {
            out.push(IntegralCandidate {
                divisors: DivisorSet::from_sorted_unchecked(n, members),
                degree,
            });
        }
    }
    out
}

/// Calls `visit` on every connected `D ⊆ D_n` of degree exactly `k`, in
/// lexicographic order of the sorted member lists. Stops when `visit`
/// returns `false`.
pub fn for_each_of_degree(n: u64, k: u64, mut visit: impl FnMut(&DivisorSet) -> bool) {
    if n < 2 {
        return;
    }
    // classes with φ(n/d) > k can never take part
    let pool: Vec<(u64, u64)> = proper_divisors(n)
        .expect("n ≥ 2")
        .into_iter()
        .map(|d| (d, euler_phi(n / d).unwrap()))
        .filter(|&(_, phi)| phi <= k)
        .collect();
    let mut stack = Vec::new();
    dfs(n, k, &pool, 0, 0, n, &mut stack, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    n: u64,
    k: u64,
    pool: &[(u64, u64)],
    start: usize,
    degree: u64,
    g: u64,
    stack: &mut Vec<u64>,
    visit: &mut impl FnMut(&DivisorSet) -> bool,
) -> bool {
    for i in start..pool.len() {
        let (d, phi) = pool[i];
        let deg = degree + phi;
        if deg > k {
            continue;
        }
        stack.push(d);
        let g2 = gcd(g, d);
        if deg == k && g2 == 1 && !visit(&DivisorSet::from_sorted_unchecked(n, stack.clone())) {
            stack.pop();
            return false;
        }
        if deg < k && !dfs(n, k, pool, i + 1, deg, g2, stack, visit) {
            stack.pop();
            return false;
        }
        stack.pop();
    }
    true
}

/// Lexicographically smallest connected `D` of order `n` and degree `k`.
pub fn witness_of_degree(n: u64, k: u64) -> Option<DivisorSet> {
    let mut found = None;
    for_each_of_degree(n, k, |d| {
        found = Some(d.clone());
        false
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub degree_k: u64,
    pub max_order: u64,
    pub witness: DivisorSet,
    pub cap: u64,
}

/// Largest `n ≤ cap` admitting a connected integral circulant of degree `k`,
/// with the lexicographically smallest witness at that order.
pub fn max_order_for_degree(k: u64, cap: u64) -> Option<ExtremalRecord> {
    (2..=cap).rev().find_map(|n| {
        witness_of_degree(n, k).map(|witness| ExtremalRecord {
            degree_k: k,
            max_order: n,
            witness,
            cap,
        })
    })
}

/// Same result as [`max_order_for_degree`], with orders checked in parallel.
pub fn max_order_for_degree_par(k: u64, cap: u64) -> Option<ExtremalRecord> {
    (2..=cap)
        .into_par_iter()
        .filter_map(|n| witness_of_degree(n, k).map(|w| (n, w)))
        .max_by_key(|(n, _)| *n)
        .map(|(n, witness)| ExtremalRecord {
            degree_k: k,
            max_order: n,
            witness,
            cap,
        })
}

/// One record per degree `2..=kmax`; `None` where nothing fits under `cap`.
pub fn degree_table(kmax: u64, cap: u64, parallel: bool) -> Vec<(u64, Option<ExtremalRecord>)> {
    (2..=kmax)
        .map(|k| {
            let rec = if parallel {
                max_order_for_degree_par(k, cap)
            } else {
                max_order_for_degree(k, cap)
            };
            (k, rec)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(c: &[IntegralCandidate]) -> Vec<Vec<u64>> {
        c.iter().map(|c| c.divisors.members().to_vec()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(members(&enumerate_integral(4)), vec![vec![1], vec![1, 2]]);
        assert_eq!(
            members(&enumerate_integral(6)),
            vec![vec![1], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
        );
        assert_eq!(members(&enumerate_integral(2)), vec![vec![1]]);
        let degs: Vec<u64> = enumerate_integral(6).iter().map(|c| c.degree).collect();
        assert_eq!(degs, vec![2, 4, 3, 3, 5]);
    }

    #[test]
    fn small_table_entries() {
        let r = max_order_for_degree(2, 200).unwrap();
        assert_eq!((r.max_order, r.witness.members()), (6, &[1][..]));
        assert_eq!(max_order_for_degree(6, 200).unwrap().max_order, 30);
        let r = max_order_for_degree(2, 4).unwrap();
        assert_eq!((r.max_order, r.witness.members()), (4, &[1][..]));
        assert_eq!(max_order_for_degree(5, 3), None);
    }

    #[test]
    fn parallel_matches_serial() {
        for k in 2..=9 {
            assert_eq!(
                max_order_for_degree(k, 120),
                max_order_for_degree_par(k, 120)
            );
        }
    }

    #[test]
    fn dfs_matches_enumeration() {
        for n in 2..=120u64 {
            for k in 1..=12u64 {
                let mut expect: Vec<Vec<u64>> = enumerate_integral(n)
                    .into_iter()
                    .filter(|c| c.degree == k)
                    .map(|c| c.divisors.members().to_vec())
                    .collect();
                expect.sort();
                let mut got = Vec::new();
                for_each_of_degree(n, k, |d| {
                    got.push(d.members().to_vec());
                    true
                });
                assert_eq!(got, expect, "n={n} k={k}");
            }
        }
    }
}
