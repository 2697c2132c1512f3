use std::collections::VecDeque;

use circulant::extremal::enumerate_integral;
use circulant::graph::{
    gcd_class, negation_closed_symbols, proper_divisors, symbol_from_orbit_mask,
};
use circulant::numtheory::{euler_phi, factorize, gcd, moebius};
use circulant::{CirculantGraph, DivisorSet, SymbolSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn reachable_all(g: &CirculantGraph) -> bool {
    let n = g.order() as usize;
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0u64]);
    while let Some(u) = q.pop_front() {
        for &s in g.symbol().members() {
            let v = ((u + s) % g.order()) as usize;
            if !seen[v] {
                seen[v] = true;
                q.push_back(v as u64);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

#[test]
fn gcd_classes_partition_and_are_negation_closed() {
    for n in 2..=200u64 {
        let mut covered = vec![0u32; n as usize];
        for d in proper_divisors(n).unwrap() {
            let class = gcd_class(n, d).unwrap();
            assert_eq!(class.len() as u64, euler_phi(n / d).unwrap());
            for &k in class.members() {
                covered[k as usize] += 1;
                assert!(class.contains(n - k));
            }
        }
        assert_eq!(covered[0], 0);
        assert!(covered[1..].iter().all(|&c| c == 1), "n={n}");
    }
}

#[test]
fn decomposition_round_trips_every_divisor_set() {
    for n in 2..=200u64 {
        let ds = proper_divisors(n).unwrap();
        for mask in 0u32..(1 << ds.len()) {
            let members: Vec<u64> = (0..ds.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ds[i])
                .collect();
            let d = DivisorSet::new(n, members).unwrap();
            let g = CirculantGraph::from_divisor_set(&d);
            assert_eq!(g.degree(), d.degree());
            assert_eq!(g.integrality_decomposition().as_ref(), Some(&d));
        }
    }
}

#[test]
fn deleting_an_orbit_breaks_integrality() {
    for n in 3..=120u64 {
        for c in enumerate_integral(n) {
            let g = CirculantGraph::from_divisor_set(&c.divisors);
            for &s in g.symbol().members() {
                let class_size = euler_phi(n / gcd(s, n)).unwrap();
                let orbit_size = if 2 * s == n { 1 } else { 2 };
                if class_size == orbit_size {
                    // removing the orbit removes the whole class; still a union
                    continue;
                }
                let rest: Vec<u64> = g
                    .symbol()
                    .members()
                    .iter()
                    .copied()
                    .filter(|&x| x != s && x != n - s)
                    .collect();
                let h = CirculantGraph::from_symbol(n, rest).unwrap();
                assert!(h.integrality_decomposition().is_none(), "n={n} s={s}");
            }
        }
    }
}

#[test]
fn connectivity_criterion_matches_reachability() {
    for n in 1..=20u64 {
        for s in negation_closed_symbols(n) {
            let g = CirculantGraph::new(s);
            assert_eq!(g.is_connected(), reachable_all(&g), "{g:?}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 21..=60u64 {
        for _ in 0..500 {
            let g = CirculantGraph::new(symbol_from_orbit_mask(
                n,
                rng.gen::<u64>() & ((1 << (n / 2)) - 1),
            ));
            assert_eq!(g.is_connected(), reachable_all(&g), "{g:?}");
        }
    }
}

#[test]
fn adjacency_is_symmetric_circulant_with_zero_diagonal() {
    for n in [1u64, 2, 7, 12, 65, 126] {
        let full = (1u64 << (n / 2)) - 1;
        for mask in [0u64, 1, 5, 0b1011, full] {
            let g = CirculantGraph::new(symbol_from_orbit_mask(n, mask & full));
            let rows: Vec<Vec<bool>> = (0..n)
                .map(|i| g.adjacency_row(i).unwrap().to_bits())
                .collect();
            for (i, row) in rows.iter().enumerate() {
                assert!(!row[i]);
                for (j, &adjacent) in row.iter().enumerate() {
                    assert_eq!(adjacent, rows[j][i]);
                    let diff = (j + n as usize - i) % n as usize;
                    assert_eq!(adjacent, g.symbol().contains(diff as u64));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn factorization_reconstructs(n in 1u64..=(1 << 40)) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.product(), n);
        for w in f.factors().windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for p in f.primes() {
            prop_assert!(circulant::numtheory::is_prime(p));
        }
    }

    #[test]
    fn phi_and_mu_are_multiplicative(a in 1u64..=1000, b in 1u64..=1000) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
        prop_assert_eq!(moebius(a * b).unwrap(), moebius(a).unwrap() * moebius(b).unwrap());
    }

    #[test]
    fn symbol_validation_accepts_exactly_closed_sets(n in 1u64..40, raw in proptest::collection::btree_set(1u64..40, 0..10)) {
        let members: Vec<u64> = raw.into_iter().filter(|&s| s < n).collect();
        let closed = members.iter().all(|&s| members.contains(&(n - s)));
        prop_assert_eq!(SymbolSet::new(n, members).is_ok(), closed);
    }
}
