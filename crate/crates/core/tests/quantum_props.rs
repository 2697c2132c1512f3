use std::f64::consts::PI;

use circulant::extremal::enumerate_integral;
use circulant::quantum::{
    distance_from_scalar, evolution_operator, is_scalar_at, period, pst_search,
    transfer_amplitude_exact, RationalAngle,
};
use circulant::{CirculantGraph, DivisorSet};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn sample_graphs() -> Vec<CirculantGraph> {
    let mut out = vec![
        CirculantGraph::from_symbol(5, [1, 4]).unwrap(),
        CirculantGraph::from_symbol(7, [1, 6]).unwrap(),
        CirculantGraph::from_symbol(10, [2, 3, 7, 8]).unwrap(),
    ];
    for (n, d) in [
        (4, vec![1]),
        (6, vec![1, 2]),
        (12, vec![1, 4, 6]),
        (30, vec![1, 5]),
    ] {
        out.push(CirculantGraph::from_divisor_set(
            &DivisorSet::new(n, d).unwrap(),
        ));
    }
    out
}

#[test]
fn unitarity_and_group_law() {
    let times = [0.0, 0.3, 1.0, PI / 3.0, 2.5, 7.0];
    for g in sample_graphs() {
        let n = g.order() as usize;
        let id = DMatrix::<Complex64>::identity(n, n);
        for &s in &times {
            let us = evolution_operator(&g, s).unwrap();
            assert!(max_abs(&(&us * us.adjoint() - &id)) < 1e-9);
            for &t in &times {
                let ut = evolution_operator(&g, t).unwrap();
                let ust = evolution_operator(&g, s + t).unwrap();
                assert!(max_abs(&(&us * &ut - ust)) < 1e-8);
            }
            assert!(us.iter().all(|z| z.norm() <= 1.0 + 1e-12));
        }
    }
}

#[test]
fn operator_matches_matrix_exponential_series() {
    // independent route: truncated Taylor series of exp(−iAt)
    let g = CirculantGraph::from_symbol(7, [1, 3, 4, 6]).unwrap();
    let n = 7;
    let a = DMatrix::from_fn(n, n, |i, j| {
        let diff = (j + n - i) % n;
        Complex64::new(
            if g.symbol().contains(diff as u64) {
                1.0
            } else {
                0.0
            },
            0.0,
        )
    });
    let t = 0.7;
    let step = a * Complex64::new(0.0, -t);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..60 {
        term = &term * &step / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    let u = evolution_operator(&g, t).unwrap();
    assert!(max_abs(&(u - sum)) < 1e-10);
}

/// Minimum of `min_θ ‖U(t) − e^{iθ}I‖_max` over the 10^4-point grid on
/// (0, 20π], skipping grid points below `t_min`.
fn grid_min(g: &CirculantGraph, t_min: f64) -> f64 {
    let steps = 10_000;
    (1..=steps)
        .map(|i| 20.0 * PI * i as f64 / steps as f64)
        .filter(|&t| t >= t_min)
        .map(|t| distance_from_scalar(g, t))
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn non_integral_walks_stay_away_from_scalars() {
    let c5 = CirculantGraph::from_symbol(5, [1, 4]).unwrap();
    let c7 = CirculantGraph::from_symbol(7, [1, 6]).unwrap();
    // U(t) → I as t → 0, so the first grid point alone is within 2π/1000
    assert!(grid_min(&c7, 0.0) < 0.01);
    assert!(grid_min(&c7, PI / 4.0) > 0.1);
    // C_5 nearly recurs at t ≈ 18.78π (21/√5 · 2π); the grid minimum there is 0.0267
    let m5 = grid_min(&c5, PI / 4.0);
    assert!(m5 > 0.02 && m5 < 0.1, "{m5}");
    // an integral graph hits its period on the grid
    let c6 = CirculantGraph::from_symbol(6, [1, 5]).unwrap();
    assert!(grid_min(&c6, PI / 4.0) < 1e-9);
}

#[test]
fn scalar_distance_matches_dense_operator() {
    for g in sample_graphs() {
        for t in [0.4, 1.9, 2.0 * PI] {
            let u = evolution_operator(&g, t).unwrap();
            let phase = u[(0, 0)] / u[(0, 0)].norm();
            let n = u.nrows();
            let diff = u - DMatrix::<Complex64>::identity(n, n) * phase;
            assert!((max_abs(&diff) - distance_from_scalar(&g, t)).abs() < 1e-12);
        }
    }
}

#[test]
fn exact_unit_certificate_matches_numeric_modulus() {
    for n in 2..=16u64 {
        for c in enumerate_integral(n) {
            for b in 0..n {
                for q in 1..=4u64 {
                    for p in 0..2 * q as i64 {
                        let t = RationalAngle::new(p, q).unwrap();
                        let amp = transfer_amplitude_exact(&c.divisors, 0, b, t).unwrap();
                        assert!(amp.modulus <= 1.0 + 1e-12);
                        assert_eq!(
                            amp.exact_unit,
                            (amp.modulus - 1.0).abs() < 1e-9,
                            "{c:?} b={b} t={t}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn pst_witnesses_translate() {
    for n in (2..=24u64).step_by(2) {
        for c in enumerate_integral(n) {
            if let Some(w) = pst_search(&c.divisors, 2 * n) {
                for v in 0..n {
                    let amp = transfer_amplitude_exact(&c.divisors, v, (v + w.b) % n, w.t).unwrap();
                    assert!(amp.exact_unit);
                }
                let g = CirculantGraph::from_divisor_set(&c.divisors);
                let u = evolution_operator(&g, w.t.to_f64()).unwrap();
                assert!((u[(0, w.b as usize)].norm() - 1.0).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn pst_golden_cases() {
    let c4 = DivisorSet::new(4, [1]).unwrap();
    let w = pst_search(&c4, 4).unwrap();
    assert_eq!((w.a, w.b, w.t), (0, 2, RationalAngle::new(1, 2).unwrap()));
    // the 6-cycle has no perfect state transfer at any t = πp/q with q ≤ 6
    assert_eq!(pst_search(&DivisorSet::new(6, [1]).unwrap(), 6), None);
}

#[test]
fn periods_are_minimal() {
    for n in 2..=30u64 {
        for c in enumerate_integral(n) {
            let p = period(&c.divisors).time;
            assert!(is_scalar_at(&c.divisors, p));
            // no smaller time with denominator dividing 4·q is a period
            let q = 4 * p.denom();
            let limit = p.numer() * 4;
            for k in 1..limit {
                let t = RationalAngle::new(k, q).unwrap();
                assert!(
                    !is_scalar_at(&c.divisors, t),
                    "{c:?} period {p} but scalar at {t}"
                );
            }
        }
    }
}
