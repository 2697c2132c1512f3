//! Adjacency spectra of circulant graphs.
//!
//! Eigenvalues are stored by character index `j`: `λ_j = Σ_{s∈S} ω^{js}` with
//! `ω = exp(2πi/n)`, belonging to the eigenvector `(1, ω^j, …, ω^{j(n-1)})`.
//! Integral graphs get an exact integer spectrum from Ramanujan sums.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, DivisorSet};
use crate::numtheory::ramanujan_sum;

/// Tolerance for comparing numeric eigenvalues.
pub const EQ_TOL: f64 = 1e-9;
/// Clustering width when counting distinct numeric eigenvalues.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Residual bound for continued-fraction reconstruction.
pub const RECONSTRUCT_TOL: f64 = 1e-6;
/// Number of quadruples sampled when there are more than 16 distinct values.
pub const SAMPLED_QUADRUPLES: usize = 10_000;

/// Eigenvalues `λ_0, …, λ_{n-1}` in character-index order.
#[derive(Debug, Clone, PartialEq)]
pub enum Spectrum {
    Exact { n: u64, values: Vec<i64> },
    Numeric { n: u64, values: Vec<Complex64> },
}

impl Spectrum {
    pub fn order(&self) -> u64 {
        match self {
            Spectrum::Exact { n, .. } | Spectrum::Numeric { n, .. } => *n,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Spectrum::Exact { values, .. } => values.len(),
            Spectrum::Numeric { values, .. } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Spectrum::Exact { .. })
    }

    pub fn exact_values(&self) -> Option<&[i64]> {
        match self {
            Spectrum::Exact { values, .. } => Some(values),
            Spectrum::Numeric { .. } => None,
        }
    }

    /// Real parts in index order.
    pub fn real_values(&self) -> Vec<f64> {
        match self {
            Spectrum::Exact { values, .. } => values.iter().map(|&v| v as f64).collect(),
            Spectrum::Numeric { values, .. } => values.iter().map(|z| z.re).collect(),
        }
    }

    /// Real values; fails if some imaginary part exceeds [`EQ_TOL`].
    pub fn checked_real(&self) -> Result<Vec<f64>> {
        if let Spectrum::Numeric { values, .. } = self {
            if values.iter().any(|z| z.im.abs() >= EQ_TOL) {
                return Err(Error::NotReal);
            }
        }
        Ok(self.real_values())
    }

    /// Values sorted by non-increasing modulus (ties: larger value first).
    pub fn sorted_by_modulus(&self) -> Vec<f64> {
        let mut v = self.real_values();
        v.sort_by(|a, b| b.abs().total_cmp(&a.abs()).then(b.total_cmp(a)));
        v
    }

    /// Distinct eigenvalues in increasing order; numeric values are merged
    /// when closer than [`CLUSTER_TOL`].
    pub fn distinct_values(&self) -> Vec<f64> {
        match self {
            Spectrum::Exact { values, .. } => {
                let mut v = values.clone();
                v.sort_unstable();
                v.dedup();
                v.into_iter().map(|x| x as f64).collect()
            }
            Spectrum::Numeric { .. } => {
                let mut v = self.real_values();
                v.sort_by(f64::total_cmp);
                let mut out: Vec<f64> = Vec::new();
                for x in v {
                    match out.last() {
                        Some(&last) if x - last < CLUSTER_TOL => {}
                        _ => out.push(x),
                    }
                }
                out
            }
        }
    }
}

/// `λ_j = Σ_{s∈S} ω^{js}` in double precision.
pub fn eigenvalues_numeric(g: &CirculantGraph) -> Spectrum {
    let n = g.order();
    let values = (0..n)
        .map(|j| {
            g.symbol()
                .members()
                .iter()
                .map(|&s| {
                    let r = ((j as u128 * s as u128) % n as u128) as f64;
                    Complex64::from_polar(1.0, 2.0 * PI * r / n as f64)
                })
                .sum()
        })
        .collect();
    Spectrum::Numeric { n, values }
}

/// Exact eigenvalues `λ_j = Σ_{f∈F} c_f(j)` of the integral circulant named by `D`.
pub fn eigenvalues_exact(d: &DivisorSet) -> Spectrum {
    let n = d.modulus();
    let fractions = d.fractions();
    let values = (0..n)
        .map(|j| {
            fractions
                .iter()
                .map(|&f| ramanujan_sum(f, j).expect("f ≥ 1"))
                .sum()
        })
        .collect();
    Spectrum::Exact { n, values }
}

/// Exact spectrum when the graph is integral, numeric otherwise.
pub fn spectrum(g: &CirculantGraph) -> Spectrum {
    match g.integrality_decomposition() {
        Some(d) => eigenvalues_exact(&d),
        None => eigenvalues_numeric(g),
    }
}

/// Every difference ratio of an integer spectrum is rational, so this only
/// checks that the spectrum is exact.
pub fn ratio_condition(spec: &Spectrum) -> Result<bool> {
    match spec {
        Spectrum::Exact { .. } => Ok(true),
        Spectrum::Numeric { .. } => Err(Error::NotExact),
    }
}

/// Continued-fraction reconstruction of `x` as `p/q` with `q ≤ max_den`.
///
/// The expansion stops once the remaining fractional part drops below
/// [`RECONSTRUCT_TOL`]; the result must also lie within that distance of `x`.
/// Returns `None` if the denominator bound is exceeded first.
pub fn rational_reconstruction(x: f64, max_den: u64) -> Option<(i64, u64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rem = x;
    for _ in 0..64 {
        let a = rem.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i128;
        let (h2, k2) = (a * h1 + h0, a * k1 + k0);
        if k2 > max_den as i128 {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = rem - a as f64;
        if frac < RECONSTRUCT_TOL {
            let approx = h1 as f64 / k1 as f64;
            return ((x - approx).abs() < RECONSTRUCT_TOL).then_some((h1 as i64, k1 as u64));
        }
        rem = 1.0 / frac;
    }
    None
}

/// Heuristic probe of the rational-ratio condition on a numeric spectrum:
/// true iff every sampled ratio `(λ_i − λ_j)/(λ_r − λ_s)` of distinct
/// eigenvalues has a rational reconstruction with denominator at most
/// `max_den`.
///
/// All quadruples are tried when there are at most 16 distinct eigenvalues;
/// otherwise [`SAMPLED_QUADRUPLES`] are drawn from a generator seeded with
/// `seed`. A `false` here is evidence of irrationality, not a proof.
pub fn ratio_condition_numeric_seeded(spec: &Spectrum, max_den: u64, seed: u64) -> Result<bool> {
    spec.checked_real()?;
    let vals = spec.distinct_values();
    let m = vals.len();
    if m < 4 {
        return Err(Error::TooFewDistinct { found: m });
    }
    let rational = |i: usize, j: usize, r: usize, s: usize| {
        if r == s {
            return true;
        }
        rational_reconstruction((vals[i] - vals[j]) / (vals[r] - vals[s]), max_den).is_some()
    };
    if m <= 16 {
        for i in 0..m {
            for j in 0..m {
                for r in 0..m {
                    for s in 0..m {
                        if !rational(i, j, r, s) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_QUADRUPLES {
            let (i, j, r, s) = (
                rng.gen_range(0..m),
                rng.gen_range(0..m),
                rng.gen_range(0..m),
                rng.gen_range(0..m),
            );
            if !rational(i, j, r, s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`ratio_condition_numeric_seeded`] with seed 0.
pub fn ratio_condition_numeric(spec: &Spectrum, max_den: u64) -> Result<bool> {
    ratio_condition_numeric_seeded(spec, max_den, 0)
}

/// A connected `k`-regular graph is bipartite iff `−k` is an eigenvalue.
pub fn is_bipartite_spectral(spec: &Spectrum, k: u64) -> bool {
    match spec {
        Spectrum::Exact { values, .. } => values.iter().any(|&v| v == -(k as i64)),
        Spectrum::Numeric { values, .. } => values
            .iter()
            .any(|z| (z.re + k as f64).abs() < EQ_TOL && z.im.abs() < EQ_TOL),
    }
}

/// Smallest `ℓ0` in `0..n` such that `2ℓ0/f` is an odd integer for every
/// `f = n/d`, `d ∈ D`; `None` for odd `n` or when no such residue exists.
pub fn bipartite_divisor_test(d: &DivisorSet) -> Option<u64> {
    let n = d.modulus();
    if n % 2 == 1 || d.is_empty() {
        return None;
    }
    let fractions = d.fractions();
    (0..n).find(|&l| {
        fractions
            .iter()
            .all(|&f| (2 * l) % f == 0 && ((2 * l) / f) % 2 == 1)
    })
}
