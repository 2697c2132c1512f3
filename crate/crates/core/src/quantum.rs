//! Continuous-time quantum walks `U(t) = exp(−iAt)` on circulant graphs.
//!
//! For integral graphs every certificate (periodicity, perfect state
//! transfer) is decided with integer phase arithmetic: at `t = πp/q` each
//! spectral term is a root of unity of order dividing `lcm(2q, n)`. Floating
//! point only reports moduli and cross-checks the dense operator.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::enumerate_integral;
use crate::graph::{CirculantGraph, DivisorSet};
use crate::numtheory::gcd;
use crate::spectral::{eigenvalues_exact, eigenvalues_numeric};

/// Largest order for which [`evolution_operator`] builds a dense matrix.
pub const DENSE_LIMIT: u64 = 512;

/// Largest accepted denominator of a [`RationalAngle`].
pub const MAX_DENOMINATOR: u64 = 1 << 32;

/// The time `t = π·p/q`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RationalAngle {
    p: i64,
    q: u64,
}

impl RationalAngle {
    pub fn new(p: i64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Angle("zero denominator".into()));
        }
        if q > MAX_DENOMINATOR {
            return Err(Error::Angle(format!(
                "denominator {q} exceeds {MAX_DENOMINATOR}"
            )));
        }
        let g = gcd(p.unsigned_abs(), q).max(1);
        Ok(Self {
            p: p / g as i64,
            q: q / g,
        })
    }

    pub fn zero() -> Self {
        Self { p: 0, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        PI * self.p as f64 / self.q as f64
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}π", self.p)
        } else {
            write!(f, "{}π/{}", self.p, self.q)
        }
    }
}

/// Parses `p/q` or `p` as the multiple `p/q` of π.
impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p
            .parse()
            .map_err(|_| Error::Angle(format!("bad numerator {p:?}")))?;
        let q: u64 = q
            .parse()
            .map_err(|_| Error::Angle(format!("bad denominator {q:?}")))?;
        Self::new(p, q)
    }
}

fn integer_spectrum(d: &DivisorSet) -> Vec<i64> {
    eigenvalues_exact(d)
        .exact_values()
        .expect("exact spectrum")
        .to_vec()
}

/// First column of the circulant `U(t)`: `c_m = (1/n) Σ_j e^{−iλ_j t} ω^{jm}`,
/// so that `U[a][b] = c_{(a−b) mod n}`.
pub fn evolution_column(g: &CirculantGraph, t: f64) -> Vec<Complex64> {
    let n = g.order();
    let lambdas = eigenvalues_numeric(g).real_values();
    let phases: Vec<Complex64> = lambdas
        .iter()
        .map(|&l| Complex64::from_polar(1.0, -l * t))
        .collect();
    (0..n)
        .map(|m| {
            let s: Complex64 = phases
                .iter()
                .enumerate()
                .map(|(j, &e)| {
                    let r = (j as u64 * m) % n;
                    e * Complex64::from_polar(1.0, 2.0 * PI * r as f64 / n as f64)
                })
                .sum();
            s / n as f64
        })
        .collect()
}

/// Dense `U(t) = exp(−iAt)` from the spectral decomposition.
pub fn evolution_operator(g: &CirculantGraph, t: f64) -> Result<DMatrix<Complex64>> {
    let n = g.order();
    if n > DENSE_LIMIT {
        return Err(Error::DenseTooLarge {
            n,
            limit: DENSE_LIMIT,
        });
    }
    let col = evolution_column(g, t);
    let n = n as usize;
    Ok(DMatrix::from_fn(n, n, |a, b| col[(a + n - b) % n]))
}

/// `min_θ ‖U(t) − e^{iθ}I‖_max`, using that `U(t)` is circulant.
pub fn distance_from_scalar(g: &CirculantGraph, t: f64) -> f64 {
    let col = evolution_column(g, t);
    let off = col[1..].iter().map(|z| z.norm()).fold(0.0, f64::max);
    off.max(1.0 - col[0].norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransferAmplitude {
    /// All spectral terms share one phase, i.e. the modulus is exactly 1.
    pub exact_unit: bool,
    pub modulus: f64,
}

/// `p mod 2q`; phases of integer eigenvalues only depend on this.
fn reduced_numer(t: RationalAngle) -> i128 {
    (t.p as i128).rem_euclid(2 * t.q as i128)
}

/// `m = lcm(2q, n)` with the factors `m/2q` and `m/n`.
fn phase_modulus(n: u64, t: RationalAngle) -> (i128, i128, i128) {
    let two_q = 2 * t.q as i128;
    let n = n as i128;
    let g = gcd(2 * t.q, n as u64) as i128;
    let m = two_q / g * n;
    (m, n / g, two_q / g)
}

/// Phases of the terms `e^{−iλ_ℓ t} ω^{ℓ(a−b)}` as integers mod `lcm(2q, n)`.
fn term_phases(lambdas: &[i64], n: u64, diff: i64, t: RationalAngle) -> (Vec<i128>, i128) {
    let (m, time_scale, vertex_scale) = phase_modulus(n, t);
    let p = reduced_numer(t);
    let phases = lambdas
        .iter()
        .enumerate()
        .map(|(l, &lam)| {
            let v = -(lam as i128) * p * time_scale + l as i128 * diff as i128 * vertex_scale;
            v.rem_euclid(m)
        })
        .collect();
    (phases, m)
}

fn amplitude_from_phases(
    lambdas: &[i64],
    n: u64,
    diff: i64,
    t: RationalAngle,
) -> TransferAmplitude {
    let (phases, m) = term_phases(lambdas, n, diff, t);
    let exact_unit = phases.iter().all(|&p| p == phases[0]);
    let sum: Complex64 = phases
        .iter()
        .map(|&p| Complex64::from_polar(1.0, 2.0 * PI * p as f64 / m as f64))
        .sum();
    TransferAmplitude {
        exact_unit,
        modulus: sum.norm() / n as f64,
    }
}

fn is_unit_exact(lambdas: &[i64], n: u64, diff: i64, t: RationalAngle) -> bool {
    let (m, time_scale, vertex_scale) = phase_modulus(n, t);
    let p = reduced_numer(t);
    let phase = |l: usize| {
        (-(lambdas[l] as i128) * p * time_scale + l as i128 * diff as i128 * vertex_scale)
            .rem_euclid(m)
    };
    let first = phase(0);
    (1..lambdas.len()).all(|l| phase(l) == first)
}

/// `⟨a| exp(−iAt) |b⟩` at `t = πp/q`, with modulus-one decided exactly.
pub fn transfer_amplitude_exact(
    d: &DivisorSet,
    a: u64,
    b: u64,
    t: RationalAngle,
) -> Result<TransferAmplitude> {
    let n = d.modulus();
    for v in [a, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let lambdas = integer_spectrum(d);
    Ok(amplitude_from_phases(&lambdas, n, a as i64 - b as i64, t))
}

/// Whether `U(t)` is a global phase times the identity, decided exactly.
pub fn is_scalar_at(d: &DivisorSet, t: RationalAngle) -> bool {
    let two_q = 2 * t.q as i128;
    let lambdas = integer_spectrum(d);
    let ph = |l: i64| (l as i128 * reduced_numer(t)).rem_euclid(two_q);
    lambdas.iter().all(|&l| ph(l) == ph(lambdas[0]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Period {
    pub time: RationalAngle,
    /// All eigenvalues coincide, so every `t` is a period; `2π` is reported.
    pub degenerate: bool,
}

/// Least `t > 0` with `U(t)` scalar: `2π/g`, `g = gcd_j (λ_j − λ_0)`.
pub fn period(d: &DivisorSet) -> Period {
    let lambdas = integer_spectrum(d);
    let g = lambdas
        .iter()
        .map(|&l| (l - lambdas[0]).unsigned_abs())
        .fold(0, gcd);
    if g == 0 {
        Period {
            time: RationalAngle { p: 2, q: 1 },
            degenerate: true,
        }
    } else {
        Period {
            time: RationalAngle::new(2, g).unwrap(),
            degenerate: false,
        }
    }
}

/// Circulant walks are periodic exactly when the graph is integral.
pub fn is_periodic(g: &CirculantGraph) -> bool {
    g.is_integral()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PstWitness {
    pub a: u64,
    pub b: u64,
    pub t: RationalAngle,
    #[serde(skip)]
    pub fidelity: f64,
}

/// Searches pairs `(0, b)` and times `t = πp/q ∈ (0, 2π)` with `q ≤ max_q`
/// for perfect state transfer, returning the first hit in `(b, q, p)` order.
///
/// Integer spectra make `U` 2π-periodic, so larger `p` add nothing; `max_q`
/// bounds how fine a time grid the search covers.
pub fn pst_search(d: &DivisorSet, max_q: u64) -> Option<PstWitness> {
    let n = d.modulus();
    let lambdas = integer_spectrum(d);
    (1..n).into_par_iter().find_map_first(|b| {
        for q in 1..=max_q {
            for p in (1..2 * q as i64).filter(|&p| gcd(p as u64, q) == 1) {
                let t = RationalAngle { p, q };
                if is_unit_exact(&lambdas, n, -(b as i64), t) {
                    let amp = amplitude_from_phases(&lambdas, n, -(b as i64), t);
                    return Some(PstWitness {
                        a: 0,
                        b,
                        t,
                        fidelity: amp.modulus,
                    });
                }
            }
        }
        None
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodalVariant {
    /// `e^{iλ_ℓ t} = (−1)^ℓ` for all `ℓ`.
    Strict,
    /// `e^{iλ_ℓ t} = c·(−1)^ℓ` for one unit `c` and all `ℓ`.
    GlobalPhase,
}

/// Phase pattern `e^{iλ_ℓ t} = (−1)^ℓ` for even `n`, checked exactly:
/// with `t = πp/q` this reads `λ_ℓ p ≡ ℓ q (mod 2q)`.
pub fn antipodal_criterion(
    d: &DivisorSet,
    t: RationalAngle,
    variant: AntipodalVariant,
) -> Result<bool> {
    let n = d.modulus();
    if n % 2 == 1 {
        return Err(Error::Parity {
            n,
            expected: "even",
        });
    }
    let two_q = 2 * t.q as i128;
    let lambdas = integer_spectrum(d);
    let residue = |l: usize| {
        (lambdas[l] as i128 * reduced_numer(t) - l as i128 * t.q as i128).rem_euclid(two_q)
    };
    let target = match variant {
        AntipodalVariant::Strict => 0,
        AntipodalVariant::GlobalPhase => residue(0),
    };
    Ok((0..lambdas.len()).all(|l| residue(l) == target))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OddCheckReport {
    pub n: u64,
    pub max_q: u64,
    pub graphs_checked: usize,
    pub witnesses: Vec<(Vec<u64>, PstWitness)>,
    /// For each `b ≢ 0`, some `ω^{ℓb}` is not ±1.
    pub mechanism_ok: bool,
}

impl OddCheckReport {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty() && self.mechanism_ok
    }
}

/// Runs [`pst_search`] with `max_q = 2n` on every connected integral
/// circulant of odd order `n`.
pub fn no_pst_odd_check(n: u64) -> Result<OddCheckReport> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Parity {
            n,
            expected: "odd and at least 3",
        });
    }
    let max_q = 2 * n;
    let candidates = enumerate_integral(n);
    let witnesses = candidates
        .iter()
        .filter_map(|c| pst_search(&c.divisors, max_q).map(|w| (c.divisors.members().to_vec(), w)))
        .collect();
    // ω^{ℓb} = ±1 needs 2ℓb ≡ 0 (mod n); ℓ = 1 already rules it out
    let mechanism_ok = (1..n).all(|b| (0..n).any(|l| (2 * l * b) % n != 0));
    Ok(OddCheckReport {
        n,
        max_q,
        graphs_checked: candidates.len(),
        witnesses,
        mechanism_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvolutionReport {
    pub n: u64,
    #[serde(rename = "D")]
    pub divisor_set: Option<Vec<u64>>,
    pub periodic: bool,
    pub period: Option<RationalAngle>,
    pub pst: Option<PstWitness>,
}

/// Periodicity and, when `pst_max_q` is given, a PST search.
pub fn evolution_report(g: &CirculantGraph, pst_max_q: Option<u64>) -> EvolutionReport {
    let decomposition = g.integrality_decomposition();
    let period = decomposition.as_ref().map(|d| period(d).time);
    let pst = match (&decomposition, pst_max_q) {
        (Some(d), Some(q)) if g.order() > 1 => pst_search(d, q),
        _ => None,
    };
    EvolutionReport {
        n: g.order(),
        divisor_set: decomposition.map(|d| d.members().to_vec()),
        periodic: is_periodic(g),
        period,
        pst,
    }
}
