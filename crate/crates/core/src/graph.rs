//! Circulant graphs `G(n; S)`, their symbols, and the divisor-set description
//! of the integral ones.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{self, gcd, gcd_all};
use crate::residue::ResidueSet;

/// Connection set of a circulant graph: residues in `1..n`, closed under
/// negation mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymbolSet {
    n: u64,
    members: Vec<u64>,
}

impl SymbolSet {
    pub fn new<I: IntoIterator<Item = u64>>(n: u64, members: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive);
        }
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Duplicate(w[0]));
            }
        }
        if let Some(&m) = members.iter().find(|&&m| m == 0 || m >= n) {
            return Err(Error::SymbolOutOfRange { member: m, n });
        }
        for &m in &members {
            let neg = n - m;
            if members.binary_search(&neg).is_err() {
                return Err(Error::NotNegationClosed {
                    present: m,
                    missing: neg,
                    n,
                });
            }
        }
        Ok(Self { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: u64, members: Vec<u64>) -> Self {
        debug_assert!(Self::new(n, members.iter().copied()).is_ok());
        Self { n, members }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn to_residue_set(&self) -> ResidueSet {
        ResidueSet::from_residues(self.n, self.members.iter().copied())
            .expect("symbol members are below n")
    }
}

/// A set `D` of proper divisors of `n` (each `d ≤ n/2`), naming the integral
/// circulant whose symbol is the union of the gcd classes `G_n(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DivisorSet {
    n: u64,
    members: Vec<u64>,
}

impl DivisorSet {
    pub fn new<I: IntoIterator<Item = u64>>(n: u64, members: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive);
        }
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Duplicate(w[0]));
            }
        }
        for &d in &members {
            if d == 0 {
                return Err(Error::NonPositive);
            }
            if !n.is_multiple_of(d) {
                return Err(Error::NotADivisor { d, n });
            }
            if d > n / 2 {
                return Err(Error::DivisorTooLarge { d, n });
            }
        }
        Ok(Self { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: u64, members: Vec<u64>) -> Self {
        Self { n, members }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The dual view `F = {n/d : d ∈ D}`, in the order of `D`.
    pub fn fractions(&self) -> Vec<u64> {
        self.members.iter().map(|&d| self.n / d).collect()
    }

    /// `Σ_{d∈D} φ(n/d)`, the degree of the corresponding graph.
    pub fn degree(&self) -> u64 {
        self.fractions()
            .into_iter()
            .map(|f| numtheory::euler_phi(f).expect("f ≥ 1"))
            .sum()
    }

    /// `gcd(D, n) = 1`, i.e. the graph is connected.
    pub fn is_generating(&self) -> bool {
        gcd_all(self.members.iter().copied(), self.n) == 1
    }
}

/// Every proper divisor of `n`; these are exactly the `d | n` with `d ≤ n/2`.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    let mut ds = numtheory::divisors(n)?;
    ds.pop();
    Ok(ds)
}

/// `G_n(d) = {k : 1 ≤ k < n, gcd(k, n) = d}`.
pub fn gcd_class(n: u64, d: u64) -> Result<SymbolSet> {
    if n < 2 {
        return Err(Error::DivisorTooLarge { d, n });
    }
    DivisorSet::new(n, [d])?;
    // k = d·m with gcd(m, n/d) = 1
    let f = n / d;
    let members = (1..f).filter(|&m| gcd(m, f) == 1).map(|m| m * d).collect();
    Ok(SymbolSet::from_sorted_unchecked(n, members))
}

/// Symbol made of the negation orbits `{s, n − s}` selected by `mask`:
/// bit `s − 1` selects the orbit of `s`, for `1 ≤ s ≤ n/2`.
pub fn symbol_from_orbit_mask(n: u64, mask: u64) -> SymbolSet {
    let mut members = Vec::new();
    for s in (1..=n / 2).filter(|s| mask >> (s - 1) & 1 == 1) {
        members.push(s);
        if 2 * s != n {
            members.push(n - s);
        }
    }
    members.sort_unstable();
    SymbolSet::from_sorted_unchecked(n, members)
}

/// Every negation-closed symbol mod `n` (there are `2^⌊n/2⌋`).
pub fn negation_closed_symbols(n: u64) -> impl Iterator<Item = SymbolSet> {
    let orbits = n / 2;
    assert!(orbits < 40, "2^{orbits} symbols is too many to list");
    (0..1u64 << orbits).map(move |mask| symbol_from_orbit_mask(n, mask))
}

/// The circulant graph `G(n; S)` on residues `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    symbol: SymbolSet,
}

impl CirculantGraph {
    pub fn new(symbol: SymbolSet) -> Self {
        Self { symbol }
    }

    pub fn from_symbol<I: IntoIterator<Item = u64>>(n: u64, members: I) -> Result<Self> {
        SymbolSet::new(n, members).map(Self::new)
    }

    /// Union of the gcd classes named by `D`.
    pub fn from_divisor_set(d: &DivisorSet) -> Self {
        let n = d.modulus();
        let mut members: Vec<u64> = d
            .members()
            .iter()
            .flat_map(|&dd| gcd_class(n, dd).expect("validated divisor").members)
            .collect();
        members.sort_unstable();
        Self {
            symbol: SymbolSet::from_sorted_unchecked(n, members),
        }
    }

    pub fn order(&self) -> u64 {
        self.symbol.n
    }

    pub fn degree(&self) -> u64 {
        self.symbol.len() as u64
    }

    pub fn symbol(&self) -> &SymbolSet {
        &self.symbol
    }

    /// The divisor set `D` with `S = ⋃ G_n(d)`, if the symbol is such a union.
    pub fn integrality_decomposition(&self) -> Option<DivisorSet> {
        let n = self.order();
        let mut ds: Vec<u64> = self.symbol.members.iter().map(|&s| gcd(s, n)).collect();
        ds.sort_unstable();
        ds.dedup();
        let expected: u64 = ds
            .iter()
            .map(|&d| numtheory::euler_phi(n / d).expect("d | n"))
            .sum();
        // S ⊆ ⋃ G_n(d) by construction, so equal sizes mean equality
        (expected == self.degree()).then(|| DivisorSet::from_sorted_unchecked(n, ds))
    }

    pub fn is_integral(&self) -> bool {
        self.integrality_decomposition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        gcd_all(self.symbol.members.iter().copied(), self.order()) == 1
    }

    /// Row `i` of the adjacency matrix: row 0 is the symbol's indicator,
    /// row `i` its cyclic shift by `i`.
    pub fn adjacency_row(&self, i: u64) -> Result<ResidueSet> {
        let n = self.order();
        if i >= n {
            return Err(Error::VertexOutOfRange { vertex: i, n });
        }
        Ok(self.symbol.to_residue_set().rotated(i))
    }

    pub fn neighbors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let n = self.order();
        self.symbol.members.iter().map(move |&s| (v + s) % n)
    }

    /// Two-colouring by breadth-first layering over every component.
    /// A graph with no edges counts as bipartite.
    pub fn is_bipartite_bfs(&self) -> bool {
        let n = self.order() as usize;
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start as u64);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u as usize].unwrap();
                for v in self.neighbors(u) {
                    match colour[v as usize] {
                        None => {
                            colour[v as usize] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}
