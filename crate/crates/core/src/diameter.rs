//! Diameters of circulant graphs.
//!
//! With `T = S ∪ {0}`, the vertices within distance `i` of 0 form the sumset
//! `iT`, so the diameter is the least `i` with `iT = Z_n`. A BFS from vertex 0
//! serves as an independent check (circulants are vertex-transitive).

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, DivisorSet};
use crate::numtheory::{gcd_all, is_prime};
pub use crate::residue::ResidueSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u64),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u64> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Finite diameters serialize as numbers, infinite as `null`.
impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d),
            Diameter::Infinite => s.serialize_none(),
        }
    }
}

/// Iterates `T, 2T, 3T, …` until the sequence stops growing. The last entry
/// is either all of `Z_n` or a proper fixed point.
pub fn sumset_iterates(g: &CirculantGraph) -> Vec<ResidueSet> {
    let mut t = g.symbol().to_residue_set();
    t.insert(0);
    let mut out = vec![t.clone()];
    loop {
        let last = out.last().unwrap();
        if last.is_full() {
            return out;
        }
        let next = last.sumset(&t).expect("same modulus");
        if next.len() == last.len() {
            return out;
        }
        out.push(next);
    }
}

/// Least `i` with `iT = Z_n`; `Infinite` for disconnected graphs.
pub fn diameter_sumset(g: &CirculantGraph) -> Diameter {
    if g.order() == 1 {
        return Diameter::Finite(0);
    }
    let iterates = sumset_iterates(g);
    if iterates.last().unwrap().is_full() {
        Diameter::Finite(iterates.len() as u64)
    } else {
        Diameter::Infinite
    }
}

/// Eccentricity of vertex 0 by breadth-first search.
pub fn diameter_bfs(g: &CirculantGraph) -> Diameter {
    let n = g.order() as usize;
    let mut dist = vec![u64::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u64]);
    let mut reached = 1;
    let mut ecc = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        ecc = ecc.max(du);
        for v in g.neighbors(u) {
            if dist[v as usize] == u64::MAX {
                dist[v as usize] = du + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached == n {
        Diameter::Finite(ecc)
    } else {
        Diameter::Infinite
    }
}

/// Size of the smallest `E ⊆ D` with `gcd(E, n) = 1`.
pub fn generator_number(d: &DivisorSet) -> Result<u64> {
    let n = d.modulus();
    let g = gcd_all(d.members().iter().copied(), n);
    if g != 1 {
        return Err(Error::NotGenerating { n, gcd: g });
    }
    if n == 1 {
        return Ok(0);
    }
    let members = d.members();
    (1..=members.len())
        .find(|&size| has_generating_subset(members, size, 0, n))
        .map(|size| size as u64)
        .ok_or(Error::NotGenerating { n, gcd: g })
}

fn has_generating_subset(members: &[u64], size: usize, start: usize, acc: u64) -> bool {
    if size == 0 {
        return acc == 1;
    }
    (start..=members.len() - size).any(|i| {
        let next = crate::numtheory::gcd(acc, members[i]);
        has_generating_subset(members, size - 1, i + 1, next)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub n: u64,
    #[serde(rename = "D")]
    pub divisor_set: Vec<u64>,
    pub diameter: Diameter,
    pub t: u64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl DiameterReport {
    pub fn bounds_hold(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

/// Computes the diameter and `t` and checks `t ≤ diam ≤ 2t + 1`.
pub fn check_diameter_bounds(d: &DivisorSet) -> Result<DiameterReport> {
    let t = generator_number(d)?;
    let diameter = diameter_sumset(&CirculantGraph::from_divisor_set(d));
    let (lower_ok, upper_ok) = match diameter {
        Diameter::Finite(x) => (t <= x, x <= 2 * t + 1),
        Diameter::Infinite => (true, false),
    };
    Ok(DiameterReport {
        n: d.modulus(),
        divisor_set: d.members().to_vec(),
        diameter,
        t,
        lower_ok,
        upper_ok,
    })
}

fn check_odd_primes(primes: &[u64]) -> Result<()> {
    for (i, &p) in primes.iter().enumerate() {
        if p == 2 || !is_prime(p) {
            return Err(Error::Family(format!("{p} is not an odd prime")));
        }
        if primes[..i].contains(&p) {
            return Err(Error::Family(format!("prime {p} repeated")));
        }
    }
    Ok(())
}

fn checked_product(values: impl IntoIterator<Item = u64>) -> Result<u64> {
    values
        .into_iter()
        .try_fold(1u64, |acc, v| acc.checked_mul(v))
        .ok_or(Error::Overflow("family modulus"))
}

/// `n = p_1⋯p_r`, `D = {p_1, …, p_r}` for `r ≥ 3` distinct odd primes;
/// the graph has diameter 2.
pub fn family_diam2(primes: &[u64]) -> Result<DivisorSet> {
    if primes.len() < 3 {
        return Err(Error::Family(format!(
            "part i requires r ≥ 3 primes, got {}",
            primes.len()
        )));
    }
    check_odd_primes(primes)?;
    let n = checked_product(primes.iter().copied())?;
    DivisorSet::new(n, primes.iter().copied())
}

/// `m = p_1⋯p_r`, `n = 2m²`, `D = {(m/p_i)²}` for `r ≥ 1` distinct odd
/// primes; the graph has diameter `2r + 1`.
pub fn family_diam_2r_plus_1(primes: &[u64]) -> Result<DivisorSet> {
    if primes.is_empty() {
        return Err(Error::Family("at least one prime required".into()));
    }
    check_odd_primes(primes)?;
    let m = checked_product(primes.iter().copied())?;
    let n = checked_product([2, m, m])?;
    DivisorSet::new(n, primes.iter().map(|&p| (m / p) * (m / p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(n: u64, d: &[u64]) -> DivisorSet {
        DivisorSet::new(n, d.iter().copied()).unwrap()
    }

    fn graph(d: &DivisorSet) -> CirculantGraph {
        CirculantGraph::from_divisor_set(d)
    }

    #[test]
    fn diameter_examples() {
        let c6 = CirculantGraph::from_symbol(6, [1, 5]).unwrap();
        assert_eq!(diameter_sumset(&c6), Diameter::Finite(3));
        assert_eq!(diameter_bfs(&c6), Diameter::Finite(3));
        let k4 = CirculantGraph::from_symbol(4, [1, 2, 3]).unwrap();
        assert_eq!(diameter_sumset(&k4), Diameter::Finite(1));
        let g18 = graph(&ds(18, &[1]));
        assert_eq!(diameter_sumset(&g18), Diameter::Finite(3));
        assert_eq!(diameter_bfs(&g18), Diameter::Finite(3));
        let split = CirculantGraph::from_symbol(6, [2, 4]).unwrap();
        assert_eq!(diameter_bfs(&split), Diameter::Infinite);
        assert_eq!(diameter_sumset(&split), Diameter::Infinite);
        let g105 = graph(&ds(105, &[3, 5, 7]));
        assert_eq!(diameter_bfs(&g105), Diameter::Finite(2));
        let single = CirculantGraph::from_symbol(1, []).unwrap();
        assert_eq!(diameter_sumset(&single), Diameter::Finite(0));
        assert_eq!(diameter_bfs(&single), Diameter::Finite(0));
    }

    #[test]
    fn generator_number_examples() {
        assert_eq!(generator_number(&ds(105, &[3, 5, 7])), Ok(2));
        assert_eq!(generator_number(&ds(6, &[1])), Ok(1));
        assert_eq!(generator_number(&ds(450, &[25, 9])), Ok(2));
        assert_eq!(generator_number(&ds(30, &[2, 3, 5])), Ok(2));
        assert_eq!(generator_number(&ds(30, &[6, 10, 15])), Ok(3));
        assert_eq!(
            generator_number(&ds(6, &[2])),
            Err(Error::NotGenerating { n: 6, gcd: 2 })
        );
    }

    #[test]
    fn bounds_examples() {
        let r = check_diameter_bounds(&ds(105, &[3, 5, 7])).unwrap();
        assert_eq!(
            (r.diameter, r.t, r.bounds_hold()),
            (Diameter::Finite(2), 2, true)
        );
        let r = check_diameter_bounds(&ds(450, &[9, 25])).unwrap();
        assert_eq!(
            (r.diameter, r.t, r.bounds_hold()),
            (Diameter::Finite(5), 2, true)
        );
        let r = check_diameter_bounds(&ds(6, &[1])).unwrap();
        assert_eq!(
            (r.diameter, r.t, r.bounds_hold()),
            (Diameter::Finite(3), 1, true)
        );
        assert!(check_diameter_bounds(&ds(6, &[3])).is_err());
    }

    #[test]
    fn family_constructors() {
        let d = family_diam2(&[3, 5, 7]).unwrap();
        assert_eq!((d.modulus(), d.members()), (105, &[3, 5, 7][..]));
        let d = family_diam2(&[3, 5, 11]).unwrap();
        assert_eq!((d.modulus(), d.members()), (165, &[3, 5, 11][..]));
        assert_eq!(diameter_bfs(&graph(&d)), Diameter::Finite(2));
        let d = family_diam2(&[3, 5, 7, 11]).unwrap();
        assert_eq!(d.modulus(), 1155);
        assert_eq!(diameter_bfs(&graph(&d)), Diameter::Finite(2));
        assert_eq!(
            family_diam2(&[3, 5]).unwrap_err().to_string(),
            "part i requires r ≥ 3 primes, got 2"
        );
        assert!(family_diam2(&[3, 3, 5]).is_err());
        assert!(family_diam2(&[2, 3, 5]).is_err());
        assert!(family_diam2(&[3, 5, 9]).is_err());

        let d = family_diam_2r_plus_1(&[3]).unwrap();
        assert_eq!((d.modulus(), d.members()), (18, &[1][..]));
        let d = family_diam_2r_plus_1(&[3, 5]).unwrap();
        assert_eq!((d.modulus(), d.members()), (450, &[9, 25][..]));
        assert_eq!(diameter_bfs(&graph(&d)), Diameter::Finite(5));
        let d = family_diam_2r_plus_1(&[3, 5, 7]).unwrap();
        assert_eq!((d.modulus(), d.members()), (22050, &[225, 441, 1225][..]));
        assert!(family_diam_2r_plus_1(&[5, 5]).is_err());
        assert!(family_diam_2r_plus_1(&[2]).is_err());
        assert!(family_diam_2r_plus_1(&[]).is_err());
    }

    #[test]
    fn m_not_in_four_t_for_3_5() {
        // for primes (3, 5): m = 15 is missing from 2r·T = 4T but present in 5T
        let g = graph(&family_diam_2r_plus_1(&[3, 5]).unwrap());
        let iterates = sumset_iterates(&g);
        assert_eq!(iterates.len(), 5);
        assert!(!iterates[3].contains(15));
        assert!(iterates[4].contains(15));
    }

    #[test]
    fn iterates_grow_strictly() {
        for symbol in [vec![1u64, 11], vec![3, 9], vec![2, 5, 7, 10]] {
            let g = CirculantGraph::from_symbol(12, symbol).unwrap();
            let it = sumset_iterates(&g);
            for w in it.windows(2) {
                assert!(w[0].is_subset(&w[1]) && w[0].len() < w[1].len());
            }
        }
    }
}
