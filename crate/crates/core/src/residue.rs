//! Bitset over the residues `0..n`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `Z_n` stored as a packed bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    n: u64,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(n: u64) -> Self {
        let len = (n as usize).div_ceil(WORD);
        Self {
            n,
            words: vec![0; len],
        }
    }

    pub fn full(n: u64) -> Self {
        let mut s = Self::empty(n);
        s.words.iter_mut().for_each(|w| *w = !0);
        s.mask_tail();
        s
    }

    /// Builds a set from residues, reducing nothing: every value must be `< n`.
    pub fn from_residues<I: IntoIterator<Item = u64>>(n: u64, residues: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for r in residues {
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, n });
            }
            s.insert(r);
        }
        Ok(s)
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Inserts `r`, which must be below the modulus.
    pub fn insert(&mut self, r: u64) {
        assert!(r < self.n, "residue {r} out of range mod {}", self.n);
        let r = r as usize;
        self.words[r / WORD] |= 1 << (r % WORD);
    }

    pub fn contains(&self, r: u64) -> bool {
        r < self.n && (self.words[r as usize / WORD] >> (r as usize % WORD)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.n
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((i * WORD + b) as u64)
                }
            })
        })
    }

    /// Dense boolean view of length `n`.
    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.n).map(|r| self.contains(r)).collect()
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// The translate `{(x + k) mod n : x ∈ self}`.
    pub fn rotated(&self, k: u64) -> Self {
        let mut out = Self::empty(self.n);
        self.or_rotated_into(k, &mut out.words);
        out
    }

    fn or_rotated_into(&self, k: u64, dst: &mut [u64]) {
        if self.n == 0 {
            return;
        }
        let n = self.n as usize;
        let k = (k % self.n) as usize;
        // bits below n - k move up by k, the rest wrap down by n - k
        or_shift_up(&self.words, k, dst);
        if k != 0 {
            or_shift_down(&self.words, n - k, dst);
        }
        let tail = n % WORD;
        if tail != 0 {
            *dst.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
    }

    /// Modular sumset `{(x + y) mod n : x ∈ self, y ∈ other}`.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        // rotate the larger operand by each element of the smaller one
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::empty(self.n);
        for x in small.iter() {
            large.or_rotated_into(x, &mut out.words);
        }
        Ok(out)
    }

    fn mask_tail(&mut self) {
        let tail = self.n as usize % WORD;
        if tail != 0 {
            if let Some(w) = self.words.last_mut() {
                *w &= (1u64 << tail) - 1;
            }
        }
    }
}

fn or_shift_up(src: &[u64], k: usize, dst: &mut [u64]) {
    let (wshift, bshift) = (k / WORD, k % WORD);
    for i in (wshift..dst.len()).rev() {
        let j = i - wshift;
        let mut v = src[j] << bshift;
        if bshift != 0 && j > 0 {
            v |= src[j - 1] >> (WORD - bshift);
        }
        dst[i] |= v;
    }
}

fn or_shift_down(src: &[u64], k: usize, dst: &mut [u64]) {
    let (wshift, bshift) = (k / WORD, k % WORD);
    for i in 0..dst.len().saturating_sub(wshift) {
        let j = i + wshift;
        let mut v = src[j] >> bshift;
        if bshift != 0 && j + 1 < src.len() {
            v |= src[j + 1] << (WORD - bshift);
        }
        dst[i] |= v;
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueSet(mod {}) ", self.n)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
