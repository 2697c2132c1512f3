//! Exact elementary number theory on `u64`.
//!
//! Everything here is a pure function of its arguments. Factorization is
//! plain trial division, which is more than enough for the moduli this crate
//! deals with (well under 2^40).

use crate::error::{Error, Result};

/// Largest value accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = 1 << 40;

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
    }

    pub fn moebius(&self) -> i64 {
        if self.is_squarefree() {
            if self.factors.len().is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }

    /// Number of divisors.
    pub fn tau(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, e)| u64::from(e) + 1)
            .product()
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive)
    } else {
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    check_positive(n)?;
    if n > FACTORIZE_LIMIT {
        return Err(Error::TooLarge {
            value: n,
            limit: FACTORIZE_LIMIT,
        });
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { value: n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

pub fn moebius(n: u64) -> Result<i64> {
    Ok(factorize(n)?.moebius())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of `n` together with every value; `n` itself for an empty iterator.
pub fn gcd_all<I: IntoIterator<Item = u64>>(values: I, n: u64) -> u64 {
    values.into_iter().fold(n, gcd)
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::NonPositive);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

/// Least common multiple of a nonempty collection, failing on overflow.
pub fn lcm_all<I: IntoIterator<Item = u64>>(values: I) -> Result<u64> {
    let mut it = values.into_iter();
    let first = it.next().ok_or(Error::Empty("lcm_all"))?;
    check_positive(first)?;
    it.try_fold(first, lcm)
}

/// Ramanujan sum `c_f(j) = Σ_{gcd(x,f)=1} exp(2πi jx/f)`, via the closed form
/// `φ(f) μ(f/g) / φ(f/g)` with `g = gcd(f, j)`.
///
/// # Panics
///
/// Panics if the quotient is not exact, which would mean an arithmetic bug.
pub fn ramanujan_sum(f: u64, j: u64) -> Result<i64> {
    let ff = factorize(f)?;
    let g = gcd(f, j);
    let reduced = factorize(f / g)?;
    let num = ff.euler_phi();
    let den = reduced.euler_phi();
    assert!(
        num % den == 0,
        "phi({}) = {num} not divisible by phi({}) = {den}",
        f,
        f / g
    );
    Ok(reduced.moebius() * (num / den) as i64)
}
