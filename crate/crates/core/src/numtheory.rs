//! Exact integer number theory used by the spectral formulas: 2-adic
//! valuations, divisors, the residue classes `G_n(d)` and `G_n^r(d)`,
//! Ramanujan's sum and Ramanujan's sine sum.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rounding slack allowed when a trigonometric sum is expected to be integral.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// Orientation sign `σ(d) ∈ {+1, −1}`.
///
/// `Plus` selects the residue class `k ≡ 1 (mod 4)`, `Minus` selects `k ≡ 3 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Residue mod 4 of the class this sign selects.
    pub fn residue(self) -> u64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => 3,
        }
    }

    pub fn from_residue(r: u64) -> Option<Sign> {
        match r {
            1 => Some(Sign::Plus),
            3 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidSign(v)),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value()
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A sorted set of residues in `[1, n−1]` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClass {
    modulus: u64,
    elements: Vec<u64>,
}

impl ResidueClass {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.elements.binary_search(&k).is_ok()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exponent of 2 in `n`. Odd inputs give 0.
pub fn two_adic_valuation(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroArgument("two_adic_valuation"));
    }
    Ok(n.trailing_zeros())
}

/// 2-adic valuation of a nonzero signed integer; `None` for zero.
pub fn signed_two_adic_valuation(x: i64) -> Option<u32> {
    (x != 0).then(|| x.unsigned_abs().trailing_zeros())
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument("divisors"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Number of divisors `τ(n)`.
pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(divisors(n)?.len() as u64)
}

/// Prime factorization as `(prime, exponent)` pairs.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `G_n(d) = {k : 1 ≤ k ≤ n−1, gcd(k, n) = d}`.
pub fn gn_set(n: u64, d: u64) -> Result<ResidueClass> {
    if n == 0 || d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n });
    }
    let elements = (1..n).filter(|&k| gcd(k, n) == d).collect();
    Ok(ResidueClass { modulus: n, elements })
}

/// `G_n^r(d) = d·G_{n/d}^r(1) = {d·k : k ≡ r (mod 4), gcd(k, n/d) = 1}`.
///
/// Requires `4 | n` and `d | n/4`, so that `G_n^1(d)` and `G_n^3(d)` split `G_n(d)`.
pub fn gnr_set(n: u64, d: u64, r: u64) -> Result<ResidueClass> {
    if r != 1 && r != 3 {
        return Err(Error::InvalidResidue(r));
    }
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::OrderNotMultipleOfFour(n));
    }
    if d == 0 || !(n / 4).is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n: n / 4 });
    }
    let m = n / d;
    let elements = (1..=m)
        .filter(|&k| k % 4 == r && gcd(k, m) == 1)
        .map(|k| d * k)
        .collect();
    Ok(ResidueClass { modulus: n, elements })
}

/// Ramanujan's sum `c_n(q)`, evaluated exactly through Hölder's identity
/// `c_n(q) = μ(n/g)·φ(n)/φ(n/g)` with `g = gcd(n, q)`.
pub fn ramanujan_sum(n: u64, q: u64) -> Result<i64> {
    if n == 0 || q == 0 {
        return Err(Error::ZeroArgument("ramanujan_sum"));
    }
    let g = gcd(n, q);
    let ng = n / g;
    Ok(mobius(ng) * (euler_phi(n) / euler_phi(ng)) as i64)
}

/// Rounds `x` to the nearest integer, failing if it is not within
/// [`INTEGRALITY_TOLERANCE`] of one.
pub(crate) fn round_integral(x: f64, context: &'static str) -> Result<i64> {
    let r = x.round();
    let err = (x - r).abs();
    if err >= INTEGRALITY_TOLERANCE {
        return Err(Error::NonIntegral {
            context,
            value: x,
            error: err,
        });
    }
    Ok(r as i64)
}

/// Ramanujan's sine sum `s_n^σ(q) = −Σ_{a ∈ S_n(1)} 2 sin(2πaq/n)` evaluated
/// numerically over `S_n(1) = G_n^1(1)` (σ = +1) or `G_n^3(1)` (σ = −1).
pub fn sine_sum_direct(n: u64, q: u64, sign: Sign) -> Result<i64> {
    if q == 0 {
        return Err(Error::ZeroArgument("sine_sum_direct"));
    }
    let class = gnr_set(n, 1, sign.residue())?;
    let nf = n as f64;
    let sum: f64 = class
        .elements()
        .iter()
        .map(|&a| {
            // reduce before converting so the angle stays small
            let phase = ((a as u128 * q as u128) % n as u128) as f64;
            -2.0 * (2.0 * PI * phase / nf).sin()
        })
        .sum();
    round_integral(sum, "Ramanujan sine sum")
}

/// Closed form of `s_n(q) = s_n^{+1}(q)`.
///
/// With `n = 2^t·m`, `m` odd, `t ≥ 2` and `q' = q/2^{t−2}`:
/// `s_n(q) = (−1)^{(m−1)/2}·(−1)^{(q'+1)/2}·2^{t−1}·c_m(q')` when `q'` is an odd
/// integer, and 0 otherwise.
pub fn sine_sum_closed(n: u64, q: u64) -> Result<i64> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::OrderNotMultipleOfFour(n));
    }
    if q == 0 {
        return Err(Error::ZeroArgument("sine_sum_closed"));
    }
    let t = n.trailing_zeros();
    let m = n >> t;
    let scale = 1u64 << (t - 2);
    if !q.is_multiple_of(scale) {
        return Ok(0);
    }
    let q_reduced = q / scale;
    if q_reduced.is_multiple_of(2) {
        return Ok(0);
    }
    let sign = neg_one_pow((m - 1) / 2) * neg_one_pow(q_reduced.div_ceil(2));
    Ok(sign * (1i64 << (t - 1)) * ramanujan_sum(m, q_reduced)?)
}

/// `(−1)^e`.
pub(crate) fn neg_one_pow(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
