//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use iocg::{hermitian_adjacency, RationalTime, Spectrum, SymbolSet};
use nalgebra::{Complex, DMatrix};

/// Eigenvalues of the dense complex Hermitian adjacency matrix, ascending.
pub fn dense_eigenvalues(symbol: &SymbolSet) -> Vec<f64> {
    let h = hermitian_adjacency(symbol);
    let n = h.n();
    let m = DMatrix::from_fn(n, n, |u, v| Complex::new(0.0, h.get(u, v) as f64));
    let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eig
}

/// All oriented symbols on `n` vertices: each inverse pair `{k, n−k}` with
/// `k < n/2` contributes nothing, `k` or `n − k`.
pub fn all_oriented_symbols(n: u64) -> Vec<SymbolSet> {
    let pairs: Vec<u64> = (1..n).filter(|&k| 2 * k < n).collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut c = Vec::new();
            for &k in &pairs {
                match code % 3 {
                    1 => c.push(k),
                    2 => c.push(n - k),
                    _ => {}
                }
                code /= 3;
            }
            SymbolSet::new(n, c).unwrap()
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Complete solution set of `x·δ_j + (a−b)/n ∈ Z` for `x ∈ (0, 1)`.
///
/// If `g = gcd(δ_j)` then `x·g` is forced into `(1/n)Z`, so every solution is
/// `k/(n·g)`; no denominator bound is assumed.
pub fn all_transfer_times(spectrum: &Spectrum, a: u64, b: u64) -> Vec<RationalTime> {
    let n = spectrum.n() as i64;
    let offset = (a as i64 - b as i64).rem_euclid(n);
    let deltas: BTreeSet<i64> = (0..spectrum.n())
        .map(|j| spectrum.get(j + 1) - spectrum.get(j))
        .collect();
    if deltas.contains(&0) && offset != 0 {
        return Vec::new();
    }
    let g = deltas.iter().fold(0, |acc, &d| gcd(acc, d));
    if g == 0 {
        return Vec::new();
    }
    let den = n * g;
    (1..den)
        .filter(|&k| {
            // (k/den)·δ + offset/n ∈ Z  ⇔  k·δ + offset·g ≡ 0 (mod den)
            deltas
                .iter()
                .all(|&d| (k as i128 * d as i128 + (offset * g) as i128).rem_euclid(den as i128) == 0)
        })
        .map(|k| RationalTime::new(k as u64, den as u64).unwrap())
        .collect()
}

/// `Σ_b |U(t)_{ab}|²` via the transition entries.
pub fn row_norm_sq(spectrum: &Spectrum, a: u64, t: f64) -> f64 {
    (0..spectrum.n())
        .map(|b| iocg::transition_entry(spectrum, a, b, t).unwrap().norm_sqr())
        .sum()
}
