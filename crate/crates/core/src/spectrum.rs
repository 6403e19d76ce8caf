//! Hermitian spectra of integral oriented circulant graphs and entries of the
//! transition matrix `U(t) = exp(itH)`.
//!
//! The eigenvectors of any circulant are the Fourier vectors, so the
//! eigenvalue belonging to index `j` is `μ_j = −Σ_{k∈C} 2 sin(2πjk/n)`.
//! [`eigenvalues_direct`] evaluates that sum numerically;
//! [`eigenvalues_closed`] evaluates the exact closed form level by level.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circulant::{d_partition, GraphSpec, SymbolSet};
use crate::error::{Error, Result};
use crate::numtheory::{neg_one_pow, ramanujan_sum, round_integral};

/// Integer eigenvalues `μ_0..μ_{n−1}` indexed by Fourier index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpectrumJson", into = "SpectrumJson")]
pub struct Spectrum {
    values: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    n: u64,
    eigenvalues: Vec<i64>,
}

impl TryFrom<SpectrumJson> for Spectrum {
    type Error = Error;

    fn try_from(raw: SpectrumJson) -> Result<Self> {
        if raw.n as usize != raw.eigenvalues.len() {
            return Err(Error::InvalidSpectrum(format!(
                "n = {} but {} eigenvalues given",
                raw.n,
                raw.eigenvalues.len()
            )));
        }
        Spectrum::new(raw.eigenvalues)
    }
}

impl From<Spectrum> for SpectrumJson {
    fn from(s: Spectrum) -> Self {
        SpectrumJson {
            n: s.n(),
            eigenvalues: s.values,
        }
    }
}

impl Spectrum {
    /// Checks `μ_0 = 0` and `Σ μ_j = 0`, both forced by a zero-diagonal
    /// antisymmetric arc pattern.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSpectrum("no eigenvalues".into()));
        }
        if values[0] != 0 {
            return Err(Error::InvalidSpectrum(format!("mu_0 = {} != 0", values[0])));
        }
        let trace: i64 = values.iter().sum();
        if trace != 0 {
            return Err(Error::InvalidSpectrum(format!("trace {trace} != 0")));
        }
        Ok(Spectrum { values })
    }

    pub fn n(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `μ_j` with the index taken mod `n`.
    pub fn get(&self, j: u64) -> i64 {
        self.values[(j % self.n()) as usize]
    }

    /// Eigenvalues in increasing order.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }
}

/// `μ_j = −Σ_{k∈C} 2 sin(2πjk/n)` in floating point, for any oriented symbol
/// (integral or not).
pub fn eigenvalues_float(symbol: &SymbolSet) -> Vec<f64> {
    let n = symbol.n();
    let nf = n as f64;
    (0..n)
        .map(|j| {
            symbol
                .elements()
                .iter()
                .map(|&k| {
                    let phase = ((j as u128 * k as u128) % n as u128) as f64;
                    -2.0 * (2.0 * PI * phase / nf).sin()
                })
                .sum()
        })
        .collect()
}

/// Direct Fourier-sum spectrum, rounded after checking every value is integral.
pub fn eigenvalues_direct(symbol: &SymbolSet) -> Result<Spectrum> {
    let values = eigenvalues_float(symbol)
        .into_iter()
        .map(|x| round_integral(x, "eigenvalue"))
        .collect::<Result<Vec<_>>>()?;
    Spectrum::new(values)
}

/// Closed-form spectrum in exact integer arithmetic.
///
/// For `j ≠ 0` only divisors at level `i = ϑ₂(j) + 2` contribute:
/// with `j' = j/2^{i−2}` (odd) and `m = n/(2^i·d)` (odd),
/// `μ_j = Σ_{d∈D_i} σ(d)·(−1)^{(m−1)/2}·(−1)^{(j'+1)/2}·2^{i−1}·c_m(j')`.
pub fn eigenvalues_closed(spec: &GraphSpec) -> Spectrum {
    let n = spec.n();
    let partition = d_partition(spec);
    let mut values = vec![0i64; n as usize];
    for j in 1..n {
        let i = j.trailing_zeros() + 2;
        let j_odd = j >> (i - 2);
        let mut mu = 0i64;
        for d in partition.level(i) {
            let sigma = spec.sign(d).expect("partition drawn from spec").value();
            let m = n / ((1u64 << i) * d);
            let c = ramanujan_sum(m, j_odd).expect("m, j' are positive");
            mu += sigma * neg_one_pow((m - 1) / 2) * neg_one_pow(j_odd.div_ceil(2)) * (1i64 << (i - 1)) * c;
        }
        values[j as usize] = mu;
    }
    Spectrum { values }
}

/// `U(t)_{ab} = (1/n)·Σ_r exp(i(μ_r t + 2πr(a−b)/n))`, summed for r = 0..n−1.
pub fn transition_entry(spectrum: &Spectrum, a: u64, b: u64, t: f64) -> Result<Complex64> {
    let n = spectrum.n();
    for v in [a, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let offset = (a + n - b) % n;
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for (r, &mu) in spectrum.values().iter().enumerate() {
        let shift = ((r as u64 * offset) % n) as f64;
        sum += Complex64::from_polar(1.0, mu as f64 * t + 2.0 * PI * shift / nf);
    }
    Ok(sum / nf)
}
