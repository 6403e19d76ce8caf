//! Perfect and multiple state transfer.
//!
//! Three independent routes decide transfer on an integral oriented circulant:
//!
//! * the divisor criteria [`has_pst`] / [`has_mst`], which only look at the
//!   levels `D_2` and `D_3` of the spec;
//! * the valuation tests on [`ValuationProfile`], which look at `ϑ₂` of
//!   eigenvalue differences;
//! * the exact solver [`solve_transfer_time`], which searches rational times
//!   `t = 2π·p/q` satisfying `(p/q)(μ_{j+1} − μ_j) + (a − b)/n ∈ Z` for all `j`,
//!   and [`certify`], which then evaluates `|U(t)_{ab}|` numerically.
//!
//! Because every eigenvalue is an integer, `U(t)` has period `2π` and times
//! are reported modulo that period.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circulant::{d_partition, GraphSpec};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, signed_two_adic_valuation};
use crate::spectrum::{eigenvalues_closed, transition_entry, Spectrum};

/// Minimum `|U(t)_{ab}|` accepted for a certificate.
pub const FIDELITY_TOLERANCE: f64 = 1e-9;

/// A time `t = 2π·p/q`, reduced, with `0 ≤ p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalTime {
    p: u64,
    q: u64,
}

impl RationalTime {
    /// Builds `p/q` reduced to lowest terms and modulo 1.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidTime { p, q });
        }
        let p = p % q;
        let g = gcd(p, q);
        Ok(RationalTime { p: p / g, q: q / g })
    }

    pub fn zero() -> Self {
        RationalTime { p: 0, q: 1 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `t' = p/q`, the time in units of `2π`.
    pub fn fraction(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// `t = 2π·p/q`.
    pub fn radians(&self) -> f64 {
        2.0 * PI * self.fraction()
    }
}

impl PartialOrd for RationalTime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalTime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl std::fmt::Display for RationalTime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Which route granted a transfer claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    DivisorCriterion,
    ValuationTest,
    ExactSearch,
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Criterion::DivisorCriterion => "divisor-criterion",
            Criterion::ValuationTest => "valuation-test",
            Criterion::ExactSearch => "exact-search",
        })
    }
}

/// A verified transfer `U(t)e_b = γ·e_a`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(into = "CertificateJson")]
pub struct TransferCertificate {
    pub a: u64,
    pub b: u64,
    pub time: RationalTime,
    pub phase: Complex64,
    pub fidelity: f64,
    pub criterion: Criterion,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    a: u64,
    b: u64,
    p: u64,
    q: u64,
    t: f64,
    phase_re: f64,
    phase_im: f64,
    fidelity: f64,
    criterion: Criterion,
}

impl From<TransferCertificate> for CertificateJson {
    fn from(c: TransferCertificate) -> Self {
        CertificateJson {
            a: c.a,
            b: c.b,
            p: c.time.p,
            q: c.time.q,
            t: c.time.radians(),
            phase_re: c.phase.re,
            phase_im: c.phase.im,
            fidelity: c.fidelity,
            criterion: c.criterion,
        }
    }
}

impl<'de> Deserialize<'de> for TransferCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CertificateJson::deserialize(deserializer)?;
        let time = RationalTime::new(raw.p, raw.q).map_err(serde::de::Error::custom)?;
        Ok(TransferCertificate {
            a: raw.a,
            b: raw.b,
            time,
            phase: Complex64::new(raw.phase_re, raw.phase_im),
            fidelity: raw.fidelity,
            criterion: raw.criterion,
        })
    }
}

/// `ϑ₂` of an eigenvalue difference; a zero difference has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(m) => write!(f, "{m}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(m) => s.serialize_u32(*m),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `ϑ₂(μ_{j+k} − μ_j)` for `j = 0..n−1`, indices mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationProfile {
    pub k: u64,
    pub values: Vec<Valuation>,
}

impl ValuationProfile {
    /// The common finite value, if every entry equals it.
    pub fn constant_value(&self) -> Option<u32> {
        match self.values.first() {
            Some(&Valuation::Finite(m)) if self.values.iter().all(|&v| v == Valuation::Finite(m)) => Some(m),
            _ => None,
        }
    }

    pub fn is_constant(&self, m: u32) -> bool {
        self.constant_value() == Some(m)
    }
}

/// PST between `b + n/2` and `b` for every `b`: `4 | n` and `D_2 = {n/4}`.
pub fn has_pst(spec: &GraphSpec) -> bool {
    let n = spec.n();
    n.is_multiple_of(4) && d_partition(spec).level_is(2, &[n / 4])
}

/// MST on `{b, b + n/4, b + n/2, b + 3n/4}`: `8 | n`, `D_2 = {n/4}` and `D_3 = {n/8}`.
pub fn has_mst(spec: &GraphSpec) -> bool {
    let n = spec.n();
    if !n.is_multiple_of(8) {
        return false;
    }
    let partition = d_partition(spec);
    partition.level_is(2, &[n / 4]) && partition.level_is(3, &[n / 8])
}

/// Universal state transfer needs PST between every pair of distinct
/// vertices, i.e. every nonzero offset. At most three offsets ever qualify,
/// so this is false for every graph with more than four vertices.
pub fn has_ust(spec: &GraphSpec) -> bool {
    let n = spec.n();
    n >= 2 && pst_pair_offsets(spec).len() as u64 == n - 1
}

pub fn valuation_profile(spectrum: &Spectrum, k: u64) -> Result<ValuationProfile> {
    let n = spectrum.n();
    if k == 0 || k > n {
        return Err(Error::InvalidStep { k, n });
    }
    let values = (0..n)
        .map(
            |j| match signed_two_adic_valuation(spectrum.get(j + k) - spectrum.get(j)) {
                Some(m) => Valuation::Finite(m),
                None => Valuation::Infinite,
            },
        )
        .collect();
    Ok(ValuationProfile { k, values })
}

/// Offsets `o` with PST between `b + o` and `b` for every `b`.
pub fn pst_pair_offsets(spec: &GraphSpec) -> BTreeSet<u64> {
    let n = spec.n();
    if has_mst(spec) {
        [n / 4, n / 2, 3 * n / 4].into()
    } else if has_pst(spec) {
        [n / 2].into()
    } else {
        BTreeSet::new()
    }
}

fn check_vertex(v: u64, n: u64) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

/// Does `(p/q)·δ + c/n` lie in `Z`? Evaluated as `p·δ·n + c·q ≡ 0 (mod q·n)`.
fn congruence_holds(p: u64, q: u64, delta: i64, c: u64, n: u64) -> bool {
    let lhs = p as i128 * delta as i128 * n as i128 + c as i128 * q as i128;
    lhs.rem_euclid(q as i128 * n as i128) == 0
}

fn k_step_differences(spectrum: &Spectrum, k: u64) -> BTreeSet<i64> {
    (0..spectrum.n())
        .map(|j| spectrum.get(j + k) - spectrum.get(j))
        .collect()
}

/// Largest denominator examined by [`solve_transfer_time`] for order `n`.
pub fn search_denominator_bound(n: u64) -> u64 {
    4 * n
}

/// Smallest `t' = p/q ∈ (0, 1)` with `(p/q)(μ_{j+1} − μ_j) + (a − b)/n ∈ Z`
/// for every `j`, searched over reduced fractions with `q ≤ 4n` in exact
/// integer arithmetic.
///
/// A zero difference leaves the condition `(a − b)/n ∈ Z`, which no pair of
/// distinct vertices satisfies.
pub fn solve_transfer_time(spectrum: &Spectrum, a: u64, b: u64) -> Result<Option<RationalTime>> {
    let n = spectrum.n();
    check_vertex(a, n)?;
    check_vertex(b, n)?;
    let offset = (a + n - b) % n;
    let deltas = k_step_differences(spectrum, 1);
    let mut best: Option<RationalTime> = None;
    for q in 2..=search_denominator_bound(n) {
        for p in 1..q {
            if let Some(t) = best {
                // p/q >= best: nothing smaller for this q
                if p as u128 * t.q as u128 >= t.p as u128 * q as u128 {
                    break;
                }
            }
            if gcd(p, q) != 1 {
                continue;
            }
            if deltas.iter().all(|&d| congruence_holds(p, q, d, offset, n)) {
                best = Some(RationalTime { p, q });
                break;
            }
        }
    }
    Ok(best)
}

/// `(p/q)(μ_{j+k} − μ_j) + k(a − b)/n ∈ Z` for all `j`.
pub fn k_step_condition(spectrum: &Spectrum, a: u64, b: u64, time: RationalTime, k: u64) -> Result<bool> {
    let n = spectrum.n();
    check_vertex(a, n)?;
    check_vertex(b, n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidStep { k, n });
    }
    let offset = (k % n) * ((a + n - b) % n) % n;
    Ok(k_step_differences(spectrum, k)
        .iter()
        .all(|&d| congruence_holds(time.p, time.q, d, offset, n)))
}

/// Solves for a transfer time from `b` to `a` and verifies it numerically.
pub fn certify(spec: &GraphSpec, a: u64, b: u64) -> Result<Option<TransferCertificate>> {
    certify_with_tolerance(spec, a, b, FIDELITY_TOLERANCE)
}

pub fn certify_with_tolerance(spec: &GraphSpec, a: u64, b: u64, tolerance: f64) -> Result<Option<TransferCertificate>> {
    certify_spectrum(&eigenvalues_closed(spec), a, b, tolerance)
}

/// [`certify`] on a precomputed spectrum.
pub fn certify_spectrum(spectrum: &Spectrum, a: u64, b: u64, tolerance: f64) -> Result<Option<TransferCertificate>> {
    let Some(time) = solve_transfer_time(spectrum, a, b)? else {
        return Ok(None);
    };
    let phase = transition_entry(spectrum, a, b, time.radians())?;
    let fidelity = phase.norm();
    if fidelity < 1.0 - tolerance {
        return Err(Error::FidelityMismatch {
            p: time.p,
            q: time.q,
            fidelity,
        });
    }
    Ok(Some(TransferCertificate {
        a,
        b,
        time,
        phase,
        fidelity,
        criterion: Criterion::ExactSearch,
    }))
}
