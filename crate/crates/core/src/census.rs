//! Exhaustive enumeration of integral oriented circulant graphs of a given
//! order, and the closed-form counts of those with PST or MST.

use serde::{Deserialize, Serialize};

use crate::circulant::GraphSpec;
use crate::error::{Error, Result};
use crate::numtheory::{divisor_count, divisors, Sign};
use crate::transfer::{has_mst, has_pst};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Pst,
    Mst,
}

impl Kind {
    pub fn holds(self, spec: &GraphSpec) -> bool {
        match self {
            Kind::Pst => has_pst(spec),
            Kind::Mst => has_mst(spec),
        }
    }

    pub fn formula_count(self, n: u64) -> u64 {
        match self {
            Kind::Pst => count_pst_formula(n),
            Kind::Mst => count_mst_formula(n),
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "pst" => Ok(Kind::Pst),
            "mst" => Ok(Kind::Mst),
            other => Err(format!("unknown kind {other:?}, expected pst or mst")),
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Pst => "pst",
            Kind::Mst => "mst",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: u64,
    pub kind: Kind,
    pub formula_count: u64,
    pub enumerated_count: u64,
    pub specs: Vec<GraphSpec>,
}

impl CensusRecord {
    pub fn counts_agree(&self) -> bool {
        self.formula_count == self.enumerated_count
    }
}

/// Every integral oriented circulant graph on `n` vertices: each divisor of
/// `n/4` is absent, `+1` or `−1` (mixed-radix order, smallest divisor least
/// significant). Orders not divisible by 4 only have the empty graph.
pub fn integral_specs(n: u64) -> Result<Vec<GraphSpec>> {
    if n == 0 {
        return Err(Error::ZeroArgument("graph order"));
    }
    if !n.is_multiple_of(4) {
        return Ok(vec![GraphSpec::empty(n)?]);
    }
    let ds = divisors(n / 4)?;
    let total = 3usize.pow(ds.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut chosen = Vec::new();
        for &d in &ds {
            match code % 3 {
                1 => chosen.push((d, Sign::Plus)),
                2 => chosen.push((d, Sign::Minus)),
                _ => {}
            }
            code /= 3;
        }
        out.push(GraphSpec::new(n, chosen)?);
    }
    Ok(out)
}

/// Canonical key: the `(d, σ(d))` list in increasing `d`, `+1` before `−1`.
fn sort_key(spec: &GraphSpec) -> Vec<(u64, i64)> {
    spec.divisor_signs().iter().map(|(&d, &s)| (d, -s.value())).collect()
}

pub fn enumerate(n: u64, kind: Kind) -> Result<CensusRecord> {
    enumerate_with_cap(n, kind, DEFAULT_ENUMERATION_CAP)
}

/// Filters [`integral_specs`] by the divisor criterion for `kind`.
pub fn enumerate_with_cap(n: u64, kind: Kind, cap: u64) -> Result<CensusRecord> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut specs: Vec<GraphSpec> = integral_specs(n)?.into_iter().filter(|s| kind.holds(s)).collect();
    specs.sort_by_cached_key(sort_key);
    Ok(CensusRecord {
        n,
        kind,
        formula_count: kind.formula_count(n),
        enumerated_count: specs.len() as u64,
        specs,
    })
}

fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

fn tau(n: u64) -> u64 {
    divisor_count(n).expect("positive argument")
}

/// `2·3^{τ(n/4) − τ(n/2^{ϑ₂(n)})}` for `4 | n`, else 0.
pub fn count_pst_formula(n: u64) -> u64 {
    if n == 0 || !n.is_multiple_of(4) {
        return 0;
    }
    let exponent = tau(n / 4) - tau(odd_part(n));
    2 * 3u64.pow(exponent as u32)
}

/// `2·2·3^{τ(n/4) − 2τ(n/2^{ϑ₂(n)})}` for `8 | n`, else 0.
pub fn count_mst_formula(n: u64) -> u64 {
    if n == 0 || !n.is_multiple_of(8) {
        return 0;
    }
    let exponent = tau(n / 4) - 2 * tau(odd_part(n));
    4 * 3u64.pow(exponent as u32)
}
