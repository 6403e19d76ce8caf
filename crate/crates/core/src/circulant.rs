//! Integral oriented circulant graphs: the `(n, D, σ)` encoding, the symbol
//! set it generates, the inverse classification and the Hermitian adjacency
//! matrix.
//!
//! A nonempty oriented circulant graph on `Z_n` is integral exactly when
//! `4 | n` and its symbol is a disjoint union of classes `G_n^1(d)` or
//! `G_n^3(d)` over distinct divisors `d | n/4`. [`GraphSpec`] stores that
//! choice as a map `d ↦ σ(d)`.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, gnr_set, Sign};

/// An integral oriented circulant graph `IOCG_n(D, σ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphSpecJson", into = "GraphSpecJson")]
pub struct GraphSpec {
    n: u64,
    divisor_signs: BTreeMap<u64, Sign>,
}

#[derive(Serialize, Deserialize)]
struct GraphSpecJson {
    n: u64,
    divisors: Vec<DivisorSignJson>,
}

#[derive(Serialize, Deserialize)]
struct DivisorSignJson {
    d: u64,
    sign: Sign,
}

impl TryFrom<GraphSpecJson> for GraphSpec {
    type Error = Error;

    fn try_from(raw: GraphSpecJson) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for entry in &raw.divisors {
            if !seen.insert(entry.d) {
                return Err(Error::NotIntegral(format!("divisor {} listed twice", entry.d)));
            }
        }
        GraphSpec::new(raw.n, raw.divisors.into_iter().map(|e| (e.d, e.sign)))
    }
}

impl From<GraphSpec> for GraphSpecJson {
    fn from(spec: GraphSpec) -> Self {
        GraphSpecJson {
            n: spec.n,
            divisors: spec
                .divisor_signs
                .into_iter()
                .map(|(d, sign)| DivisorSignJson { d, sign })
                .collect(),
        }
    }
}

impl GraphSpec {
    /// Validates and builds a spec. Later duplicates of a divisor overwrite earlier ones.
    pub fn new(n: u64, divisor_signs: impl IntoIterator<Item = (u64, Sign)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument("graph order"));
        }
        let divisor_signs: BTreeMap<u64, Sign> = divisor_signs.into_iter().collect();
        if !divisor_signs.is_empty() {
            if !n.is_multiple_of(4) {
                return Err(Error::OrderNotMultipleOfFour(n));
            }
            for &d in divisor_signs.keys() {
                if d == 0 || !(n / 4).is_multiple_of(d) {
                    return Err(Error::NotADivisor { d, n: n / 4 });
                }
            }
        }
        Ok(GraphSpec { n, divisor_signs })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: u64) -> Result<Self> {
        GraphSpec::new(n, [])
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisor_signs(&self) -> &BTreeMap<u64, Sign> {
        &self.divisor_signs
    }

    pub fn sign(&self, d: u64) -> Option<Sign> {
        self.divisor_signs.get(&d).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.divisor_signs.is_empty()
    }
}

impl std::fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IOCG_{}({{", self.n)?;
        for (i, (d, s)) in self.divisor_signs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{s}")?;
        }
        f.write_str("})")
    }
}

/// The connection set `C ⊆ Z_n \ {0}` of an oriented circulant graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymbolSetJson", into = "SymbolSetJson")]
pub struct SymbolSet {
    n: u64,
    elements: BTreeSet<u64>,
}

#[derive(Serialize, Deserialize)]
struct SymbolSetJson {
    n: u64,
    symbol: Vec<u64>,
}

impl TryFrom<SymbolSetJson> for SymbolSet {
    type Error = Error;

    fn try_from(raw: SymbolSetJson) -> Result<Self> {
        SymbolSet::new(raw.n, raw.symbol)
    }
}

impl From<SymbolSet> for SymbolSetJson {
    fn from(s: SymbolSet) -> Self {
        SymbolSetJson {
            n: s.n,
            symbol: s.elements.into_iter().collect(),
        }
    }
}

impl SymbolSet {
    /// Validates range and orientation (`C ∩ −C = ∅`, which also excludes `n/2`).
    pub fn new(n: u64, elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument("graph order"));
        }
        let elements: BTreeSet<u64> = elements.into_iter().collect();
        for &k in &elements {
            if k == 0 || k >= n {
                return Err(Error::SymbolOutOfRange {
                    element: k,
                    max: n.saturating_sub(1),
                });
            }
            let inv = n - k;
            if elements.contains(&inv) {
                return Err(Error::NotOriented { a: k, b: inv, n });
            }
        }
        Ok(SymbolSet { n, elements })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn contains(&self, k: u64) -> bool {
        self.elements.contains(&k)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Image under the group automorphism `k ↦ u·k mod n` for a unit `u`.
    pub fn scaled(&self, unit: u64) -> Result<Self> {
        if gcd(unit, self.n) != 1 {
            return Err(Error::NotAUnit { u: unit, n: self.n });
        }
        SymbolSet::new(self.n, self.elements.iter().map(|&k| (k * unit) % self.n))
    }
}

/// `D` grouped by level `i = ϑ₂(n/d)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorPartition {
    classes: BTreeMap<u32, BTreeSet<u64>>,
}

impl DivisorPartition {
    /// `D_i`; empty when no divisor sits at that level.
    pub fn level(&self, i: u32) -> BTreeSet<u64> {
        self.classes.get(&i).cloned().unwrap_or_default()
    }

    pub fn level_is(&self, i: u32, expected: &[u64]) -> bool {
        let got = self.classes.get(&i);
        match got {
            Some(set) => set.len() == expected.len() && expected.iter().all(|d| set.contains(d)),
            None => expected.is_empty(),
        }
    }

    /// Nonempty levels in increasing order.
    pub fn levels(&self) -> impl Iterator<Item = (u32, &BTreeSet<u64>)> {
        self.classes.iter().map(|(&i, s)| (i, s))
    }
}

/// Arc-indicator form of the Hermitian adjacency matrix: `+1` at `(u, v)`
/// means `H[u][v] = i`, `−1` means `H[u][v] = −i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianAdjacency {
    n: usize,
    arcs: Vec<i8>,
}

impl HermitianAdjacency {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> i8 {
        self.arcs[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[i8] {
        &self.arcs[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.arcs.chunks(self.n.max(1)).take(self.n)
    }

    /// The complex entry `H[u][v]`.
    pub fn entry(&self, u: usize, v: usize) -> Complex64 {
        Complex64::new(0.0, self.get(u, v) as f64)
    }

    /// All arcs `u → v` in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.get(u, v) == 1).map(move |v| (u, v)))
    }
}

/// `C = ⋃_{d ∈ D} G_n^{r_d}(d)` with `r_d = 1` for `σ(d) = +1` and `3` for `−1`.
pub fn build_symbol(spec: &GraphSpec) -> SymbolSet {
    let mut elements = BTreeSet::new();
    for (&d, &sign) in &spec.divisor_signs {
        let class = gnr_set(spec.n, d, sign.residue()).expect("GraphSpec invariants guarantee d | n/4");
        elements.extend(class.elements().iter().copied());
    }
    SymbolSet { n: spec.n, elements }
}

/// Recovers `(D, σ)` from a symbol, or rejects it as not integral.
///
/// The classes `G_n(d)` partition `[1, n−1]`, so each element determines the
/// only class that can cover it and the decomposition is unique when it exists.
pub fn classify_symbol(symbol: &SymbolSet) -> Result<GraphSpec> {
    let n = symbol.n;
    if symbol.is_empty() {
        return GraphSpec::empty(n);
    }
    if !n.is_multiple_of(4) {
        return Err(Error::NotIntegral(format!(
            "nonempty oriented symbol on {n} vertices, order is not a multiple of 4"
        )));
    }
    let mut claimed = BTreeSet::new();
    let mut divisor_signs = BTreeMap::new();
    for &k in &symbol.elements {
        if claimed.contains(&k) {
            continue;
        }
        let d = gcd(k, n);
        if !(n / 4).is_multiple_of(d) {
            return Err(Error::NotIntegral(format!(
                "{k} has gcd {d} with {n}, which does not divide {}",
                n / 4
            )));
        }
        let sign = Sign::from_residue((k / d) % 4)
            .ok_or_else(|| Error::NotIntegral(format!("{k}/{d} is even, not in a class G^1 or G^3")))?;
        if divisor_signs.contains_key(&d) {
            return Err(Error::NotIntegral(format!("divisor {d} selected with both signs")));
        }
        let class = gnr_set(n, d, sign.residue())?;
        if let Some(missing) = class.elements().iter().find(|&&x| !symbol.contains(x)) {
            return Err(Error::NotIntegral(format!(
                "{k} requires the whole class G_{n}^{}({d}) but {missing} is missing",
                sign.residue()
            )));
        }
        claimed.extend(class.elements().iter().copied());
        divisor_signs.insert(d, sign);
    }
    GraphSpec::new(n, divisor_signs)
}

/// The circulant arc-indicator matrix of an oriented symbol.
pub fn hermitian_adjacency(symbol: &SymbolSet) -> HermitianAdjacency {
    let n = symbol.n as usize;
    let first_row: Vec<i8> = (0..n as u64)
        .map(|k| {
            if symbol.contains(k) {
                1
            } else if k != 0 && symbol.contains(symbol.n - k) {
                -1
            } else {
                0
            }
        })
        .collect();
    let mut arcs = vec![0i8; n * n];
    for u in 0..n {
        for v in 0..n {
            arcs[u * n + v] = first_row[(v + n - u) % n];
        }
    }
    HermitianAdjacency { n, arcs }
}

/// Groups `D` into `D_i = {d ∈ D : ϑ₂(n/d) = i}`.
pub fn d_partition(spec: &GraphSpec) -> DivisorPartition {
    let mut classes: BTreeMap<u32, BTreeSet<u64>> = BTreeMap::new();
    for &d in spec.divisor_signs.keys() {
        classes.entry((spec.n / d).trailing_zeros()).or_default().insert(d);
    }
    DivisorPartition { classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn spec(n: u64, ds: &[(u64, Sign)]) -> GraphSpec {
        GraphSpec::new(n, ds.iter().copied()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(GraphSpec::new(6, [(1, Plus)]).is_err());
        assert!(GraphSpec::new(8, [(4, Plus)]).is_err());
        assert!(GraphSpec::new(0, []).is_err());
        assert!(GraphSpec::empty(6).is_ok());
        assert!(GraphSpec::new(24, [(3, Minus), (6, Plus)]).is_ok());
    }

    #[test]
    fn build_examples() {
        let c = build_symbol(&spec(8, &[(1, Plus), (2, Minus)]));
        assert_eq!(c.elements().iter().copied().collect::<Vec<_>>(), vec![1, 5, 6]);
        assert!(build_symbol(&spec(8, &[])).is_empty());
        let c = build_symbol(&spec(4, &[(1, Plus)]));
        assert_eq!(c.elements().iter().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn classify_examples() {
        let s = SymbolSet::new(8, [1, 5, 6]).unwrap();
        assert_eq!(classify_symbol(&s).unwrap(), spec(8, &[(1, Plus), (2, Minus)]));

        let s = SymbolSet::new(5, [1]).unwrap();
        assert!(matches!(classify_symbol(&s), Err(Error::NotIntegral(_))));

        let s = SymbolSet::new(8, [1, 2]).unwrap();
        assert!(matches!(classify_symbol(&s), Err(Error::NotIntegral(_))));

        let s = SymbolSet::new(12, []).unwrap();
        assert!(classify_symbol(&s).unwrap().is_empty());

        assert!(SymbolSet::new(8, [4]).is_err(), "n/2 is self-inverse");
        let s = SymbolSet::new(16, [4]).unwrap();
        assert_eq!(classify_symbol(&s).unwrap(), spec(16, &[(4, Plus)]));
        // G_16^1(2) = {2, 10}
        let s = SymbolSet::new(16, [2]).unwrap();
        assert!(classify_symbol(&s).is_err());
        // gcd(8, 24) = 8 does not divide 24/4
        let s = SymbolSet::new(24, [8]).unwrap();
        assert!(classify_symbol(&s).is_err());
    }

    #[test]
    fn symbol_validation() {
        assert!(matches!(SymbolSet::new(8, [1, 7]), Err(Error::NotOriented { .. })));
        assert!(matches!(SymbolSet::new(8, [0]), Err(Error::SymbolOutOfRange { .. })));
        assert!(matches!(SymbolSet::new(8, [8]), Err(Error::SymbolOutOfRange { .. })));
    }

    #[test]
    fn adjacency_examples() {
        let h = hermitian_adjacency(&SymbolSet::new(4, [1]).unwrap());
        assert_eq!(h.row(0), &[0, 1, 0, -1]);
        let h = hermitian_adjacency(&SymbolSet::new(8, [1, 5, 6]).unwrap());
        assert_eq!(h.row(0), &[0, 1, -1, -1, 0, 1, 1, -1]);
        let h = hermitian_adjacency(&SymbolSet::new(6, []).unwrap());
        assert!(h.rows().all(|r| r.iter().all(|&x| x == 0)));
    }

    #[test]
    fn adjacency_is_antisymmetric_circulant() {
        let h = hermitian_adjacency(&build_symbol(&spec(24, &[(1, Plus), (3, Minus), (6, Plus)])));
        let n = h.n();
        for u in 0..n {
            assert_eq!(h.get(u, u), 0);
            for v in 0..n {
                assert_eq!(h.get(u, v), -h.get(v, u));
                assert_eq!(h.entry(u, v), h.entry(v, u).conj());
                assert_eq!(h.get(u, v), h.get(0, (v + n - u) % n));
            }
        }
    }

    #[test]
    fn partition_examples() {
        let p = d_partition(&spec(8, &[(1, Plus), (2, Minus)]));
        assert!(p.level_is(2, &[2]));
        assert!(p.level_is(3, &[1]));
        let p = d_partition(&spec(4, &[(1, Plus)]));
        assert!(p.level_is(2, &[1]));
        let p = d_partition(&spec(8, &[]));
        assert!((0..=3).all(|i| p.level(i).is_empty()));
    }

    #[test]
    fn json_shapes() {
        let s = spec(8, &[(2, Minus), (1, Plus)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":8,"divisors":[{"d":1,"sign":1},{"d":2,"sign":-1}]}"#);
        assert_eq!(serde_json::from_str::<GraphSpec>(&json).unwrap(), s);
        assert!(serde_json::from_str::<GraphSpec>(r#"{"n":8,"divisors":[{"d":1,"sign":2}]}"#).is_err());
        assert!(
            serde_json::from_str::<GraphSpec>(r#"{"n":8,"divisors":[{"d":1,"sign":1},{"d":1,"sign":-1}]}"#).is_err()
        );

        let c = build_symbol(&s);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"n":8,"symbol":[1,5,6]}"#);
        assert!(serde_json::from_str::<SymbolSet>(r#"{"n":8,"symbol":[1,7]}"#).is_err());
    }
}
