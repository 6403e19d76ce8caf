//! Where a command gets its graph from: a JSON file, `--n` with divisors, or
//! `--n` with an explicit symbol.

use std::path::PathBuf;

use clap::Args;
use iocg::{classify_symbol, GraphSpec, Sign, SymbolSet};

use crate::Failure;

#[derive(Args, Debug, Clone)]
pub struct SpecSource {
    /// JSON file holding either `{"n", "divisors"}` or `{"n", "symbol"}`.
    #[arg(long, conflicts_with_all = ["n", "divisor", "symbol"])]
    spec: Option<PathBuf>,

    /// Graph order.
    #[arg(long = "n")]
    n: Option<u64>,

    /// Divisor with its sign, as `d:+1` or `d:-1`; repeatable.
    #[arg(long, value_parser = parse_divisor, conflicts_with = "symbol")]
    divisor: Vec<(u64, Sign)>,

    /// Symbol elements, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    symbol: Option<Vec<u64>>,
}

fn parse_divisor(s: &str) -> Result<(u64, Sign), String> {
    let (d, sign) = s
        .split_once(':')
        .ok_or_else(|| format!("expected d:+1 or d:-1, got {s:?}"))?;
    let d = d.trim().parse::<u64>().map_err(|e| format!("bad divisor {d:?}: {e}"))?;
    let sign = match sign.trim() {
        "+1" | "1" | "+" => Sign::Plus,
        "-1" | "-" => Sign::Minus,
        other => return Err(format!("sign must be +1 or -1, got {other:?}")),
    };
    Ok((d, sign))
}

impl SpecSource {
    /// The integral graph described by the arguments. Symbols are classified,
    /// so a non-integral symbol is an error.
    pub fn resolve(&self) -> Result<GraphSpec, Failure> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            return if value.get("symbol").is_some() {
                let symbol: SymbolSet = serde_json::from_value(value).map_err(|e| Failure::invalid(e.to_string()))?;
                Ok(classify_symbol(&symbol)?)
            } else {
                serde_json::from_value(value).map_err(|e| Failure::invalid(e.to_string()))
            };
        }
        let n = self
            .n
            .ok_or_else(|| Failure::invalid("one of --spec or --n is required"))?;
        match &self.symbol {
            Some(elements) => Ok(classify_symbol(&SymbolSet::new(n, elements.iter().copied())?)?),
            None => Ok(GraphSpec::new(n, self.divisor.iter().copied())?),
        }
    }
}
