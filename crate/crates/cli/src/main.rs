//! `iocg`: build, inspect and certify integral oriented circulant graphs.
//!
//! Exit codes: 0 success or positive decision, 1 negative decision,
//! 2 invalid input, 3 internal inconsistency (oracle mismatch).

mod source;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use iocg::transfer::ValuationProfile;
use iocg::*;
use serde::Serialize;
use serde_json::json;

use crate::source::SpecSource;

#[derive(Parser, Debug)]
#[command(
    name = "iocg",
    version,
    about = "Integral oriented circulant graphs: spectra and quantum state transfer"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    output: OutputFormat,

    /// Minimum fidelity slack accepted for a certificate, in (0, 1e-3].
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    /// Largest order accepted by `census`.
    #[arg(long, global = true, default_value_t = iocg::census::DEFAULT_ENUMERATION_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show the symbol set, divisor levels and integrality of a graph.
    Inspect(SpecSource),
    /// Print the Hermitian spectrum from the closed form.
    Spectrum {
        #[command(flatten)]
        source: SpecSource,
        /// Cross-check against the direct Fourier sum.
        #[arg(long)]
        verify: bool,
    },
    /// Decide PST, MST or UST and certify the transfers.
    Check {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Enumerate every graph of order N with PST or MST.
    Census {
        #[arg(long = "n")]
        n: u64,
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        /// List the graphs, not only the counts.
        #[arg(long)]
        list: bool,
    },
    /// Write the graph as DOT, CSV arc-indicator matrix or symbol JSON.
    Export {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Pst,
    Mst,
    Ust,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Csv,
    Json,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<iocg::Error> for Failure {
    fn from(e: iocg::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

struct Config {
    output: OutputFormat,
    tolerance: f64,
    cap: u64,
}

impl Config {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        if !(cli.tolerance > 0.0 && cli.tolerance <= 1e-3) {
            return Err(Failure::invalid(format!(
                "tolerance {} outside (0, 1e-3]",
                cli.tolerance
            )));
        }
        if cli.cap < 4 {
            return Err(Failure::invalid(format!("cap {} below 4", cli.cap)));
        }
        Ok(Config {
            output: cli.output,
            tolerance: cli.tolerance,
            cap: cli.cap,
        })
    }
}

/// Printed output and the exit code on success.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.text);
            if !report.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let config = Config::from_cli(cli)?;
    match &cli.command {
        Command::Inspect(source) => inspect(&config, source),
        Command::Spectrum { source, verify } => spectrum(&config, source, *verify),
        Command::Check { source, mode } => check(&config, source, *mode),
        Command::Census { n, kind, list } => census(&config, *n, *kind, *list),
        Command::Export { source, format, out } => export(source, *format, out.as_deref()),
    }
}

fn symbol_list(symbol: &SymbolSet) -> Vec<u64> {
    symbol.elements().iter().copied().collect()
}

fn partition_map(spec: &GraphSpec) -> BTreeMap<u32, Vec<u64>> {
    d_partition(spec)
        .levels()
        .map(|(i, ds)| (i, ds.iter().copied().collect()))
        .collect()
}

fn inspect(config: &Config, source: &SpecSource) -> Result<Report, Failure> {
    let spec = source.resolve()?;
    let symbol = build_symbol(&spec);
    if config.output == OutputFormat::Json {
        let out = json!({
            "spec": spec,
            "symbol": symbol_list(&symbol),
            "partition": partition_map(&spec),
            "integral": true,
        });
        return Ok(Report::ok(to_json(&out)));
    }
    let mut text = String::new();
    writeln!(text, "n         {}", spec.n()).unwrap();
    writeln!(text, "graph     {}", if spec.is_empty() { "empty" } else { "nonempty" }).unwrap();
    writeln!(text, "symbol    {{{}}}", join(symbol_list(&symbol))).unwrap();
    writeln!(text, "integral  yes").unwrap();
    if !spec.is_empty() {
        writeln!(text, "{:>6} {:>6} {:>6}", "d", "sigma", "level").unwrap();
        for (&d, &s) in spec.divisor_signs() {
            writeln!(
                text,
                "{:>6} {:>6} {:>6}",
                d,
                s.to_string(),
                (spec.n() / d).trailing_zeros()
            )
            .unwrap();
        }
    }
    Ok(Report::ok(text))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn spectrum(config: &Config, source: &SpecSource, verify: bool) -> Result<Report, Failure> {
    let spec = source.resolve()?;
    let closed = eigenvalues_closed(&spec);
    if verify {
        let direct = eigenvalues_direct(&build_symbol(&spec)).map_err(|e| Failure::internal(e.to_string()))?;
        if direct != closed {
            return Err(Failure::internal(format!(
                "closed form {:?} disagrees with direct sum {:?}",
                closed.values(),
                direct.values()
            )));
        }
    }
    if config.output == OutputFormat::Json {
        return Ok(Report::ok(to_json(&closed)));
    }
    let mut text = format!("{:>6} {:>8}\n", "j", "mu_j");
    for (j, mu) in closed.values().iter().enumerate() {
        writeln!(text, "{j:>6} {mu:>8}").unwrap();
    }
    if verify {
        text.push_str("verified against direct sum\n");
    }
    Ok(Report::ok(text))
}

fn profile_strings(profile: &ValuationProfile) -> Vec<String> {
    profile.values.iter().map(|v| v.to_string()).collect()
}

fn check(config: &Config, source: &SpecSource, mode: Mode) -> Result<Report, Failure> {
    let spec = source.resolve()?;
    let n = spec.n();
    let mu = eigenvalues_closed(&spec);
    let partition = d_partition(&spec);
    let (positive, offsets): (bool, Vec<u64>) = match mode {
        Mode::Pst => {
            let yes = has_pst(&spec);
            (yes, if yes { vec![n / 2] } else { vec![] })
        }
        Mode::Mst => {
            let yes = has_mst(&spec);
            (
                yes,
                if yes {
                    pst_pair_offsets(&spec).into_iter().collect()
                } else {
                    vec![]
                },
            )
        }
        Mode::Ust => (has_ust(&spec), vec![]),
    };
    let mut certificates = Vec::new();
    for &offset in &offsets {
        let cert = certify_spectrum(&mu, offset % n, 0, config.tolerance)
            .map_err(|e| Failure::internal(e.to_string()))?
            .ok_or_else(|| {
                Failure::internal(format!(
                    "criterion holds but no transfer time found for offset {offset}"
                ))
            })?;
        certificates.push(cert);
    }
    let k1 = valuation_profile(&mu, 1)?;
    let k2 = valuation_profile(&mu, 2.min(n))?;
    let mode_name = format!("{mode:?}").to_lowercase();
    let code = if positive { 0 } else { 1 };

    if config.output == OutputFormat::Json {
        let out = json!({
            "mode": mode_name,
            "decision": positive,
            "criterion": "divisor-criterion",
            "d2": partition.level(2),
            "d3": partition.level(3),
            "valuation_k1": profile_strings(&k1),
            "valuation_k2": profile_strings(&k2),
            "certificates": certificates,
        });
        return Ok(Report {
            text: to_json(&out),
            code,
        });
    }
    let mut text = String::new();
    writeln!(text, "mode        {mode_name}").unwrap();
    writeln!(text, "decision    {}", if positive { "positive" } else { "negative" }).unwrap();
    writeln!(
        text,
        "D_2         {{{}}}   (n/4 = {})",
        join(partition.level(2)),
        n as f64 / 4.0
    )
    .unwrap();
    writeln!(
        text,
        "D_3         {{{}}}   (n/8 = {})",
        join(partition.level(3)),
        n as f64 / 8.0
    )
    .unwrap();
    writeln!(text, "v2 k=1      [{}]", profile_strings(&k1).join(", ")).unwrap();
    writeln!(text, "v2 k=2      [{}]", profile_strings(&k2).join(", ")).unwrap();
    if !certificates.is_empty() {
        writeln!(
            text,
            "{:>6} {:>6} {:>8} {:>12} {:>24} {:>16}",
            "a", "b", "t/2pi", "t", "phase", "fidelity"
        )
        .unwrap();
        for c in &certificates {
            let phase = format!("{:+.6}{:+.6}i", c.phase.re, c.phase.im);
            writeln!(
                text,
                "{:>6} {:>6} {:>8} {:>12.6} {:>24} {:>16.12}",
                c.a,
                c.b,
                c.time.to_string(),
                c.time.radians(),
                phase,
                c.fidelity
            )
            .unwrap();
        }
    }
    Ok(Report { text, code })
}

fn census(config: &Config, n: u64, kind: Kind, list: bool) -> Result<Report, Failure> {
    if n < 4 {
        return Err(Failure::invalid(format!("census order must be at least 4, got {n}")));
    }
    let record = enumerate_with_cap(n, kind, config.cap)?;
    let text = if config.output == OutputFormat::Json {
        to_json(&record)
    } else {
        let mut text = format!(
            "n={} kind={} formula={} enumerated={} {}\n",
            record.n,
            record.kind,
            record.formula_count,
            record.enumerated_count,
            if record.counts_agree() { "(agree)" } else { "(MISMATCH)" }
        );
        if list {
            for spec in &record.specs {
                writeln!(text, "{spec}").unwrap();
            }
        }
        text
    };
    if !record.counts_agree() {
        print!("{text}");
        return Err(Failure::internal(format!(
            "formula count {} != enumerated count {}",
            record.formula_count, record.enumerated_count
        )));
    }
    Ok(Report::ok(text))
}

fn render_export(symbol: &SymbolSet, format: ExportFormat) -> String {
    let h = hermitian_adjacency(symbol);
    match format {
        ExportFormat::Dot => {
            let mut text = format!("digraph iocg_{} {{\n", symbol.n());
            for v in 0..h.n() {
                writeln!(text, "  {v};").unwrap();
            }
            for (u, v) in h.arcs() {
                writeln!(text, "  {u} -> {v};").unwrap();
            }
            text.push_str("}\n");
            text
        }
        ExportFormat::Csv => h.rows().map(|row| join(row.iter()).replace(' ', "") + "\n").collect(),
        ExportFormat::Json => serde_json::to_string(symbol).expect("serializable symbol") + "\n",
    }
}

fn export(source: &SpecSource, format: ExportFormat, out: Option<&std::path::Path>) -> Result<Report, Failure> {
    let spec = source.resolve()?;
    let text = render_export(&build_symbol(&spec), format);
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
            Ok(Report::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(Report::ok(text)),
    }
}
