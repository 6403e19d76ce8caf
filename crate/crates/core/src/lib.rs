//! Integral oriented circulant graphs and quantum state transfer.
//!
//! An oriented circulant graph on `Z_n` has arcs `u → u + k` for `k` in its
//! symbol `C`, with `C ∩ −C = ∅`. Its Hermitian adjacency matrix puts `i` on
//! each arc and `−i` on the reverse. This crate covers:
//!
//! - [`circulant`]: the `(n, D, σ)` encoding of the integral ones, symbol
//!   construction and classification, the adjacency matrix;
//! - [`numtheory`]: valuations, residue classes, Ramanujan sums and sine sums;
//! - [`spectrum`]: closed-form and direct spectra, transition amplitudes;
//! - [`transfer`]: PST/MST decisions, exact transfer times, certificates;
//! - [`census`]: enumeration by order and the closed-form counts.
//!
//! ```
//! use iocg::{build_symbol, certify, eigenvalues_closed, GraphSpec, Sign};
//!
//! let spec = GraphSpec::new(8, [(1, Sign::Plus), (2, Sign::Minus)]).unwrap();
//! let symbol = build_symbol(&spec);
//! assert_eq!(symbol.elements().iter().copied().collect::<Vec<_>>(), [1, 5, 6]);
//! assert_eq!(eigenvalues_closed(&spec).values(), &[0, 2, -4, -2, 0, 2, 4, -2]);
//!
//! let cert = certify(&spec, 2, 0).unwrap().unwrap();
//! assert_eq!((cert.time.p(), cert.time.q()), (3, 8));
//! ```

pub mod census;
pub mod circulant;
pub mod error;
pub mod numtheory;
pub mod spectrum;
pub mod transfer;

pub use census::{
    count_mst_formula, count_pst_formula, enumerate, enumerate_with_cap, integral_specs, CensusRecord, Kind,
};
pub use circulant::{
    build_symbol, classify_symbol, d_partition, hermitian_adjacency, DivisorPartition, GraphSpec, HermitianAdjacency,
    SymbolSet,
};
pub use error::{Error, Result};
pub use numtheory::Sign;
pub use spectrum::{eigenvalues_closed, eigenvalues_direct, eigenvalues_float, transition_entry, Spectrum};
pub use transfer::{
    certify, certify_spectrum, certify_with_tolerance, has_mst, has_pst, has_ust, k_step_condition, pst_pair_offsets,
    solve_transfer_time, valuation_profile, Criterion, RationalTime, TransferCertificate, Valuation, ValuationProfile,
};
