mod common;

use std::f64::consts::PI;

use iocg::numtheory::{gcd, sine_sum_closed, sine_sum_direct};
use iocg::*;
use proptest::prelude::*;

fn census_orders() -> impl Iterator<Item = u64> {
    (4..=64).step_by(4)
}

fn arb_spec() -> impl Strategy<Value = GraphSpec> {
    (1u64..=24).prop_flat_map(|k| {
        let n = 4 * k;
        let ds = iocg::numtheory::divisors(k).unwrap();
        proptest::collection::vec(0u8..3, ds.len()).prop_map(move |states| {
            let chosen = ds.iter().zip(states).filter_map(|(&d, s)| match s {
                1 => Some((d, Sign::Plus)),
                2 => Some((d, Sign::Minus)),
                _ => None,
            });
            GraphSpec::new(n, chosen).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn classify_inverts_build(spec in arb_spec()) {
        let symbol = build_symbol(&spec);
        prop_assert_eq!(classify_symbol(&symbol).unwrap(), spec);
    }

    #[test]
    fn built_symbols_are_oriented(spec in arb_spec()) {
        let symbol = build_symbol(&spec);
        let n = symbol.n();
        for &k in symbol.elements() {
            prop_assert!(!symbol.contains(n - k));
        }
    }

    #[test]
    fn json_round_trip(spec in arb_spec()) {
        let json = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(serde_json::from_str::<GraphSpec>(&json).unwrap(), spec.clone());
        let symbol = build_symbol(&spec);
        let json = serde_json::to_string(&symbol).unwrap();
        prop_assert_eq!(serde_json::from_str::<SymbolSet>(&json).unwrap(), symbol);
    }

    #[test]
    fn unit_images_are_isospectral(spec in arb_spec(), u in 1u64..200) {
        let symbol = build_symbol(&spec);
        let n = symbol.n();
        prop_assume!(gcd(u, n) == 1);
        let image = symbol.scaled(u).unwrap();
        prop_assert_eq!(eigenvalues_direct(&symbol).unwrap().sorted(), eigenvalues_direct(&image).unwrap().sorted());
    }

    #[test]
    fn transition_is_unitary_and_periodic(spec in arb_spec(), a in 0u64..96, t in -50.0f64..50.0) {
        let spectrum = eigenvalues_closed(&spec);
        let a = a % spectrum.n();
        prop_assert!((common::row_norm_sq(&spectrum, a, t) - 1.0).abs() < 1e-9);
        for b in 0..spectrum.n() {
            let u0 = transition_entry(&spectrum, a, b, t).unwrap();
            let u1 = transition_entry(&spectrum, a, b, t + 2.0 * PI).unwrap();
            prop_assert!((u0 - u1).norm() < 1e-9);
            prop_assert!(u0.norm() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn ramanujan_sum_periodic(n in 1u64..500, q in 1u64..5000) {
        let r = if q % n == 0 { n } else { q % n };
        prop_assert_eq!(numtheory::ramanujan_sum(n, q).unwrap(), numtheory::ramanujan_sum(n, r).unwrap());
    }
}

use iocg::numtheory;

#[test]
fn sine_sum_closed_matches_direct_small() {
    for n in (4..=64).step_by(4) {
        for q in 1..=n {
            assert_eq!(
                sine_sum_closed(n, q).unwrap(),
                sine_sum_direct(n, q, Sign::Plus).unwrap(),
                "n={n} q={q}"
            );
        }
    }
}

#[test]
fn closed_spectrum_matches_direct_on_census() {
    for n in census_orders() {
        for spec in integral_specs(n).unwrap() {
            let closed = eigenvalues_closed(&spec);
            assert_eq!(closed, eigenvalues_direct(&build_symbol(&spec)).unwrap(), "{spec}");
            assert_eq!(closed.values().iter().sum::<i64>(), 0);
        }
    }
}

#[test]
fn direct_spectrum_matches_dense_eigensolver() {
    for n in [8, 12, 16, 24] {
        for spec in integral_specs(n).unwrap() {
            let symbol = build_symbol(&spec);
            let ours = eigenvalues_direct(&symbol).unwrap().sorted();
            let dense = common::dense_eigenvalues(&symbol);
            for (x, y) in ours.iter().zip(&dense) {
                assert!((*x as f64 - y).abs() < 1e-6, "{spec}: {ours:?} vs {dense:?}");
            }
        }
    }
}

#[test]
fn pst_spectra_have_level_two_structure() {
    for n in census_orders() {
        for spec in integral_specs(n).unwrap().into_iter().filter(has_pst) {
            let mu = eigenvalues_closed(&spec);
            let s = spec.sign(n / 4).unwrap().value();
            for j in 1..n {
                if j % 2 == 1 {
                    let expected = if j.div_ceil(2) % 2 == 0 { 2 * s } else { -2 * s };
                    assert_eq!(mu.get(j), expected, "{spec} j={j}");
                } else {
                    assert_eq!(mu.get(j) % 4, 0, "{spec} j={j}");
                }
            }
            assert!(valuation_profile(&mu, 1).unwrap().is_constant(1), "{spec}");
        }
    }
}

#[test]
fn mst_spectra_have_level_three_structure() {
    for n in (8..=64).step_by(8) {
        for spec in integral_specs(n).unwrap().into_iter().filter(has_mst) {
            let mu = eigenvalues_closed(&spec);
            let s = spec.sign(n / 8).unwrap().value();
            for j in 1..n {
                if j % 4 == 2 {
                    let expected = if (j / 2).div_ceil(2) % 2 == 0 { 4 * s } else { -4 * s };
                    assert_eq!(mu.get(j), expected, "{spec} j={j}");
                } else if j % 4 == 0 {
                    assert_eq!(mu.get(j) % 8, 0, "{spec} j={j}");
                }
            }
        }
    }
}

#[test]
fn bounded_search_matches_complete_solver() {
    for n in [4, 8, 12, 16, 20, 24] {
        for spec in integral_specs(n).unwrap() {
            let mu = eigenvalues_closed(&spec);
            for offset in 1..n {
                let complete = common::all_transfer_times(&mu, offset, 0);
                let found = solve_transfer_time(&mu, offset, 0).unwrap();
                assert_eq!(found, complete.iter().min().copied(), "{spec} offset {offset}");
            }
        }
    }
}

#[test]
fn solver_solutions_satisfy_every_step_condition() {
    for n in [8, 16, 24, 32] {
        for spec in integral_specs(n).unwrap() {
            let mu = eigenvalues_closed(&spec);
            for offset in [n / 4, n / 2, 3 * n / 4] {
                if let Some(t) = solve_transfer_time(&mu, offset, 0).unwrap() {
                    for k in 1..=n {
                        assert!(
                            k_step_condition(&mu, offset, 0, t, k).unwrap(),
                            "{spec} offset {offset} k={k}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn quarter_and_three_quarter_transfers_coincide() {
    for n in [8, 16, 24, 32] {
        for spec in integral_specs(n).unwrap() {
            let quarter = certify(&spec, n / 4, 0).unwrap();
            let three = certify(&spec, 3 * n / 4, 0).unwrap();
            assert_eq!(quarter.is_some(), three.is_some(), "{spec}");
        }
    }
}

#[test]
fn certificates_are_translation_invariant() {
    for spec in enumerate(16, Kind::Mst).unwrap().specs {
        for offset in pst_pair_offsets(&spec) {
            let base = certify(&spec, offset, 0).unwrap().unwrap();
            for c in 1..16 {
                let shifted = certify(&spec, (offset + c) % 16, c).unwrap().unwrap();
                assert_eq!(shifted.time, base.time);
                assert!((shifted.phase - base.phase).norm() < 1e-12);
                assert!((shifted.fidelity - base.fidelity).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn pst_census_structure() {
    for n in census_orders() {
        let record = enumerate(n, Kind::Pst).unwrap();
        let mst = enumerate(n, Kind::Mst).unwrap();
        for spec in &mst.specs {
            assert!(record.specs.contains(spec));
        }
        for spec in &record.specs {
            let partition = d_partition(spec);
            assert_eq!(partition.level(2).into_iter().collect::<Vec<_>>(), vec![n / 4]);
        }
        // each divisor at level >= 3 shows up in all three states
        for d in numtheory::divisors(n / 4).unwrap() {
            if (n / d).trailing_zeros() >= 3 {
                let states: std::collections::BTreeSet<_> = record.specs.iter().map(|s| s.sign(d)).collect();
                assert_eq!(states.len(), 3, "n={n} d={d}");
            }
        }
    }
}

#[test]
fn full_census_members_certify() {
    for n in (4..=32).step_by(4) {
        for spec in enumerate(n, Kind::Pst).unwrap().specs {
            for offset in pst_pair_offsets(&spec) {
                let cert = certify(&spec, offset, 0).unwrap().expect("census member must transfer");
                assert!(cert.fidelity >= 1.0 - 1e-9);
                assert!((cert.phase.norm() - 1.0).abs() < 1e-9);
            }
        }
    }
}
