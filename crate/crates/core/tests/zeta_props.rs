mod common;

use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;
use sdh_core::algebra::{series_of_rational, IntMatrix};
use sdh_core::dimension::{compare_even_odd, Parity};
use sdh_core::dynamics::{signed_counts, DEFAULT_ORBIT_BUDGET};
use sdh_core::putnam::{diagonal_pair, homology, two_block_pair};
use sdh_core::zeta::{
    check_corollary, verify_series, zeta_from_actions, zeta_from_homology, zeta_hom_manifold,
    zeta_sft,
};

use common::{graphs, named_graphs};

fn torus_homology(a: &[&[i64]], top: i64) -> BTreeMap<i64, IntMatrix> {
    BTreeMap::from([
        (-1, IntMatrix::from_i64_rows(&[&[1]])),
        (0, IntMatrix::from_i64_rows(a)),
        (1, IntMatrix::from_i64_rows(&[&[top]])),
    ])
}

fn torus_manifold(a: &[&[i64]], top: i64) -> BTreeMap<i64, IntMatrix> {
    BTreeMap::from([
        (0, IntMatrix::from_i64_rows(&[&[1]])),
        (1, IntMatrix::from_i64_rows(a)),
        (2, IntMatrix::from_i64_rows(&[&[top]])),
    ])
}

fn rational(m: &BTreeMap<i64, IntMatrix>) -> BTreeMap<i64, sdh_core::algebra::RationalMatrix> {
    m.iter().map(|(&d, a)| (d, a.to_rational())).collect()
}

#[test]
fn torus_corollary_for_both_matrices() {
    let fib: &[&[i64]] = &[&[1, 1], &[1, 0]];
    let cat: &[&[i64]] = &[&[2, 1], &[1, 1]];
    for (a, top) in [(fib, -1), (cat, 1)] {
        let hom = rational(&torus_homology(a, top));
        let man = torus_manifold(a, top);
        let zh = zeta_hom_manifold(&man).unwrap();
        let zs = zeta_from_actions(&hom).unwrap();
        assert!(check_corollary(Parity::Odd, &zh, &zs));
        assert!(compare_even_odd(Parity::Odd, &hom, &man).unwrap().equal);
    }
    let fib_wrong = torus_manifold(fib, 1);
    let hom = rational(&torus_homology(fib, -1));
    assert!(!check_corollary(
        Parity::Odd,
        &zeta_hom_manifold(&fib_wrong).unwrap(),
        &zeta_from_actions(&hom).unwrap()
    ));
}

#[test]
fn named_graphs_zeta_agreement() {
    for (name, g) in named_graphs() {
        let z = zeta_sft(&g);
        assert!(
            verify_series(&g, &z, 10, DEFAULT_ORBIT_BUDGET).unwrap(),
            "{name}"
        );
        for p in [diagonal_pair(&g), two_block_pair(&g).unwrap()] {
            assert_eq!(
                zeta_from_homology(&homology(&p).unwrap()).unwrap(),
                z,
                "{name}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn zeta_series_matches_counts(g in graphs(3, 4)) {
        prop_assert!(verify_series(&g, &zeta_sft(&g), 8, DEFAULT_ORBIT_BUDGET).unwrap());
    }

    #[test]
    fn log_derivative_recovers_counts(g in graphs(3, 4)) {
        let s = series_of_rational(&zeta_sft(&g), 8).unwrap();
        let counts = signed_counts(&g, 8, DEFAULT_ORBIT_BUDGET).unwrap();
        let logd = s.log_derivative();
        for k in 1..=8 {
            prop_assert_eq!(logd[k - 1].clone(), BigRational::from_integer(counts[k - 1].clone()));
        }
    }

    #[test]
    fn homology_zeta_matches_sft_zeta(g in graphs(3, 4)) {
        let h = homology(&diagonal_pair(&g)).unwrap();
        prop_assert_eq!(zeta_from_homology(&h).unwrap(), zeta_sft(&g));
    }
}
