use num_traits::{One, Zero};
use proptest::prelude::*;

use zetalike::combinatorics::{all_compositions, count_weak_compositions, weak_compositions};
use zetalike::eta::{eta_symbolic, partial_fraction_shifted, EtaIndex, Render, ZetaExpr};
use zetalike::numeric::{int, pow_i, ratio, Rational};
use zetalike::output::SymbolicValue;
use zetalike::rho::{rho_exact, rho_series_partial, rho_series_tail, RhoIndex};

fn eta_index() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..=4, 1..=6).prop_filter("weight 2..=7", |v| (2..=7).contains(&v.iter().sum::<u32>()))
}

fn rho_index() -> impl Strategy<Value = Vec<u32>> {
    (proptest::collection::vec(1u32..=3, 0..=3), 2u32..=4).prop_map(|(mut head, last)| {
        head.push(last);
        head
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn partial_fractions_reconstruct_the_product(parts in eta_index()) {
        let table = partial_fraction_shifted(&parts);
        prop_assert_eq!(table.simple_pole_sum(), Rational::zero());
        for n in [int(1), int(2), ratio(7, 2), ratio(11, 3)] {
            let direct = parts
                .iter()
                .enumerate()
                .map(|(j, &s)| pow_i(&(&n + int(j as i64)), -(s as i32)))
                .fold(Rational::one(), |a, b| a * b);
            prop_assert_eq!(table.evaluate(&n).unwrap(), direct);
        }
    }

    #[test]
    fn eta_reduction_stays_within_weight(parts in eta_index()) {
        let w: u32 = parts.iter().sum();
        let e = eta_symbolic(&EtaIndex::new(parts).unwrap());
        prop_assert!(e.max_zeta_index().unwrap_or(0) <= w);
    }

    #[test]
    fn rendered_forms_parse_back(parts in eta_index()) {
        let e = eta_symbolic(&EtaIndex::new(parts).unwrap());
        prop_assert_eq!(ZetaExpr::parse(&e.render(Render::Pi)).unwrap(), e.clone());
        prop_assert_eq!(ZetaExpr::parse(&e.render(Render::Zeta)).unwrap(), e);
    }

    #[test]
    fn json_round_trip_is_byte_identical(parts in eta_index()) {
        let e = eta_symbolic(&EtaIndex::new(parts).unwrap());
        let json = serde_json::to_string(&SymbolicValue::from_expr(&e)).unwrap();
        let back: SymbolicValue = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
        prop_assert_eq!(back.to_expr().unwrap(), e);
    }

    #[test]
    fn rho_partial_plus_tail_is_exact(parts in rho_index(), cutoff in 1u32..30) {
        let idx = RhoIndex::new(parts).unwrap();
        prop_assert_eq!(rho_series_partial(&idx, cutoff) + rho_series_tail(&idx, cutoff), rho_exact(&idx));
    }

    #[test]
    fn weak_compositions_are_lexicographic(n in 0u32..=9, k in 1usize..=5) {
        let items: Vec<Vec<u32>> = weak_compositions(n, k).map(|c| c.into_parts()).collect();
        prop_assert_eq!(items.len() as u64, u64::try_from(count_weak_compositions(n, k)).unwrap());
        for pair in items.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
        for c in &items {
            prop_assert_eq!(c.len(), k);
            prop_assert_eq!(c.iter().sum::<u32>(), n);
        }
    }

    #[test]
    fn compositions_order_by_depth_then_lexicographic(n in 1u32..=9) {
        let items: Vec<Vec<u32>> = all_compositions(n).map(|c| c.into_parts()).collect();
        prop_assert_eq!(items.len(), 1usize << (n - 1));
        for pair in items.windows(2) {
            let key = |v: &Vec<u32>| (v.len(), v.clone());
            prop_assert!(key(&pair[0]) < key(&pair[1]));
        }
    }
}
