//! Property suites: invariants checked on randomized small semigroups
//! against the brute-force oracles in `common`.

mod common;

use proptest::prelude::*;

use sgp_core::presentations::{
    betti_scan_bound, factorization_graph_components, factorizations,
    minimal_presentation_cardinality, poly_identity_zero, Colength, MonomialIdeal,
    SparsePolynomial,
};
use sgp_core::{minimal_generators, SemigroupSpec};

/// Strategy for a small random numerical semigroup.
fn small_semigroup() -> impl Strategy<Value = SemigroupSpec> {
    proptest::collection::vec(2u64..60, 2..6)
        .prop_filter_map("candidates must be coprime overall", |v| {
            let reduced = minimal_generators(&v).ok()?;
            SemigroupSpec::new(reduced).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn apery_table_invariants(spec in small_semigroup()) {
        for &a in spec.generators() {
            let table = spec.apery(a).unwrap();
            prop_assert_eq!(table.entries().len() as u64, a);
            prop_assert_eq!(table.entries()[0] % a, 0);
            for (r, &w) in table.entries().iter().enumerate() {
                prop_assert_eq!(w % a, r as u64);
                prop_assert!(spec.contains(w));
                if w >= a {
                    prop_assert!(!spec.contains(w - a));
                }
            }
            prop_assert_eq!(table.max() as i64 - a as i64, spec.frobenius());
        }
    }

    #[test]
    fn membership_agrees_with_dp_oracle(spec in small_semigroup()) {
        let f = spec.frobenius();
        let bound = (f.max(0) as u64) + 2 * spec.multiplicity();
        let dp = common::dp_members(spec.generators(), bound);
        for x in 0..=bound {
            prop_assert_eq!(spec.contains(x), dp[x as usize], "x = {}", x);
        }
    }

    #[test]
    fn genus_and_symmetry_routes_agree(spec in small_semigroup()) {
        // both functions carry internal double-computation asserts
        let g = spec.genus();
        prop_assert_eq!(g as usize, spec.gaps().len());
        let _ = spec.is_symmetric();
        let f = spec.frobenius();
        if f >= 0 {
            prop_assert!(!spec.contains(f as u64));
        }
        for k in 1..=2 * spec.multiplicity() as i64 {
            prop_assert!(spec.contains((f + k) as u64));
        }
        prop_assert!(g as i64 >= (f + 1) / 2);
        prop_assert_eq!(g as i64 == (f + 1) / 2 && f % 2 == 1, spec.is_symmetric());
    }

    #[test]
    fn minimal_generators_is_idempotent_and_preserves_membership(
        candidates in proptest::collection::vec(2u64..60, 2..6)
    ) {
        prop_assume!(minimal_generators(&candidates).is_ok());
        let reduced = minimal_generators(&candidates).unwrap();
        prop_assert_eq!(minimal_generators(&reduced).unwrap(), reduced.clone());
        let spec = SemigroupSpec::new(reduced).unwrap();
        // same semigroup: membership agrees with the DP oracle on the
        // original candidate list well past the Frobenius number
        let bound = (spec.frobenius().max(0) as u64) + 2 * spec.multiplicity();
        let dp = common::dp_members(&candidates, bound);
        for x in 0..=bound {
            prop_assert_eq!(spec.contains(x), dp[x as usize]);
        }
    }

    #[test]
    fn fibers_match_nested_loop_oracle(
        spec in proptest::collection::vec(2u64..30, 2..5)
            .prop_filter_map("coprime", |v| {
                let reduced = minimal_generators(&v).ok()?;
                if reduced.len() > 4 { return None; }
                SemigroupSpec::new(reduced).ok()
            }),
        s in 0u64..200
    ) {
        let mut got: Vec<Vec<u32>> = factorizations(&spec, s)
            .unwrap()
            .into_iter()
            .map(|f| f.exponents().to_vec())
            .collect();
        got.sort();
        prop_assert_eq!(got, common::oracle_fiber(spec.generators(), s));
    }

    #[test]
    fn fibers_above_the_scan_bound_are_connected(spec in small_semigroup(), offset in 1u64..40) {
        prop_assume!(spec.multiplicity() > 1);
        let s = betti_scan_bound(&spec) + offset;
        prop_assume!(spec.contains(s));
        let fiber = factorizations(&spec, s).unwrap();
        prop_assert!(!fiber.is_empty());
        prop_assert_eq!(factorization_graph_components(&spec, &fiber).unwrap().len(), 1);
    }

    #[test]
    fn colength_matches_direct_enumeration(
        extra in proptest::collection::vec(proptest::collection::vec(0u32..5, 3), 0..5),
        pures in proptest::collection::vec(1u32..5, 3)
    ) {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for (var, &p) in pures.iter().enumerate() {
            let mut m = vec![0u32; 3];
            m[var] = p;
            gens.push(m);
        }
        gens.extend(extra.into_iter().filter(|m| m.iter().any(|&e| e > 0)));
        let ideal = MonomialIdeal::new(3, gens.clone()).unwrap();
        let max_pure = *pures.iter().max().unwrap();
        let direct = common::oracle_standard_monomials(3, &gens, 3 * max_pure);
        prop_assert_eq!(ideal.colength(), Colength::Finite(direct));
    }

    #[test]
    fn identity_check_is_order_independent(seed in 0u64..1000) {
        // x0^3 - x1^3 = (x0 - x1)(x0^2) + (x0 - x1)(x0*x1) + (x0 - x1)(x1^2)
        let mono = |e: &[u32], c: i64| SparsePolynomial::monomial(2, e, c).unwrap();
        let diff = mono(&[1, 0], 1).checked_sub(&mono(&[0, 1], 1)).unwrap();
        let mut terms = vec![
            (diff.clone(), mono(&[2, 0], 1)),
            (diff.clone(), mono(&[1, 1], 1)),
            (diff, mono(&[0, 2], 1)),
        ];
        let target = mono(&[3, 0], -1).checked_add(&mono(&[0, 3], 1)).unwrap();
        // rotate deterministically by the seed
        terms.rotate_left((seed % 3) as usize);
        if seed % 2 == 1 {
            terms.swap(0, 1);
        }
        prop_assert!(poly_identity_zero(&terms, &target).unwrap());
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn two_generator_semigroups_need_one_relation() {
    for a in 2u64..=12 {
        for b in a + 1..=12 {
            if gcd(a, b) != 1 {
                continue;
            }
            let spec = SemigroupSpec::new(vec![a, b]).unwrap();
            assert_eq!(
                minimal_presentation_cardinality(&spec).unwrap(),
                1,
                "<{a},{b}>"
            );
        }
    }
}

#[test]
fn oracle_apery_agrees_with_relaxation_on_the_stable() {
    for gens in common::sample_semigroups() {
        let spec = SemigroupSpec::new(gens.clone()).unwrap();
        let m = spec.multiplicity();
        if m == 1 {
            continue;
        }
        assert_eq!(
            spec.apery(m).unwrap().entries(),
            common::oracle_apery(&gens, m).as_slice(),
            "{gens:?}"
        );
    }
}
