use cohocolim::fincat::FinPoset;
use cohocolim::freeres::{contractibility, extra_degeneracy, iota_laws, simplicial_identities};
use cohocolim::homalg::snf::{determinant, from_i64, mul};
use cohocolim::homalg::{homology, smith_normal_form};
use cohocolim::simpset::standard::{boundary, delta, points, s0};
use cohocolim::simpset::{is_isomorphic, product, SimplicialSet};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0usize..5, 0usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

/// A random poset on `0..n`, generated by pairs `i < j` of a linear extension.
fn poset() -> impl Strategy<Value = FinPoset> {
    (1usize..6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            FinPoset::new((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
        })
    })
}

fn small_space() -> impl Strategy<Value = SimplicialSet> {
    prop_oneof![
        (1usize..4).prop_map(points),
        (0usize..3).prop_map(delta),
        (1usize..4).prop_map(boundary),
        Just(s0()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(rows in matrix()) {
        let m = from_i64(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(mul(&mul(&s.u, &m), &s.v), s.d.clone());
        prop_assert_eq!(determinant(&s.u).abs(), BigInt::from(1));
        prop_assert_eq!(determinant(&s.v).abs(), BigInt::from(1));
        for (i, r) in s.d.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                prop_assert!(i == j || x.is_zero());
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn homology_is_invariant_under_relabeling(x in small_space()) {
        let y = x.relabeled(|l| format!("r{l}"));
        prop_assert_eq!(homology(&x), homology(&y));
        prop_assert_eq!(is_isomorphic(&x, &y, 100_000).verdict(), "isomorphic");
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers(x in small_space()) {
        let h = homology(&x);
        prop_assert_eq!(h.euler_characteristic(), x.euler_characteristic());
    }

    #[test]
    fn products_satisfy_kunneth_in_degree_zero(x in small_space(), y in small_space()) {
        let p = product(&x, &y).unwrap();
        let (hx, hy, hp) = (homology(&x), homology(&y), homology(&p.realized.set));
        prop_assert_eq!(hp.betti(0), hx.betti(0) * hy.betti(0));
        prop_assert_eq!(hp.euler_characteristic(), hx.euler_characteristic() * hy.euler_characteristic());
    }

    #[test]
    fn resolution_laws_hold_on_random_posets(p in poset()) {
        let cat = p.to_category();
        prop_assert!(simplicial_identities(&cat, 3).unwrap().passes());
        prop_assert!(extra_degeneracy(&cat, 3).unwrap().passes());
        prop_assert!(contractibility(&cat).unwrap().passes());
        for r in iota_laws(&cat, 3).unwrap() {
            prop_assert!(r.passes(), "{} {:?}", r.law, r.counterexamples);
        }
    }
}
