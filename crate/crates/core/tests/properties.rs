//! Invariants on random inputs larger than the exhaustive verifier reaches.

use proptest::prelude::*;

use relmat::io::{relation_from_json, relation_to_json};
use relmat::matroid::{rank_exhaustive, rank_greedy};
use relmat::{
    build_relation_matroid, circuits, closure, closure_via_circuits, independent_sets,
    induce_relation, lower_approx, same_neighborhood_relation, upper_approx, BinaryRelation,
    ExplicitMatroid, FnOracle, MatroidOracle, Subset, Universe,
};

fn relation(max_n: usize) -> impl Strategy<Value = BinaryRelation> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let u = Universe::new(n).unwrap();
            let pairs = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
            BinaryRelation::from_pairs(&u, pairs).unwrap()
        })
    })
}

fn relation_and_sets(max_n: usize) -> impl Strategy<Value = (BinaryRelation, Subset, Subset)> {
    relation(max_n).prop_flat_map(|r| {
        let n = r.size();
        let set = move || {
            prop::collection::vec(any::<bool>(), n)
                .prop_map(move |b| Subset::from_elements(n, (0..n).filter(|&i| b[i])).unwrap())
        };
        (Just(r), set(), set())
    })
}

fn wide_subset() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..200).prop_flat_map(|w| (Just(w), prop::collection::vec(0..w, 0..40)))
}

/// Independence straight from the definition: pairwise distinct successor
/// rows.
fn literal_oracle(r: &BinaryRelation) -> FnOracle<impl Fn(&Subset) -> bool + '_> {
    FnOracle::new(r.universe(), move |s: &Subset| {
        let rows: Vec<Subset> = s
            .iter()
            .map(|x| r.successor_neighborhood(x).unwrap())
            .collect();
        (0..rows.len()).all(|i| (i + 1..rows.len()).all(|j| rows[i] != rows[j]))
    })
}

proptest! {
    #[test]
    fn inverse_is_involutive(r in relation(9)) {
        prop_assert_eq!(r.inverse().inverse(), r);
    }

    #[test]
    fn neighborhoods_are_dual(r in relation(9)) {
        let inv = r.inverse();
        for x in 0..r.size() {
            prop_assert_eq!(r.successor_neighborhood(x).unwrap(), inv.predecessor_neighborhood(x).unwrap());
            for y in 0..r.size() {
                prop_assert_eq!(
                    r.successor_neighborhood(x).unwrap().contains(y),
                    r.predecessor_neighborhood(y).unwrap().contains(x)
                );
            }
        }
    }

    #[test]
    fn lower_and_upper_are_dual((r, x, _) in relation_and_sets(10)) {
        let lower = lower_approx(&r, &x).unwrap();
        let upper_of_complement = upper_approx(&r, &x.complement()).unwrap();
        prop_assert_eq!(lower, upper_of_complement.complement());
    }

    #[test]
    fn upper_is_additive_and_monotone((r, x, y) in relation_and_sets(10)) {
        let h = |s: &Subset| upper_approx(&r, s).unwrap();
        prop_assert_eq!(h(&x.union(&y)), h(&x).union(&h(&y)));
        prop_assert!(h(&x.intersection(&y)).is_subset(&h(&x)));
        prop_assert!(h(&Subset::empty(r.size())).is_empty());
    }

    #[test]
    fn reflexive_upper_is_extensive((r, x, _) in relation_and_sets(10)) {
        let n = r.size();
        let reflexive = BinaryRelation::from_pairs(
            r.universe(),
            r.pairs().chain((0..n).map(|i| (i, i))),
        ).unwrap();
        prop_assert!(x.is_subset(&upper_approx(&reflexive, &x).unwrap()));
    }

    #[test]
    fn rank_grows_by_at_most_one((r, x, _) in relation_and_sets(10)) {
        let m = build_relation_matroid(&r);
        let base = m.rank(&x).unwrap();
        prop_assert!(base <= x.len());
        for e in 0..r.size() {
            let grown = m.rank(&x.with(e)).unwrap();
            prop_assert!(grown == base || grown == base + 1);
        }
    }

    #[test]
    fn closed_forms_match_literal_oracle((r, x, _) in relation_and_sets(7)) {
        let m = build_relation_matroid(&r);
        let literal = literal_oracle(&r);
        prop_assert_eq!(m.rank(&x).unwrap(), rank_exhaustive(&literal, &x).unwrap());
        prop_assert_eq!(m.closure(&x).unwrap(), closure(&literal, &x).unwrap());
        prop_assert_eq!(m.circuits(), circuits(&literal).unwrap());
        prop_assert_eq!(independent_sets(&m).unwrap(), independent_sets(&literal).unwrap());
    }

    #[test]
    fn greedy_rank_matches_exhaustive((r, x, _) in relation_and_sets(8)) {
        let m = ExplicitMatroid::from_oracle(&build_relation_matroid(&r)).unwrap();
        prop_assert_eq!(rank_greedy(&m, &x).unwrap(), rank_exhaustive(&m, &x).unwrap());
    }

    #[test]
    fn closure_via_circuits_matches_rank_closure((r, x, _) in relation_and_sets(7)) {
        let m = build_relation_matroid(&r);
        prop_assert_eq!(closure_via_circuits(&m, &x).unwrap(), closure(&m, &x).unwrap());
    }

    #[test]
    fn round_trip_is_same_neighborhood(r in relation(12)) {
        let induced = induce_relation(&build_relation_matroid(&r)).unwrap().into_relation();
        prop_assert!(induced.is_equivalence());
        prop_assert_eq!(&induced, &same_neighborhood_relation(&r));
        let again = induce_relation(&build_relation_matroid(&induced)).unwrap().into_relation();
        prop_assert_eq!(again, induced);
    }

    #[test]
    fn relation_json_round_trips(r in relation(8)) {
        let text = relation_to_json(&r);
        let back = relation_from_json(&text).unwrap();
        prop_assert_eq!(relation_to_json(&back), text);
        prop_assert_eq!(back, r);
    }

    #[test]
    fn relation_matroid_is_verified_oracle(r in relation(6)) {
        let m = build_relation_matroid(&r);
        prop_assert!(m.is_verified_matroid());
        let explicit = ExplicitMatroid::new(r.universe(), independent_sets(&m).unwrap());
        prop_assert!(explicit.is_ok());
    }

    #[test]
    fn wide_subsets_keep_their_elements((w, elems) in wide_subset()) {
        let s = Subset::from_elements(w, elems.iter().copied()).unwrap();
        let mut sorted = elems.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(s.iter().collect::<Vec<_>>(), sorted.clone());
        prop_assert_eq!(s.len(), sorted.len());
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.complement().len(), w - sorted.len());
        prop_assert!(s.is_disjoint(&s.complement()));
    }

    #[test]
    fn subset_order_is_numeric(a in 0u64..1 << 20, b in 0u64..1 << 20) {
        let (x, y) = (Subset::from_mask(20, a), Subset::from_mask(20, b));
        prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        prop_assert_eq!(x.union(&y).to_mask(), Some(a | b));
        prop_assert_eq!(x.difference(&y).to_mask(), Some(a & !b));
    }
}
