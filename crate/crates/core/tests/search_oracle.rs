use addbasis::search::{normalize, search, sufficient_max_loc, SearchConfig, SearchMode};
use addbasis::{covered_set, IntSet, Placement, Rational};
use proptest::prelude::*;

/// Best `m` over every placement with exactly `l` segments in `[0, max_loc]`,
/// by enumerating all `l`-subsets of the `3 (max_loc + 1)` slots.
fn naive_best(l: usize, max_loc: u64) -> u64 {
    let slots: Vec<(usize, u64)> = (0..3)
        .flat_map(|part| (0..=max_loc).map(move |loc| (part, loc)))
        .collect();
    let mut best = 0;
    let mut chosen = Vec::with_capacity(l);
    fn rec(slots: &[(usize, u64)], start: usize, l: usize, chosen: &mut Vec<(usize, u64)>, best: &mut u64) {
        if chosen.len() == l {
            let part = |p: usize| IntSet::new(chosen.iter().filter(|s| s.0 == p).map(|s| s.1)).unwrap();
            let placement = Placement::new(part(0), part(1), part(2)).unwrap();
            *best = (*best).max(covered_set(&placement).m);
            return;
        }
        for idx in start..slots.len() {
            if slots.len() - idx < l - chosen.len() {
                break;
            }
            chosen.push(slots[idx]);
            rec(slots, idx + 1, l, chosen, best);
            chosen.pop();
        }
    }
    rec(&slots, 0, l, &mut chosen, &mut best);
    best
}

fn exhaustive(l: u32, max_loc: u32) -> addbasis::search::SearchOutcome {
    search(&SearchConfig::exhaustive(l, max_loc)).unwrap()
}

#[test]
fn small_budgets() {
    assert_eq!(exhaustive(1, 0).best_m, 0);
    assert_eq!(exhaustive(2, 2).best_m, 1);
    let three = exhaustive(3, 3);
    assert_eq!(three.best_m, 2);
    assert!(three.complete);
}

#[test]
fn matches_enumeration_oracle_small_domains() {
    for l in 1..=4u32 {
        for max_loc in 0..=6u32 {
            if 3 * (max_loc + 1) < l {
                continue;
            }
            let got = exhaustive(l, max_loc);
            assert_eq!(got.best_m, naive_best(l as usize, max_loc as u64), "l={l} L={max_loc}");
            assert!(got.complete);
        }
    }
}

#[test]
fn matches_enumeration_oracle_l5() {
    for max_loc in [3u32, 6, sufficient_max_loc(5)] {
        assert_eq!(
            exhaustive(5, max_loc).best_m,
            naive_best(5, max_loc as u64),
            "L={max_loc}"
        );
    }
}

#[test]
fn prune_does_not_change_results() {
    for l in 1..=5u32 {
        for max_loc in [2u32, 4, 6, sufficient_max_loc(l)] {
            if 3 * (max_loc + 1) < l {
                continue;
            }
            let pruned = exhaustive(l, max_loc);
            let plain = search(&SearchConfig {
                prune: false,
                ..SearchConfig::exhaustive(l, max_loc)
            })
            .unwrap();
            assert_eq!(pruned.best_m, plain.best_m, "l={l} L={max_loc}");
            assert_eq!(pruned.witness, plain.witness, "l={l} L={max_loc}");
            assert!(pruned.nodes_expanded <= plain.nodes_expanded);
        }
    }
}

#[test]
fn locations_beyond_the_cap_never_help() {
    for l in 1..=5u32 {
        let cap = sufficient_max_loc(l).max(1);
        let at_cap = exhaustive(l, cap).best_m;
        for extra in [1, 3, 8] {
            assert_eq!(exhaustive(l, cap + extra).best_m, at_cap, "l={l}");
        }
    }
}

#[test]
fn ratio_ceilings() {
    for l in 2..=8u32 {
        let out = exhaustive(l, sufficient_max_loc(l));
        assert!(out.complete);
        assert!(out.ratio <= Rational::new(1, 3), "l={l}");
        if l <= 7 {
            assert!(out.ratio <= Rational::new(2, 7), "l={l}");
        }
    }
}

#[test]
fn seven_segments_reach_fourteen() {
    let out = exhaustive(7, 16);
    assert_eq!(out.best_m, 14);
    assert_eq!(out.ratio, Rational::new(2, 7));
    assert!(out.complete);
    assert_eq!(covered_set(&out.witness).m, 14);
    assert_eq!(out.witness.len(), 7);
}

#[test]
fn thread_count_does_not_change_anything() {
    for (l, max_loc) in [(6u32, 12u32), (8, 22)] {
        let one = exhaustive(l, max_loc);
        let four = search(&SearchConfig {
            threads: 4,
            ..SearchConfig::exhaustive(l, max_loc)
        })
        .unwrap();
        assert_eq!(one, four);
    }
}

#[test]
fn node_budget_marks_incomplete() {
    let out = search(&SearchConfig {
        budget_nodes: Some(20),
        ..SearchConfig::exhaustive(8, 22)
    })
    .unwrap();
    assert!(!out.complete);
    assert_eq!(covered_set(&out.witness).m, out.best_m);
}

#[test]
fn heuristics_return_valid_witnesses() {
    let base = SearchConfig::exhaustive(12, 48);
    let beam = search(&base.clone().with_mode(SearchMode::Beam { width: 32 })).unwrap();
    let restarts = search(&SearchConfig {
        threads: 3,
        ..base.clone().with_mode(SearchMode::RandomRestart { count: 40, seed: 7 })
    })
    .unwrap();
    for out in [&beam, &restarts] {
        assert!(!out.complete);
        assert_eq!(out.witness.len(), 12);
        assert_eq!(covered_set(&out.witness).m, out.best_m);
        assert!(out.witness.i().largest().unwrap() <= 48);
    }
    // Same seed, same answer, regardless of threads.
    let again = search(&base.with_mode(SearchMode::RandomRestart { count: 40, seed: 7 })).unwrap();
    assert_eq!(again, restarts);
    // Exhaustive optimum at this size is 40.
    assert!((36..=40).contains(&beam.best_m), "beam found {}", beam.best_m);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_idempotent_and_keeps_m(
        i in prop::collection::btree_set(0u64..10, 0..4),
        j in prop::collection::btree_set(0u64..10, 0..4),
        k in prop::collection::btree_set(0u64..10, 1..4),
    ) {
        let p = Placement::new(IntSet::new(i).unwrap(), IntSet::new(j).unwrap(), IntSet::new(k).unwrap()).unwrap();
        let n = normalize(&p);
        prop_assert_eq!(normalize(&n), n.clone());
        prop_assert_eq!(covered_set(&n).m, covered_set(&p).m);
        prop_assert!(n.j() <= n.k());
    }
}
