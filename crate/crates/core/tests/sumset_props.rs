use std::collections::BTreeSet;

use addbasis::intset::sumset_size_bound;
use addbasis::IntSet;
use proptest::prelude::*;

fn naive_sumset(a: &[u64], b: &[u64]) -> BTreeSet<u64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

fn small_set() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..300, 1..24)
}

fn with_zero() -> impl Strategy<Value = Vec<u64>> {
    small_set().prop_map(|mut v| {
        v.push(0);
        v
    })
}

proptest! {
    #[test]
    fn matches_pair_enumeration(a in small_set(), b in small_set()) {
        let (sa, sb) = (IntSet::new(a.clone()).unwrap(), IntSet::new(b.clone()).unwrap());
        let got: Vec<u64> = sa.sumset(&sb).unwrap().iter().collect();
        let want: Vec<u64> = naive_sumset(&a, &b).into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn commutative(a in small_set(), b in small_set()) {
        let (sa, sb) = (IntSet::new(a).unwrap(), IntSet::new(b).unwrap());
        prop_assert_eq!(sa.sumset(&sb).unwrap(), sb.sumset(&sa).unwrap());
    }

    #[test]
    fn translation_covariance(a in small_set(), b in small_set(), h in 0i64..500, g in 0i64..500) {
        let (sa, sb) = (IntSet::new(a).unwrap(), IntSet::new(b).unwrap());
        let lhs = sa.translate(h).unwrap().sumset(&sb.translate(g).unwrap()).unwrap();
        let rhs = sa.sumset(&sb).unwrap().translate(h + g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cardinality_and_range_bounds(a in with_zero()) {
        let s = IntSet::new(a).unwrap();
        let k = s.len() as u64;
        let sums = s.sumset(&s).unwrap();
        prop_assert!(sums.len() as u64 <= sumset_size_bound(k));
        // n <= k^2/2 + k/2
        let n = s.range_n().unwrap();
        prop_assert!(2 * n <= k * k + k);
    }

    #[test]
    fn range_postcondition(a in with_zero()) {
        let s = IntSet::new(a.clone()).unwrap();
        let n = s.range_n().unwrap();
        let sums = naive_sumset(&a, &a);
        prop_assert!((0..=n).all(|i| sums.contains(&i)));
        prop_assert!(!sums.contains(&(n + 1)));
    }
}

#[test]
fn large_sumset_against_enumeration() {
    // Spans several thousand words with irregular shifts.
    let a: Vec<u64> = (0..400).map(|i| i * i % 100_003).collect();
    let sa = IntSet::new(a.clone()).unwrap();
    let got: Vec<u64> = sa.sumset(&sa).unwrap().iter().collect();
    let want: Vec<u64> = naive_sumset(&a, &a).into_iter().collect();
    assert_eq!(got, want);
}
