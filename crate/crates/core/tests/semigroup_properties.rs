use proptest::prelude::*;
use semicov::oracle::brute_membership;
use semicov::NumericalSemigroup;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Desk-scale generator sets with gcd 1.
fn generators() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..30, 1..5).prop_filter("gcd must be 1", |v| {
        v.iter().fold(0, |a, &b| gcd(a, b)) == 1
    })
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    generators().prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

/// Is `S ∪ {x}` closed under addition? Checked directly on the table.
fn adjoin_is_closed(s: &NumericalSemigroup, x: i64) -> bool {
    let f = s.frobenius();
    let member = |v: i64| v == x || s.contains(v);
    (1..=f)
        .filter(|&a| member(a))
        .all(|a| (a..=f - a).filter(|&b| member(b)).all(|b| member(a + b)))
}

proptest! {
    #[test]
    fn membership_matches_dynamic_programming(g in generators()) {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        for n in -2..=s.frobenius() + 5 {
            prop_assert_eq!(s.contains(n), brute_membership(&g, n));
        }
    }

    #[test]
    fn frobenius_is_largest_gap_and_genus_counts_gaps(s in semigroup()) {
        let gaps: Vec<i64> = (0..=s.frobenius()).filter(|&v| !s.contains(v)).collect();
        prop_assert_eq!(s.genus(), gaps.len() as u64);
        prop_assert_eq!(gaps.last().copied().unwrap_or(-1), s.frobenius());
        prop_assert_eq!(s.gaps().len() as u64, s.genus());
    }

    #[test]
    fn msg_round_trip(g in generators()) {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        let msg = s.minimal_generators().to_vec();
        prop_assert!(msg.iter().all(|x| g.contains(x)));
        prop_assert_eq!(NumericalSemigroup::from_generators(&msg).unwrap(), s.clone());
        // minimality: dropping any generator yields a different monoid
        for i in 0..msg.len() {
            let mut rest = msg.clone();
            let dropped = rest.remove(i);
            prop_assert!(!brute_membership(&rest, dropped as i64));
        }
    }

    #[test]
    fn apery_sets_have_n_elements(s in semigroup(), k in 0usize..4) {
        let n = (1u64..).find(|&x| s.contains(x as i64)).map(|m| (m..).filter(|&x| s.contains(x as i64)).nth(k).unwrap()).unwrap();
        let ap = s.apery(n as i64).unwrap();
        prop_assert_eq!(ap.len() as u64, n);
        prop_assert_eq!(ap.witness(0), 0);
        prop_assert_eq!(*ap.elements().last().unwrap() as i64, s.frobenius() + n as i64);
        for (i, &w) in ap.witnesses().iter().enumerate() {
            prop_assert_eq!(w % n, i as u64);
            prop_assert!(s.contains(w as i64));
            prop_assert!(!s.contains(w as i64 - n as i64));
        }
    }

    #[test]
    fn pseudo_frobenius_by_definition(s in semigroup()) {
        prop_assume!(!s.is_naturals());
        let positive: Vec<i64> = (1..=s.frobenius() + 1).filter(|&v| s.contains(v)).collect();
        let expect: Vec<u64> = (1..=s.frobenius())
            .filter(|&z| !s.contains(z) && positive.iter().all(|&p| s.contains(z + p)))
            .map(|z| z as u64)
            .collect();
        let pf = s.pseudo_frobenius().unwrap();
        prop_assert_eq!(pf.last().copied(), Some(s.frobenius() as u64));
        prop_assert_eq!(&pf, &expect);
        prop_assert_eq!(s.invariants().semigroup_type, pf.len());
    }

    #[test]
    fn special_gaps_are_exactly_the_closed_adjunctions(s in semigroup()) {
        prop_assume!(!s.is_naturals());
        let sg = s.special_gaps().unwrap();
        for x in s.gaps() {
            prop_assert_eq!(sg.contains(&x), adjoin_is_closed(&s, x as i64), "gap {}", x);
        }
        for &x in &sg {
            let t = s.adjoin(x).unwrap();
            prop_assert_eq!(t.genus() + 1, s.genus());
            prop_assert_eq!(t.remove(x).unwrap(), s.clone());
        }
    }

    #[test]
    fn removing_minimal_generators(s in semigroup()) {
        for &x in s.minimal_generators() {
            let t = s.remove(x).unwrap();
            prop_assert!(!t.contains(x as i64));
            prop_assert_eq!(t.genus(), s.genus() + 1);
            prop_assert!(t.special_gaps().unwrap().contains(&x));
        }
    }

    #[test]
    fn intersection_laws(a in semigroup(), b in semigroup(), c in semigroup()) {
        let ab = a.intersect(&b);
        prop_assert_eq!(&ab, &b.intersect(&a));
        prop_assert_eq!(ab.intersect(&c), a.intersect(&b.intersect(&c)));
        prop_assert_eq!(a.intersect(&a), a.clone());
        prop_assert_eq!(ab.frobenius(), a.frobenius().max(b.frobenius()));
        for v in 0..=ab.frobenius() + 1 {
            prop_assert_eq!(ab.contains(v), a.contains(v) && b.contains(v));
        }
        prop_assert!(ab.is_subset_of(&a) && ab.is_subset_of(&b));
    }

    #[test]
    fn sum_is_generated_by_union(g in generators(), extra in prop::collection::vec(1u64..20, 0..3)) {
        let m = NumericalSemigroup::from_generators(&g).unwrap();
        let s = m.sum(&extra).unwrap();
        let mut all = g.clone();
        all.extend(&extra);
        for v in 0..=s.frobenius().max(m.frobenius()) + 2 {
            prop_assert_eq!(s.contains(v), brute_membership(&all, v));
        }
    }

    #[test]
    fn canonical_order_is_consistent_with_equality(a in semigroup(), b in semigroup()) {
        prop_assert_eq!(a.cmp(&b) == std::cmp::Ordering::Equal, a == b);
    }
}

#[test]
fn msg_of_table_example() {
    let s = NumericalSemigroup::from_membership(8, |x| [0, 4, 6, 8].contains(&x)).unwrap();
    // independent check: an element is a minimal generator iff it is not a
    // sum of two positive members
    let members: Vec<i64> = (1..=30).filter(|&v| s.contains(v)).collect();
    let brute: Vec<u64> = members
        .iter()
        .filter(|&&v| !members.iter().any(|&a| a < v && s.contains(v - a)))
        .map(|&v| v as u64)
        .collect();
    assert_eq!(brute, vec![4, 6, 9, 11]);
    assert_eq!(s.minimal_generators(), &brute[..]);
}

#[test]
fn values_are_shareable_across_threads() {
    let s = NumericalSemigroup::from_generators(&[11, 13, 17]).unwrap();
    let msgs: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| s.minimal_generators().to_vec()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(msgs.iter().all(|m| m == &[11, 13, 17]));
}
