mod common;

use proptest::prelude::*;

use common::{brute_key, naive_lattices, naive_rls};
use reslat::algebra::{is_isomorphic, validate};
use reslat::enumerate::{
    enumerate_lattices, enumerate_rl, enumerate_rl_with, find_example, Predicate, PredicateError,
    SearchConstraints, DEFAULT_CAP,
};
use reslat::par::Exec;
use reslat::properties::{is_normal, is_well_connected};

#[test]
fn lattice_counts_match_naive() {
    for n in 1..=5 {
        let ours = enumerate_lattices(n);
        assert_eq!(ours.len(), naive_lattices(n).len(), "n = {n}");
        assert!(ours[0].is_chain());
    }
    assert_eq!(enumerate_lattices(6).len(), 15);
    assert_eq!(enumerate_lattices(7).len(), 53);
}

#[test]
fn small_counts_match_naive() {
    for n in 1..=4 {
        let ours = enumerate_rl(&SearchConstraints::of_size(n)).unwrap();
        let naive = naive_rls(n);
        assert_eq!(ours.len(), naive.len(), "n = {n}");
        for a in &naive {
            assert!(ours.contains_iso(a));
        }
    }
}

#[test]
fn published_counts() {
    let count = |c: SearchConstraints| enumerate_rl(&c).unwrap().len();
    let all = [1, 1, 3, 20, 149, 1488];
    let comm = [1, 1, 3, 16, 100, 794];
    let integral = [1, 1, 2, 9, 49, 364];
    for n in 1..=6 {
        assert_eq!(count(SearchConstraints::of_size(n)), all[n - 1]);
        assert_eq!(
            count(SearchConstraints::of_size(n).commutative(true)),
            comm[n - 1]
        );
        assert_eq!(
            count(SearchConstraints::of_size(n).integral(true)),
            integral[n - 1]
        );
    }
}

#[test]
fn outputs_validate_and_are_distinct() {
    for n in 1..=5 {
        let algs = enumerate_rl(&SearchConstraints::of_size(n))
            .unwrap()
            .into_vec();
        let mut keys: Vec<Vec<usize>> = algs.iter().map(brute_key).collect();
        for a in &algs {
            assert!(validate(&a.to_raw()).unwrap().is_ok());
            assert_eq!(a.zero(), None);
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), algs.len());
    }
}

#[test]
fn modes_agree_at_size_five() {
    let c = SearchConstraints::of_size(5);
    let a = enumerate_rl_with(&c, Exec::Sequential, DEFAULT_CAP).unwrap();
    let b = enumerate_rl_with(&c, Exec::Parallel, DEFAULT_CAP).unwrap();
    assert_eq!(a.entries(), b.entries());
}

#[test]
fn predicates_filter_like_a_post_pass() {
    let all = enumerate_rl(&SearchConstraints::of_size(5)).unwrap();
    for text in [
        "integral & !normal",
        "chain | simple",
        "commutative & !(prelinear)",
        "si & !chain",
    ] {
        let p = Predicate::parse(text).unwrap();
        let filtered = enumerate_rl(&SearchConstraints::of_size(5).predicate(p.clone())).unwrap();
        let expected: Vec<_> = all.iter().filter(|a| p.eval(a)).cloned().collect();
        assert_eq!(filtered.entries(), expected.as_slice(), "{text}");
    }
}

#[test]
fn predicate_syntax() {
    let p = Predicate::parse("integral & (simple | SI) & !well_connected").unwrap();
    assert_eq!(p.to_string(), "integral & (simple | si) & !well-connected");
    assert_eq!(p.required(), vec!["integral"]);
    assert_eq!(Predicate::parse(&p.to_string()).unwrap(), p);
    assert_eq!(
        Predicate::parse("integrl"),
        Err(PredicateError::UnknownProperty("integrl".into()))
    );
    assert!(matches!(
        Predicate::parse("integral &"),
        Err(PredicateError::Syntax { .. })
    ));
    assert!(matches!(
        Predicate::parse("(chain"),
        Err(PredicateError::Syntax { .. })
    ));
}

#[test]
fn found_examples() {
    let simple_not_wc = Predicate::parse("integral & simple & !well-connected").unwrap();
    let c = SearchConstraints::of_size(1).predicate(simple_not_wc);
    let a = find_example(&c, 8, Exec::default(), 8).unwrap().unwrap();
    assert_eq!(a.size(), 5);
    assert!(a.is_integral() && !is_well_connected(&a));

    let non_normal = Predicate::parse("integral & !normal").unwrap();
    let c = SearchConstraints::of_size(1).predicate(non_normal);
    let b = find_example(&c, 6, Exec::default(), DEFAULT_CAP)
        .unwrap()
        .unwrap();
    assert_eq!(b.size(), 4);
    assert!(!is_normal(&b) && !b.is_commutative());

    let none =
        SearchConstraints::of_size(1).predicate(Predicate::parse("chain & !prelinear").unwrap());
    assert!(find_example(&none, 5, Exec::default(), DEFAULT_CAP)
        .unwrap()
        .is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Any relabelling of an enumerated algebra is recognised as a member.
    #[test]
    fn catalog_is_closed_under_relabelling(pick in 0usize..149, perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let algs = enumerate_rl(&SearchConstraints::of_size(5)).unwrap();
        let moved = algs.entries()[pick].relabel(&perm);
        prop_assert!(algs.contains_iso(&moved));
        let hits = algs.iter().filter(|a| is_isomorphic(a, &moved).is_some()).count();
        prop_assert_eq!(hits, 1);
    }
}
