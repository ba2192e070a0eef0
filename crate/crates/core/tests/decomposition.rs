mod common;

use common::{l, small_sums, sum};
use reslat::algebra::is_isomorphic;
use reslat::builders::{godel, ordinal_sum, two};
use reslat::decomposition::{
    chains_equivalent, divisibility_index, index, is_wajsberg, rank, sum_decompose, valid_cuts,
};
use reslat::enumerate::{enumerate_rl, SearchConstraints};
use reslat::term::{builtin, satisfies};
use reslat::FinAlg;

fn integral_chains(max: usize) -> Vec<FinAlg> {
    (1..=max)
        .flat_map(|n| {
            enumerate_rl(&SearchConstraints::of_size(n).integral(true).chain(true))
                .unwrap()
                .into_vec()
        })
        .collect()
}

#[test]
fn sums_decompose_into_their_parts() {
    for parts in small_sums() {
        let a = sum(&parts);
        let d = sum_decompose(&a).unwrap();
        assert_eq!(d.index(), parts.len());
        assert_eq!(d.cuts.len(), parts.len() - 1);
        for (c, p) in d.components.iter().zip(&parts).skip(1) {
            assert!(is_isomorphic(c, &p.without_zero()).is_some());
        }
        assert!(is_isomorphic(&d.components[0], &parts[0]).is_some());
        assert!(is_isomorphic(&ordinal_sum(&d.components).unwrap(), &a).is_some());
        for c in &d.components {
            assert!(is_wajsberg(c));
        }
    }
}

#[test]
fn enumerated_chains_reassemble() {
    for a in integral_chains(6) {
        let d = sum_decompose(&a).unwrap();
        let back = ordinal_sum(&d.components).unwrap();
        assert!(is_isomorphic(&back, &a).is_some());
        for c in &d.components {
            assert!(valid_cuts(c).unwrap().is_empty());
        }
        let blocks: usize = d.blocks.iter().map(Vec::len).sum();
        assert_eq!(blocks + 1, a.size());
    }
}

/// In a totally ordered hoop, nonunits `x < y` share a component exactly
/// when `(y → x) → x ≠ 1`.
#[test]
fn components_by_double_residual() {
    let divisible = &builtin("divisible", &[]).unwrap();
    let hoops = integral_chains(6)
        .into_iter()
        .filter(|a| a.is_commutative() && divisible.iter().all(|s| satisfies(a, s).unwrap().holds));
    for a in hoops {
        let d = sum_decompose(&a).unwrap();
        let comp = |x| d.blocks.iter().position(|b| b.contains(&x)).unwrap();
        for x in a.elements().filter(|&x| x != a.unit()) {
            for y in a.elements().filter(|&y| y != a.unit() && a.lt(x, y)) {
                let dbl = a.ldiv(a.ldiv(y, x), x);
                assert_eq!(comp(x) == comp(y), dbl != a.unit(), "{a:?}");
            }
        }
    }
}

#[test]
fn index_is_additive() {
    let pool = [two(), l(2), l(3), godel(2), sum(&[l(2), two()])];
    for a in &pool {
        for b in &pool {
            let s = sum(&[a.clone(), b.clone()]);
            assert_eq!(index(&s).unwrap(), index(a).unwrap() + index(b).unwrap());
        }
    }
}

#[test]
fn finite_chain_is_off_by_one() {
    let holds = |a: &FinAlg, n: usize| {
        let s = &builtin("finite-chain", &[n]).unwrap()[0];
        satisfies(a, s).unwrap().holds
    };
    let chains: Vec<FinAlg> = (1..=6).map(l).chain((1..=5).map(godel)).collect();
    for a in chains {
        let s = a.size();
        assert!(holds(&a, s));
        assert!(!holds(&a, s - 1));
    }
}

#[test]
fn wajsberg_invariants() {
    for n in 1..=7 {
        let ln = l(n);
        assert_eq!(rank(&ln).unwrap(), n);
        assert_eq!(divisibility_index(&ln).unwrap(), n);
    }
    // Ł₆ contains Ł₁, Ł₂, Ł₃ and Ł₆ only
    let l6 = l(6);
    for k in 1..=6 {
        let embeds = reslat::classops::subalgebras(&l6)
            .iter()
            .any(|s| is_isomorphic(s, &l(k)).is_some());
        assert_eq!(embeds, 6 % k == 0, "{k}");
    }
    assert!(!is_wajsberg(&godel(3)));
    assert!(rank(&godel(3)).is_err());
}

#[test]
fn equivalence_matches_component_lists() {
    let sums = small_sums();
    for p in sums.iter().take(30) {
        for q in sums.iter().take(30) {
            let same = p.len() == q.len()
                && p.iter().zip(q).enumerate().all(|(i, (x, y))| {
                    if i == 0 {
                        is_isomorphic(x, y).is_some()
                    } else {
                        is_isomorphic(&x.without_zero(), &y.without_zero()).is_some()
                    }
                });
            assert_eq!(chains_equivalent(&sum(p), &sum(q)).unwrap(), same);
        }
    }
}
