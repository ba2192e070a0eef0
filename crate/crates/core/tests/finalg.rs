mod common;

use proptest::prelude::*;

use common::{brute_isomorphic, enumerated, l, sum};
use reslat::algebra::{
    canonical_form, complete_divisions, is_isomorphic, read_algebra, validate, write_algebra,
    AlgebraJson, IsoWitness,
};
use reslat::builders::{direct_product, godel, ordinal_sum, trivial, two};
use reslat::FinAlg;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn relabelling_is_found(perm in permutation(5)) {
        let l4 = l(4);
        let moved = l4.relabel(&perm);
        let w = is_isomorphic(&l4, &moved).unwrap();
        prop_assert!(w.preserves(&l4, &moved));
        prop_assert_eq!(w.map, perm);
        prop_assert_eq!(canonical_form(&l4).key, canonical_form(&moved).key);
    }

    #[test]
    fn canonical_key_is_labelling_invariant(pick in 0usize..25, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let a = &enumerated(4)[pick];
        let mut perm: Vec<usize> = a.elements().collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let b = a.relabel(&perm);
        prop_assert_eq!(canonical_form(a).key, canonical_form(&b).key);
        let c = canonical_form(a);
        prop_assert_eq!(a.relabel(&c.perm), b.relabel(&canonical_form(&b).perm));
    }
}

#[test]
fn product_is_monotone() {
    for a in enumerated(5) {
        for x in a.elements() {
            for y in a.elements() {
                if !a.leq(x, y) {
                    continue;
                }
                for z in a.elements() {
                    assert!(a.leq(a.prod(x, z), a.prod(y, z)));
                    assert!(a.leq(a.prod(z, x), a.prod(z, y)));
                }
            }
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence() {
    let algs = enumerated(4);
    for a in &algs {
        let id = is_isomorphic(a, a).unwrap();
        assert!(id.preserves(a, a));
        let perm: Vec<usize> = a.elements().rev().collect();
        let b = a.relabel(&perm);
        let ab = is_isomorphic(a, &b).unwrap();
        let ba = ab.inverse();
        assert!(ba.preserves(&b, a));
        let c = b.relabel(&perm);
        let bc = is_isomorphic(&b, &c).unwrap();
        assert!(ab.then(&bc).preserves(a, &c));
    }
    for (i, a) in algs.iter().enumerate() {
        for (j, b) in algs.iter().enumerate() {
            assert_eq!(is_isomorphic(a, b).is_some(), i == j);
            assert_eq!(brute_isomorphic(a, b), i == j);
        }
    }
}

#[test]
fn lukasiewicz_and_godel_differ() {
    assert!(is_isomorphic(&l(2), &godel(2)).is_none());
    assert!(!brute_isomorphic(&l(2), &godel(2)));
    let t = trivial();
    assert_eq!(is_isomorphic(&t, &t).unwrap(), IsoWitness::identity(1));
    // signatures must match
    assert!(is_isomorphic(&l(2), &l(2).without_zero()).is_none());
}

#[test]
fn completion_is_idempotent() {
    for a in enumerated(4).iter().chain([l(3), godel(3)].iter()) {
        let once = complete_divisions(&a.to_raw()).unwrap();
        assert_eq!(&once, a);
        let twice = complete_divisions(&once.to_raw()).unwrap();
        assert_eq!(once, twice);
    }
}

#[test]
fn godel_divisions_from_product() {
    let mut raw = godel(2).to_raw();
    raw.ldiv = None;
    raw.rdiv = None;
    let g = complete_divisions(&raw).unwrap();
    // b\a = a, a\b = 1 with a = 0, b = 1
    assert_eq!(g.ldiv(1, 0), 0);
    assert_eq!(g.ldiv(0, 1), 2);
}

#[test]
fn positive_cones() {
    assert_eq!(l(2).positive_cone().members(), vec![2]);
    assert_eq!(trivial().positive_cone().len(), 1);
    let non_integral: Vec<FinAlg> = enumerated(4)
        .into_iter()
        .filter(|a| a.size() == 4 && !a.is_integral())
        .collect();
    assert!(!non_integral.is_empty());
    for a in non_integral {
        assert!(a.positive_cone().len() > 1);
    }
}

#[test]
fn builders_validate() {
    for n in 1..=8 {
        assert!(validate(&l(n).to_raw()).unwrap().is_ok());
    }
    assert!(validate(&trivial().to_raw()).unwrap().is_ok());
    let mut bad = l(2).to_raw();
    bad.prod[1][0] = 1;
    bad.ldiv = None;
    bad.rdiv = None;
    assert!(!validate(&bad).unwrap().is_ok());
    // ½·½ = ½ is the Gödel chain, which is fine
    let mut g = l(2).to_raw();
    g.prod[1][1] = 1;
    g.ldiv = None;
    g.rdiv = None;
    assert!(validate(&g).unwrap().is_ok());
}

#[test]
fn godel_is_a_sum_of_twos() {
    for n in 1..=6 {
        let parts = vec![two(); n];
        assert!(is_isomorphic(&godel(n), &ordinal_sum(&parts).unwrap()).is_some());
    }
    let g2 = godel(2);
    assert_eq!(g2.prod(1, 1), 1);
}

#[test]
fn ordinal_sum_is_associative() {
    let pool = [two(), l(2), l(3)];
    for a in &pool {
        for b in &pool {
            for c in &pool {
                let left = sum(&[sum(&[a.clone(), b.clone()]), c.clone()]);
                let right = sum(&[a.clone(), sum(&[b.clone(), c.clone()])]);
                let flat = sum(&[a.clone(), b.clone(), c.clone()]);
                assert!(is_isomorphic(&left, &flat).is_some());
                assert!(is_isomorphic(&right, &flat).is_some());
            }
        }
    }
}

#[test]
fn product_of_chains_is_not_a_chain() {
    let sq = direct_product(&l(2), &l(2));
    assert!(validate(&sq.to_raw()).unwrap().is_ok());
    assert!(!sq.is_chain());
}

#[test]
fn json_round_trip() {
    let dir = std::env::temp_dir().join(format!("reslat-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("l3.json");
    let l3 = l(3);
    write_algebra(&path, &l3).unwrap();
    let back = read_algebra(&path).unwrap();
    assert_eq!(back, l3);
    assert_eq!(back.name(), Some("L3"));
    let text = l3.to_json();
    assert!(text.contains("\"zero\": 0"));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// The search must backtrack when a full map fails late, e.g. when the
/// join of two mapped elements is itself mapped afterwards.
#[test]
fn every_relabelling_of_size_five_is_found() {
    let perms = permutations(5);
    for a in enumerated(5).into_iter().filter(|a| a.size() == 5) {
        for p in &perms {
            let b = a.relabel(p);
            let w = is_isomorphic(&a, &b).expect("relabelling is an isomorphism");
            assert!(w.preserves(&a, &b));
        }
    }
}
