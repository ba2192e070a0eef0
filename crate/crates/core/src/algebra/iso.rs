//! Isomorphism testing and canonical labelling.
//!
//! Both rely on the same invariant refinement: elements start coloured by
//! whether they are the unit or the zero, and colours are split by the
//! multiset of colours reachable through join and product until stable.

use super::{Elem, FinAlg};

/// A bijection `a ↦ map[a]` from the first algebra onto the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Vec<Elem>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> Self {
        IsoWitness {
            map: (0..n).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        IsoWitness { map: inv }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &IsoWitness) -> Self {
        IsoWitness {
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        }
    }

    /// True when the map is a bijection preserving every operation and constant.
    pub fn preserves(&self, a: &FinAlg, b: &FinAlg) -> bool {
        let f = &self.map;
        if a.size() != b.size() || f.len() != a.size() {
            return false;
        }
        let mut seen = vec![false; b.size()];
        for &x in f {
            if x >= b.size() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        if f[a.unit()] != b.unit() || a.zero().map(|z| f[z]) != b.zero() {
            return false;
        }
        a.elements().all(|x| {
            a.elements().all(|y| {
                f[a.join(x, y)] == b.join(f[x], f[y])
                    && f[a.meet(x, y)] == b.meet(f[x], f[y])
                    && f[a.prod(x, y)] == b.prod(f[x], f[y])
                    && f[a.ldiv(x, y)] == b.ldiv(f[x], f[y])
                    && f[a.rdiv(x, y)] == b.rdiv(f[x], f[y])
            })
        })
    }
}

fn renumber<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present"))
        .collect()
}

fn class_count(ranks: &[usize]) -> usize {
    ranks.iter().max().map_or(0, |m| m + 1)
}

fn refine(alg: &FinAlg, mut ranks: Vec<usize>) -> Vec<usize> {
    loop {
        let before = class_count(&ranks);
        let sigs: Vec<(usize, Vec<[usize; 4]>)> = alg
            .elements()
            .map(|a| {
                let mut around: Vec<[usize; 4]> = alg
                    .elements()
                    .map(|b| {
                        [
                            ranks[b],
                            ranks[alg.join(a, b)],
                            ranks[alg.prod(a, b)],
                            ranks[alg.prod(b, a)],
                        ]
                    })
                    .collect();
                around.sort_unstable();
                (ranks[a], around)
            })
            .collect();
        ranks = renumber(&sigs);
        if class_count(&ranks) == before {
            return ranks;
        }
    }
}

/// Stable invariant colouring of the elements. Isomorphic algebras receive
/// the same multiset of colours, and isomorphisms preserve colours.
pub fn refined_ranks(alg: &FinAlg) -> Vec<usize> {
    let initial: Vec<(bool, bool)> = alg
        .elements()
        .map(|a| (a == alg.unit(), Some(a) == alg.zero()))
        .collect();
    refine(alg, renumber(&initial))
}

/// Backtracking search for an isomorphism, restricted to colour-preserving
/// maps. Algebras with different signatures (zero present in one only) are
/// never isomorphic.
pub fn is_isomorphic(a: &FinAlg, b: &FinAlg) -> Option<IsoWitness> {
    if a.size() != b.size() || a.zero().is_some() != b.zero().is_some() {
        return None;
    }
    let ra = refined_ranks(a);
    let rb = refined_ranks(b);
    let mut sa = ra.clone();
    let mut sb = rb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let n = a.size();
    let mut cell_size = vec![0usize; n];
    for &r in &ra {
        cell_size[r] += 1;
    }
    let mut order: Vec<Elem> = a.elements().collect();
    order.sort_by_key(|&x| (cell_size[ra[x]], x));

    struct Search<'a> {
        a: &'a FinAlg,
        b: &'a FinAlg,
        ra: &'a [usize],
        rb: &'a [usize],
        order: Vec<Elem>,
        map: Vec<Option<Elem>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        /// Checks every join and product among mapped elements that involves
        /// `x`, either as an argument or as the result.
        fn consistent(&self, x: Elem) -> bool {
            let fx = self.map[x].expect("just mapped");
            let mapped: Vec<(Elem, Elem)> = self
                .map
                .iter()
                .enumerate()
                .filter_map(|(y, fy)| fy.map(|fy| (y, fy)))
                .collect();
            for &(y, fy) in &mapped {
                let pairs = [
                    (self.a.join(x, y), self.b.join(fx, fy)),
                    (self.a.prod(x, y), self.b.prod(fx, fy)),
                    (self.a.prod(y, x), self.b.prod(fy, fx)),
                ];
                for (r, fr) in pairs {
                    if self.map[r].is_some_and(|m| m != fr) {
                        return false;
                    }
                }
                for &(z, fz) in &mapped {
                    let results = [
                        (self.a.join(y, z), self.b.join(fy, fz)),
                        (self.a.prod(y, z), self.b.prod(fy, fz)),
                    ];
                    for (r, fr) in results {
                        if r == x && fr != fx {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                let f: Vec<Elem> = self.map.iter().map(|m| m.expect("total")).collect();
                return IsoWitness { map: f }.preserves(self.a, self.b);
            }
            let x = self.order[depth];
            for y in 0..self.b.size() {
                if self.used[y] || self.rb[y] != self.ra[x] {
                    continue;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                if self.consistent(x) && self.run(depth + 1) {
                    return true;
                }
                self.map[x] = None;
                self.used[y] = false;
            }
            false
        }
    }

    let mut search = Search {
        a,
        b,
        ra: &ra,
        rb: &rb,
        order,
        map: vec![None; n],
        used: vec![false; n],
    };
    if !search.run(0) {
        return None;
    }
    Some(IsoWitness {
        map: search.map.into_iter().map(|m| m.expect("total")).collect(),
    })
}

/// Canonical labelling: `perm` sends each element to its canonical index and
/// `key` is the lexicographically least table tuple over all labellings
/// compatible with the refinement. Two algebras are isomorphic iff their keys
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub perm: Vec<Elem>,
    pub key: Vec<usize>,
}

fn key_for(alg: &FinAlg, perm: &[Elem]) -> Vec<usize> {
    let n = alg.size();
    let mut inv = vec![0; n];
    for (a, &p) in perm.iter().enumerate() {
        inv[p] = a;
    }
    let mut key = Vec::with_capacity(3 + 2 * n * n);
    key.push(n);
    key.push(perm[alg.unit()]);
    key.push(alg.zero().map_or(0, |z| perm[z] + 1));
    for i in 0..n {
        for j in 0..n {
            key.push(perm[alg.join(inv[i], inv[j])]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            key.push(perm[alg.prod(inv[i], inv[j])]);
        }
    }
    key
}

fn canon_search(alg: &FinAlg, ranks: Vec<usize>, best: &mut Option<CanonicalForm>) {
    let ranks = refine(alg, ranks);
    let n = alg.size();
    let classes = class_count(&ranks);
    if classes == n {
        let key = key_for(alg, &ranks);
        if best.as_ref().is_none_or(|b| key < b.key) {
            *best = Some(CanonicalForm { perm: ranks, key });
        }
        return;
    }
    let mut counts = vec![0usize; classes];
    for &r in &ranks {
        counts[r] += 1;
    }
    let target = (0..classes).find(|&c| counts[c] > 1).expect("non-discrete");
    for v in alg.elements().filter(|&x| ranks[x] == target) {
        let split: Vec<(usize, bool)> = alg.elements().map(|x| (ranks[x], !(x == v))).collect();
        canon_search(alg, renumber(&split), best);
    }
}

pub fn canonical_form(alg: &FinAlg) -> CanonicalForm {
    let initial: Vec<(bool, bool)> = alg
        .elements()
        .map(|a| (a == alg.unit(), Some(a) == alg.zero()))
        .collect();
    let mut best = None;
    canon_search(alg, renumber(&initial), &mut best);
    best.expect("at least one labelling")
}
