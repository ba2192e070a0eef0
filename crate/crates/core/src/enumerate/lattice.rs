//! Finite lattices up to isomorphism.
//!
//! Every finite lattice has a natural labelling: bottom `0`, top `n−1`, and
//! `i < j` whenever `i` lies strictly below `j`. So it suffices to run over
//! transitive relations on the middle elements that only relate `i` to
//! larger `j`, keep the lattices, and reject isomorphs by a canonical key
//! (the least order matrix over all natural relabellings).

use std::collections::BTreeSet;

use crate::algebra::{lattice_tables, Elem, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub size: usize,
    leq: Vec<bool>,
    pub join: Table,
    pub meet: Table,
}

impl Lattice {
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        self.size - 1
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        (0..self.size)
            .filter(|&a| {
                let below: Vec<Elem> = (0..self.size)
                    .filter(|&b| b != a && self.leq(b, a))
                    .collect();
                let covers = below
                    .iter()
                    .filter(|&&b| !below.iter().any(|&c| c != b && self.leq(b, c)))
                    .count();
                covers == 1
            })
            .collect()
    }
}

fn from_order(n: usize, leq: Vec<bool>) -> Option<Lattice> {
    let (join, meet) = lattice_tables(n, |a, b| leq[a * n + b])?;
    Some(Lattice {
        size: n,
        leq,
        join,
        meet,
    })
}

/// Orderings of the middle elements compatible with `leq`.
fn linear_extensions(n: usize, leq: &[bool]) -> Vec<Vec<Elem>> {
    fn go(
        n: usize,
        leq: &[bool],
        used: &mut Vec<bool>,
        cur: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if cur.len() + 2 == n {
            out.push(cur.clone());
            return;
        }
        for a in 1..n - 1 {
            let ready = !used[a] && (1..n - 1).all(|b| b == a || used[b] || !leq[b * n + a]);
            if ready {
                used[a] = true;
                cur.push(a);
                go(n, leq, used, cur, out);
                cur.pop();
                used[a] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        go(n, leq, &mut vec![false; n], &mut Vec::new(), &mut out);
    }
    out
}

/// Least strict-upper-triangle bit string over all natural relabellings.
pub(crate) fn canonical_order_key(n: usize, leq: &[bool]) -> Vec<bool> {
    if n <= 2 {
        return Vec::new();
    }
    let mut best: Option<Vec<bool>> = None;
    for ext in linear_extensions(n, leq) {
        // perm[old] = new
        let mut perm = vec![0; n];
        perm[n - 1] = n - 1;
        for (i, &a) in ext.iter().enumerate() {
            perm[a] = i + 1;
        }
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let key: Vec<bool> = (1..n - 1)
            .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
            .map(|(i, j)| leq[inv[i] * n + inv[j]])
            .collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

/// All lattices with `n` elements up to isomorphism, naturally labelled,
/// in a fixed order (chains first).
pub fn enumerate_lattices(n: usize) -> Vec<Lattice> {
    if n == 0 {
        return Vec::new();
    }
    if n <= 2 {
        let leq = (0..n * n).map(|i| i / n <= i % n).collect();
        return vec![from_order(n, leq).expect("chain")];
    }
    let middle: Vec<(Elem, Elem)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // more relations first, so the chain comes out first
    for mask in (0..1u64 << middle.len()).rev() {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
            leq[a * n + n - 1] = true;
            leq[a] = true;
        }
        for (bit, &(i, j)) in middle.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
        });
        if !transitive {
            continue;
        }
        let Some(lat) = from_order(n, leq) else {
            continue;
        };
        if seen.insert(canonical_order_key(n, &lat.leq)) {
            out.push(lat);
        }
    }
    out
}
