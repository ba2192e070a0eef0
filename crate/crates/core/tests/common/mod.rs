//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search, canonical-form or congruence code under test.

#![allow(dead_code)]

use reslat::algebra::{Elem, ElemSet, Table};
use reslat::builders::{godel, lukasiewicz, ordinal_sum, two};
use reslat::congruence::{conjugate_at, Side};
use reslat::enumerate::{enumerate_rl, SearchConstraints};
use reslat::FinAlg;

pub fn l(n: usize) -> FinAlg {
    lukasiewicz(n).unwrap()
}

pub fn sum(parts: &[FinAlg]) -> FinAlg {
    ordinal_sum(parts).unwrap()
}

/// Ordinal sums of 1 to 3 components drawn from {2, Ł₂, Ł₃, Ł₄}.
pub fn small_sums() -> Vec<Vec<FinAlg>> {
    let pool = [two(), l(2), l(3), l(4)];
    let mut out: Vec<Vec<FinAlg>> = Vec::new();
    let mut frontier: Vec<Vec<FinAlg>> = vec![Vec::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for prefix in &frontier {
            for p in &pool {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Lukasiewicz chains, Gödel chains and the small ordinal sums.
pub fn generated_chains() -> Vec<FinAlg> {
    let mut v: Vec<FinAlg> = (1..=8).map(l).collect();
    v.extend((1..=6).map(godel));
    v.extend(small_sums().iter().map(|parts| sum(parts)));
    v
}

pub fn enumerated(max: usize) -> Vec<FinAlg> {
    (1..=max)
        .flat_map(|n| {
            enumerate_rl(&SearchConstraints::of_size(n))
                .unwrap()
                .into_vec()
        })
        .collect()
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

/// Least (unit, zero, join, prod) image over every relabelling.
pub fn brute_key(a: &FinAlg) -> Vec<usize> {
    let n = a.size();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (x, &y) in p.iter().enumerate() {
                inv[y] = x;
            }
            let mut k = vec![p[a.unit()], a.zero().map_or(0, |z| p[z] + 1)];
            for i in 0..n {
                for j in 0..n {
                    k.push(p[a.join(inv[i], inv[j])]);
                }
            }
            for i in 0..n {
                for j in 0..n {
                    k.push(p[a.prod(inv[i], inv[j])]);
                }
            }
            k
        })
        .min()
        .unwrap()
}

pub fn brute_isomorphic(a: &FinAlg, b: &FinAlg) -> bool {
    a.size() == b.size() && a.zero().is_some() == b.zero().is_some() && brute_key(a) == brute_key(b)
}

fn is_lattice_order(n: usize, leq: &[bool]) -> bool {
    let r = |a: usize, b: usize| leq[a * n + b];
    let partial = (0..n).all(|a| r(a, a))
        && (0..n).all(|a| (0..n).all(|b| a == b || !(r(a, b) && r(b, a))))
        && (0..n).all(|a| (0..n).all(|b| !r(a, b) || (0..n).all(|c| !r(b, c) || r(a, c))));
    partial
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let ups: Vec<usize> = (0..n).filter(|&u| r(a, u) && r(b, u)).collect();
                let downs: Vec<usize> = (0..n).filter(|&d| r(d, a) && r(d, b)).collect();
                ups.iter().any(|&u| ups.iter().all(|&v| r(u, v)))
                    && downs.iter().any(|&d| downs.iter().all(|&v| r(v, d)))
            })
        })
}

fn order_key(n: usize, leq: &[bool]) -> Vec<bool> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut k = vec![false; n * n];
            for a in 0..n {
                for b in 0..n {
                    k[p[a] * n + p[b]] = leq[a * n + b];
                }
            }
            k
        })
        .min()
        .unwrap()
}

/// Lattice orders on `n` labelled points, one per isomorphism class, found
/// by trying every relation.
pub fn naive_lattices(n: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut keys = Vec::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (bit, &(a, b)) in off.iter().enumerate() {
            leq[a * n + b] = mask >> bit & 1 == 1;
        }
        if is_lattice_order(n, &leq) {
            let k = order_key(n, &leq);
            if !keys.contains(&k) {
                keys.push(k);
                out.push(leq);
            }
        }
    }
    out
}

fn lub(n: usize, leq: &[bool], a: usize, b: usize) -> usize {
    let ups: Vec<usize> = (0..n)
        .filter(|&u| leq[a * n + u] && leq[b * n + u])
        .collect();
    *ups.iter()
        .find(|&&u| ups.iter().all(|&v| leq[u * n + v]))
        .unwrap()
}

fn glb(n: usize, leq: &[bool], a: usize, b: usize) -> usize {
    let downs: Vec<usize> = (0..n)
        .filter(|&d| leq[d * n + a] && leq[d * n + b])
        .collect();
    *downs
        .iter()
        .find(|&&d| downs.iter().all(|&v| leq[v * n + d]))
        .unwrap()
}

/// Associative, unital, and both residuals exist: for each `a, c` there is
/// a `d` with `a·y ≤ c ⟺ y ≤ d`, and symmetrically.
fn is_residuated_monoid(n: usize, leq: &[bool], unit: usize, p: &[usize]) -> bool {
    let m = |a: usize, b: usize| p[a * n + b];
    let le = |a: usize, b: usize| leq[a * n + b];
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
        && (0..n).all(|a| m(unit, a) == a && m(a, unit) == a)
        && (0..n).all(|a| {
            (0..n).all(|c| {
                (0..n).any(|d| (0..n).all(|y| le(m(a, y), c) == le(y, d)))
                    && (0..n).any(|d| (0..n).all(|y| le(m(y, a), c) == le(y, d)))
            })
        })
}

/// Residuated lattices of size `n` up to isomorphism: every lattice, every
/// unit, every product table with the unit row and column fixed.
pub fn naive_rls(n: usize) -> Vec<FinAlg> {
    let mut out: Vec<FinAlg> = Vec::new();
    let mut keys: Vec<Vec<usize>> = Vec::new();
    for leq in naive_lattices(n) {
        let join = Table::from_fn(n, |a, b| lub(n, &leq, a, b));
        let meet = Table::from_fn(n, |a, b| glb(n, &leq, a, b));
        for unit in 0..n {
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != unit && b != unit)
                .collect();
            let total = n.pow(free.len() as u32);
            let mut p = vec![0; n * n];
            for a in 0..n {
                p[unit * n + a] = a;
                p[a * n + unit] = a;
            }
            for code in 0..total {
                let mut c = code;
                for &(a, b) in &free {
                    p[a * n + b] = c % n;
                    c /= n;
                }
                if !is_residuated_monoid(n, &leq, unit, &p) {
                    continue;
                }
                let prod = Table::from_fn(n, |a, b| p[a * n + b]);
                let alg =
                    FinAlg::from_parts(None, unit, None, join.clone(), meet.clone(), prod).unwrap();
                let k = brute_key(&alg);
                if !keys.contains(&k) {
                    keys.push(k);
                    out.push(alg);
                }
            }
        }
    }
    out
}

/// All set partitions compatible with the five operations, as a relation
/// matrix.
pub fn naive_congruences(a: &FinAlg) -> Vec<Vec<bool>> {
    let n = a.size();
    let ops: [fn(&FinAlg, Elem, Elem) -> Elem; 5] = [
        FinAlg::join,
        FinAlg::meet,
        FinAlg::prod,
        FinAlg::ldiv,
        FinAlg::rdiv,
    ];
    let mut out = Vec::new();
    // labels via mixed radix, keep only restricted-growth ones
    for code in 0..n.pow(n as u32) {
        let labels: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
        let rg = (0..n).all(|i| labels[i] <= labels[..i].iter().max().map_or(0, |m| m + 1));
        if !rg {
            continue;
        }
        let rel = |x: usize, y: usize| labels[x] == labels[y];
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                !rel(x, y)
                    || (0..n).all(|z| {
                        ops.iter().all(|op| {
                            rel(op(a, x, z), op(a, y, z)) && rel(op(a, z, x), op(a, z, y))
                        })
                    })
            })
        });
        if ok {
            out.push((0..n * n).map(|i| rel(i / n, i % n)).collect());
        }
    }
    out
}

/// The explicit description of a generated congruence filter: everything
/// above a product of at most `|A|` iterated conjugates (length ≤ `|A|`)
/// of generators or 1.
pub fn explicit_congruence_filter(a: &FinAlg, gens: &[Elem]) -> ElemSet {
    let n = a.size();
    let mut conj: Vec<Elem> = gens.iter().copied().chain([a.unit()]).collect();
    conj = conj.iter().map(|&x| a.meet(x, a.unit())).collect();
    for _ in 0..n {
        let mut next = conj.clone();
        for &x in &conj {
            for b in a.elements() {
                for side in [Side::Left, Side::Right] {
                    let v = conjugate_at(a, side, b, x);
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
            }
        }
        conj = next;
    }
    let mut prods = conj.clone();
    for _ in 0..n {
        let mut next = prods.clone();
        for &x in &prods {
            for &y in &conj {
                let v = a.prod(x, y);
                if !next.contains(&v) {
                    next.push(v);
                }
            }
        }
        prods = next;
    }
    ElemSet::from_members(
        n,
        a.elements().filter(|&x| prods.iter().any(|&p| a.leq(p, x))),
    )
}
