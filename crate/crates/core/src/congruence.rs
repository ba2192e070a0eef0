//! Conjugates, filters, congruence filters and quotients.
//!
//! In a finite residuated lattice every filter is principal: a filter `F`
//! has a least element `m ≤ 1`, and closure under products forces `m·m = m`.
//! So filters are exactly the up-sets `↑m` of negative idempotents, and the
//! congruence filters are those that are also closed under conjugation.
//! [`generate_congruence_filter`] does not rely on this and computes the
//! closure by fixpoint iteration instead; tests compare the two.

use thiserror::Error;

use crate::algebra::{Elem, ElemSet, FinAlg, Table};

#[derive(Debug, Error)]
pub enum CongruenceError {
    #[error("{0:?} is not a congruence filter")]
    NotCongruenceFilter(Vec<Elem>),
    #[error("radical needs an algebra with zero")]
    NoZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `l_a(x) = a\(x·a) ∧ 1` or `r_a(x) = (a·x)/a ∧ 1`.
#[inline]
pub fn conjugate_at(alg: &FinAlg, side: Side, a: Elem, x: Elem) -> Elem {
    let v = match side {
        Side::Left => alg.ldiv(a, alg.prod(x, a)),
        Side::Right => alg.rdiv(alg.prod(a, x), a),
    };
    alg.meet(v, alg.unit())
}

/// The conjugate as a table `x ↦ γ_a(x)`.
pub fn conjugate(alg: &FinAlg, side: Side, a: Elem) -> Vec<Elem> {
    alg.elements()
        .map(|x| conjugate_at(alg, side, a, x))
        .collect()
}

fn up_closure(alg: &FinAlg, set: &mut ElemSet) -> bool {
    let mut grew = false;
    for a in set.members() {
        for b in alg.elements() {
            if alg.leq(a, b) {
                grew |= set.insert(b);
            }
        }
    }
    grew
}

fn closure(alg: &FinAlg, gens: &ElemSet, conjugates: bool) -> ElemSet {
    let mut set = gens.clone();
    set.insert(alg.unit());
    loop {
        let mut grew = up_closure(alg, &mut set);
        let members = set.members();
        for &a in &members {
            for &b in &members {
                grew |= set.insert(alg.meet(a, b));
                grew |= set.insert(alg.prod(a, b));
            }
            if conjugates {
                for b in alg.elements() {
                    grew |= set.insert(conjugate_at(alg, Side::Left, b, a));
                    grew |= set.insert(conjugate_at(alg, Side::Right, b, a));
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Least filter containing `gens`.
pub fn generate_filter(alg: &FinAlg, gens: &ElemSet) -> ElemSet {
    closure(alg, gens, false)
}

/// Least congruence filter containing `gens`, by fixpoint iteration with
/// single conjugations.
pub fn generate_congruence_filter(alg: &FinAlg, gens: &ElemSet) -> ElemSet {
    closure(alg, gens, true)
}

pub fn is_filter(alg: &FinAlg, f: &ElemSet) -> bool {
    f.contains(alg.unit())
        && f.iter().all(|a| {
            alg.elements().all(|b| !alg.leq(a, b) || f.contains(b))
                && f.iter()
                    .all(|b| f.contains(alg.meet(a, b)) && f.contains(alg.prod(a, b)))
        })
}

pub fn is_congruence_filter(alg: &FinAlg, f: &ElemSet) -> bool {
    is_filter(alg, f)
        && f.iter().all(|a| {
            alg.elements().all(|b| {
                f.contains(conjugate_at(alg, Side::Left, b, a))
                    && f.contains(conjugate_at(alg, Side::Right, b, a))
            })
        })
}

fn up_set(alg: &FinAlg, m: Elem) -> ElemSet {
    ElemSet::from_members(alg.size(), alg.elements().filter(|&x| alg.leq(m, x)))
}

fn sort_sets(sets: &mut Vec<ElemSet>) {
    sets.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(&b.members()))
    });
    sets.dedup();
}

/// All filters, smallest first.
pub fn filters(alg: &FinAlg) -> Vec<ElemSet> {
    let u = alg.unit();
    let mut out: Vec<ElemSet> = alg
        .elements()
        .filter(|&m| alg.leq(m, u) && alg.prod(m, m) == m)
        .map(|m| up_set(alg, m))
        .collect();
    sort_sets(&mut out);
    out
}

/// Congruence filters ordered by inclusion. `filters` is sorted by size, so
/// index 0 is `A⁺` and the last entry is the whole carrier.
#[derive(Clone, Debug)]
pub struct FilterLattice {
    pub filters: Vec<ElemSet>,
    /// `(i, j)` when `filters[j]` covers `filters[i]`.
    pub hasse: Vec<(usize, usize)>,
}

impl FilterLattice {
    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.filters[i].is_subset(&self.filters[j])
    }

    /// Filters covering the least one.
    pub fn atoms(&self) -> Vec<usize> {
        self.hasse
            .iter()
            .filter(|&&(i, _)| i == 0)
            .map(|&(_, j)| j)
            .collect()
    }

    /// Filters covered by the whole carrier.
    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.len() - 1;
        self.hasse
            .iter()
            .filter(|&&(_, j)| j == top)
            .map(|&(i, _)| i)
            .collect()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let m = self.filters[i].intersection(&self.filters[j]);
        self.filters
            .iter()
            .position(|f| *f == m)
            .expect("congruence filters are meet-closed")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        (0..self.len())
            .find(|&k| self.leq(i, k) && self.leq(j, k))
            .expect("the carrier is an upper bound")
    }
}

fn hasse(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lt = |i: usize, j: usize| i != j && leq(i, j);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub fn congruence_filters(alg: &FinAlg) -> FilterLattice {
    let filters: Vec<ElemSet> = filters(alg)
        .into_iter()
        .filter(|f| is_congruence_filter(alg, f))
        .collect();
    let hasse = hasse(filters.len(), |i, j| filters[i].is_subset(&filters[j]));
    FilterLattice { filters, hasse }
}

/// An equivalence relation stored as block labels in first-occurrence
/// order, so equal relations have equal labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = raw
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { labels }
    }

    /// Builds the relation from a predicate assumed to be an equivalence.
    pub fn from_relation(n: usize, related: impl Fn(Elem, Elem) -> bool) -> Self {
        let raw: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| related(a, b)).expect("reflexive"))
            .collect();
        Self::from_labels(&raw)
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            labels: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, a: Elem) -> usize {
        self.labels[a]
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (a, &l) in self.labels.iter().enumerate() {
            out[l].push(a);
        }
        out
    }

    /// Inclusion of relations.
    pub fn is_finer(&self, other: &Congruence) -> bool {
        let n = self.labels.len();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// True when the relation is compatible with all five operations.
    pub fn is_compatible(&self, alg: &FinAlg) -> bool {
        let ops: [fn(&FinAlg, Elem, Elem) -> Elem; 5] = [
            FinAlg::join,
            FinAlg::meet,
            FinAlg::prod,
            FinAlg::ldiv,
            FinAlg::rdiv,
        ];
        alg.elements().all(|a| {
            alg.elements()
                .filter(|&b| b > a && self.related(a, b))
                .all(|b| {
                    alg.elements().all(|c| {
                        ops.iter().all(|op| {
                            self.related(op(alg, a, c), op(alg, b, c))
                                && self.related(op(alg, c, a), op(alg, c, b))
                        })
                    })
                })
        })
    }
}

/// `θ_F = {(a, b) : a/b ∈ F and b/a ∈ F}`.
pub fn filter_to_congruence(alg: &FinAlg, f: &ElemSet) -> Result<Congruence, CongruenceError> {
    if !is_congruence_filter(alg, f) {
        return Err(CongruenceError::NotCongruenceFilter(f.members()));
    }
    Ok(Congruence::from_relation(alg.size(), |a, b| {
        f.contains(alg.rdiv(a, b)) && f.contains(alg.rdiv(b, a))
    }))
}

/// `{a : (a ∧ 1) θ 1}`, the union of the classes of positive elements.
pub fn congruence_to_filter(alg: &FinAlg, theta: &Congruence) -> ElemSet {
    let u = alg.unit();
    ElemSet::from_members(
        alg.size(),
        alg.elements().filter(|&a| theta.related(alg.meet(a, u), u)),
    )
}

/// Every compatible partition, found by running through all set
/// partitions. Independent of the filter machinery; meant as an oracle.
pub fn all_congruences_bruteforce(alg: &FinAlg) -> Vec<Congruence> {
    let n = alg.size();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    // restricted growth strings: labels[i] ≤ 1 + max(labels[..i])
    fn walk(
        alg: &FinAlg,
        i: usize,
        max: usize,
        labels: &mut Vec<usize>,
        out: &mut Vec<Congruence>,
    ) {
        if i == labels.len() {
            let theta = Congruence {
                labels: labels.clone(),
            };
            if theta.is_compatible(alg) {
                out.push(theta);
            }
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            walk(alg, i + 1, max.max(l), labels, out);
        }
    }
    if n > 0 {
        walk(alg, 1, 0, &mut labels, &mut out);
    }
    out
}

/// `A/θ` with blocks numbered by first occurrence.
pub fn quotient_by(alg: &FinAlg, theta: &Congruence) -> FinAlg {
    let k = theta.num_blocks();
    let reps: Vec<Elem> = theta.blocks().iter().map(|b| b[0]).collect();
    let lift = |op: fn(&FinAlg, Elem, Elem) -> Elem| {
        Table::from_fn(k, |x, y| theta.block_of(op(alg, reps[x], reps[y])))
    };
    FinAlg::from_all_parts(
        None,
        theta.block_of(alg.unit()),
        alg.zero().map(|z| theta.block_of(z)),
        lift(FinAlg::join),
        lift(FinAlg::meet),
        lift(FinAlg::prod),
        lift(FinAlg::ldiv),
        lift(FinAlg::rdiv),
    )
    .expect("quotients by congruences are residuated lattices")
}

pub fn quotient(alg: &FinAlg, f: &ElemSet) -> Result<FinAlg, CongruenceError> {
    Ok(quotient_by(alg, &filter_to_congruence(alg, f)?))
}

/// Exactly one atom in the congruence-filter lattice.
pub fn is_subdirectly_irreducible(alg: &FinAlg) -> bool {
    let lat = congruence_filters(alg);
    lat.len() >= 2 && lat.atoms().len() == 1
}

/// Exactly two congruence filters.
pub fn is_simple(alg: &FinAlg) -> bool {
    congruence_filters(alg).len() == 2
}

/// Intersection of the maximal proper congruence filters.
pub fn radical(alg: &FinAlg) -> Result<ElemSet, CongruenceError> {
    if alg.zero().is_none() {
        return Err(CongruenceError::NoZero);
    }
    let lat = congruence_filters(alg);
    let full = ElemSet::full(alg.size());
    Ok(lat
        .coatoms()
        .iter()
        .fold(full, |acc, &i| acc.intersection(&lat.filters[i])))
}
