//! Per-algebra decision procedures.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Elem, FinAlg};
use crate::congruence::{self, conjugate, Side};
use crate::term::{builtin, satisfies, Assignment};

/// Verdicts of the basic equational and order-theoretic properties, with a
/// failing assignment for each equational property that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub integral: bool,
    pub commutative: bool,
    pub divisible: bool,
    pub cancellative: bool,
    pub idempotent: bool,
    pub prelinear: bool,
    pub representable: bool,
    pub one_distributive: bool,
    pub normal: bool,
    pub well_connected: bool,
    pub weakly_well_connected: bool,
    pub witnesses: BTreeMap<String, Assignment>,
}

fn check_builtin(alg: &FinAlg, name: &str, witnesses: &mut BTreeMap<String, Assignment>) -> bool {
    for s in builtin(name, &[]).expect("registry name") {
        let v = satisfies(alg, &s).expect("registry statements are zero-free");
        if !v.holds {
            if let Some(w) = v.witness {
                witnesses.insert(name.to_string(), w);
            }
            return false;
        }
    }
    true
}

pub fn basic_properties(alg: &FinAlg) -> PropertyReport {
    let mut w = BTreeMap::new();
    let representable = check_builtin(alg, "representable", &mut w);
    debug_assert_eq!(representable, representable_by_si_quotients(alg));
    let normal = match normal_witness(alg) {
        None => true,
        Some((a, b)) => {
            w.insert(
                "normal".into(),
                [("a".to_string(), a), ("b".to_string(), b)].into(),
            );
            false
        }
    };
    PropertyReport {
        integral: check_builtin(alg, "integral", &mut w),
        commutative: check_builtin(alg, "commutative", &mut w),
        divisible: check_builtin(alg, "divisible", &mut w),
        cancellative: check_builtin(alg, "cancellative", &mut w),
        idempotent: check_builtin(alg, "idempotent", &mut w),
        prelinear: check_builtin(alg, "prelinear", &mut w),
        representable,
        one_distributive: check_builtin(alg, "one-distributive", &mut w),
        normal,
        well_connected: is_well_connected(alg),
        weakly_well_connected: is_weakly_well_connected(alg),
        witnesses: w,
    }
}

/// Every subdirectly irreducible quotient is a chain.
pub fn representable_by_si_quotients(alg: &FinAlg) -> bool {
    congruence::congruence_filters(alg).filters.iter().all(|f| {
        let q = congruence::quotient(alg, f).expect("congruence filter");
        !congruence::is_subdirectly_irreducible(&q) || q.is_chain()
    })
}

/// A pair `(a, b)` with `(a∧1)ᴺ·b ≰ b·a` or `b·(a∧1)ᴺ ≰ a·b` for `N = |A|`.
/// Powers of `a ∧ 1` decrease, so they are stable from exponent `|A|` on.
pub fn normal_witness(alg: &FinAlg) -> Option<(Elem, Elem)> {
    let u = alg.unit();
    for a in alg.elements() {
        let p = (0..alg.size()).fold(u, |acc, _| alg.prod(acc, alg.meet(a, u)));
        for b in alg.elements() {
            if !alg.leq(alg.prod(p, b), alg.prod(b, a)) || !alg.leq(alg.prod(b, p), alg.prod(a, b))
            {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_normal(alg: &FinAlg) -> bool {
    normal_witness(alg).is_none()
}

fn above_unit(alg: &FinAlg, a: Elem) -> bool {
    alg.leq(alg.unit(), a)
}

/// `1` is join prime: `a ∨ b ≥ 1` implies `a ≥ 1` or `b ≥ 1`.
pub fn is_well_connected(alg: &FinAlg) -> bool {
    alg.elements().all(|a| {
        alg.elements()
            .all(|b| !above_unit(alg, alg.join(a, b)) || above_unit(alg, a) || above_unit(alg, b))
    })
}

/// `1` is join irreducible: `a ∨ b = 1` implies `a = 1` or `b = 1`.
pub fn weakly_well_connected_irreducible(alg: &FinAlg) -> bool {
    let u = alg.unit();
    alg.elements().all(|a| {
        alg.elements()
            .all(|b| alg.join(a, b) != u || a == u || b == u)
    })
}

/// `(a∧1) ∨ (b∧1) = 1` implies `a ≥ 1` or `b ≥ 1`.
pub fn weakly_well_connected_meets(alg: &FinAlg) -> bool {
    let u = alg.unit();
    alg.elements().all(|a| {
        alg.elements().all(|b| {
            alg.join(alg.meet(a, u), alg.meet(b, u)) != u
                || above_unit(alg, a)
                || above_unit(alg, b)
        })
    })
}

pub fn is_weakly_well_connected(alg: &FinAlg) -> bool {
    let v = weakly_well_connected_meets(alg);
    debug_assert_eq!(v, weakly_well_connected_irreducible(alg));
    v
}

/// Distinct unary tables realizing the iterated conjugates of length `n`:
/// `Γ⁰ = {l₁}`, `Γ¹ = {l_b, r_b}`, `Γᵏ⁺¹ = {γ_b ∘ g : g ∈ Γᵏ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    pub n: usize,
    pub tables: Vec<Vec<Elem>>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// `γ₁(a) ∨ γ₂(b) = 1` for all `γ₁, γ₂`.
    pub fn bn(&self, alg: &FinAlg, a: Elem, b: Elem) -> bool {
        // the join is 1 for every pair iff it is 1 for every pair of values
        let mut va: Vec<Elem> = self.tables.iter().map(|t| t[a]).collect();
        let mut vb: Vec<Elem> = self.tables.iter().map(|t| t[b]).collect();
        va.sort_unstable();
        va.dedup();
        vb.sort_unstable();
        vb.dedup();
        va.iter()
            .all(|&x| vb.iter().all(|&y| alg.join(x, y) == alg.unit()))
    }
}

pub fn gamma_set(alg: &FinAlg, n: usize) -> GammaSet {
    let mut tables = if n == 0 {
        vec![conjugate(alg, Side::Left, alg.unit())]
    } else {
        let mut base = Vec::new();
        for b in alg.elements() {
            base.push(conjugate(alg, Side::Left, b));
            base.push(conjugate(alg, Side::Right, b));
        }
        base.sort();
        base.dedup();
        let mut cur = base.clone();
        for _ in 1..n {
            let mut next: Vec<Vec<Elem>> = cur
                .iter()
                .flat_map(|g| {
                    base.iter()
                        .map(move |gb| g.iter().map(|&x| gb[x]).collect())
                })
                .collect();
            next.sort();
            next.dedup();
            cur = next;
        }
        cur
    };
    tables.sort();
    tables.dedup();
    GammaSet { n, tables }
}

pub fn satisfies_bn(alg: &FinAlg, a: Elem, b: Elem, n: usize) -> bool {
    gamma_set(alg, n).bn(alg, a, b)
}

/// `Bⁿ(a, b)` implies `a ≥ 1` or `b ≥ 1`, for all pairs.
pub fn is_gamma_connected(alg: &FinAlg, n: usize) -> bool {
    gamma_connected_witness(alg, n).is_none()
}

pub fn gamma_connected_witness(alg: &FinAlg, n: usize) -> Option<(Elem, Elem)> {
    let g = gamma_set(alg, n);
    alg.elements()
        .flat_map(|a| alg.elements().map(move |b| (a, b)))
        .find(|&(a, b)| g.bn(alg, a, b) && !above_unit(alg, a) && !above_unit(alg, b))
}

/// `(G_{n,k})`: `Bⁿ(a, b)` implies `Bᵏ(a, b)` for all pairs.
pub fn satisfies_gnk(alg: &FinAlg, n: usize, k: usize) -> bool {
    let gn = gamma_set(alg, n);
    let gk = gamma_set(alg, k);
    alg.elements().all(|a| {
        alg.elements()
            .all(|b| !gn.bn(alg, a, b) || gk.bn(alg, a, b))
    })
}

/// The quasi-equation `x ∨ y = 1 ⟹ l_w(x) ∨ r_z(y) = 1`.
pub fn satisfies_g_quasi(alg: &FinAlg) -> bool {
    let s = &builtin("G", &[]).expect("registry name")[0];
    satisfies(alg, s).expect("zero-free").holds
}
