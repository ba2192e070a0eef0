//! Class operators on finite algebras and comparison of generated varieties.
//!
//! For a finite algebra `A` every ultrapower is isomorphic to `A`, and by
//! Jónsson's lemma the subdirectly irreducible members of `V(A)` lie in
//! `HS(A)`. So `V(A) ⊆ V(B)` iff every SI member of `HS(A)` lies in `HS(B)`,
//! which is what [`var_leq`] checks.
//!
//! All operators respect the signature: when an algebra declares a zero,
//! subalgebras must contain it. Use [`FinAlg::without_zero`] to work with
//! hoop reducts.

use std::fmt::Write as _;

use crate::algebra::{canonical_form, Elem, ElemSet, FinAlg};
use crate::congruence::{congruence_filters, is_subdirectly_irreducible, quotient};
use crate::par::{self, Exec};

/// Algebras up to isomorphism, in insertion order.
#[derive(Clone, Debug, Default)]
pub struct AlgebraCatalog {
    entries: Vec<FinAlg>,
    keys: Vec<Vec<usize>>,
}

impl AlgebraCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `alg` unless an isomorphic copy is present; true when added.
    pub fn insert(&mut self, alg: FinAlg) -> bool {
        let key = canonical_form(&alg).key;
        if self.keys.contains(&key) {
            return false;
        }
        self.keys.push(key);
        self.entries.push(alg);
        true
    }

    pub fn contains_iso(&self, alg: &FinAlg) -> bool {
        self.keys.contains(&canonical_form(alg).key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[FinAlg] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FinAlg> {
        self.entries.iter()
    }

    pub fn into_vec(self) -> Vec<FinAlg> {
        self.entries
    }

    /// Reorders entries by size, then canonical key.
    pub fn sort(&mut self) {
        let mut pairs: Vec<(Vec<usize>, FinAlg)> =
            self.keys.drain(..).zip(self.entries.drain(..)).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        for (k, a) in pairs {
            self.keys.push(k);
            self.entries.push(a);
        }
    }
}

impl FromIterator<FinAlg> for AlgebraCatalog {
    fn from_iter<I: IntoIterator<Item = FinAlg>>(iter: I) -> Self {
        let mut c = AlgebraCatalog::new();
        for a in iter {
            c.insert(a);
        }
        c
    }
}

/// Least subuniverse containing `gens`, the unit and the zero if declared.
pub fn generate_subalgebra(alg: &FinAlg, gens: &[Elem]) -> ElemSet {
    let mut set = ElemSet::from_members(alg.size(), gens.iter().copied().chain([alg.unit()]));
    if let Some(z) = alg.zero() {
        set.insert(z);
    }
    let ops: [fn(&FinAlg, Elem, Elem) -> Elem; 5] = [
        FinAlg::join,
        FinAlg::meet,
        FinAlg::prod,
        FinAlg::ldiv,
        FinAlg::rdiv,
    ];
    loop {
        let members = set.members();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                for op in &ops {
                    grew |= set.insert(op(alg, a, b));
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Every subuniverse, each found by adding one generator to a smaller one.
pub fn subuniverses(alg: &FinAlg) -> Vec<ElemSet> {
    let mut found = vec![generate_subalgebra(alg, &[])];
    let mut i = 0;
    while i < found.len() {
        let s = found[i].clone();
        for a in alg.elements().filter(|&a| !s.contains(a)) {
            let mut gens = s.members();
            gens.push(a);
            let t = generate_subalgebra(alg, &gens);
            if !found.contains(&t) {
                found.push(t);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(&b.members()))
    });
    found
}

pub fn subalgebras(alg: &FinAlg) -> AlgebraCatalog {
    let mut c: AlgebraCatalog = subuniverses(alg)
        .iter()
        .map(|s| alg.restrict(s).expect("subuniverse"))
        .collect();
    c.sort();
    c
}

pub fn homomorphic_images(alg: &FinAlg) -> AlgebraCatalog {
    let mut c: AlgebraCatalog = congruence_filters(alg)
        .filters
        .iter()
        .map(|f| quotient(alg, f).expect("congruence filter"))
        .collect();
    c.sort();
    c
}

/// `HS(A)` up to isomorphism.
pub fn hs_members(alg: &FinAlg) -> AlgebraCatalog {
    let mut c: AlgebraCatalog = subalgebras(alg)
        .iter()
        .flat_map(|s| homomorphic_images(s).into_vec())
        .collect();
    c.sort();
    c
}

/// `SH(A)` up to isomorphism; always contained in `HS(A)`.
pub fn sh_members(alg: &FinAlg) -> AlgebraCatalog {
    let mut c: AlgebraCatalog = homomorphic_images(alg)
        .iter()
        .flat_map(|h| subalgebras(h).into_vec())
        .collect();
    c.sort();
    c
}

/// `a ∈ HS(b)`. Since `SH(b) ⊆ HS(b)` this also decides `a ∈ HS(b) ∪ SH(b)`.
pub fn hs_contains(b: &FinAlg, a: &FinAlg) -> bool {
    if a.size() > b.size() || a.zero().is_some() != b.zero().is_some() {
        return false;
    }
    let key = canonical_form(a).key;
    subuniverses(b)
        .iter()
        .filter(|s| s.len() >= a.size())
        .any(|s| {
            let sub = b.restrict(s).expect("subuniverse");
            congruence_filters(&sub).filters.iter().any(|f| {
                let q = quotient(&sub, f).expect("congruence filter");
                q.size() == a.size() && canonical_form(&q).key == key
            })
        })
}

/// Subdirectly irreducible members of `HS(A)`.
pub fn si_members(alg: &FinAlg) -> AlgebraCatalog {
    hs_members(alg)
        .into_vec()
        .into_iter()
        .filter(is_subdirectly_irreducible)
        .collect()
}

/// `V(a) ⊆ V(b)`.
pub fn var_leq(a: &FinAlg, b: &FinAlg) -> bool {
    si_members(a).iter().all(|s| hs_contains(b, s))
}

pub fn var_equal(a: &FinAlg, b: &FinAlg) -> bool {
    var_leq(a, b) && var_leq(b, a)
}

/// Variety inclusion among a list of algebras, collapsed to a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPoset {
    pub labels: Vec<String>,
    /// `leq[i][j]` iff `V(algs[i]) ⊆ V(algs[j])`.
    pub leq: Vec<Vec<bool>>,
    /// Mutually included nodes, in order of first member.
    pub classes: Vec<Vec<usize>>,
    /// Covers between classes, lower first.
    pub hasse: Vec<(usize, usize)>,
}

impl VarietyPoset {
    pub fn class_label(&self, c: usize) -> String {
        self.classes[c]
            .iter()
            .map(|&i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(" = ")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph variety_poset {\n");
        for c in 0..self.classes.len() {
            let _ = writeln!(out, "  n{c} [label=\"{}\"];", self.class_label(c));
        }
        for &(i, j) in &self.hasse {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn variety_poset(algs: &[FinAlg]) -> VarietyPoset {
    variety_poset_with(algs, Exec::default())
}

pub fn variety_poset_with(algs: &[FinAlg], exec: Exec) -> VarietyPoset {
    let n = algs.len();
    let si: Vec<AlgebraCatalog> = par::map(exec, algs, si_members);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let flags = par::map(exec, &pairs, |&(i, j)| {
        i == j || si[i].iter().all(|s| hs_contains(&algs[j], s))
    });
    let leq: Vec<Vec<bool>> = flags.chunks(n.max(1)).map(|r| r.to_vec()).take(n).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..n).filter(|&j| leq[i][j] && leq[j][i]).collect();
        for &j in &members {
            class_of[j] = classes.len();
        }
        classes.push(members);
    }
    let k = classes.len();
    let lt = |a: usize, b: usize| a != b && leq[classes[a][0]][classes[b][0]];
    let mut hasse = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if lt(a, b) && !(0..k).any(|c| lt(a, c) && lt(c, b)) {
                hasse.push((a, b));
            }
        }
    }
    let labels = algs
        .iter()
        .enumerate()
        .map(|(i, a)| a.label_or(&format!("A{i}")).to_string())
        .collect();
    VarietyPoset {
        labels,
        leq,
        classes,
        hasse,
    }
}
