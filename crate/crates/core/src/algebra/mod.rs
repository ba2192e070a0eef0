//! Finite residuated lattices given by operation tables.
//!
//! A [`FinAlg`] is always validated: every constructor re-derives the order
//! from the join table and checks the lattice, monoid and residuation axioms
//! before handing the value out. Unchecked table data lives in
//! [`RawAlgebra`], which is also the on-disk JSON shape.

mod io;
mod iso;
mod table;
mod validate;

pub use io::{read_algebra, write_algebra, AlgebraJson};
pub use iso::{canonical_form, is_isomorphic, refined_ranks, CanonicalForm, IsoWitness};
pub use table::{Elem, ElemSet, Table};
pub use validate::{validate, Axiom, ValidationReport, Violation};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("not residuated: no largest y with {a}*y <= {b}")]
    NotResiduated { a: Elem, b: Elem },
    #[error("axiom violated: {0}")]
    Invalid(ValidationReport),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Unvalidated table data, one-to-one with the algebra file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawAlgebra {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub unit: Elem,
    #[serde(default)]
    pub zero: Option<Elem>,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub prod: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ldiv: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rdiv: Option<Vec<Vec<Elem>>>,
}

/// Shape-checked tables; the lattice/monoid/residuation axioms may still fail.
#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub size: usize,
    pub unit: Elem,
    pub zero: Option<Elem>,
    pub join: Table,
    pub meet: Table,
    pub prod: Table,
    pub ldiv: Option<Table>,
    pub rdiv: Option<Table>,
}

impl Tables {
    pub(crate) fn from_raw(raw: &RawAlgebra) -> Result<Self, AlgebraError> {
        let n = raw.size;
        if n == 0 {
            return Err(AlgebraError::Malformed("size must be positive".into()));
        }
        if raw.unit >= n {
            return Err(AlgebraError::Malformed(format!(
                "unit {} out of range",
                raw.unit
            )));
        }
        if let Some(z) = raw.zero {
            if z >= n {
                return Err(AlgebraError::Malformed(format!("zero {z} out of range")));
            }
        }
        let table = |name: &str, rows: &[Vec<Elem>]| {
            Table::from_rows(n, rows).ok_or_else(|| {
                AlgebraError::Malformed(format!("{name} table is not {n}x{n} over 0..{n}"))
            })
        };
        let ldiv = raw.ldiv.as_deref().map(|r| table("ldiv", r)).transpose()?;
        let rdiv = raw.rdiv.as_deref().map(|r| table("rdiv", r)).transpose()?;
        Ok(Tables {
            size: n,
            unit: raw.unit,
            zero: raw.zero,
            join: table("join", &raw.join)?,
            meet: table("meet", &raw.meet)?,
            prod: table("prod", &raw.prod)?,
            ldiv,
            rdiv,
        })
    }

    #[inline]
    pub(crate) fn leq(&self, a: Elem, b: Elem) -> bool {
        self.join.get(a, b) == b
    }

    /// Fills in both division tables as joins of the adjunction sets and
    /// checks that each candidate actually lies in its set.
    pub(crate) fn complete_divisions(&mut self) -> Result<(), AlgebraError> {
        let n = self.size;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| self.leq(b, x)))
            .ok_or_else(|| AlgebraError::Malformed("join table has no bottom".into()))?;
        let mut ldiv = Table::from_fn(n, |_, _| bottom);
        let mut rdiv = Table::from_fn(n, |_, _| bottom);
        for a in 0..n {
            for b in 0..n {
                let l = (0..n)
                    .filter(|&y| self.leq(self.prod.get(a, y), b))
                    .fold(bottom, |acc, y| self.join.get(acc, y));
                if !self.leq(self.prod.get(a, l), b) {
                    return Err(AlgebraError::NotResiduated { a, b });
                }
                ldiv.set(a, b, l);
                let r = (0..n)
                    .filter(|&y| self.leq(self.prod.get(y, a), b))
                    .fold(bottom, |acc, y| self.join.get(acc, y));
                if !self.leq(self.prod.get(r, a), b) {
                    return Err(AlgebraError::NotResiduated { a, b });
                }
                // rdiv[b][a] = b/a
                rdiv.set(b, a, r);
            }
        }
        self.ldiv = Some(ldiv);
        self.rdiv = Some(rdiv);
        Ok(())
    }
}

/// A validated finite residuated lattice.
///
/// `ldiv.get(a, b)` is `a\b` and `rdiv.get(a, b)` is `a/b`.
#[derive(Clone)]
pub struct FinAlg {
    name: Option<String>,
    size: usize,
    unit: Elem,
    zero: Option<Elem>,
    join: Table,
    meet: Table,
    prod: Table,
    ldiv: Table,
    rdiv: Table,
    leq: Vec<bool>,
}

impl std::fmt::Debug for FinAlg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinAlg")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("unit", &self.unit)
            .field("zero", &self.zero)
            .field("join", &self.join)
            .field("prod", &self.prod)
            .finish()
    }
}

impl PartialEq for FinAlg {
    /// Table equality; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.unit == other.unit
            && self.zero == other.zero
            && self.join == other.join
            && self.meet == other.meet
            && self.prod == other.prod
            && self.ldiv == other.ldiv
            && self.rdiv == other.rdiv
    }
}

impl Eq for FinAlg {}

impl FinAlg {
    /// Validates raw data, completing missing division tables first.
    pub fn from_raw(raw: &RawAlgebra) -> Result<Self, AlgebraError> {
        let mut tables = Tables::from_raw(raw)?;
        if tables.ldiv.is_none() || tables.rdiv.is_none() {
            tables.complete_divisions()?;
        }
        Self::from_tables(raw.name.clone(), tables)
    }

    /// Builds an algebra from lattice and product tables, deriving divisions.
    pub fn from_parts(
        name: Option<String>,
        unit: Elem,
        zero: Option<Elem>,
        join: Table,
        meet: Table,
        prod: Table,
    ) -> Result<Self, AlgebraError> {
        let mut tables = Tables {
            size: join.size(),
            unit,
            zero,
            join,
            meet,
            prod,
            ldiv: None,
            rdiv: None,
        };
        tables.complete_divisions()?;
        Self::from_tables(name, tables)
    }

    /// Builds an algebra from all five tables; the stored divisions are
    /// checked against the product like any other input.
    #[allow(clippy::too_many_arguments)]
    pub fn from_all_parts(
        name: Option<String>,
        unit: Elem,
        zero: Option<Elem>,
        join: Table,
        meet: Table,
        prod: Table,
        ldiv: Table,
        rdiv: Table,
    ) -> Result<Self, AlgebraError> {
        let tables = Tables {
            size: join.size(),
            unit,
            zero,
            join,
            meet,
            prod,
            ldiv: Some(ldiv),
            rdiv: Some(rdiv),
        };
        Self::from_tables(name, tables)
    }

    pub(crate) fn from_tables(name: Option<String>, t: Tables) -> Result<Self, AlgebraError> {
        let report = validate::check_tables(&t);
        if !report.is_ok() {
            return Err(AlgebraError::Invalid(report));
        }
        let n = t.size;
        let leq = (0..n * n)
            .map(|i| t.join.get(i / n, i % n) == i % n)
            .collect();
        Ok(FinAlg {
            name,
            size: n,
            unit: t.unit,
            zero: t.zero,
            join: t.join,
            meet: t.meet,
            prod: t.prod,
            ldiv: t.ldiv.expect("divisions completed"),
            rdiv: t.rdiv.expect("divisions completed"),
            leq,
        })
    }

    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            size: self.size,
            unit: self.unit,
            zero: self.zero,
            join: self.join.to_rows(),
            meet: self.meet.to_rows(),
            prod: self.prod.to_rows(),
            ldiv: Some(self.ldiv.to_rows()),
            rdiv: Some(self.rdiv.to_rows()),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or `fallback` when the algebra is anonymous.
    pub fn label_or<'a>(&'a self, fallback: &'a str) -> &'a str {
        self.name.as_deref().unwrap_or(fallback)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join.get(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn prod(&self, a: Elem, b: Elem) -> Elem {
        self.prod.get(a, b)
    }

    /// `a\b`
    #[inline]
    pub fn ldiv(&self, a: Elem, b: Elem) -> Elem {
        self.ldiv.get(a, b)
    }

    /// `a/b`
    #[inline]
    pub fn rdiv(&self, a: Elem, b: Elem) -> Elem {
        self.rdiv.get(a, b)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn prod_table(&self) -> &Table {
        &self.prod
    }

    pub fn ldiv_table(&self) -> &Table {
        &self.ldiv
    }

    pub fn rdiv_table(&self) -> &Table {
        &self.rdiv
    }

    pub fn bottom(&self) -> Elem {
        self.elements()
            .find(|&b| self.elements().all(|x| self.leq(b, x)))
            .expect("finite lattice")
    }

    pub fn top(&self) -> Elem {
        self.elements()
            .find(|&t| self.elements().all(|x| self.leq(x, t)))
            .expect("finite lattice")
    }

    pub fn is_integral(&self) -> bool {
        self.unit == self.top()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.prod(a, b) == self.prod(b, a)))
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// `x ↦ x\0`; requires a zero.
    pub fn neg(&self, x: Elem) -> Option<Elem> {
        self.zero.map(|z| self.ldiv(x, z))
    }

    /// Elements sorted along a linear extension of the order, bottom first.
    pub fn linear_extension(&self) -> Vec<Elem> {
        let mut els: Vec<Elem> = self.elements().collect();
        els.sort_by_key(|&a| (self.elements().filter(|&x| self.leq(x, a)).count(), a));
        els
    }

    /// `A⁺ = {a : a ≥ 1}`
    pub fn positive_cone(&self) -> ElemSet {
        ElemSet::from_members(
            self.size,
            self.elements().filter(|&a| self.join(a, self.unit) == a),
        )
    }

    /// The same algebra in the zero-free signature.
    pub fn without_zero(&self) -> FinAlg {
        FinAlg {
            zero: None,
            ..self.clone()
        }
    }

    /// The same algebra with its bottom declared as zero.
    pub fn with_zero(&self) -> FinAlg {
        FinAlg {
            zero: Some(self.bottom()),
            ..self.clone()
        }
    }

    /// Restriction to a subset closed under every operation, relabelled in
    /// increasing index order. Returns `None` when `set` is not a
    /// subuniverse (it must contain the unit, and the zero if declared).
    pub fn restrict(&self, set: &ElemSet) -> Option<FinAlg> {
        if !set.contains(self.unit) || self.zero.is_some_and(|z| !set.contains(z)) {
            return None;
        }
        let members = set.members();
        let mut index = vec![usize::MAX; self.size];
        for (i, &m) in members.iter().enumerate() {
            index[m] = i;
        }
        let k = members.len();
        let mut closed = true;
        let mut sub = |t: &Table| {
            Table::from_fn(k, |a, b| {
                let v = t.get(members[a], members[b]);
                if index[v] == usize::MAX {
                    closed = false;
                    0
                } else {
                    index[v]
                }
            })
        };
        let join = sub(&self.join);
        let meet = sub(&self.meet);
        let prod = sub(&self.prod);
        let ldiv = sub(&self.ldiv);
        let rdiv = sub(&self.rdiv);
        if !closed {
            return None;
        }
        let leq = (0..k * k)
            .map(|i| join.get(i / k, i % k) == i % k)
            .collect();
        Some(FinAlg {
            name: None,
            size: k,
            unit: index[self.unit],
            zero: self.zero.map(|z| index[z]),
            join,
            meet,
            prod,
            ldiv,
            rdiv,
            leq,
        })
    }

    /// Renames element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[Elem]) -> FinAlg {
        let n = self.size;
        let join = self.join.relabel(perm);
        let leq = (0..n * n)
            .map(|i| join.get(i / n, i % n) == i % n)
            .collect();
        FinAlg {
            name: self.name.clone(),
            size: n,
            unit: perm[self.unit],
            zero: self.zero.map(|z| perm[z]),
            join,
            meet: self.meet.relabel(perm),
            prod: self.prod.relabel(perm),
            ldiv: self.ldiv.relabel(perm),
            rdiv: self.rdiv.relabel(perm),
            leq,
        }
    }
}

/// Derives divisions for tables that lack them; the result is validated.
/// Existing division tables in `raw` are ignored.
pub fn complete_divisions(raw: &RawAlgebra) -> Result<FinAlg, AlgebraError> {
    let mut stripped = raw.clone();
    stripped.ldiv = None;
    stripped.rdiv = None;
    FinAlg::from_raw(&stripped)
}

/// Join and meet tables of a finite lattice given by its order relation.
/// Returns `None` when some pair lacks a least upper or greatest lower bound.
pub fn lattice_tables(n: usize, leq: impl Fn(Elem, Elem) -> bool) -> Option<(Table, Table)> {
    let mut join = Table::from_fn(n, |_, _| 0);
    let mut meet = Table::from_fn(n, |_, _| 0);
    for a in 0..n {
        for b in 0..n {
            let uppers: Vec<Elem> = (0..n).filter(|&u| leq(a, u) && leq(b, u)).collect();
            let lub = uppers
                .iter()
                .copied()
                .find(|&u| uppers.iter().all(|&v| leq(u, v)))?;
            let lowers: Vec<Elem> = (0..n).filter(|&l| leq(l, a) && leq(l, b)).collect();
            let glb = lowers
                .iter()
                .copied()
                .find(|&l| lowers.iter().all(|&v| leq(v, l)))?;
            join.set(a, b, lub);
            meet.set(a, b, glb);
        }
    }
    Some((join, meet))
}
