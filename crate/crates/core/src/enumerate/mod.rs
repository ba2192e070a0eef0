//! Exhaustive generation of small residuated lattices up to isomorphism.
//!
//! Lattices come from [`enumerate_lattices`]; for each lattice and choice of
//! unit the product is searched row by row (see `search`). The work is split
//! into independent tasks, one per candidate row of the first
//! join-irreducible, which run under [`par`](crate::par). Results are
//! merged in task order and deduplicated by canonical form, so the output
//! does not depend on the execution mode.

mod lattice;
mod predicate;
mod search;

pub use lattice::{enumerate_lattices, Lattice};
pub use predicate::{holds_property, property_names, Predicate, PredicateError};

use thiserror::Error;

use crate::algebra::FinAlg;
use crate::classops::AlgebraCatalog;
use crate::par::{self, Exec};
use search::{join_endomorphisms, Problem};

pub const DEFAULT_CAP: usize = 6;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("size must be at least 1")]
    ZeroSize,
}

#[derive(Clone, Debug, Default)]
pub struct SearchConstraints {
    pub size: usize,
    pub commutative: bool,
    pub integral: bool,
    pub chain: bool,
    pub predicate: Option<Predicate>,
}

impl SearchConstraints {
    pub fn of_size(size: usize) -> Self {
        SearchConstraints {
            size,
            ..Default::default()
        }
    }

    pub fn commutative(mut self, yes: bool) -> Self {
        self.commutative = yes;
        self
    }

    pub fn integral(mut self, yes: bool) -> Self {
        self.integral = yes;
        self
    }

    pub fn chain(mut self, yes: bool) -> Self {
        self.chain = yes;
        self
    }

    pub fn predicate(mut self, p: Predicate) -> Self {
        self.predicate = Some(p);
        self
    }

    /// Folds positively required `commutative`, `integral` and `chain`
    /// from the predicate into the search flags.
    fn strengthened(&self) -> Self {
        let mut c = self.clone();
        if let Some(p) = &self.predicate {
            for r in p.required() {
                match r {
                    "commutative" => c.commutative = true,
                    "integral" => c.integral = true,
                    "chain" => c.chain = true,
                    _ => {}
                }
            }
        }
        c
    }
}

pub fn enumerate_rl(c: &SearchConstraints) -> Result<AlgebraCatalog, EnumerateError> {
    enumerate_rl_with(c, Exec::default(), DEFAULT_CAP)
}

pub fn enumerate_rl_with(
    c: &SearchConstraints,
    exec: Exec,
    cap: usize,
) -> Result<AlgebraCatalog, EnumerateError> {
    if c.size == 0 {
        return Err(EnumerateError::ZeroSize);
    }
    if c.size > cap {
        return Err(EnumerateError::CapExceeded { size: c.size, cap });
    }
    let c = c.strengthened();
    let lattices: Vec<Lattice> = enumerate_lattices(c.size)
        .into_iter()
        .filter(|l| !c.chain || l.is_chain())
        .collect();
    let endos: Vec<Vec<Vec<usize>>> = lattices.iter().map(join_endomorphisms).collect();

    // task = (lattice, unit, first row or None when nothing is left to choose)
    let mut tasks = Vec::new();
    for (li, lat) in lattices.iter().enumerate() {
        let units: Vec<usize> = if c.integral {
            vec![lat.top()]
        } else {
            (0..lat.size).collect()
        };
        for unit in units {
            let problem = Problem::new(lat, unit, c.commutative, &endos[li]);
            let st = problem.initial();
            if problem.is_complete(&st) {
                tasks.push((li, unit, None));
            } else {
                for row in problem.candidates(&st) {
                    tasks.push((li, unit, Some(row)));
                }
            }
        }
    }

    let found: Vec<Vec<FinAlg>> = par::map(exec, &tasks, |(li, unit, row)| {
        let problem = Problem::new(&lattices[*li], *unit, c.commutative, &endos[*li]);
        let mut st = problem.initial();
        let mut out = Vec::new();
        match row {
            None => problem.solve(&mut st, &mut out),
            Some(row) => {
                if problem.push(&mut st, row.clone()).is_some() {
                    problem.solve(&mut st, &mut out);
                }
            }
        }
        if let Some(p) = &c.predicate {
            out.retain(|a| p.eval(a));
        }
        out
    });
    let mut catalog: AlgebraCatalog = found.into_iter().flatten().collect();
    catalog.sort();
    Ok(catalog)
}

/// First algebra in canonical order, over sizes `1..=size_max`, meeting
/// the constraints (the constraint's own size is ignored).
pub fn find_example(
    c: &SearchConstraints,
    size_max: usize,
    exec: Exec,
    cap: usize,
) -> Result<Option<FinAlg>, EnumerateError> {
    for size in 1..=size_max {
        let cs = SearchConstraints { size, ..c.clone() };
        let found = enumerate_rl_with(&cs, exec, cap)?;
        if let Some(first) = found.into_vec().into_iter().next() {
            return Ok(Some(first));
        }
    }
    Ok(None)
}
