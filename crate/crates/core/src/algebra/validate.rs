use std::fmt;

use serde::Serialize;

use super::{AlgebraError, Elem, RawAlgebra, Tables};

/// The axioms checked by [`validate`], in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    JoinIdempotent,
    JoinCommutative,
    JoinAssociative,
    MeetIdempotent,
    MeetCommutative,
    MeetAssociative,
    Absorption,
    UnitLaw,
    ProdAssociative,
    ZeroIsBottom,
    /// No division table can be derived from the product.
    Residuated,
    /// `a·b ≤ c ⟺ b ≤ a\c`
    LeftResiduation,
    /// `a·b ≤ c ⟺ a ≤ c/b`
    RightResiduation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

/// Outcome of validation: the first witness for every violated axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{:?} at {:?}", v.axiom, v.witness))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks every residuated-lattice axiom exhaustively. Missing division
/// tables are derived first; failure to derive them is reported as a
/// [`Axiom::Residuated`] violation.
pub fn validate(raw: &RawAlgebra) -> Result<ValidationReport, AlgebraError> {
    let mut tables = Tables::from_raw(raw)?;
    if tables.ldiv.is_none() || tables.rdiv.is_none() {
        if let Err(e) = tables.complete_divisions() {
            let mut report = check_tables(&tables);
            let witness = match e {
                AlgebraError::NotResiduated { a, b } => vec![a, b],
                _ => vec![],
            };
            report.violations.push(Violation {
                axiom: Axiom::Residuated,
                witness,
            });
            return Ok(report);
        }
    }
    Ok(check_tables(&tables))
}

struct Collector {
    report: ValidationReport,
}

impl Collector {
    fn check(&mut self, axiom: Axiom, witness: impl FnOnce() -> Option<Vec<Elem>>) {
        if let Some(w) = witness() {
            self.report.violations.push(Violation { axiom, witness: w });
        }
    }
}

fn find1(n: usize, p: impl Fn(Elem) -> bool) -> Option<Vec<Elem>> {
    (0..n).find(|&a| !p(a)).map(|a| vec![a])
}

fn find2(n: usize, p: impl Fn(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            if !p(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn find3(n: usize, p: impl Fn(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !p(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Divisions that are absent are skipped; callers complete them first.
pub(crate) fn check_tables(t: &Tables) -> ValidationReport {
    let n = t.size;
    let (j, m, p) = (&t.join, &t.meet, &t.prod);
    let leq = |a: Elem, b: Elem| j.get(a, b) == b;
    let mut c = Collector {
        report: ValidationReport::default(),
    };

    c.check(Axiom::JoinIdempotent, || find1(n, |a| j.get(a, a) == a));
    c.check(Axiom::JoinCommutative, || {
        find2(n, |a, b| j.get(a, b) == j.get(b, a))
    });
    c.check(Axiom::JoinAssociative, || {
        find3(n, |a, b, x| j.get(j.get(a, b), x) == j.get(a, j.get(b, x)))
    });
    c.check(Axiom::MeetIdempotent, || find1(n, |a| m.get(a, a) == a));
    c.check(Axiom::MeetCommutative, || {
        find2(n, |a, b| m.get(a, b) == m.get(b, a))
    });
    c.check(Axiom::MeetAssociative, || {
        find3(n, |a, b, x| m.get(m.get(a, b), x) == m.get(a, m.get(b, x)))
    });
    c.check(Axiom::Absorption, || {
        find2(n, |a, b| {
            j.get(a, m.get(a, b)) == a && m.get(a, j.get(a, b)) == a
        })
    });
    c.check(Axiom::UnitLaw, || {
        find1(n, |a| p.get(t.unit, a) == a && p.get(a, t.unit) == a)
    });
    c.check(Axiom::ProdAssociative, || {
        find3(n, |a, b, x| p.get(p.get(a, b), x) == p.get(a, p.get(b, x)))
    });
    if let Some(z) = t.zero {
        c.check(Axiom::ZeroIsBottom, || {
            find1(n, |a| leq(z, a)).map(|_| vec![z])
        });
    }
    if let Some(ld) = &t.ldiv {
        c.check(Axiom::LeftResiduation, || {
            find3(n, |a, b, x| leq(p.get(a, b), x) == leq(b, ld.get(a, x)))
        });
    }
    if let Some(rd) = &t.rdiv {
        c.check(Axiom::RightResiduation, || {
            find3(n, |a, b, x| leq(p.get(a, b), x) == leq(a, rd.get(x, b)))
        });
    }
    c.report
}
