//! Terms, equations and quasi-equations over the signature
//! `{∨, ∧, ·, \, /, 1, 0}`, with a parser, a printer and exhaustive
//! evaluation over finite algebras.
//!
//! Text syntax: `\/` join, `/\` meet, `*` product, `\` and `/` divisions,
//! `->` as sugar for `\`. Relations `=`, `<=`, `>=`; quasi-equations are
//! written `s1 & s2 => s`. Binding strength, tightest first: `*`, then
//! `\ / ->` (left associative), then `/\`, then `\/`.

mod builtin;
mod eval;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use builtin::{builtin, builtin_names, BuiltinError};
pub use eval::{eval, satisfies, satisfies_with, Assignment, CompiledTerm, EvalError, Verdict};
pub use parse::{parse_statement, parse_term, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    Join,
    Meet,
    Prod,
    LDiv,
    RDiv,
}

impl BinOp {
    fn level(self) -> u8 {
        match self {
            BinOp::Join => 0,
            BinOp::Meet => 1,
            BinOp::LDiv | BinOp::RDiv => 2,
            BinOp::Prod => 3,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Join => "\\/",
            BinOp::Meet => "/\\",
            BinOp::Prod => "*",
            BinOp::LDiv => "\\",
            BinOp::RDiv => "/",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    One,
    Zero,
    Bin(BinOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn bin(op: BinOp, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn join(self, r: Term) -> Term {
        Term::bin(BinOp::Join, self, r)
    }

    pub fn meet(self, r: Term) -> Term {
        Term::bin(BinOp::Meet, self, r)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, r: Term) -> Term {
        Term::bin(BinOp::Prod, self, r)
    }

    /// `self \ r`
    pub fn ldiv(self, r: Term) -> Term {
        Term::bin(BinOp::LDiv, self, r)
    }

    /// `self / r`
    pub fn rdiv(self, r: Term) -> Term {
        Term::bin(BinOp::RDiv, self, r)
    }

    /// `self^k` as a left-nested product; `k = 0` gives `1`.
    pub fn pow(self, k: usize) -> Term {
        (1..k).fold(if k == 0 { Term::One } else { self.clone() }, |acc, _| {
            acc.mul(self.clone())
        })
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::One | Term::Zero => {}
            Term::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn uses_zero(&self) -> bool {
        match self {
            Term::Zero => true,
            Term::Var(_) | Term::One => false,
            Term::Bin(_, l, r) => l.uses_zero() || r.uses_zero(),
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::One => write!(f, "1"),
            Term::Zero => write!(f, "0"),
            Term::Bin(op, l, r) => {
                let lvl = op.level();
                let paren = lvl < min_level;
                if paren {
                    write!(f, "(")?;
                }
                l.fmt_at(f, lvl)?;
                write!(f, " {} ", op.symbol())?;
                // all operators are printed left-associated
                r.fmt_at(f, lvl + 1)?;
                if paren {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Le,
    Ge,
}

/// An equation or inequality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atomic {
    pub lhs: Term,
    pub rel: Rel,
    pub rhs: Term,
}

impl Atomic {
    pub fn new(lhs: Term, rel: Rel, rhs: Term) -> Self {
        Atomic { lhs, rel, rhs }
    }

    pub fn eq(lhs: Term, rhs: Term) -> Self {
        Atomic::new(lhs, Rel::Eq, rhs)
    }

    pub fn le(lhs: Term, rhs: Term) -> Self {
        Atomic::new(lhs, Rel::Le, rhs)
    }

    pub fn ge(lhs: Term, rhs: Term) -> Self {
        Atomic::new(lhs, Rel::Ge, rhs)
    }
}

impl fmt::Display for Atomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.rel {
            Rel::Eq => "=",
            Rel::Le => "<=",
            Rel::Ge => ">=",
        };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Atomic(Atomic),
    /// `premises[0] & ... => conclusion`; premises are never empty.
    Quasi {
        premises: Vec<Atomic>,
        conclusion: Atomic,
    },
}

impl Statement {
    /// Sorted variable list; this is the enumeration order used by
    /// [`satisfies`].
    pub fn variables(&self) -> Vec<String> {
        let mut vars = BTreeSet::new();
        for a in self.atoms() {
            a.lhs.collect_vars(&mut vars);
            a.rhs.collect_vars(&mut vars);
        }
        vars.into_iter().collect()
    }

    pub fn atoms(&self) -> Vec<&Atomic> {
        match self {
            Statement::Atomic(a) => vec![a],
            Statement::Quasi {
                premises,
                conclusion,
            } => premises.iter().chain(std::iter::once(conclusion)).collect(),
        }
    }

    pub fn uses_zero(&self) -> bool {
        self.atoms()
            .iter()
            .any(|a| a.lhs.uses_zero() || a.rhs.uses_zero())
    }
}

impl From<Atomic> for Statement {
    fn from(a: Atomic) -> Self {
        Statement::Atomic(a)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Atomic(a) => write!(f, "{a}"),
            Statement::Quasi {
                premises,
                conclusion,
            } => {
                for (i, p) in premises.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, " => {conclusion}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printer_uses_minimal_parentheses() {
        let x = Term::var("x");
        let y = Term::var("y");
        let t = x.clone().meet(Term::One).join(y.clone().meet(Term::One));
        assert_eq!(t.to_string(), "x /\\ 1 \\/ y /\\ 1");
        let t = x.clone().ldiv(y.clone().ldiv(x.clone()));
        assert_eq!(t.to_string(), "x \\ (y \\ x)");
        let t = x.clone().mul(y.clone()).rdiv(y);
        assert_eq!(t.to_string(), "x * y / y");
    }

    #[test]
    fn pow_nests_products() {
        let x = Term::var("x");
        assert_eq!(x.clone().pow(0), Term::One);
        assert_eq!(x.clone().pow(1), x);
        assert_eq!(x.clone().pow(3).to_string(), "x * x * x");
    }
}
