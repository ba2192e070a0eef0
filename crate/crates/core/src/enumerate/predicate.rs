//! Boolean combinations of named properties, e.g.
//! `integral & simple & !well-connected`.

use std::fmt;

use thiserror::Error;

use crate::algebra::FinAlg;
use crate::congruence::{is_simple, is_subdirectly_irreducible};
use crate::properties::{
    is_normal, is_weakly_well_connected, is_well_connected, representable_by_si_quotients,
    satisfies_g_quasi,
};
use crate::term::{builtin, builtin_names, satisfies};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
}

/// Properties that are not plain registry equations.
const STRUCTURAL: &[&str] = &[
    "chain",
    "simple",
    "si",
    "normal",
    "well-connected",
    "weakly-well-connected",
    "representable-si",
];

fn canonical_name(raw: &str) -> String {
    let name = raw.replace('_', "-");
    match name.as_str() {
        "subdirectly-irreducible" => "si".into(),
        "SI" => "si".into(),
        "g" => "G".into(),
        _ => name,
    }
}

pub fn property_names() -> Vec<String> {
    let mut names: Vec<String> = STRUCTURAL.iter().map(|s| s.to_string()).collect();
    names.extend(
        builtin_names()
            .into_iter()
            .filter(|n| builtin(n, &[]).is_ok())
            .map(str::to_string),
    );
    names
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    Prop(String),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Prop(p) => write!(f, "{p}"),
            Predicate::Not(p) => match **p {
                Predicate::Prop(_) | Predicate::Not(_) => write!(f, "!{p}"),
                _ => write!(f, "!({p})"),
            },
            Predicate::And(a, b) => {
                let wrap = |p: &Predicate| matches!(p, Predicate::Or(..));
                if wrap(a) {
                    write!(f, "({a})")?
                } else {
                    write!(f, "{a}")?
                }
                write!(f, " & ")?;
                if wrap(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Predicate::Or(a, b) => write!(f, "{a} | {b}"),
        }
    }
}

pub fn holds_property(alg: &FinAlg, name: &str) -> bool {
    match name {
        "chain" => alg.is_chain(),
        "simple" => is_simple(alg),
        "si" => is_subdirectly_irreducible(alg),
        "normal" => is_normal(alg),
        "well-connected" => is_well_connected(alg),
        "weakly-well-connected" => is_weakly_well_connected(alg),
        "representable-si" => representable_by_si_quotients(alg),
        "G" => satisfies_g_quasi(alg),
        _ => builtin(name, &[])
            .expect("checked at parse time")
            .iter()
            .all(|s| satisfies(alg, s).map(|v| v.holds).unwrap_or(false)),
    }
}

impl Predicate {
    pub fn eval(&self, alg: &FinAlg) -> bool {
        match self {
            Predicate::Prop(p) => holds_property(alg, p),
            Predicate::Not(p) => !p.eval(alg),
            Predicate::And(a, b) => a.eval(alg) && b.eval(alg),
            Predicate::Or(a, b) => a.eval(alg) || b.eval(alg),
        }
    }

    /// Properties asserted positively at the top-level conjunction.
    pub fn required(&self) -> Vec<&str> {
        match self {
            Predicate::Prop(p) => vec![p.as_str()],
            Predicate::And(a, b) => {
                let mut v = a.required();
                v.extend(b.required());
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Predicate, PredicateError> {
        let mut p = Parser {
            text: text.as_bytes(),
            pos: 0,
        };
        let e = p.or()?;
        p.skip_ws();
        if p.pos != p.text.len() {
            return Err(PredicateError::Syntax {
                pos: p.pos,
                msg: "trailing input",
            });
        }
        Ok(e)
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.text.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Predicate, PredicateError> {
        let mut lhs = self.and()?;
        while self.eat(b'|') {
            lhs = Predicate::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Predicate, PredicateError> {
        let mut lhs = self.unary()?;
        while self.eat(b'&') {
            lhs = Predicate::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Predicate, PredicateError> {
        if self.eat(b'!') {
            return Ok(Predicate::Not(Box::new(self.unary()?)));
        }
        if self.eat(b'(') {
            let e = self.or()?;
            if !self.eat(b')') {
                return Err(PredicateError::Syntax {
                    pos: self.pos,
                    msg: "expected ')'",
                });
            }
            return Ok(e);
        }
        self.skip_ws();
        let start = self.pos;
        while self
            .text
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'-' || *c == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PredicateError::Syntax {
                pos: start,
                msg: "expected a property name",
            });
        }
        let raw = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii");
        let name = canonical_name(raw);
        if !property_names().contains(&name) {
            return Err(PredicateError::UnknownProperty(raw.to_string()));
        }
        Ok(Predicate::Prop(name))
    }
}
