use std::collections::BTreeMap;

use thiserror::Error;

use super::{Atomic, BinOp, Rel, Statement, Term};
use crate::algebra::{Elem, FinAlg};
use crate::par::{self, Exec};

/// Variable name ↦ element index.
pub type Assignment = BTreeMap<String, Elem>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0:?}")]
    Unbound(String),
    #[error("constant 0 used in an algebra without zero")]
    NoZero,
    #[error("element {0} out of range")]
    OutOfRange(Elem),
}

#[derive(Clone, Copy, Debug)]
enum Instr {
    Var(usize),
    Const(Elem),
    Op(BinOp),
}

/// A term flattened to postfix form against a fixed variable list and a
/// fixed algebra's constants.
#[derive(Clone, Debug)]
pub struct CompiledTerm {
    code: Vec<Instr>,
}

impl CompiledTerm {
    pub fn compile(alg: &FinAlg, term: &Term, vars: &[String]) -> Result<Self, EvalError> {
        let mut code = Vec::new();
        emit(alg, term, vars, &mut code)?;
        Ok(CompiledTerm { code })
    }

    pub fn run(&self, alg: &FinAlg, env: &[Elem]) -> Elem {
        let mut stack: Vec<Elem> = Vec::with_capacity(self.code.len());
        for ins in &self.code {
            match *ins {
                Instr::Var(i) => stack.push(env[i]),
                Instr::Const(c) => stack.push(c),
                Instr::Op(op) => {
                    let r = stack.pop().expect("well-formed code");
                    let l = stack.pop().expect("well-formed code");
                    stack.push(apply(alg, op, l, r));
                }
            }
        }
        stack.pop().expect("well-formed code")
    }
}

#[inline]
pub(crate) fn apply(alg: &FinAlg, op: BinOp, l: Elem, r: Elem) -> Elem {
    match op {
        BinOp::Join => alg.join(l, r),
        BinOp::Meet => alg.meet(l, r),
        BinOp::Prod => alg.prod(l, r),
        BinOp::LDiv => alg.ldiv(l, r),
        BinOp::RDiv => alg.rdiv(l, r),
    }
}

fn emit(alg: &FinAlg, t: &Term, vars: &[String], code: &mut Vec<Instr>) -> Result<(), EvalError> {
    match t {
        Term::Var(v) => {
            let i = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| EvalError::Unbound(v.clone()))?;
            code.push(Instr::Var(i));
        }
        Term::One => code.push(Instr::Const(alg.unit())),
        Term::Zero => code.push(Instr::Const(alg.zero().ok_or(EvalError::NoZero)?)),
        Term::Bin(op, l, r) => {
            emit(alg, l, vars, code)?;
            emit(alg, r, vars, code)?;
            code.push(Instr::Op(*op));
        }
    }
    Ok(())
}

/// Evaluates `t` under `a`. Extra bindings are ignored.
pub fn eval(alg: &FinAlg, t: &Term, a: &Assignment) -> Result<Elem, EvalError> {
    let vars: Vec<String> = a.keys().cloned().collect();
    let env: Vec<Elem> = a.values().copied().collect();
    if let Some(&bad) = env.iter().find(|&&e| e >= alg.size()) {
        return Err(EvalError::OutOfRange(bad));
    }
    Ok(CompiledTerm::compile(alg, t, &vars)?.run(alg, &env))
}

/// Outcome of exhaustive checking. On failure `witness` is the least failing
/// assignment in mixed-radix order over the sorted variable list (first
/// variable most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Assignment>,
}

struct CompiledAtom {
    lhs: CompiledTerm,
    rel: Rel,
    rhs: CompiledTerm,
}

impl CompiledAtom {
    fn new(alg: &FinAlg, a: &Atomic, vars: &[String]) -> Result<Self, EvalError> {
        Ok(CompiledAtom {
            lhs: CompiledTerm::compile(alg, &a.lhs, vars)?,
            rel: a.rel,
            rhs: CompiledTerm::compile(alg, &a.rhs, vars)?,
        })
    }

    fn holds(&self, alg: &FinAlg, env: &[Elem]) -> bool {
        let l = self.lhs.run(alg, env);
        let r = self.rhs.run(alg, env);
        match self.rel {
            Rel::Eq => l == r,
            Rel::Le => alg.leq(l, r),
            Rel::Ge => alg.leq(r, l),
        }
    }
}

struct Compiled {
    premises: Vec<CompiledAtom>,
    conclusion: CompiledAtom,
}

impl Compiled {
    fn holds(&self, alg: &FinAlg, env: &[Elem]) -> bool {
        !self.premises.iter().all(|p| p.holds(alg, env)) || self.conclusion.holds(alg, env)
    }

    /// Least failing environment whose leading entries equal `prefix`.
    fn first_failure(&self, alg: &FinAlg, prefix: &[Elem], nvars: usize) -> Option<Vec<Elem>> {
        let n = alg.size();
        let mut env = vec![0; nvars];
        env[..prefix.len()].copy_from_slice(prefix);
        loop {
            if !self.holds(alg, &env) {
                return Some(env);
            }
            // odometer over the free suffix, last variable fastest
            let mut i = nvars;
            loop {
                if i == prefix.len() {
                    return None;
                }
                i -= 1;
                env[i] += 1;
                if env[i] < n {
                    break;
                }
                env[i] = 0;
            }
        }
    }
}

pub fn satisfies(alg: &FinAlg, s: &Statement) -> Result<Verdict, EvalError> {
    satisfies_with(alg, s, Exec::default())
}

/// [`satisfies`] with an explicit execution mode. The parallel mode splits on
/// the first variable and still reports the least witness.
pub fn satisfies_with(alg: &FinAlg, s: &Statement, exec: Exec) -> Result<Verdict, EvalError> {
    let vars = s.variables();
    let compiled = match s {
        Statement::Atomic(a) => Compiled {
            premises: vec![],
            conclusion: CompiledAtom::new(alg, a, &vars)?,
        },
        Statement::Quasi {
            premises,
            conclusion,
        } => Compiled {
            premises: premises
                .iter()
                .map(|p| CompiledAtom::new(alg, p, &vars))
                .collect::<Result<_, _>>()?,
            conclusion: CompiledAtom::new(alg, conclusion, &vars)?,
        },
    };
    let failure = if vars.is_empty() {
        compiled.first_failure(alg, &[], 0)
    } else {
        let firsts: Vec<Elem> = alg.elements().collect();
        par::find_map_first(exec, &firsts, |&v| {
            compiled.first_failure(alg, &[v], vars.len())
        })
    };
    Ok(match failure {
        None => Verdict {
            holds: true,
            witness: None,
        },
        Some(env) => Verdict {
            holds: false,
            witness: Some(vars.into_iter().zip(env).collect()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Table;
    use crate::term::parse_statement;

    fn l2() -> FinAlg {
        FinAlg::from_parts(
            Some("L2".into()),
            2,
            Some(0),
            Table::from_fn(3, |a, b| a.max(b)),
            Table::from_fn(3, |a, b| a.min(b)),
            Table::from_fn(3, |a, b| (a + b).saturating_sub(2)),
        )
        .unwrap()
    }

    fn assign(pairs: &[(&str, Elem)]) -> Assignment {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn lukasiewicz_product() {
        let t = Term::var("x").mul(Term::var("y"));
        assert_eq!(eval(&l2(), &t, &assign(&[("x", 1), ("y", 1)])).unwrap(), 0);
        assert_eq!(eval(&l2(), &Term::One, &assign(&[])).unwrap(), 2);
    }

    #[test]
    fn eval_errors() {
        let t = Term::var("x").mul(Term::var("q"));
        assert_eq!(
            eval(&l2(), &t, &assign(&[("x", 1)])),
            Err(EvalError::Unbound("q".into()))
        );
        let hoop = l2().without_zero();
        assert_eq!(
            eval(&hoop, &Term::Zero, &assign(&[])),
            Err(EvalError::NoZero)
        );
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // x <= y fails first at x = 1, y = 0
        let s = parse_statement("x <= y").unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let v = satisfies_with(&l2(), &s, exec).unwrap();
            assert!(!v.holds);
            assert_eq!(v.witness, Some(assign(&[("x", 1), ("y", 0)])));
        }
    }

    #[test]
    fn quasi_equations_check_premises() {
        let s = parse_statement("x * y = 1 => x = 1").unwrap();
        assert!(satisfies(&l2(), &s).unwrap().holds);
        let s = parse_statement("x \\/ y = 1 => x = 1").unwrap();
        let v = satisfies(&l2(), &s).unwrap();
        assert_eq!(v.witness, Some(assign(&[("x", 0), ("y", 2)])));
    }

    #[test]
    fn closed_statements() {
        assert!(
            satisfies(&l2(), &parse_statement("0 <= 1").unwrap())
                .unwrap()
                .holds
        );
        assert!(
            !satisfies(&l2(), &parse_statement("1 <= 0").unwrap())
                .unwrap()
                .holds
        );
    }
}
