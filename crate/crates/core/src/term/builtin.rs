//! Registry of named equations and quasi-equations.
//!
//! Fixed statements are written in the text syntax and parsed; the
//! parametrised families (`normal`, `lambda`, `finite-chain`) are built
//! directly. A name may stand for several statements, which are meant
//! conjunctively.

use thiserror::Error;

use super::{parse_statement, Atomic, Statement, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuiltinError {
    #[error("unknown statement name {0:?}")]
    Unknown(String),
    #[error("{name} takes {expected} parameter(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("{name}: parameter must be at least {min}")]
    Range { name: String, min: usize },
}

const FIXED: &[(&str, &[&str])] = &[
    ("integral", &["x <= 1"]),
    ("commutative", &["x * y = y * x"]),
    (
        "divisible",
        &["(x / y) * y = x /\\ y", "x /\\ y = y * (y \\ x)"],
    ),
    ("cancellative", &["x * y / y = x", "x \\ x * y = y"]),
    ("idempotent", &["x * x = x"]),
    (
        "G",
        &["x \\/ y = 1 => w \\ x * w /\\ 1 \\/ z * y / z /\\ 1 = 1"],
    ),
    (
        "one-distributive",
        &["(x \\/ y) /\\ 1 <= x /\\ 1 \\/ y /\\ 1"],
    ),
    ("prelinear", &["x / y \\/ y / x >= 1"]),
    // the conjugates are capped at 1; uncapped, the equation holds in some
    // nonrepresentable commutative algebras of size 5
    (
        "representable",
        &["u \\ ((x \\/ y) \\ x) * u /\\ 1 \\/ v * ((x \\/ y) \\ y) / v /\\ 1 = 1"],
    ),
    (
        "wajsberg",
        &["(y / x) \\ y = (x / y) \\ x", "y / (x \\ y) = x / (y \\ x)"],
    ),
    ("product-hoop", &["(y -> z) \\/ ((y -> x * y) -> x) = 1"]),
    ("involutive", &["0 / (x \\ 0) = x", "(0 / x) \\ 0 = x"]),
];

const PARAMETRISED: &[&str] = &["normal", "lambda", "finite-chain"];

pub fn builtin_names() -> Vec<&'static str> {
    FIXED
        .iter()
        .map(|(n, _)| *n)
        .chain(PARAMETRISED.iter().copied())
        .collect()
}

fn x(i: usize) -> Term {
    Term::var(format!("x{i}"))
}

fn one_param(name: &str, params: &[usize], min: usize) -> Result<usize, BuiltinError> {
    match params {
        [k] if *k >= min => Ok(*k),
        [_] => Err(BuiltinError::Range {
            name: name.into(),
            min,
        }),
        _ => Err(BuiltinError::Arity {
            name: name.into(),
            expected: 1,
            got: params.len(),
        }),
    }
}

/// Looks up a named statement family and instantiates it.
pub fn builtin(name: &str, params: &[usize]) -> Result<Vec<Statement>, BuiltinError> {
    if let Some((_, texts)) = FIXED.iter().find(|(n, _)| *n == name) {
        if !params.is_empty() {
            return Err(BuiltinError::Arity {
                name: name.into(),
                expected: 0,
                got: params.len(),
            });
        }
        return Ok(texts
            .iter()
            .map(|t| parse_statement(t).expect("registry statements parse"))
            .collect());
    }
    match name {
        "normal" => {
            let n = one_param(name, params, 1)?;
            let (xv, yv) = (Term::var("x"), Term::var("y"));
            let p = xv.clone().meet(Term::One).pow(n);
            Ok(vec![
                Atomic::le(p.clone().mul(yv.clone()), yv.clone().mul(xv.clone())).into(),
                Atomic::le(yv.clone().mul(p), xv.mul(yv)).into(),
            ])
        }
        "lambda" => {
            let n = one_param(name, params, 1)?;
            let meetand = |i: usize| x(i).rdiv(x(i).rdiv(x(i + 1).ldiv(x(i))));
            let lhs = (1..n).fold(meetand(0), |acc, i| acc.meet(meetand(i)));
            let rhs = (1..=n).fold(x(0), |acc, i| acc.join(x(i)));
            Ok(vec![Atomic::le(lhs, rhs).into()])
        }
        "finite-chain" => {
            let n = one_param(name, params, 1)?;
            let joinand = |i: usize| x(i + 1).rdiv(x(i));
            let lhs = (1..n).fold(joinand(0), |acc, i| acc.join(joinand(i)));
            Ok(vec![Atomic::ge(lhs, Term::One).into()])
        }
        _ => Err(BuiltinError::Unknown(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_instantiates() {
        for name in builtin_names() {
            let params: &[usize] = if PARAMETRISED.contains(&name) {
                &[2]
            } else {
                &[]
            };
            let stmts = builtin(name, params).unwrap();
            assert!(!stmts.is_empty(), "{name}");
        }
    }

    #[test]
    fn lambda_two_has_three_variables_and_two_meetands() {
        let s = &builtin("lambda", &[2]).unwrap()[0];
        assert_eq!(s.variables(), vec!["x0", "x1", "x2"]);
        assert_eq!(
            s.to_string(),
            "x0 / (x0 / (x1 \\ x0)) /\\ x1 / (x1 / (x2 \\ x1)) <= x0 \\/ x1 \\/ x2"
        );
    }

    #[test]
    fn normal_one_is_a_pair() {
        let s = builtin("normal", &[1]).unwrap();
        let printed: Vec<String> = s.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            printed,
            ["(x /\\ 1) * y <= y * x", "y * (x /\\ 1) <= x * y"]
        );
    }

    #[test]
    fn finite_chain_two() {
        let s = &builtin("finite-chain", &[2]).unwrap()[0];
        assert_eq!(s.to_string(), "x1 / x0 \\/ x2 / x1 >= 1");
    }

    #[test]
    fn bad_lookups() {
        assert_eq!(
            builtin("nope", &[]),
            Err(BuiltinError::Unknown("nope".into()))
        );
        assert!(matches!(
            builtin("lambda", &[]),
            Err(BuiltinError::Arity { .. })
        ));
        assert!(matches!(
            builtin("lambda", &[0]),
            Err(BuiltinError::Range { .. })
        ));
        assert!(matches!(
            builtin("prelinear", &[1]),
            Err(BuiltinError::Arity { .. })
        ));
    }

    #[test]
    fn quasi_g_shape() {
        let s = &builtin("G", &[]).unwrap()[0];
        assert!(matches!(s, Statement::Quasi { .. }));
        assert_eq!(s.variables(), vec!["w", "x", "y", "z"]);
    }
}
