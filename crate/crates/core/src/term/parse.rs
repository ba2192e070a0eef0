use thiserror::Error;

use super::{Atomic, BinOp, Rel, Statement, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown token at {pos}: {found:?}")]
    UnknownToken { pos: usize, found: char },
    #[error("syntax error at {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    One,
    Zero,
    Op(BinOp),
    Rel(Rel),
    Amp,
    Implies,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("variable {s:?}"),
            Tok::One => "1".into(),
            Tok::Zero => "0".into(),
            Tok::Op(op) => format!("operator {:?}", op.symbol()),
            Tok::Rel(r) => format!("relation {r:?}"),
            Tok::Amp => "'&'".into(),
            Tok::Implies => "'=>'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let next = bytes.get(i + 1).copied();
        let (tok, len) = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'\\' if next == Some(b'/') => (Tok::Op(BinOp::Join), 2),
            b'/' if next == Some(b'\\') => (Tok::Op(BinOp::Meet), 2),
            b'\\' => (Tok::Op(BinOp::LDiv), 1),
            b'/' => (Tok::Op(BinOp::RDiv), 1),
            b'*' => (Tok::Op(BinOp::Prod), 1),
            b'-' if next == Some(b'>') => (Tok::Op(BinOp::LDiv), 2),
            b'=' if next == Some(b'>') => (Tok::Implies, 2),
            b'=' => (Tok::Rel(Rel::Eq), 1),
            b'<' if next == Some(b'=') => (Tok::Rel(Rel::Le), 2),
            b'>' if next == Some(b'=') => (Tok::Rel(Rel::Ge), 2),
            b'&' => (Tok::Amp, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'0' | b'1' if !next.is_some_and(|n| n.is_ascii_alphanumeric()) => {
                (if c == b'1' { Tok::One } else { Tok::Zero }, 1)
            }
            c if c.is_ascii_alphabetic() => {
                let len = bytes[i..]
                    .iter()
                    .take_while(|b| b.is_ascii_alphanumeric())
                    .count();
                (Tok::Ident(text[i..i + len].to_string()), len)
            }
            _ => {
                let found = text[i..].chars().next().expect("in bounds");
                return Err(ParseError::UnknownToken { pos: i, found });
            }
        };
        out.push((i, tok));
        i += len;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let (pos, tok) = &self.toks[self.at];
        ParseError::Syntax {
            pos: *pos,
            expected,
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn level(
        &mut self,
        ops: &[BinOp],
        next: fn(&mut Self) -> Result<Term, ParseError>,
    ) -> Result<Term, ParseError> {
        let mut lhs = next(self)?;
        while let Tok::Op(op) = *self.peek() {
            if !ops.contains(&op) {
                break;
            }
            self.bump();
            let rhs = next(self)?;
            lhs = Term::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Term, ParseError> {
        self.level(&[BinOp::Join], Self::meet)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        self.level(&[BinOp::Meet], Self::div)
    }

    fn div(&mut self) -> Result<Term, ParseError> {
        self.level(&[BinOp::LDiv, BinOp::RDiv], Self::prod)
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        self.level(&[BinOp::Prod], Self::primary)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::One => {
                self.bump();
                Ok(Term::One)
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::LParen => {
                self.bump();
                let t = self.join()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(self.error("a term")),
        }
    }

    fn atomic(&mut self) -> Result<Atomic, ParseError> {
        let lhs = self.join()?;
        let rel = match self.peek() {
            Tok::Rel(r) => *r,
            _ => return Err(self.error("'=', '<=' or '>='")),
        };
        self.bump();
        let rhs = self.join()?;
        Ok(Atomic { lhs, rel, rhs })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let mut atoms = vec![self.atomic()?];
        while *self.peek() == Tok::Amp {
            self.bump();
            atoms.push(self.atomic()?);
        }
        let stmt = if *self.peek() == Tok::Implies {
            self.bump();
            let conclusion = self.atomic()?;
            Statement::Quasi {
                premises: atoms,
                conclusion,
            }
        } else if atoms.len() == 1 {
            Statement::Atomic(atoms.pop().expect("one atom"))
        } else {
            return Err(self.error("'=>' after premises"));
        };
        self.expect(Tok::End, "end of input")?;
        Ok(stmt)
    }
}

pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    Parser {
        toks: lex(text)?,
        at: 0,
    }
    .statement()
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let t = p.join()?;
    p.expect(Tok::End, "end of input")?;
    Ok(t)
}
