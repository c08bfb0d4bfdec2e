//! Parser for the `.qdl` presentation language:
//!
//! ```text
//! presentation := '<' gens '|' rels '>'
//! gens         := ident (',' ident)*
//! rels         := [rel (',' rel)*]
//! rel          := expr '=' expr
//! expr         := term (op term)*
//! op           := '*' | '/' | '*^' int | '/^' int
//! term         := ident | '(' expr ')'
//! ```
//!
//! `*` is ∗ and `/` is ∗̄; both associate to the left at the same precedence.
//! `x *^n y` is `x` acted on by `y` n times. `#` starts a comment.

use super::term::{Presentation, PresentationError, Relation, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unknown generator `{name}`")]
    UnknownGenerator {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: iteration count must be non-negative, got {value}")]
    NegativeExponent { line: usize, col: usize, value: i64 },
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Lt,
    Gt,
    Bar,
    Comma,
    Eq,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let tok = if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' || c == '\'' {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() || c == '-' {
            let mut s = String::new();
            s.push(c);
            bump(&mut chars);
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let value = s.parse::<i64>().map_err(|_| ParseError::Syntax {
                line: l0,
                col: c0,
                message: format!("malformed integer `{s}`"),
            })?;
            Tok::Int(value)
        } else {
            bump(&mut chars);
            match c {
                '<' => Tok::Lt,
                '>' => Tok::Gt,
                '|' => Tok::Bar,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError::Syntax {
                        line: l0,
                        col: c0,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: l0,
            col: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'g> {
    toks: Vec<Spanned>,
    pos: usize,
    generators: &'g [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, at: &Spanned, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: at.line,
            col: at.col,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(())
        } else {
            self.error(&t, format!("expected {what}, found {}", describe(&t.tok)))
        }
    }

    fn ident(&mut self) -> Result<(String, Spanned), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => self.error(
                &t,
                format!("expected a generator name, found {}", describe(other)),
            ),
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.term()?;
        loop {
            let bar = match self.peek().tok {
                Tok::Star => false,
                Tok::Slash => true,
                _ => return Ok(acc),
            };
            self.next();
            let times = if self.peek().tok == Tok::Caret {
                self.next();
                let t = self.next();
                match t.tok {
                    Tok::Int(n) if n < 0 => {
                        return Err(ParseError::NegativeExponent {
                            line: t.line,
                            col: t.col,
                            value: n,
                        })
                    }
                    Tok::Int(n) => Some(n as usize),
                    ref other => {
                        return self.error(
                            &t,
                            format!("expected an iteration count, found {}", describe(other)),
                        )
                    }
                }
            } else {
                None
            };
            let rhs = self.term()?;
            acc = match (times, bar) {
                (None, false) => Term::star(acc, rhs),
                (None, true) => Term::bar(acc, rhs),
                (Some(n), false) => Term::star_pow(acc, &rhs, n),
                (Some(n), true) => Term::bar_pow(acc, &rhs, n),
            };
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek().tok == Tok::LParen {
            self.next();
            let inner = self.expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(inner);
        }
        let (name, at) = self.ident()?;
        match self.generators.iter().position(|g| *g == name) {
            Some(i) => Ok(Term::Gen(i)),
            None => Err(ParseError::UnknownGenerator {
                line: at.line,
                col: at.col,
                name,
            }),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Eof => "end of input".into(),
        Tok::Lt => "`<`".into(),
        Tok::Gt => "`>`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        generators: &[],
    };
    p.expect(Tok::Lt, "`<`")?;
    let mut generators = Vec::new();
    loop {
        let (name, at) = p.ident()?;
        if generators.contains(&name) {
            return p.error(&at, format!("generator `{name}` declared twice"));
        }
        generators.push(name);
        if p.peek().tok == Tok::Comma {
            p.next();
        } else {
            break;
        }
    }
    p.expect(Tok::Bar, "`,` or `|`")?;
    p.generators = &generators;
    let mut relations = Vec::new();
    if p.peek().tok != Tok::Gt {
        loop {
            let lhs = p.expr()?;
            p.expect(Tok::Eq, "`=`")?;
            let rhs = p.expr()?;
            relations.push(Relation::new(lhs, rhs));
            if p.peek().tok == Tok::Comma {
                p.next();
            } else {
                break;
            }
        }
    }
    p.expect(Tok::Gt, "`,` or `>`")?;
    p.expect(Tok::Eof, "end of input")?;
    let generators = generators.clone();
    Ok(Presentation::new(generators, relations)?)
}

/// Parses a single expression over the given generator names.
pub fn parse_term(text: &str, generators: &[String]) -> Result<Term, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        generators,
    };
    let t = p.expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(t)
}
