//! Recursive-descent parser for `.geo` construction files.
//!
//! ```text
//! program   := { statement NEWLINE }
//! statement := "point" IDENT "=" pexpr | "line" IDENT "=" lexpr
//!            | "assert" akind "(" args ")"
//! pexpr     := "(" rat "," rat ")" | "meet" "(" lexpr "," lexpr ")"
//!            | "mid" "(" IDENT "," IDENT ")" | "ideal" "(" rat "," rat ")"
//! lexpr     := IDENT | "join" "(" IDENT "," IDENT ")" | "infinity"
//! akind     := "collinear" | "concurrent" | "incident" | "parallel" | "equal"
//! rat       := ["-"] INT [ "/" INT ]
//! ```
//!
//! Names are resolved while parsing, so a successful parse guarantees every
//! identifier is declared before use and never redeclared, and that every
//! expression has the kind its position requires.

use std::collections::HashMap;

use num_traits::Zero;

use super::ast::{AssertKind, Expr, Ident, Kind, Program, RatLit, Span, Statement};
use super::error::{NameProblem, ParseError};
use super::lexer::{tokenize, Tok, Token};
use crate::projective::Rational;

const KEYWORDS: [&str; 8] = ["point", "line", "assert", "meet", "mid", "ideal", "join", "infinity"];

pub fn parse(source: &str) -> Result<Program, ParseError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        scope: HashMap::new(),
    };
    parser.program()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    scope: HashMap<String, (Kind, Span)>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError::Syntax {
            span: t.span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            self.error(&[what])
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let mut statements = Vec::new();
        loop {
            match self.peek().tok {
                Tok::Eof => break,
                Tok::Newline => {
                    self.bump();
                    continue;
                }
                _ => {}
            }
            statements.push(self.statement()?);
            match self.peek().tok {
                Tok::Newline | Tok::Eof => {}
                _ => return self.error(&["end of line"]),
            }
        }
        Ok(Program { statements })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let start = self.peek().span;
        if self.at_keyword("point") || self.at_keyword("line") {
            let is_point = self.at_keyword("point");
            self.bump();
            let name = self.binder()?;
            self.expect(Tok::Eq, "`=`")?;
            let expr = if is_point { self.pexpr()? } else { self.lexpr()? };
            let span = start.to(expr.span());
            let kind = if is_point { Kind::Point } else { Kind::Line };
            self.declare(&name, kind);
            return Ok(if is_point {
                Statement::Point { name, expr, span }
            } else {
                Statement::Line { name, expr, span }
            });
        }
        if self.at_keyword("assert") {
            self.bump();
            let kind = match &self.peek().tok {
                Tok::Ident(s) => AssertKind::from_keyword(s),
                _ => None,
            };
            let Some(kind) = kind else {
                return self.error(&AssertKind::ALL.map(|k| k.keyword()));
            };
            self.bump();
            self.expect(Tok::LParen, "`(`")?;
            let args = self.assert_args(kind)?;
            let end = self.expect(Tok::RParen, "`)`")?;
            return Ok(Statement::Assert {
                kind,
                args,
                span: start.to(end),
            });
        }
        self.error(&["`point`", "`line`", "`assert`"])
    }

    fn assert_args(&mut self, kind: AssertKind) -> Result<Vec<Expr>, ParseError> {
        use AssertKind::*;
        let (min, max) = match kind {
            Collinear | Concurrent => (3, usize::MAX),
            Incident | Parallel | Equal => (2, 2),
        };
        let mut args: Vec<Expr> = Vec::new();
        loop {
            let expected = match (kind, args.len()) {
                (Collinear, _) | (Incident, 0) => Some(Kind::Point),
                (Concurrent, _) | (Parallel, _) | (Incident, _) => Some(Kind::Line),
                (Equal, 0) => None,
                (Equal, _) => Some(args[0].kind()),
            };
            let arg = self.any_expr()?;
            if let Some(expected) = expected {
                if arg.kind() != expected {
                    return Err(ParseError::Kind {
                        span: arg.span(),
                        expected,
                        found: arg.kind(),
                    });
                }
            }
            args.push(arg);
            if args.len() == max {
                break;
            }
            if self.peek().tok == Tok::Comma {
                self.bump();
                continue;
            }
            if args.len() < min {
                return self.error(&["`,`"]);
            }
            break;
        }
        Ok(args)
    }

    /// A fresh name on the left of `=`.
    fn binder(&mut self) -> Result<Ident, ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                let span = self.bump().span;
                if let Some((_, previous)) = self.scope.get(&name) {
                    return Err(ParseError::Name {
                        span,
                        name,
                        problem: NameProblem::Redefined { previous: *previous },
                    });
                }
                Ok(Ident { name, span })
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn declare(&mut self, ident: &Ident, kind: Kind) {
        self.scope.insert(ident.name.clone(), (kind, ident.span));
    }

    /// A reference to an existing name of the given kind.
    fn reference(&mut self, want: Option<Kind>) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                let span = self.bump().span;
                let Some((kind, _)) = self.scope.get(&name).copied() else {
                    return Err(ParseError::Name {
                        span,
                        name,
                        problem: NameProblem::Undefined,
                    });
                };
                if let Some(want) = want {
                    if want != kind {
                        return Err(ParseError::Kind {
                            span,
                            expected: want,
                            found: kind,
                        });
                    }
                }
                Ok(Expr::Name {
                    ident: Ident { name, span },
                    kind,
                })
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn point_ref(&mut self) -> Result<Ident, ParseError> {
        match self.reference(Some(Kind::Point))? {
            Expr::Name { ident, .. } => Ok(ident),
            _ => unreachable!("reference returns a name"),
        }
    }

    fn any_expr(&mut self) -> Result<Expr, ParseError> {
        match &self.peek().tok {
            Tok::LParen => self.pexpr(),
            Tok::Ident(s) if matches!(s.as_str(), "meet" | "mid" | "ideal") => self.pexpr(),
            Tok::Ident(s) if matches!(s.as_str(), "join" | "infinity") => self.lexpr(),
            Tok::Ident(_) => self.reference(None),
            _ => self.error(&["expression"]),
        }
    }

    fn pexpr(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().span;
        if self.peek().tok == Tok::LParen {
            self.bump();
            let (x, y, end) = self.rat_pair()?;
            return Ok(Expr::Coords {
                x,
                y,
                span: start.to(end),
            });
        }
        if self.at_keyword("ideal") {
            self.bump();
            self.expect(Tok::LParen, "`(`")?;
            let (x, y, end) = self.rat_pair()?;
            return Ok(Expr::Ideal {
                x,
                y,
                span: start.to(end),
            });
        }
        if self.at_keyword("meet") {
            self.bump();
            self.expect(Tok::LParen, "`(`")?;
            let lhs = self.lexpr()?;
            self.expect(Tok::Comma, "`,`")?;
            let rhs = self.lexpr()?;
            let end = self.expect(Tok::RParen, "`)`")?;
            return Ok(Expr::Meet {
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                span: start.to(end),
            });
        }
        if self.at_keyword("mid") {
            self.bump();
            let (a, b, end) = self.ident_pair()?;
            return Ok(Expr::Mid {
                a,
                b,
                span: start.to(end),
            });
        }
        self.error(&["`(`", "`meet`", "`mid`", "`ideal`"])
    }

    fn lexpr(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().span;
        if self.at_keyword("infinity") {
            self.bump();
            return Ok(Expr::Infinity { span: start });
        }
        if self.at_keyword("join") {
            self.bump();
            let (a, b, end) = self.ident_pair()?;
            return Ok(Expr::Join {
                a,
                b,
                span: start.to(end),
            });
        }
        match &self.peek().tok {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => self.reference(Some(Kind::Line)),
            _ => self.error(&["identifier", "`join`", "`infinity`"]),
        }
    }

    /// `"(" IDENT "," IDENT ")"` over point names.
    fn ident_pair(&mut self) -> Result<(Ident, Ident, Span), ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let a = self.point_ref()?;
        self.expect(Tok::Comma, "`,`")?;
        let b = self.point_ref()?;
        let end = self.expect(Tok::RParen, "`)`")?;
        Ok((a, b, end))
    }

    /// `rat "," rat ")"`, the opening parenthesis already consumed.
    fn rat_pair(&mut self) -> Result<(RatLit, RatLit, Span), ParseError> {
        let x = self.rat()?;
        self.expect(Tok::Comma, "`,`")?;
        let y = self.rat()?;
        let end = self.expect(Tok::RParen, "`)`")?;
        Ok((x, y, end))
    }

    fn rat(&mut self) -> Result<RatLit, ParseError> {
        let start = self.peek().span;
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(num) = self.peek().tok.clone() else {
            return self.error(&["integer"]);
        };
        let mut end = self.bump().span;
        let mut den = num_bigint::BigInt::from(1);
        if self.peek().tok == Tok::Slash {
            self.bump();
            let Tok::Int(d) = self.peek().tok.clone() else {
                return self.error(&["integer"]);
            };
            if d.is_zero() {
                return self.error(&["nonzero denominator"]);
            }
            den = d;
            end = self.bump().span;
        }
        let num = if negative { -num } else { num };
        Ok(RatLit {
            value: Rational::new(num, den),
            span: start.to(end),
        })
    }
}
