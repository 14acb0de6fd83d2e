use std::fmt;

use crate::projective::Rational;

/// Byte range in the source plus the 1-based line and byte column of its
/// start.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl Span {
    /// Smallest span covering `self` and `other`.
    pub fn to(self, other: Span) -> Span {
        Span {
            start: self.start,
            end: other.end,
            line: self.line,
            column: self.column,
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Line,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Point => "point",
            Kind::Line => "line",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLit {
    pub value: Rational,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// `(x, y)`
    Coords {
        x: RatLit,
        y: RatLit,
        span: Span,
    },
    /// `ideal(dx, dy)`: the point at infinity in direction `(dx, dy)`.
    Ideal {
        x: RatLit,
        y: RatLit,
        span: Span,
    },
    Meet {
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        span: Span,
    },
    Mid {
        a: Ident,
        b: Ident,
        span: Span,
    },
    Join {
        a: Ident,
        b: Ident,
        span: Span,
    },
    Infinity {
        span: Span,
    },
    /// Reference to a declared name, with the kind it was declared as.
    Name {
        ident: Ident,
        kind: Kind,
    },
}

impl Expr {
    pub fn kind(&self) -> Kind {
        match self {
            Expr::Coords { .. } | Expr::Ideal { .. } | Expr::Meet { .. } | Expr::Mid { .. } => Kind::Point,
            Expr::Join { .. } | Expr::Infinity { .. } => Kind::Line,
            Expr::Name { kind, .. } => *kind,
        }
    }

    pub fn span(&self) -> Span {
        match self {
            Expr::Coords { span, .. }
            | Expr::Ideal { span, .. }
            | Expr::Meet { span, .. }
            | Expr::Mid { span, .. }
            | Expr::Join { span, .. }
            | Expr::Infinity { span } => *span,
            Expr::Name { ident, .. } => ident.span,
        }
    }

    fn strip(&self) -> Expr {
        let d = Span::default();
        let id = |i: &Ident| Ident {
            name: i.name.clone(),
            span: d,
        };
        let lit = |r: &RatLit| RatLit {
            value: r.value.clone(),
            span: d,
        };
        match self {
            Expr::Coords { x, y, .. } => Expr::Coords {
                x: lit(x),
                y: lit(y),
                span: d,
            },
            Expr::Ideal { x, y, .. } => Expr::Ideal {
                x: lit(x),
                y: lit(y),
                span: d,
            },
            Expr::Meet { lhs, rhs, .. } => Expr::Meet {
                lhs: Box::new(lhs.strip()),
                rhs: Box::new(rhs.strip()),
                span: d,
            },
            Expr::Mid { a, b, .. } => Expr::Mid {
                a: id(a),
                b: id(b),
                span: d,
            },
            Expr::Join { a, b, .. } => Expr::Join {
                a: id(a),
                b: id(b),
                span: d,
            },
            Expr::Infinity { .. } => Expr::Infinity { span: d },
            Expr::Name { ident, kind } => Expr::Name {
                ident: id(ident),
                kind: *kind,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssertKind {
    Collinear,
    Concurrent,
    Incident,
    Parallel,
    Equal,
}

impl AssertKind {
    pub const ALL: [AssertKind; 5] = [
        AssertKind::Collinear,
        AssertKind::Concurrent,
        AssertKind::Incident,
        AssertKind::Parallel,
        AssertKind::Equal,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            AssertKind::Collinear => "collinear",
            AssertKind::Concurrent => "concurrent",
            AssertKind::Incident => "incident",
            AssertKind::Parallel => "parallel",
            AssertKind::Equal => "equal",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

impl fmt::Display for AssertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Point {
        name: Ident,
        expr: Expr,
        span: Span,
    },
    Line {
        name: Ident,
        expr: Expr,
        span: Span,
    },
    Assert {
        kind: AssertKind,
        args: Vec<Expr>,
        span: Span,
    },
}

impl Statement {
    pub fn span(&self) -> Span {
        match self {
            Statement::Point { span, .. } | Statement::Line { span, .. } | Statement::Assert { span, .. } => *span,
        }
    }

    fn strip(&self) -> Statement {
        let d = Span::default();
        let id = |i: &Ident| Ident {
            name: i.name.clone(),
            span: d,
        };
        match self {
            Statement::Point { name, expr, .. } => Statement::Point {
                name: id(name),
                expr: expr.strip(),
                span: d,
            },
            Statement::Line { name, expr, .. } => Statement::Line {
                name: id(name),
                expr: expr.strip(),
                span: d,
            },
            Statement::Assert { kind, args, .. } => Statement::Assert {
                kind: *kind,
                args: args.iter().map(Expr::strip).collect(),
                span: d,
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub statements: Vec<Statement>,
}

impl Program {
    /// The same program with every span zeroed, for structural comparison.
    pub fn without_spans(&self) -> Program {
        Program {
            statements: self.statements.iter().map(Statement::strip).collect(),
        }
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    // BigRational prints integers without a denominator and uses `n/d` otherwise
    write!(f, "{r}")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Coords { x, y, .. } | Expr::Ideal { x, y, .. } => {
                if matches!(self, Expr::Ideal { .. }) {
                    f.write_str("ideal")?;
                }
                f.write_str("(")?;
                write_rat(f, &x.value)?;
                f.write_str(", ")?;
                write_rat(f, &y.value)?;
                f.write_str(")")
            }
            Expr::Meet { lhs, rhs, .. } => write!(f, "meet({lhs}, {rhs})"),
            Expr::Mid { a, b, .. } => write!(f, "mid({}, {})", a.name, b.name),
            Expr::Join { a, b, .. } => write!(f, "join({}, {})", a.name, b.name),
            Expr::Infinity { .. } => f.write_str("infinity"),
            Expr::Name { ident, .. } => f.write_str(&ident.name),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Point { name, expr, .. } => write!(f, "point {} = {expr}", name.name),
            Statement::Line { name, expr, .. } => write!(f, "line {} = {expr}", name.name),
            Statement::Assert { kind, args, .. } => {
                write!(f, "assert {kind}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
