use std::collections::HashMap;
use std::fmt;

use indexmap::IndexMap;
use num_rational::BigRational;

use super::ast::{AssertKind, Expr, Ident, Program, Span, Statement};
use crate::projective::{from_affine, incident, join, meet, midpoint, ProjLine, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Point(ProjPoint),
    Line(ProjLine),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => write!(f, "point {}", p.describe()),
            Value::Line(l) => write!(f, "line {l}"),
        }
    }
}

/// Exact evidence attached to an assertion outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Point(ProjPoint),
    Line(ProjLine),
    /// `point` is not on `line`.
    OffLine {
        line: ProjLine,
        point: ProjPoint,
    },
    /// Two pairwise intersections that should have agreed.
    TwoPoints {
        first: ProjPoint,
        second: ProjPoint,
    },
    /// Two values that should have been equal.
    Pair(Value, Value),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(p) => write!(f, "{}", p.describe()),
            Witness::Line(l) => write!(f, "line {l}"),
            Witness::OffLine { line, point } => write!(f, "{} is off line {line}", point.describe()),
            Witness::TwoPoints { first, second } => {
                write!(f, "{} vs {}", first.describe(), second.describe())
            }
            Witness::Pair(a, b) => write!(f, "{a} vs {b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds(Witness),
    Fails(Witness),
    /// An argument could not be evaluated.
    Error(String),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssertionResult {
    pub span: Span,
    pub kind: AssertKind,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub span: Span,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: evaluation error: {}", self.span, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalReport {
    /// Successfully evaluated names, in declaration order.
    pub bindings: IndexMap<String, Value>,
    pub assertions: Vec<AssertionResult>,
    pub errors: Vec<EvalError>,
}

impl EvalReport {
    /// All assertions hold and no declaration failed.
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.assertions.iter().all(|a| a.outcome.holds())
    }

    pub fn point(&self, name: &str) -> Option<&ProjPoint> {
        match self.bindings.get(name) {
            Some(Value::Point(p)) => Some(p),
            _ => None,
        }
    }

    pub fn line(&self, name: &str) -> Option<&ProjLine> {
        match self.bindings.get(name) {
            Some(Value::Line(l)) => Some(l),
            _ => None,
        }
    }
}

struct Env {
    values: IndexMap<String, Value>,
    /// Names whose declaration failed, with the root cause.
    failed: HashMap<String, String>,
}

impl Env {
    fn lookup(&self, ident: &Ident) -> Result<&Value, String> {
        if let Some(v) = self.values.get(&ident.name) {
            return Ok(v);
        }
        match self.failed.get(&ident.name) {
            Some(_) => Err(format!("depends on `{}`, which failed to evaluate", ident.name)),
            None => Err(format!("`{}` is not defined", ident.name)),
        }
    }

    fn point(&self, ident: &Ident) -> Result<ProjPoint, String> {
        match self.lookup(ident)? {
            Value::Point(p) => Ok(p.clone()),
            Value::Line(_) => Err(format!("`{}` is a line", ident.name)),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Value, String> {
        let err = |e: crate::Error| e.to_string();
        Ok(match e {
            Expr::Coords { x, y, .. } => Value::Point(from_affine(&x.value, &y.value)),
            Expr::Ideal { x, y, .. } => {
                let zero = BigRational::from_integer(0.into());
                Value::Point(ProjPoint::from_rationals(&[x.value.clone(), y.value.clone(), zero]).map_err(err)?)
            }
            Expr::Meet { lhs, rhs, .. } => {
                let (l, m) = (self.eval_line(lhs)?, self.eval_line(rhs)?);
                Value::Point(meet(&l, &m).map_err(err)?)
            }
            Expr::Mid { a, b, .. } => Value::Point(midpoint(&self.point(a)?, &self.point(b)?).map_err(err)?),
            Expr::Join { a, b, .. } => Value::Line(join(&self.point(a)?, &self.point(b)?).map_err(err)?),
            Expr::Infinity { .. } => Value::Line(ProjLine::at_infinity()),
            Expr::Name { ident, .. } => self.lookup(ident)?.clone(),
        })
    }

    fn eval_line(&self, e: &Expr) -> Result<ProjLine, String> {
        match self.eval(e)? {
            Value::Line(l) => Ok(l),
            Value::Point(_) => Err("expected a line".into()),
        }
    }

    fn eval_point(&self, e: &Expr) -> Result<ProjPoint, String> {
        match self.eval(e)? {
            Value::Point(p) => Ok(p),
            Value::Line(_) => Err("expected a point".into()),
        }
    }
}

/// First index `j > 0` whose item differs from `items[0]`.
fn first_distinct<T: PartialEq>(items: &[T]) -> Option<usize> {
    items.iter().position(|x| *x != items[0])
}

fn check(env: &Env, kind: AssertKind, args: &[Expr]) -> Result<Outcome, String> {
    Ok(match kind {
        AssertKind::Collinear => {
            let pts = args.iter().map(|a| env.eval_point(a)).collect::<Result<Vec<_>, _>>()?;
            let Some(j) = first_distinct(&pts) else {
                return Ok(Outcome::Holds(Witness::Point(pts[0].clone())));
            };
            let line = join(&pts[0], &pts[j]).expect("distinct points");
            match pts.iter().find(|p| !incident(p, &line)) {
                None => Outcome::Holds(Witness::Line(line)),
                Some(p) => Outcome::Fails(Witness::OffLine { line, point: p.clone() }),
            }
        }
        AssertKind::Concurrent => {
            let lines = args.iter().map(|a| env.eval_line(a)).collect::<Result<Vec<_>, _>>()?;
            let Some(j) = first_distinct(&lines) else {
                return Ok(Outcome::Holds(Witness::Line(lines[0].clone())));
            };
            let common = meet(&lines[0], &lines[j]).expect("distinct lines");
            match lines.iter().find(|l| !incident(&common, l)) {
                None => Outcome::Holds(Witness::Point(common)),
                Some(l) => Outcome::Fails(Witness::TwoPoints {
                    second: meet(&lines[0], l).expect("l misses a point of lines[0]"),
                    first: common,
                }),
            }
        }
        AssertKind::Incident => {
            let p = env.eval_point(&args[0])?;
            let l = env.eval_line(&args[1])?;
            if incident(&p, &l) {
                Outcome::Holds(Witness::Point(p))
            } else {
                Outcome::Fails(Witness::OffLine { line: l, point: p })
            }
        }
        AssertKind::Parallel => {
            let l = env.eval_line(&args[0])?;
            let m = env.eval_line(&args[1])?;
            let x = meet(&l, &m).map_err(|e| e.to_string())?;
            if incident(&x, &ProjLine::at_infinity()) {
                Outcome::Holds(Witness::Point(x))
            } else {
                Outcome::Fails(Witness::Point(x))
            }
        }
        AssertKind::Equal => {
            let a = env.eval(&args[0])?;
            let b = env.eval(&args[1])?;
            if a == b {
                Outcome::Holds(match a {
                    Value::Point(p) => Witness::Point(p),
                    Value::Line(l) => Witness::Line(l),
                })
            } else {
                Outcome::Fails(Witness::Pair(a, b))
            }
        }
    })
}

/// Evaluates every statement in order. Failed assertions and failed
/// declarations are recorded; only statements that depend on a failed
/// declaration are affected by it.
pub fn evaluate(program: &Program) -> EvalReport {
    let mut env = Env {
        values: IndexMap::new(),
        failed: HashMap::new(),
    };
    let mut report = EvalReport::default();
    for stmt in &program.statements {
        match stmt {
            Statement::Point { name, expr, span } | Statement::Line { name, expr, span } => match env.eval(expr) {
                Ok(v) => {
                    env.values.insert(name.name.clone(), v);
                }
                Err(message) => {
                    env.failed.insert(name.name.clone(), message.clone());
                    report.errors.push(EvalError {
                        span: *span,
                        message: format!("`{}`: {message}", name.name),
                    });
                }
            },
            Statement::Assert { kind, args, span } => {
                let outcome = check(&env, *kind, args).unwrap_or_else(Outcome::Error);
                report.assertions.push(AssertionResult {
                    span: *span,
                    kind: *kind,
                    outcome,
                });
            }
        }
    }
    report.bindings = env.values;
    report
}
