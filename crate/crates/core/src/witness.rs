//! Verdicts that carry exact witnesses either way.

use crate::projective::{incident, join, meet, ProjLine, ProjPoint};

/// Outcome of a three-line concurrency claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Concurrence {
    /// All three lines pass through `point` (which may be ideal).
    Concurrent { point: ProjPoint },
    /// Two distinct pairwise intersections.
    Counterexample { first: ProjPoint, second: ProjPoint },
    /// All three lines coincide; no single common point.
    Degenerate { line: ProjLine },
}

impl Concurrence {
    pub fn holds(&self) -> bool {
        matches!(self, Concurrence::Concurrent { .. })
    }

    pub fn point(&self) -> Option<&ProjPoint> {
        match self {
            Concurrence::Concurrent { point } => Some(point),
            _ => None,
        }
    }
}

/// Outcome of a three-point collinearity claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collinearity {
    Collinear {
        line: ProjLine,
    },
    /// `line` joins two of the points; `outlier` is off it.
    Counterexample {
        line: ProjLine,
        outlier: ProjPoint,
    },
    /// All three points coincide.
    Degenerate {
        point: ProjPoint,
    },
}

impl Collinearity {
    pub fn holds(&self) -> bool {
        matches!(self, Collinearity::Collinear { .. })
    }
}

pub fn concurrence(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> Concurrence {
    let (a, b, c) = if l != m {
        (l, m, n)
    } else if l != n {
        (l, n, m)
    } else {
        return Concurrence::Degenerate { line: l.clone() };
    };
    let first = meet(a, b).expect("distinct lines");
    if incident(&first, c) {
        return Concurrence::Concurrent { point: first };
    }
    let second = meet(a, c).expect("c does not contain a ∩ b, so c ≠ a");
    Concurrence::Counterexample { first, second }
}

pub fn collinearity(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Collinearity {
    let (a, b, c) = if p != q {
        (p, q, r)
    } else if p != r {
        (p, r, q)
    } else {
        return Collinearity::Degenerate { point: p.clone() };
    };
    let line = join(a, b).expect("distinct points");
    if incident(c, &line) {
        Collinearity::Collinear { line }
    } else {
        Collinearity::Counterexample {
            line,
            outlier: c.clone(),
        }
    }
}
