use std::fmt;

use thiserror::Error;

use crate::projective::{ProjLine, ProjPoint};

/// Errors raised by the geometry kernel and the checkers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("homogeneous triple is identically zero")]
    ZeroTriple,
    #[error("point {0} is ideal (at infinity)")]
    IdealPoint(ProjPoint),
    #[error("points coincide projectively: {0}")]
    CoincidentPoints(ProjPoint),
    #[error("lines coincide projectively: {0}")]
    CoincidentLines(ProjLine),
    #[error("points {}, {}, {} are not collinear", .0[0], .0[1], .0[2])]
    NotCollinear(Box<[ProjPoint; 3]>),
    #[error("point {0} coincides with a segment endpoint")]
    CoincidentWithEndpoint(ProjPoint),
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),
    #[error("degenerate transversal: {0}")]
    DegenerateTransversal(String),
    #[error("transversal foot {0} is ideal; use the determinant criterion")]
    IdealFoot(ProjPoint),
    #[error("degenerate triangle pair: {0}")]
    DegeneratePair(String),
    #[error("triangles are not perspective from a point")]
    NotPerspective,
    #[error("corresponding side intersections {}, {}, {} are not collinear", .0[0], .0[1], .0[2])]
    AxisMissing(Box<[ProjPoint; 3]>),
    #[error("axis undetermined: all side intersections coincide at {0}")]
    AxisUndetermined(ProjPoint),
    #[error("degenerate quadrilateral: {0}")]
    DegenerateQuadrilateral(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("{0}")]
    Falsified(Box<Falsification>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A theorem postcondition that failed on an exact instance.
///
/// With exact arithmetic this can only mean an implementation bug (or a
/// false claim), so the full configuration is kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsification {
    pub theorem: &'static str,
    pub detail: String,
    pub points: Vec<(String, ProjPoint)>,
    pub lines: Vec<(String, ProjLine)>,
}

impl Falsification {
    pub fn new(theorem: &'static str, detail: impl Into<String>) -> Self {
        Falsification {
            theorem,
            detail: detail.into(),
            points: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn point(mut self, name: impl Into<String>, p: &ProjPoint) -> Self {
        self.points.push((name.into(), p.clone()));
        self
    }

    pub fn line(mut self, name: impl Into<String>, l: &ProjLine) -> Self {
        self.lines.push((name.into(), l.clone()));
        self
    }
}

impl fmt::Display for Falsification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem falsified: {}: {}", self.theorem, self.detail)?;
        for (name, p) in &self.points {
            writeln!(f, "  point {name} = {p}")?;
        }
        for (name, l) in &self.lines {
            writeln!(f, "  line {name} = {l}")?;
        }
        Ok(())
    }
}

impl From<Falsification> for Error {
    fn from(f: Falsification) -> Self {
        Error::Falsified(Box::new(f))
    }
}
