//! Homological (perspective) triangle pairs.
//!
//! Two triangles `ABC` and `A₁B₁C₁`, matched by vertex position, are
//! homological when `AA₁`, `BB₁`, `CC₁` share a point (the center). The
//! corresponding sides meet in `N = AB ∩ A₁B₁`, `M = BC ∩ B₁C₁`,
//! `P = CA ∩ C₁A₁`; when these are collinear their line is the axis.
//! [`check_forward`] and [`check_reciprocal`] run Desargues' theorem and its
//! converse on a concrete pair and report a [`Falsification`] if either
//! fails.

use crate::error::{Error, Falsification, Result};
use crate::menelaus::Triangle;
use crate::projective::{collinear, concurrent, join, meet, ProjLine, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePair {
    first: Triangle,
    second: Triangle,
}

impl TrianglePair {
    pub fn new(first: Triangle, second: Triangle) -> Result<Self> {
        for i in 0..3 {
            if first.vertex(i) == second.vertex(i) {
                return Err(Error::DegeneratePair(format!(
                    "corresponding vertices #{i} coincide at {}",
                    first.vertex(i)
                )));
            }
            if first.side(i) == second.side(i) {
                return Err(Error::DegeneratePair(format!(
                    "corresponding sides #{i} coincide on {}",
                    first.side(i)
                )));
            }
        }
        Ok(TrianglePair { first, second })
    }

    pub fn first(&self) -> &Triangle {
        &self.first
    }

    pub fn second(&self) -> &Triangle {
        &self.second
    }

    pub fn swapped(&self) -> TrianglePair {
        TrianglePair {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Rotates both vertex triples together, keeping the correspondence.
    pub fn rotated(&self) -> TrianglePair {
        TrianglePair {
            first: self.first.rotated(),
            second: self.second.rotated(),
        }
    }

    /// `AA₁`, `BB₁`, `CC₁`.
    pub fn vertex_joins(&self) -> [ProjLine; 3] {
        [0, 1, 2]
            .map(|i| join(self.first.vertex(i), self.second.vertex(i)).expect("corresponding vertices are distinct"))
    }
}

/// `N = AB ∩ A₁B₁`, `M = BC ∩ B₁C₁`, `P = CA ∩ C₁A₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePoints {
    pub n: ProjPoint,
    pub m: ProjPoint,
    pub p: ProjPoint,
}

impl SidePoints {
    pub fn as_array(&self) -> [&ProjPoint; 3] {
        [&self.n, &self.m, &self.p]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub center: Option<ProjPoint>,
    pub side_points: SidePoints,
    pub axis: Option<ProjLine>,
    pub is_homological: bool,
}

pub fn side_intersections(pair: &TrianglePair) -> Result<SidePoints> {
    let [n, m, p] = [0, 1, 2].map(|i| meet(pair.first.side(i), pair.second.side(i)));
    let wrap = |r: Result<ProjPoint>| r.map_err(|_| Error::DegeneratePair("corresponding sides coincide".into()));
    Ok(SidePoints {
        n: wrap(n)?,
        m: wrap(m)?,
        p: wrap(p)?,
    })
}

/// The common point of `AA₁`, `BB₁`, `CC₁`, if there is one.
pub fn perspective_center(pair: &TrianglePair) -> Result<Option<ProjPoint>> {
    let joins = pair.vertex_joins();
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        if joins[i] == joins[j] {
            return Err(Error::DegeneratePair(format!(
                "vertex joins #{i} and #{j} coincide on {}",
                joins[i]
            )));
        }
    }
    if !concurrent(&joins[0], &joins[1], &joins[2]) {
        return Ok(None);
    }
    Ok(Some(meet(&joins[0], &joins[1])?))
}

fn axis_through(sp: &SidePoints) -> Result<Option<ProjLine>> {
    let SidePoints { n, m, p } = sp;
    if n == m && m == p {
        return Err(Error::AxisUndetermined(n.clone()));
    }
    if !collinear(n, m, p) {
        return Ok(None);
    }
    let (u, v) = if n != m { (n, m) } else { (m, p) };
    Ok(Some(join(u, v)?))
}

/// The line through `N`, `M`, `P`, if they are collinear.
pub fn homology_axis(pair: &TrianglePair) -> Result<Option<ProjLine>> {
    axis_through(&side_intersections(pair)?)
}

/// Center, side points and axis without asserting either theorem.
pub fn analyze(pair: &TrianglePair) -> Result<HomologyReport> {
    let side_points = side_intersections(pair)?;
    let axis = axis_through(&side_points)?;
    let center = perspective_center(pair)?;
    Ok(HomologyReport {
        is_homological: center.is_some(),
        center,
        side_points,
        axis,
    })
}

fn dump(f: Falsification, pair: &TrianglePair, sp: &SidePoints) -> Falsification {
    let names = ["A", "B", "C"];
    let mut f = f;
    for (i, name) in names.iter().enumerate() {
        f = f.point(*name, pair.first.vertex(i));
    }
    for (i, name) in names.iter().enumerate() {
        f = f.point(format!("{name}1"), pair.second.vertex(i));
    }
    f.point("N", &sp.n).point("M", &sp.m).point("P", &sp.p)
}

/// Desargues: a perspective pair must have collinear side points.
pub fn check_forward(pair: &TrianglePair) -> Result<HomologyReport> {
    let center = perspective_center(pair)?.ok_or(Error::NotPerspective)?;
    let side_points = side_intersections(pair)?;
    let axis = axis_through(&side_points)?;
    if axis.is_none() {
        let f = Falsification::new(
            "Desargues",
            "vertex joins are concurrent but side intersections are not collinear",
        )
        .point("O", &center);
        return Err(dump(f, pair, &side_points).into());
    }
    Ok(HomologyReport {
        center: Some(center),
        side_points,
        axis,
        is_homological: true,
    })
}

/// Converse of Desargues: collinear side points force a center.
pub fn check_reciprocal(pair: &TrianglePair) -> Result<HomologyReport> {
    let side_points = side_intersections(pair)?;
    let axis = axis_through(&side_points)?.ok_or_else(|| {
        Error::AxisMissing(Box::new([
            side_points.n.clone(),
            side_points.m.clone(),
            side_points.p.clone(),
        ]))
    })?;
    let Some(center) = perspective_center(pair)? else {
        let f = Falsification::new(
            "reciprocal Desargues",
            "side intersections are collinear but vertex joins are not concurrent",
        )
        .line("axis", &axis);
        return Err(dump(f, pair, &side_points).into());
    };
    Ok(HomologyReport {
        center: Some(center),
        side_points,
        axis: Some(axis),
        is_homological: true,
    })
}
