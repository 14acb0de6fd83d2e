//! Triangles, transversal feet and the Menelaus collinearity criterion.
//!
//! For a triangle `ABC` and feet `N ∈ AB`, `M ∈ BC`, `P ∈ CA`, the product
//!
//! ```text
//! ratio(N; A, B) · ratio(M; B, C) · ratio(P; C, A)
//! ```
//!
//! with `ratio(X; U, V) = t` where `XU = t·XV`, is exactly `1` iff the three
//! feet are collinear.

use crate::error::{Error, Result};
use crate::projective::{collinear, incident, join, meet, signed_ratio, ProjLine, ProjPoint, Rational};

/// An ordered, non-degenerate triangle. Vertex order is significant: side
/// `0` is `AB`, side `1` is `BC`, side `2` is `CA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    vertices: [ProjPoint; 3],
    sides: [ProjLine; 3],
}

impl Triangle {
    pub fn new(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Result<Self> {
        if a == b || b == c || c == a {
            return Err(Error::DegenerateTriangle(format!(
                "repeated vertex among {a}, {b}, {c}"
            )));
        }
        if collinear(&a, &b, &c) {
            return Err(Error::DegenerateTriangle(format!(
                "vertices {a}, {b}, {c} are collinear"
            )));
        }
        let sides = [join(&a, &b)?, join(&b, &c)?, join(&c, &a)?];
        Ok(Triangle {
            vertices: [a, b, c],
            sides,
        })
    }

    pub fn vertices(&self) -> &[ProjPoint; 3] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &ProjPoint {
        &self.vertices[i % 3]
    }

    /// The line through vertices `i` and `i + 1`.
    pub fn side(&self, i: usize) -> &ProjLine {
        &self.sides[i % 3]
    }

    pub fn sides(&self) -> &[ProjLine; 3] {
        &self.sides
    }

    /// The same triangle with vertices rotated: `(B, C, A)`.
    pub fn rotated(&self) -> Triangle {
        let [a, b, c] = self.vertices.clone();
        let [ab, bc, ca] = self.sides.clone();
        Triangle {
            vertices: [b, c, a],
            sides: [bc, ca, ab],
        }
    }
}

/// Feet `N ∈ AB`, `M ∈ BC`, `P ∈ CA` of a (candidate) transversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalFeet {
    pub n: ProjPoint,
    pub m: ProjPoint,
    pub p: ProjPoint,
}

impl TransversalFeet {
    /// Checks each foot lies on its side line and is not a vertex.
    pub fn new(tri: &Triangle, n: ProjPoint, m: ProjPoint, p: ProjPoint) -> Result<Self> {
        for (i, foot) in [&n, &m, &p].into_iter().enumerate() {
            if !incident(foot, tri.side(i)) {
                return Err(Error::DegenerateTransversal(format!(
                    "foot {foot} is not on side {}",
                    tri.side(i)
                )));
            }
            if tri.vertices().contains(foot) {
                return Err(Error::DegenerateTransversal(format!("foot {foot} is a vertex")));
            }
        }
        Ok(TransversalFeet { n, m, p })
    }

    pub fn as_array(&self) -> [&ProjPoint; 3] {
        [&self.n, &self.m, &self.p]
    }
}

/// Cuts the three side lines of `tri` with `l`.
pub fn transversal_feet(tri: &Triangle, l: &ProjLine) -> Result<TransversalFeet> {
    if tri.sides().contains(l) {
        return Err(Error::DegenerateTransversal(format!("{l} is a side line")));
    }
    if let Some(v) = tri.vertices().iter().find(|v| incident(v, l)) {
        return Err(Error::DegenerateTransversal(format!("{l} passes through vertex {v}")));
    }
    let [n, m, p] = [0, 1, 2].map(|i| meet(l, tri.side(i)));
    Ok(TransversalFeet { n: n?, m: m?, p: p? })
}

/// The signed-ratio product; exactly `1` iff the feet are collinear.
///
/// Ideal feet are refused with [`Error::IdealFoot`]; use
/// [`is_menelaus_transversal`] for those.
pub fn menelaus_product(tri: &Triangle, feet: &TransversalFeet) -> Result<Rational> {
    if let Some(f) = feet.as_array().into_iter().find(|f| f.is_ideal()) {
        return Err(Error::IdealFoot(f.clone()));
    }
    let mut product = signed_ratio(&feet.n, tri.vertex(0), tri.vertex(1))?;
    product *= signed_ratio(&feet.m, tri.vertex(1), tri.vertex(2))?;
    product *= signed_ratio(&feet.p, tri.vertex(2), tri.vertex(0))?;
    Ok(product)
}

/// Determinant form of the criterion; total, including ideal feet.
pub fn is_menelaus_transversal(_tri: &Triangle, feet: &TransversalFeet) -> bool {
    collinear(&feet.n, &feet.m, &feet.p)
}
