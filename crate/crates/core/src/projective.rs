//! Homogeneous points and lines of the rational projective plane.
//!
//! Both [`ProjPoint`] and [`ProjLine`] store an integer triple in canonical
//! form: the entries are coprime and the first nonzero entry is positive.
//! Two values are projectively equal exactly when their canonical triples are
//! identical, so `==` is projective equality. Every predicate reduces to the
//! sign of an integer determinant; nothing here rounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `num / den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer triple `[x : y : z]` up to nonzero scaling.
pub type Triple = [BigInt; 3];

fn canonicalize(mut t: Triple) -> Result<Triple> {
    let g = t[0].gcd(&t[1]).gcd(&t[2]);
    if g.is_zero() {
        return Err(Error::ZeroTriple);
    }
    let negate = t.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    for c in t.iter_mut() {
        *c = &*c / &g;
        if negate {
            *c = -&*c;
        }
    }
    Ok(t)
}

/// Clears denominators of a rational triple (multiplying through by the lcm).
fn clear_denominators(r: &[Rational; 3]) -> Triple {
    let lcm = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    [0, 1, 2].map(|i| r[i].numer() * (&lcm / r[i].denom()))
}

pub fn cross(u: &Triple, v: &Triple) -> Triple {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

pub fn dot(u: &Triple, v: &Triple) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

/// Determinant of the 3×3 matrix whose rows are `a`, `b`, `c`.
pub fn det3(a: &Triple, b: &Triple, c: &Triple) -> BigInt {
    dot(a, &cross(b, c))
}

/// Common surface of points and lines.
pub trait Homogeneous {
    fn coords(&self) -> &Triple;
}

macro_rules! homogeneous_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, Hash, Debug)]
        pub struct $name(Triple);

        impl $name {
            /// Builds the canonical representative of `[x : y : z]`.
            pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
                Self::from_triple([x.into(), y.into(), z.into()])
            }

            pub fn from_triple(t: Triple) -> Result<Self> {
                canonicalize(t).map($name)
            }

            /// Builds from a rational triple; the result is independent of any
            /// common nonzero rational factor.
            pub fn from_rationals(r: &[Rational; 3]) -> Result<Self> {
                Self::from_triple(clear_denominators(r))
            }

            pub fn coords(&self) -> &Triple {
                &self.0
            }

            pub fn into_coords(self) -> Triple {
                self.0
            }
        }

        impl Homogeneous for $name {
            fn coords(&self) -> &Triple {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
            }
        }
    };
}

homogeneous_type!(ProjPoint, "A point `[x : y : z]`; ideal (at infinity) iff `z = 0`.");
homogeneous_type!(ProjLine, "A line `[a : b : c]`, the locus `a·x + b·y + c·z = 0`.");

impl ProjPoint {
    /// The finite point with integer affine coordinates `(x, y)`.
    pub fn affine(x: i64, y: i64) -> Self {
        ProjPoint([BigInt::from(x), BigInt::from(y), BigInt::one()]).recanonical()
    }

    fn recanonical(self) -> Self {
        ProjPoint(canonicalize(self.0).expect("nonzero by construction"))
    }

    pub fn is_ideal(&self) -> bool {
        self.0[2].is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_ideal()
    }

    /// `(x, y)` for finite points, `ideal [a:b:0]` otherwise.
    pub fn describe(&self) -> String {
        match to_affine(self) {
            Ok((x, y)) => format!("({x}, {y})"),
            Err(_) => format!("ideal {self}"),
        }
    }
}

impl ProjLine {
    /// The line at infinity `[0:0:1]`.
    pub fn at_infinity() -> Self {
        ProjLine([BigInt::zero(), BigInt::zero(), BigInt::one()])
    }

    pub fn is_at_infinity(&self) -> bool {
        *self == Self::at_infinity()
    }
}

/// Embeds the affine point `(x, y)` as `[x·d : y·d : d]`.
pub fn from_affine(x: &Rational, y: &Rational) -> ProjPoint {
    ProjPoint::from_rationals(&[x.clone(), y.clone(), Rational::one()]).expect("z = 1 is nonzero")
}

pub fn to_affine(p: &ProjPoint) -> Result<(Rational, Rational)> {
    let [x, y, z] = p.coords();
    if z.is_zero() {
        return Err(Error::IdealPoint(p.clone()));
    }
    Ok((Rational::new(x.clone(), z.clone()), Rational::new(y.clone(), z.clone())))
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    ProjLine::from_triple(cross(p.coords(), q.coords())).map_err(|_| Error::CoincidentPoints(p.clone()))
}

/// The common point of two distinct lines. Parallel lines meet in an ideal
/// point.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    ProjPoint::from_triple(cross(l.coords(), m.coords())).map_err(|_| Error::CoincidentLines(l.clone()))
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(p.coords(), l.coords()).is_zero()
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(p.coords(), q.coords(), r.coords()).is_zero()
}

/// Dual of [`collinear`]: the three lines share a (possibly ideal) point.
pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    det3(l.coords(), m.coords(), n.coords()).is_zero()
}

pub fn eq_projective<H: Homogeneous>(u: &H, v: &H) -> bool {
    u.coords() == v.coords()
}

/// Midpoint of the segment between two finite points.
pub fn midpoint(p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    for x in [p, q] {
        if x.is_ideal() {
            return Err(Error::IdealPoint(x.clone()));
        }
    }
    let [x1, y1, z1] = p.coords();
    let [x2, y2, z2] = q.coords();
    ProjPoint::from_triple([x1 * z2 + x2 * z1, y1 * z2 + y2 * z1, BigInt::from(2) * z1 * z2])
}

/// The point `a + t·(b − a)` of the line through finite points `a`, `b`.
pub fn lerp(a: &ProjPoint, b: &ProjPoint, t: &Rational) -> Result<ProjPoint> {
    let (ax, ay) = to_affine(a)?;
    let (bx, by) = to_affine(b)?;
    let x = &ax + t * (&bx - &ax);
    let y = &ay + t * (&by - &ay);
    Ok(from_affine(&x, &y))
}

/// Translates a finite point by the vector `(dx, dy)`.
pub fn translate(p: &ProjPoint, dx: &Rational, dy: &Rational) -> Result<ProjPoint> {
    let (x, y) = to_affine(p)?;
    Ok(from_affine(&(x + dx), &(y + dy)))
}

/// The directed ratio `t` with `XA = t · XB` for collinear finite points.
///
/// `t = −1` exactly when `x` is the midpoint of `a` and `b`.
pub fn signed_ratio(x: &ProjPoint, a: &ProjPoint, b: &ProjPoint) -> Result<Rational> {
    if !collinear(x, a, b) {
        return Err(Error::NotCollinear(Box::new([x.clone(), a.clone(), b.clone()])));
    }
    let (xx, xy) = to_affine(x)?;
    let (ax, ay) = to_affine(a)?;
    let (bx, by) = to_affine(b)?;
    if x == a || x == b {
        return Err(Error::CoincidentWithEndpoint(x.clone()));
    }
    if a == b {
        return Err(Error::CoincidentPoints(a.clone()));
    }
    let (ux, uy) = (ax - &xx, ay - &xy);
    let (vx, vy) = (bx - xx, by - xy);
    Ok(if vx.is_zero() { uy / vy } else { ux / vx })
}
