#![allow(dead_code)]

use desargues::projective::{from_affine, to_affine, ProjPoint, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pt(x: i64, y: i64) -> ProjPoint {
    ProjPoint::affine(x, y)
}

pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> ProjPoint {
    from_affine(&r(xn, xd), &r(yn, yd))
}

pub fn affine_point(bound: i64) -> impl Strategy<Value = ProjPoint> {
    (-bound..=bound, -bound..=bound).prop_map(|(x, y)| pt(x, y))
}

pub fn any_point(bound: i64) -> impl Strategy<Value = ProjPoint> {
    (-bound..=bound, -bound..=bound, -bound..=bound)
        .prop_filter("nonzero triple", |(x, y, z)| (*x, *y, *z) != (0, 0, 0))
        .prop_map(|(x, y, z)| ProjPoint::new(x, y, z).unwrap())
}

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| r(n, d))
}

pub fn nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    rational(bound).prop_filter("nonzero", |q| *q != r(0, 1))
}

/// `(x, y) ↦ (a·x + b·y + e, c·x + d·y + f)` with `ad − bc ≠ 0`.
#[derive(Clone, Debug)]
pub struct AffineMap {
    pub m: [Rational; 6],
}

impl AffineMap {
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (x, y) = to_affine(p).unwrap();
        let [a, b, c, d, e, f] = &self.m;
        from_affine(&(a * &x + b * &y + e), &(c * &x + d * &y + f))
    }
}

pub fn affine_map(bound: i64) -> impl Strategy<Value = AffineMap> {
    proptest::array::uniform6(rational(bound))
        .prop_filter("invertible", |m| &m[0] * &m[3] != &m[1] * &m[2])
        .prop_map(|m| AffineMap { m })
}

/// Intersection of line `p1p2` with line `q1q2` by Cramer's rule on the
/// affine equations; `None` when parallel.
pub fn cramer_intersection(
    p1: (Rational, Rational),
    p2: (Rational, Rational),
    q1: (Rational, Rational),
    q2: (Rational, Rational),
) -> Option<(Rational, Rational)> {
    // p1 + s·(p2 − p1) = q1 + t·(q2 − q1)
    let (dx1, dy1) = (&p2.0 - &p1.0, &p2.1 - &p1.1);
    let (dx2, dy2) = (&q2.0 - &q1.0, &q2.1 - &q1.1);
    let det = &dx1 * (-&dy2) - (-&dx2) * &dy1;
    if det == r(0, 1) {
        return None;
    }
    let (bx, by) = (&q1.0 - &p1.0, &q1.1 - &p1.1);
    let s = (&bx * (-&dy2) - (-&dx2) * &by) / det;
    Some((&p1.0 + &s * &dx1, &p1.1 + &s * &dy1))
}

pub fn xy(x: i64, y: i64) -> (Rational, Rational) {
    (r(x, 1), r(y, 1))
}
