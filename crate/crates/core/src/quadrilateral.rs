//! The complete quadrilateral of four points `A, B, C, D`, its Newton–Gauss
//! line and the homological-triangle claims built on them.
//!
//! Derived points: `E = AB ∩ CD`, `F = BC ∩ AD`, `O = AC ∩ BD`,
//! `P = BD ∩ EF`, `R = AC ∩ EF`. `P, O, R` form the diagonal triangle.
//!
//! The twelve midpoints are named after the segments
//!
//! | G | H | I | J | K | L | M | N | Q | U | V | T |
//! |---|---|---|---|---|---|---|---|---|---|---|---|
//! | AB | BF | AF | AD | AE | DE | CE | BE | BC | CF | DF | DC |
//!
//! giving the medial triangles `GHI` (of `ABF`), `JKL` (of `ADE`), `MNQ`
//! (of `BCE`) and `UVT` (of `CDF`).
//!
//! Vertex correspondence with the diagonal triangle is not alphabetical.
//! Each medial side is parallel to one quadrilateral line and bisects one
//! diagonal, so the side through `mid AC` must pair with `OR`, the side
//! through `mid BD` with `PO`, and the side through `mid EF` with `RP`. The
//! medial triangles are therefore stored in the orders `(H, G, I)`,
//! `(L, J, K)`, `(N, Q, M)`, `(V, T, U)`, aligned with `(P, O, R)`.

use std::fmt;

use crate::error::{Error, Falsification, Result};
use crate::homology::{check_reciprocal, SidePoints, TrianglePair};
use crate::menelaus::Triangle;
use crate::projective::{collinear, join, lerp, meet, midpoint, ProjLine, ProjPoint, Rational};
use crate::witness::{collinearity, concurrence, Collinearity, Concurrence};

/// How the setup's `E` is read: the printed `AB ∩ CB` would make `E = B`.
pub const E_INTERPRETATION: &str = "E is taken as AB ∩ CD (the printed AB ∩ CB would give E = B)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointSet {
    pub g: ProjPoint,
    pub h: ProjPoint,
    pub i: ProjPoint,
    pub j: ProjPoint,
    pub k: ProjPoint,
    pub l: ProjPoint,
    pub m: ProjPoint,
    pub n: ProjPoint,
    pub q: ProjPoint,
    pub u: ProjPoint,
    pub v: ProjPoint,
    pub t: ProjPoint,
}

impl MidpointSet {
    /// `(name, point)` in naming order.
    pub fn named(&self) -> [(&'static str, &ProjPoint); 12] {
        [
            ("G", &self.g),
            ("H", &self.h),
            ("I", &self.i),
            ("J", &self.j),
            ("K", &self.k),
            ("L", &self.l),
            ("M", &self.m),
            ("N", &self.n),
            ("Q", &self.q),
            ("U", &self.u),
            ("V", &self.v),
            ("T", &self.t),
        ]
    }
}

/// Medial triangles, each with vertices aligned to the diagonal triangle
/// `(P, O, R)`; see the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialTriangles {
    pub ghi: Triangle,
    pub jkl: Triangle,
    pub mnq: Triangle,
    pub uvt: Triangle,
}

impl MedialTriangles {
    /// Names and vertex labels in stored order.
    pub const LABELS: [(&'static str, [&'static str; 3]); 4] = [
        ("GHI", ["H", "G", "I"]),
        ("JKL", ["L", "J", "K"]),
        ("MNQ", ["N", "Q", "M"]),
        ("UVT", ["V", "T", "U"]),
    ];

    pub fn all(&self) -> [&Triangle; 4] {
        [&self.ghi, &self.jkl, &self.mnq, &self.uvt]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonGaussData {
    pub o1: ProjPoint,
    pub o2: ProjPoint,
    pub o3: ProjPoint,
    pub line: ProjLine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteQuadrilateral {
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
    d: ProjPoint,
    e: ProjPoint,
    f: ProjPoint,
    p: ProjPoint,
    r: ProjPoint,
    o: ProjPoint,
    diagonal: Triangle,
    midpoints: MidpointSet,
    medial: MedialTriangles,
}

fn degenerate(msg: impl Into<String>) -> Error {
    Error::DegenerateQuadrilateral(msg.into())
}

fn finite_meet(l: &ProjLine, m: &ProjLine, name: &str) -> Result<ProjPoint> {
    let x = meet(l, m).map_err(|_| degenerate(format!("{name} undefined: lines coincide ({l})")))?;
    if x.is_ideal() {
        return Err(degenerate(format!("{name} is ideal {x} (parallel lines {l}, {m})")));
    }
    Ok(x)
}

impl CompleteQuadrilateral {
    pub fn build(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Result<Self> {
        for (name, x) in [("A", &a), ("B", &b), ("C", &c), ("D", &d)] {
            if x.is_ideal() {
                return Err(degenerate(format!("{name} = {x} is ideal")));
            }
        }
        for (names, x, y, z) in [
            ("ABC", &a, &b, &c),
            ("ABD", &a, &b, &d),
            ("ACD", &a, &c, &d),
            ("BCD", &b, &c, &d),
        ] {
            if collinear(x, y, z) {
                return Err(degenerate(format!(
                    "{names} collinear: {}, {}, {}",
                    x.describe(),
                    y.describe(),
                    z.describe()
                )));
            }
        }
        let line = |x: &ProjPoint, y: &ProjPoint| join(x, y).expect("distinct vertices");
        let (ab, bc, cd, ad, ac, bd) = (
            line(&a, &b),
            line(&b, &c),
            line(&c, &d),
            line(&a, &d),
            line(&a, &c),
            line(&b, &d),
        );
        let e = finite_meet(&ab, &cd, "E = AB ∩ CD")?;
        let f = finite_meet(&bc, &ad, "F = BC ∩ AD")?;
        let o = finite_meet(&ac, &bd, "O = AC ∩ BD")?;
        let ef = join(&e, &f).map_err(|_| degenerate("E and F coincide"))?;
        let p = finite_meet(&bd, &ef, "P = BD ∩ EF")?;
        let r = finite_meet(&ac, &ef, "R = AC ∩ EF")?;
        let derived = [("E", &e), ("F", &f), ("P", &p), ("R", &r), ("O", &o)];
        for (i, (n1, x)) in derived.iter().enumerate() {
            for (n2, y) in &derived[i + 1..] {
                if x == y {
                    return Err(degenerate(format!("{n1} and {n2} coincide at {}", x.describe())));
                }
            }
        }
        let diagonal = Triangle::new(p.clone(), o.clone(), r.clone())
            .map_err(|err| degenerate(format!("diagonal triangle: {err}")))?;

        let mid = |x: &ProjPoint, y: &ProjPoint| midpoint(x, y).expect("finite points");
        let midpoints = MidpointSet {
            g: mid(&a, &b),
            h: mid(&b, &f),
            i: mid(&a, &f),
            j: mid(&a, &d),
            k: mid(&a, &e),
            l: mid(&d, &e),
            m: mid(&c, &e),
            n: mid(&b, &e),
            q: mid(&b, &c),
            u: mid(&c, &f),
            v: mid(&d, &f),
            t: mid(&d, &c),
        };
        let tri = |name: &str, x: &ProjPoint, y: &ProjPoint, z: &ProjPoint| {
            Triangle::new(x.clone(), y.clone(), z.clone())
                .map_err(|err| degenerate(format!("medial triangle {name}: {err}")))
        };
        let mp = &midpoints;
        let medial = MedialTriangles {
            ghi: tri("GHI", &mp.h, &mp.g, &mp.i)?,
            jkl: tri("JKL", &mp.l, &mp.j, &mp.k)?,
            mnq: tri("MNQ", &mp.n, &mp.q, &mp.m)?,
            uvt: tri("UVT", &mp.v, &mp.t, &mp.u)?,
        };
        Ok(CompleteQuadrilateral {
            a,
            b,
            c,
            d,
            e,
            f,
            p,
            r,
            o,
            diagonal,
            midpoints,
            medial,
        })
    }

    pub fn a(&self) -> &ProjPoint {
        &self.a
    }
    pub fn b(&self) -> &ProjPoint {
        &self.b
    }
    pub fn c(&self) -> &ProjPoint {
        &self.c
    }
    pub fn d(&self) -> &ProjPoint {
        &self.d
    }
    pub fn e(&self) -> &ProjPoint {
        &self.e
    }
    pub fn f(&self) -> &ProjPoint {
        &self.f
    }
    pub fn p(&self) -> &ProjPoint {
        &self.p
    }
    pub fn r(&self) -> &ProjPoint {
        &self.r
    }
    pub fn o(&self) -> &ProjPoint {
        &self.o
    }

    /// `(name, point)` for `A … F, P, R, O`.
    pub fn named_points(&self) -> [(&'static str, &ProjPoint); 9] {
        [
            ("A", &self.a),
            ("B", &self.b),
            ("C", &self.c),
            ("D", &self.d),
            ("E", &self.e),
            ("F", &self.f),
            ("P", &self.p),
            ("R", &self.r),
            ("O", &self.o),
        ]
    }
}

/// `(P, O, R)`.
pub fn diagonal_triangle(q: &CompleteQuadrilateral) -> Triangle {
    q.diagonal.clone()
}

pub fn midpoint_set(q: &CompleteQuadrilateral) -> MidpointSet {
    q.midpoints.clone()
}

pub fn medial_triangles(q: &CompleteQuadrilateral) -> MedialTriangles {
    q.medial.clone()
}

/// Midpoints of the diagonals `AC`, `BD`, `EF` and the line through them.
pub fn newton_gauss(q: &CompleteQuadrilateral) -> Result<NewtonGaussData> {
    let o1 = midpoint(&q.a, &q.c)?;
    let o2 = midpoint(&q.b, &q.d)?;
    let o3 = midpoint(&q.e, &q.f)?;
    if !collinear(&o1, &o2, &o3) {
        let mut f = Falsification::new("Newton-Gauss", "diagonal midpoints are not collinear");
        for (name, x) in q.named_points() {
            f = f.point(name, x);
        }
        return Err(f.point("O1", &o1).point("O2", &o2).point("O3", &o3).into());
    }
    let line = if o1 != o3 {
        join(&o1, &o3)?
    } else if o1 != o2 {
        join(&o1, &o2)?
    } else {
        return Err(Error::AxisUndetermined(o1));
    };
    Ok(NewtonGaussData { o1, o2, o3, line })
}

/// Reciprocal-Desargues outcome for one triangle pair of the problem.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PairVerdict {
    Homological {
        center: ProjPoint,
        axis: ProjLine,
        axis_is_newton_gauss: bool,
    },
    /// Side intersections are not collinear.
    NotHomological {
        side_points: SidePoints,
        witness: Collinearity,
    },
    /// Axis present but no center: a falsification of the converse.
    Falsified(Box<Falsification>),
    Degenerate {
        reason: String,
    },
}

impl PairVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PairVerdict::Homological { .. })
    }

    pub fn center(&self) -> Option<&ProjPoint> {
        match self {
            PairVerdict::Homological { center, .. } => Some(center),
            _ => None,
        }
    }

    pub fn axis_is_newton_gauss(&self) -> bool {
        matches!(
            self,
            PairVerdict::Homological {
                axis_is_newton_gauss: true,
                ..
            }
        )
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, PairVerdict::Degenerate { .. })
    }
}

/// Collinearity of three homology centers.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CentersVerdict {
    Checked {
        centers: [ProjPoint; 3],
        verdict: Collinearity,
    },
    /// A contributing pair was not homological.
    Undetermined { reason: String },
}

impl CentersVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CentersVerdict::Checked { verdict, .. } if verdict.holds())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem2Report {
    pub newton_gauss: NewtonGaussData,
    /// `POR` against `GHI`, `JKL`, `MNQ`, `UVT`.
    pub claim_i: [PairVerdict; 4],
    /// `GHI` against `JKL`.
    pub claim_ii: PairVerdict,
    /// `MNQ` against `UVT`.
    pub claim_iii: PairVerdict,
    /// Centers of `(POR, GHI)`, `(POR, JKL)`, `(GHI, JKL)`.
    pub claim_iv: CentersVerdict,
    /// Centers of `(POR, MNQ)`, `(POR, UVT)`, `(MNQ, UVT)`.
    pub claim_v: CentersVerdict,
}

impl Problem2Report {
    fn pairs(&self) -> impl Iterator<Item = &PairVerdict> {
        self.claim_i.iter().chain([&self.claim_ii, &self.claim_iii])
    }

    /// Every one of the six pairs has the Newton–Gauss line as its axis.
    pub fn axes_are_newton_gauss(&self) -> bool {
        self.pairs().all(PairVerdict::axis_is_newton_gauss)
    }

    pub fn any_degenerate(&self) -> bool {
        self.pairs().any(PairVerdict::is_degenerate)
    }
}

fn check_pair(first: &Triangle, second: &Triangle, ng: &ProjLine) -> PairVerdict {
    let pair = match TrianglePair::new(first.clone(), second.clone()) {
        Ok(pair) => pair,
        Err(err) => {
            return PairVerdict::Degenerate {
                reason: err.to_string(),
            }
        }
    };
    match check_reciprocal(&pair) {
        Ok(report) => {
            let axis = report.axis.expect("reciprocal check returns an axis");
            PairVerdict::Homological {
                center: report.center.expect("reciprocal check returns a center"),
                axis_is_newton_gauss: axis == *ng,
                axis,
            }
        }
        Err(Error::AxisMissing(points)) => {
            let [n, m, p] = *points;
            PairVerdict::NotHomological {
                witness: collinearity(&n, &m, &p),
                side_points: SidePoints { n, m, p },
            }
        }
        Err(Error::Falsified(f)) => PairVerdict::Falsified(f),
        Err(err) => PairVerdict::Degenerate {
            reason: err.to_string(),
        },
    }
}

fn centers_verdict(pairs: [(&str, &PairVerdict); 3]) -> CentersVerdict {
    let mut centers = Vec::with_capacity(3);
    for (name, verdict) in pairs {
        match verdict.center() {
            Some(c) => centers.push(c.clone()),
            None => {
                return CentersVerdict::Undetermined {
                    reason: format!("pair {name} has no homology center"),
                }
            }
        }
    }
    let centers: [ProjPoint; 3] = centers.try_into().expect("three centers");
    CentersVerdict::Checked {
        verdict: collinearity(&centers[0], &centers[1], &centers[2]),
        centers,
    }
}

/// Runs claims i–v and the common-axis property on `q`.
pub fn verify_problem2(q: &CompleteQuadrilateral) -> Result<Problem2Report> {
    let ng = newton_gauss(q)?;
    let diag = &q.diagonal;
    let med = &q.medial;
    let claim_i = med.all().map(|t| check_pair(diag, t, &ng.line));
    let claim_ii = check_pair(&med.ghi, &med.jkl, &ng.line);
    let claim_iii = check_pair(&med.mnq, &med.uvt, &ng.line);
    let claim_iv = centers_verdict([
        ("POR/GHI", &claim_i[0]),
        ("POR/JKL", &claim_i[1]),
        ("GHI/JKL", &claim_ii),
    ]);
    let claim_v = centers_verdict([
        ("POR/MNQ", &claim_i[2]),
        ("POR/UVT", &claim_i[3]),
        ("MNQ/UVT", &claim_iii),
    ]);
    Ok(Problem2Report {
        newton_gauss: ng,
        claim_i,
        claim_ii,
        claim_iii,
        claim_iv,
        claim_v,
    })
}

/// Parallelogram `ABCD` with `A₁ ∈ AB`, `B₁ ∈ BC`, `C₁ ∈ CD`, `D₁ ∈ DA`
/// such that `A₁D₁`, `BD`, `B₁C₁` concur at `Pc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem1Config {
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
    d: ProjPoint,
    a1: ProjPoint,
    b1: ProjPoint,
    c1: ProjPoint,
    d1: ProjPoint,
    pc: ProjPoint,
}

fn bad_config(msg: impl Into<String>) -> Error {
    Error::DegenerateConfig(msg.into())
}

impl Problem1Config {
    pub fn a(&self) -> &ProjPoint {
        &self.a
    }
    pub fn b(&self) -> &ProjPoint {
        &self.b
    }
    pub fn c(&self) -> &ProjPoint {
        &self.c
    }
    pub fn d(&self) -> &ProjPoint {
        &self.d
    }
    pub fn a1(&self) -> &ProjPoint {
        &self.a1
    }
    pub fn b1(&self) -> &ProjPoint {
        &self.b1
    }
    pub fn c1(&self) -> &ProjPoint {
        &self.c1
    }
    pub fn d1(&self) -> &ProjPoint {
        &self.d1
    }
    pub fn pc(&self) -> &ProjPoint {
        &self.pc
    }

    pub fn named_points(&self) -> [(&'static str, &ProjPoint); 9] {
        [
            ("A", &self.a),
            ("B", &self.b),
            ("C", &self.c),
            ("D", &self.d),
            ("A1", &self.a1),
            ("B1", &self.b1),
            ("C1", &self.c1),
            ("D1", &self.d1),
            ("Pc", &self.pc),
        ]
    }
}

/// Builds a configuration whose hypothesis holds by construction:
/// `Pc = B + pt·(D − B)`, `A₁ = A + ta·(B − A)`, `B₁ = B + tb·(C − B)`,
/// `D₁ = A₁Pc ∩ AD`, `C₁ = B₁Pc ∩ CD`.
pub fn build_problem1_config(
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
    d: ProjPoint,
    pt: &Rational,
    ta: &Rational,
    tb: &Rational,
) -> Result<Problem1Config> {
    for x in [&a, &b, &c, &d] {
        if x.is_ideal() {
            return Err(bad_config(format!("vertex {x} is ideal")));
        }
    }
    if collinear(&a, &b, &d) {
        return Err(bad_config("A, B, D are collinear"));
    }
    let line = |x: &ProjPoint, y: &ProjPoint| join(x, y).map_err(|_| bad_config("coincident vertices"));
    let (ab, bc, cd, ad) = (line(&a, &b)?, line(&b, &c)?, line(&c, &d)?, line(&a, &d)?);
    if !meet(&ab, &cd)?.is_ideal() || !meet(&ad, &bc)?.is_ideal() {
        return Err(bad_config("ABCD is not a parallelogram"));
    }
    let pc = lerp(&b, &d, pt)?;
    let a1 = lerp(&a, &b, ta)?;
    let b1 = lerp(&b, &c, tb)?;
    for (name, x, ends) in [("Pc", &pc, [&b, &d]), ("A1", &a1, [&a, &b]), ("B1", &b1, [&b, &c])] {
        if ends.contains(&x) {
            return Err(bad_config(format!("{name} = {} is a vertex", x.describe())));
        }
    }
    let d1 = meet(&line(&a1, &pc)?, &ad).map_err(|_| bad_config("A1Pc coincides with AD"))?;
    let c1 = meet(&line(&b1, &pc)?, &cd).map_err(|_| bad_config("B1Pc coincides with CD"))?;
    for (name, x, ends) in [("D1", &d1, [&d, &a]), ("C1", &c1, [&c, &d])] {
        if x.is_ideal() {
            return Err(bad_config(format!("{name} is ideal {x}")));
        }
        if ends.contains(&x) {
            return Err(bad_config(format!("{name} = {} is a vertex", x.describe())));
        }
    }
    Ok(Problem1Config {
        a,
        b,
        c,
        d,
        a1,
        b1,
        c1,
        d1,
        pc,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem1Report {
    /// `A₁D₁`, `BD`, `B₁C₁` (true by construction).
    pub hypothesis: Concurrence,
    /// `AC`, `A₁C₁`, `B₁D₁` as printed.
    pub literal_a: Concurrence,
    /// `BD`, `A₁C₁`, `B₁D₁`.
    pub variant_a_bd: Concurrence,
    /// `A₁B₁`, `C₁D₁`, `AC`.
    pub claim_b: Concurrence,
}

pub fn verify_problem1(cfg: &Problem1Config) -> Problem1Report {
    let line = |x: &ProjPoint, y: &ProjPoint| join(x, y).expect("distinct by construction");
    let ac = line(&cfg.a, &cfg.c);
    let bd = line(&cfg.b, &cfg.d);
    let a1c1 = line(&cfg.a1, &cfg.c1);
    let b1d1 = line(&cfg.b1, &cfg.d1);
    Problem1Report {
        hypothesis: concurrence(&line(&cfg.a1, &cfg.d1), &bd, &line(&cfg.b1, &cfg.c1)),
        literal_a: concurrence(&ac, &a1c1, &b1d1),
        variant_a_bd: concurrence(&bd, &a1c1, &b1d1),
        claim_b: concurrence(&line(&cfg.a1, &cfg.b1), &line(&cfg.c1, &cfg.d1), &ac),
    }
}

impl fmt::Display for Problem1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, c) in [
            ("hypothesis  A1D1, BD, B1C1", &self.hypothesis),
            ("claim a     AC, A1C1, B1D1", &self.literal_a),
            ("variant a   BD, A1C1, B1D1", &self.variant_a_bd),
            ("claim b     A1B1, C1D1, AC", &self.claim_b),
        ] {
            writeln!(f, "{name}: {}", describe_concurrence(c))?;
        }
        Ok(())
    }
}

pub fn describe_concurrence(c: &Concurrence) -> String {
    match c {
        Concurrence::Concurrent { point } => format!("concurrent at {}", point.describe()),
        Concurrence::Counterexample { first, second } => format!(
            "NOT concurrent: pairwise intersections {} and {} differ",
            first.describe(),
            second.describe()
        ),
        Concurrence::Degenerate { line } => format!("degenerate: all three lines are {line}"),
    }
}

pub fn describe_collinearity(c: &Collinearity) -> String {
    match c {
        Collinearity::Collinear { line } => format!("collinear on {line}"),
        Collinearity::Counterexample { line, outlier } => {
            format!("NOT collinear: {} is off {line}", outlier.describe())
        }
        Collinearity::Degenerate { point } => format!("degenerate: all at {}", point.describe()),
    }
}

pub fn describe_pair(v: &PairVerdict) -> String {
    match v {
        PairVerdict::Homological {
            center,
            axis,
            axis_is_newton_gauss,
        } => format!(
            "homological, center {}, axis {axis}{}",
            center.describe(),
            if *axis_is_newton_gauss {
                " = Newton-Gauss line"
            } else {
                " (differs from Newton-Gauss line)"
            }
        ),
        PairVerdict::NotHomological { witness, .. } => {
            format!("NOT homological: side points {}", describe_collinearity(witness))
        }
        PairVerdict::Falsified(f) => format!("FALSIFIED: {}", f.detail),
        PairVerdict::Degenerate { reason } => format!("degenerate: {reason}"),
    }
}

pub fn describe_centers(v: &CentersVerdict) -> String {
    match v {
        CentersVerdict::Checked { centers, verdict } => format!(
            "centers {}, {}, {}: {}",
            centers[0].describe(),
            centers[1].describe(),
            centers[2].describe(),
            describe_collinearity(verdict)
        ),
        CentersVerdict::Undetermined { reason } => format!("undetermined: {reason}"),
    }
}

impl fmt::Display for Problem2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ng = &self.newton_gauss;
        writeln!(
            f,
            "Newton-Gauss line {} through O1 = {}, O2 = {}, O3 = {}",
            ng.line,
            ng.o1.describe(),
            ng.o2.describe(),
            ng.o3.describe()
        )?;
        for ((name, _), v) in MedialTriangles::LABELS.iter().zip(&self.claim_i) {
            writeln!(f, "i   POR / {name}: {}", describe_pair(v))?;
        }
        writeln!(f, "ii  GHI / JKL: {}", describe_pair(&self.claim_ii))?;
        writeln!(f, "iii MNQ / UVT: {}", describe_pair(&self.claim_iii))?;
        writeln!(f, "iv  {}", describe_centers(&self.claim_iv))?;
        writeln!(f, "v   {}", describe_centers(&self.claim_v))?;
        writeln!(f, "common axis = Newton-Gauss line: {}", self.axes_are_newton_gauss())
    }
}
