//! Seeded random trials for each theorem.
//!
//! Trial `i` draws from its own splitmix64 stream seeded with
//! `mix(seed, i)`, so records are reproducible one at a time and the run
//! is independent of how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use desargues::homology::{check_forward, check_reciprocal, homology_axis, perspective_center, TrianglePair};
use desargues::menelaus::{is_menelaus_transversal, menelaus_product, transversal_feet, TransversalFeet, Triangle};
use desargues::projective::{collinear, incident, join, lerp, to_affine, translate, ProjPoint, Rational, Triple};
use desargues::quadrilateral::{
    build_problem1_config, describe_pair, newton_gauss, verify_problem1, verify_problem2, CentersVerdict,
    CompleteQuadrilateral, MedialTriangles,
};
use desargues::witness::Concurrence;
use desargues::{Error, Falsification};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::rng::{mix, SplitMix64};

/// Samples drawn per trial before giving up on finding a usable configuration.
pub const MAX_ATTEMPTS: u64 = 10_000;
pub const DEFAULT_BOUND: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Desargues,
    Reciprocal,
    Menelaus,
    NewtonGauss,
    Problem1,
    Problem2,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Desargues,
        Theorem::Reciprocal,
        Theorem::Menelaus,
        Theorem::NewtonGauss,
        Theorem::Problem1,
        Theorem::Problem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Desargues => "desargues",
            Theorem::Reciprocal => "reciprocal",
            Theorem::Menelaus => "menelaus",
            Theorem::NewtonGauss => "newton-gauss",
            Theorem::Problem1 => "problem1",
            Theorem::Problem2 => "problem2",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = Theorem::ALL.iter().map(|t| t.name()).collect();
            format!("unknown theorem `{s}` (expected one of: {})", names.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzSpec {
    pub theorem: Theorem,
    pub trials: u64,
    pub seed: u64,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuzzError {
    InvalidSpec(String),
    /// No usable configuration within `MAX_ATTEMPTS` samples.
    Exhausted {
        index: u64,
        seed: u64,
    },
}

impl fmt::Display for FuzzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzError::InvalidSpec(msg) => f.write_str(msg),
            FuzzError::Exhausted { index, seed } => write!(
                f,
                "trial {index} (seed {seed}): no non-degenerate configuration in {MAX_ATTEMPTS} samples; \
                 try a larger --bound"
            ),
        }
    }
}

impl std::error::Error for FuzzError {}

fn triple(t: &Triple) -> [String; 3] {
    [0, 1, 2].map(|i| t[i].to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub index: u64,
    /// Decimal, so that consumers with double-precision numbers keep it exact.
    pub seed: String,
    pub points: BTreeMap<String, [String; 3]>,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, [String; 3]>,
    pub rejections: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub falsification: Option<String>,
}

impl TrialRecord {
    pub fn is_falsification(&self) -> bool {
        self.falsification.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub theorem: String,
    pub trials: u64,
    pub seed: String,
    pub bound: i64,
    pub falsifications: u64,
    pub rejections: u64,
    /// How many trials each verdict held in.
    pub verdict_counts: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzRun {
    pub records: Vec<TrialRecord>,
    pub summary: FuzzSummary,
}

impl FuzzRun {
    pub fn falsified(&self) -> bool {
        self.summary.falsifications > 0
    }

    /// One JSON object per trial in index order, then `{"summary": ...}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out += &serde_json::to_string(r).expect("records serialize");
            out.push('\n');
        }
        out += &serde_json::json!({ "summary": &self.summary }).to_string();
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "{}: {} trials, seed {}, bound {}\n",
            s.theorem, s.trials, s.seed, s.bound
        );
        out += &format!("rejected samples: {}\n", s.rejections);
        for (name, n) in &s.verdict_counts {
            out += &format!("  {name}: {n}/{}\n", s.trials);
        }
        out += &format!("falsifications: {}\n", s.falsifications);
        for r in self.records.iter().filter(|r| r.is_falsification()) {
            out += &format!("\ntrial {} (seed {}):\n", r.index, r.seed);
            out += r.falsification.as_deref().unwrap_or_default();
            out.push('\n');
            for (name, c) in &r.points {
                out += &format!("  {name} = [{}:{}:{}]\n", c[0], c[1], c[2]);
            }
        }
        out
    }
}

pub fn run(spec: &FuzzSpec) -> Result<FuzzRun, FuzzError> {
    if spec.trials == 0 {
        return Err(FuzzError::InvalidSpec("--trials must be at least 1".into()));
    }
    if !(2..=1_000_000).contains(&spec.bound) {
        return Err(FuzzError::InvalidSpec("--bound must be between 2 and 1000000".into()));
    }
    let records = (0..spec.trials)
        .into_par_iter()
        .map(|i| run_trial(spec, i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut verdict_counts = BTreeMap::new();
    for r in &records {
        for (name, v) in &r.verdicts {
            *verdict_counts.entry(name.clone()).or_insert(0) += u64::from(*v);
        }
    }
    let summary = FuzzSummary {
        theorem: spec.theorem.name().to_string(),
        trials: spec.trials,
        seed: spec.seed.to_string(),
        bound: spec.bound,
        falsifications: records.iter().filter(|r| r.is_falsification()).count() as u64,
        rejections: records.iter().map(|r| r.rejections).sum(),
        verdict_counts,
    };
    Ok(FuzzRun { records, summary })
}

/// Runs trial `index` alone; `run` produces exactly these records.
pub fn run_trial(spec: &FuzzSpec, index: u64) -> Result<TrialRecord, FuzzError> {
    let seed = mix(spec.seed, index);
    let mut rng = SplitMix64::new(seed);
    for rejections in 0..MAX_ATTEMPTS {
        if let Some(trial) = attempt(spec.theorem, &mut rng, spec.bound) {
            return Ok(trial.into_record(index, seed, rejections));
        }
    }
    Err(FuzzError::Exhausted { index, seed })
}

#[derive(Default)]
struct Trial {
    points: Vec<(String, ProjPoint)>,
    verdicts: Vec<(&'static str, bool)>,
    witnesses: Vec<(String, Triple)>,
    failures: Vec<String>,
}

impl Trial {
    fn points<'a>(&mut self, named: impl IntoIterator<Item = (&'a str, &'a ProjPoint)>) {
        for (n, p) in named {
            self.points.push((n.to_string(), p.clone()));
        }
    }

    fn witness(&mut self, name: impl Into<String>, t: &Triple) {
        self.witnesses.push((name.into(), t.clone()));
    }

    /// A verdict the theorem guarantees.
    fn require(&mut self, name: &'static str, holds: bool, detail: impl FnOnce() -> String) {
        self.verdicts.push((name, holds));
        if !holds {
            self.failures.push(format!("{name}: {}", detail()));
        }
    }

    /// A verdict that is only tallied.
    fn observe(&mut self, name: &'static str, holds: bool) {
        self.verdicts.push((name, holds));
    }

    fn falsified(&mut self, name: &'static str, f: &Falsification) {
        self.verdicts.push((name, false));
        self.failures.push(f.to_string().trim_end().to_string());
        for (n, p) in &f.points {
            self.witnesses.push((n.clone(), p.coords().clone()));
        }
        for (n, l) in &f.lines {
            self.witnesses.push((n.clone(), l.coords().clone()));
        }
    }

    fn into_record(self, index: u64, seed: u64, rejections: u64) -> TrialRecord {
        TrialRecord {
            index,
            seed: seed.to_string(),
            points: self.points.into_iter().map(|(n, p)| (n, triple(p.coords()))).collect(),
            verdicts: self.verdicts.into_iter().map(|(n, v)| (n.to_string(), v)).collect(),
            witnesses: self.witnesses.into_iter().map(|(n, t)| (n, triple(&t))).collect(),
            rejections,
            falsification: (!self.failures.is_empty()).then(|| self.failures.join("\n")),
        }
    }
}

/// One sample; `None` rejects it as degenerate.
fn attempt(theorem: Theorem, rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    match theorem {
        Theorem::Desargues => desargues(rng, bound),
        Theorem::Reciprocal => reciprocal(rng, bound),
        Theorem::Menelaus => menelaus(rng, bound),
        Theorem::NewtonGauss => newton_gauss_trial(rng, bound),
        Theorem::Problem1 => problem1(rng, bound),
        Theorem::Problem2 => problem2(rng, bound),
    }
}

fn usable_ratio(t: &Rational) -> bool {
    !t.is_zero() && !t.is_one()
}

/// `A₁ B₁ C₁` placed on the rays `OA`, `OB`, `OC`.
fn perspective_pair(rng: &mut SplitMix64, bound: i64) -> Option<(ProjPoint, TrianglePair)> {
    let o = rng.point(bound);
    let [a, b, c] = [(); 3].map(|_| rng.point(bound));
    let ts = [(); 3].map(|_| rng.rational(bound));
    if !ts.iter().all(usable_ratio) || [&a, &b, &c].contains(&&o) {
        return None;
    }
    let a1 = lerp(&o, &a, &ts[0]).ok()?;
    let b1 = lerp(&o, &b, &ts[1]).ok()?;
    let c1 = lerp(&o, &c, &ts[2]).ok()?;
    let pair = TrianglePair::new(Triangle::new(a, b, c).ok()?, Triangle::new(a1, b1, c1).ok()?).ok()?;
    perspective_center(&pair).ok()?;
    Some((o, pair))
}

fn pair_points<'a>(o: &'a ProjPoint, pair: &'a TrianglePair) -> Vec<(&'static str, &'a ProjPoint)> {
    let (f, s) = (pair.first(), pair.second());
    vec![
        ("O", o),
        ("A", f.vertex(0)),
        ("B", f.vertex(1)),
        ("C", f.vertex(2)),
        ("A1", s.vertex(0)),
        ("B1", s.vertex(1)),
        ("C1", s.vertex(2)),
    ]
}

fn desargues(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let (o, pair) = perspective_pair(rng, bound)?;
    let mut trial = Trial::default();
    trial.points(pair_points(&o, &pair));
    match check_forward(&pair) {
        Ok(rep) => {
            let center = rep.center.expect("forward check returns the center");
            let axis = rep.axis.expect("forward check returns the axis");
            let sp = &rep.side_points;
            trial.require("center_is_o", center == o, || format!("center {center} differs from O"));
            trial.require("side_points_collinear", collinear(&sp.n, &sp.m, &sp.p), || {
                format!("N {} M {} P {}", sp.n, sp.m, sp.p)
            });
            let on_axis = sp.as_array().iter().all(|x| incident(x, &axis));
            trial.require("axis_through_side_points", on_axis, || format!("axis {axis}"));
            trial.witness("center", center.coords());
            trial.witness("axis", axis.coords());
            for (n, p) in [("N", &sp.n), ("M", &sp.m), ("P", &sp.p)] {
                trial.witness(n, p.coords());
            }
        }
        Err(Error::Falsified(f)) => trial.falsified("side_points_collinear", &f),
        Err(Error::NotPerspective) => {
            trial.require("center_is_o", false, || "constructed pair is not perspective".into())
        }
        Err(_) => return None,
    }
    Some(trial)
}

fn reciprocal(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let (o, pair) = perspective_pair(rng, bound)?;
    let dx = rng.int(bound);
    let dy = rng.int(bound);
    let mut trial = Trial::default();
    let rep = match check_reciprocal(&pair) {
        Ok(rep) => rep,
        Err(Error::Falsified(f)) => {
            trial.points(pair_points(&o, &pair));
            trial.falsified("center_found", &f);
            return Some(trial);
        }
        Err(_) => return None,
    };

    // control: move A1 off the line OA
    let (f, s) = (pair.first(), pair.second());
    let a1x = translate(
        s.vertex(0),
        &Rational::from_integer(dx.into()),
        &Rational::from_integer(dy.into()),
    )
    .ok()?;
    if collinear(&o, f.vertex(0), &a1x) {
        return None;
    }
    let moved = Triangle::new(a1x.clone(), s.vertex(1).clone(), s.vertex(2).clone()).ok()?;
    let control = TrianglePair::new(f.clone(), moved).ok()?;
    let control_center = perspective_center(&control).ok()?;
    let control_axis = match homology_axis(&control) {
        Ok(axis) => axis,
        Err(_) => return None,
    };

    trial.points(pair_points(&o, &pair));
    trial.points([("A1x", &a1x)]);
    let center = rep.center.expect("reciprocal check returns the center");
    let axis = rep.axis.expect("reciprocal check returns the axis");
    trial.observe("center_found", true);
    trial.require("center_is_o", center == o, || format!("center {center} differs from O"));
    trial.require("control_not_perspective", control_center.is_none(), || {
        "joins concurrent after moving A1 off OA".into()
    });
    trial.require("control_no_axis", control_axis.is_none(), || {
        format!("control side points collinear on {}", control_axis.as_ref().unwrap())
    });
    trial.witness("center", center.coords());
    trial.witness("axis", axis.coords());
    Some(trial)
}

fn menelaus(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let [a, b, c] = [(); 3].map(|_| rng.point(bound));
    let u = rng.point(bound);
    let v = rng.point(bound);
    let s = rng.rational(bound);
    let tri = Triangle::new(a, b, c).ok()?;
    let l = join(&u, &v).ok()?;
    let feet = transversal_feet(&tri, &l).ok()?;
    if feet.as_array().iter().any(|p| p.is_ideal()) {
        return None;
    }
    let product = menelaus_product(&tri, &feet).ok()?;
    // slide N along AB
    let n2 = lerp(tri.vertex(0), tri.vertex(1), &s).ok()?;
    if n2 == feet.n {
        return None;
    }
    let moved = TransversalFeet::new(&tri, n2.clone(), feet.m.clone(), feet.p.clone()).ok()?;
    let moved_product = menelaus_product(&tri, &moved).ok()?;

    let mut trial = Trial::default();
    let [ta, tb, tc] = tri.vertices();
    trial.points([
        ("A", ta),
        ("B", tb),
        ("C", tc),
        ("N", &feet.n),
        ("M", &feet.m),
        ("P", &feet.p),
        ("N2", &n2),
    ]);
    trial.require("product_is_one", product.is_one(), || format!("product {product}"));
    trial.require("feet_collinear", is_menelaus_transversal(&tri, &feet), || {
        "feet of a line".into()
    });
    trial.require("moved_product_not_one", !moved_product.is_one(), || "product 1".into());
    trial.require("moved_not_collinear", !is_menelaus_transversal(&tri, &moved), || {
        "N2, M, P collinear".into()
    });
    trial.witness("transversal", l.coords());
    Some(trial)
}

fn quadrilateral(rng: &mut SplitMix64, bound: i64) -> Option<CompleteQuadrilateral> {
    let [a, b, c, d] = [(); 4].map(|_| rng.point(bound));
    CompleteQuadrilateral::build(a, b, c, d).ok()
}

fn newton_gauss_trial(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let q = quadrilateral(rng, bound)?;
    let mut trial = Trial::default();
    trial.points(q.named_points());
    match newton_gauss(&q) {
        Ok(ng) => {
            trial.require("midpoints_collinear", collinear(&ng.o1, &ng.o2, &ng.o3), || {
                format!("O1 {} O2 {} O3 {}", ng.o1, ng.o2, ng.o3)
            });
            for (n, p) in [("O1", &ng.o1), ("O2", &ng.o2), ("O3", &ng.o3)] {
                trial.witness(n, p.coords());
            }
            trial.witness("line", ng.line.coords());
        }
        Err(Error::Falsified(f)) => trial.falsified("midpoints_collinear", &f),
        Err(_) => return None,
    }
    Some(trial)
}

fn problem1(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let [a, b, d] = [(); 3].map(|_| rng.point(bound));
    let pt = rng.rational(bound);
    let ta = rng.unit_interior(bound);
    let tb = rng.unit_interior(bound);
    if !usable_ratio(&pt) {
        return None;
    }
    let (ax, ay) = to_affine(&a).ok()?;
    let (dx, dy) = to_affine(&d).ok()?;
    let c = translate(&b, &(dx - ax), &(dy - ay)).ok()?;
    let cfg = build_problem1_config(a, b, c, d, &pt, &ta, &tb).ok()?;
    let rep = verify_problem1(&cfg);

    let mut trial = Trial::default();
    trial.points(cfg.named_points());
    trial.require("hypothesis", rep.hypothesis.holds(), || format!("{:?}", rep.hypothesis));
    trial.require("claim_b", rep.claim_b.holds(), || format!("{:?}", rep.claim_b));
    trial.observe("claim_a_literal", rep.literal_a.holds());
    trial.observe("claim_a_bd_variant", rep.variant_a_bd.holds());
    if let Some(x) = rep.claim_b.point() {
        trial.witness("claim_b_point", x.coords());
    }
    if let Concurrence::Counterexample { first, second } = &rep.literal_a {
        trial.witness("claim_a_first", first.coords());
        trial.witness("claim_a_second", second.coords());
    }
    Some(trial)
}

fn problem2(rng: &mut SplitMix64, bound: i64) -> Option<Trial> {
    let q = quadrilateral(rng, bound)?;
    let rep = verify_problem2(&q).ok()?;
    if rep.any_degenerate() {
        return None;
    }
    let mut trial = Trial::default();
    trial.points(q.named_points());
    let names = ["i_por_ghi", "i_por_jkl", "i_por_mnq", "i_por_uvt"];
    for ((name, v), (label, _)) in names.into_iter().zip(&rep.claim_i).zip(MedialTriangles::LABELS) {
        trial.require(name, v.holds(), || format!("POR / {label}: {}", describe_pair(v)));
    }
    trial.require("ii", rep.claim_ii.holds(), || describe_pair(&rep.claim_ii));
    trial.require("iii", rep.claim_iii.holds(), || describe_pair(&rep.claim_iii));
    trial.require("axes_newton_gauss", rep.axes_are_newton_gauss(), || {
        format!("Newton-Gauss line {}", rep.newton_gauss.line)
    });
    // iv and v are tallied, not required
    trial.observe("iv", rep.claim_iv.holds());
    trial.observe("v", rep.claim_v.holds());
    trial.witness("newton_gauss", rep.newton_gauss.line.coords());
    for (prefix, v) in [("iv", &rep.claim_iv), ("v", &rep.claim_v)] {
        if let CentersVerdict::Checked { centers, .. } = v {
            for (k, c) in centers.iter().enumerate() {
                trial.witness(format!("{prefix}_center{}", k + 1), c.coords());
            }
        }
    }
    Some(trial)
}
