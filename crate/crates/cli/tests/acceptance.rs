//! Acceptance criteria 1–9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use desargues::dsl::{evaluate, parse};
use desargues::projective::*;
use desargues::quadrilateral::{
    build_problem1_config, newton_gauss, verify_problem1, verify_problem2, CentersVerdict, CompleteQuadrilateral,
};
use desargues::witness::Concurrence;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value as Json;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(args)
        .current_dir(workspace())
        .output()
        .expect("binary runs")
}

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

/// Runs `fuzz --json` and returns (exit code, records, summary).
fn fuzz(theorem: &str, trials: u64, seed: u64) -> (i32, Vec<Json>, Json) {
    let out = bin(&[
        "fuzz",
        "--theorem",
        theorem,
        "--trials",
        &trials.to_string(),
        "--seed",
        &seed.to_string(),
        "--json",
    ]);
    let status = code(&out);
    let mut lines: Vec<Json> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary = lines.pop().expect("summary line")["summary"].clone();
    (status, lines, summary)
}

fn count(summary: &Json, verdict: &str) -> u64 {
    summary["verdict_counts"][verdict].as_u64().unwrap_or(0)
}

fn all_hold(summary: &Json, verdicts: &[&str], trials: u64) -> Result<(), String> {
    for v in verdicts {
        ensure!(count(summary, v) == trials, "{v}: {}/{trials}", count(summary, v));
    }
    ensure!(
        summary["falsifications"] == 0,
        "falsifications: {}",
        summary["falsifications"]
    );
    Ok(())
}

fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn at(x: (i64, i64), y: (i64, i64)) -> ProjPoint {
    from_affine(&r(x.0, x.1), &r(y.0, y.1))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (status, records, summary) = fuzz("desargues", 1000, 42);
    let elapsed = start.elapsed();
    ensure!(status == 0, "exit {status}");
    ensure!(records.len() == 1000, "{} records", records.len());
    all_hold(
        &summary,
        &["side_points_collinear", "axis_through_side_points", "center_is_o"],
        1000,
    )?;
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!(
        "1000/1000 pairs with collinear N, M, P in {:.2}s, {} rejected samples",
        elapsed.as_secs_f64(),
        summary["rejections"]
    ))
}

fn criterion_2() -> Outcome {
    let (status, _, summary) = fuzz("reciprocal", 1000, 42);
    ensure!(status == 0, "exit {status}");
    all_hold(
        &summary,
        &[
            "center_found",
            "center_is_o",
            "control_no_axis",
            "control_not_perspective",
        ],
        1000,
    )?;
    Ok("1000/1000 axis-bearing pairs have a center; 1000/1000 perturbed controls have neither".into())
}

fn criterion_3() -> Outcome {
    let (status, records, summary) = fuzz("menelaus", 1000, 42);
    ensure!(status == 0, "exit {status}");
    all_hold(
        &summary,
        &[
            "product_is_one",
            "feet_collinear",
            "moved_product_not_one",
            "moved_not_collinear",
        ],
        1000,
    )?;
    for rec in &records {
        let v = &rec["verdicts"];
        ensure!(v["product_is_one"] == v["feet_collinear"], "criteria disagree: {rec}");
        ensure!(
            v["moved_product_not_one"] == v["moved_not_collinear"],
            "criteria disagree: {rec}"
        );
    }
    Ok("1000 transversals with product 1, 1000 perturbations with product != 1, no disagreement".into())
}

fn criterion_4() -> Outcome {
    let (status, _, summary) = fuzz("newton-gauss", 1000, 7);
    ensure!(status == 0, "exit {status}");
    all_hold(&summary, &["midpoints_collinear"], 1000)?;
    let q = CompleteQuadrilateral::build(
        ProjPoint::affine(0, 0),
        ProjPoint::affine(4, 0),
        ProjPoint::affine(5, 3),
        ProjPoint::affine(1, 2),
    )
    .map_err(|e| e.to_string())?;
    let ng = newton_gauss(&q).map_err(|e| e.to_string())?;
    ensure!(ng.o1 == at((5, 2), (3, 2)), "O1 = {}", ng.o1);
    ensure!(ng.o2 == at((5, 2), (1, 1)), "O2 = {}", ng.o2);
    ensure!(ng.o3 == at((5, 2), (12, 1)), "O3 = {}", ng.o3);
    ensure!(ng.line == ProjLine::new(2, 0, -5).unwrap(), "line {}", ng.line);
    Ok("1000/1000 fuzzed; worked O1, O2, O3 on [2:0:-5]".into())
}

fn criterion_5() -> Outcome {
    let q = CompleteQuadrilateral::build(
        ProjPoint::affine(0, 0),
        ProjPoint::affine(4, 0),
        ProjPoint::affine(5, 3),
        ProjPoint::affine(1, 2),
    )
    .map_err(|e| e.to_string())?;
    let rep = verify_problem2(&q).map_err(|e| e.to_string())?;
    ensure!(rep.claim_i.iter().all(|v| v.holds()), "claim i: {rep}");
    ensure!(rep.claim_ii.holds() && rep.claim_iii.holds(), "claims ii/iii: {rep}");
    ensure!(rep.axes_are_newton_gauss(), "axes: {rep}");
    let centers = |v: &CentersVerdict| match v {
        CentersVerdict::Checked { centers, .. } => Some(centers.clone()),
        CentersVerdict::Undetermined { .. } => None,
    };
    ensure!(
        centers(&rep.claim_iv)
            == Some([
                at((144, 53), (456, 53)),
                at((-496, 167), (72, 167)),
                at((-8, 5), (12, 5))
            ]),
        "iv centers: {rep}"
    );
    ensure!(
        centers(&rep.claim_v)
            == Some([
                at((-248, 137), (120, 137)),
                at((392, 23), (504, 23)),
                at((9, 10), (39, 10))
            ]),
        "v centers: {rep}"
    );

    let (status, _, summary) = fuzz("problem2", 200, 42);
    ensure!(status == 0, "exit {status}");
    all_hold(
        &summary,
        &[
            "i_por_ghi",
            "i_por_jkl",
            "i_por_mnq",
            "i_por_uvt",
            "ii",
            "iii",
            "axes_newton_gauss",
        ],
        200,
    )?;
    Ok(format!(
        "worked + 200 fuzzed: i, ii, iii hold, every axis is the Newton-Gauss line; iv {}/200, v {}/200 (worked: {}, {})",
        count(&summary, "iv"),
        count(&summary, "v"),
        rep.claim_iv.holds(),
        rep.claim_v.holds()
    ))
}

fn criterion_6() -> Outcome {
    let (status, _, summary) = fuzz("problem1", 500, 42);
    ensure!(status == 0, "exit {status}");
    all_hold(&summary, &["hypothesis", "claim_b"], 500)?;

    let parallelogram = || [(0, 0), (4, 0), (6, 2), (2, 2)].map(|(x, y)| ProjPoint::affine(x, y));
    let [a, b, c, d] = parallelogram();
    let cfg = build_problem1_config(a, b, c, d, &r(-1, 2), &r(3, 4), &r(1, 4)).map_err(|e| e.to_string())?;
    ensure!(
        cfg.d1() == &ProjPoint::affine(1, 1) && cfg.c1() == &ProjPoint::affine(4, 2),
        "config 1 points"
    );
    let rep = verify_problem1(&cfg);
    ensure!(
        rep.literal_a
            == Concurrence::Counterexample {
                first: at((18, 5), (6, 5)),
                second: at((12, 5), (4, 5)),
            },
        "config 1 claim a: {:?}",
        rep.literal_a
    );
    ensure!(
        rep.variant_a_bd.point() == Some(&at((10, 3), (2, 3))),
        "variant {:?}",
        rep.variant_a_bd
    );
    let ideal = ProjPoint::new(3, 1, 0).unwrap();
    ensure!(
        rep.claim_b.point() == Some(&ideal),
        "config 1 claim b {:?}",
        rep.claim_b
    );

    let [a, b, c, d] = parallelogram();
    let cfg = build_problem1_config(a, b, c, d, &r(3, 2), &r(1, 2), &r(1, 2)).map_err(|e| e.to_string())?;
    ensure!(
        cfg.d1() == &at((3, 2), (3, 2)) && cfg.c1() == &ProjPoint::affine(3, 2),
        "config 2 points"
    );
    let rep = verify_problem1(&cfg);
    ensure!(
        rep.claim_b.point() == Some(&ideal),
        "config 2 claim b {:?}",
        rep.claim_b
    );

    Ok(format!(
        "claim b 500/500; claim a as printed {}/500, with BD for AC {}/500; worked witnesses exact",
        count(&summary, "claim_a_literal"),
        count(&summary, "claim_a_bd_variant")
    ))
}

const CASES: u32 = 10_000;

fn point(bound: i64) -> impl Strategy<Value = ProjPoint> {
    (-bound..=bound, -bound..=bound, -bound..=bound)
        .prop_filter("nonzero", |t| *t != (0, 0, 0))
        .prop_map(|(x, y, z)| ProjPoint::new(x, y, z).unwrap())
}

fn affine(bound: i64) -> impl Strategy<Value = ProjPoint> {
    (-bound..=bound, -bound..=bound).prop_map(|(x, y)| ProjPoint::affine(x, y))
}

fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| r(n, d))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |name: &str, result: Result<(), String>| {
        if let Err(e) = result {
            failures.push(format!("{name}: {e}"));
        }
    };
    let runner = || {
        TestRunner::new(Config {
            failure_persistence: None,
            ..Config::with_cases(CASES)
        })
    };

    check(
        "incidence",
        runner()
            .run(&(point(30), point(30)), |(p, q)| {
                if p != q {
                    let l = join(&p, &q).unwrap();
                    prop_assert!(incident(&p, &l) && incident(&q, &l));
                    let x = meet(&l, &ProjLine::from_triple(p.coords().clone()).unwrap());
                    if let Ok(x) = x {
                        prop_assert!(incident(&x, &l));
                    }
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    check(
        "duality",
        runner()
            .run(&(point(20), point(20), point(20)), |(p, q, s)| {
                let dual = |x: &ProjPoint| ProjLine::from_triple(x.coords().clone()).unwrap();
                prop_assert_eq!(collinear(&p, &q, &s), concurrent(&dual(&p), &dual(&q), &dual(&s)));
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    check(
        "scale invariance",
        runner()
            .run(&(point(20), point(20), point(20), -12i64..=12), |(p, q, s, k)| {
                if k != 0 {
                    let scaled: Triple = [0, 1, 2].map(|i| &q.coords()[i] * BigInt::from(k));
                    prop_assert_eq!(det3(p.coords(), &scaled, s.coords()).is_zero(), collinear(&p, &q, &s));
                    prop_assert_eq!(ProjPoint::from_triple(scaled).unwrap(), q);
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    check(
        "canonicalization",
        runner()
            .run(&point(40), |p| {
                let again = ProjPoint::from_triple(p.coords().clone()).unwrap();
                prop_assert_eq!(&again, &p);
                let neg: Triple = [0, 1, 2].map(|i| -&p.coords()[i]);
                prop_assert_eq!(ProjPoint::from_triple(neg).unwrap(), p);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    check(
        "midpoint translation",
        runner()
            .run(
                &(affine(40), affine(40), rational(12), rational(12)),
                |(p, q, dx, dy)| {
                    let m = midpoint(&p, &q).unwrap();
                    let moved = midpoint(&translate(&p, &dx, &dy).unwrap(), &translate(&q, &dx, &dy).unwrap()).unwrap();
                    prop_assert_eq!(moved, translate(&m, &dx, &dy).unwrap());
                    Ok(())
                },
            )
            .map_err(|e| e.to_string()),
    );
    check(
        "signed ratio",
        runner()
            .run(&(affine(30), affine(30), rational(12)), |(a, b, t)| {
                if a != b {
                    let x = lerp(&a, &b, &t).unwrap();
                    if x != a && x != b {
                        let product = signed_ratio(&x, &a, &b).unwrap() * signed_ratio(&x, &b, &a).unwrap();
                        prop_assert!(product.is_one());
                    }
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    Ok(format!("6 kernel properties x {CASES} cases, zero failures"))
}

const CORPUS: &[(&str, i32)] = &[
    ("desargues.geo", 0),
    ("eval_errors.geo", 1),
    ("fig1.geo", 0),
    ("fig2.geo", 0),
    ("fig3.geo", 0),
    ("homothety.geo", 0),
    ("incidence.geo", 0),
    ("menelaus.geo", 0),
    ("newton_gauss.geo", 0),
    ("problem1_claim_a.geo", 1),
    ("problem1_second.geo", 0),
    ("problem2.geo", 0),
    ("reciprocal.geo", 0),
];

/// (file, expected stderr prefix)
const ERRORS: &[(&str, &str)] = &[
    ("arity.geo", "geo/errors/arity.geo:3:22: syntax error"),
    (
        "undefined.geo",
        "geo/errors/undefined.geo:2:16: name error: `l` is not defined",
    ),
    (
        "redefined.geo",
        "geo/errors/redefined.geo:3:7: name error: `A` is already defined at 1:7",
    ),
    ("decimal.geo", "geo/errors/decimal.geo:1:13: syntax error"),
    ("kind.geo", "geo/errors/kind.geo:4:17: type error"),
];

fn criterion_8() -> Outcome {
    ensure!(CORPUS.len() >= 10, "corpus too small");
    for (name, expected) in CORPUS {
        let path = format!("geo/{name}");
        let src = fs::read_to_string(workspace().join(&path)).map_err(|e| format!("{path}: {e}"))?;
        let program = parse(&src).map_err(|e| format!("{path}: {e}"))?;
        let reparsed = parse(&program.to_string()).map_err(|e| format!("{path} reprint: {e}"))?;
        ensure!(
            reparsed.without_spans() == program.without_spans(),
            "{path}: round trip differs"
        );
        ensure!(
            evaluate(&reparsed).bindings == evaluate(&program).bindings,
            "{path}: values differ"
        );
        let out = bin(&["check", &path]);
        ensure!(code(&out) == *expected, "{path}: exit {} (want {expected})", code(&out));
        let json = bin(&["check", &path, "--json"]);
        let report: Json = serde_json::from_slice(&json.stdout).map_err(|e| format!("{path}: {e}"))?;
        ensure!(report["passed"] == (*expected == 0), "{path}: json verdict");
    }
    let claim_a = String::from_utf8(bin(&["check", "geo/problem1_claim_a.geo"]).stdout).unwrap();
    ensure!(
        claim_a.contains("geo/problem1_claim_a.geo:16:1: assert concurrent: FAILS ((18/5, 6/5) vs (12/5, 4/5))"),
        "claim a witness missing:\n{claim_a}"
    );
    for (name, prefix) in ERRORS {
        let path = format!("geo/errors/{name}");
        let out = bin(&["check", &path]);
        ensure!(code(&out) == 2, "{path}: exit {}", code(&out));
        let stderr = String::from_utf8(out.stderr).unwrap();
        ensure!(stderr.starts_with(prefix), "{path}: {stderr}");
    }
    let missing = bin(&["check", "geo/does_not_exist.geo"]);
    ensure!(code(&missing) == 3, "missing file: exit {}", code(&missing));
    let usage = bin(&["fuzz", "--theorem", "pappus", "--trials", "1", "--seed", "0"]);
    ensure!(code(&usage) == 2, "bad theorem: exit {}", code(&usage));
    let demo = bin(&["demo", "problem3"]);
    ensure!(code(&demo) == 2, "unknown demo: exit {}", code(&demo));
    Ok(format!(
        "{} corpus files parse, evaluate and round-trip; {} error files report exact spans; exit codes 0/1/2/3",
        CORPUS.len(),
        ERRORS.len()
    ))
}

fn figure(dir: &Path, file: &str, out: &str) -> Result<String, String> {
    let target = dir.join(out);
    let o = bin(&["figure", file, "-o", target.to_str().unwrap()]);
    ensure!(code(&o) == 0, "figure {file}: exit {}", code(&o));
    fs::read_to_string(target).map_err(|e| e.to_string())
}

fn criterion_9() -> Outcome {
    for theorem in [
        "desargues",
        "reciprocal",
        "menelaus",
        "newton-gauss",
        "problem1",
        "problem2",
    ] {
        let args = [
            "fuzz",
            "--theorem",
            theorem,
            "--trials",
            "300",
            "--seed",
            "2024",
            "--json",
        ];
        let (first, second) = (bin(&args), bin(&args));
        ensure!(code(&first) == 0, "{theorem}: exit {}", code(&first));
        ensure!(
            !first.stdout.is_empty() && first.stdout == second.stdout,
            "{theorem}: output differs"
        );
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for name in ["fig1.geo", "fig2.geo", "fig3.geo", "homothety.geo"] {
        let path = format!("geo/{name}");
        let (a, b) = (figure(dir.path(), &path, "a.svg")?, figure(dir.path(), &path, "b.svg")?);
        ensure!(a == b, "{name}: svg differs");
    }
    let fig1 = figure(dir.path(), "geo/fig1.geo", "fig1.svg")?;
    for label in ["A", "B", "C", "A1", "B1", "C1", "O", "N", "M", "P"] {
        ensure!(
            fig1.contains(&format!("<title>{label}</title></circle>")),
            "fig1 lacks circle {label}"
        );
    }
    let homothety = figure(dir.path(), "geo/homothety.geo", "h.svg")?;
    ensure!(
        homothety.matches("<circle").count() == 6,
        "ideal points drawn as circles"
    );
    ensure!(homothety.contains("N: ideal point"), "legend missing");
    Ok("fuzz JSON for all six theorems and four figures byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("forward Desargues", criterion_1),
        ("reciprocal Desargues", criterion_2),
        ("Menelaus criterion", criterion_3),
        ("Newton-Gauss", criterion_4),
        ("problem 2", criterion_5),
        ("problem 1", criterion_6),
        ("kernel properties", criterion_7),
        ("DSL corpus", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
