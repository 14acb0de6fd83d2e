//! Built-in runs of the two problems on their worked configurations.

use std::fmt::Write;

use desargues::projective::{rat, ProjPoint, Rational};
use desargues::quadrilateral::{
    build_problem1_config, describe_concurrence, verify_problem1, verify_problem2, CompleteQuadrilateral,
    E_INTERPRETATION,
};
use desargues::witness::Concurrence;

pub const NAMES: [&str; 2] = ["problem1", "problem2"];

/// Text report and whether every claim the problem guarantees held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Demo {
    pub report: String,
    pub ok: bool,
}

pub fn run(name: &str) -> Option<Demo> {
    match name {
        "problem1" => Some(problem1()),
        "problem2" => Some(problem2()),
        _ => None,
    }
}

fn points<'a>(out: &mut String, named: impl IntoIterator<Item = (&'a str, &'a ProjPoint)>) {
    for (n, p) in named {
        writeln!(out, "  {n:<3} = {}", p.describe()).unwrap();
    }
}

pub fn problem1() -> Demo {
    let mut out = String::from("Problem 1: parallelogram A=(0,0) B=(4,0) C=(6,2) D=(2,2)\n");
    let configs: [(Rational, Rational, Rational); 2] =
        [(rat(-1, 2), rat(3, 4), rat(1, 4)), (rat(3, 2), rat(1, 2), rat(1, 2))];
    let mut ok = true;
    let mut literal_failures = Vec::new();
    for (k, (pt, ta, tb)) in configs.iter().enumerate() {
        let cfg = build_problem1_config(
            ProjPoint::affine(0, 0),
            ProjPoint::affine(4, 0),
            ProjPoint::affine(6, 2),
            ProjPoint::affine(2, 2),
            pt,
            ta,
            tb,
        )
        .expect("worked configuration is valid");
        let rep = verify_problem1(&cfg);
        writeln!(
            out,
            "\nconfiguration {}: Pc = B + ({pt})(D - B), A1 = A + ({ta})(B - A), B1 = B + ({tb})(C - B)",
            k + 1
        )
        .unwrap();
        points(&mut out, cfg.named_points());
        write!(out, "{rep}").unwrap();
        ok &= rep.hypothesis.holds() && rep.claim_b.holds();
        if let Concurrence::Counterexample { first, second } = &rep.literal_a {
            literal_failures.push((k + 1, first.clone(), second.clone(), rep.variant_a_bd.clone()));
        }
    }

    out += "\nclaim a discrepancy\n";
    if literal_failures.is_empty() {
        out += "  claim a held in both configurations\n";
    }
    for (k, first, second, variant) in literal_failures {
        writeln!(
            out,
            "  configuration {k}: AC meets A1C1 at {} but B1D1 at {}, so AC, A1C1, B1D1 are not concurrent",
            first.describe(),
            second.describe()
        )
        .unwrap();
        writeln!(out, "  with BD in place of AC: {}", describe_concurrence(&variant)).unwrap();
    }
    out += "  claim b (A1B1, C1D1, AC concurrent, possibly at infinity) is what the hypothesis forces\n";
    Demo { report: out, ok }
}

pub fn problem2() -> Demo {
    let q = CompleteQuadrilateral::build(
        ProjPoint::affine(0, 0),
        ProjPoint::affine(4, 0),
        ProjPoint::affine(5, 3),
        ProjPoint::affine(1, 2),
    )
    .expect("worked quadrilateral is valid");
    let mut out = String::from("Problem 2: quadrilateral A=(0,0) B=(4,0) C=(5,3) D=(1,2)\n");
    writeln!(out, "note: {E_INTERPRETATION}").unwrap();
    points(&mut out, q.named_points());
    out += "midpoints\n";
    points(&mut out, desargues::quadrilateral::midpoint_set(&q).named());
    let rep = verify_problem2(&q).expect("worked quadrilateral is not degenerate");
    write!(out, "{rep}").unwrap();
    let ok = rep.claim_i.iter().all(|v| v.holds())
        && rep.claim_ii.holds()
        && rep.claim_iii.holds()
        && rep.axes_are_newton_gauss();
    for (name, v) in [("iv", &rep.claim_iv), ("v", &rep.claim_v)] {
        if !v.holds() {
            writeln!(out, "finding: claim {name} does not hold on this configuration").unwrap();
        }
    }
    Demo { report: out, ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem1_reports_the_discrepancy() {
        let d = problem1();
        assert!(d.ok);
        assert!(
            d.report
                .contains("AC meets A1C1 at (18/5, 6/5) but B1D1 at (12/5, 4/5)"),
            "{}",
            d.report
        );
        assert!(d.report.contains("concurrent at (10/3, 2/3)"), "{}", d.report);
    }

    #[test]
    fn problem2_axes_are_newton_gauss() {
        let d = problem2();
        assert!(d.ok);
        assert_eq!(d.report.matches("= Newton-Gauss line").count(), 7, "{}", d.report);
        assert!(!d.report.contains("finding"));
    }

    #[test]
    fn unknown_names() {
        assert!(run("problem3").is_none());
    }
}
