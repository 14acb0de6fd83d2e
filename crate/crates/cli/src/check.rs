//! `check`: parse, evaluate, report.

use desargues::dsl::{evaluate, parse, EvalReport, Outcome, ParseError, Program, Span, Value, Witness};
use desargues::projective::Triple;
use serde_json::{json, Value as Json};

pub fn check_source(src: &str) -> Result<(Program, EvalReport), ParseError> {
    let program = parse(src)?;
    let report = evaluate(&program);
    Ok((program, report))
}

fn triple(t: &Triple) -> Json {
    json!([t[0].to_string(), t[1].to_string(), t[2].to_string()])
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Point(p) => json!({ "kind": "point", "coords": triple(p.coords()) }),
        Value::Line(l) => json!({ "kind": "line", "coords": triple(l.coords()) }),
    }
}

fn witness_json(w: &Witness) -> Json {
    match w {
        Witness::Point(p) => json!({ "point": triple(p.coords()) }),
        Witness::Line(l) => json!({ "line": triple(l.coords()) }),
        Witness::OffLine { line, point } => {
            json!({ "line": triple(line.coords()), "point": triple(point.coords()) })
        }
        Witness::TwoPoints { first, second } => {
            json!({ "first": triple(first.coords()), "second": triple(second.coords()) })
        }
        Witness::Pair(a, b) => json!({ "left": value_json(a), "right": value_json(b) }),
    }
}

fn position(span: &Span) -> (Json, Json) {
    (json!(span.line), json!(span.column))
}

pub fn report_json(path: &str, report: &EvalReport) -> Json {
    let assertions: Vec<Json> = report
        .assertions
        .iter()
        .map(|a| {
            let (line, column) = position(&a.span);
            let (verdict, detail) = match &a.outcome {
                Outcome::Holds(w) => ("holds", witness_json(w)),
                Outcome::Fails(w) => ("fails", witness_json(w)),
                Outcome::Error(msg) => ("error", json!({ "message": msg })),
            };
            json!({
                "line": line,
                "column": column,
                "kind": a.kind.keyword(),
                "verdict": verdict,
                "witness": detail,
            })
        })
        .collect();
    let errors: Vec<Json> = report
        .errors
        .iter()
        .map(|e| json!({ "line": e.span.line, "column": e.span.column, "message": e.message }))
        .collect();
    let bindings: serde_json::Map<String, Json> = report
        .bindings
        .iter()
        .map(|(k, v)| (k.clone(), value_json(v)))
        .collect();
    json!({
        "file": path,
        "passed": report.passed(),
        "assertions": assertions,
        "errors": errors,
        "bindings": bindings,
    })
}

pub fn report_text(path: &str, report: &EvalReport) -> String {
    let mut out = String::new();
    for e in &report.errors {
        out += &format!("{path}:{e}\n");
    }
    let (mut holds, mut fails, mut errors) = (0, 0, 0);
    for a in &report.assertions {
        let verdict = match &a.outcome {
            Outcome::Holds(w) => {
                holds += 1;
                format!("holds ({w})")
            }
            Outcome::Fails(w) => {
                fails += 1;
                format!("FAILS ({w})")
            }
            Outcome::Error(msg) => {
                errors += 1;
                format!("error: {msg}")
            }
        };
        out += &format!("{path}:{}: assert {}: {verdict}\n", a.span, a.kind.keyword());
    }
    out += &format!(
        "{} assertions: {holds} hold, {fails} fail, {errors} could not be evaluated; {} declaration errors\n",
        report.assertions.len(),
        report.errors.len()
    );
    out += if report.passed() { "PASS\n" } else { "FAIL\n" };
    out
}

pub fn parse_error_text(path: &str, err: &ParseError) -> String {
    format!("{path}:{err}\n")
}

pub fn parse_error_json(path: &str, err: &ParseError) -> Json {
    let kind = match err {
        ParseError::Syntax { .. } => "syntax",
        ParseError::Name { .. } => "name",
        ParseError::Kind { .. } => "kind",
    };
    let span = err.span();
    // the Display form leads with "line:col: "
    let message = err.to_string();
    let message = message.split_once(": ").map_or(message.as_str(), |(_, m)| m);
    json!({
        "file": path,
        "passed": false,
        "error": {
            "kind": kind,
            "line": span.line,
            "column": span.column,
            "message": message,
        }
    })
}
