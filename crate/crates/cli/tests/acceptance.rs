//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 4 is known to fail: L3(4)<beta> has four classes of elements
//! of order 4 (three inside L3(4), one outside), not three. The run
//! reports FAIL for it and exits non-zero only if some criterion's outcome
//! differs from that.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ocgroup::analysis::{class_data, is_rational_group};
use ocgroup::chartab::{dixon_character_table, rationality_counts};
use ocgroup::construct::{builtin, gl_2_3, l3_4_beta, psl_3_4, sl_2_5, frobenius_w};
use ocgroup::suite::{enumerate_subgroups, quotient_closure_check, Catalog};
use ocgroup::PermGroup;
use ocgroup_cli::run;
use serde_json::Value;

struct Outcome {
    passed: bool,
    detail: String,
}

fn verify(campaign: &str) -> (i32, Value) {
    let out = run(["ocgroup", "verify", campaign, "--json"]);
    (out.code, serde_json::from_str(&out.stdout).expect("json document"))
}

fn failing_checks(v: &Value) -> Vec<String> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| format!("{} [{}]", c["name"].as_str().unwrap(), c["detail"].as_str().unwrap()))
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (code, v) = verify("lemma-2-4");
    let took = start.elapsed();
    let mut expected: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    expected.insert("2".into(), vec![2, 3, 4, 6]);
    expected.insert("3".into(), vec![2, 4]);
    for q in [5, 7, 11, 13, 17, 19, 29, 31, 41, 71, 127] {
        expected.insert(q.to_string(), vec![2]);
    }
    let got: BTreeMap<String, Vec<u64>> = v["lemma24"]["table"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(q, rs)| (q.clone(), rs.as_array().unwrap().iter().map(|r| r.as_u64().unwrap()).collect()))
        .collect();
    let pairs: usize = got.values().map(Vec::len).sum();
    Outcome {
        passed: code == 0 && got == expected && took < Duration::from_secs(1),
        detail: format!("{} primes, {pairs} pairs, exact match {}, {took:.2?}", got.len(), got == expected),
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (code, v) = verify("theorem-b");
    let took = start.elapsed();
    let checks = v["checks"].as_array().unwrap();
    let target_checks = checks
        .iter()
        .filter(|c| ["s3 ", "s5 ", "w ", "l34b "].iter().any(|p| c["name"].as_str().unwrap().starts_with(p)))
        .count();
    let controls = checks
        .iter()
        .filter(|c| c["name"].as_str().unwrap().ends_with("fails a predicate") && c["passed"] == true)
        .count();
    Outcome {
        passed: code == 0 && target_checks == 13 && controls == 3 && took < Duration::from_secs(60),
        detail: format!("{target_checks} target checks, {controls}/3 controls fail, {took:.2?}"),
    }
}

fn enumeration_agrees(g: &PermGroup) -> bool {
    g.elements().map(|e| e.len() as u128 == g.order()).unwrap_or(false)
}

fn criterion_3() -> Outcome {
    let groups = [
        ("W", frobenius_w().unwrap(), 72u128),
        ("PSL(3,4)", psl_3_4().unwrap(), 20160),
        ("L3(4)<beta>", l3_4_beta().unwrap(), 40320),
        ("GL(2,3)", gl_2_3().unwrap(), 48),
        ("SL(2,5)", sl_2_5().unwrap(), 120),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g, want) in &groups {
        let good = g.order() == *want && enumeration_agrees(g);
        ok &= good;
        parts.push(format!("{name}={}", g.order()));
    }
    Outcome { passed: ok, detail: parts.join(" ") }
}

fn criterion_4() -> (Outcome, bool) {
    let start = Instant::now();
    let (code, v) = verify("paper-facts");
    let took = start.elapsed();
    let checks = v["checks"].as_array().unwrap().len();
    let failing = failing_checks(&v);
    let passed = code == 0 && checks == 9 && failing.is_empty() && took < Duration::from_secs(120);
    let known = code == 1
        && checks == 9
        && failing.len() == 1
        && failing[0].contains("W: 3, L3(4)<beta>: 4");
    let detail = if failing.is_empty() {
        format!("9/9 checks, {took:.2?}")
    } else {
        format!(
            "{}/{checks} checks; failing: {}; L3(4)<beta> has three order-4 classes inside L3(4) \
             and one outer class; {took:.2?}",
            checks - failing.len(),
            failing.join("; ")
        )
    };
    (Outcome { passed, detail }, known)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (a_code, a) = verify("theorem-a");
    let (s_code, s) = verify("syskin");
    let took = start.elapsed();
    let groups = a["groups"].as_array().unwrap().len();
    let scanned = a["groups"].as_array().unwrap().iter().filter(|g| g["label"].as_str().unwrap().starts_with("S6/")).count();
    let ces = a["counterexamples"].as_array().unwrap().len() + s["counterexamples"].as_array().unwrap().len();
    Outcome {
        passed: a_code == 0 && s_code == 0 && scanned == 1455 && ces == 0 && took < Duration::from_secs(600),
        detail: format!("{groups} groups ({scanned} subgroups of S6), {ces} counterexamples, {took:.2?}"),
    }
}

fn criterion_6() -> Outcome {
    let (code, v) = verify("lemma-2-5");
    let groups = v["groups"].as_array().unwrap().len();
    let ces = v["counterexamples"].as_array().unwrap().len();
    Outcome { passed: code == 0 && ces == 0, detail: format!("{groups} groups, {ces} counterexamples") }
}

fn criterion_7(catalog: &Catalog) -> Outcome {
    let start = Instant::now();
    let mut tested = 0;
    let mut bad = Vec::new();
    for e in catalog.entries().iter().filter(|e| e.group.order() <= 500) {
        tested += 1;
        let t = dixon_character_table(&e.group).unwrap();
        let (chars, classes) = rationality_counts(&t);
        let all_rational = t.rows.iter().all(|c| c.is_rational());
        let ok = chars == classes
            && all_rational == is_rational_group(&e.group).unwrap()
            && t.rows_orthogonal()
            && t.columns_orthogonal();
        if !ok {
            bad.push(e.label.clone());
        }
    }
    let took = start.elapsed();
    Outcome {
        passed: bad.is_empty() && took < Duration::from_secs(300),
        detail: format!("{tested} tables, {} disagreements {bad:?}, {took:.2?}", bad.len()),
    }
}

fn criterion_8(catalog: &Catalog) -> Outcome {
    let class_equation = catalog.entries().iter().all(|e| {
        let data = class_data(&e.group).unwrap();
        let n = e.group.order() as usize;
        data.classes.iter().map(|c| c.size).sum::<usize>() == n
            && data.classes.iter().all(|c| n.is_multiple_of(c.size))
    });
    let s5 = quotient_closure_check("s5", &builtin("s5").unwrap()).unwrap();
    let w = quotient_closure_check("w", &builtin("w").unwrap()).unwrap();
    let closure = s5.passed() && w.passed() && s5.checks.len() == 3 && w.checks.len() == 7;
    let s3 = enumerate_subgroups(&builtin("s3").unwrap()).unwrap().len();
    let s4 = enumerate_subgroups(&builtin("sym:4").unwrap()).unwrap().len();
    Outcome {
        passed: class_equation && closure && s3 == 6 && s4 == 30,
        detail: format!(
            "class equation {class_equation}, quotient closure over {} + {} normal subgroups {closure}, \
             subgroups S3={s3} S4={s4}",
            s5.checks.len(),
            w.checks.len()
        ),
    }
}

fn main() -> ExitCode {
    let catalog = Catalog::standard(6, 100_000).expect("catalog");
    let mut unexpected = 0;
    let mut line = |n: usize, o: &Outcome, expect_pass: bool| {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {n}: {tag} {}", o.detail);
        if o.passed != expect_pass {
            unexpected += 1;
        }
    };
    line(1, &criterion_1(), true);
    line(2, &criterion_2(), true);
    line(3, &criterion_3(), true);
    let (c4, known) = criterion_4();
    // red only for the known reason; any other failure is unexpected
    line(4, &c4, c4.passed || !known);
    line(5, &criterion_5(), true);
    line(6, &criterion_6(), true);
    line(7, &criterion_7(&catalog), true);
    line(8, &criterion_8(&catalog), true);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria differ from the expected outcome");
        ExitCode::FAILURE
    }
}
