use std::time::Instant;

use rayon::prelude::*;

use super::catalog::Catalog;
use super::report::VerificationReport;
use super::subgroups::{conjugacy_class_of_subgroups, subgroup_sets};
use crate::analysis::report::GroupReport;
use crate::analysis::subset::to_group;
use crate::analysis::{
    are_isomorphic, center, class_count_of_order, exponent, is_normal, is_rational_group,
    is_solvable, normal_subgroups, odd_order_conjugacy, p_core, quotient, sylow_subgroup,
};
use crate::construct::{
    builtin, frobenius_w, generalized_quaternion, prime_factors, symmetric, w_complement_generators,
    w_kernel_generators,
};
use crate::error::Result;
use crate::group::PermGroup;

fn is_s3(g: &PermGroup) -> Result<bool> {
    Ok(g.order() == 6 && are_isomorphic(g, &symmetric(3)?)?)
}

/// No OC-group has `1 < Z(G) < G`: every OC-group is abelian or `S_3`.
/// Also runs the two structural consequences for OC-groups: `|Z| = 2`
/// or nilpotent, and `G/Z(G)` rational.
pub fn run_theorem_a(catalog: &Catalog) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-a");
    let reports = catalog.reports()?;
    let verdicts = catalog
        .entries()
        .par_iter()
        .zip(reports)
        .map(|(e, r)| -> Result<Vec<String>> {
            let mut reasons = Vec::new();
            if !r.oc {
                return Ok(reasons);
            }
            if !r.abelian && !is_s3(&e.group)? {
                reasons.push("OC-group that is neither abelian nor S3".to_string());
            }
            if r.is_nontrivial_oc() && !r.nilpotent && r.center_order != 2 {
                reasons.push(format!("non-nilpotent OC-group with |Z| = {}", r.center_order));
            }
            let z = center(&e.group)?;
            if !is_rational_group(&quotient(&e.group, &z)?)? {
                reasons.push("OC-group whose central quotient is not rational".to_string());
            }
            Ok(reasons)
        })
        .collect::<Result<Vec<_>>>()?;
    for (r, reasons) in reports.iter().zip(verdicts) {
        for reason in reasons {
            report.counterexample(r, reason);
        }
    }
    let oc = reports.iter().filter(|r| r.oc).count();
    let nonabelian_oc = reports.iter().filter(|r| r.oc && !r.abelian).count();
    report.check(
        "oc-groups are abelian or S3",
        "catalog",
        report.counterexamples.is_empty(),
        format!("{} groups, {oc} OC, {nonabelian_oc} non-abelian OC", reports.len()),
    );
    let consistent = conjugation_consistency(&symmetric(4)?)?;
    report.check(
        "class-representative scan agrees with full scan on S4",
        "S4",
        consistent,
        "predicates constant on conjugacy classes of subgroups",
    );
    report.groups = reports.to_vec();
    Ok(report.finish(start))
}

/// Whether the per-subgroup predicate verdicts are constant on each
/// conjugacy class of subgroups of `g`, so that scanning class
/// representatives gives the same outcome as scanning everything.
pub fn conjugation_consistency(g: &PermGroup) -> Result<bool> {
    let sets = subgroup_sets(g)?;
    let class = conjugacy_class_of_subgroups(g, &sets)?;
    let table = g.element_table()?;
    let key = |r: &GroupReport| {
        (
            r.order,
            r.center_order,
            r.nilpotent,
            r.abelian,
            r.class_multiset(),
            r.rational,
            r.oc,
            r.odd_order_conjugate,
            r.all_order_conjugate,
        )
    };
    let reports = sets
        .iter()
        .enumerate()
        .map(|(i, s)| GroupReport::analyze(i.to_string(), &to_group(g, table, s)))
        .collect::<Result<Vec<_>>>()?;
    let full_fails = reports.iter().any(|r| r.oc && !r.abelian && r.order != 6);
    let mut rep_fails = false;
    for (i, r) in reports.iter().enumerate() {
        if key(r) != key(&reports[class[i]]) {
            return Ok(false);
        }
        if class[i] == i && r.oc && !r.abelian && r.order != 6 {
            rep_fails = true;
        }
    }
    Ok(full_fails == rep_fails)
}

/// Rationality, odd-order conjugacy and trivial 2-core for the nontrivial
/// groups in the classification, plus negative controls.
pub fn run_theorem_b_targets() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-b");
    let targets = ["s3", "s5", "w", "l34b"];
    let groups = targets.iter().map(|n| builtin(n)).collect::<Result<Vec<_>>>()?;
    let results = groups
        .par_iter()
        .zip(&targets)
        .map(|(g, n)| -> Result<_> {
            Ok((
                GroupReport::analyze(*n, g)?,
                p_core(g, 2)?.order(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    for (r, o2) in results {
        report.check(
            format!("{} rational", r.label),
            &r.label,
            r.rational,
            format!("rational = {}", r.rational),
        );
        report.check(
            format!("{} odd-order conjugate", r.label),
            &r.label,
            r.odd_order_conjugate,
            format!("odd_order_conjugate = {}", r.odd_order_conjugate),
        );
        report.check(format!("{} O2 trivial", r.label), &r.label, o2 == 1, format!("|O2| = {o2}"));
        report.groups.push(r);
    }
    let (frobenius, detail) = w_is_frobenius()?;
    report.check("w is Frobenius with kernel 3^2 and complement Q8", "w", frobenius, detail);
    for name in ["a5", "gl23", "sd16"] {
        let r = GroupReport::analyze(name, &builtin(name)?)?;
        let fails = !r.rational || !r.odd_order_conjugate;
        report.check(
            format!("{name} fails a predicate"),
            name,
            fails,
            format!("rational = {}, odd_order_conjugate = {}", r.rational, r.odd_order_conjugate),
        );
        report.groups.push(r);
    }
    Ok(report.finish(start))
}

fn w_is_frobenius() -> Result<(bool, String)> {
    let w = frobenius_w()?;
    let kernel = PermGroup::new(9, w_kernel_generators())?;
    let complement = PermGroup::new(9, w_complement_generators())?;
    let kernel_ok = kernel.order() == 9
        && kernel.is_abelian()
        && exponent(&kernel)? == 3
        && is_normal(&w, &kernel)?;
    let complement_ok =
        complement.order() == 8 && are_isomorphic(&complement, &generalized_quaternion(8)?)?;
    let mut fixed_point_free = true;
    for h in complement.elements()?.iter().filter(|h| !h.is_identity()) {
        for k in kernel.elements()?.iter().filter(|k| !k.is_identity()) {
            if &k.conjugate_by(h) == k {
                fixed_point_free = false;
            }
        }
    }
    let product_ok = kernel.order() * complement.order() == w.order()
        && complement.elements()?.iter().all(|h| w.contains(h).unwrap_or(false));
    Ok((
        kernel_ok && complement_ok && fixed_point_free && product_ok,
        format!(
            "kernel {kernel_ok}, complement {complement_ok}, fixed-point-free {fixed_point_free}, \
             |K||H| = |W| {product_ok}"
        ),
    ))
}

/// Groups in which all elements of equal order are conjugate are 1, C2
/// or S3.
pub fn run_syskin(catalog: &Catalog) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("syskin");
    let reports = catalog.reports()?;
    let mut passing = 0;
    for (e, r) in catalog.entries().iter().zip(reports) {
        if !r.all_order_conjugate {
            continue;
        }
        passing += 1;
        let allowed = r.order <= 2 || is_s3(&e.group)?;
        if !allowed {
            report.counterexample(r, "all-order-conjugate group other than 1, C2, S3");
        }
    }
    report.check(
        "all-order-conjugate groups are 1, C2 or S3",
        "catalog",
        report.counterexamples.is_empty(),
        format!("{passing} of {} groups are all-order-conjugate", reports.len()),
    );
    report.groups = reports.to_vec();
    Ok(report.finish(start))
}

/// `G/Z(G)` is never generalized quaternion.
pub fn run_lemma_2_5(catalog: &Catalog) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("lemma-2-5");
    let reports = catalog.reports()?;
    let verdicts = catalog
        .entries()
        .par_iter()
        .zip(reports)
        .map(|(e, r)| -> Result<Option<bool>> {
            let index = r.order / r.center_order;
            // generalized quaternion groups have order 2^k, k ≥ 3
            if index < 8 || !index.is_power_of_two() {
                return Ok(None);
            }
            let q = quotient(&e.group, &center(&e.group)?)?;
            Ok(Some(are_isomorphic(&q, &generalized_quaternion(index as usize)?)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let compared = verdicts.iter().filter(|v| v.is_some()).count();
    for (r, v) in reports.iter().zip(&verdicts) {
        if *v == Some(true) {
            report.counterexample(r, "central quotient is generalized quaternion");
        }
    }
    report.check(
        "central quotient is not generalized quaternion",
        "catalog",
        report.counterexamples.is_empty(),
        format!("{compared} central quotients of 2-power order compared"),
    );
    report.groups = reports.to_vec();
    Ok(report.finish(start))
}

/// For every normal `N`: if `G` is rational with odd-order conjugacy, so is
/// `G/N`.
pub fn quotient_closure_check(label: &str, g: &PermGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("quotient-closure");
    let hypothesis = is_rational_group(g)? && odd_order_conjugacy(g)?;
    report.groups.push(GroupReport::analyze(label, g)?);
    if !hypothesis {
        report.check(
            format!("{label} quotients"),
            label,
            true,
            "hypothesis not met; vacuous",
        );
        return Ok(report.finish(start));
    }
    for n in normal_subgroups(g)? {
        let q = quotient(g, &n)?;
        let ok = is_rational_group(&q)? && odd_order_conjugacy(&q)?;
        report.check(
            format!("{label}/N with |N| = {}", n.order()),
            label,
            ok,
            format!("quotient of order {} rational and odd-order conjugate: {ok}", q.order()),
        );
    }
    Ok(report.finish(start))
}

/// Quotient closure over the standard targets.
pub fn run_quotient_closure() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("quotient-closure");
    for name in ["s3", "s5", "w", "q8", "cyc:1"] {
        report.merge(quotient_closure_check(name, &builtin(name)?)?);
    }
    Ok(report.finish(start))
}

/// Nine spot checks of concrete facts about named groups. Check (9) runs
/// over the subgroups scanned into `catalog`.
pub fn paper_fact_suite(catalog: &Catalog) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("paper-facts");

    let a6 = builtin("a6")?;
    let n = class_count_of_order(&a6, 3)?;
    report.check("A6 has two classes of elements of order 3", "a6", n == 2, format!("{n} classes"));

    let s7 = symmetric(7)?;
    let n = class_count_of_order(&s7, 3)?;
    report.check("S7 has at least two classes of elements of order 3", "sym:7", n >= 2, format!("{n} classes"));

    let gl23 = builtin("gl23")?;
    let sd16 = builtin("sd16")?;
    let sylow = sylow_subgroup(&gl23, 2)?;
    let iso = are_isomorphic(&sylow, &sd16)?;
    let sd_rational = is_rational_group(&sd16)?;
    report.check(
        "Sylow 2-subgroup of GL(2,3) is SD16, which is not rational",
        "gl23",
        iso && !sd_rational,
        format!("isomorphic {iso}, SD16 rational {sd_rational}"),
    );

    let r = is_rational_group(&gl23)?;
    report.check("GL(2,3) is not rational", "gl23", !r, format!("rational {r}"));

    let r = is_rational_group(&builtin("q8")?)?;
    report.check("Q8 is rational", "q8", r, format!("rational {r}"));

    let w4 = class_count_of_order(&builtin("w")?, 4)?;
    let l4 = class_count_of_order(&builtin("l34b")?, 4)?;
    report.check(
        "W and L3(4)<beta> have three classes of elements of order 4",
        if w4 == 3 { "l34b" } else { "w" },
        w4 == 3 && l4 == 3,
        format!("W: {w4}, L3(4)<beta>: {l4}"),
    );

    let n = class_count_of_order(&builtin("s5")?, 2)?;
    report.check("S5 has two classes of involutions", "s5", n == 2, format!("{n} classes"));

    let a5 = is_rational_group(&builtin("a5")?)?;
    let a6r = is_rational_group(&a6)?;
    report.check(
        "A5 and A6 are not rational",
        "a5",
        !a5 && !a6r,
        format!("A5 rational {a5}, A6 rational {a6r}"),
    );

    let reports = catalog.reports()?;
    let solvable_rational = catalog
        .entries()
        .par_iter()
        .zip(reports)
        .filter(|(_, r)| r.rational)
        .map(|(e, r)| -> Result<Option<(String, u128)>> {
            Ok(is_solvable(&e.group)?.then(|| (r.label.clone(), r.order)))
        })
        .collect::<Result<Vec<_>>>()?;
    let solvable_rational: Vec<(String, u128)> = solvable_rational.into_iter().flatten().collect();
    let bad: Vec<&(String, u128)> = solvable_rational
        .iter()
        .filter(|(_, o)| prime_factors(*o).iter().any(|p| ![2, 3, 5].contains(p)))
        .collect();
    report.check(
        "solvable rational groups are {2,3,5}-groups",
        bad.first().map_or("catalog", |(l, _)| l.as_str()),
        bad.is_empty(),
        format!("{} solvable rational groups, {} with other prime divisors", solvable_rational.len(), bad.len()),
    );
    Ok(report.finish(start))
}
