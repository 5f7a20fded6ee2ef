//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its
//! criterion to stderr (uncaptured) and then asserts it. All comparisons
//! are exact.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{dominant_weights, freudenthal, ssyt_count, weight_multiset};
use distrep::label::weyl_dim_gl;
use distrep::lie::Delta;
use distrep::params::{critical_pairs, SpectralParams};
use distrep::rep::{build_gl_irrep, multiplicity_decomposition};
use distrep::verify::{
    check_nonv, run_all, run_cells, sweep_cells, CheckId, CheckReport, Ranges, RunOptions, Status,
};

fn record(criterion: u32, title: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    // Written past the test harness's capture so the line always shows.
    let _ = writeln!(std::io::stderr(), "acceptance {criterion}: {status} {title} ({detail})");
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn sweep(check: CheckId, ranges: &Ranges) -> (Vec<CheckReport>, Duration) {
    let start = Instant::now();
    let reports = run_cells(&sweep_cells(check, ranges), &RunOptions::default()).expect("sweep runs");
    (reports, start.elapsed())
}

fn failures(reports: &[CheckReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| {
            let claims: Vec<String> = r.failures().map(|c| format!("{}: {} vs {}", c.description, c.expected, c.computed)).collect();
            format!("{} [{}]", r.summary_line(), claims.join("; "))
        })
        .collect()
}

fn summary(reports: &[CheckReport], elapsed: Duration) -> String {
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let data = reports.iter().filter(|r| r.status == Status::Exploratory).count();
    let fail = failures(reports);
    let mut s = format!("{} cells, {pass} pass, {data} exploratory, {} fail, {:.1}s", reports.len(), fail.len(), elapsed.as_secs_f64());
    if !fail.is_empty() {
        s.push_str(&format!(": {}", fail.join(" | ")));
    }
    s
}

fn claim_count(reports: &[CheckReport], needle: &str) -> usize {
    reports.iter().flat_map(|r| &r.claims).filter(|c| c.description.contains(needle) && c.asserted && c.pass).count()
}

#[test]
fn criterion_1_restriction_of_gl_functionals() {
    let ranges = Ranges { ns: vec![1, 2], l1_max: 5, ws: vec![0, 2], mu_max: 0 };
    let (reports, t) = sweep(CheckId::Disfin, &ranges);
    let expected: usize = [1, 2]
        .iter()
        .flat_map(|&n| [0, 2].into_iter().flat_map(move |w| distrep::verify::sweep::spectral_params(n, 5, w)))
        .map(|p: SpectralParams| critical_pairs(&p).len())
        .sum();
    let ok = reports.len() == expected
        && reports.iter().all(|r| r.status == Status::Pass)
        && claim_count(&reports, "restriction to the tau_{l-} copy is nonzero") == expected
        && t <= Duration::from_secs(300);
    record(1, "restriction isomorphism over all critical pairs", ok, &summary(&reports, t));
}

#[test]
fn criterion_2_orthogonal_distinction() {
    let ranges = Ranges { ns: vec![1, 2], l1_max: 4, ws: vec![], mu_max: 0 };
    let (reports, t) = sweep(CheckId::Diso, &ranges);
    let in_hyp: Vec<&CheckReport> = reports.iter().filter(|r| r.hypotheses).collect();
    let ok = !in_hyp.is_empty()
        && in_hyp.iter().all(|r| r.status == Status::Pass)
        && failures(&reports).is_empty()
        && t <= Duration::from_secs(120);
    record(2, "O(n) x O(n) functionals under the sufficient conditions", ok, &summary(&reports, t));
}

#[test]
fn criterion_3_linear_distinction() {
    let ranges = Ranges { ns: vec![1, 2], l1_max: 0, ws: vec![], mu_max: 3 };
    let (reports, t) = sweep(CheckId::Disgl, &ranges);
    let ok = !reports.is_empty()
        && reports.iter().all(|r| r.status == Status::Pass)
        && t <= Duration::from_secs(180);
    record(3, "GL(n) x GL(n) functionals for balanced weights", ok, &summary(&reports, t));
}

#[test]
fn criterion_4_extremal_type() {
    let ranges = Ranges { ns: vec![1, 2], l1_max: 0, ws: vec![], mu_max: 2 };
    let (reports, t) = sweep(CheckId::Extremal, &ranges);
    let ok = reports.len() == dominant_weights(1, 2).len() + dominant_weights(2, 2).len()
        && reports.iter().all(|r| r.status == Status::Pass)
        && t <= Duration::from_secs(300);
    record(4, "extremal O(2n)-type has multiplicity one and maximal size", ok, &summary(&reports, t));
}

#[test]
fn criterion_5_top_wedge() {
    let ranges = Ranges { ns: vec![1, 2], l1_max: 0, ws: vec![], mu_max: 0 };
    let (reports, t) = sweep(CheckId::Jtau, &ranges);
    let ok = reports.len() == 2
        && reports.iter().all(|r| r.status == Status::Pass)
        && claim_count(&reports, "eta_O of the h/c top wedge is nonzero") == 2
        && claim_count(&reports, "Gram pairing") == 2
        && claim_count(&reports, "eigenvalue on wedge^p0(h/c)") == 4
        && claim_count(&reports, "acts by zero on wedge^p0(h/c)") == 2
        && t <= Duration::from_secs(600);
    record(5, "multiplicity one, nonvanishing (direct and Gram) and character of the top wedge", ok, &summary(&reports, t));
}

#[test]
fn criterion_6_parity_components() {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut run = |n, l: &[i64], w, w1, w2, eps| reports.push(check_nonv(n, l, w, w1, w2, eps, Delta::Last).unwrap());
    run(1, &[1], 0, 0, 0, (0, 0));
    run(2, &[3, 1], 0, 0, 0, (0, 0));
    run(1, &[3], 0, 1, -1, (0, 0));
    run(1, &[3], 0, 1, -1, (1, 1));
    run(2, &[5, 3], 2, -1, -1, (0, 0));
    let t = start.elapsed();
    let ok = reports.iter().all(|r| r.status == Status::Pass)
        && claim_count(&reports, "(eps0) is nonzero") == reports.len()
        && claim_count(&reports, "(eps0+1) is nonzero") == reports.len()
        && t <= Duration::from_secs(900);
    record(6, "nonvanishing on the eps0 component and zero on the other", ok, &summary(&reports, t));
}

#[test]
fn criterion_7_oracle_equivalence() {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut built = 0;
    // (a) and (b): every F_mu with 2n <= 4 and entries in [-2, 2].
    for n in [1, 2] {
        for mu in dominant_weights(n, 2) {
            let f = build_gl_irrep(&mu).unwrap();
            built += 1;
            if f.dim() != ssyt_count(&mu) || weyl_dim_gl(&mu) != f.dim() {
                problems.push(format!("dimension of F{mu:?}"));
            }
            if weight_multiset(&f) != freudenthal(&mu) {
                problems.push(format!("weights of F{mu:?}"));
            }
            // (d) decompositions agree for all reflection choices.
            let parts: Vec<_> = [Delta::Last, Delta::First, Delta::Mid]
                .into_iter()
                .map(|d| multiplicity_decomposition(&f, d).unwrap().parts)
                .collect();
            if parts[0] != parts[1] || parts[0] != parts[2] {
                problems.push(format!("reflection dependence for F{mu:?}"));
            }
        }
    }
    // (c) every Hom dimension computed by the default suite is checked
    // against the dual formulation inside the reports; (d) the suite gives
    // the same claims for all three reflections.
    let suites: Vec<Vec<CheckReport>> = [Delta::Last, Delta::First, Delta::Mid]
        .into_iter()
        .map(|delta| run_all(&RunOptions { delta, ..RunOptions::default() }).unwrap().reports)
        .collect();
    let dual_claims = claim_count(&suites[0], "dual-formulation");
    let dual_total = suites[0].iter().flat_map(|r| &r.claims).filter(|c| c.description.contains("dual-formulation")).count();
    if dual_claims != dual_total || dual_total == 0 {
        problems.push(format!("dual formulation agrees on {dual_claims} of {dual_total} instances"));
    }
    // Descriptions of the cross-reflection claims name the other choices, so
    // compare computed values and outcomes only.
    let strip = |rs: &[CheckReport]| -> Vec<Vec<(String, bool)>> {
        rs.iter().map(|r| r.claims.iter().map(|c| (c.computed.clone(), c.pass)).collect()).collect()
    };
    for (k, other) in suites.iter().enumerate().skip(1) {
        if strip(&suites[0]) != strip(other) {
            problems.push(format!("default suite differs for reflection choice {k}"));
        }
    }
    let t = start.elapsed();
    let detail = format!(
        "{built} modules, {dual_total} dual comparisons, 3 reflection choices, {} discrepancies, {:.1}s{}",
        problems.len(),
        t.as_secs_f64(),
        if problems.is_empty() { String::new() } else { format!(": {}", problems.join("; ")) }
    );
    record(7, "Weyl, Freudenthal, dual-formulation and reflection-independence oracles", problems.is_empty(), &detail);
}

#[test]
fn criterion_8_determinism() {
    let a = run_all(&RunOptions::default()).unwrap().to_json();
    let b = run_all(&RunOptions::default()).unwrap().to_json();
    let c = run_all(&RunOptions { workers: 4, ..RunOptions::default() }).unwrap().to_json();
    let ok = a == b && a == c && !a.contains("timing_ms");
    record(8, "byte-identical JSON for repeated and concurrent runs", ok, &format!("{} bytes", a.len()));
}
