use std::collections::BTreeMap;
use std::time::Instant;

use ferrers_core::harness::{run_suite, Suite, SuiteConfig};

#[test]
fn full_grid_passes() {
    let start = Instant::now();
    let reports = run_suite(Suite::All, &SuiteConfig::default());
    let elapsed = start.elapsed();
    let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = tally.entry(r.check_name.clone()).or_default();
        e.0 += r.passed as usize;
        e.1 += 1;
    }
    for (name, (ok, total)) in &tally {
        println!("{name:45} {ok}/{total}");
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    for r in failed.iter().take(20) {
        println!(
            "FAILED {} {:?} lhs={:e} rhs={:e} rel={:e} {}",
            r.check_name, r.params, r.lhs, r.rhs, r.rel_err, r.notes
        );
    }
    println!("{} reports in {:.2?}", reports.len(), elapsed);
    assert!(
        failed.is_empty(),
        "{} of {} checks failed",
        failed.len(),
        reports.len()
    );
    assert!(elapsed.as_secs() < 120);
}

#[test]
fn suites_are_deterministic() {
    let cfg = SuiteConfig {
        smoke: true,
        tol: None,
    };
    let a = run_suite(Suite::Integrals, &cfg);
    let b = run_suite(Suite::Integrals, &cfg);
    assert_eq!(a, b);
}
