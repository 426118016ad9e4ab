//! Run the brute-force verification suites, then show them catching a broken comparator.

use std::cmp::Ordering;

use ivifn::oracle::{axiom_suite_with, enumerate_grid, verify, Axiom, AxiomChecks, DEFAULT_SEED};
use ivifn::{Ivifn, OrderSelector};

fn main() {
    for order in OrderSelector::ALL {
        for report in verify(3, order, DEFAULT_SEED, 500) {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            println!(
                "{status} {:<22} [{order}] {} checks",
                report.suite, report.checked
            );
        }
    }

    // Dropping the last key merges distinct numbers, which antisymmetry catches.
    let grid = enumerate_grid(3);
    let truncated = |a: &Ivifn, b: &Ivifn| -> Ordering {
        let (ka, kb) = (OrderSelector::Hzx.keys(a), OrderSelector::Hzx.keys(b));
        ka[..3].cmp(&kb[..3])
    };
    let report = axiom_suite_with(&grid.members, truncated, AxiomChecks::ALL);
    println!(
        "three-key comparator: {} violations, first antisymmetry witness {:?}",
        report.violation_count,
        report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::Antisymmetry)
            .map(|v| &v.witnesses)
    );
}
