use std::io::Write;

use fk_core::verify::{run_one, CRITERIA};

// Writes go to the process handle so the summary shows without --nocapture.
#[test]
fn all_criteria_pass() {
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    writeln!(out).unwrap();
    for c in &CRITERIA {
        let rep = run_one(c);
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {} {}: {}", rep.id, rep.tag, rep.title).unwrap();
        if !rep.passed() {
            write!(out, "{rep}").unwrap();
            failed.push(rep.tag);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
