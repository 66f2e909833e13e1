//! Prints one pass/fail line per acceptance criterion.
//!
//! Criteria 2 and 3 list a size-1 maximum 3-cycle clique for `n = 3`, but
//! `(1,2,3)` and `(1,3,2)` are adjacent (their quotient is a 3-cycle), so the
//! true value is 2. Those two criteria are reported as FAIL. The run exits
//! non-zero on any other outcome, or if they fail for another reason.
//!
//! `--full` runs the full tier (a few minutes in release mode); `--strict`
//! also treats the two known failures as errors.

use std::process::ExitCode;

use birkhoff::acceptance::{run_all, scoreboard, Outcome, Status, Tier, CRITERIA};
use birkhoff::Budget;

const KNOWN_FAILING: [usize; 2] = [2, 3];

fn only_three_point_failures(o: &Outcome) -> bool {
    !o.failures.is_empty()
        && o.failures
            .iter()
            .all(|f| f.contains("C₃(3)") || f.contains("for n = 3 "))
}

fn unexpected(o: &Outcome, strict: bool) -> Option<String> {
    let want = if KNOWN_FAILING.contains(&o.id) && !strict {
        if o.status == Status::Fail && !only_three_point_failures(o) {
            return Some(format!(
                "criterion {} failed for another reason: {:?}",
                o.id, o.failures
            ));
        }
        Status::Fail
    } else if o.id == 12 {
        Status::Info
    } else {
        Status::Pass
    };
    (o.status != want).then(|| format!("criterion {}: {}, expected {}", o.id, o.status, want))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let has = |flag: &str| args.iter().any(|a| a == flag);
    if has("--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let tier = if has("--full") || has("--ignored") || has("--include-ignored") {
        Tier::Full
    } else {
        Tier::Quick
    };
    let strict = has("--strict");

    let outcomes = run_all(tier, &Budget::default());
    println!("acceptance ({tier:?} tier)");
    println!("{}", scoreboard(&outcomes));
    for o in &outcomes {
        for n in &o.notes {
            println!("    #{} {n}", o.id);
        }
    }

    let mut problems: Vec<String> = outcomes.iter().filter_map(|o| unexpected(o, strict)).collect();
    if outcomes.len() != CRITERIA.len() {
        problems.push(format!("{} outcomes for {} criteria", outcomes.len(), CRITERIA.len()));
    }
    if tier == Tier::Full {
        problems.extend(
            outcomes
                .iter()
                .filter(|o| !o.deferred.is_empty())
                .map(|o| format!("criterion {} deferred work", o.id)),
        );
    }
    if problems.is_empty() {
        println!("acceptance outcome as expected: criteria {KNOWN_FAILING:?} fail at n = 3 only");
        ExitCode::SUCCESS
    } else {
        for p in &problems {
            eprintln!("unexpected: {p}");
        }
        ExitCode::FAILURE
    }
}
