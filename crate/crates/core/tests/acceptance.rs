use std::process::ExitCode;
use std::time::Instant;

use braidknot::harness::acceptance::{run_criterion, AcceptanceConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = AcceptanceConfig::default();
    let mut failed = 0;
    for (id, _, _) in CRITERIA {
        let start = Instant::now();
        let o = run_criterion(id, &cfg).expect("known criterion");
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} [{:>2}] {} ({:.2}s): {}", o.id, o.name, start.elapsed().as_secs_f64(), o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
