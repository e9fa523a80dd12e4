//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use plancherel_core::verify::{run_suite, Suite, SuiteOptions};

const CRITERIA: [(u32, &str, Suite); 10] = [
    (1, "Stanley closed form, |mu|<=4, n<=8", Suite::Stanley),
    (
        2,
        "Jack closed form (dim'_theta), theta in {1/2,1,2,3/5}, |mu|<=3, n<=7",
        Suite::JackClosedForm,
    ),
    (
        3,
        "polynomiality of averages, theta in {1/2,1,2}",
        Suite::Polynomiality,
    ),
    (
        4,
        "growth marginals equal Jack-Plancherel, n<=6; Plancherel at theta=1, n<=8",
        Suite::GrowthVsJack,
    ),
    (
        5,
        "Kerov identities: kernel rows, fundamental identity, H = Phi(u-theta)/Phi(u)",
        Suite::KerovIdentities,
    ),
    (
        6,
        "operator identity for (1+del)h_rho and a_s coefficients",
        Suite::DelIdentity,
    ),
    (
        7,
        "Frobenius and content factorizations, p_m via content sums",
        Suite::Structural,
    ),
    (8, "duality lambda' <-> 1/theta, n<=6", Suite::Duality),
    (
        9,
        "sampler frequencies within 0.01, 10^5 trajectories, theta in {1,2}",
        Suite::Sampler,
    ),
    (
        10,
        "hook formula = path count, sum dim^2 = n!, n<=12",
        Suite::Combinatorial,
    ),
];

fn main() -> ExitCode {
    let opts = SuiteOptions {
        seed: 1,
        ..Default::default()
    };
    let mut failed = 0;
    for (id, title, suite) in CRITERIA {
        let start = Instant::now();
        let line = match run_suite(suite, &opts) {
            Ok(report) if report.passed() => format!(
                "PASS criterion {id} [{suite}] {title}: {} cases",
                report.cases.len()
            ),
            Ok(report) => {
                failed += 1;
                let first = report.first_failure().expect("a failing case");
                format!(
                    "FAIL criterion {id} [{suite}] {title}: {}/{} cases passed; first failure {first}",
                    report.passed_count(),
                    report.cases.len()
                )
            }
            Err(e) => {
                failed += 1;
                format!("FAIL criterion {id} [{suite}] {title}: error {e}")
            }
        };
        println!("{line} ({:.1}s)", start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", CRITERIA.len());
        ExitCode::FAILURE
    }
}
