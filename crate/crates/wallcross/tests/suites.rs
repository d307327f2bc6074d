use wallcross::blocks::Curve;
use wallcross::verify::{run_suite, Suite};

fn run_all(g: i64) {
    let curve = Curve::new(g).unwrap();
    for suite in Suite::CONCRETE {
        let reports = run_suite(suite, &curve, 10 * g as usize).unwrap_or_else(|e| panic!("{suite}: {e}"));
        for r in &reports {
            println!("{r}");
        }
        assert!(reports.iter().all(|r| r.passed), "{suite} failed");
    }
}

#[test]
fn all_suites_genus_two() {
    run_all(2);
}

#[test]
fn all_suites_genus_three() {
    run_all(3);
}
