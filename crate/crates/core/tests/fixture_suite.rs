use koszul_pairs::fixtures::{verify_fixture_suite, FixtureStatus, SuiteConfig};

#[test]
fn builtin_fixture_suite_passes() {
    let report = verify_fixture_suite(&SuiteConfig::default());
    for r in &report.results {
        println!("fixture: {} ... {:?}", r.name, r.status);
        assert!(
            matches!(r.status, FixtureStatus::Pass),
            "fixture `{}` did not pass: {:?}",
            r.name,
            r.status
        );
    }
}
