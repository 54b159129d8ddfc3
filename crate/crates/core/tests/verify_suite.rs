use resokit::verify::{run_subject, run_suite, Status, Subject, SuiteOptions};

#[test]
fn full_suite_passes_with_enough_records() {
    let report = run_suite(&Subject::all(), &SuiteOptions::default());
    assert!(report.summary.records >= 40, "{:?}", report.summary);
    assert!(report.all_passed(), "{:?}", report.summary);
    let subjects: Vec<&str> = report.reports.iter().map(|r| r.subject.as_str()).collect();
    assert_eq!(subjects, ["harmonic", "equidim", "airy", "bessel0", "legendre", "hermite", "bvp:airy", "bvp:legendre", "fixtures"]);
}

#[test]
fn reports_are_byte_deterministic() {
    let subjects = [Subject::Row("bessel0".into()), Subject::Bvp("airy".into()), Subject::Fixtures];
    let a = run_suite(&subjects, &SuiteOptions::default()).to_json();
    let b = run_suite(&subjects, &SuiteOptions::default()).to_json();
    assert_eq!(a, b);
}

#[test]
fn bessel_includes_k0_to_k3_annihilation() {
    let r = run_subject(&Subject::Row("bessel0".into()));
    for member in ["J", "Y"] {
        for k in 0..=3 {
            let name = format!("bessel0/mu=1/{member}/root-k={k}/annihilated");
            let c = r.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("missing {name}"));
            assert_eq!(c.status, Status::Pass);
        }
    }
}

#[test]
fn impossible_tolerance_fails_every_nonzero_residual() {
    let report = run_suite(&[Subject::Row("hermite".into()), Subject::Bvp("legendre".into())], &SuiteOptions { tolerance: Some(1e-30) });
    let mut failed = 0;
    for c in report.reports.iter().flat_map(|r| &r.checks) {
        assert_eq!(c.tolerance, 1e-30);
        if c.max_residual > 0.0 {
            assert_eq!(c.status, Status::Fail, "{}", c.name);
            failed += 1;
        } else {
            // exact symbolic cancellation
            assert_eq!(c.status, Status::Pass, "{}", c.name);
        }
    }
    assert!(failed > 0);
    assert!(!report.all_passed());
}

#[test]
fn subjects_parse_from_strings() {
    assert_eq!("hermite".parse::<Subject>().unwrap(), Subject::Row("hermite".into()));
    assert_eq!("bvp:airy".parse::<Subject>().unwrap(), Subject::Bvp("airy".into()));
    assert_eq!("fixtures".parse::<Subject>().unwrap(), Subject::Fixtures);
    assert!("bvp:heat".parse::<Subject>().is_err());
    assert!("nope".parse::<Subject>().is_err());
}
