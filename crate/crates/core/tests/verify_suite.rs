use chainiso::verify::{all_passed, run_all, CheckGroup};
use chainiso::VerifyConfig;

#[test]
fn default_suite_passes() {
    let cfg = VerifyConfig::from_env();
    let reports = run_all(12, &cfg);
    for r in &reports {
        println!("{r}");
    }
    assert!(all_passed(&reports));
    let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    for want in [
        "height-table",
        "fix-table",
        "order",
        "closure",
        "dstar-classes",
        "fast-vs-naive-enumeration",
    ] {
        assert!(names.contains(&want), "{want} missing");
    }
}

#[test]
fn groups_parse_and_run_in_order() {
    let cfg = VerifyConfig::default();
    let groups: Vec<CheckGroup> = ["orders", "fix"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let reports = chainiso::verify::run_selected(5, &cfg, &groups);
    assert_eq!(reports[0].name, "order");
    assert_eq!(reports.last().unwrap().name, "fix-table");
    assert!("bogus".parse::<CheckGroup>().is_err());
}
