use binmat::verify::{check_ids, registry, run_checks};

#[test]
fn registry_ids_are_unique_and_ordered() {
    let ids = check_ids();
    assert_eq!(ids.len(), 36);
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
    assert!(registry().iter().all(|c| !c.anchor.is_empty()));
}

#[test]
fn unknown_id_is_rejected() {
    assert!(run_checks(Some(&["V99"])).is_err());
}

#[test]
fn every_check_passes() {
    let reports = run_checks(None).unwrap();
    assert_eq!(reports.len(), check_ids().len());
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}: expected {}, computed {}", r.id, r.expected, r.computed))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}
