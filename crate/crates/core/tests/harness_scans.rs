use braidknot::harness::{family_scan, scan_csv, scan_report, Cache, FamilySpec, Summary};

#[test]
fn gamma_scan_is_reproducible_through_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let spec = FamilySpec::named("gamma", (1, 6)).unwrap();

    let fresh = family_scan(&spec, None).unwrap();
    let cold = family_scan(&spec, Some(&cache)).unwrap();
    let warm = family_scan(&spec, Some(&cache)).unwrap();
    assert_eq!(fresh, cold);
    assert_eq!(cold, warm);

    let omegas = &spec.options.omegas;
    assert_eq!(scan_csv(&fresh, omegas).unwrap(), scan_csv(&warm, omegas).unwrap());
    let summary = Summary::of(&warm);
    assert!(summary.ok(), "{summary:?}");
    assert_eq!(summary.passed, 6);

    let a = serde_json::to_string(&scan_report(&spec, fresh)).unwrap();
    let b = serde_json::to_string(&scan_report(&spec, warm)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn stale_cache_versions_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let spec = FamilySpec::named("notorious", (1, 4)).unwrap();
    let old = Cache::open_with_version(dir.path(), 1).unwrap();
    let rows = family_scan(&spec, Some(&old)).unwrap();
    let new = Cache::open_with_version(dir.path(), 2).unwrap();
    assert_eq!(family_scan(&spec, Some(&new)).unwrap(), rows);
    assert_eq!(rows.iter().map(|r| r.signature.abs()).collect::<Vec<_>>(), vec![0, 0, 2, 0]);
}

#[test]
fn alpha_scan_reports_linear_growth() {
    let spec = FamilySpec::named("alpha", (1, 8)).unwrap();
    let rows = family_scan(&spec, None).unwrap();
    for r in &rows {
        assert_eq!(r.pass, Some(true), "p = {}: {}", r.p, r.signature);
        assert_eq!(r.components, 1);
    }
}
