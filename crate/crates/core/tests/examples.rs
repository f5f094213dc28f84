macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(enumerate_sk, "enumerate_sk.rs");
example!(extension_branches, "extension_branches.rs");
example!(certificate, "certificate.rs");
example!(identities, "identities.rs");
example!(shortest, "shortest.rs");
example!(anchored, "anchored.rs");
example!(bounds_report, "bounds_report.rs");

#[test]
fn enumerate_sk_runs() {
    enumerate_sk::run_example(5).unwrap();
}

#[test]
fn extension_branches_runs() {
    let counts = extension_branches::run_example(4).unwrap();
    assert_eq!(counts.values().sum::<usize>(), 6 * 4);
}

#[test]
fn certificate_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    certificate::run_example(Some(path.to_str().unwrap())).unwrap();
    assert!(path.exists());
}

#[test]
fn identities_runs() {
    identities::run_example(433).unwrap();
    identities::run_example(1_000_000_007).unwrap();
}

#[test]
fn shortest_runs() {
    shortest::run_example(4).unwrap();
}

#[test]
fn anchored_runs() {
    anchored::run_example(&[2, 3, 7, 433, 1000]).unwrap();
}

#[test]
fn bounds_report_runs() {
    bounds_report::run_example(5).unwrap();
}
