//! Certificates are byte-identical across runs once timings are removed.

use agcert::cli::{self, RunOptions};

fn without_timings(json: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    serde_json::to_string_pretty(&v).unwrap()
}

#[test]
fn repeated_runs_agree() {
    for id in ["quartic", "triple-root-criterion", "conics", "quotient-map-61", "orbifold-W", "sd16"] {
        let s = cli::scenario(id).unwrap();
        let a = cli::run(&s, &RunOptions::default()).unwrap().to_json();
        let b = cli::run(&s, &RunOptions::default()).unwrap().to_json();
        assert_eq!(without_timings(&a), without_timings(&b), "{id}");
    }
}

#[test]
fn keys_are_sorted() {
    let json = cli::run(&cli::scenario("orbifold-W").unwrap(), &RunOptions::default()).unwrap().to_json();
    let top: Vec<String> = serde_json::from_str::<serde_json::Value>(&json).unwrap().as_object().unwrap().keys().cloned().collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
    let first = json.find("\"budgets\"").unwrap();
    let second = json.find("\"checks\"").unwrap();
    assert!(first < second);
}
