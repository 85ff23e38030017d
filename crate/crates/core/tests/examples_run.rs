//! Every example runs to completion.

#[path = "../examples/anti_canonical.rs"]
mod anti_canonical;
#[path = "../examples/curve_cones.rs"]
mod curve_cones;
#[path = "../examples/hirzebruch_oracle.rs"]
mod hirzebruch_oracle;
#[path = "../examples/intersection_ring.rs"]
mod intersection_ring;
#[path = "../examples/fixture_corpus.rs"]
mod fixture_corpus;
#[allow(dead_code)]
#[path = "../examples/problem_file.rs"]
mod problem_file;
#[path = "../examples/semistable_flat.rs"]
mod semistable_flat;
#[path = "../examples/split_threshold_sweep.rs"]
mod split_threshold_sweep;

#[test]
fn library_examples() {
    anti_canonical::main().unwrap();
    curve_cones::main().unwrap();
    hirzebruch_oracle::main().unwrap();
    intersection_ring::main().unwrap();
    semistable_flat::main().unwrap();
    split_threshold_sweep::main().unwrap();
}

#[test]
fn corpus_example() {
    fixture_corpus::main().unwrap();
}

#[test]
fn problem_file_example() {
    problem_file::run(None).unwrap();
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/");
    problem_file::run(Some(&format!("{dir}plane_split.json"))).unwrap();
    assert!(problem_file::run(Some(&format!("{dir}genus3_semistable.json"))).is_err());
}
