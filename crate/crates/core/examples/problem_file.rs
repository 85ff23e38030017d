//! Problem documents end to end: parse a JSON problem, run its query and
//! print the JSON report. Pass a path, or run the built-in problem.
//!
//!     cargo run --example problem_file -- tests/data/plane_split.json

use nefcone::cli::execute;
use nefcone::cli::schema::ProblemDocument;

const BUILTIN: &str = r#"{
  "schema_version": "1",
  "base": {"kind": "curve", "genus": 1},
  "bundle": {"kind": "hn_curve", "blocks": [{"rank": 1, "slope": "3/1"}, {"rank": 1, "slope": "1/2"}]},
  "divisor": {"m": 2, "N": ["1/1"]},
  "query": "verify"
}"#;

pub fn main() -> Result<(), String> {
    run(std::env::args().nth(1).as_deref())
}

/// Runs the problem at `path`, or the built-in one; fails unless the
/// report's exit code is 0.
pub fn run(path: Option<&str>) -> Result<(), String> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}"))?,
        None => BUILTIN.to_string(),
    };
    let doc = ProblemDocument::parse(&text).map_err(|e| e.to_string())?;
    let report = execute("verify", doc, None, true);
    print!("{}", report.summary());
    println!("{}", report.canonical_json());
    match report.exit_code {
        0 => Ok(()),
        code => Err(format!("exit code {code}")),
    }
}
