//! Command-line front end. Every command produces a [`ReportDocument`]; the
//! binary prints its summary and optionally writes the JSON form.

pub mod fixtures;
pub mod report;
pub mod schema;
pub mod sweep;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::base::BaseVariety;
use crate::bundle::BundleDescriptor;
use crate::cones::{duality_check, is_ample, is_nef, ne_generators, nef_generators_curve_base, oracle_verdict, Margin};
use crate::error::{Error, Result};
use crate::pbundle::{adjoint_class, IntersectionRing, PEDivisorClass};
use crate::rational::{fraction_string, int};
use crate::serrano::{anti_canonical_nef, threshold, verify_conjecture, SerranoVerdict, Soundness};

use report::{cone_json, divisor_json, ReportDocument, ThresholdDoc, EXIT_INVALID, EXIT_NO, EXIT_OK, EXIT_UNKNOWN};
use schema::{ProblemDocument, Query};
use sweep::GridSpec;

#[derive(Debug, Parser)]
#[command(
    name = "nefcone",
    version,
    about = "Exact nef/ample cone and adjoint-threshold computations on projective bundles"
)]
struct Cli {
    /// Write the JSON report to this path.
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Ignore every certificate in the problem file (audit mode).
    #[arg(long, global = true)]
    no_certificates: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the query named in the problem file (usually `verify`).
    Verify { file: PathBuf },
    /// Exact adjoint threshold t0.
    Threshold { file: PathBuf },
    /// Cone generators and the nef/curve pairing.
    Cones { file: PathBuf },
    /// Nefness of -K on P(V).
    AntiCanonical { file: PathBuf },
    /// Run the embedded example corpus.
    PaperExamples,
    /// Compare the slope criterion with the toric fan on a grid.
    OracleCheck {
        /// `key=lo..hi` pairs separated by commas; keys n, r, twists, y0, gamma, den.
        #[arg(long)]
        grid: Option<String>,
    },
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let use_certs = !cli.no_certificates;
    let report = match &cli.command {
        Command::Verify { file } => run_file("verify", file, None, use_certs),
        Command::Threshold { file } => run_file("threshold", file, Some(Query::Threshold), use_certs),
        Command::Cones { file } => run_file("cones", file, Some(Query::Cones), use_certs),
        Command::AntiCanonical { file } => run_file("anti-canonical", file, Some(Query::AntiCanonical), use_certs),
        Command::PaperExamples => timed(paper_examples),
        Command::OracleCheck { grid } => timed(|| match grid.as_deref().map(GridSpec::parse).transpose() {
            Ok(g) => oracle_check(&g.unwrap_or_default()),
            Err(e) => ReportDocument::failed("oracle-check", None, &e),
        }),
    };
    print!("{}", report.summary());
    if !report.errors.is_empty() {
        eprintln!("{}", serde_json::to_string(&report.errors).expect("errors serialize"));
    }
    if let Some(out) = &cli.json {
        if let Err(e) = std::fs::write(out, report.to_json() + "\n") {
            eprintln!("cannot write {}: {e}", out.display());
            return EXIT_INVALID;
        }
    }
    report.exit_code
}

fn timed(f: impl FnOnce() -> ReportDocument) -> ReportDocument {
    let start = Instant::now();
    let mut r = f();
    r.timing.elapsed_us = start.elapsed().as_micros().try_into().unwrap_or(u64::MAX);
    r
}

fn run_file(command: &str, path: &Path, query: Option<Query>, use_certs: bool) -> ReportDocument {
    timed(|| {
        let doc = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
            .and_then(|text| ProblemDocument::parse(&text));
        match doc {
            Ok(doc) => execute(command, doc, query, use_certs),
            Err(e) => ReportDocument::failed(command, None, &e),
        }
    })
}

/// Runs a parsed problem. `query` overrides the document's own query.
pub fn execute(command: &str, doc: ProblemDocument, query: Option<Query>, use_certs: bool) -> ReportDocument {
    let query = query.unwrap_or(doc.query);
    let mut report = ReportDocument::new(command, Some(doc.clone()));
    match answer(&doc, query, use_certs, &mut report) {
        Ok(()) => report,
        Err(e) => ReportDocument::failed(command, Some(doc), &e),
    }
}

fn snake<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn answer(doc: &ProblemDocument, query: Query, use_certs: bool, out: &mut ReportDocument) -> Result<()> {
    let built = doc.build(use_certs)?;
    match query {
        Query::Verify => {
            let problem = built.serrano(doc.route)?;
            let r = verify_conjecture(&problem)?;
            out.verdict = snake(&r.verdict);
            out.exit_code = match r.verdict {
                SerranoVerdict::Verified => EXIT_OK,
                SerranoVerdict::RefutedOnFamilies | SerranoVerdict::HypothesesUnmet => EXIT_NO,
                SerranoVerdict::Unknown => EXIT_UNKNOWN,
            };
            out.threshold = r.threshold.as_ref().map(|t| ThresholdDoc::new(t, r.paper_bound));
            // margins of the adjoint class at the integer bound
            let at = doc.t.clone().unwrap_or_else(|| int(r.paper_bound));
            out.margins = r
                .conditions
                .iter()
                .map(|c| Margin {
                    label: c.label.clone(),
                    value: c.value(&at),
                })
                .collect();
            out.soundness = Some(snake(&r.soundness));
            out.route = Some(r.route.to_string());
            out.certificates = r.certificates.clone();
            out.annotations = r.annotations.clone();
            out.details = json!({
                "margins_at_t": fraction_string(&at),
                "hypotheses": r.hypotheses,
                "conditions": r.conditions,
                "direct": r.direct.as_ref().map(|d| json!({
                    "verdict": d.verdict,
                    "soundness": d.soundness,
                })),
            });
        }
        Query::Threshold => {
            let problem = built.serrano(None)?;
            let (conds, exactness) = crate::serrano::conditions(&problem)?;
            let th = threshold(&problem)?;
            out.verdict = if th.feasible {
                "feasible".into()
            } else {
                "infeasible".into()
            };
            out.exit_code = if th.feasible { EXIT_OK } else { EXIT_NO };
            out.threshold = Some(ThresholdDoc::new(&th, problem.paper_bound));
            out.soundness = Some(snake(&Soundness::from(exactness)));
            out.details = json!({ "conditions": conds });
        }
        Query::AmpleAtT => {
            let t = doc
                .t
                .clone()
                .ok_or_else(|| Error::Parse("ample_at_t needs `t`".into()))?;
            let (m, n) = built
                .divisor
                .clone()
                .ok_or_else(|| Error::Parse("ample_at_t needs a `divisor`".into()))?;
            let adj = adjoint_class(&built.base, &built.bundle, m, &n)?;
            let r = is_ample(&built.base, &built.bundle, &adj, Some(&t))?;
            out.verdict = if r.verdict { "ample".into() } else { "not_ample".into() };
            out.exit_code = if r.verdict { EXIT_OK } else { EXIT_NO };
            out.soundness = Some(snake(&Soundness::from(r.soundness)));
            if !r.verdict && r.soundness != crate::base::Exactness::ConeGenerating {
                out.exit_code = EXIT_UNKNOWN;
                out.verdict = "unknown".into();
            }
            out.margins = r.certificate;
            out.details = json!({ "class": divisor_json(&adj.evaluate(&t)) });
        }
        Query::Cones => {
            out.details = cones_details(&built.base, &built.bundle)?;
            out.verdict = "ok".into();
            for side in ["nef", "curves"] {
                if let Some(gens) = out.details[side]["generators"].as_array() {
                    let labels: Vec<&str> = gens.iter().filter_map(|g| g["label"].as_str()).collect();
                    out.annotations
                        .push(format!("{side} generators: {}", labels.join(", ")));
                }
            }
            if let Some(rows) = out.details["duality"]["matrix"].as_array() {
                out.annotations
                    .push(format!("pairing matrix: {}", Value::Array(rows.clone())));
            }
            if out.details["duality"]["dual"] == Value::Bool(false) {
                out.verdict = "duality_failed".into();
                out.exit_code = EXIT_NO;
            }
        }
        Query::AntiCanonical => {
            let r = anti_canonical_nef(&built.base, &built.bundle)?;
            out.verdict = if r.verdict { "nef".into() } else { "not_nef".into() };
            out.exit_code = if r.verdict { EXIT_OK } else { EXIT_NO };
            if r.soundness == Soundness::SufficientOnly && r.verdict {
                out.exit_code = EXIT_UNKNOWN;
                out.verdict = "unknown".into();
            }
            out.soundness = Some(snake(&r.soundness));
            out.annotations.extend(r.note.clone());
            out.details = json!({ "windows": r.windows });
        }
        Query::OracleCheck => {
            let (m, n) = built
                .divisor
                .clone()
                .ok_or_else(|| Error::Parse("oracle_check needs a `divisor`".into()))?;
            let class = PEDivisorClass::new(int(m), &n);
            let oracle = oracle_verdict(&built.base, &built.bundle, &class)?.ok_or_else(|| {
                Error::Unsupported("the toric oracle needs a split bundle over a projective space".into())
            })?;
            let nef = is_nef(&built.base, &built.bundle, &class, None)?;
            let ample = is_ample(&built.base, &built.bundle, &class, None)?;
            let agree = (nef.verdict, ample.verdict) == (oracle.nef, oracle.ample);
            out.verdict = if agree { "agree".into() } else { "disagree".into() };
            out.exit_code = if agree { EXIT_OK } else { EXIT_NO };
            out.margins = ample.certificate;
            out.details = json!({
                "class": divisor_json(&class),
                "criterion": { "nef": nef.verdict, "ample": ample.verdict },
                "oracle": {
                    "nef": oracle.nef,
                    "ample": oracle.ample,
                    "walls": oracle.margins.iter().map(|(l, v)| json!([l, fraction_string(v)])).collect::<Vec<_>>(),
                },
            });
        }
    }
    Ok(())
}

fn cones_details(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<Value> {
    let ne = ne_generators(base, bundle)?;
    let mut details = json!({ "curves": cone_json(&ne) });
    if matches!(base.kind(), crate::base::BaseKind::Curve { .. }) {
        let nef = nef_generators_curve_base(base, bundle)?;
        details["nef"] = cone_json(&nef);
        let ring = IntersectionRing::for_bundle(base, bundle)?;
        let d = duality_check(base, bundle, &ring)?;
        details["duality"] = json!({
            "nef": d.nef_labels,
            "curves": d.ne_labels,
            "matrix": d.matrix.iter().map(|row| row.iter().map(fraction_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "nonnegative": d.nonnegative,
            "dual": d.dual,
        });
    }
    Ok(details)
}

/// Runs the embedded fixture corpus.
pub fn paper_examples() -> ReportDocument {
    let results = fixtures::run_all();
    let mut r = ReportDocument::new("paper-examples", None);
    let failed: Vec<&str> = results.iter().filter(|f| !f.passed()).map(|f| f.id).collect();
    for f in &results {
        r.annotations.push(format!(
            "{} {}: {}",
            if f.passed() { "PASS" } else { "FAIL" },
            f.id,
            f.description
        ));
        for c in f.checks.iter().filter(|c| !c.pass) {
            r.annotations
                .push(format!("  {}: expected {}, got {}", c.name, c.expected, c.got));
        }
    }
    r.verdict = if failed.is_empty() {
        "all_passed".into()
    } else {
        format!("failed: {}", failed.join(", "))
    };
    r.exit_code = if failed.is_empty() { EXIT_OK } else { EXIT_NO };
    r.details = json!({ "fixtures": results });
    r
}

/// Criterion against toric oracle on a grid, plus two fixed spot checks.
pub fn oracle_check(grid: &GridSpec) -> ReportDocument {
    let mut r = ReportDocument::new("oracle-check", None);
    let sweep = match sweep::oracle_sweep(grid) {
        Ok(s) => s,
        Err(e) => return ReportDocument::failed("oracle-check", None, &e),
    };
    let spots = match spot_checks() {
        Ok(s) => s,
        Err(e) => return ReportDocument::failed("oracle-check", None, &e),
    };
    let spots_ok = spots.iter().all(|s| s["agree"] == Value::Bool(true));
    let ok = sweep.disagreements.is_empty() && spots_ok;
    r.verdict = if ok { "agree".into() } else { "disagree".into() };
    r.exit_code = if ok { EXIT_OK } else { EXIT_NO };
    r.annotations.push(format!(
        "{} bundles, {} instances, {} disagreements",
        sweep.bundles,
        sweep.instances,
        sweep.disagreements.len()
    ));
    r.details = json!({ "sweep": sweep, "spot_checks": spots });
    r
}

/// `ξ` and `0` on the Hirzebruch surface `P(O ⊕ O(1))`.
fn spot_checks() -> Result<Vec<Value>> {
    let base = BaseVariety::curve(0);
    let bundle = BundleDescriptor::split(vec![0, 1])?;
    let mut out = Vec::new();
    for (label, y0) in [("xi", 1), ("zero", 0)] {
        let class = PEDivisorClass::new(int(y0), &crate::base::BaseDivisorClass::degree(int(0)));
        let crit = (
            is_nef(&base, &bundle, &class, None)?.verdict,
            is_ample(&base, &bundle, &class, None)?.verdict,
        );
        let o = oracle_verdict(&base, &bundle, &class)?.expect("split over P^1");
        out.push(json!({
            "class": label,
            "criterion": { "nef": crit.0, "ample": crit.1 },
            "oracle": { "nef": o.nef, "ample": o.ample },
            "agree": crit == (o.nef, o.ample),
        }));
    }
    Ok(out)
}
