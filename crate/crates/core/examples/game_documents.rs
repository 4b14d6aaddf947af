//! Reading, writing and analysing JSON game documents.

use saddlescope::document::{parse_game, serialize_game};
use saddlescope::prelude::*;
use saddlescope::report::{analyze, AnalyzeOptions};

const DOCUMENT: &str = r#"{
  "name": "stag_hunt",
  "kind": "symmetric",
  "actions": ["stag", "hare"],
  "payoffs": [[4, 0], ["3/1", 3]]
}"#;

fn main() -> Result<()> {
    let doc = parse_game(DOCUMENT.as_bytes(), Tolerance::default())?;
    print!("{}", serialize_game(&doc));

    let report = analyze(&doc, &AnalyzeOptions { search_orderings: true, ..Default::default() })?;
    print!("{}", report.to_text());

    let json: serde_json::Value = serde_json::from_str(&report.to_json()).expect("reports are valid JSON");
    println!("fESS (1-based): {}", json["fess"]["fess_set"]);

    let noisy = r#"{"name": "noisy", "kind": "skew", "actions": ["a", "b"],
                    "payoffs": [[0, 1e-12], [-1e-12, 0]], "numeric": "float"}"#;
    let doc = parse_game(noisy.as_bytes(), Tolerance::default())?;
    let report = analyze(&doc, &AnalyzeOptions::default())?;
    println!("within tolerance, saddle actions: {:?}", report.symmetric_saddle_actions);

    match parse_game(br#"{"name": "x", "kind": "skew", "actions": ["a"], "payoffs": [[1]]}"#, Tolerance::default()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
