use serde_json::Value;

use poset_trace_web::{analyze, locus, member};

const BOWTIE: &str = r#"{"elements": ["a1", "a2", "x", "b1", "b2"],
    "covers": [["a1", "x"], ["x", "b1"], ["a1", "b2"], ["a2", "b1"], ["a2", "b2"]]}"#;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn analyze_lays_out_levels() {
    let r = parse(analyze(BOWTIE));
    assert_eq!(r["ok"], true);
    assert_eq!(r["hasse"]["levels"], 3);
    assert_eq!(r["hasse"]["edges"].as_array().unwrap().len(), 5);
    assert_eq!(r["classification"]["gorenstein"], false);
}

#[test]
fn member_highlights_witness() {
    let point = r#"{"degree": 1, "values": {"a1": 1, "a2": 1, "x": 1, "b1": 1, "b2": 1}}"#;
    let r = parse(member(BOWTIE, point, "order", false));
    assert_eq!(r["member"], false);
    assert!(!r["highlight"].as_array().unwrap().is_empty());
}

#[test]
fn locus_both_rings() {
    let r = parse(locus(BOWTIE));
    assert_eq!(r["order"]["dimension"], 2);
    assert_eq!(r["chain"]["dimension"], 2);
}

#[test]
fn errors_are_reported() {
    let r = parse(analyze("{"));
    assert_eq!(r["ok"], false);
    let r = parse(member(BOWTIE, r#"{"degree": 0}"#, "hibi", false));
    assert_eq!(r["ok"], false);
}
