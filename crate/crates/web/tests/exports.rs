use serde_json::Value;

use genomic_schur_web::{expand, phi_trace, verify};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn expand_lists_degrees() {
    let v = parse(expand("2,1").unwrap());
    assert_eq!(v[0]["degree"], 2);
    assert_eq!(v[0]["text"], "F(1,1)");
    assert_eq!(v[1]["text"], "F(1,2)+F(2,1)");
    assert_eq!(v[1]["par"][0]["shape"], serde_json::json!([2, 1]));
    assert!(expand("3").is_err());
    assert!(expand("13,1").is_err());
}

#[test]
fn phi_trace_of_worked_example() {
    let v = parse(phi_trace("1 2 4 5 / 2 3 5 6").unwrap());
    assert_eq!(v["trace"]["output"], "1 4 / 2 5 / 3 / 6");
    assert_eq!(v["trace"]["removed"], serde_json::json!([2, 5]));
    assert_eq!(v["trace"]["moved"], serde_json::json!([3, 6]));
    assert_eq!(v["descents"], v["output_descents"]);
    assert_eq!(v["output_rows"], serde_json::json!([[1, 4], [2, 5], [3], [6]]));
    assert!(phi_trace("1 3 / 3 4").is_err());
    assert!(phi_trace("oops").is_err());
}

#[test]
fn verify_reports_classes() {
    let v = parse(verify("3,2", 4).unwrap());
    assert_eq!(v["verified"], true);
    assert_eq!(v["families"].as_array().unwrap().len(), 2);
    assert!(verify("3,2", 9).is_err());
}
