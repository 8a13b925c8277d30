//! wasm-bindgen exports for the browser demo in `www/`. Every function
//! takes plain strings and returns JSON text.

use serde_json::json;
use wasm_bindgen::prelude::*;

use genomic_schur::bijection::phi;
use genomic_schur::combinatorics::par_candidates;
use genomic_schur::qsym::genomic_schur;
use genomic_schur::tableau::descent_data;
use genomic_schur::verify::{verify_theorem, VerifyOptions};
use genomic_schur::{Tableau, TwoRowPartition};

/// Shapes larger than this are refused to keep the page responsive.
const MAX_SIZE: usize = 12;

fn shape(s: &str) -> Result<TwoRowPartition, String> {
    let lambda: TwoRowPartition = s.trim().parse().map_err(|e| format!("{e}"))?;
    if lambda.size() > MAX_SIZE {
        return Err(format!("the demo handles shapes of size at most {MAX_SIZE}"));
    }
    Ok(lambda)
}

/// Fundamental expansion of every nonzero degree, with the Schur-side shapes.
#[wasm_bindgen]
pub fn expand(shape_text: &str) -> Result<String, String> {
    let lambda = shape(shape_text)?;
    let mut rows = Vec::new();
    for (m, expr) in genomic_schur(lambda) {
        let par = par_candidates(lambda, m).map_err(|e| e.to_string())?;
        rows.push(json!({
            "degree": m,
            "text": expr.to_string(),
            "expansion": expr,
            "par": par.iter().map(|(x, mu)| json!({ "x": x, "shape": mu })).collect::<Vec<_>>(),
        }));
    }
    Ok(serde_json::to_string(&rows).expect("serializable"))
}

/// Runs the bijection on a tableau written as rows separated by `/`.
#[wasm_bindgen]
pub fn phi_trace(tableau_text: &str) -> Result<String, String> {
    let t: Tableau = tableau_text.trim().parse().map_err(|e| format!("{e}"))?;
    if t.size() > 2 * MAX_SIZE {
        return Err("tableau too large".into());
    }
    let tr = phi(&t).map_err(|e| e.to_string())?;
    let out = json!({
        "trace": tr,
        "input_rows": tr.input.rows(),
        "output_rows": tr.output.rows(),
        "descents": descent_data(&tr.input).descents,
        "output_descents": descent_data(&tr.output).descents,
    });
    Ok(out.to_string())
}

/// Genome classes, filtration order and verification result for one degree.
#[wasm_bindgen]
pub fn verify(shape_text: &str, m: usize) -> Result<String, String> {
    let lambda = shape(shape_text)?;
    let report = verify_theorem(lambda, m, VerifyOptions::default()).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}
