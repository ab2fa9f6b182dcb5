//! Browser bindings for the demo page in `www/`.
//!
//! Each export returns a JSON string; the plain functions are also callable
//! natively so they can be tested without a browser.

use eaforge::code::LinearCode;
use eaforge::construct::{cyclic_mds_lcd, grs_hull_family};
use eaforge::field::Field;
use eaforge::forge::code_info;
use eaforge::linalg::Matrix;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Smaller than the CLI default so the page stays responsive.
pub const BUDGET: u64 = 1 << 20;

/// Per-k hull dimensions of the GRS family over GF(q^2) with redundancy `r`.
pub fn hull_table(q: u32, r: usize, extra_point: bool) -> Result<Value, String> {
    let rep = grs_hull_family(q, r, extra_point, BUDGET).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = rep
        .table
        .unwrap_or_default()
        .iter()
        .map(|row| {
            json!({
                "k": row.k,
                "hull": row.hull,
                "delta": row.delta,
                "eaqecc": row.eaqecc.to_string(),
                "eaqecc_dual": row.eaqecc_dual.to_string(),
                "mds": row.eaqecc.is_mds(),
            })
        })
        .collect();
    Ok(json!({ "n": rows.len().saturating_sub(1), "rows": rows }))
}

/// The cyclic `[q + 1, k]` MDS LCD code and its maximal-entanglement EAQECC.
pub fn mds_lcd(q: u32, k: usize) -> Result<Value, String> {
    let rep = cyclic_mds_lcd(q, k, BUDGET).map_err(|e| e.to_string())?;
    let ea = rep.eaqecc.as_ref().unwrap();
    Ok(json!({
        "eaqecc": ea.to_string(),
        "eaqecc_dual": rep.eaqecc_dual.as_ref().unwrap().to_string(),
        "mds": ea.is_mds(),
        "generator": rep.witnesses["g"],
        "defining_set": rep.witnesses["defining_set"],
        "matrix": rep.output_code.as_ref().unwrap().matrix,
        "claims_ok": rep.blocking_mismatches().is_empty(),
    }))
}

/// Summary of the code generated by whitespace-separated rows over GF(q).
pub fn matrix_info(q: u32, text: &str) -> Result<String, String> {
    let f = Field::with_order(q).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| format!("row {i}: `{t}` is not an integer")))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let cols = rows.first().map(Vec::len).ok_or("empty matrix")?;
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(format!("row {i} has {} entries, expected {cols}", rows[i].len()));
    }
    let code = Matrix::from_rows(&f, cols, &rows)
        .and_then(|m| LinearCode::from_generator(&m))
        .and_then(|c| code_info(&c, BUDGET))
        .map_err(|e| e.to_string())?;
    Ok(code.to_string())
}

#[wasm_bindgen(js_name = hullTable)]
pub fn hull_table_js(q: u32, r: usize, extra_point: bool) -> Result<String, JsError> {
    hull_table(q, r, extra_point).map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = mdsLcd)]
pub fn mds_lcd_js(q: u32, k: usize) -> Result<String, JsError> {
    mds_lcd(q, k).map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = matrixInfo)]
pub fn matrix_info_js(q: u32, text: &str) -> Result<String, JsError> {
    matrix_info(q, text).map_err(|e| JsError::new(&e))
}
