//! wasm-bindgen surface for the static demo page in `www/`.
//!
//! Every export returns a JSON string; errors come back as a JS string. The
//! `*_json` functions without the wasm wrapper are plain Rust so the native
//! test suite can exercise them.

use serde::Serialize;
use wasm_bindgen::prelude::*;
use zcl_core::cuplength::{zcl_from_witness, GBound};
use zcl_core::{g_value, zcl_exact_with, SearchLimits, WitnessRecord, ZclResult};

/// Rings larger than this are refused so the page stays responsive.
pub const BROWSER_BASIS_LIMIT: u64 = 1 << 20;

fn limits() -> SearchLimits {
    SearchLimits {
        basis_limit: BROWSER_BASIS_LIMIT,
        max_candidates: 5_000_000,
    }
}

#[derive(Serialize)]
struct Answer {
    m: u32,
    s: u32,
    zcl: u32,
    upper: u32,
    g: u32,
    g_is_exact: bool,
    method: &'static str,
    witness: WitnessRecord,
    product_terms: usize,
}

impl Answer {
    fn new(r: &ZclResult) -> Result<Self, String> {
        let g = g_value(r);
        let product = r.witness.product().map_err(|e| e.to_string())?;
        Ok(Answer {
            m: r.m,
            s: r.s,
            zcl: r.value,
            upper: r.s * r.m,
            g: g.value,
            g_is_exact: matches!(g.bound, GBound::Exact),
            method: r.method.as_str(),
            witness: r.witness.to_record(),
            product_terms: product.term_count(),
        })
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Certified `zcl_s(RP^m)` with its witness.
pub fn zcl_exact_json(m: u32, s: u32) -> Result<String, String> {
    let r = zcl_exact_with(m, s, &limits()).map_err(|e| e.to_string())?;
    to_json(&Answer::new(&r)?)
}

/// The explicit witness product, or `null` when no construction applies.
pub fn witness_json(m: u32, s: u32) -> Result<String, String> {
    match zcl_from_witness(m, s, BROWSER_BASIS_LIMIT).map_err(|e| e.to_string())? {
        Some(r) => to_json(&Answer::new(&r)?),
        None => Ok("null".into()),
    }
}

#[derive(Serialize)]
struct Cell {
    m: u32,
    s: u32,
    zcl: Option<u32>,
    g: Option<u32>,
}

/// Exact `G(m, s)` for `m, s` in `1..=m_max`, `2..=s_max`; cells over the size cap are `null`.
pub fn gap_table_json(m_max: u32, s_max: u32) -> Result<String, String> {
    if m_max == 0 || s_max < 2 || m_max > 64 || s_max > 24 {
        return Err(format!("table bounds out of range: m_max={m_max}, s_max={s_max}"));
    }
    let limits = limits();
    let mut cells = Vec::new();
    for m in 1..=m_max {
        for s in 2..=s_max {
            let cell = match zcl_exact_with(m, s, &limits) {
                Ok(r) => Cell {
                    m,
                    s,
                    zcl: Some(r.value),
                    g: Some(r.g),
                },
                Err(e) if e.is_undetermined() => Cell {
                    m,
                    s,
                    zcl: None,
                    g: None,
                },
                Err(e) => return Err(e.to_string()),
            };
            cells.push(cell);
        }
    }
    to_json(&cells)
}

#[wasm_bindgen(js_name = zclExact)]
pub fn zcl_exact(m: u32, s: u32) -> Result<String, JsValue> {
    zcl_exact_json(m, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = witness)]
pub fn witness(m: u32, s: u32) -> Result<String, JsValue> {
    witness_json(m, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = gapTable)]
pub fn gap_table(m_max: u32, s_max: u32) -> Result<String, JsValue> {
    gap_table_json(m_max, s_max).map_err(|e| JsValue::from_str(&e))
}
