//! Browser bindings for three interactive views: overlaid histograms of
//! ln d² and ln c, the angle curve, and a coadjoint-orbit report. Each entry
//! point returns a JSON string that `www/app.js` draws on a canvas.

use repstat_core::kirillov::{kirillov_report, NilAlgebra, Preset};
use repstat_core::symstats::{angle_report, histogram_in_range, Sweep, DEFAULT_CAP};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest group order the orbit view will enumerate in the browser.
pub const ORBIT_ORDER_LIMIT: u64 = 200_000;
pub const ANGLE_NMAX_LIMIT: usize = 400;
pub const BINS_LIMIT: usize = 200;

/// Histograms of ln d² and ln c over the partitions of `n`, on shared bin
/// edges so the two can be overlaid.
pub fn histograms(n: usize, bins: usize) -> Result<String, String> {
    if bins == 0 || bins > BINS_LIMIT {
        return Err(format!("bins must be in 1..={BINS_LIMIT}"));
    }
    let sweep = Sweep::compute(n, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let dims: Vec<f64> = sweep.records().iter().map(|r| r.log_dim_sq).collect();
    let classes: Vec<f64> = sweep.records().iter().map(|r| r.log_class).collect();
    let lo = dims
        .iter()
        .chain(&classes)
        .copied()
        .fold(f64::INFINITY, f64::min);
    let hi = dims
        .iter()
        .chain(&classes)
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, lo + 0.5)
    };
    let hd = histogram_in_range(&dims, bins, lo, hi).map_err(|e| e.to_string())?;
    let hc = histogram_in_range(&classes, bins, lo, hi).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "partitions": dims.len(),
        "edges": hd.bin_edges,
        "dim_sq": hd.counts,
        "class": hc.counts,
    })
    .to_string())
}

/// ln(cos²) between the dimension vector and the all-ones vector, with the
/// asymptotic prediction, for n = 1..=nmax.
pub fn angle_curve(nmax: usize) -> Result<String, String> {
    if nmax == 0 || nmax > ANGLE_NMAX_LIMIT {
        return Err(format!("nmax must be in 1..={ANGLE_NMAX_LIMIT}"));
    }
    let mut n_col = Vec::with_capacity(nmax);
    let mut actual = Vec::with_capacity(nmax);
    let mut predicted = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let r = angle_report(n).map_err(|e| e.to_string())?;
        n_col.push(n);
        actual.push(r.log_ratio);
        predicted.push(r.predicted_log);
    }
    Ok(json!({ "n": n_col, "log_cos_sq": actual, "predicted": predicted }).to_string())
}

pub fn orbits(alg: &str, p: u32) -> Result<String, String> {
    let preset: Preset = alg
        .parse()
        .map_err(|_| format!("unknown algebra {alg:?}"))?;
    let algebra = NilAlgebra::new(preset, p).map_err(|e| e.to_string())?;
    let order = (p as u64).saturating_pow(algebra.dim() as u32);
    if order > ORBIT_ORDER_LIMIT {
        return Err(format!(
            "group order {order} is above the in-browser limit {ORBIT_ORDER_LIMIT}"
        ));
    }
    let r = kirillov_report(&algebra);
    let strings = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>();
    Ok(json!({
        "algebra": r.algebra,
        "p": r.p,
        "dim": r.dim,
        "group_order": r.group_order.to_string(),
        "orbit_sizes": strings(&r.orbit_sizes),
        "class_sizes": strings(&r.class_sizes),
        "even_powers": r.even_powers,
        "match_kirillov": r.match_kirillov,
        "match_naive": r.match_naive,
    })
    .to_string())
}

#[wasm_bindgen(js_name = histograms)]
pub fn histograms_js(n: usize, bins: usize) -> Result<String, JsError> {
    histograms(n, bins).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = angleCurve)]
pub fn angle_curve_js(nmax: usize) -> Result<String, JsError> {
    angle_curve(nmax).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = orbits)]
pub fn orbits_js(alg: &str, p: u32) -> Result<String, JsError> {
    orbits(alg, p).map_err(|e| JsError::new(&e))
}
