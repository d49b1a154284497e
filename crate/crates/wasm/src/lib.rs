//! Browser bindings: coverage of a placement, planar coordinates of a built
//! basis, and a small placement search. Every export returns JSON text.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use addbasis::coverage::{counting_bound, covered_set};
use addbasis::io::{format_placement, parse_placement, Preset};
use addbasis::search::{search, SearchConfig, SearchMode};
use addbasis::segments::{build_basis, element_origins};
use addbasis::{IntSet, Placement};

/// Largest basis the page will build (keeps the sumset interactive).
const MAX_DEMO_ELEMENTS: usize = 20_000;

fn list(s: &IntSet) -> Value {
    json!(s.as_slice())
}

fn placement(text: &str) -> Result<Placement, String> {
    parse_placement(text).map_err(|e| e.to_string())
}

pub fn preset_text_impl(name: &str) -> Result<String, String> {
    let preset: Preset = name.parse().map_err(|e: addbasis::Error| e.to_string())?;
    preset
        .placement()
        .map(|p| format_placement(&p))
        .ok_or_else(|| format!("preset `{name}` is not a segment placement"))
}

pub fn coverage_impl(text: &str) -> Result<String, String> {
    let p = placement(text)?;
    let cov = covered_set(&p);
    let (li, lj, lk) = p.part_sizes();
    let tiles: Vec<Value> = cov
        .by_rule
        .iter()
        .map(|(loc, r)| {
            json!({
                "loc": loc,
                "ij": r.square_ij,
                "ik": r.square_ik,
                "par": r.parallelogram_pair,
            })
        })
        .collect();
    Ok(json!({
        "I": list(p.i()),
        "J": list(p.j()),
        "K": list(p.k()),
        "l": p.len(),
        "m": cov.m,
        "c": cov.c.to_string(),
        "bound": counting_bound(li, lj, lk),
        "tiles": tiles,
    })
    .to_string())
}

pub fn coords_impl(text: &str, t: u64) -> Result<String, String> {
    let p = placement(text)?;
    if p.len() as u64 * (t + 1) > MAX_DEMO_ELEMENTS as u64 {
        return Err(format!("basis would exceed {MAX_DEMO_ELEMENTS} elements; lower t"));
    }
    let basis = build_basis(&p, t).map_err(|e| e.to_string())?;
    let n = basis.range_n().map_err(|e| e.to_string())?;
    let elements: Vec<Value> = element_origins(&p, t)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|o| {
            let (x, y) = o.coords(t);
            json!([o.element, x, y, o.kind.as_str(), o.location])
        })
        .collect();
    let m = covered_set(&p).m;
    Ok(json!({
        "t": t,
        "k": basis.len(),
        "n": n,
        "predicted_min_n": (m * t * t).saturating_sub(1),
        "elements": elements,
    })
    .to_string())
}

pub fn search_impl(l: u32, max_loc: u32, beam_width: u32) -> Result<String, String> {
    let mut cfg = SearchConfig::exhaustive(l, max_loc);
    if beam_width > 0 {
        cfg = cfg.with_mode(SearchMode::Beam {
            width: beam_width as usize,
        });
    } else {
        // Keep the tab responsive.
        cfg.budget_nodes = Some(2_000_000);
    }
    let out = search(&cfg).map_err(|e| e.to_string())?;
    Ok(json!({
        "best_m": out.best_m,
        "ratio": out.ratio.to_string(),
        "complete": out.complete,
        "nodes": out.nodes_expanded,
        "witness": format_placement(&out.witness),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn preset_text(name: &str) -> Result<String, JsError> {
    preset_text_impl(name).map_err(|e| JsError::new(&e))
}

/// Covered squares of a placement file text.
#[wasm_bindgen]
pub fn coverage(text: &str) -> Result<String, JsError> {
    coverage_impl(text).map_err(|e| JsError::new(&e))
}

/// Elements of the built basis with planar coordinates.
#[wasm_bindgen]
pub fn coords(text: &str, t: u32) -> Result<String, JsError> {
    coords_impl(text, t as u64).map_err(|e| JsError::new(&e))
}

/// `beam_width = 0` runs a budgeted exhaustive search.
#[wasm_bindgen]
pub fn search_placements(l: u32, max_loc: u32, beam_width: u32) -> Result<String, JsError> {
    search_impl(l, max_loc, beam_width).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn mrose_coverage() {
        let text = preset_text_impl("mrose7").unwrap();
        let v = parse(&coverage_impl(&text).unwrap());
        assert_eq!(v["m"], 14);
        assert_eq!(v["c"], "2/7");
        assert_eq!(v["bound"], 15);
    }

    #[test]
    fn coords_and_range() {
        let v = parse(&coords_impl("I: 0\nJ: 0\n", 3).unwrap());
        assert_eq!(v["k"], 5);
        assert_eq!(v["elements"][4], json!([6, 2, 0, "H", 0]));
        assert!(v["n"].as_u64().unwrap() >= v["predicted_min_n"].as_u64().unwrap());
        assert!(coords_impl("I: 0\n", 1).is_err());
    }

    #[test]
    fn small_search() {
        let v = parse(&search_impl(3, 3, 0).unwrap());
        assert_eq!(v["best_m"], 2);
        assert_eq!(v["complete"], true);
        let b = parse(&search_impl(7, 16, 8).unwrap());
        assert!(b["best_m"].as_u64().unwrap() <= 14);
    }

    #[test]
    fn errors_are_messages() {
        assert!(coverage_impl("X: 1").unwrap_err().contains("line 1"));
        assert!(preset_text_impl("simple").is_err());
    }
}
