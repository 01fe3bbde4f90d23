//! Browser bindings. Every function takes JSON text and returns JSON text
//! of the form `{"ok": true, ...}` or `{"ok": false, "error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use poset_trace::io::{classification_json, label_json, membership_json, parse_point, parse_poset};
use poset_trace::locus::{locus_dimension, radical_decomposition};
use poset_trace::trace::classify;
use poset_trace::{Analysis, Poset, Ring};

fn reply(r: Result<Value, String>) -> String {
    match r {
        Ok(Value::Object(mut m)) => {
            m.insert("ok".into(), json!(true));
            Value::Object(m).to_string()
        }
        Ok(other) => json!({"ok": true, "value": other}).to_string(),
        Err(e) => json!({"ok": false, "error": e}).to_string(),
    }
}

fn load(text: &str) -> Result<(Poset, Vec<String>), String> {
    let (p, w) = parse_poset(text).map_err(|e| e.to_string())?;
    Ok((p, w.iter().map(|w| w.to_string()).collect()))
}

/// Element names mentioned anywhere in `v`, sentinels left out.
fn names_in(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) if s != "-inf" && s != "inf" => {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        Value::Array(a) => a.iter().for_each(|x| names_in(x, out)),
        Value::Object(m) => m.iter().filter(|(k, _)| *k != "kind").for_each(|(_, x)| names_in(x, out)),
        _ => {}
    }
}

/// Levels by longest chain from below; within a level, order by the mean
/// position of lower covers so edges cross less.
fn hasse(p: &Poset) -> Value {
    let n = p.len();
    let levels: Vec<usize> = (0..n).map(|x| p.height(x)).collect();
    let depth = levels.iter().copied().max().map_or(0, |m| m + 1);
    let mut pos = vec![0.0f64; n];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); depth];
    for x in 0..n {
        rows[levels[x]].push(x);
    }
    for row in rows.iter_mut() {
        let key = |x: usize| {
            let below = p.lower_covers(x);
            if below.is_empty() {
                x as f64
            } else {
                below.iter().map(|&y| pos[y]).sum::<f64>() / below.len() as f64
            }
        };
        row.sort_by(|&a, &b| key(a).total_cmp(&key(b)).then(a.cmp(&b)));
        let w = row.len() as f64;
        for (i, &x) in row.iter().enumerate() {
            pos[x] = (i as f64 + 0.5) / w;
        }
    }
    let nodes: Vec<Value> = (0..n).map(|x| json!({"name": p.name(x), "x": pos[x], "level": levels[x]})).collect();
    let edges: Vec<Value> = p.cover_pairs().iter().map(|&(x, y)| json!([x, y])).collect();
    json!({"nodes": nodes, "edges": edges, "levels": depth})
}

/// Hasse layout and classification of a poset file.
#[wasm_bindgen]
pub fn analyze(poset: &str) -> String {
    reply((|| {
        let (p, warnings) = load(poset)?;
        let classification = classify(&p).ok().map(|c| classification_json(&c));
        Ok(json!({"warnings": warnings, "hasse": hasse(&p), "classification": classification}))
    })())
}

/// Membership of a point in the radical of the trace, with the elements
/// of any witness listed under `highlight`.
#[wasm_bindgen]
pub fn member(poset: &str, point: &str, ring: &str, certificate: bool) -> String {
    reply((|| {
        let (p, _) = load(poset)?;
        let ring: Ring = ring.parse().map_err(|e: poset_trace::Error| e.to_string())?;
        let x = parse_point(&p, point).map_err(|e| e.to_string())?;
        let m = Analysis::new(p.clone()).member(ring, &x, certificate).map_err(|e| e.to_string())?;
        let mut r = membership_json(&p, &m);
        let mut highlight = Vec::new();
        if let Some(w) = r.get("witness") {
            names_in(w, &mut highlight);
        }
        r["highlight"] = json!(highlight);
        Ok(r)
    })())
}

/// Locus dimension and primes over the trace for both rings.
#[wasm_bindgen]
pub fn locus(poset: &str) -> String {
    reply((|| {
        let (p, _) = load(poset)?;
        let a = Analysis::new(p.clone());
        let mut r = json!({});
        for (key, ring) in [("order", Ring::Order), ("chain", Ring::Chain)] {
            let primes: Vec<Value> = radical_decomposition(&a, ring)
                .iter()
                .map(|l| {
                    let mut v = label_json(&p, l);
                    let mut highlight = Vec::new();
                    names_in(&v["data"], &mut highlight);
                    v["highlight"] = json!(highlight);
                    v
                })
                .collect();
            r[key] = json!({"dimension": locus_dimension(&a, ring), "primes": primes});
        }
        Ok(r)
    })())
}
