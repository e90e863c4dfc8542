//! Browser bindings. Every export takes plain numbers and strings and
//! returns a JSON string, so the page needs no generated TypeScript glue.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use fusion_core::centralizers::{c_f_of, CentralizerData};
use fusion_core::config::Config;
use fusion_core::corpus::{bundled, bundled_entry};
use fusion_core::fusion::FusionSystem;
use fusion_core::verify::normal_pairs;

fn system(key: &str, prime: u64) -> Result<FusionSystem, String> {
    let entry = bundled_entry(key).ok_or_else(|| format!("unknown group {key}"))?;
    let g = entry.file.ingest(Config::default().group_cap).map_err(|e| e.to_string())?;
    FusionSystem::of_group(&g, &g.sylow_subgroup(prime), prime, Config::default().lattice_cap).map_err(|e| e.to_string())
}

pub fn corpus_value() -> Value {
    bundled()
        .iter()
        .map(|e| json!({ "key": e.key, "name": e.file.name, "primes": e.file.primes }))
        .collect()
}

/// Subgroup flags, the Alperin family and the normal subsystems available
/// to [`centralizer_value`].
pub fn classify_value(key: &str, prime: u64) -> Result<Value, String> {
    let f = system(key, prime)?;
    let amb = f.amb();
    let family = f.alperin_family();
    let subgroups: Vec<Value> = f
        .classify()
        .subgroups
        .iter()
        .map(|(p, fl)| {
            json!({
                "id": p,
                "label": amb.describe(*p),
                "order": amb.order(*p),
                "auts": f.auts(*p).len(),
                "fully_normalized": fl.fully_normalized,
                "fully_centralized": fl.fully_centralized,
                "centric": fl.centric,
                "radical": fl.radical,
                "alperin": family.contains(p),
            })
        })
        .collect();
    let normals: Vec<Value> = normal_pairs(&f)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|(label, e)| json!({ "label": label, "support_order": amb.order(e.support()) }))
        .collect();
    Ok(json!({
        "summary": f.summary(),
        "saturated": f.is_saturated(),
        "subgroups": subgroups,
        "normals": normals,
    }))
}

/// Centralizer data of the `index`-th normal subsystem listed by
/// [`classify_value`].
pub fn centralizer_value(key: &str, prime: u64, index: usize) -> Result<Value, String> {
    let f = system(key, prime)?;
    let amb = f.amb();
    let pairs = normal_pairs(&f).map_err(|e| e.to_string())?;
    let (label, e) = pairs.get(index).ok_or("no such normal subsystem")?;
    let data = CentralizerData::compute(&f, e).map_err(|e| e.to_string())?;
    let cfe = c_f_of(&f, e).map_err(|e| e.to_string())?;
    Ok(json!({
        "subsystem": label,
        "support": amb.describe(e.support()),
        "centralized": data.centralized.iter().map(|&x| amb.describe(x)).collect::<Vec<_>>(),
        "c_s_e": amb.describe(data.c_s_e),
        "r_star": amb.describe(data.r_star),
        "model_order": data.model_order,
        "normal_model_order": data.normal_model_order,
        "c_f_e": cfe.summary(),
        "c_f_e_saturated": cfe.is_saturated(),
    }))
}

/// The morphisms out of subgroup `p`, for picking one to factor.
pub fn morphisms_value(key: &str, prime: u64, p: usize) -> Result<Value, String> {
    let f = system(key, prime)?;
    if p >= f.amb().num_subgroups() {
        return Err("no such subgroup".into());
    }
    Ok(f.homs_from(p).iter().map(|m| Value::String(m.describe(f.amb()))).collect())
}

/// Factors the `index`-th morphism out of subgroup `p` through
/// automorphisms of fully normalized centric radical subgroups.
pub fn alperin_value(key: &str, prime: u64, p: usize, index: usize) -> Result<Value, String> {
    let f = system(key, prime)?;
    let amb = f.amb();
    if p >= amb.num_subgroups() {
        return Err("no such subgroup".into());
    }
    let phi = f.homs_from(p).get(index).ok_or("no such morphism")?;
    let fact = f.alperin_decompose(phi).map_err(|e| e.to_string())?;
    let steps: Vec<Value> = fact
        .steps
        .iter()
        .map(|s| {
            json!({
                "member": amb.describe(s.member),
                "automorphism": s.automorphism.describe(amb),
                "from": amb.describe(s.from),
                "to": amb.describe(s.to),
            })
        })
        .collect();
    Ok(json!({
        "morphism": phi.describe(amb),
        "steps": steps,
        "recomposes": fact.recompose(amb) == *phi,
    }))
}

fn out(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn corpus() -> String {
    corpus_value().to_string()
}

#[wasm_bindgen]
pub fn classify(key: &str, prime: u32) -> Result<String, JsValue> {
    out(classify_value(key, prime.into()))
}

#[wasm_bindgen]
pub fn centralizer(key: &str, prime: u32, index: usize) -> Result<String, JsValue> {
    out(centralizer_value(key, prime.into(), index))
}

#[wasm_bindgen]
pub fn morphisms(key: &str, prime: u32, p: usize) -> Result<String, JsValue> {
    out(morphisms_value(key, prime.into(), p))
}

#[wasm_bindgen]
pub fn alperin(key: &str, prime: u32, p: usize, index: usize) -> Result<String, JsValue> {
    out(alperin_value(key, prime.into(), p, index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_round_trip() {
        assert!(corpus_value().as_array().unwrap().iter().any(|e| e["key"] == "s4"));
        let c = classify_value("s4", 2).unwrap();
        assert_eq!(c["saturated"], true);
        let normals = c["normals"].as_array().unwrap();
        let a4 = normals.iter().position(|n| n["label"].as_str().unwrap().contains("|N|=12")).unwrap();
        let v = centralizer_value("s4", 2, a4).unwrap();
        assert_eq!(v["model_order"], 24);
        assert!(v["c_s_e"].as_str().unwrap().ends_with("order 1"));
    }

    #[test]
    fn every_morphism_of_d8_recomposes() {
        let c = classify_value("d8", 2).unwrap();
        for s in c["subgroups"].as_array().unwrap() {
            let p = s["id"].as_u64().unwrap() as usize;
            let n = morphisms_value("d8", 2, p).unwrap().as_array().unwrap().len();
            for i in 0..n {
                assert_eq!(alperin_value("d8", 2, p, i).unwrap()["recomposes"], true);
            }
        }
        assert!(alperin_value("d8", 2, 0, 99).is_err());
    }
}
