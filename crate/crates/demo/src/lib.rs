//! Browser bindings: height reduction of a word, octads through a point set,
//! and the standard Weber hexad with its pentahedral dictionary.

use hessian_lattice::autgroup::{catalog, parse_word, reduce_height};
use hessian_lattice::golay::{self, PointSet};
use hessian_lattice::weber;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error(e: impl ToString) -> Value {
    json!({ "error": e.to_string() })
}

pub fn reduction(word: &str) -> Value {
    let g = match parse_word(catalog(), word) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    match reduce_height(&g) {
        Ok((r, _)) => json!({ "word": r.word, "heights": r.heights, "residual": r.residual }),
        Err(e) => error(e),
    }
}

pub fn octads(points: &str) -> Value {
    let set = match PointSet::parse(points) {
        Ok(s) => s,
        Err(e) => return error(e),
    };
    match golay::octads_through(set) {
        Ok(list) => {
            let shown: Vec<String> = list.iter().take(100).map(|o| o.set().to_string()).collect();
            json!({ "count": list.len(), "octads": shown })
        }
        Err(e) => error(e),
    }
}

pub fn hexad() -> Value {
    let h = weber::standard_hexad();
    let profile = match weber::hexad_profile(&h) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let (orbit, stabilizer, _) = weber::hexad_orbit_data(&h);
    let d = weber::standard_dictionary();
    let label = |m: &std::collections::BTreeMap<weber::TwoTorsion, weber::FaceSet>| -> Vec<Value> {
        m.iter().map(|(k, f)| json!([k.label(), f.label()])).collect()
    };
    json!({
        "hexad": h.0.iter().map(|p| p.label()).collect::<Vec<_>>(),
        "ten": profile.ten.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "five": profile.five_sets.iter().map(|s| s.iter().map(|t| t.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "orbit": orbit,
        "stabilizer": stabilizer,
        "lines": label(&d.lines),
        "nodes": label(&d.nodes),
    })
}

#[wasm_bindgen]
pub fn reduce_word(word: &str) -> String {
    reduction(word).to_string()
}

#[wasm_bindgen]
pub fn octads_through(points: &str) -> String {
    octads(points).to_string()
}

#[wasm_bindgen]
pub fn weber_hexad() -> String {
    hexad().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operations() {
        assert_eq!(reduction("p16")["heights"], json!(["28", "20"]));
        assert!(reduction("nope").get("error").is_some());
        assert_eq!(octads("∞,0,1,2,3")["count"], 1);
        assert_eq!(octads("∞,0")["count"], 77);
        assert_eq!(hexad()["stabilizer"], 60);
    }
}
