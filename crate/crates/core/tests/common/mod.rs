#![allow(dead_code)]

use realforms::embedpipe::{Embedding, EmbeddingJson};
use realforms::exactfield::FieldScalar;
use realforms::fixtures::ThetaSpec;
use realforms::polysolve::{Poly, PolySystemJson};
use realforms::realform::Involution;
use std::path::PathBuf;

pub fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(file)
}

pub fn read<T: serde::de::DeserializeOwned>(file: &str) -> T {
    let text = std::fs::read_to_string(fixture_path(file)).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn load_embedding(name: &str) -> (Embedding, Involution) {
    let js: EmbeddingJson = read(&format!("{name}.json"));
    let emb = Embedding::from_json(&js).unwrap();
    let spec: ThetaSpec = read(&format!("{name}.theta.json"));
    let th = spec.build(&emb.source).unwrap();
    (emb, th)
}

pub fn load_system(file: &str) -> (Vec<String>, Vec<Poly<FieldScalar>>) {
    let js: PolySystemJson = read(file);
    let polys = js.parse().unwrap();
    (js.variables, polys)
}
pub mod oracles;
