//! WebAssembly bindings behind `www/index.html`.
//!
//! Each binding returns a JSON string. The `*_json` functions hold the
//! logic and are plain Rust, so they can be tested natively.

use ocgroup::chartab::{dixon_character_table, DEFAULT_CHARACTER_CAP};
use ocgroup::construct::{builtin, parse_group_file};
use ocgroup::lemma24;
use ocgroup::{Error, GroupReport, PermGroup};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest group the page will enumerate; keeps the tab responsive.
pub const PAGE_CAP: usize = 50_000;

/// A builtin name (with or without `builtin:`) or the text of a group file.
pub fn load(source: &str) -> Result<PermGroup, Error> {
    let s = source.trim();
    let g = if s.starts_with("degree") || s.starts_with('#') {
        parse_group_file(s)?
    } else {
        builtin(s.strip_prefix("builtin:").unwrap_or(s))?
    };
    if g.order() > PAGE_CAP as u128 {
        return Err(Error::TooLarge { order: g.order(), cap: PAGE_CAP });
    }
    Ok(g.with_cap(PAGE_CAP))
}

fn label(source: &str) -> String {
    let s = source.trim();
    if s.starts_with("degree") || s.starts_with('#') {
        "custom".into()
    } else {
        s.strip_prefix("builtin:").unwrap_or(s).to_string()
    }
}

pub fn analyze_json(source: &str) -> Result<String, Error> {
    let g = load(source)?;
    let report = GroupReport::analyze(label(source), &g)?;
    Ok(serde_json::to_string(&report).expect("serialisable"))
}

#[derive(Serialize)]
struct TableView {
    text: String,
    degrees: Vec<u64>,
    rational_characters: usize,
    rational_classes: usize,
    rows_orthogonal: bool,
    columns_orthogonal: bool,
}

pub fn character_table_json(source: &str) -> Result<String, Error> {
    let g = load(source)?;
    if g.order() > DEFAULT_CHARACTER_CAP as u128 {
        return Err(Error::TooLarge { order: g.order(), cap: DEFAULT_CHARACTER_CAP });
    }
    let t = dixon_character_table(&g)?;
    let (rational_characters, rational_classes) = ocgroup::chartab::rationality_counts(&t);
    let view = TableView {
        text: t.to_text(),
        degrees: t.degrees(),
        rational_characters,
        rational_classes,
        rows_orthogonal: t.rows_orthogonal(),
        columns_orthogonal: t.columns_orthogonal(),
    };
    Ok(serde_json::to_string(&view).expect("serialisable"))
}

#[derive(Serialize)]
struct PairsView {
    table: std::collections::BTreeMap<u64, Vec<u32>>,
    pairs: usize,
    matches_expected: bool,
}

pub fn lemma24_json(q_max: u32, r_max: u32) -> Result<String, Error> {
    if !(2..=100_000).contains(&q_max) || !(2..=64).contains(&r_max) {
        return Err(Error::InvalidParameter("need 2 <= q_max <= 100000 and 2 <= r_max <= 64".into()));
    }
    let pairs = lemma24::admissible_pairs(q_max as u64, r_max);
    let table = lemma24::to_table(&pairs);
    let view = PairsView {
        matches_expected: table == lemma24::expected_table(),
        pairs: pairs.len(),
        table,
    };
    Ok(serde_json::to_string(&view).expect("serialisable"))
}

fn js(r: Result<String, Error>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn analyze(source: &str) -> Result<String, JsError> {
    js(analyze_json(source))
}

#[wasm_bindgen]
pub fn character_table(source: &str) -> Result<String, JsError> {
    js(character_table_json(source))
}

#[wasm_bindgen]
pub fn lemma24_table(q_max: u32, r_max: u32) -> Result<String, JsError> {
    js(lemma24_json(q_max, r_max))
}

#[wasm_bindgen]
pub fn builtin_names() -> String {
    ocgroup::construct::BUILTIN_NAMES.join(" ")
}
