//! Browser front end for `regfact`.
//!
//! The logic lives in plain functions returning `Result<String, String>` so
//! it can be tested natively; the `#[wasm_bindgen]` wrappers only convert the
//! error into a JS exception.

use std::f64::consts::PI;
use std::fmt::Write as _;

use regfact::{Construction, EdgeSet, GroupFamily};
use serde_json::json;
use wasm_bindgen::prelude::*;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;

fn build(family: &str, param: u32) -> Result<Construction, String> {
    let family = GroupFamily::from_name(family, param).map_err(|e| e.to_string())?;
    Construction::new(family).map_err(|e| e.to_string())
}

/// Counts and generators of a construction as a JSON object.
pub fn summary_json(family: &str, param: u32) -> Result<String, String> {
    let c = build(family, param)?;
    let g = &c.group;
    let show = |s: &EdgeSet| s.iter().map(|e| e.to_string()).collect::<Vec<_>>();
    let certified = regfact::rainbow::certify(&c.trees.trees, &c.factorization).passed();
    let value = json!({
        "group": c.family.to_string(),
        "order": g.order(),
        "starterBlocks": c.starter.blocks.len(),
        "factors": c.factorization.len(),
        "trees": c.trees.len(),
        "e1": c.lemma.e1.to_string(),
        "e2": c.lemma.e2.to_string(),
        "t1": show(&c.trees.t1),
        "t2": show(&c.trees.t2),
        "certified": certified,
    });
    Ok(value.to_string())
}

/// Evenly spaced hue for colour `i` of `count`.
fn hue(i: usize, count: usize) -> f64 {
    360.0 * i as f64 / count.max(1) as f64
}

fn svg(c: &Construction, title: &str, edges: &[(regfact::Edge, usize)]) -> String {
    let g = &c.group;
    let n = g.order();
    let colours = c.factorization.len();
    let pos = |i: usize| {
        let t = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
        (SIZE / 2.0 + RADIUS * t.cos(), SIZE / 2.0 + RADIUS * t.sin())
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(out, "<title>{title}</title>");
    for &(e, colour) in edges {
        let (x1, y1) = pos(g.index(e.u()));
        let (x2, y2) = pos(g.index(e.v()));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="hsl({:.0},70%,45%)" stroke-width="2"><title>{e} colour {colour}</title></line>"#,
            hue(colour, colours)
        );
    }
    for (i, x) in g.elements().enumerate() {
        let (cx, cy) = pos(i);
        let _ = writeln!(
            out,
            r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="4" fill="black"/><text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{x}</text>"#,
            SIZE / 2.0 + (cx - SIZE / 2.0) * 1.1,
            SIZE / 2.0 + (cy - SIZE / 2.0) * 1.1 + 3.0
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Rainbow tree `index` on a circle, each edge in the colour of its factor.
pub fn tree_svg(family: &str, param: u32, index: usize) -> Result<String, String> {
    let c = build(family, param)?;
    let tree = c
        .trees
        .trees
        .get(index)
        .ok_or_else(|| format!("tree {index} out of range (0..{})", c.trees.len()))?;
    let edges: Vec<_> = tree
        .iter()
        .map(|&e| {
            (
                e,
                c.factorization
                    .factor_of(e)
                    .expect("tree edges are coloured"),
            )
        })
        .collect();
    Ok(svg(&c, &format!("{} tree {index}", c.family), &edges))
}

/// One-factor `index` on a circle.
pub fn factor_svg(family: &str, param: u32, index: usize) -> Result<String, String> {
    let c = build(family, param)?;
    let factor = c
        .factorization
        .factors
        .get(index)
        .ok_or_else(|| format!("factor {index} out of range (0..{})", c.factorization.len()))?;
    let edges: Vec<_> = factor.iter().map(|&e| (e, index)).collect();
    Ok(svg(&c, &format!("{} factor {index}", c.family), &edges))
}

#[wasm_bindgen(js_name = summary)]
pub fn summary_js(family: &str, param: u32) -> Result<String, JsError> {
    summary_json(family, param).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = treeSvg)]
pub fn tree_svg_js(family: &str, param: u32, index: usize) -> Result<String, JsError> {
    tree_svg(family, param, index).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = factorSvg)]
pub fn factor_svg_js(family: &str, param: u32, index: usize) -> Result<String, JsError> {
    factor_svg(family, param, index).map_err(|e| JsError::new(&e))
}
