//! Browser explorer. Each exported function returns a JSON string; the
//! static page in `www/` renders it. The `*_json` functions are ordinary
//! Rust so they can be tested off the browser.

use fano4::cones::{self, CurveGenerator, NefRay};
use fano4::rational::{q, render, Q};
use fano4::{hodge, FamilyParams};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct FamilyEntry {
    label: String,
    i: u8,
    a: i64,
    d: i64,
}

pub fn families_json() -> String {
    let list: Vec<FamilyEntry> = fano4::enumerate_families()
        .into_iter()
        .map(|p| FamilyEntry { label: p.label(), i: p.z_id, a: p.a, d: p.d })
        .collect();
    serde_json::to_string(&list).expect("plain data serialises")
}

#[derive(Serialize)]
struct FamilyView {
    record: fano4::report::ExportRow,
    threefold: &'static str,
    kuranishi_bound: i64,
    fano_index: i64,
    anticanonical: [String; 3],
    pairing_matrix: Vec<Vec<String>>,
}

/// Full record of `X^i_{a,d}` plus its pairing matrix.
pub fn family_json(i: i64, a: i64, d: i64) -> fano4::Result<String> {
    let p = FamilyParams::new(i, a, d)?;
    let rec = fano4::build_record(&p)?;
    let view = FamilyView {
        record: (&rec).into(),
        threefold: p.threefold().description,
        kuranishi_bound: rec.tangent.kuranishi_bound,
        fano_index: rec.fano_index,
        anticanonical: cones::anticanonical(&p)?.coords.map(render),
        pairing_matrix: cones::pairing_matrix(&p)
            .iter()
            .map(|row| row.iter().map(|&v| render(v)).collect())
            .collect(),
    };
    Ok(serde_json::to_string(&view).expect("plain data serialises"))
}

#[derive(Serialize, Debug, PartialEq)]
struct SectionVertex {
    label: String,
    name: String,
    coords: [String; 3],
    /// Position in the plane `D · (sum of curve generators) = 1`.
    x: f64,
    y: f64,
    contraction: String,
}

#[derive(Serialize, Debug, PartialEq)]
struct SectionEdge {
    from: usize,
    to: usize,
    /// The curve whose orthogonal hyperplane contains this edge.
    curve: String,
}

#[derive(Serialize, Debug, PartialEq)]
struct NefSection {
    vertices: Vec<SectionVertex>,
    edges: Vec<SectionEdge>,
    anticanonical: (f64, f64),
}

fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Orders the rays around the polygon: consecutive rays share a face curve.
fn cyclic_order(rays: &[NefRay]) -> Vec<usize> {
    let mut order = vec![0];
    while order.len() < rays.len() {
        let last = &rays[*order.last().unwrap()];
        let next = (0..rays.len())
            .find(|j| {
                !order.contains(j)
                    && rays[*j].vanishing_face.iter().any(|c| last.vanishing_face.contains(c))
            })
            .expect("nef polygon is connected");
        order.push(next);
    }
    order
}

/// A planar picture of the nef cone: each ray `D` is sent to
/// `(D·F, D·F̂) / (D·Σ C)`, a projective chart in which the section is a
/// triangle or a quadrilateral.
pub fn nef_section_json(i: i64, a: i64, d: i64) -> fano4::Result<String> {
    let p = FamilyParams::new(i, a, d)?;
    Ok(serde_json::to_string(&nef_section(&p)?).expect("plain data serialises"))
}

fn nef_section(p: &FamilyParams) -> fano4::Result<NefSection> {
    let curves = cones::ne_generator_kinds(p);
    let chart = |div: &cones::DivisorClass| {
        let w: Q = curves.iter().map(|&c| cones::pair_generator(div, c)).sum();
        let x = cones::pair_generator(div, CurveGenerator::F) / w;
        let y = cones::pair_generator(div, CurveGenerator::FHat) / w;
        (to_f64(x), to_f64(y))
    };

    let rays = cones::nef_rays(p);
    let order = cyclic_order(&rays);
    let vertices: Vec<SectionVertex> = order
        .iter()
        .map(|&j| {
            let r = &rays[j];
            let (x, y) = chart(&r.generator);
            SectionVertex {
                label: format!("{:?}", r.label),
                name: r.name.clone(),
                coords: r.generator.coords.map(render),
                x,
                y,
                contraction: format!("{:?}", r.contraction),
            }
        })
        .collect();

    let n = order.len();
    let edges = (0..n)
        .map(|k| {
            let (u, v) = (&rays[order[k]], &rays[order[(k + 1) % n]]);
            let shared = u
                .vanishing_face
                .iter()
                .find(|c| v.vanishing_face.contains(c))
                .expect("adjacent rays share a face");
            SectionEdge { from: k, to: (k + 1) % n, curve: shared.to_string() }
        })
        .collect();

    let k = cones::anticanonical(p)?;
    debug_assert!(curves.iter().all(|&c| cones::pair_generator(&k, c) > q(0)));
    Ok(NefSection { vertices, edges, anticanonical: chart(&k) })
}

#[derive(Serialize)]
struct Diamond {
    /// `rows[k]` lists `h^{p,q}` with `p + q = k`, ordered by decreasing `p`.
    rows: Vec<Vec<u64>>,
    betti: Vec<u64>,
    surface: hodge::SurfaceHodge,
}

/// Hodge diamond of `X^i_{a,d}`; it depends only on `i` and `d`.
pub fn hodge_diamond_json(i: i64, d: i64) -> fano4::Result<String> {
    let z = fano4::catalog::threefold(i)?;
    let e = hodge::fourfold_polynomial(z, d)?;
    let rows = (0..=8u32)
        .map(|k| {
            (0..=k)
                .rev()
                .filter(|&pp| pp <= 4 && k - pp <= 4)
                .map(|pp| e.coeff(pp, k - pp))
                .collect()
        })
        .collect();
    let diamond = Diamond {
        rows,
        betti: (0..=8).map(|k| e.betti(k)).collect(),
        surface: hodge::SurfaceHodge::of(z, d)?,
    };
    Ok(serde_json::to_string(&diamond).expect("plain data serialises"))
}

fn js_err(e: fano4::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

#[wasm_bindgen(js_name = families)]
pub fn families_js() -> String {
    families_json()
}

#[wasm_bindgen(js_name = family)]
pub fn family_js(i: i32, a: i32, d: i32) -> Result<String, JsValue> {
    family_json(i.into(), a.into(), d.into()).map_err(js_err)
}

#[wasm_bindgen(js_name = nefSection)]
pub fn nef_section_js(i: i32, a: i32, d: i32) -> Result<String, JsValue> {
    nef_section_json(i.into(), a.into(), d.into()).map_err(js_err)
}

#[wasm_bindgen(js_name = hodgeDiamond)]
pub fn hodge_diamond_js(i: i32, d: i32) -> Result<String, JsValue> {
    hodge_diamond_json(i.into(), d.into()).map_err(js_err)
}
