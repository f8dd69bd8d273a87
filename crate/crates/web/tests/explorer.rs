use fano4_web::{families_json, family_json, hodge_diamond_json, nef_section_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn family_list() {
    let v = parse(families_json());
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 28);
    assert_eq!(list[0]["label"], "X^1_{0,1}");
    assert_eq!(list[27]["i"], 7);
}

#[test]
fn family_record() {
    let v = parse(family_json(7, 2, 5).unwrap());
    assert_eq!(v["record"]["K4"], 205);
    assert_eq!(v["record"]["h22"], 47);
    assert_eq!(v["record"]["h1_T"], 55);
    assert_eq!(v["record"]["h1_T_is_exact"], false);
    assert_eq!(v["fano_index"], 1);
    assert_eq!(v["anticanonical"], serde_json::json!(["2", "2", "1"]));
    assert_eq!(v["pairing_matrix"][1], serde_json::json!(["1", "0", "0", "-3"]));
}

#[test]
fn invalid_family_is_an_error() {
    assert!(family_json(1, 1, 1).is_err());
    assert!(nef_section_json(7, 4, 1).is_err());
    assert!(hodge_diamond_json(2, 3).is_err());
}

/// Twice the signed area of a polygon.
fn area2(pts: &[(f64, f64)]) -> f64 {
    (0..pts.len())
        .map(|k| {
            let (x0, y0) = pts[k];
            let (x1, y1) = pts[(k + 1) % pts.len()];
            x0 * y1 - x1 * y0
        })
        .sum()
}

#[test]
fn nef_sections_are_convex_and_contain_minus_k() {
    for fam in parse(families_json()).as_array().unwrap() {
        let (i, a, d) = (
            fam["i"].as_i64().unwrap(),
            fam["a"].as_i64().unwrap(),
            fam["d"].as_i64().unwrap(),
        );
        let s = parse(nef_section_json(i, a, d).unwrap());
        let pts: Vec<(f64, f64)> = s["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| (v["x"].as_f64().unwrap(), v["y"].as_f64().unwrap()))
            .collect();
        let four = 0 < a && a < d;
        assert_eq!(pts.len(), if four { 4 } else { 3 });
        let orient = area2(&pts).signum();
        assert!(orient != 0.0);

        // −K is ample, so it lies strictly inside every edge.
        let k = (s["anticanonical"][0].as_f64().unwrap(), s["anticanonical"][1].as_f64().unwrap());
        for e in 0..pts.len() {
            let (p0, p1) = (pts[e], pts[(e + 1) % pts.len()]);
            let next = pts[(e + 2) % pts.len()];
            let side = |q: (f64, f64)| (p1.0 - p0.0) * (q.1 - p0.1) - (p1.1 - p0.1) * (q.0 - p0.0);
            assert!(side(k) * orient > 0.0, "{}", fam["label"]);
            assert!(side(next) * orient > 0.0, "{} not convex", fam["label"]);
        }
    }
}

#[test]
fn section_edges_for_a_zero() {
    let s = parse(nef_section_json(7, 0, 1).unwrap());
    let curves: Vec<&str> = s["edges"].as_array().unwrap().iter().map(|e| e["curve"].as_str().unwrap()).collect();
    let mut sorted = curves.clone();
    sorted.sort();
    assert_eq!(sorted, vec!["C_G^", "F", "F^"]);
    assert_eq!(s["vertices"][0]["label"], "R1");
    assert_eq!(s["vertices"][0]["contraction"], "FibreType");
}

#[test]
fn hodge_diamond() {
    let v = parse(hodge_diamond_json(6, 4).unwrap());
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[4], serde_json::json!([0, 5, 54, 5, 0]));
    assert_eq!(rows[2], serde_json::json!([0, 3, 0]));
    assert_eq!(v["betti"], serde_json::json!([1, 0, 3, 0, 64, 0, 3, 0, 1]));
    assert_eq!(v["surface"]["h11"], 52);
}
