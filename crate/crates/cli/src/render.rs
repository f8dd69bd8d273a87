use std::fmt::Write as _;

use fano4::cones::{self, CurveGenerator};
use fano4::rational::{q, render};
use fano4::{FamilyParams, FamilyRecord};

fn bound(name: &str, exact: Option<i64>, upper: i64) -> String {
    match exact {
        Some(v) => format!("{name} = {v}"),
        None => format!("{name} <= {upper}"),
    }
}

pub fn info(rec: &FamilyRecord) -> String {
    let z = rec.params.threefold();
    let t = &rec.tangent;
    let mut s = String::new();
    let _ = writeln!(s, "{}  over Z{} ({})", rec.label, z.id, z.description);
    let _ = writeln!(s, "  i_Z = {}, H^3 = {}, a = {}, d = {}", z.index, z.degree, rec.params.a, rec.params.d);
    let _ = writeln!(s, "  K^4 = {}", rec.k4);
    let _ = writeln!(s, "  K^2.c2 = {}", rec.k2c2);
    let _ = writeln!(s, "  h0(-K) = {}", rec.h0_anti_k);
    let _ = writeln!(s, "  h12 = {}, h13 = {}, h22 = {}", rec.hodge.h12, rec.hodge.h13, rec.hodge.h22);
    let _ = writeln!(s, "  Bs|-K| = {} (general member smooth: {})", rec.base_locus.kind, rec.base_locus.general_member_smooth);
    let _ = write!(s, "  rationality: {}", rec.rationality);
    if let Some(label) = rec.toric_label {
        let _ = write!(s, " ({label:?} in Batyrev's list; rational)");
    }
    s.push('\n');
    let _ = writeln!(s, "  fibre-like: {:?}", rec.fibre_like);
    let _ = writeln!(s, "  chi(T) = {}, {}, {}", t.chi, bound("h0(T)", t.h0_exact, t.h0_upper), bound("h1(T)", t.h1_exact, t.h1_upper));
    let _ = writeln!(s, "  Kuranishi bound h1(T_Z) + h0(O_Z(d)) - 1 = {}", t.kuranishi_bound);
    let _ = writeln!(s, "  index i_X = {}, rho_X = 3", rec.fano_index);
    s
}

pub fn cones(p: &FamilyParams) -> fano4::Result<String> {
    let mut s = String::new();
    let matrix = cones::pairing_matrix(p);
    let _ = writeln!(s, "pairing matrix (rows phi*H, G^, E; columns F, F^, C_G, C_G^):");
    for (name, row) in ["phi*H", "G^", "E"].iter().zip(matrix) {
        let cells: Vec<String> = row.iter().map(|&v| format!("{:>4}", render(v))).collect();
        let _ = writeln!(s, "  {name:<6}{}", cells.join(""));
    }

    let k = cones::anticanonical(p)?;
    let ne = cones::ne_generator_kinds(p);
    let _ = writeln!(s, "NE generators:");
    for &c in &ne {
        let _ = writeln!(s, "  {c:<5} -K.{c} = {}", render(cones::pair_generator(&k, c)));
    }
    let rel = cones::curve_relation(p)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (g, c) in CurveGenerator::ALL.iter().zip(rel) {
        let side = if c > q(0) { &mut lhs } else { &mut rhs };
        match if c < q(0) { -c } else { c } {
            m if m == q(0) => {}
            m if m == q(1) => side.push(g.to_string()),
            m => side.push(format!("{}·{g}", render(m))),
        }
    }
    let _ = writeln!(s, "curve relation: {} = {}", lhs.join(" + "), rhs.join(" + "));

    let _ = writeln!(s, "nef rays (coordinates over phi*H, G^, E):");
    for ray in cones::nef_rays(p) {
        let face: Vec<&str> = ray.vanishing_face.iter().map(|c| c.name()).collect();
        let _ = writeln!(
            s,
            "  {:?} = [{}] {}  face {{{}}}  {:?}",
            ray.label,
            ray.name,
            ray.generator,
            face.join(", "),
            ray.contraction
        );
    }
    let alt = k.to_alternate_basis().map(render);
    let _ = writeln!(s, "-K_X = {} over (phi*H, G^, E) = ({}, {}, {}) over (phi*H, G, E^)", k, alt[0], alt[1], alt[2]);
    let _ = writeln!(s, "-K_X ample: {}", cones::is_ample(&k));
    Ok(s)
}
