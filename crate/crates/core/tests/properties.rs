use fano4::catalog::{catalog, enumerate_families, validate_params, FamilyParams};
use fano4::cones::{self, CurveGenerator, DivisorClass};
use fano4::hodge::{self, HodgePolynomial};
use fano4::intersect;
use fano4::rational::{frac, Q};
use proptest::prelude::*;

#[test]
fn enumeration_is_exactly_the_admissible_small_grid() {
    let fams = enumerate_families();
    for z in catalog() {
        let bound = 4 * z.index;
        for a in 0..=bound {
            for d in 1..=bound {
                let listed = fams.contains(&FamilyParams::unchecked(z.id, a, d));
                let valid = validate_params(i64::from(z.id), a, d).unwrap();
                assert_eq!(listed, valid, "Z{} a={a} d={d}", z.id);
                if listed {
                    assert!(d <= 2 * z.index - 2);
                }
            }
        }
    }
    let mut dedup = fams.clone();
    dedup.dedup();
    assert_eq!(dedup.len(), fams.len());
    let mut sorted = fams.clone();
    sorted.sort();
    assert_eq!(sorted, fams);
}

#[test]
fn hodge_numbers_do_not_depend_on_a() {
    let fams = enumerate_families();
    for p in &fams {
        for q in fams.iter().filter(|q| q.z_id == p.z_id && q.d == p.d) {
            let rp = fano4::build_record(p).unwrap();
            let rq = fano4::build_record(q).unwrap();
            assert_eq!(rp.hodge, rq.hodge, "{p} vs {q}");
        }
    }
}

#[test]
fn fourfold_polynomials_are_well_formed() {
    for p in enumerate_families() {
        let e = hodge::fourfold_polynomial(p.threefold(), p.d).unwrap();
        assert!(e.is_symmetric());
        assert_eq!(e.betti(2), 3, "{p}");
        assert_eq!(e.dimension(), 4);
        assert_eq!(e.coeff(0, 0), 1);
        assert_eq!(e.coeff(4, 4), 1);
    }
}

#[test]
fn k4_decreases_in_d_when_a_is_zero() {
    for z in catalog() {
        let k4: Vec<i64> = enumerate_families()
            .into_iter()
            .filter(|p| p.z_id == z.id && p.a == 0)
            .map(|p| intersect::fano4_invariants(&p).unwrap().k4)
            .collect();
        assert!(k4.windows(2).all(|w| w[0] > w[1]), "Z{}: {k4:?}", z.id);
    }
}

#[test]
fn every_ne_generator_is_cut_out_by_two_nef_rays() {
    for p in enumerate_families() {
        let rays = cones::nef_rays(&p);
        for c in cones::ne_generator_kinds(&p) {
            let n = rays.iter().filter(|r| r.vanishing_face.contains(&c)).count();
            assert_eq!(n, 2, "{p}: {c}");
        }
        for r in &rays {
            assert_eq!(r.vanishing_face.len(), 2, "{p}: {:?}", r.label);
        }
    }
}

#[test]
fn zero_class_pairs_to_zero() {
    for p in enumerate_families() {
        let zero = DivisorClass::pullback_h(p)
            .scale(frac(p.d, 1))
            .minus(&DivisorClass::e(p))
            .minus(&DivisorClass::e_hat(p));
        assert!(zero.is_zero());
        for c in CurveGenerator::ALL {
            assert_eq!(cones::pair_generator(&zero, c), frac(0, 1));
        }
    }
}

#[test]
fn anticanonical_pairings_follow_the_index_inequalities() {
    for z in catalog() {
        for a in 0..=6 {
            for d in 1..=8 {
                let p = FamilyParams::unchecked(z.id, a, d);
                let k = cones::anticanonical(&p).unwrap();
                let vals = [
                    cones::pair_generator(&k, CurveGenerator::F),
                    cones::pair_generator(&k, CurveGenerator::FHat),
                    cones::pair_generator(&k, CurveGenerator::CG),
                    cones::pair_generator(&k, CurveGenerator::CGHat),
                ];
                let i = z.index;
                assert_eq!(vals, [1, 1, i - a, i + a - d].map(|v| frac(v, 1)));
                let all_pos = vals.iter().all(|v| *v >= frac(1, 1));
                assert_eq!(all_pos, a < i && d - a < i);
            }
        }
    }
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| frac(n, d))
}

fn symmetric_poly(dim: u32) -> impl Strategy<Value = HodgePolynomial> {
    proptest::collection::vec(0u64..20, ((dim + 1) * (dim + 2) / 2) as usize).prop_map(move |cs| {
        let mut terms = Vec::new();
        let mut it = cs.into_iter();
        for p in 0..=dim {
            for q in p..=dim {
                let c = it.next().unwrap();
                terms.push(((p, q), c));
                if p != q {
                    terms.push(((q, p), c));
                }
            }
        }
        HodgePolynomial::from_terms(terms)
    })
}

proptest! {
    #[test]
    fn alternate_basis_round_trip(
        idx in 0usize..28,
        x in small_rational(),
        y in small_rational(),
        z in small_rational(),
    ) {
        let p = enumerate_families()[idx];
        let div = DivisorClass::new(p, [x, y, z]);
        let alt = div.to_alternate_basis();
        prop_assert_eq!(DivisorClass::from_alternate_basis(p, alt), div);
    }

    #[test]
    fn pairing_is_linear_in_the_divisor(
        idx in 0usize..28,
        x in small_rational(), y in small_rational(), z in small_rational(),
        s in small_rational(),
    ) {
        let p = enumerate_families()[idx];
        let d1 = DivisorClass::new(p, [x, y, z]);
        let d2 = cones::anticanonical(&p).unwrap();
        for c in CurveGenerator::ALL {
            let lhs = cones::pair_generator(&d1.scale(s).plus(&d2), c);
            let rhs = s * cones::pair_generator(&d1, c) + cones::pair_generator(&d2, c);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bundle_and_blowup_keep_symmetry(
        w in symmetric_poly(3),
        v in symmetric_poly(1),
        n in 1u32..4,
        c in 2u32..4,
    ) {
        let b = hodge::bundle_formula(&w, n);
        prop_assert!(b.is_symmetric());
        prop_assert_eq!(b.total(), w.total() * u64::from(n + 1));
        let up = hodge::blowup_formula(&w, &v, c).unwrap();
        prop_assert!(up.is_symmetric());
        prop_assert_eq!(up.total(), w.total() + v.total() * u64::from(c - 1));
    }

    #[test]
    fn bundle_invariants_integral_for_any_twist(z in 1i64..=7, a in 0i64..40) {
        let three = fano4::catalog::threefold(z).unwrap();
        prop_assert!(intersect::p1_bundle_invariants(three, a).is_ok());
    }
}

