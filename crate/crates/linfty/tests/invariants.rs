//! Property-based and exhaustive-small-sweep invariants that cut across
//! modules: metric axioms, sector transitivity, planar confinement, orbit
//! size patterns, and JSON round trips.

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use linfty::isometry::{act, canonical_class, group_elements, orbit};
use linfty::metric::{
    chebyshev_distance, int, polyline_length, ratio, PointN, Polyline, Scalar,
};
use linfty::plane::{cross_section, tau_in_plane, Plane, SectionShape};
use linfty::sector::{
    in_sector, is_geodesic_polyline, sector_signature, tau, witness_two_geodesics, GeodesicCount,
    Sector, Sign,
};

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    ((-36i64..=36), (1i64..=9)).prop_map(|(n, d)| ratio(n, d))
}

fn point_strategy(dim: usize) -> impl Strategy<Value = PointN> {
    prop::collection::vec(scalar_strategy(), dim).prop_map(|c| PointN::new(c).unwrap())
}

fn polyline_strategy(dim: usize) -> impl Strategy<Value = Polyline> {
    prop::collection::vec(point_strategy(dim), 2..6).prop_filter_map(
        "needs distinct consecutive vertices",
        |vertices| Polyline::new(vertices).ok(),
    )
}

fn sector_strategy(dim: usize) -> impl Strategy<Value = Sector> {
    (0..dim, prop::bool::ANY).prop_map(|(axis, plus)| {
        Sector::new(axis, if plus { Sign::Plus } else { Sign::Minus })
    })
}

proptest! {
    #[test]
    fn metric_axioms(p in point_strategy(3), q in point_strategy(3), r in point_strategy(3)) {
        let d_pq = chebyshev_distance(&p, &q).unwrap();
        let d_qp = chebyshev_distance(&q, &p).unwrap();
        prop_assert_eq!(&d_pq, &d_qp);
        prop_assert_eq!(d_pq == int(0), p == q);
        let d_pr = chebyshev_distance(&p, &r).unwrap();
        let d_rq = chebyshev_distance(&r, &q).unwrap();
        prop_assert!(d_pq <= d_pr + d_rq);
    }

    #[test]
    fn length_dominates_endpoint_distance(path in polyline_strategy(3)) {
        let length = polyline_length(&path);
        let direct = chebyshev_distance(path.first(), path.last()).unwrap();
        prop_assert!(length >= direct);
    }

    #[test]
    fn length_is_stable_under_collinear_refinement(
        path in polyline_strategy(2),
        index in 0usize..4,
        t_num in 1i64..8,
    ) {
        let segments: Vec<_> = path.vertices().windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        let (a, b) = segments[index % segments.len()].clone();
        let t = ratio(t_num, 8);
        let inserted = a.add(&b.sub(&a).unwrap().scale(&t)).unwrap();
        prop_assume!(inserted != a && inserted != b);
        let mut vertices = path.vertices().to_vec();
        let position = vertices.iter().position(|v| *v == b).unwrap();
        vertices.insert(position, inserted);
        if let Ok(refined) = Polyline::new(vertices) {
            prop_assert_eq!(polyline_length(&refined), polyline_length(&path));
        }
    }

    #[test]
    fn length_is_monotone_under_insertion(
        path in polyline_strategy(2),
        extra in point_strategy(2),
        index in 1usize..4,
    ) {
        let mut vertices = path.vertices().to_vec();
        let slot = index.min(vertices.len() - 1);
        vertices.insert(slot, extra);
        if let Ok(longer) = Polyline::new(vertices) {
            prop_assert!(polyline_length(&longer) >= polyline_length(&path));
        }
    }

    #[test]
    fn sector_transitivity(
        p in point_strategy(3),
        m in point_strategy(3),
        q in point_strategy(3),
        s in sector_strategy(3),
    ) {
        if in_sector(&p, &m, s).unwrap() && in_sector(&m, &q, s).unwrap() {
            prop_assert!(in_sector(&p, &q, s).unwrap());
        }
    }

    #[test]
    fn geodesic_criterion_equals_length_identity(path in polyline_strategy(3)) {
        let by_length = polyline_length(&path)
            == chebyshev_distance(path.first(), path.last()).unwrap();
        prop_assert_eq!(is_geodesic_polyline(&path), by_length);
    }

    #[test]
    fn tau_matches_signature_coverage(p in point_strategy(3), q in point_strategy(3)) {
        let signature = sector_signature(&p, &q).unwrap();
        prop_assert!(!signature.sectors.is_empty());
        let covered = signature.axes().len() == 3;
        prop_assert_eq!(tau(&p, &q).unwrap() == GeodesicCount::One, covered);
    }

    #[test]
    fn witnesses_are_valid_distinct_geodesics(p in point_strategy(3), q in point_strategy(3)) {
        prop_assume!(tau(&p, &q).unwrap() == GeodesicCount::Infinite);
        let (straight, detour) = witness_two_geodesics(&p, &q).unwrap();
        prop_assert!(is_geodesic_polyline(&straight));
        prop_assert!(is_geodesic_polyline(&detour));
        prop_assert_eq!(straight.first(), detour.first());
        prop_assert_eq!(straight.last(), detour.last());
        prop_assert_ne!(straight.vertices(), detour.vertices());
    }

    #[test]
    fn tau_is_isometry_invariant(p in point_strategy(3), q in point_strategy(3)) {
        let before = tau(&p, &q).unwrap();
        for g in group_elements() {
            let after = tau(&g.apply(&p).unwrap(), &g.apply(&q).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }
    }

    /// A geodesic whose endpoints sit in exactly two sectors stays in the
    /// plane where those sectors intersect: whatever the criterion accepts
    /// between such endpoints must satisfy the two-sector equality at every
    /// vertex.
    #[test]
    fn planar_confinement(
        start in point_strategy(3),
        axes in (0usize..3, 0usize..3).prop_filter("distinct axes", |(i, j)| i != j),
        e_plus in prop::bool::ANY,
        d_plus in prop::bool::ANY,
        scale in 1i64..6,
        cross_tenths in -9i64..=9,
        eta_num in -12i64..=12,
        wobble in prop::collection::vec((-4i64..=4, 1i64..=4), 3),
        direct in prop::bool::ANY,
    ) {
        let (i, j) = axes;
        let k = 3 - i - j;
        let eps = if e_plus { Sign::Plus } else { Sign::Minus };
        let delta = if d_plus { Sign::Plus } else { Sign::Minus };
        let d = int(scale);

        // Endpoints tied exactly on axes i and j: the third axis stays short.
        let mut diff = vec![Scalar::zero(); 3];
        diff[i] = eps.apply(&d);
        diff[j] = delta.apply(&d);
        diff[k] = &d * ratio(cross_tenths, 10);
        let p = start;
        let q = p.add(&PointN::new(diff.clone()).unwrap()).unwrap();
        let signature = sector_signature(&p, &q).unwrap();
        prop_assert_eq!(signature.sectors.len(), 2);

        let halfway = p
            .add(&PointN::new(diff.clone()).unwrap().scale(&ratio(1, 2)))
            .unwrap();
        let mid = if direct {
            // Slack-axis perturbation within the feasible band: a geodesic.
            let band = (&d - diff[k].clone().abs()) * ratio(1, 2);
            let eta = &band * ratio(eta_num, 12);
            let mut coords = halfway.coords().to_vec();
            coords[k] = &coords[k] + &eta;
            PointN::new(coords).unwrap()
        } else {
            // Free perturbation: usually not a geodesic, then vacuous below.
            let shift: Vec<Scalar> = wobble.iter().map(|&(n, den)| ratio(n, den * 4)).collect();
            halfway.add(&PointN::new(shift).unwrap()).unwrap()
        };
        prop_assume!(mid != p && mid != q);
        let path = Polyline::new(vec![p.clone(), mid, q.clone()]).unwrap();
        if direct {
            prop_assert!(is_geodesic_polyline(&path));
        }
        if is_geodesic_polyline(&path) {
            for v in path.vertices() {
                let lhs = eps.apply(&(v.coord(i) - p.coord(i)));
                let rhs = delta.apply(&(v.coord(j) - p.coord(j)));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn point_and_polyline_json_round_trip(path in polyline_strategy(3)) {
        let json = serde_json::to_string(&path).unwrap();
        let back: Polyline = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, path);
    }

    #[test]
    fn plane_json_round_trip(
        a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9,
    ) {
        prop_assume!((a, b, c) != (0, 0, 0));
        let plane = Plane::from_ints(a, b, c, d);
        let json = serde_json::to_string(&plane).unwrap();
        let back: Plane = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, plane);
    }
}

#[test]
fn orbit_sizes_follow_coefficient_multiplicity() {
    for a in 1..=6i64 {
        for b in a..=6 {
            for c in b..=6 {
                let plane = Plane::from_ints(a, b, c, 0);
                if !plane.triangle_test() {
                    continue;
                }
                let distinct = [(a == b), (b == c)];
                let expected = match distinct {
                    [true, true] => 4,
                    [false, false] => 24,
                    _ => 12,
                };
                assert_eq!(
                    orbit(&plane).unwrap().size(),
                    expected,
                    "orbit size of {plane}"
                );
            }
        }
    }
}

#[test]
fn orbits_collect_equal_coefficient_multisets() {
    // Same orbit always means same class; same |coefficient| multiset at the
    // same scale means same orbit.
    for a in 1..=5i64 {
        for b in a..=5 {
            for c in b..=5 {
                let plane = Plane::from_ints(a, b, c, 0);
                if !plane.triangle_test() {
                    continue;
                }
                let orb = orbit(&plane).unwrap();
                let class = canonical_class(&plane);
                for member in orb.members() {
                    assert_eq!(canonical_class(member), class);
                }
                for signs in [[1, 1, 1], [-1, 1, 1], [1, -1, 1], [-1, -1, -1]] {
                    for perm in [[a, b, c], [b, a, c], [c, a, b], [b, c, a]] {
                        let variant = Plane::from_ints(
                            signs[0] * perm[0],
                            signs[1] * perm[1],
                            signs[2] * perm[2],
                            0,
                        );
                        assert!(
                            orb.members().contains(&variant),
                            "{variant} missing from orbit of {plane}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn unique_direction_points_on_sections_are_the_vertices() {
    // On the boundary polygon, exactly the vertices see a unique geodesic to
    // the center, so their count is nu. Non-vertex boundary points (edge
    // mixtures) always see infinitely many.
    for coeffs in [(1, 1, 1), (2, 2, 3), (1, 1, 2), (0, 0, 1), (2, 3, 4)] {
        let plane = Plane::from_ints(coeffs.0, coeffs.1, coeffs.2, 0);
        let section = cross_section(&plane, &int(1)).unwrap();
        let origin = PointN::from_ints(&[0, 0, 0]);
        let vertices = section.vertices();
        for v in vertices {
            assert_eq!(
                tau_in_plane(&plane, &origin, v).unwrap(),
                GeodesicCount::One,
                "vertex {v} of {plane}"
            );
        }
        let n = vertices.len();
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            for t in [ratio(1, 3), ratio(1, 2), ratio(5, 7)] {
                let mix = a.add(&b.sub(a).unwrap().scale(&t)).unwrap();
                assert_eq!(
                    tau_in_plane(&plane, &origin, &mix).unwrap(),
                    GeodesicCount::Infinite,
                    "edge point {mix} of {plane}"
                );
            }
        }
        let expected_nu = match section.shape() {
            SectionShape::Hexagon => 6,
            SectionShape::Tetragon => 4,
        };
        assert_eq!(vertices.len(), expected_nu);
    }
}

#[test]
fn nu_in_plane_ignores_base_point_and_radius() {
    // The unique-geodesic points on the in-plane sphere around any base point
    // p are p + r * (unit section vertices): always as many as nu says.
    for coeffs in [(1, 1, 1), (2, 2, 3), (1, 1, 2), (1, 2, 3)] {
        let plane = Plane::from_ints(coeffs.0, coeffs.1, coeffs.2, 0);
        let unit = cross_section(&plane, &int(1)).unwrap();
        let nu = linfty::plane::nu_in_plane(&plane).unwrap();
        assert_eq!(unit.vertices().len() as u64, nu);
        for base in [
            PointN::from_ints(&[0, 0, 0]),
            PointN::new(vec![
                int(coeffs.2),
                int(coeffs.2),
                -int(coeffs.0) - int(coeffs.1),
            ])
            .unwrap(),
        ] {
            assert!(plane.contains(&base).unwrap());
            for radius in [int(1), ratio(3, 7), int(5)] {
                let mut unique_points = 0;
                for v in unit.vertices() {
                    let q = base.add(&v.scale(&radius)).unwrap();
                    assert_eq!(
                        chebyshev_distance(&base, &q).unwrap(),
                        radius,
                        "sphere membership for {q}"
                    );
                    if tau_in_plane(&plane, &base, &q).unwrap() == GeodesicCount::One {
                        unique_points += 1;
                    }
                }
                assert_eq!(unique_points, nu, "nu at base {base} radius {radius}");
            }
        }
    }
}

#[test]
fn group_action_commutes_with_sections_on_examples() {
    let plane = Plane::from_ints(2, 2, 3, 0);
    let base = cross_section(&plane, &int(1)).unwrap();
    for g in group_elements().iter().step_by(7) {
        let image_plane = act(g, &plane).unwrap();
        let mut mapped: Vec<PointN> = base
            .vertices()
            .iter()
            .map(|v| g.apply(v).unwrap())
            .collect();
        mapped.sort();
        let mut image: Vec<PointN> = cross_section(&image_plane, &int(1))
            .unwrap()
            .vertices()
            .to_vec();
        image.sort();
        assert_eq!(mapped, image);
    }
}
