//! Brute-force validators, independent of the algorithms they check.
//!
//! Everything here is deliberately naive: partition refinement for lengths,
//! dense face grids for cross-sections, finite midpoint perturbations for
//! geodesic uniqueness, seeded sampling for isometry claims. The test suite
//! plays these against the exact implementations; the oracles share only the
//! core types with them, never the computation paths.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::metric::{
    chebyshev_distance, int, parse_scalar, ratio, scalar_to_string, PointN, Polyline, Scalar,
};
use crate::plane::{FlatChart, Plane};
use crate::sector::is_geodesic_polyline;
use crate::isometry::SignedPermutation;
use crate::{Error, Result};

/// Knobs for the brute-force probes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeConfig {
    pub grid_density: u32,
    pub perturbations: Vec<Scalar>,
    pub seed: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            grid_density: 100,
            perturbations: vec![
                ratio(1, 2),
                ratio(-1, 2),
                ratio(1, 4),
                ratio(-1, 4),
                ratio(1, 8),
                ratio(-1, 8),
            ],
            seed: 42,
        }
    }
}

impl Serialize for ProbeConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ProbeConfig", 3)?;
        st.serialize_field("grid_density", &self.grid_density)?;
        let perturbations: Vec<String> = self.perturbations.iter().map(scalar_to_string).collect();
        st.serialize_field("perturbations", &perturbations)?;
        st.serialize_field("seed", &self.seed)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ProbeConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            grid_density: u32,
            perturbations: Vec<String>,
            seed: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.grid_density < 2 {
            return Err(de::Error::custom("grid_density must be at least 2"));
        }
        let perturbations = raw
            .perturbations
            .iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(ProbeConfig {
            grid_density: raw.grid_density,
            perturbations,
            seed: raw.seed,
        })
    }
}

/// Partition-sum length of a polyline with every segment cut into `parts`
/// equal pieces. Validates the length operation against its supremum
/// definition: segments are additive, so any refinement returns the same sum.
pub fn refine_length(path: &Polyline, parts: u32) -> Scalar {
    assert!(parts >= 1, "parts must be at least 1");
    let parts_scalar = int(parts as i64);
    let mut total = Scalar::zero();
    for (a, b) in path.segments() {
        let delta = b.sub(a).expect("shared dimension");
        let mut prev = a.clone();
        for step in 1..=parts {
            let t = int(step as i64) / &parts_scalar;
            let next = a.add(&delta.scale(&t)).expect("shared dimension");
            total += chebyshev_distance(&prev, &next).expect("shared dimension");
            prev = next;
        }
    }
    total
}

/// Dense sampling of the plane trace on each cube face: for every lattice
/// cell whose corners see both signs of the plane equation, the cell center
/// joins the cloud. Every exact section vertex has a cloud point within one
/// cell of it.
pub fn brute_section(plane: &Plane, radius: &Scalar, cfg: &ProbeConfig) -> Result<Vec<PointN>> {
    if !plane.through_origin() {
        return Err(Error::NonzeroOffset);
    }
    if *radius <= Scalar::zero() {
        return Err(Error::NonPositiveRadius);
    }
    let density = cfg.grid_density as i64;
    let step = radius * ratio(2, density);
    let normal = plane.normal();
    let mut cloud = Vec::new();
    for axis in 0..3 {
        let (u_ax, v_ax) = match axis {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for face_sign in [1i64, -1] {
            let fixed = radius * int(face_sign);
            // The face restriction f(u, v) = cu*u + cv*v + ck*fixed is linear,
            // so corner values advance by fixed increments along the lattice.
            let du = &normal[u_ax] * &step;
            let dv = &normal[v_ax] * &step;
            let base = &normal[u_ax] * -radius + &normal[v_ax] * -radius + &normal[axis] * &fixed;
            // A cell spans one du and one dv; its extreme corner values are
            // the low-corner value plus the positive/negative parts of the steps.
            let spread_lo = du.clone().min(Scalar::zero()) + dv.clone().min(Scalar::zero());
            let spread_hi = du.clone().max(Scalar::zero()) + dv.clone().max(Scalar::zero());
            let mut row_value = base;
            for i in 0..density {
                let mut value = row_value.clone();
                for j in 0..density {
                    let crossed =
                        &value + &spread_lo <= Scalar::zero() && &value + &spread_hi >= Scalar::zero();
                    if crossed {
                        let mut coords = vec![Scalar::zero(); 3];
                        coords[axis] = fixed.clone();
                        coords[u_ax] = -radius + &step * (int(i) + ratio(1, 2));
                        coords[v_ax] = -radius + &step * (int(j) + ratio(1, 2));
                        cloud.push(PointN::new(coords).expect("dimension 3"));
                    }
                    value += &dv;
                }
                row_value += &du;
            }
        }
    }
    Ok(cloud)
}

/// Extracts approximate section vertices from a [`brute_section`] cloud:
/// cloud points close to two or more cube faces are grouped by proximity,
/// one representative per group. `tol` should be about one grid cell.
pub fn corner_clusters(cloud: &[PointN], radius: &Scalar, tol: &Scalar) -> Vec<PointN> {
    let near_edge: Vec<&PointN> = cloud
        .iter()
        .filter(|p| {
            let close = p
                .coords()
                .iter()
                .filter(|c| (radius - c.abs()).abs() <= *tol)
                .count();
            close >= 2
        })
        .collect();
    let merge_radius = tol * int(3);
    let mut reps: Vec<PointN> = Vec::new();
    for p in near_edge {
        let joined = reps
            .iter()
            .any(|r| chebyshev_distance(r, p).expect("dimension 3") <= merge_radius);
        if !joined {
            reps.push(p.clone());
        }
    }
    reps
}

fn on_segment(p: &PointN, q: &PointN, m: &PointN) -> bool {
    let delta = match q.sub(p) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let offset = match m.sub(p) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let pivot = match delta.coords().iter().position(|d| !d.is_zero()) {
        Some(k) => k,
        None => return false,
    };
    let t = offset.coord(pivot) / delta.coord(pivot);
    if t < Scalar::zero() || t > Scalar::from_integer(1.into()) {
        return false;
    }
    offset
        .coords()
        .iter()
        .zip(delta.coords())
        .all(|(o, d)| *o == &t * d)
}

/// Probes for a second geodesic between `p` and `q` by perturbing the
/// midpoint along each axis. Returns `false` as soon as a perturbed detour
/// off the segment passes the geodesic check: that verdict is conclusive.
/// `true` only says the finite probe set found nothing.
pub fn probe_unique_geodesic(p: &PointN, q: &PointN, cfg: &ProbeConfig) -> Result<bool> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    let delta = q.sub(p)?;
    let midpoint = p.add(&delta.scale(&ratio(1, 2)))?;
    for axis in 0..p.dim() {
        for eta in &cfg.perturbations {
            if eta.is_zero() {
                continue;
            }
            let mut coords = midpoint.coords().to_vec();
            coords[axis] = &coords[axis] + eta;
            let probe = PointN::new(coords)?;
            if probe == *p || probe == *q || on_segment(p, q, &probe) {
                continue;
            }
            let path = Polyline::new(vec![p.clone(), probe, q.clone()])?;
            if is_geodesic_polyline(&path) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A map whose isometry claim is under test.
#[derive(Debug, Clone)]
pub enum IsometryMap<'a> {
    Chart(&'a FlatChart),
    Cube(&'a SignedPermutation),
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-24..=24), rng.gen_range(1..=8))
}

/// A reproducible random point on the plane: two coordinates drawn at
/// random, the third solved from the equation via the dominant coefficient.
pub fn sample_plane_point(plane: &Plane, rng: &mut ChaCha8Rng) -> PointN {
    let abs: Vec<_> = (0..3).map(|k| plane.coeff(k).abs()).collect();
    let pivot = (0..3)
        .max_by(|&i, &j| abs[i].cmp(&abs[j]).then(j.cmp(&i)))
        .expect("three axes");
    let normal = plane.normal();
    let mut coords = vec![Scalar::zero(); 3];
    let mut partial = -plane.offset_scalar();
    for k in 0..3 {
        if k != pivot {
            coords[k] = random_scalar(rng);
            partial += &normal[k] * &coords[k];
        }
    }
    coords[pivot] = -partial / &normal[pivot];
    PointN::new(coords).expect("dimension 3")
}

/// Draws `count` seeded point pairs on the plane and reports whether the map
/// preserves the max metric on every pair, exactly.
///
/// A chart that does not even parametrize the plane is rejected with
/// [`Error::ChartPlaneMismatch`]; a chart that parametrizes it but distorts
/// some distance yields `Ok(false)` with a concrete counterexample behind it.
pub fn sample_isometry_check(
    map: &IsometryMap<'_>,
    plane: &Plane,
    count: u32,
    seed: u64,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let p1 = sample_plane_point(plane, &mut rng);
        let p2 = sample_plane_point(plane, &mut rng);
        let (image1, image2) = match map {
            IsometryMap::Chart(chart) => {
                let q1 = chart.project(&p1)?;
                let q2 = chart.project(&p2)?;
                if chart.lift(&q1)? != p1 || chart.lift(&q2)? != p2 {
                    return Err(Error::ChartPlaneMismatch);
                }
                (q1, q2)
            }
            IsometryMap::Cube(g) => (g.apply(&p1)?, g.apply(&p2)?),
        };
        if p1 == p2 {
            continue;
        }
        let before = chebyshev_distance(&p1, &p2)?;
        let after = chebyshev_distance(&image1, &image2)?;
        if before != after {
            return Ok(false);
        }
    }
    Ok(true)
}
