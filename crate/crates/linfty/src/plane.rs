//! Planes in `R^3` under the max metric: cube cross-sections, the triangle
//! criterion, and flat charts onto `R^2`.
//!
//! A plane `ax + by + cz = d` fails to be isometric to the max-metric plane
//! `R^2` exactly when `|a|, |b|, |c|` form a non-degenerate triangle. The
//! proof route implemented here is constructive both ways: for triangle
//! planes, [`cross_section`] cuts the unit cube into a hexagonal metric disc
//! boundary; for the rest, [`flat_isometry_to_r2`] produces an exact
//! distance-preserving chart.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::metric::{chebyshev_distance, scalar_from_json, scalar_to_string, PointN, Scalar};
use crate::sector::GeodesicCount;
use crate::{Error, Result};

/// A plane `ax + by + cz = d` in canonical scale: integer coefficients with
/// no common factor, first nonzero of `(a, b, c)` positive. Equal point sets
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plane {
    coeffs: [BigInt; 3],
    offset: BigInt,
}

impl Plane {
    /// Canonicalizes arbitrary rational coefficients. The normal vector
    /// `(a, b, c)` must be nonzero.
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::ZeroNormal);
        }
        let mut denom_lcm = BigInt::one();
        for x in [&a, &b, &c, &d] {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
        let scale = BigRational::from_integer(denom_lcm);
        let mut ints: Vec<BigInt> = [&a, &b, &c, &d]
            .iter()
            .map(|x| (*x * &scale).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        for x in ints.iter_mut() {
            *x /= &g;
        }
        let flip = ints[..3]
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        if flip {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        let offset = ints.pop().expect("four entries");
        Ok(Plane {
            coeffs: [
                ints[0].clone(),
                ints[1].clone(),
                ints[2].clone(),
            ],
            offset,
        })
    }

    /// Convenience constructor from integers; panics on a zero normal.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Plane::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigRational::from_integer(c.into()),
            BigRational::from_integer(d.into()),
        )
        .expect("nonzero normal")
    }

    pub fn coeff(&self, axis: usize) -> &BigInt {
        &self.coeffs[axis]
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn through_origin(&self) -> bool {
        self.offset.is_zero()
    }

    /// Normal coefficients as scalars, for exact arithmetic.
    pub fn normal(&self) -> [Scalar; 3] {
        [
            BigRational::from_integer(self.coeffs[0].clone()),
            BigRational::from_integer(self.coeffs[1].clone()),
            BigRational::from_integer(self.coeffs[2].clone()),
        ]
    }

    pub fn offset_scalar(&self) -> Scalar {
        BigRational::from_integer(self.offset.clone())
    }

    /// `a x_1 + b x_2 + c x_3 - d` at the given point.
    pub fn eval(&self, p: &PointN) -> Result<Scalar> {
        if p.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                got: p.dim(),
            });
        }
        let n = self.normal();
        let mut acc = -self.offset_scalar();
        for (c, x) in n.iter().zip(p.coords()) {
            acc += c * x;
        }
        Ok(acc)
    }

    pub fn contains(&self, p: &PointN) -> Result<bool> {
        Ok(self.eval(p)?.is_zero())
    }

    /// Splits off the affine offset: returns the parallel plane through the
    /// origin and the axis-aligned translation that carries this plane onto
    /// it. The translation moves along the highest-index axis with a nonzero
    /// coefficient (the z-preferring choice, so `z -> z - d/c` when `c != 0`).
    pub fn translate_to_origin(&self) -> (Plane, PointN) {
        let axis = (0..3)
            .rev()
            .find(|&k| !self.coeffs[k].is_zero())
            .expect("nonzero normal");
        let mut shift = vec![Scalar::zero(); 3];
        shift[axis] = -BigRational::new(self.offset.clone(), self.coeffs[axis].clone());
        let plane = Plane {
            coeffs: self.coeffs.clone(),
            offset: BigInt::zero(),
        };
        (plane, PointN::new(shift).expect("dimension 3"))
    }

    /// Non-degenerate triangle criterion on `|a|, |b|, |c|`: all positive and
    /// all three strict triangle inequalities. Holds exactly when the plane
    /// is NOT isometric to the max-metric plane `R^2`.
    pub fn triangle_test(&self) -> bool {
        let s: Vec<BigInt> = self.coeffs.iter().map(|x| x.abs()).collect();
        if s.iter().any(|x| x.is_zero()) {
            return false;
        }
        &s[0] + &s[1] > s[2] && &s[0] + &s[2] > s[1] && &s[1] + &s[2] > s[0]
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        let mut printed = false;
        for (coeff, name) in self.coeffs.iter().zip(names) {
            if coeff.is_zero() {
                continue;
            }
            if printed {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{name}")?;
            printed = true;
        }
        write!(f, " = {}", self.offset)
    }
}

impl Serialize for Plane {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.offset))
            .map(|x| x.to_string())
            .collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Plane {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(deserializer)?;
        if raw.len() != 4 {
            return Err(de::Error::custom("plane takes exactly 4 coefficients"));
        }
        let mut values = raw.iter().map(scalar_from_json);
        let a = values.next().unwrap().map_err(de::Error::custom)?;
        let b = values.next().unwrap().map_err(de::Error::custom)?;
        let c = values.next().unwrap().map_err(de::Error::custom)?;
        let d = values.next().unwrap().map_err(de::Error::custom)?;
        Plane::new(a, b, c, d).map_err(de::Error::custom)
    }
}

/// Shape of a central cube cross-section. Nothing else can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionShape {
    Tetragon,
    Hexagon,
}

/// The polygon cut from the boundary of the cube `[-r, r]^3` by a plane
/// through the origin: the boundary of the radius-`r` metric disc inside the
/// plane. Vertices are listed in cyclic order (consecutive vertices share a
/// cube face), starting from the lexicographically greatest one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionPolygon {
    vertices: Vec<PointN>,
    shape: SectionShape,
    radius: Scalar,
}

impl SectionPolygon {
    pub fn vertices(&self) -> &[PointN] {
        &self.vertices
    }

    pub fn shape(&self) -> SectionShape {
        self.shape
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }
}

impl Serialize for SectionPolygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SectionPolygon", 3)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("radius", &scalar_to_string(&self.radius))?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SectionPolygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: SectionShape,
            radius: String,
            vertices: Vec<PointN>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let radius = crate::metric::parse_scalar(&raw.radius).map_err(de::Error::custom)?;
        let expected = match raw.shape {
            SectionShape::Tetragon => 4,
            SectionShape::Hexagon => 6,
        };
        if raw.vertices.len() != expected {
            return Err(de::Error::custom("vertex count does not match shape tag"));
        }
        Ok(SectionPolygon {
            vertices: raw.vertices,
            shape: raw.shape,
            radius,
        })
    }
}

/// Intersection of the plane (through the origin) with one cube face:
/// the face is `x_k = face_sign * r`, the other two coordinates range over
/// `[-r, r]`. Returns 0, 1 or 2 endpoint(s); a face met in a full cube edge
/// contributes both edge endpoints.
fn face_intersection(plane: &Plane, axis: usize, face_sign: i8, radius: &Scalar) -> Vec<PointN> {
    let normal = plane.normal();
    let (u_ax, v_ax) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let cu = &normal[u_ax];
    let cv = &normal[v_ax];
    let fixed = if face_sign > 0 {
        radius.clone()
    } else {
        -radius.clone()
    };
    let gamma = -(&normal[axis] * &fixed);
    if cu.is_zero() && cv.is_zero() {
        return Vec::new(); // plane is x_k = 0, parallel to this face
    }

    // Parametrize the line cu*u + cv*v = gamma as base + t * (-cv, cu).
    let (base_u, base_v) = if !cu.is_zero() {
        (&gamma / cu, Scalar::zero())
    } else {
        (Scalar::zero(), &gamma / cv)
    };
    let dir_u = -cv.clone();
    let dir_v = cu.clone();

    let mut t_lo: Option<Scalar> = None;
    let mut t_hi: Option<Scalar> = None;
    for (base, dir) in [(&base_u, &dir_u), (&base_v, &dir_v)] {
        if dir.is_zero() {
            if base.abs() > *radius {
                return Vec::new();
            }
            continue;
        }
        let t1 = (-radius - base) / dir;
        let t2 = (radius - base) / dir;
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        t_lo = Some(match t_lo {
            Some(cur) => cur.max(lo),
            None => lo,
        });
        t_hi = Some(match t_hi {
            Some(cur) => cur.min(hi),
            None => hi,
        });
    }
    let (t_lo, t_hi) = match (t_lo, t_hi) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => unreachable!("(-cv, cu) is nonzero, so t is bounded"),
    };
    if t_lo > t_hi {
        return Vec::new();
    }

    let make_point = |t: &Scalar| {
        let mut coords = vec![Scalar::zero(); 3];
        coords[axis] = fixed.clone();
        coords[u_ax] = &base_u + t * &dir_u;
        coords[v_ax] = &base_v + t * &dir_v;
        PointN::new(coords).expect("dimension 3")
    };
    let mut out = vec![make_point(&t_lo)];
    if t_hi != t_lo {
        out.push(make_point(&t_hi));
    }
    out
}

fn share_cube_face(a: &PointN, b: &PointN, radius: &Scalar) -> bool {
    a.coords()
        .iter()
        .zip(b.coords())
        .any(|(x, y)| x == y && x.abs() == *radius)
}

/// Cross product of two 3-vectors given as points.
fn cross3(a: &PointN, b: &PointN) -> [Scalar; 3] {
    let (a, b) = (a.coords(), b.coords());
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Cuts the cube `[-radius, radius]^3` with a plane through the origin.
///
/// Face by face the intersection is a segment (or a point, or a full cube
/// edge); endpoints are collected, deduplicated exactly, and ordered into a
/// cycle by walking shared cube faces. The result has 6 vertices exactly when
/// the plane passes [`Plane::triangle_test`], otherwise 4.
pub fn cross_section(plane: &Plane, radius: &Scalar) -> Result<SectionPolygon> {
    if !plane.through_origin() {
        return Err(Error::NonzeroOffset);
    }
    if *radius <= Scalar::zero() {
        return Err(Error::NonPositiveRadius);
    }

    let mut vertices: Vec<PointN> = Vec::new();
    for axis in 0..3 {
        for face_sign in [1i8, -1] {
            vertices.extend(face_intersection(plane, axis, face_sign, radius));
        }
    }
    vertices.sort();
    vertices.dedup();

    let n = vertices.len();
    if n != 4 && n != 6 {
        return Err(Error::DegenerateSection);
    }

    // Neighbors share a cube face; every vertex must have exactly two.
    let neighbors = |v: &PointN| -> Vec<PointN> {
        vertices
            .iter()
            .filter(|w| *w != v && share_cube_face(v, w, radius))
            .cloned()
            .collect()
    };

    let start = vertices.last().expect("nonempty").clone(); // sorted: lex-greatest
    let first_neighbors = neighbors(&start);
    if first_neighbors.len() != 2 {
        return Err(Error::DegenerateSection);
    }
    // Orient the cycle so the signed area against the normal is positive.
    let normal = plane.normal();
    let next = first_neighbors
        .into_iter()
        .find(|cand| {
            let c = cross3(&start, cand);
            let dot: Scalar = c
                .iter()
                .zip(&normal)
                .map(|(x, y)| x * y)
                .fold(Scalar::zero(), |acc, v| acc + v);
            dot.is_positive()
        })
        .ok_or(Error::DegenerateSection)?;

    let mut ring = vec![start.clone(), next];
    while ring.len() < n {
        let cur = ring.last().expect("nonempty").clone();
        let prev = &ring[ring.len() - 2];
        let nbrs = neighbors(&cur);
        if nbrs.len() != 2 {
            return Err(Error::DegenerateSection);
        }
        let step = nbrs.into_iter().find(|w| w != prev).ok_or(Error::DegenerateSection)?;
        if step == start {
            return Err(Error::DegenerateSection); // closed early
        }
        ring.push(step);
    }
    if !share_cube_face(ring.last().expect("nonempty"), &start, radius) {
        return Err(Error::DegenerateSection);
    }

    let shape = if n == 6 {
        SectionShape::Hexagon
    } else {
        SectionShape::Tetragon
    };
    Ok(SectionPolygon {
        vertices: ring,
        shape,
        radius: radius.clone(),
    })
}

/// Max-metric lengths of the polygon edges, in cyclic order (the last entry
/// closes the cycle back to the first vertex).
pub fn section_edge_lengths(poly: &SectionPolygon) -> Vec<Scalar> {
    let vs = poly.vertices();
    (0..vs.len())
        .map(|i| {
            chebyshev_distance(&vs[i], &vs[(i + 1) % vs.len()]).expect("shared dimension")
        })
        .collect()
}

/// An exact distance-preserving chart from a flat plane onto the max-metric
/// plane `R^2`, with its inverse parametrization.
///
/// The forward map drops the coordinate with the dominant coefficient; the
/// backward map solves the plane equation for it (affinely, when the plane
/// misses the origin).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatChart {
    forward: [[Scalar; 3]; 2],
    back: [[Scalar; 2]; 3],
    back_offset: [Scalar; 3],
}

impl FlatChart {
    /// Assembles a chart from raw matrices. Intended for tests that need a
    /// deliberately wrong chart; [`flat_isometry_to_r2`] builds correct ones.
    pub fn from_parts(
        forward: [[Scalar; 3]; 2],
        back: [[Scalar; 2]; 3],
        back_offset: [Scalar; 3],
    ) -> Self {
        FlatChart {
            forward,
            back,
            back_offset,
        }
    }

    /// The chart map: plane point to `R^2`.
    pub fn project(&self, p: &PointN) -> Result<PointN> {
        if p.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                got: p.dim(),
            });
        }
        let coords = self
            .forward
            .iter()
            .map(|row| {
                row.iter()
                    .zip(p.coords())
                    .map(|(m, x)| m * x)
                    .fold(Scalar::zero(), |acc, v| acc + v)
            })
            .collect();
        PointN::new(coords)
    }

    /// The inverse parametrization: `R^2` back onto the plane.
    pub fn lift(&self, uv: &PointN) -> Result<PointN> {
        if uv.dim() != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: uv.dim(),
            });
        }
        let coords = self
            .back
            .iter()
            .zip(&self.back_offset)
            .map(|(row, off)| {
                row.iter()
                    .zip(uv.coords())
                    .map(|(m, x)| m * x)
                    .fold(off.clone(), |acc, v| acc + v)
            })
            .collect();
        PointN::new(coords)
    }
}

/// Builds the chart witnessing that a plane failing the triangle test is
/// isometric to `R^2`.
///
/// The dropped coordinate is the one with the largest `|coefficient|`
/// (lowest axis on ties); on the plane its variation is dominated by the
/// kept coordinates, so dropping it preserves the max metric exactly.
pub fn flat_isometry_to_r2(plane: &Plane) -> Result<FlatChart> {
    if plane.triangle_test() {
        return Err(Error::NotFlat);
    }
    let abs: Vec<BigInt> = (0..3).map(|k| plane.coeff(k).abs()).collect();
    let drop = (0..3)
        .max_by(|&i, &j| abs[i].cmp(&abs[j]).then(j.cmp(&i)))
        .expect("three axes");
    let kept: Vec<usize> = (0..3).filter(|&k| k != drop).collect();

    let mut forward = [
        [Scalar::zero(), Scalar::zero(), Scalar::zero()],
        [Scalar::zero(), Scalar::zero(), Scalar::zero()],
    ];
    forward[0][kept[0]] = Scalar::one();
    forward[1][kept[1]] = Scalar::one();

    let normal = plane.normal();
    let c_drop = &normal[drop];
    let mut back = [
        [Scalar::zero(), Scalar::zero()],
        [Scalar::zero(), Scalar::zero()],
        [Scalar::zero(), Scalar::zero()],
    ];
    back[kept[0]][0] = Scalar::one();
    back[kept[1]][1] = Scalar::one();
    back[drop][0] = -(&normal[kept[0]] / c_drop);
    back[drop][1] = -(&normal[kept[1]] / c_drop);
    let mut back_offset = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    back_offset[drop] = plane.offset_scalar() / c_drop;

    Ok(FlatChart {
        forward,
        back,
        back_offset,
    })
}

/// Number of unique-geodesic points on any metric sphere inside the plane:
/// the vertex count of the unit cross-section, 6 for triangle planes and 4
/// for flat ones. Independent of base point and radius.
pub fn nu_in_plane(plane: &Plane) -> Result<u64> {
    let (origin_plane, _) = plane.translate_to_origin();
    let section = cross_section(&origin_plane, &Scalar::one())?;
    Ok(section.vertices().len() as u64)
}

/// Number of geodesics between two points of the plane, inside the plane:
/// one exactly when `q - p` points at a vertex of the unit cross-section.
pub fn tau_in_plane(plane: &Plane, p: &PointN, q: &PointN) -> Result<GeodesicCount> {
    if !plane.contains(p)? || !plane.contains(q)? {
        return Err(Error::PointNotOnPlane);
    }
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    let (origin_plane, _) = plane.translate_to_origin();
    let section = cross_section(&origin_plane, &Scalar::one())?;
    let dir = q.sub(p)?;
    let unique = section.vertices().iter().any(|v| {
        cross3(&dir, v).iter().all(|c| c.is_zero())
    });
    Ok(if unique {
        GeodesicCount::One
    } else {
        GeodesicCount::Infinite
    })
}
