//! Sectors at a point, the geodesic criterion, and geodesic counting.
//!
//! A sector `S_i^e(p)` collects the points `q` whose max-metric distance from
//! `p` is attained as `e * (q_i - p_i)` on axis `i` with sign `e`. A polyline
//! is a geodesic exactly when one sector works for every consecutive vertex
//! pair; moving that criterion from "all pairs of path times" to consecutive
//! pairs is justified by sector transitivity (see the property tests).
//!
//! The geodesic between `p` and `q` is unique exactly when all coordinate
//! differences share one absolute value (the diagonal positions); every other
//! distinct pair has infinitely many geodesics, two of which
//! [`witness_two_geodesics`] constructs.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::metric::{check_same_dim, chebyshev_distance, ratio, segment, PointN, Polyline, Scalar};
use crate::{Error, Result};

/// The sign tag of a sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Applies the sign to a scalar.
    pub fn apply(self, x: &Scalar) -> Scalar {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => -x.clone(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!(
                "sign must be \"+\" or \"-\", got {other:?}"
            ))),
        }
    }
}

/// One of the `2n` sectors at a point: an axis plus a sign.
///
/// `axis` is 0-based in code; the JSON form uses 1-based axes
/// (`{"axis": 1, "sign": "+"}` is the first axis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sector {
    pub axis: usize,
    pub sign: Sign,
}

impl Sector {
    pub fn new(axis: usize, sign: Sign) -> Self {
        Sector { axis, sign }
    }

    /// All `2n` sectors of `R^n`, axis-major, `+` before `-`.
    pub fn all(dim: usize) -> Vec<Sector> {
        (0..dim)
            .flat_map(|axis| {
                [Sector::new(axis, Sign::Plus), Sector::new(axis, Sign::Minus)]
            })
            .collect()
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}^{}", self.axis + 1, self.sign)
    }
}

impl Serialize for Sector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Sector", 2)?;
        st.serialize_field("axis", &(self.axis + 1))?;
        st.serialize_field("sign", &self.sign)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Sector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            axis: usize,
            sign: Sign,
        }
        let raw = Raw::deserialize(d)?;
        if raw.axis == 0 {
            return Err(serde::de::Error::custom("sector axes are 1-based in JSON"));
        }
        Ok(Sector::new(raw.axis - 1, raw.sign))
    }
}

/// The set of sectors at `p` that contain a given `q`. Never empty: the max
/// in the metric is attained on some axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorSignature {
    pub sectors: Vec<Sector>,
}

impl SectorSignature {
    pub fn contains(&self, s: Sector) -> bool {
        self.sectors.contains(&s)
    }

    /// The set of axes appearing in the signature, ignoring signs.
    pub fn axes(&self) -> Vec<usize> {
        let mut axes: Vec<usize> = self.sectors.iter().map(|s| s.axis).collect();
        axes.dedup();
        axes
    }
}

/// Is `q` in the sector `s` at `p`, i.e. does `sign * (q_axis - p_axis)`
/// attain the distance?
pub fn in_sector(p: &PointN, q: &PointN, s: Sector) -> Result<bool> {
    check_same_dim(p, q)?;
    if s.axis >= p.dim() {
        return Err(Error::AxisOutOfBounds {
            axis: s.axis,
            dim: p.dim(),
        });
    }
    let d = chebyshev_distance(p, q)?;
    let signed = s.sign.apply(&(q.coord(s.axis) - p.coord(s.axis)));
    Ok(d == signed)
}

/// All sectors at `p` containing `q`, in the order of [`Sector::all`].
/// For `q = p` that is all `2n` of them.
pub fn sector_signature(p: &PointN, q: &PointN) -> Result<SectorSignature> {
    check_same_dim(p, q)?;
    let sectors = Sector::all(p.dim())
        .into_iter()
        .filter(|&s| in_sector(p, q, s).expect("axis in range"))
        .collect();
    Ok(SectorSignature { sectors })
}

fn abs_deltas(p: &PointN, q: &PointN) -> Vec<Scalar> {
    p.coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| (b - a).abs())
        .collect()
}

/// Diagonal position in the plane: both coordinate differences have the same
/// absolute value, so `q` sits in a sector intersection at `p`.
pub fn is_diagonal(p: &PointN, q: &PointN) -> Result<bool> {
    check_distinct_pair(p, q, 2)?;
    let deltas = abs_deltas(p, q);
    Ok(deltas[0] == deltas[1])
}

/// Cubic diagonal position in `R^3`: all three coordinate differences share
/// one absolute value.
pub fn is_cubic_diagonal(p: &PointN, q: &PointN) -> Result<bool> {
    check_distinct_pair(p, q, 3)?;
    let deltas = abs_deltas(p, q);
    Ok(deltas[0] == deltas[1] && deltas[1] == deltas[2])
}

fn check_distinct_pair(p: &PointN, q: &PointN, expected_dim: usize) -> Result<()> {
    check_same_dim(p, q)?;
    if p.dim() != expected_dim {
        return Err(Error::WrongDimension {
            expected: expected_dim,
            got: p.dim(),
        });
    }
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    Ok(())
}

/// The geodesic criterion for polylines: some single sector must contain
/// every step. Searches all `2n` candidate sectors; any one suffices.
///
/// Equivalent to `polyline_length(path) == distance(first, last)`.
pub fn is_geodesic_polyline(path: &Polyline) -> bool {
    witnessing_sector(path).is_some()
}

/// The first sector (in [`Sector::all`] order) that witnesses `path` being a
/// geodesic, if any.
pub fn witnessing_sector(path: &Polyline) -> Option<Sector> {
    Sector::all(path.dim()).into_iter().find(|&s| {
        path.segments()
            .all(|(a, b)| in_sector(a, b, s).expect("axis in range"))
    })
}

/// How many geodesics join two points: [`GeodesicCount::One`] or
/// [`GeodesicCount::Infinite`]; the max metric admits nothing in between.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicCount {
    One,
    Infinite,
}

impl GeodesicCount {
    pub fn as_str(self) -> &'static str {
        match self {
            GeodesicCount::One => "one",
            GeodesicCount::Infinite => "infinite",
        }
    }
}

impl fmt::Display for GeodesicCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for GeodesicCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for GeodesicCount {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "one" => Ok(GeodesicCount::One),
            "infinite" => Ok(GeodesicCount::Infinite),
            other => Err(serde::de::Error::custom(format!(
                "geodesic count must be \"one\" or \"infinite\", got {other:?}"
            ))),
        }
    }
}

/// Number of geodesics between `p` and `q`.
///
/// `One` exactly when `p = q` (the constant path) or the pair is in diagonal
/// position (all coordinate differences share one absolute value). Proven for
/// n = 2 and 3; for n >= 4 the same rule is exposed as a derived extension.
pub fn tau(p: &PointN, q: &PointN) -> Result<GeodesicCount> {
    check_same_dim(p, q)?;
    if p == q {
        return Ok(GeodesicCount::One);
    }
    let deltas = abs_deltas(p, q);
    let all_equal = deltas.windows(2).all(|w| w[0] == w[1]);
    Ok(if all_equal {
        GeodesicCount::One
    } else {
        GeodesicCount::Infinite
    })
}

/// Constructs two distinct geodesics between a pair with `tau = Infinite`:
/// the segment, and a three-vertex detour through a perturbed midpoint.
pub fn witness_two_geodesics(p: &PointN, q: &PointN) -> Result<(Polyline, Polyline)> {
    if p == q || tau(p, q)? == GeodesicCount::One {
        return Err(Error::UniqueGeodesic);
    }
    let d = chebyshev_distance(p, q)?;
    let deltas: Vec<Scalar> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| b - a)
        .collect();
    // Lowest slack axis: some |delta_j| < d exists because tau is Infinite.
    let j = deltas
        .iter()
        .position(|dl| dl.abs() < d)
        .expect("non-diagonal pair has a slack axis");
    let eta = (&d - deltas[j].abs()) * ratio(1, 2);
    let mut mid: Vec<Scalar> = p
        .coords()
        .iter()
        .zip(&deltas)
        .map(|(a, dl)| a + dl * ratio(1, 2))
        .collect();
    mid[j] = &mid[j] + &eta;
    let mid = PointN::new(mid)?;
    let straight = segment(p, q)?;
    let detour = Polyline::new(vec![p.clone(), mid, q.clone()])?;
    Ok((straight, detour))
}

/// A max-metric sphere: all points at distance `radius` from `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereSpec {
    center: PointN,
    radius: Scalar,
}

impl SphereSpec {
    pub fn new(center: PointN, radius: Scalar) -> Result<Self> {
        if radius <= Scalar::zero() {
            return Err(Error::NonPositiveRadius);
        }
        Ok(SphereSpec { center, radius })
    }

    pub fn center(&self) -> &PointN {
        &self.center
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }
}

/// The `2^n` sphere points reached from the center by a unique geodesic:
/// the corners `center + radius * (+-1, ..., +-1)`. Enumerated with the
/// all-plus corner first, flipping axis signs in binary-counter order.
pub fn unique_geodesic_points(sphere: &SphereSpec) -> Vec<PointN> {
    let n = sphere.center.dim();
    let mut corners = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let coords = sphere
            .center
            .coords()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if mask >> k & 1 == 0 {
                    c + &sphere.radius
                } else {
                    c - &sphere.radius
                }
            })
            .collect();
        corners.push(PointN::new(coords).expect("center dimension >= 2"));
    }
    corners
}

/// Count of unique-geodesic points on any sphere of `R^n`: `2^n`,
/// independent of center and radius.
pub fn nu_ambient(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n >= 64 {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(1u64 << n)
}
