//! Points, polyline paths, and the max metric itself.
//!
//! All quantities are exact rationals ([`Scalar`]); nothing in this module
//! rounds. Paths are stored as their vertex lists ([`Polyline`]): a polyline
//! stands for the image of a piecewise-linear path, which is all the geodesic
//! machinery ever looks at.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational scalar. `BigRational` keeps fractions reduced with a
/// positive denominator, which is exactly the canonical form we need.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` style tokens into a [`Scalar`].
pub fn parse_scalar(token: &str) -> Result<Scalar> {
    let err = || Error::ParseScalar(token.to_string());
    let token = token.trim();
    match token.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| err())?;
            let den: BigInt = den.trim().parse().map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let n: BigInt = token.parse().map_err(|_| err())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Renders a scalar as `"7"` or `"-3/4"` (the inverse of [`parse_scalar`]).
pub fn scalar_to_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn serialize_coord<S>(x: &Scalar, serializer: S) -> std::result::Result<S::Ok, S::Error>
where
    S: Serializer,
{
    if x.denom().is_one() {
        if let Ok(n) = i64::try_from(x.numer().clone()) {
            return serializer.serialize_i64(n);
        }
    }
    serializer.serialize_str(&scalar_to_string(x))
}

pub(crate) fn scalar_from_json(value: &serde_json::Value) -> Result<Scalar> {
    match value {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::ParseScalar(n.to_string())),
        serde_json::Value::String(s) => parse_scalar(s),
        other => Err(Error::ParseScalar(other.to_string())),
    }
}

/// A point of `R^n` with exact rational coordinates, `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointN {
    coords: Vec<Scalar>,
}

impl PointN {
    /// Builds a point, rejecting dimensions below 2.
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        Ok(PointN { coords })
    }

    /// Convenience constructor from integers. Panics on dimension < 2, which
    /// keeps call sites in tests and examples terse.
    pub fn from_ints(coords: &[i64]) -> Self {
        PointN::new(coords.iter().map(|&c| int(c)).collect()).expect("dimension >= 2")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, axis: usize) -> &Scalar {
        &self.coords[axis]
    }

    /// Coordinate-wise sum.
    pub fn add(&self, other: &PointN) -> Result<PointN> {
        check_same_dim(self, other)?;
        PointN::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Coordinate-wise difference `self - other`.
    pub fn sub(&self, other: &PointN) -> Result<PointN> {
        check_same_dim(self, other)?;
        PointN::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Scales every coordinate by `factor`.
    pub fn scale(&self, factor: &Scalar) -> PointN {
        PointN {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }
}

impl fmt::Display for PointN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", scalar_to_string(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for PointN {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&CoordRepr(c))?;
        }
        seq.end()
    }
}

struct CoordRepr<'a>(&'a Scalar);

impl Serialize for CoordRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coord(self.0, serializer)
    }
}

impl<'de> Deserialize<'de> for PointN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PointVisitor;

        impl<'de> Visitor<'de> for PointVisitor {
            type Value = PointN;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integers or \"num/den\" strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<PointN, A::Error> {
                let mut coords = Vec::new();
                while let Some(value) = seq.next_element::<serde_json::Value>()? {
                    coords.push(scalar_from_json(&value).map_err(de::Error::custom)?);
                }
                PointN::new(coords).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(PointVisitor)
    }
}

pub(crate) fn check_same_dim(p: &PointN, q: &PointN) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    Ok(())
}

/// The max metric: the largest absolute coordinate difference.
pub fn chebyshev_distance(p: &PointN, q: &PointN) -> Result<Scalar> {
    check_same_dim(p, q)?;
    let mut best = Scalar::zero();
    for (a, b) in p.coords().iter().zip(q.coords()) {
        let diff = (a - b).abs();
        if diff > best {
            best = diff;
        }
    }
    Ok(best)
}

/// A piecewise-linear path given by its vertices: at least two, all of one
/// dimension, with no consecutive duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyline {
    vertices: Vec<PointN>,
}

impl Polyline {
    pub fn new(vertices: Vec<PointN>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices);
        }
        let dim = vertices[0].dim();
        for (i, v) in vertices.iter().enumerate() {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch(dim, v.dim()));
            }
            if i > 0 && *v == vertices[i - 1] {
                return Err(Error::DuplicateVertex(i));
            }
        }
        Ok(Polyline { vertices })
    }

    /// Convenience constructor from integer vertices; panics on invalid input.
    pub fn from_ints(vertices: &[&[i64]]) -> Self {
        Polyline::new(vertices.iter().map(|v| PointN::from_ints(v)).collect())
            .expect("valid polyline")
    }

    pub fn vertices(&self) -> &[PointN] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn first(&self) -> &PointN {
        &self.vertices[0]
    }

    pub fn last(&self) -> &PointN {
        self.vertices.last().expect("nonempty")
    }

    /// Consecutive vertex pairs, in order.
    pub fn segments(&self) -> impl Iterator<Item = (&PointN, &PointN)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }
}

impl Serialize for Polyline {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Polyline", 1)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Polyline {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<PointN>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Polyline::new(raw.vertices).map_err(de::Error::custom)
    }
}

/// Total length of a polyline: the sum of max-metric distances over
/// consecutive vertex pairs. For piecewise-linear paths this equals the
/// supremum of partition sums, since every linear piece has length equal to
/// the distance between its endpoints.
pub fn polyline_length(path: &Polyline) -> Scalar {
    path.segments()
        .map(|(a, b)| chebyshev_distance(a, b).expect("polyline vertices share a dimension"))
        .fold(Scalar::zero(), |acc, d| acc + d)
}

/// The two-vertex polyline from `p` to `q`. Always a geodesic.
pub fn segment(p: &PointN, q: &PointN) -> Result<Polyline> {
    check_same_dim(p, q)?;
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    Polyline::new(vec![p.clone(), q.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_matches_known_values() {
        // A vertex of the radius-1 hexagon of 2x+2y+3z=0 sits on the unit sphere.
        let p = PointN::from_ints(&[0, 0, 0]);
        let q = PointN::new(vec![int(1), ratio(1, 2), int(-1)]).unwrap();
        assert_eq!(chebyshev_distance(&p, &q).unwrap(), int(1));

        let o = PointN::from_ints(&[0, 0]);
        assert_eq!(chebyshev_distance(&o, &o).unwrap(), int(0));

        let a = PointN::from_ints(&[1, 2, 3]);
        let b = PointN::from_ints(&[4, 0, 3]);
        assert_eq!(chebyshev_distance(&a, &b).unwrap(), int(3));
    }

    #[test]
    fn distance_rejects_mixed_dimensions() {
        let p = PointN::from_ints(&[0, 0]);
        let q = PointN::from_ints(&[0, 0, 0]);
        assert_eq!(
            chebyshev_distance(&p, &q),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn polyline_lengths() {
        let zigzag = Polyline::from_ints(&[&[0, 0], &[1, 1], &[2, 0]]);
        assert_eq!(polyline_length(&zigzag), int(2));

        let single = Polyline::from_ints(&[&[0, 0], &[5, 3]]);
        assert_eq!(polyline_length(&single), int(5));

        let detour = Polyline::from_ints(&[&[0, 0], &[1, 2], &[2, 0]]);
        assert_eq!(polyline_length(&detour), int(4));
    }

    #[test]
    fn polyline_construction_rules() {
        assert_eq!(
            Polyline::new(vec![PointN::from_ints(&[0, 0])]),
            Err(Error::TooFewVertices)
        );
        let dup = Polyline::new(vec![
            PointN::from_ints(&[0, 0]),
            PointN::from_ints(&[0, 0]),
        ]);
        assert_eq!(dup, Err(Error::DuplicateVertex(1)));

        let mixed = Polyline::new(vec![
            PointN::from_ints(&[0, 0]),
            PointN::from_ints(&[0, 0, 0]),
        ]);
        assert_eq!(mixed, Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn segment_is_single_edge() {
        let p = PointN::from_ints(&[0, 0]);
        let q = PointN::from_ints(&[1, 0]);
        let s = segment(&p, &q).unwrap();
        assert_eq!(s.vertices(), &[p.clone(), q.clone()]);
        assert_eq!(polyline_length(&s), chebyshev_distance(&p, &q).unwrap());
        assert_eq!(segment(&p, &p), Err(Error::IdenticalPoints));
    }

    #[test]
    fn scalar_parsing_round_trips() {
        for token in ["7", "-3/4", "0", "22/7", "-5"] {
            let x = parse_scalar(token).unwrap();
            assert_eq!(scalar_to_string(&x), token);
        }
        assert_eq!(parse_scalar("6/8").unwrap(), ratio(3, 4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn point_json_uses_integers_and_fraction_strings() {
        let p = PointN::new(vec![ratio(1, 2), int(1), int(-1)]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1/2",1,-1]"#);
        let back: PointN = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn polyline_json_round_trips_and_validates() {
        let path = Polyline::from_ints(&[&[0, 0], &[1, 1], &[2, 0]]);
        let json = serde_json::to_string(&path).unwrap();
        let back: Polyline = serde_json::from_str(&json).unwrap();
        assert_eq!(back, path);

        let bad = r#"{"vertices":[[0,0],[0,0]]}"#;
        assert!(serde_json::from_str::<Polyline>(bad).is_err());
    }
}
