//! The 48-element isometry group of the cube and its action on planes.
//!
//! Signed permutations of the three axes exhaust the cube isometries fixing
//! the origin. They act on planes through the origin; orbits under that
//! action, together with the triangle similarity class of `|a|, |b|, |c|`,
//! decide when two planes are isometric.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::metric::{parse_scalar, scalar_to_string, PointN, Scalar};
use crate::plane::Plane;
use crate::sector::Sign;
use crate::{Error, Result};

/// A cube isometry `(x_1, x_2, x_3) -> (s_1 x_{p_1}, s_2 x_{p_2}, s_3 x_{p_3})`:
/// output coordinate `i` reads input axis `perm[i]` with sign `signs[i]`.
///
/// Axes are 0-based in code; the JSON form is 1-based
/// (`{"perm": [3, 2, 1], "signs": ["+", "-", "+"]}` sends `(x, y, z)` to
/// `(z, -y, x)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: [usize; 3],
    signs: [Sign; 3],
}

impl SignedPermutation {
    pub fn new(perm: [usize; 3], signs: [Sign; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p >= 3 || seen[p] {
                return Err(Error::InvalidPermutation(perm));
            }
            seen[p] = true;
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity() -> Self {
        SignedPermutation {
            perm: [0, 1, 2],
            signs: [Sign::Plus; 3],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn signs(&self) -> [Sign; 3] {
        self.signs
    }

    /// The central inversion `(x, y, z) -> (-x, -y, -z)`.
    pub fn central_inversion() -> Self {
        SignedPermutation {
            perm: [0, 1, 2],
            signs: [Sign::Minus; 3],
        }
    }

    /// Applies the isometry to a point of `R^3`.
    pub fn apply(&self, p: &PointN) -> Result<PointN> {
        if p.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                got: p.dim(),
            });
        }
        let coords = (0..3)
            .map(|i| self.signs[i].apply(p.coord(self.perm[i])))
            .collect();
        PointN::new(coords)
    }

    /// Function composition: `self` after `other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let mut perm = [0; 3];
        let mut signs = [Sign::Plus; 3];
        for i in 0..3 {
            perm[i] = other.perm[self.perm[i]];
            signs[i] = if self.signs[i] == other.signs[self.perm[i]] {
                Sign::Plus
            } else {
                Sign::Minus
            };
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut perm = [0; 3];
        let mut signs = [Sign::Plus; 3];
        for i in 0..3 {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        write!(f, "(")?;
        for i in 0..3 {
            if i > 0 {
                write!(f, ", ")?;
            }
            let sign = match self.signs[i] {
                Sign::Plus => "",
                Sign::Minus => "-",
            };
            write!(f, "{}{}", sign, names[self.perm[i]])?;
        }
        write!(f, ")")
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SignedPermutation", 2)?;
        let one_based: Vec<usize> = self.perm.iter().map(|p| p + 1).collect();
        st.serialize_field("perm", &one_based)?;
        st.serialize_field("signs", &self.signs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            perm: [usize; 3],
            signs: [Sign; 3],
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut perm = [0usize; 3];
        for (i, p) in raw.perm.iter().enumerate() {
            if *p == 0 {
                return Err(de::Error::custom("permutation axes are 1-based in JSON"));
            }
            perm[i] = p - 1;
        }
        SignedPermutation::new(perm, raw.signs).map_err(de::Error::custom)
    }
}

/// All 48 cube isometries, in a fixed order: permutations lexicographically,
/// sign patterns in binary-counter order with `+` first. The identity comes
/// first.
pub fn group_elements() -> Vec<SignedPermutation> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for mask in 0u8..8 {
            let signs = [
                if mask & 4 == 0 { Sign::Plus } else { Sign::Minus },
                if mask & 2 == 0 { Sign::Plus } else { Sign::Minus },
                if mask & 1 == 0 { Sign::Plus } else { Sign::Minus },
            ];
            out.push(SignedPermutation { perm, signs });
        }
    }
    out
}

/// The image of a plane through the origin under a cube isometry, in
/// canonical scale. A left action: `act(g.compose(h), p) = act(g, act(h, p))`.
pub fn act(g: &SignedPermutation, plane: &Plane) -> Result<Plane> {
    if !plane.through_origin() {
        return Err(Error::NonzeroOffset);
    }
    // A point u lies on the image iff g^{-1}(u) satisfies the old equation,
    // so the new coefficient on axis i is sign_i * old coefficient on perm_i.
    let mut coeffs = [BigInt::from(0), BigInt::from(0), BigInt::from(0)];
    for (i, slot) in coeffs.iter_mut().enumerate() {
        let c = plane.coeff(g.perm[i]).clone();
        *slot = match g.signs[i] {
            Sign::Plus => c,
            Sign::Minus => -c,
        };
    }
    Plane::new(
        BigRational::from_integer(coeffs[0].clone()),
        BigRational::from_integer(coeffs[1].clone()),
        BigRational::from_integer(coeffs[2].clone()),
        BigRational::from_integer(BigInt::from(0)),
    )
}

/// The orbit of a plane under the 48-element group, with its stabilizer.
/// The orbit-stabilizer product is always 48.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneOrbit {
    members: Vec<Plane>,
    stabilizer: Vec<SignedPermutation>,
}

impl PlaneOrbit {
    pub fn members(&self) -> &[Plane] {
        &self.members
    }

    pub fn stabilizer(&self) -> &[SignedPermutation] {
        &self.stabilizer
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Computes the orbit and stabilizer of a plane through the origin.
/// Members are sorted; the stabilizer follows [`group_elements`] order.
pub fn orbit(plane: &Plane) -> Result<PlaneOrbit> {
    if !plane.through_origin() {
        return Err(Error::NonzeroOffset);
    }
    let mut members = BTreeSet::new();
    let mut stabilizer = Vec::new();
    for g in group_elements() {
        let image = act(&g, plane)?;
        if image == *plane {
            stabilizer.push(g);
        }
        members.insert(image);
    }
    Ok(PlaneOrbit {
        members: members.into_iter().collect(),
        stabilizer,
    })
}

/// The complete isometry invariant of a plane: flat, or the similarity class
/// of the triangle with sides `|a| <= |b| <= |c|`, normalized so the largest
/// side is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalClass {
    Flat,
    Triangle([Scalar; 3]),
}

impl CanonicalClass {
    pub fn is_flat(&self) -> bool {
        matches!(self, CanonicalClass::Flat)
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalClass::Flat => f.write_str("flat"),
            CanonicalClass::Triangle(sides) => write!(
                f,
                "triangle({}, {}, {})",
                scalar_to_string(&sides[0]),
                scalar_to_string(&sides[1]),
                scalar_to_string(&sides[2])
            ),
        }
    }
}

impl Serialize for CanonicalClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CanonicalClass::Flat => {
                let mut st = serializer.serialize_struct("CanonicalClass", 1)?;
                st.serialize_field("kind", "flat")?;
                st.end()
            }
            CanonicalClass::Triangle(sides) => {
                let mut st = serializer.serialize_struct("CanonicalClass", 2)?;
                st.serialize_field("kind", "triangle")?;
                let sides: Vec<String> = sides.iter().map(scalar_to_string).collect();
                st.serialize_field("sides", &sides)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for CanonicalClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: String,
            sides: Option<[String; 3]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        match raw.kind.as_str() {
            "flat" => Ok(CanonicalClass::Flat),
            "triangle" => {
                let sides = raw
                    .sides
                    .ok_or_else(|| de::Error::custom("triangle class needs sides"))?;
                let mut parsed = [Scalar::from_integer(0.into()), Scalar::from_integer(0.into()), Scalar::from_integer(0.into())];
                for (slot, s) in parsed.iter_mut().zip(&sides) {
                    *slot = parse_scalar(s).map_err(de::Error::custom)?;
                }
                Ok(CanonicalClass::Triangle(parsed))
            }
            other => Err(de::Error::custom(format!("unknown class kind {other:?}"))),
        }
    }
}

/// Classifies a plane up to isometry. The affine offset never matters
/// (translation along an axis is an isometry).
pub fn canonical_class(plane: &Plane) -> CanonicalClass {
    if !plane.triangle_test() {
        return CanonicalClass::Flat;
    }
    let mut sides: Vec<BigInt> = (0..3).map(|k| plane.coeff(k).abs()).collect();
    sides.sort();
    let largest = sides[2].clone();
    let norm = |s: &BigInt| BigRational::new(s.clone(), largest.clone());
    CanonicalClass::Triangle([norm(&sides[0]), norm(&sides[1]), norm(&sides[2])])
}

/// Are two planes isometric? Exactly when their canonical classes agree:
/// both flat, or similar triangles.
pub fn isometric(p1: &Plane, p2: &Plane) -> bool {
    canonical_class(p1) == canonical_class(p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{int, ratio};

    #[test]
    fn group_has_48_closed_elements() {
        let elements = group_elements();
        assert_eq!(elements.len(), 48);
        let set: BTreeSet<_> = elements.iter().cloned().collect();
        assert_eq!(set.len(), 48);
        assert!(elements[0].is_identity());
        for g in &elements {
            assert!(set.contains(&g.inverse()));
            assert!(g.compose(&g.inverse()).is_identity());
        }
        for g in elements.iter().take(8) {
            for h in &elements {
                assert!(set.contains(&g.compose(h)));
            }
        }
        // The quarter turn around the x axis: (x, y, z) -> (x, -z, y).
        let quarter =
            SignedPermutation::new([0, 2, 1], [Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        assert!(set.contains(&quarter));
        let p = PointN::from_ints(&[5, 1, 2]);
        assert_eq!(quarter.apply(&p).unwrap(), PointN::from_ints(&[5, -2, 1]));
    }

    #[test]
    fn composition_matches_function_application() {
        let elements = group_elements();
        let p = PointN::from_ints(&[1, 2, 3]);
        for g in elements.iter().step_by(5) {
            for h in elements.iter().step_by(7) {
                let composed = g.compose(h).apply(&p).unwrap();
                let chained = g.apply(&h.apply(&p).unwrap()).unwrap();
                assert_eq!(composed, chained);
            }
        }
    }

    #[test]
    fn action_on_planes() {
        // (x, y, z) -> (z, -y, x) carries ax+by+cz=0 to az-by+cx=0.
        let g = SignedPermutation::new([2, 1, 0], [Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        let plane = Plane::from_ints(2, 3, 5, 0);
        assert_eq!(act(&g, &plane).unwrap(), Plane::from_ints(5, -3, 2, 0));

        let id = SignedPermutation::identity();
        assert_eq!(act(&id, &plane).unwrap(), plane);

        // Central inversion fixes every plane after canonicalization.
        let inv = SignedPermutation::central_inversion();
        assert_eq!(act(&inv, &plane).unwrap(), plane);

        assert_eq!(
            act(&id, &Plane::from_ints(1, 1, 1, 4)),
            Err(Error::NonzeroOffset)
        );
    }

    #[test]
    fn action_is_a_left_action() {
        let planes = [
            Plane::from_ints(1, 1, 1, 0),
            Plane::from_ints(2, 2, 3, 0),
            Plane::from_ints(2, 3, 4, 0),
            Plane::from_ints(0, 0, 1, 0),
        ];
        let elements = group_elements();
        for plane in &planes {
            for g in elements.iter().step_by(3) {
                for h in elements.iter().step_by(5) {
                    let lhs = act(&g.compose(h), plane).unwrap();
                    let rhs = act(g, &act(h, plane).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_match_coefficient_patterns() {
        let o = orbit(&Plane::from_ints(1, 1, 1, 0)).unwrap();
        assert_eq!(o.size(), 4);
        assert_eq!(o.stabilizer().len(), 12);

        let o = orbit(&Plane::from_ints(2, 2, 3, 0)).unwrap();
        assert_eq!(o.size(), 12);
        let expected_stab = [
            SignedPermutation::identity(),
            SignedPermutation::central_inversion(),
            SignedPermutation::new([1, 0, 2], [Sign::Plus; 3]).unwrap(),
            SignedPermutation::new([1, 0, 2], [Sign::Minus; 3]).unwrap(),
        ];
        assert_eq!(o.stabilizer().len(), 4);
        for g in &expected_stab {
            assert!(o.stabilizer().contains(g));
        }

        let o = orbit(&Plane::from_ints(2, 3, 4, 0)).unwrap();
        assert_eq!(o.size(), 24);
        assert_eq!(
            o.stabilizer(),
            &[
                SignedPermutation::identity(),
                SignedPermutation::central_inversion()
            ]
        );
    }

    #[test]
    fn classes_and_isometry_decisions() {
        assert_eq!(
            canonical_class(&Plane::from_ints(1, 1, 1, 7)),
            CanonicalClass::Triangle([int(1), int(1), int(1)])
        );
        assert_eq!(
            canonical_class(&Plane::from_ints(3, -2, 2, 0)),
            CanonicalClass::Triangle([ratio(2, 3), ratio(2, 3), int(1)])
        );
        assert_eq!(
            canonical_class(&Plane::from_ints(1, 2, 3, 0)),
            CanonicalClass::Flat
        );

        assert!(isometric(
            &Plane::from_ints(1, 1, 1, 0),
            &Plane::from_ints(2, 2, 2, 5)
        ));
        assert!(!isometric(
            &Plane::from_ints(1, 1, 1, 0),
            &Plane::from_ints(2, 2, 3, 0)
        ));
        assert!(isometric(
            &Plane::from_ints(1, 2, 3, 0),
            &Plane::from_ints(0, 0, 1, 0)
        ));
    }

    #[test]
    fn signed_permutation_json() {
        let g = SignedPermutation::new([2, 1, 0], [Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"perm":[3,2,1],"signs":["+","-","+"]}"#);
        assert_eq!(serde_json::from_str::<SignedPermutation>(&json).unwrap(), g);

        assert!(serde_json::from_str::<SignedPermutation>(
            r#"{"perm":[1,1,2],"signs":["+","+","+"]}"#
        )
        .is_err());
    }

    #[test]
    fn class_json() {
        let class = canonical_class(&Plane::from_ints(3, -2, 2, 0));
        let json = serde_json::to_string(&class).unwrap();
        assert_eq!(json, r#"{"kind":"triangle","sides":["2/3","2/3","1"]}"#);
        assert_eq!(serde_json::from_str::<CanonicalClass>(&json).unwrap(), class);

        let flat = CanonicalClass::Flat;
        let json = serde_json::to_string(&flat).unwrap();
        assert_eq!(json, r#"{"kind":"flat"}"#);
        assert_eq!(serde_json::from_str::<CanonicalClass>(&json).unwrap(), flat);
    }
}
