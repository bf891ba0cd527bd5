//! Wire formats. Rationals are strings `"p/q"` (or `"p"`); integers are
//! also accepted on input. Conversions to domain types canonicalize.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::{AffineSubspaceE, AffineSubspaceV, Point};
use crate::error::{check_dim, Error, Result};
use crate::factorization::{product, Factorization};
use crate::isometry::{Isometry, Reflection};
use crate::linalg::{LinearSubspace, Matrix, Scalar, Vector};
use crate::poset::PosetElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Scalar);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl Visitor<'_> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an exact rational as \"p/q\", \"p\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                let q = Scalar::from_str(v.trim()).map_err(|_| E::custom(format!("bad rational {v:?}")))?;
                Ok(Rational(q))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational(crate::linalg::int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                let v = i64::try_from(v).map_err(|_| E::custom("integer out of range"))?;
                Ok(Rational(crate::linalg::int(v)))
            }
        }

        d.deserialize_any(RationalVisitor)
    }
}

pub type VectorJson = Vec<Rational>;

fn vector_to_json(v: &Vector) -> VectorJson {
    v.coords().iter().cloned().map(Rational).collect()
}

fn vector_from_json(v: &[Rational]) -> Vector {
    Vector::new(v.iter().map(|q| q.0.clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub dim_ambient: usize,
    pub basis: Vec<VectorJson>,
}

impl From<&LinearSubspace> for SubspaceJson {
    fn from(u: &LinearSubspace) -> Self {
        SubspaceJson { dim_ambient: u.ambient(), basis: u.basis().iter().map(vector_to_json).collect() }
    }
}

impl TryFrom<&SubspaceJson> for LinearSubspace {
    type Error = Error;

    fn try_from(j: &SubspaceJson) -> Result<Self> {
        let vectors: Vec<Vector> = j.basis.iter().map(|v| vector_from_json(v)).collect();
        LinearSubspace::span(j.dim_ambient, &vectors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AffineJson {
    #[serde(rename = "affineE")]
    E { point: VectorJson, direction: SubspaceJson },
    #[serde(rename = "affineV")]
    V {
        #[serde(rename = "U")]
        u: SubspaceJson,
        mu: VectorJson,
    },
}

impl From<&AffineSubspaceE> for AffineJson {
    fn from(b: &AffineSubspaceE) -> Self {
        AffineJson::E { point: vector_to_json(&b.point().position()), direction: b.direction().into() }
    }
}

impl From<&AffineSubspaceV> for AffineJson {
    fn from(m: &AffineSubspaceV) -> Self {
        AffineJson::V { u: m.direction().into(), mu: vector_to_json(m.mu()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionJson {
    pub root: VectorJson,
    pub point: VectorJson,
}

impl From<&Reflection> for ReflectionJson {
    fn from(r: &Reflection) -> Self {
        ReflectionJson { root: vector_to_json(r.root()), point: vector_to_json(&r.mirror().point().position()) }
    }
}

impl TryFrom<&ReflectionJson> for Reflection {
    type Error = Error;

    fn try_from(j: &ReflectionJson) -> Result<Self> {
        Reflection::from_root(&vector_from_json(&j.root), &Point::at(vector_from_json(&j.point)))
    }
}

/// An isometry given by its matrix and translation, as a product of
/// reflections (the first listed is applied last), or wrapped in an
/// `"isometry"` field of a larger document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IsometryJson {
    Affine {
        dim: usize,
        matrix: Vec<VectorJson>,
        translation: VectorJson,
    },
    Reflections {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        reflections: Vec<ReflectionJson>,
    },
    Wrapped {
        isometry: Box<IsometryJson>,
    },
}

impl From<&Isometry> for IsometryJson {
    fn from(w: &Isometry) -> Self {
        IsometryJson::Affine {
            dim: w.dim(),
            matrix: w.linear().rows().iter().map(vector_to_json).collect(),
            translation: vector_to_json(w.translation_part()),
        }
    }
}

impl TryFrom<&IsometryJson> for Isometry {
    type Error = Error;

    fn try_from(j: &IsometryJson) -> Result<Self> {
        match j {
            IsometryJson::Affine { dim, matrix, translation } => {
                check_dim(*dim, matrix.len())?;
                check_dim(*dim, translation.len())?;
                let rows = matrix.iter().map(|r| r.iter().map(|q| q.0.clone()).collect()).collect();
                Isometry::new(Matrix::from_rows(rows)?, vector_from_json(translation))
            }
            IsometryJson::Reflections { dim, reflections } => {
                let n = match (dim, reflections.first()) {
                    (Some(n), _) => *n,
                    (None, Some(r)) => r.root.len(),
                    (None, None) => return Err(Error::EmptyInput("reflections without a dimension")),
                };
                let factors = reflections.iter().map(Reflection::try_from).collect::<Result<Vec<_>>>()?;
                for r in &factors {
                    check_dim(n, r.dim())?;
                }
                Ok(product(n, &factors))
            }
            IsometryJson::Wrapped { isometry } => Isometry::try_from(isometry.as_ref()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub target: IsometryJson,
    pub factors: Vec<ReflectionJson>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson { target: f.target().into(), factors: f.factors().iter().map(Into::into).collect() }
    }
}

impl TryFrom<&FactorizationJson> for Factorization {
    type Error = Error;

    fn try_from(j: &FactorizationJson) -> Result<Self> {
        let target = Isometry::try_from(&j.target)?;
        let factors = j.factors.iter().map(Reflection::try_from).collect::<Result<Vec<_>>>()?;
        Factorization::new(target, factors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ElementJson {
    #[serde(rename = "e")]
    E { point: VectorJson, direction: SubspaceJson },
    #[serde(rename = "h")]
    H {
        #[serde(rename = "U")]
        u: SubspaceJson,
        mu: VectorJson,
    },
    #[serde(rename = "n")]
    N {
        #[serde(rename = "U")]
        u: SubspaceJson,
    },
}

impl From<&PosetElement> for ElementJson {
    fn from(p: &PosetElement) -> Self {
        match p {
            PosetElement::Elliptic(b) => {
                ElementJson::E { point: vector_to_json(&b.point().position()), direction: b.direction().into() }
            }
            PosetElement::Hyperbolic(m) => ElementJson::H { u: m.direction().into(), mu: vector_to_json(m.mu()) },
            PosetElement::New(u) => ElementJson::N { u: u.into() },
        }
    }
}

impl TryFrom<&ElementJson> for PosetElement {
    type Error = Error;

    fn try_from(j: &ElementJson) -> Result<Self> {
        match j {
            ElementJson::E { point, direction } => {
                let dir = LinearSubspace::try_from(direction)?;
                Ok(PosetElement::Elliptic(AffineSubspaceE::new(&Point::at(vector_from_json(point)), dir)?))
            }
            ElementJson::H { u, mu } => {
                let dir = LinearSubspace::try_from(u)?;
                PosetElement::hyperbolic(AffineSubspaceV::standard_form(dir, &vector_from_json(mu))?)
            }
            ElementJson::N { u } => {
                let u = LinearSubspace::try_from(u)?;
                if u.is_zero() {
                    return Err(Error::InvalidSubspace("new elements need a nonzero subspace".into()));
                }
                Ok(PosetElement::New(u))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::factor;
    use crate::linalg::frac;

    #[test]
    fn rationals_round_trip() {
        let s = serde_json::to_string(&Rational(frac(-3, 6))).unwrap();
        assert_eq!(s, "\"-1/2\"");
        assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), Rational(frac(-1, 2)));
        assert_eq!(serde_json::from_str::<Rational>("4").unwrap(), Rational(frac(4, 1)));
        assert_eq!(serde_json::to_string(&Rational(frac(4, 1))).unwrap(), "\"4\"");
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
        assert!(serde_json::from_str::<Rational>("0.5").is_err());
    }

    #[test]
    fn isometry_forms_agree() {
        let by_matrix = r#"{"dim":2,"matrix":[["1","0"],["0","-1"]],"translation":["1","0"]}"#;
        let by_reflections = r#"{"reflections":[{"root":[1,0],"point":["1/2",0]},{"root":[1,0],"point":[0,0]},{"root":[0,1],"point":[0,0]}]}"#;
        let a = Isometry::try_from(&serde_json::from_str::<IsometryJson>(by_matrix).unwrap()).unwrap();
        let b = Isometry::try_from(&serde_json::from_str::<IsometryJson>(by_reflections).unwrap()).unwrap();
        assert_eq!(a, b);
        let wrapped = format!(r#"{{"isometry":{by_matrix},"extra":1}}"#);
        let c = Isometry::try_from(&serde_json::from_str::<IsometryJson>(&wrapped).unwrap()).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn reflection_order_is_outermost_first() {
        // Reflect in x = 0 first, then x = 1: translation by +2.
        let j = r#"{"reflections":[{"root":[1],"point":[1]},{"root":[1],"point":[0]}]}"#;
        let w = Isometry::try_from(&serde_json::from_str::<IsometryJson>(j).unwrap()).unwrap();
        assert_eq!(w, Isometry::translation(Vector::from_ints(&[2])));
    }

    #[test]
    fn non_orthogonal_is_rejected() {
        let j = r#"{"dim":2,"matrix":[["2","0"],["0","1"]],"translation":["0","0"]}"#;
        let parsed = serde_json::from_str::<IsometryJson>(j).unwrap();
        assert_eq!(Isometry::try_from(&parsed), Err(Error::NotOrthogonal));
    }

    #[test]
    fn elements_round_trip() {
        let m = AffineSubspaceV::standard_form(LinearSubspace::coordinate(3, &[0]), &Vector::from_ints(&[5, 1, 1]))
            .unwrap();
        let elements = [
            PosetElement::Hyperbolic(m),
            PosetElement::bottom(3),
            PosetElement::New(LinearSubspace::coordinate(3, &[1])),
        ];
        for p in &elements {
            let text = serde_json::to_string(&ElementJson::from(p)).unwrap();
            let back = PosetElement::try_from(&serde_json::from_str::<ElementJson>(&text).unwrap()).unwrap();
            assert_eq!(&back, p);
        }
        let h = serde_json::to_value(ElementJson::from(&elements[0])).unwrap();
        assert_eq!(h["kind"], "h");
        assert_eq!(h["mu"], serde_json::json!(["0", "1", "1"]));
    }

    #[test]
    fn linear_move_set_is_not_hyperbolic() {
        let j = r#"{"kind":"h","U":{"dim_ambient":2,"basis":[[1,0]]},"mu":[3,0]}"#;
        let parsed = serde_json::from_str::<ElementJson>(j).unwrap();
        assert!(PosetElement::try_from(&parsed).is_err());
    }

    #[test]
    fn factorization_round_trip() {
        let f = factor(&Isometry::translation(Vector::from_ints(&[2, 0])));
        let text = serde_json::to_string(&FactorizationJson::from(&f)).unwrap();
        let back = Factorization::try_from(&serde_json::from_str::<FactorizationJson>(&text).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
