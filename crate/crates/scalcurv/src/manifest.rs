//! JSON manifest formats for manifolds and bounding cobordisms.
//!
//! Manifold manifest:
//!
//! ```json
//! {"name": "K3", "dimension": 4, "signature": 16,
//!  "pontrjagin_numbers": {"[1]": "48"},
//!  "is_spin": true, "rational_pontrjagin_classes_vanish": false, "admits_psc": false}
//! ```
//!
//! Cobordism manifest; `boundary` is either a manifold manifest object or a
//! catalog reference such as `"catalog:S7"`:
//!
//! ```json
//! {"name": "E8", "dimension": 8, "signature": 8, "relative_pontrjagin_numbers": {},
//!  "boundary": "catalog:S7", "psc_extension": true}
//! ```
//!
//! Unknown fields are rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use scalcurv_core::invariants::CobordismData;
use scalcurv_core::manifolds::{CharacteristicData, ManifoldFlags};
use scalcurv_core::{NumberTable, Partition, Rational};

/// Integer accepted as a JSON number or a decimal string; written as a number
/// when it fits in `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.trim().parse().map(JsonInt).map_err(|_| E::custom(format!("invalid integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// Rational written as `"num/den"`; integers may also be given as JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"num/den\" or an integer")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonRational, E> {
                Ok(JsonRational(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonRational, E> {
                Ok(JsonRational(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonRational, E> {
                v.parse().map(JsonRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// Partition-keyed number table, keys rendered as `"[2,1]"`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JsonNumberTable(pub NumberTable);

impl Serialize for JsonNumberTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // descending partition order, matching `partitions(k)`
        let ordered: Vec<(String, JsonRational)> = self
            .0
            .iter()
            .rev()
            .map(|(p, v)| (p.to_string(), JsonRational(v.clone())))
            .collect();
        s.collect_map(ordered)
    }
}

impl<'de> Deserialize<'de> for JsonNumberTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, JsonRational> = BTreeMap::deserialize(d)?;
        let mut table = NumberTable::new();
        for (k, v) in raw {
            let p: Partition = k.parse().map_err(de::Error::custom)?;
            if table.insert(p.clone(), v.0).is_some() {
                return Err(de::Error::custom(format!("duplicate partition key {p}")));
            }
        }
        Ok(JsonNumberTable(table))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldManifest {
    pub name: String,
    pub dimension: u32,
    pub signature: JsonInt,
    #[serde(default)]
    pub pontrjagin_numbers: JsonNumberTable,
    pub is_spin: bool,
    pub rational_pontrjagin_classes_vanish: bool,
    pub admits_psc: bool,
}

impl ManifoldManifest {
    pub fn from_data(m: &CharacteristicData) -> Self {
        ManifoldManifest {
            name: m.name().to_string(),
            dimension: m.dimension(),
            signature: JsonInt(m.signature().clone()),
            pontrjagin_numbers: JsonNumberTable(m.pontrjagin_numbers().clone()),
            is_spin: m.is_spin(),
            rational_pontrjagin_classes_vanish: m.rational_pontrjagin_classes_vanish(),
            admits_psc: m.admits_psc(),
        }
    }

    pub fn to_data(&self) -> scalcurv_core::Result<CharacteristicData> {
        CharacteristicData::new(
            self.name.clone(),
            self.dimension,
            self.pontrjagin_numbers.0.clone(),
            self.signature.0.clone(),
            ManifoldFlags {
                is_spin: self.is_spin,
                rational_pontrjagin_classes_vanish: self.rational_pontrjagin_classes_vanish,
                admits_psc: self.admits_psc,
            },
        )
    }
}

/// A manifold given inline or as `"catalog:NAME"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ManifoldRef {
    Catalog(String),
    Inline(ManifoldManifest),
}

impl<'de> Deserialize<'de> for ManifoldRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ManifoldRef;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a manifold manifest object or a \"catalog:NAME\" string")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ManifoldRef, E> {
                Ok(ManifoldRef::Catalog(v.to_string()))
            }
            fn visit_map<A: de::MapAccess<'de>>(self, map: A) -> Result<ManifoldRef, A::Error> {
                ManifoldManifest::deserialize(de::value::MapAccessDeserializer::new(map))
                    .map(ManifoldRef::Inline)
            }
        }
        d.deserialize_any(V)
    }
}

pub const CATALOG_PREFIX: &str = "catalog:";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobordismManifest {
    pub name: String,
    pub dimension: u32,
    pub signature: JsonInt,
    #[serde(default)]
    pub relative_pontrjagin_numbers: JsonNumberTable,
    pub boundary: ManifoldRef,
    pub psc_extension: bool,
}

impl CobordismManifest {
    pub fn from_data(w: &CobordismData) -> Self {
        CobordismManifest {
            name: w.name().to_string(),
            dimension: w.dimension(),
            signature: JsonInt(w.signature().clone()),
            relative_pontrjagin_numbers: JsonNumberTable(w.relative_pontrjagin_numbers().clone()),
            boundary: ManifoldRef::Inline(ManifoldManifest::from_data(w.boundary())),
            psc_extension: w.psc_extension(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_manifold() {
        let text = r#"{"name": "K3", "dimension": 4, "signature": 16,
            "pontrjagin_numbers": {"[1]": "48"},
            "is_spin": true, "rational_pontrjagin_classes_vanish": false, "admits_psc": false}"#;
        let m: ManifoldManifest = serde_json::from_str(text).unwrap();
        let data = m.to_data().unwrap();
        assert!(data.same_characteristics(&scalcurv_core::manifolds::k3()));
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{"name": "x", "dimension": 7, "signature": 0, "colour": "red",
            "is_spin": true, "rational_pontrjagin_classes_vanish": true, "admits_psc": true}"#;
        let err = serde_json::from_str::<ManifoldManifest>(text).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
    }

    #[test]
    fn rejects_bad_keys_and_values() {
        let bad_key = r#"{"name": "x", "dimension": 4, "signature": 0, "pontrjagin_numbers": {"p1": "1"},
            "is_spin": true, "rational_pontrjagin_classes_vanish": false, "admits_psc": true}"#;
        assert!(serde_json::from_str::<ManifoldManifest>(bad_key).is_err());
        let bad_val = r#"{"name": "x", "dimension": 4, "signature": 0, "pontrjagin_numbers": {"[1]": "1/0"},
            "is_spin": true, "rational_pontrjagin_classes_vanish": false, "admits_psc": true}"#;
        assert!(serde_json::from_str::<ManifoldManifest>(bad_val).is_err());
    }

    #[test]
    fn cobordism_with_catalog_boundary() {
        let text = r#"{"name": "E8", "dimension": 8, "signature": 8, "relative_pontrjagin_numbers": {},
            "boundary": "catalog:S7", "psc_extension": true}"#;
        let c: CobordismManifest = serde_json::from_str(text).unwrap();
        assert_eq!(c.boundary, ManifoldRef::Catalog("catalog:S7".into()));
        assert_eq!(c.signature, JsonInt(8.into()));
    }

    #[test]
    fn inline_boundary_errors_name_the_field() {
        let text = r#"{"name": "W", "dimension": 8, "signature": 8,
            "boundary": {"name": "M", "dimension": 7, "signature": 0, "is_spin": true,
                         "rational_pontrjagin_classes_vanish": true, "admits_psc": "yes"},
            "psc_extension": true}"#;
        let de = &mut serde_json::Deserializer::from_str(text);
        let err = serde_path_to_error::deserialize::<_, CobordismManifest>(de).unwrap_err();
        assert_eq!(err.path().to_string(), "boundary.admits_psc");
    }

    #[test]
    fn big_integers_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let json = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(serde_json::from_str::<JsonInt>(&json).unwrap(), JsonInt(big));
    }

    #[test]
    fn table_order_is_descending() {
        let m = ManifoldManifest::from_data(&scalcurv_core::manifolds::hp2());
        let json = serde_json::to_string(&m.pontrjagin_numbers).unwrap();
        assert_eq!(json, r#"{"[2]":"7","[1,1]":"4"}"#);
    }
}
