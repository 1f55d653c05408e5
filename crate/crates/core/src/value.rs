//! Canonical element encodings.
//!
//! Every ring and module element is encoded as a [`Value`]: a residue for
//! cyclic structures, a tuple for products and idealization pairs, and the
//! minimal coset representative for quotients. Equality of elements is
//! equality of encodings, and the derived ordering (integers by magnitude,
//! tuples lexicographically) is the canonical order used for element
//! enumeration, witness selection, and all tie-breaking.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Value {
    Int(u64),
    Tuple(Vec<Value>),
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Value {
        Value::Tuple(vec![a, b])
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            Value::Int(n) => Some(*n),
            Value::Tuple(_) => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Value]> {
        match self {
            Value::Int(_) => None,
            Value::Tuple(items) => Some(items),
        }
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Tuple(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// JSON form: integers serialize as numbers, tuples as arrays.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(n) => serializer.serialize_u64(*n),
            Value::Tuple(items) => items.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ValueVisitor;

        impl<'de> Visitor<'de> for ValueVisitor {
            type Value = Value;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or an array of values")
            }

            fn visit_u64<E: serde::de::Error>(self, n: u64) -> Result<Value, E> {
                Ok(Value::Int(n))
            }

            fn visit_i64<E: serde::de::Error>(self, n: i64) -> Result<Value, E> {
                u64::try_from(n)
                    .map(Value::Int)
                    .map_err(|_| E::custom("element encodings are non-negative"))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Value, A::Error> {
                let mut items = Vec::new();
                while let Some(item) = seq.next_element()? {
                    items.push(item);
                }
                Ok(Value::Tuple(items))
            }
        }

        deserializer.deserialize_any(ValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_lexicographic() {
        let a = Value::pair(Value::Int(0), Value::Int(1));
        let b = Value::pair(Value::Int(1), Value::Int(0));
        assert!(a < b);
        assert!(Value::Int(2) < Value::Int(10));
    }

    #[test]
    fn display_matches_input_language() {
        assert_eq!(Value::Int(3).to_string(), "3");
        let v = Value::pair(Value::Int(1), Value::pair(Value::Int(0), Value::Int(2)));
        assert_eq!(v.to_string(), "(1,(0,2))");
    }

    #[test]
    fn json_round_trip() {
        let v = Value::pair(Value::Int(1), Value::Tuple(vec![Value::Int(0), Value::Int(2)]));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "[1,[0,2]]");
        let back: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
