//! Serialization helpers. Integers beyond `u64` are written as decimal
//! strings so JSON consumers never see a lossy float.

use num_rational::Ratio;
use serde::Serializer;

pub fn big<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(*v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

pub fn big_signed<S: Serializer>(v: &i128, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(*v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// Integers as numbers, proper fractions as `"a/b"`.
pub fn ratio<S: Serializer>(v: &Ratio<i128>, s: S) -> Result<S::Ok, S::Error> {
    if v.is_integer() {
        big_signed(&v.to_integer(), s)
    } else {
        s.serialize_str(&format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn big_vec<S: Serializer>(v: &[i128], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(*x) {
            Ok(y) => seq.serialize_element(&y)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}
