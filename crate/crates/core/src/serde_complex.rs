//! JSON helpers: complex numbers travel as `[re, im]` pairs, matrices as
//! row-major nested arrays of such pairs.

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Deserializer, Serialize};

use crate::{CMatrix, CVector, Complex64};

pub fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    pair(*z).serialize(s)
}

pub fn deserialize_complex<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
    let [re, im] = <[f64; 2]>::deserialize(d)?;
    Ok(Complex64::new(re, im))
}

pub fn serialize_complex_slice<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&pair(*z))?;
    }
    seq.end()
}

pub fn deserialize_complex_vec<'de, D: Deserializer<'de>>(
    d: D,
) -> Result<Vec<Complex64>, D::Error> {
    let raw = Vec::<[f64; 2]>::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect())
}

pub fn serialize_vector<S: Serializer>(v: &CVector, s: S) -> Result<S::Ok, S::Error> {
    serialize_complex_slice(v.as_slice(), s)
}

pub fn serialize_matrix<S: Serializer>(m: &CMatrix, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.nrows()))?;
    for i in 0..m.nrows() {
        let row: Vec<[f64; 2]> = (0..m.ncols()).map(|j| pair(m[(i, j)])).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

/// Row-major `[re, im]` representation of a matrix, for ad hoc reports.
pub fn matrix_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| pair(m[(i, j)])).collect())
        .collect()
}
