//! JSON form of a finite-dimensional Hopf algebra.
//!
//! ```json
//! {"field": {"spec": "Q"}, "dim": 2, "basis": ["1", "g"], "unit": ["1", "0"],
//!  "mul": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
//!  "comul": [[0,0,0,"1"], [1,1,1,"1"]],
//!  "counit": [["0","1"], ["1","1"]],
//!  "antipode": [[0,0,"1"], [1,1,"1"]]}
//! ```
//!
//! `mul` entry `[i,j,k,c]` means `e_i·e_j ∋ c·e_k`; `comul` entry `[i,j,k,c]`
//! means `Δ(e_i) ∋ c·e_j⊗e_k`; `antipode` entry `[i,j,c]` means
//! `S(e_i) ∋ c·e_j`. Omitted entries are zero; coefficients are strings.

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::hopf::FiniteHopfAlgebra;
use crate::linalg::{zero_vector, Matrix};
use crate::scalar::{Field, FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub spec: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl FieldJson {
    pub fn describe(f: &Field) -> FieldJson {
        FieldJson {
            spec: f.spec().to_string(),
            characteristic: Some(f.characteristic()),
            degree: Some(f.degree()),
            modulus: (f.degree() > 1).then(|| f.modulus_string()),
        }
    }
}

/// Counit indices are written as strings in the schema; bare numbers are
/// accepted too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Index {
    Number(usize),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(Index, String)>,
    pub antipode: Vec<(usize, usize, String)>,
}

fn at(path: String, why: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {why}"))
}

/// Parses and validates the JSON text; errors name the offending path.
pub fn parse_hopf_json(text: &str) -> Result<FiniteHopfAlgebra> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: HopfJson = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        at(if path.is_empty() { ".".into() } else { path }, e.into_inner())
    })?;
    raw.build()
}

impl HopfJson {
    pub fn build(&self) -> Result<FiniteHopfAlgebra> {
        let spec: FieldSpec = self.field.spec.parse().map_err(|e| at("field.spec".into(), e))?;
        let f = Field::new(spec).map_err(|e| at("field.spec".into(), e))?;
        if let Some(c) = self.field.characteristic {
            if c != f.characteristic() {
                return Err(at("field.characteristic".into(), format!("{} has characteristic {}", f, f.characteristic())));
            }
        }
        if let Some(d) = self.field.degree {
            if d != f.degree() {
                return Err(at("field.degree".into(), format!("{} has degree {}", f, f.degree())));
            }
        }
        let n = self.dim;
        if n == 0 {
            return Err(at("dim".into(), "dimension must be positive"));
        }
        if self.basis.len() != n {
            return Err(at("basis".into(), format!("expected {n} labels, got {}", self.basis.len())));
        }
        if self.unit.len() != n {
            return Err(at("unit".into(), format!("expected {n} coefficients, got {}", self.unit.len())));
        }
        let scalar = |path: String, s: &str| f.parse_scalar(s).map_err(|e| at(path, e));
        let index = |path: String, i: usize| if i < n { Ok(i) } else { Err(at(path, format!("index {i} out of range for dim {n}"))) };

        let unit = self.unit.iter().enumerate().map(|(i, s)| scalar(format!("unit[{i}]"), s)).collect::<Result<Vec<_>>>()?;

        let mut mul = Vec::with_capacity(self.mul.len());
        for (e, (i, j, k, c)) in self.mul.iter().enumerate() {
            mul.push((
                index(format!("mul[{e}][0]"), *i)?,
                index(format!("mul[{e}][1]"), *j)?,
                index(format!("mul[{e}][2]"), *k)?,
                scalar(format!("mul[{e}][3]"), c)?,
            ));
        }
        let mut comul = Vec::with_capacity(self.comul.len());
        for (e, (i, j, k, c)) in self.comul.iter().enumerate() {
            comul.push((
                index(format!("comul[{e}][0]"), *i)?,
                index(format!("comul[{e}][1]"), *j)?,
                index(format!("comul[{e}][2]"), *k)?,
                scalar(format!("comul[{e}][3]"), c)?,
            ));
        }
        let mut counit: Vec<Scalar> = zero_vector(&f, n);
        for (e, (i, c)) in self.counit.iter().enumerate() {
            let path = format!("counit[{e}][0]");
            let i = match i {
                Index::Number(i) => *i,
                Index::Text(t) => t.trim().parse().map_err(|_| at(path.clone(), format!("expected an index, got {t:?}")))?,
            };
            let i = index(path, i)?;
            counit[i] = &counit[i] + &scalar(format!("counit[{e}][1]"), c)?;
        }
        let mut antipode = Matrix::zeros(&f, n, n);
        let mut seen = vec![false; n];
        for (e, (i, j, c)) in self.antipode.iter().enumerate() {
            let i = index(format!("antipode[{e}][0]"), *i)?;
            let j = index(format!("antipode[{e}][1]"), *j)?;
            let c = scalar(format!("antipode[{e}][2]"), c)?;
            seen[i] = true;
            let sum = antipode.get(j, i) + &c;
            antipode.set(j, i, sum);
        }
        // An antipode is bijective, so every basis element needs an image.
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(at("antipode".into(), format!("no entries for S({}) (index {i})", self.basis[i])));
        }
        let algebra = FiniteAlgebra::new(&f, self.basis.clone(), unit, mul)?;
        FiniteHopfAlgebra::new(algebra, comul, counit, antipode)
    }
}

/// The canonical JSON document for `h`: entries in index order, zero
/// coefficients omitted.
pub fn hopf_to_json(h: &FiniteHopfAlgebra) -> HopfJson {
    let n = h.dim();
    let alg = h.algebra();
    let mut mul: Vec<_> = alg.structure_constants().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect();
    mul.sort_by_key(|e| (e.0, e.1, e.2));
    let mut comul: Vec<_> = h.comul_entries().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect();
    comul.sort_by_key(|e| (e.0, e.1, e.2));
    let counit = h
        .counit()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Index::Text(i.to_string()), c.to_string()))
        .collect();
    let s = h.antipode();
    let antipode = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !s.get(j, i).is_zero())
        .map(|(i, j)| (i, j, s.get(j, i).to_string()))
        .collect();
    HopfJson {
        field: FieldJson { spec: h.field().spec().to_string(), characteristic: None, degree: None, modulus: None },
        dim: n,
        basis: h.labels().to_vec(),
        unit: alg.unit().iter().map(|c| c.to_string()).collect(),
        mul,
        comul,
        counit,
        antipode,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::fixtures::sweedler;

    #[test]
    fn round_trip() {
        for f in [Field::rational(), Field::prime(7).unwrap(), Field::cyclotomic(4).unwrap()] {
            let h = sweedler(&f);
            let text = serde_json::to_string(&hopf_to_json(&h)).unwrap();
            let back = parse_hopf_json(&text).unwrap();
            assert!(back.same_structure(&h));
            assert_eq!(back.labels(), h.labels());
        }
    }

    fn sweedler_value() -> serde_json::Value {
        serde_json::to_value(hopf_to_json(&sweedler(&Field::rational()))).unwrap()
    }

    fn error_of(v: &serde_json::Value) -> String {
        parse_hopf_json(&v.to_string()).unwrap_err().to_string()
    }

    #[test]
    fn errors_name_the_path() {
        let mut v = sweedler_value();
        v["mul"][2][3] = serde_json::json!("1/0");
        assert!(error_of(&v).contains("at mul[2][3]"), "{}", error_of(&v));

        let mut v = sweedler_value();
        v["comul"][1][1] = serde_json::json!(9);
        assert!(error_of(&v).contains("at comul[1][1]"), "{}", error_of(&v));

        let mut v = sweedler_value();
        v["comul"][0] = serde_json::json!([0, 0, "x"]);
        assert!(error_of(&v).contains("comul[0]"), "{}", error_of(&v));

        let mut v = sweedler_value();
        v.as_object_mut().unwrap().remove("antipode");
        assert!(error_of(&v).contains("antipode"), "{}", error_of(&v));

        let mut v = sweedler_value();
        v["field"]["spec"] = serde_json::json!("R");
        assert!(error_of(&v).contains("at field.spec"), "{}", error_of(&v));

        let mut v = sweedler_value();
        v["basis"].as_array_mut().unwrap().pop();
        assert!(error_of(&v).contains("at basis"), "{}", error_of(&v));
    }

    #[test]
    fn deleted_antipode_column_is_an_input_error() {
        let mut v = sweedler_value();
        let kept: Vec<_> = v["antipode"].as_array().unwrap().iter().filter(|e| e[0] != 3).cloned().collect();
        v["antipode"] = serde_json::Value::Array(kept);
        assert!(error_of(&v).contains("S(gx)"), "{}", error_of(&v));
    }
}
