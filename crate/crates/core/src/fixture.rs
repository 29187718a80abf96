//! JSON fixtures: named objects (`ring`, `dim`, row-major `gram`) and named
//! morphisms (`dom`, `cod`, row-major `mat`), all scalars as strings.
//!
//! ```json
//! { "objects":   { "X": { "ring": "rat", "dim": 1, "gram": ["2"] } },
//!   "morphisms": { "f": { "dom": "X", "cod": "X", "mat": ["1/2"] } } }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::Matrix;
use crate::scalars::{Scalar, ScalarRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub ring: String,
    pub dim: usize,
    pub gram: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub dom: String,
    pub cod: String,
    pub mat: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSpec {
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
}

/// A validated fixture.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fixture {
    pub objects: BTreeMap<String, HObject>,
    pub morphisms: BTreeMap<String, HMorphism>,
}

fn parse_entries(ring: ScalarRing, entries: &[String], path: &str) -> Result<Vec<Scalar>> {
    entries
        .iter()
        .enumerate()
        .map(|(i, s)| Scalar::parse(ring, s).map_err(|e| Error::Parse(format!("{path}[{i}]: {e}"))))
        .collect()
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{path}: {msg}")),
        other => Error::Parse(format!("{path}: {other}")),
    }
}

impl Fixture {
    /// Parses and validates; errors carry a line/column or a field path.
    pub fn parse(text: &str) -> Result<Fixture> {
        // serde_json errors end with "at line L column C".
        let spec: FixtureSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Fixture::from_spec(&spec)
    }

    pub fn from_spec(spec: &FixtureSpec) -> Result<Fixture> {
        let mut fixture = Fixture::default();
        for (name, o) in &spec.objects {
            let path = format!("objects.{name}");
            let ring: ScalarRing = o.ring.parse().map_err(|e| at(&format!("{path}.ring"), e))?;
            if o.gram.len() != o.dim * o.dim {
                return Err(Error::Parse(format!(
                    "{path}.gram: expected {} entries, found {}",
                    o.dim * o.dim,
                    o.gram.len()
                )));
            }
            let entries = parse_entries(ring, &o.gram, &format!("{path}.gram"))?;
            let gram = Matrix::from_vec(ring, o.dim, o.dim, entries)?;
            let obj = HObject::new(ring, o.dim, gram).map_err(|e| at(&path, e))?;
            fixture.objects.insert(name.clone(), obj);
        }
        for (name, m) in &spec.morphisms {
            let path = format!("morphisms.{name}");
            let lookup = |field: &str, key: &str| {
                fixture
                    .objects
                    .get(key)
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("{path}.{field}: unknown object `{key}`")))
            };
            let dom = lookup("dom", &m.dom)?;
            let cod = lookup("cod", &m.cod)?;
            if m.mat.len() != dom.dim() * cod.dim() {
                return Err(Error::Parse(format!(
                    "{path}.mat: expected {} entries, found {}",
                    dom.dim() * cod.dim(),
                    m.mat.len()
                )));
            }
            let entries = parse_entries(dom.ring(), &m.mat, &format!("{path}.mat"))?;
            let mat = Matrix::from_vec(dom.ring(), cod.dim(), dom.dim(), entries)?;
            let mor = HMorphism::new(&dom, &cod, mat).map_err(|e| at(&path, e))?;
            fixture.morphisms.insert(name.clone(), mor);
        }
        Ok(fixture)
    }

    /// Adds a morphism, naming its objects `<name>.dom` / `<name>.cod`
    /// unless an equal object is already present.
    pub fn insert_morphism(&mut self, name: &str, f: &HMorphism) {
        self.intern(&format!("{name}.dom"), f.dom());
        self.intern(&format!("{name}.cod"), f.cod());
        self.morphisms.insert(name.to_string(), f.clone());
    }

    fn intern(&mut self, fresh: &str, x: &HObject) {
        if !self.objects.values().any(|v| v == x) {
            self.objects.insert(fresh.to_string(), x.clone());
        }
    }

    fn object_name(&self, x: &HObject) -> Result<String> {
        self.objects
            .iter()
            .find(|(_, v)| *v == x)
            .map(|(k, _)| k.clone())
            .ok_or_else(|| Error::ObjectMismatch("morphism refers to an object not in the fixture".into()))
    }

    pub fn to_spec(&self) -> Result<FixtureSpec> {
        let strings = |m: &Matrix| m.entries().iter().map(Scalar::to_string).collect();
        let objects = self
            .objects
            .iter()
            .map(|(k, x)| {
                let spec = ObjectSpec { ring: x.ring().to_string(), dim: x.dim(), gram: strings(x.gram()) };
                (k.clone(), spec)
            })
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .map(|(k, f)| {
                Ok((
                    k.clone(),
                    MorphismSpec {
                        dom: self.object_name(f.dom())?,
                        cod: self.object_name(f.cod())?,
                        mat: strings(f.mat()),
                    },
                ))
            })
            .collect::<Result<_>>()?;
        Ok(FixtureSpec { objects, morphisms })
    }

    pub fn to_json(&self) -> Result<String> {
        let spec = self.to_spec()?;
        Ok(serde_json::to_string_pretty(&spec).expect("fixture specs serialize"))
    }

    /// Single-line JSON, as used for failure witnesses.
    pub fn to_json_compact(&self) -> Result<String> {
        let spec = self.to_spec()?;
        Ok(serde_json::to_string(&spec).expect("fixture specs serialize"))
    }

    /// A fixture holding the given morphisms and their objects.
    pub fn of_morphisms(named: &[(&str, &HMorphism)]) -> Fixture {
        let mut fx = Fixture::default();
        for (name, f) in named {
            fx.insert_morphism(name, f);
        }
        fx
    }
}
