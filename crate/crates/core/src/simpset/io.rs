//! JSON form of finite simplicial sets and maps.
//!
//! ```json
//! {
//!   "dims": 2,
//!   "simplices": {"0": ["a", "b", "c"], "1": ["ab", "bc", "ac"], "2": ["abc"]},
//!   "faces": {"ab": [[[], "b"], [[], "a"]], "abc": [[[], "bc"], [[], "ac"], [[], "ab"]]}
//! }
//! ```
//!
//! `dims` is the number of dimension levels. A face is a degeneracy word
//! (strictly decreasing indices) and the label of a nondegenerate simplex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ez::Ez;
use super::sset::{SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsetFile {
    pub dims: usize,
    pub simplices: BTreeMap<usize, Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<(Vec<usize>, String)>>,
}

pub fn to_file(s: &SimplicialSet) -> SsetFile {
    let mut simplices = BTreeMap::new();
    let mut faces = BTreeMap::new();
    for n in 0..s.levels() {
        simplices.insert(n, s.labels(n).to_vec());
        for id in s.ids(n) {
            if n > 0 {
                faces.insert(
                    s.label(id).to_string(),
                    s.faces(id).iter().map(|f| (f.degeneracy_word(), s.label(f.base).to_string())).collect(),
                );
            }
        }
    }
    SsetFile { dims: s.levels(), simplices, faces }
}

pub fn from_file(f: &SsetFile, location: &str) -> Result<SimplicialSet> {
    if let Some(&n) = f.simplices.keys().find(|&&n| n >= f.dims) {
        return Err(Error::parse(location, format!("simplices of dimension {n} but dims is {}", f.dims)));
    }
    let labels: Vec<Vec<String>> = (0..f.dims).map(|n| f.simplices.get(&n).cloned().unwrap_or_default()).collect();
    let mut index = std::collections::HashMap::new();
    for (n, level) in labels.iter().enumerate() {
        for (i, l) in level.iter().enumerate() {
            if index.insert(l.clone(), super::ez::SimplexId::new(n, i)).is_some() {
                return Err(Error::parse(location, format!("duplicate simplex label {l}")));
            }
        }
    }
    for k in f.faces.keys() {
        if !index.contains_key(k) {
            return Err(Error::parse(location, format!("faces given for unknown simplex {k}")));
        }
    }
    let mut faces = Vec::with_capacity(labels.len());
    for (n, level) in labels.iter().enumerate() {
        let mut fl = Vec::with_capacity(level.len());
        for l in level {
            if n == 0 {
                fl.push(Vec::new());
                continue;
            }
            let given = f.faces.get(l).ok_or_else(|| Error::parse(location, format!("missing faces of {l}")))?;
            if given.len() != n + 1 {
                return Err(Error::parse(location, format!("{l} needs {} faces, got {}", n + 1, given.len())));
            }
            let mut fs = Vec::with_capacity(n + 1);
            for (word, base) in given {
                let id = *index.get(base).ok_or_else(|| Error::parse(location, format!("unknown face {base} of {l}")))?;
                let ez = Ez::from_degeneracy_word(word, id)
                    .filter(|e| e.degree() + 1 == n)
                    .ok_or_else(|| Error::parse(location, format!("bad degeneracy word {word:?} in faces of {l}")))?;
                fs.push(ez);
            }
            fl.push(fs);
        }
        faces.push(fl);
    }
    SimplicialSet::from_parts(labels, faces).map_err(|e| match e {
        Error::Validation(m) => Error::parse(location, m),
        other => other,
    })
}

pub fn to_json(s: &SimplicialSet) -> String {
    serde_json::to_string_pretty(&to_file(s)).expect("serializable")
}

pub fn from_json(text: &str, location: &str) -> Result<SimplicialSet> {
    let f: SsetFile = serde_json::from_str(text).map_err(|e| Error::parse(location, e.to_string()))?;
    from_file(&f, location)
}

/// A map as `{source label: [degeneracy word, target label]}`.
pub type MapFile = BTreeMap<String, (Vec<usize>, String)>;

pub fn map_to_file(src: &SimplicialSet, tgt: &SimplicialSet, m: &SimplicialMap) -> MapFile {
    src.all_ids()
        .map(|id| {
            let img = m.image(id);
            (src.label(id).to_string(), (img.degeneracy_word(), tgt.label(img.base).to_string()))
        })
        .collect()
}

pub fn map_from_file(src: &SimplicialSet, tgt: &SimplicialSet, f: &MapFile, location: &str) -> Result<SimplicialMap> {
    let mut images = Vec::with_capacity(src.levels());
    for n in 0..src.levels() {
        let mut level = Vec::with_capacity(src.count(n));
        for id in src.ids(n) {
            let l = src.label(id);
            let (word, t) = f.get(l).ok_or_else(|| Error::parse(location, format!("no image for {l}")))?;
            let base = tgt.find(t).ok_or_else(|| Error::parse(location, format!("unknown target simplex {t}")))?;
            let ez = Ez::from_degeneracy_word(word, base)
                .filter(|e| e.degree() == n)
                .ok_or_else(|| Error::parse(location, format!("image of {l} has the wrong degree")))?;
            level.push(ez);
        }
        images.push(level);
    }
    SimplicialMap::checked(src, tgt, images).map_err(|e| match e {
        Error::Validation(m) => Error::parse(location, m),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{delta, minimal_circle};

    #[test]
    fn round_trip() {
        for s in [delta(2), minimal_circle()] {
            let back = from_json(&to_json(&s), "test").unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn rejects_bad_faces() {
        let text = r#"{"dims":2,"simplices":{"0":["a"],"1":["e"]},"faces":{"e":[[[],"a"]]}}"#;
        assert!(from_json(text, "t").is_err());
    }
}
