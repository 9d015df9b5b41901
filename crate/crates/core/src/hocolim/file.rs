//! JSON form of diagrams over posets.
//!
//! ```json
//! {
//!   "poset": {"elements": ["x", "a", "b"], "relation": [["x", "a"], ["x", "b"]]},
//!   "spaces": {"x": "S0", "a": "point", "b": {"path": "b.json"}},
//!   "maps": {"x<a": "constant:0", "x<b": {"p0": [[], "v"], "p1": [[], "v"]}}
//! }
//! ```
//!
//! A space is a builtin (`point`, `S0`, `circle`, `points:N`, `delta:N`,
//! `boundary:N`), a path to a simplicial set file, or an inline one. Maps
//! are given on covering pairs. With an `actions` block the diagram is
//! homotopy coherent: `actions["c<d"]` sends each nondegenerate atom of
//! positive level from `c` to `d` to its map on `F(c) × Δⁿ`, and the maps
//! of the `maps` block serve as the level 0 atoms on all pairs `c < d`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{FinPoset, Obj, PosetFile};
use crate::freeres::{Resolution, Word};
use crate::simpset::io::{from_file, map_from_file, MapFile, SsetFile};
use crate::simpset::product::product;
use crate::simpset::standard::{boundary, delta, minimal_circle, point, points, s0};
use crate::simpset::{SimplexId, SimplicialMap, SimplicialSet};

use super::diagram::{coherent_from_strict, nondegenerate_atoms, CoherentDiagram, StrictDiagram};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Builtin(String),
    Path {
        path: PathBuf,
    },
    Inline(SsetFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapRef {
    /// `constant:LABEL` or `identity`.
    Named(String),
    Explicit(MapFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramFile {
    pub poset: PosetFile,
    pub spaces: BTreeMap<String, SpaceRef>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapRef>,
    #[serde(default)]
    pub actions: Option<BTreeMap<String, BTreeMap<String, MapFile>>>,
}

/// Facets of an abstract simplicial complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub facets: Vec<Vec<String>>,
}

/// A loaded diagram. `strict` is present unless the file has actions.
#[derive(Clone, Debug)]
pub struct LoadedDiagram {
    pub strict: Option<StrictDiagram>,
    pub coherent: CoherentDiagram,
}

fn builtin(name: &str, location: &str) -> Result<SimplicialSet> {
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(location, format!("bad number in {name:?}")));
    Ok(match name.split_once(':') {
        None => match name {
            "point" => point(),
            "S0" => s0(),
            "circle" => minimal_circle(),
            _ => return Err(Error::parse(location, format!("unknown builtin space {name:?}"))),
        },
        Some(("points", n)) => points(num(n)?),
        Some(("delta", n)) => delta(num(n)?),
        Some(("boundary", n)) => boundary(num(n)?),
        Some(_) => return Err(Error::parse(location, format!("unknown builtin space {name:?}"))),
    })
}

fn load_space(r: &SpaceRef, base: &Path, location: &str) -> Result<SimplicialSet> {
    match r {
        SpaceRef::Builtin(name) => builtin(name, location),
        SpaceRef::Inline(f) => from_file(f, location),
        SpaceRef::Path { path } => {
            let full = base.join(path);
            let text = std::fs::read_to_string(&full)?;
            let f: SsetFile = serde_json::from_str(&text).map_err(|e| Error::parse(full.display().to_string(), e.to_string()))?;
            from_file(&f, &full.display().to_string())
        }
    }
}

fn load_map(r: &MapRef, src: &SimplicialSet, tgt: &SimplicialSet, location: &str) -> Result<SimplicialMap> {
    match r {
        MapRef::Named(n) if n == "identity" => {
            if src != tgt {
                return Err(Error::parse(location, "identity between different spaces"));
            }
            Ok(SimplicialMap::identity(src))
        }
        MapRef::Named(n) => {
            let label = n.strip_prefix("constant:").ok_or_else(|| Error::parse(location, format!("unknown map {n:?}")))?;
            let v = tgt.find(label).ok_or_else(|| Error::parse(location, format!("unknown vertex {label}")))?;
            if v.dim != 0 {
                return Err(Error::parse(location, format!("{label} is not a vertex")));
            }
            Ok(SimplicialMap::constant(src, SimplexId::new(0, v.index)))
        }
        MapRef::Explicit(m) => map_from_file(src, tgt, m, location),
    }
}

fn pair_key(location: &str, key: &str, p: &FinPoset) -> Result<(usize, usize)> {
    let (a, b) = key.split_once('<').ok_or_else(|| Error::parse(location, format!("expected \"c<d\", got {key:?}")))?;
    let (a, b) = (p.index_of(a.trim())?, p.index_of(b.trim())?);
    if !p.lt(a, b) {
        return Err(Error::parse(location, format!("{key} is not a strict relation")));
    }
    Ok((a, b))
}

impl DiagramFile {
    pub fn from_json(text: &str, location: &str) -> Result<DiagramFile> {
        serde_json::from_str(text).map_err(|e| Error::parse(location, e.to_string()))
    }

    /// Relative paths are resolved against `base`.
    pub fn load(&self, base: &Path, location: &str) -> Result<LoadedDiagram> {
        let p = FinPoset::from_file(&self.poset).map_err(|e| match e {
            Error::Validation(m) => Error::parse(format!("{location}: poset"), m),
            other => other,
        })?;
        for k in self.spaces.keys() {
            p.index_of(k).map_err(|_| Error::parse(format!("{location}: spaces"), format!("{k} is not an element")))?;
        }
        let values = (0..p.len())
            .map(|c| {
                let loc = format!("{location}: spaces.{}", p.name(c));
                let r = self.spaces.get(p.name(c)).ok_or_else(|| Error::parse(&loc, "missing space"))?;
                load_space(r, base, &loc)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::new();
        for (key, r) in &self.maps {
            let loc = format!("{location}: maps.{key}");
            let (a, b) = pair_key(&loc, key, &p)?;
            maps.push((a, b, load_map(r, &values[a], &values[b], &loc)?));
        }
        let Some(actions) = &self.actions else {
            let strict = StrictDiagram::new(p, values, maps)?;
            return Ok(LoadedDiagram { coherent: coherent_from_strict(&strict), strict: Some(strict) });
        };
        let cat = p.to_category();
        let mut atoms = Vec::new();
        for (a, b, m) in maps {
            let w = level_zero_atom(&cat, &p, a, b)?;
            let prod = product(&values[a], &delta(0))?;
            atoms.push((w, m.after(&prod.left)));
        }
        for (key, words) in actions {
            let loc = format!("{location}: actions.{key}");
            let (a, b) = pair_key(&loc, key, &p)?;
            for (text, mf) in words {
                let w = Word::parse(&cat, text, Some(Obj(a))).map_err(|e| Error::parse(&loc, e.to_string()))?;
                if w.target(&cat) != Obj(b) {
                    return Err(Error::parse(&loc, format!("{text} does not end at {}", p.name(b))));
                }
                let prod = product(&values[a], &delta(w.level))?;
                atoms.push((w, map_from_file(prod.set(), &values[b], mf, &loc)?));
            }
        }
        let coherent = CoherentDiagram::from_atoms(p, values, atoms)?;
        Ok(LoadedDiagram { strict: None, coherent })
    }
}

fn level_zero_atom(cat: &crate::fincat::FinCategory, p: &FinPoset, a: usize, b: usize) -> Result<Word> {
    let mut res = Resolution::new(cat)?;
    nondegenerate_atoms(&mut res, p)?
        .into_iter()
        .find(|w| w.level == 0 && w.source == Obj(a) && w.target(cat) == Obj(b))
        .ok_or_else(|| Error::Lookup(format!("no atom {} < {}", p.name(a), p.name(b))))
}

pub fn load_diagram(path: &Path) -> Result<LoadedDiagram> {
    let text = std::fs::read_to_string(path)?;
    let location = path.display().to_string();
    let file = DiagramFile::from_json(&text, &location)?;
    file.load(path.parent().unwrap_or(Path::new(".")), &location)
}

pub fn load_complex(path: &Path) -> Result<ComplexFile> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}
