use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::category::{FinCategory, Functor, Mor, Obj};
use crate::error::{Error, Result};

/// On-disk poset description: elements and generating pairs `a ≤ b`.
/// The order is the reflexive-transitive closure of the pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub relation: Vec<[String; 2]>,
}

/// A finite partially ordered set, stored as a dense order matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPoset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

/// A full subposet together with the inclusion map into its parent.
#[derive(Clone, Debug)]
pub struct SubPoset {
    pub poset: FinPoset,
    /// `map[i]` is the parent index of element `i` of the subposet.
    pub map: Vec<usize>,
}

impl FinPoset {
    pub fn new(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(Error::Validation(format!("duplicate poset element {e}")));
            }
            if e.contains('<') {
                return Err(Error::Validation(format!("poset element {e} may not contain '<'")));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Validation("relation refers to unknown element".into()));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::UnsupportedCategory(format!(
                        "relation is not antisymmetric: {} and {} are comparable both ways",
                        elements[i], elements[j]
                    )));
                }
            }
        }
        Ok(FinPoset { elements, leq })
    }

    pub fn from_named(elements: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let idx: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut ps = Vec::new();
        for (a, b) in pairs {
            let ia = *idx.get(a).ok_or_else(|| Error::Validation(format!("unknown element {a}")))?;
            let ib = *idx.get(b).ok_or_else(|| Error::Validation(format!("unknown element {b}")))?;
            ps.push((ia, ib));
        }
        FinPoset::new(names, &ps)
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        let refs: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> = file.relation.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        FinPoset::from_named(&refs, &pairs)
    }

    /// Covering pairs only, in element order.
    pub fn to_file(&self) -> PosetFile {
        let mut relation = Vec::new();
        for (a, b) in self.covering_pairs() {
            relation.push([self.elements[a].clone(), self.elements[b].clone()]);
        }
        PosetFile { elements: self.elements.clone(), relation }
    }

    /// The chain `[n] = (0 < 1 < ... < n)`.
    pub fn chain(n: usize) -> Self {
        let elements = (0..=n).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
        FinPoset::new(elements, &pairs).expect("chain is a partial order")
    }

    pub fn empty() -> Self {
        FinPoset { elements: Vec::new(), leq: Vec::new() }
    }

    /// The poset of nonempty faces of the simplicial complex generated by
    /// `facets`, ordered by inclusion. A face is named by its sorted vertex
    /// names joined with `.`.
    pub fn face_poset(facets: &[Vec<String>]) -> Result<Self> {
        let mut faces: BTreeSet<Vec<String>> = BTreeSet::new();
        for f in facets {
            let mut vs = f.clone();
            vs.sort();
            vs.dedup();
            if vs.is_empty() {
                return Err(Error::Validation("empty facet".into()));
            }
            let k = vs.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<String> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
                faces.insert(face);
            }
        }
        let mut faces: Vec<Vec<String>> = faces.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let names = faces.iter().map(|f| f.join(".")).collect();
        let mut pairs = Vec::new();
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && a.iter().all(|v| b.contains(v)) {
                    pairs.push((i, j));
                }
            }
        }
        FinPoset::new(names, &pairs)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Lookup(format!("{name} is not an element of the poset")))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs `a < b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| self.lt(a, b))).collect()
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(b, a)))
    }

    /// Length `n` of the longest chain `x_0 < ... < x_n`; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&b| self.lt(b, a)).count());
        let mut height = vec![0usize; n];
        for &a in &order {
            for &b in &order {
                if self.lt(b, a) {
                    height[a] = height[a].max(height[b] + 1);
                }
            }
        }
        height.into_iter().max()
    }

    /// Full subposet on `keep` (parent indices, any order; kept sorted).
    pub fn full_subposet(&self, keep: &[usize]) -> SubPoset {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort();
        map.dedup();
        let elements = map.iter().map(|&i| self.elements[i].clone()).collect();
        let leq = map.iter().map(|&a| map.iter().map(|&b| self.leq[a][b]).collect()).collect();
        SubPoset { poset: FinPoset { elements, leq }, map }
    }

    pub fn down_set(&self, x: usize) -> SubPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| self.leq(y, x)).collect();
        self.full_subposet(&keep)
    }

    pub fn down_set_punctured(&self, x: usize) -> SubPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| self.lt(y, x)).collect();
        self.full_subposet(&keep)
    }

    pub fn remove_maximal(&self) -> SubPoset {
        let max = self.maximal();
        let keep: Vec<usize> = (0..self.len()).filter(|y| !max.contains(y)).collect();
        self.full_subposet(&keep)
    }

    /// Adds a top element named `apex`.
    pub fn cone(&self, apex: &str) -> Result<FinPoset> {
        let n = self.len();
        let mut elements = self.elements.clone();
        elements.push(apex.to_string());
        let mut pairs = self.strict_pairs();
        pairs.extend((0..n).map(|i| (i, n)));
        FinPoset::new(elements, &pairs)
    }

    /// `P × Q` with elements `(p,q)`, ordered componentwise, `p`-major.
    pub fn product(&self, other: &FinPoset) -> Result<FinPoset> {
        let (n, m) = (self.len(), other.len());
        let mut elements = Vec::with_capacity(n * m);
        for a in &self.elements {
            for b in &other.elements {
                elements.push(format!("({a},{b})"));
            }
        }
        let mut pairs = Vec::new();
        for i in 0..n * m {
            for j in 0..n * m {
                if i != j && self.leq(i / m, j / m) && other.leq(i % m, j % m) {
                    pairs.push((i, j));
                }
            }
        }
        FinPoset::new(elements, &pairs)
    }

    pub fn product_with_chain(&self, n: usize) -> Result<FinPoset> {
        self.product(&FinPoset::chain(n))
    }

    /// Disjoint union; elements are prefixed with `tag:` from `tags`.
    pub fn disjoint_union(parts: &[FinPoset], tags: &[String]) -> Result<FinPoset> {
        let mut elements = Vec::new();
        let mut pairs = Vec::new();
        for (p, tag) in parts.iter().zip(tags) {
            let off = elements.len();
            elements.extend(p.elements.iter().map(|e| format!("{tag}:{e}")));
            pairs.extend(p.strict_pairs().into_iter().map(|(a, b)| (a + off, b + off)));
        }
        FinPoset::new(elements, &pairs)
    }

    /// The poset as a thin category: object `i` is element `i` and the
    /// morphism `a ≤ b` is named `a<b`.
    pub fn to_category(&self) -> FinCategory {
        let n = self.len();
        let mut morphisms = Vec::new();
        for (a, b) in self.strict_pairs() {
            morphisms.push((format!("{}<{}", self.elements[a], self.elements[b]), a, b));
        }
        let mut composites = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.lt(a, b) && self.lt(b, c) {
                        let e = &self.elements;
                        composites.push((
                            format!("{}<{}", e[b], e[c]),
                            format!("{}<{}", e[a], e[b]),
                            format!("{}<{}", e[a], e[c]),
                        ));
                    }
                }
            }
        }
        FinCategory::new(self.elements.clone(), morphisms, &composites).expect("a partial order is a category")
    }

    /// Monotone map as a functor between the associated categories.
    pub fn monotone_functor(&self, target: &FinPoset, map: &[usize]) -> Result<Functor> {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.leq(a, b) && !target.leq(map[a], map[b]) {
                    return Err(Error::Validation(format!(
                        "map is not monotone on {} <= {}",
                        self.elements[a], self.elements[b]
                    )));
                }
            }
        }
        let (src, tgt) = (self.to_category(), target.to_category());
        Functor::from_object_map(&src, &tgt, map.iter().map(|&i| Obj(i)).collect())
    }

    /// Morphism `a ≤ b` in [`FinPoset::to_category`], if it exists.
    pub fn morphism(cat: &FinCategory, a: usize, b: usize) -> Option<Mor> {
        cat.hom(Obj(a), Obj(b)).first().copied()
    }
}

impl SubPoset {
    pub fn functor(&self, parent: &FinPoset) -> Functor {
        self.poset.monotone_functor(parent, &self.map).expect("inclusion of a full subposet is monotone")
    }
}
