use std::collections::HashMap;

use super::ez::{epi_mono, surjections, Ez, SimplexId};
use crate::error::{Error, Result};

/// A finite simplicial set stored by its nondegenerate simplices. Every
/// nondegenerate `n`-simplex (`n ≥ 1`) records its `n + 1` faces in
/// Eilenberg–Zilber normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialSet {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Ez>>>,
}

impl SimplicialSet {
    pub fn empty() -> Self {
        SimplicialSet::default()
    }

    /// Builds a simplicial set from labels and face data and audits it.
    pub fn from_parts(labels: Vec<Vec<String>>, faces: Vec<Vec<Vec<Ez>>>) -> Result<Self> {
        let mut set = SimplicialSet { labels, faces };
        set.trim();
        set.audit()?;
        Ok(set)
    }

    fn trim(&mut self) {
        while self.labels.last().is_some_and(|l| l.is_empty()) {
            self.labels.pop();
            self.faces.pop();
        }
    }

    /// Top dimension, `None` for the empty simplicial set.
    pub fn dim(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    /// Number of dimension levels stored (`dim + 1`, or 0 when empty).
    pub fn levels(&self) -> usize {
        self.labels.len()
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn ids(&self, n: usize) -> impl Iterator<Item = SimplexId> {
        (0..self.count(n)).map(move |i| SimplexId::new(n, i))
    }

    pub fn all_ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.levels()).flat_map(move |n| self.ids(n))
    }

    pub fn label(&self, id: SimplexId) -> &str {
        &self.labels[id.dim][id.index]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.labels.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn find(&self, label: &str) -> Option<SimplexId> {
        self.all_ids().find(|id| self.label(*id) == label)
    }

    /// Stored faces of a nondegenerate simplex (empty for vertices).
    pub fn faces(&self, id: SimplexId) -> &[Ez] {
        &self.faces[id.dim][id.index]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts().iter().enumerate().map(|(n, c)| if n % 2 == 0 { *c as i64 } else { -(*c as i64) }).sum()
    }

    pub fn ez_label(&self, x: &Ez) -> String {
        let base = self.label(x.base);
        if x.is_nondegenerate() {
            base.to_string()
        } else {
            let w: Vec<String> = x.degeneracy_word().iter().map(|j| format!("s{j}")).collect();
            format!("{}({})", w.join(""), base)
        }
    }

    /// `d_i` of an arbitrary simplex.
    pub fn face(&self, x: &Ez, i: usize) -> Ez {
        let n = x.degree();
        assert!(n >= 1 && i <= n, "face index {i} out of range for degree {n}");
        let eta = &x.surj;
        let v = eta[i];
        let hit_once = (i == 0 || eta[i - 1] != v) && (i == n || eta[i + 1] != v);
        let mut vals: Vec<u32> = eta.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &e)| e).collect();
        if !hit_once {
            return Ez { surj: vals, base: x.base };
        }
        for e in vals.iter_mut() {
            if *e > v {
                *e -= 1;
            }
        }
        let inner = &self.faces[x.base.dim][x.base.index][v as usize];
        inner.degenerate_by(&vals)
    }

    /// `s_j` of an arbitrary simplex.
    pub fn degeneracy(&self, x: &Ez, j: usize) -> Ez {
        assert!(j <= x.degree(), "degeneracy index out of range");
        x.degenerate(j)
    }

    /// `x · θ` for a monotone `θ: [m] → [n]`.
    pub fn apply(&self, x: &Ez, theta: &[u32]) -> Ez {
        let composite: Vec<u32> = theta.iter().map(|&t| x.surj[t as usize]).collect();
        let (pi, image) = epi_mono(&composite);
        let mut y = Ez::nondeg(x.base);
        for v in (0..=x.base.dim as u32).rev() {
            if !image.contains(&v) {
                y = self.face(&y, v as usize);
            }
        }
        y.degenerate_by(&pi)
    }

    /// Every simplex of degree `n`, nondegenerate ones first by dimension.
    pub fn all_simplices(&self, n: usize) -> Vec<Ez> {
        let mut out = Vec::new();
        for k in (0..=n.min(self.levels().saturating_sub(1))).rev() {
            if self.count(k) == 0 {
                continue;
            }
            let surjs = surjections(n, k);
            for id in self.ids(k) {
                for s in &surjs {
                    out.push(Ez { surj: s.clone(), base: id });
                }
            }
        }
        out
    }

    /// Vertices of a simplex, in order.
    pub fn vertices(&self, x: &Ez) -> Vec<SimplexId> {
        (0..=x.degree() as u32).map(|v| self.apply(x, &[v]).base).collect()
    }

    /// Full consistency audit: references exist, face degrees are right and
    /// the simplicial identity `d_i d_j = d_{j-1} d_i` (`i < j`) holds on every
    /// nondegenerate simplex. Degeneracy identities hold by construction of
    /// the normal form.
    pub fn audit(&self) -> Result<()> {
        if self.labels.len() != self.faces.len() {
            return Err(Error::Validation("label and face tables disagree".into()));
        }
        let mut seen = HashMap::new();
        for id in self.all_ids() {
            if let Some(prev) = seen.insert(self.label(id).to_string(), id) {
                return Err(Error::Validation(format!(
                    "duplicate simplex label {} ({:?}, {:?})",
                    self.label(id),
                    prev,
                    id
                )));
            }
            let faces = &self.faces[id.dim][id.index];
            let expect = if id.dim == 0 { 0 } else { id.dim + 1 };
            if faces.len() != expect {
                return Err(Error::Validation(format!("simplex {} has {} faces", self.label(id), faces.len())));
            }
            for f in faces {
                if f.degree() + 1 != id.dim
                    || f.base.dim >= self.levels()
                    || f.base.index >= self.count(f.base.dim)
                    || f.surj.last().copied() != Some(f.base.dim as u32)
                    || f.surj.windows(2).any(|w| w[1] != w[0] && w[1] != w[0] + 1)
                    || f.surj[0] != 0
                {
                    return Err(Error::Validation(format!("simplex {} has a malformed face", self.label(id))));
                }
            }
        }
        for id in self.all_ids() {
            if id.dim < 2 {
                continue;
            }
            let x = Ez::nondeg(id);
            for j in 0..=id.dim {
                let dj = self.face(&x, j);
                for i in 0..j {
                    let lhs = self.face(&dj, i);
                    let rhs = self.face(&self.face(&x, i), j - 1);
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "simplicial identity d{i}d{j} = d{}d{i} fails on {}",
                            j - 1,
                            self.label(id)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Disjoint union with labels kept (caller ensures they stay unique).
    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> SimplicialSet {
        SimplicialSet {
            labels: self.labels.iter().map(|l| l.iter().map(|s| f(s)).collect()).collect(),
            faces: self.faces.clone(),
        }
    }
}

/// A simplicial map, stored by the images of nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    images: Vec<Vec<Ez>>,
}

impl SimplicialMap {
    pub fn new(images: Vec<Vec<Ez>>) -> Self {
        SimplicialMap { images }
    }

    /// Builds and validates a map.
    pub fn checked(src: &SimplicialSet, tgt: &SimplicialSet, images: Vec<Vec<Ez>>) -> Result<Self> {
        let m = SimplicialMap { images };
        m.validate(src, tgt)?;
        Ok(m)
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap { images: (0..x.levels()).map(|n| x.ids(n).map(Ez::nondeg).collect()).collect() }
    }

    pub fn from_empty() -> Self {
        SimplicialMap { images: Vec::new() }
    }

    pub fn images(&self) -> &[Vec<Ez>] {
        &self.images
    }

    pub fn image(&self, id: SimplexId) -> &Ez {
        &self.images[id.dim][id.index]
    }

    pub fn apply(&self, x: &Ez) -> Ez {
        self.image(x.base).degenerate_by(&x.surj)
    }

    pub fn validate(&self, src: &SimplicialSet, tgt: &SimplicialSet) -> Result<()> {
        if self.images.len() < src.levels() || (0..src.levels()).any(|n| self.images[n].len() != src.count(n)) {
            return Err(Error::Validation("map does not cover the source".into()));
        }
        if self.images.iter().skip(src.levels()).any(|v| !v.is_empty()) {
            return Err(Error::Validation("map has images for nonexistent simplices".into()));
        }
        for id in src.all_ids() {
            let img = self.image(id);
            if img.degree() != id.dim || img.base.dim >= tgt.levels() || img.base.index >= tgt.count(img.base.dim) {
                return Err(Error::Validation(format!("bad image for {}", src.label(id))));
            }
            let x = Ez::nondeg(id);
            for i in 0..=id.dim {
                if id.dim == 0 {
                    break;
                }
                let lhs = self.apply(&src.face(&x, i));
                let rhs = tgt.face(img, i);
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "map does not commute with d{i} on {}",
                        src.label(id)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> SimplicialMap {
        SimplicialMap { images: first.images.iter().map(|v| v.iter().map(|x| self.apply(x)).collect()).collect() }
    }

    /// Injective in every degree: nondegenerate simplices go to distinct
    /// nondegenerate simplices.
    pub fn is_levelwise_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().flatten().all(|x| x.is_nondegenerate() && seen.insert(x.base))
    }

    /// Bijective on nondegenerate simplices, hence an isomorphism.
    pub fn is_isomorphism(&self, src: &SimplicialSet, tgt: &SimplicialSet) -> bool {
        self.is_levelwise_injective()
            && src.levels() == tgt.levels()
            && (0..src.levels()).all(|n| src.count(n) == tgt.count(n))
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self, src: &SimplicialSet, tgt: &SimplicialSet) -> Option<SimplicialMap> {
        if !self.is_isomorphism(src, tgt) {
            return None;
        }
        let mut images: Vec<Vec<Ez>> = (0..tgt.levels()).map(|n| vec![Ez::nondeg(SimplexId::new(0, 0)); tgt.count(n)]).collect();
        for id in src.all_ids() {
            let img = self.image(id);
            images[img.base.dim][img.base.index] = Ez::nondeg(id);
        }
        Some(SimplicialMap { images })
    }

    /// The constant map to a vertex.
    pub fn constant(src: &SimplicialSet, vertex: SimplexId) -> SimplicialMap {
        SimplicialMap {
            images: (0..src.levels())
                .map(|n| src.ids(n).map(|_| Ez { surj: vec![0; n + 1], base: vertex }).collect())
                .collect(),
        }
    }
}
