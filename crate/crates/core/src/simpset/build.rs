//! Turning a combinatorial description of a simplicial set into the
//! nondegenerate encoding.
//!
//! A [`SimplicialModel`] knows how to take faces and degeneracies of its own
//! simplices. Given a list of candidate simplices that contains every
//! nondegenerate one, [`realize`] filters the degenerate candidates, assigns
//! identifiers and records faces in Eilenberg–Zilber form. Any face whose
//! nondegenerate part is missing from the candidates is an error, so an
//! incomplete candidate list never goes unnoticed.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use super::ez::{identity, Ez, SimplexId};
use super::sset::{SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};

pub trait SimplicialModel {
    type Simplex: Clone + Eq + Hash + Ord + Debug;

    fn degree(&self, s: &Self::Simplex) -> usize;
    fn face(&self, s: &Self::Simplex, i: usize) -> Result<Self::Simplex>;
    fn degeneracy(&self, s: &Self::Simplex, j: usize) -> Result<Self::Simplex>;
    fn label(&self, s: &Self::Simplex) -> String;

    fn is_degenerate(&self, s: &Self::Simplex) -> Result<bool> {
        let n = self.degree(s);
        for j in 0..n {
            if &self.degeneracy(&self.face(s, j)?, j)? == s {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `θ^*s` for a monotone `θ: [k] → [n]` given by its vertex sequence.
    fn apply(&self, s: &Self::Simplex, theta: &[u32]) -> Result<Self::Simplex> {
        let n = self.degree(s);
        let mut cur = s.clone();
        for i in (0..=n as u32).rev() {
            if !theta.contains(&i) {
                cur = self.face(&cur, i as usize)?;
            }
        }
        for j in 0..theta.len().saturating_sub(1) {
            if theta[j] == theta[j + 1] {
                cur = self.degeneracy(&cur, j)?;
            }
        }
        Ok(cur)
    }

    /// Eilenberg–Zilber decomposition: surjection and nondegenerate base.
    fn decompose(&self, s: &Self::Simplex) -> Result<(Vec<u32>, Self::Simplex)> {
        let mut cur = s.clone();
        let mut js = Vec::new();
        'outer: loop {
            let n = self.degree(&cur);
            for j in 0..n {
                let f = self.face(&cur, j)?;
                if self.degeneracy(&f, j)? == cur {
                    js.push(j);
                    cur = f;
                    continue 'outer;
                }
            }
            break;
        }
        let mut surj = identity(self.degree(&cur));
        for &j in js.iter().rev() {
            surj = super::ez::duplicate(&surj, j);
        }
        Ok((surj, cur))
    }
}

/// A simplicial set together with the model elements of its nondegenerate
/// simplices.
#[derive(Clone, Debug)]
pub struct Realized<S: Clone + Eq + Hash> {
    pub set: SimplicialSet,
    elements: Vec<Vec<S>>,
    index: HashMap<S, SimplexId>,
}

impl<S: Clone + Eq + Hash + Ord + Debug> Realized<S> {
    pub fn element(&self, id: SimplexId) -> &S {
        &self.elements[id.dim][id.index]
    }

    pub fn elements(&self, n: usize) -> &[S] {
        self.elements.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn id_of(&self, s: &S) -> Option<SimplexId> {
        self.index.get(s).copied()
    }

    /// Normal form of an arbitrary model simplex.
    pub fn ez_of<M: SimplicialModel<Simplex = S>>(&self, model: &M, s: &S) -> Result<Ez> {
        let (surj, base) = model.decompose(s)?;
        let id = self.index.get(&base).copied().ok_or_else(|| {
            Error::Validation(format!("simplex {} is not among the realized simplices", model.label(&base)))
        })?;
        Ok(Ez { surj, base: id })
    }

    /// Model element of an arbitrary simplex in normal form.
    pub fn element_of<M: SimplicialModel<Simplex = S>>(&self, model: &M, x: &Ez) -> Result<S> {
        let mut s = self.element(x.base).clone();
        let mut word = x.degeneracy_word();
        word.reverse();
        for j in word {
            s = model.degeneracy(&s, j)?;
        }
        Ok(s)
    }

    /// Every model element of degree `n`.
    pub fn all_elements<M: SimplicialModel<Simplex = S>>(&self, model: &M, n: usize) -> Result<Vec<S>> {
        self.set.all_simplices(n).iter().map(|x| self.element_of(model, x)).collect()
    }
}

pub fn realize<M: SimplicialModel>(
    model: &M,
    candidates: impl IntoIterator<Item = M::Simplex>,
) -> Result<Realized<M::Simplex>> {
    let mut by_degree: Vec<Vec<M::Simplex>> = Vec::new();
    for c in candidates {
        let n = model.degree(&c);
        if by_degree.len() <= n {
            by_degree.resize_with(n + 1, Vec::new);
        }
        by_degree[n].push(c);
    }
    let mut elements: Vec<Vec<M::Simplex>> = Vec::with_capacity(by_degree.len());
    for mut level in by_degree {
        level.sort();
        level.dedup();
        let mut kept = Vec::with_capacity(level.len());
        for s in level {
            if !model.is_degenerate(&s)? {
                kept.push(s);
            }
        }
        elements.push(kept);
    }
    while elements.last().is_some_and(|l| l.is_empty()) {
        elements.pop();
    }
    let mut index = HashMap::new();
    for (n, level) in elements.iter().enumerate() {
        for (i, s) in level.iter().enumerate() {
            index.insert(s.clone(), SimplexId::new(n, i));
        }
    }
    let mut labels = Vec::with_capacity(elements.len());
    let mut faces = Vec::with_capacity(elements.len());
    for (n, level) in elements.iter().enumerate() {
        labels.push(level.iter().map(|s| model.label(s)).collect::<Vec<_>>());
        let mut fl = Vec::with_capacity(level.len());
        for s in level {
            let mut fs = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let f = model.face(s, i)?;
                    let (surj, base) = model.decompose(&f)?;
                    let id = index.get(&base).copied().ok_or_else(|| {
                        Error::Validation(format!(
                            "face d{i} of {} has nondegenerate part {} outside the candidate set",
                            model.label(s),
                            model.label(&base)
                        ))
                    })?;
                    fs.push(Ez { surj, base: id });
                }
            }
            fl.push(fs);
        }
        faces.push(fl);
    }
    let set = SimplicialSet::from_parts(labels, faces)?;
    Ok(Realized { set, elements, index })
}

/// Map between two realized models given on model elements.
pub fn realize_map<MS, MT, F>(
    src: &Realized<MS::Simplex>,
    tgt_model: &MT,
    tgt: &Realized<MT::Simplex>,
    f: F,
) -> Result<SimplicialMap>
where
    MS: SimplicialModel,
    MT: SimplicialModel,
    F: Fn(&MS::Simplex) -> Result<MT::Simplex>,
{
    let mut images = Vec::with_capacity(src.set.levels());
    for n in 0..src.set.levels() {
        let mut level = Vec::with_capacity(src.set.count(n));
        for s in src.elements(n) {
            level.push(tgt.ez_of(tgt_model, &f(s)?)?);
        }
        images.push(level);
    }
    SimplicialMap::checked(&src.set, &tgt.set, images)
}
