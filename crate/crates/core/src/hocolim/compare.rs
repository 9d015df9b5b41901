//! Comparison maps between the three models, and functoriality of `cyl` in
//! the indexing poset.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{Functor, Obj};
use crate::freeres::{kappa, tau};
use crate::homalg::{compare_map, homology, HomologyResult, MapComparison};
use crate::simpset::{Realized, SimplicialMap, SimplicialSet};

use super::coend::{BkSimplex, ClassicalHocolim, Cyl, CylSimplex, Hocolim};
use super::diagram::CoherentDiagram;

pub(crate) fn map_elements<S, F>(src: &Realized<S>, tgt: &SimplicialSet, f: F) -> Result<SimplicialMap>
where
    S: Clone + Eq + std::hash::Hash + Ord + std::fmt::Debug,
    F: Fn(&S) -> Result<crate::simpset::Ez>,
{
    let images = (0..src.set.levels())
        .map(|k| src.elements(k).iter().map(&f).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::checked(&src.set, tgt, images)
}

/// `κ_*: Hocolim(F) → cyl(F)`.
pub fn kappa_map(h: &Hocolim, cyl: &Cyl) -> Result<SimplicialMap> {
    map_elements(&h.realized, cyl.set(), |s| {
        let atom = kappa(&cyl.cone, &s.psi)?;
        cyl.ez_of(&CylSimplex { object: s.psi.source, atom, point: s.point.clone() })
    })
}

/// `ε_*: Hocolim(F) → hocolim(F)` for a strict diagram.
pub fn epsilon_map(h: &Hocolim, bk: &ClassicalHocolim) -> Result<SimplicialMap> {
    let cat = h.diagram.category();
    map_elements(&h.realized, bk.set(), |s| {
        let chain = (0..=s.psi.degree()).map(|j| s.psi.object(cat, j)).collect();
        bk.ez_of(&BkSimplex { chain, point: s.point.clone() })
    })
}

/// `τ_*: cyl(F) → hocolim(F)` for a strict diagram.
pub fn tau_map(cyl: &Cyl, bk: &ClassicalHocolim) -> Result<SimplicialMap> {
    map_elements(&cyl.realized, bk.set(), |s| {
        let under = tau(&cyl.cone, &s.atom)?;
        let chain = bk.chain_of(&under);
        bk.ez_of(&bk.model().reduce(s.object.0, chain, &s.point)?)
    })
}

/// Homology of the models and verdicts on the comparison maps.
#[derive(Clone, Debug, Serialize)]
pub struct ModelComparison {
    pub cyl_counts: Vec<usize>,
    pub hocolim_counts: Vec<usize>,
    pub classical_counts: Option<Vec<usize>>,
    pub cyl: HomologyResult,
    pub hocolim: HomologyResult,
    pub classical: Option<HomologyResult>,
    /// `κ: Hocolim(F) → cyl(F)`.
    pub kappa: MapComparison,
    /// `ε: Hocolim(F) → hocolim(F)`, strict diagrams only.
    pub epsilon: Option<MapComparison>,
    /// `τ: cyl(F) → hocolim(F)`, strict diagrams only.
    pub tau: Option<MapComparison>,
    /// `τ ∘ κ = ε` as simplicial maps.
    pub triangle_commutes: Option<bool>,
}

impl ModelComparison {
    pub fn all_iso(&self) -> bool {
        self.kappa.is_iso()
            && self.epsilon.as_ref().is_none_or(MapComparison::is_iso)
            && self.tau.as_ref().is_none_or(MapComparison::is_iso)
            && self.triangle_commutes.unwrap_or(true)
    }
}

pub fn compare_models(f: &CoherentDiagram) -> Result<ModelComparison> {
    let cyl = Cyl::new(f)?;
    let h = Hocolim::new(f)?;
    let k = kappa_map(&h, &cyl)?;
    let mut out = ModelComparison {
        cyl_counts: cyl.set().counts(),
        hocolim_counts: h.set().counts(),
        classical_counts: None,
        cyl: homology(cyl.set()),
        hocolim: homology(h.set()),
        classical: None,
        kappa: compare_map(h.set(), cyl.set(), &k),
        epsilon: None,
        tau: None,
        triangle_commutes: None,
    };
    if let Some(strict) = f.strict() {
        let bk = ClassicalHocolim::new(strict)?;
        let e = epsilon_map(&h, &bk)?;
        let t = tau_map(&cyl, &bk)?;
        out.classical_counts = Some(bk.set().counts());
        out.classical = Some(homology(bk.set()));
        out.epsilon = Some(compare_map(h.set(), bk.set(), &e));
        out.tau = Some(compare_map(cyl.set(), bk.set(), &t));
        out.triangle_commutes = Some(t.after(&k) == e);
    }
    Ok(out)
}

/// Indices in `parent` of the elements of `sub`, matched by name. The
/// subposet must be full.
pub fn embedding(sub: &crate::fincat::FinPoset, parent: &crate::fincat::FinPoset) -> Result<Vec<usize>> {
    let map = (0..sub.len()).map(|i| parent.index_of(sub.name(i))).collect::<Result<Vec<_>>>()?;
    for a in 0..sub.len() {
        for b in 0..sub.len() {
            if sub.leq(a, b) != parent.leq(map[a], map[b]) {
                return Err(Error::Rejected(format!(
                    "not a full subposet: the order on {}, {} differs",
                    sub.name(a),
                    sub.name(b)
                )));
            }
        }
    }
    Ok(map)
}

/// The canonical map `cyl(F|_Q) → cyl(F)` for a full subposet `Q`, with
/// elements matched by name.
pub fn restriction_map(sub: &Cyl, parent: &Cyl) -> Result<SimplicialMap> {
    let map = embedding(sub.diagram.poset(), parent.diagram.poset())?;
    parent.diagram.restrict(&map)?.agrees_with(&sub.diagram)?;
    let mut objects: Vec<Obj> = map.iter().map(|&i| Obj(i)).collect();
    objects.push(parent.cone.apex);
    let functor = Functor::from_object_map(&sub.cone.hat, &parent.cone.hat, objects)?;
    map_elements(&sub.realized, parent.set(), |s| {
        parent.ez_of(&CylSimplex { object: Obj(map[s.object.0]), atom: s.atom.map(&functor), point: s.point.clone() })
    })
}

impl Cyl {
    /// `cyl(F|_Q)` for the full subposet on `keep`, with its canonical map.
    pub fn restriction(&self, keep: &[usize]) -> Result<(Cyl, SimplicialMap)> {
        let sub = Cyl::new(&self.diagram.restrict(keep)?)?;
        let map = restriction_map(&sub, self)?;
        Ok((sub, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinPoset;
    use crate::hocolim::{coherent_from_strict, StrictDiagram};
    use crate::simpset::standard::point;

    #[test]
    fn restriction_to_everything_is_the_identity() {
        let f = coherent_from_strict(&StrictDiagram::constant(FinPoset::chain(2), point()));
        let cyl = Cyl::new(&f).unwrap();
        let (sub, map) = cyl.restriction(&[0, 1, 2]).unwrap();
        assert_eq!(sub.set(), cyl.set());
        assert_eq!(map, SimplicialMap::identity(cyl.set()));
    }

    #[test]
    fn non_full_subposets_are_rejected() {
        let p = FinPoset::from_named(&["a", "b"], &[("a", "b")]).unwrap();
        let q = FinPoset::from_named(&["a", "b"], &[]).unwrap();
        assert!(matches!(embedding(&q, &p), Err(Error::Rejected(_))));
    }

    #[test]
    fn models_agree_on_a_chain_of_points() {
        let f = coherent_from_strict(&StrictDiagram::constant(FinPoset::chain(2), point()));
        let r = compare_models(&f).unwrap();
        assert!(r.all_iso());
        assert_eq!(r.triangle_commutes, Some(true));
    }
}
