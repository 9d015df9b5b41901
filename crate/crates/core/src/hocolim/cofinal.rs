//! Cofinality of a monotone map `f: D → P`: every comma category `c/f` is
//! contractible.

use serde::Serialize;

use crate::error::Result;
use crate::fincat::{comma, nerve, CommaKind, FinPoset, Obj};
use crate::homalg::{compare_map, homology, HomologyResult, MapComparison};

use super::coend::ClassicalHocolim;
use super::compare::map_elements;
use super::diagram::StrictDiagram;

#[derive(Clone, Debug, Serialize)]
pub struct CommaAudit {
    pub object: String,
    pub comma_objects: usize,
    pub homology: HomologyResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct CofinalityReport {
    pub per_object: Vec<CommaAudit>,
    pub cofinal: bool,
    /// First `c` whose comma category is not homology-contractible.
    pub failing: Option<String>,
    /// `hocolim(f*F) → hocolim(F)` on a supplied diagram.
    pub cross_check: Option<MapComparison>,
}

/// `f` is given by the images of the elements of `d`. With a diagram, the
/// induced map of classical homotopy colimits is compared as well.
pub fn cofinality_check(d: &FinPoset, p: &FinPoset, f: &[usize], diagram: Option<&StrictDiagram>) -> Result<CofinalityReport> {
    let functor = d.monotone_functor(p, f)?;
    let (dc, pc) = (d.to_category(), p.to_category());
    let mut per_object = Vec::new();
    let mut failing = None;
    for c in 0..p.len() {
        let k = comma(&pc, CommaKind::OfFunctor { source: &dc, functor: &functor, object: Obj(c) })?;
        let h = homology(&nerve(&k.category, None)?.set);
        if !h.is_acyclic() && failing.is_none() {
            failing = Some(p.name(c).to_string());
        }
        per_object.push(CommaAudit { object: p.name(c).to_string(), comma_objects: k.category.objects().count(), homology: h });
    }
    let cross_check = match diagram {
        Some(fd) => {
            let big = ClassicalHocolim::new(fd)?;
            let small = ClassicalHocolim::new(&fd.pullback(d, f)?)?;
            let model = big.model();
            let map = map_elements(&small.realized, big.set(), |s| {
                let chain: Vec<Obj> = s.chain.iter().map(|o| Obj(f[o.0])).collect();
                big.ez_of(&model.reduce(chain[0].0, chain, &s.point)?)
            })?;
            Some(compare_map(small.set(), big.set(), &map))
        }
        None => None,
    };
    Ok(CofinalityReport { cofinal: failing.is_none(), per_object, failing, cross_check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::s0;

    #[test]
    fn identity_is_cofinal() {
        let p = FinPoset::chain(2);
        let r = cofinality_check(&p, &p, &[0, 1, 2], None).unwrap();
        assert!(r.cofinal);
    }

    #[test]
    fn maximum_is_cofinal() {
        let p = FinPoset::from_named(&["a", "b", "m"], &[("a", "m"), ("b", "m")]).unwrap();
        let d = FinPoset::chain(0);
        let f = StrictDiagram::constant(p.clone(), s0());
        let r = cofinality_check(&d, &p, &[2], Some(&f)).unwrap();
        assert!(r.cofinal);
        assert!(r.cross_check.unwrap().is_iso());
    }

    #[test]
    fn two_feet_are_not_cofinal() {
        let p = FinPoset::from_named(&["x", "a", "b"], &[("x", "a"), ("x", "b")]).unwrap();
        let d = FinPoset::from_named(&["a", "b"], &[]).unwrap();
        let r = cofinality_check(&d, &p, &[1, 2], None).unwrap();
        assert!(!r.cofinal);
        assert_eq!(r.failing.as_deref(), Some("x"));
        assert_eq!(r.per_object[0].homology.betti(0), 2);
    }
}
