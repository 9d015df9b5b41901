//! Total space of a diagram of spaces over the simplices of a complex `B`,
//! with its projection to the subdivision of `B`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinPoset;
use crate::homalg::{compare_map, homology, HomologyResult};
use crate::simpset::standard::point;
use crate::simpset::{is_isomorphic, Ez, SimplexId, SimplicialMap};

use super::coend::{ClassicalHocolim, Cyl, CylSimplex};
use super::compare::{embedding, map_elements, restriction_map, tau_map};
use super::diagram::{coherent_from_strict, StrictDiagram};

#[derive(Clone, Debug, Serialize)]
pub struct FaceAudit {
    pub face: String,
    pub fiber: HomologyResult,
    pub restriction: HomologyResult,
    /// `F(σ) → cyl(F|σ̄)` is a homology isomorphism.
    pub fiber_iso: bool,
    /// `cyl(F|σ̄) → X` is levelwise injective.
    pub injective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub total_counts: Vec<usize>,
    pub total: HomologyResult,
    pub subdivision_counts: Vec<usize>,
    /// `ι: cyl(*) → N(P)` is a simplicial isomorphism.
    pub iota_iso: bool,
    pub iota_search: String,
    pub faces: Vec<FaceAudit>,
    /// `X → hocolim(F)` is a homology isomorphism.
    pub classical_iso: bool,
}

impl PipelineReport {
    pub fn passes(&self) -> bool {
        self.iota_iso && self.classical_iso && self.faces.iter().all(|f| f.fiber_iso && f.injective)
    }
}

pub struct TotalSpace {
    pub x: Cyl,
    /// `cyl(*)` over the face poset.
    pub base: Cyl,
    pub subdivision: ClassicalHocolim,
    pub pi: SimplicialMap,
    pub iota: SimplicialMap,
    /// `q = ι ∘ π: X → Sd(B)`.
    pub q: SimplicialMap,
    pub report: PipelineReport,
}

/// `f` must live on the face poset of the complex generated by `facets`,
/// and every map of `f` must be a homology isomorphism.
pub fn total_space_pipeline(facets: &[Vec<String>], f: &StrictDiagram, budget: u64) -> Result<TotalSpace> {
    let p = FinPoset::face_poset(facets)?;
    let order = match embedding(&p, f.poset()) {
        Ok(m) if m.len() == f.poset().len() => m,
        _ => return Err(Error::Validation("the diagram does not live on the face poset of the complex".into())),
    };
    let f = &f.pullback(&p, &order)?;
    for (a, b) in p.strict_pairs() {
        if !compare_map(f.value(a), f.value(b), &f.map(a, b)?).is_iso() {
            return Err(Error::Rejected(format!("F({} < {}) is not a homology isomorphism", p.name(a), p.name(b))));
        }
    }
    let x = Cyl::new(&coherent_from_strict(f))?;
    let base = Cyl::new(&coherent_from_strict(&StrictDiagram::constant(p.clone(), point())))?;
    let pi = map_elements(&x.realized, base.set(), |s| {
        let pt = Ez::nondeg(SimplexId::new(0, 0)).degenerate_by(&vec![0; s.point.degree() + 1]);
        base.ez_of(&CylSimplex { object: s.object, atom: s.atom.clone(), point: pt })
    })?;
    let subdivision = ClassicalHocolim::new(&StrictDiagram::constant(p.clone(), point()))?;
    let iota = tau_map(&base, &subdivision)?;
    let q = iota.after(&pi);
    let iota_iso = iota.is_isomorphism(base.set(), subdivision.set());
    let iota_search = is_isomorphic(base.set(), subdivision.set(), budget).verdict().to_string();

    let mut faces = Vec::new();
    for c in 0..p.len() {
        let (sub, incl) = x.restriction(&p.down_set(c).map)?;
        debug_assert_eq!(incl, restriction_map(&sub, &x)?);
        let local = sub.diagram.poset().index_of(p.name(c))?;
        let fiber_map = sub.inclusion(local)?;
        faces.push(FaceAudit {
            face: p.name(c).to_string(),
            fiber: homology(f.value(c)),
            restriction: homology(sub.set()),
            fiber_iso: compare_map(f.value(c), sub.set(), &fiber_map).is_iso(),
            injective: incl.is_levelwise_injective(),
        });
    }
    let bk = ClassicalHocolim::new(f)?;
    let classical_iso = compare_map(x.set(), bk.set(), &tau_map(&x, &bk)?).is_iso();
    let report = PipelineReport {
        total_counts: x.set().counts(),
        total: homology(x.set()),
        subdivision_counts: subdivision.set().counts(),
        iota_iso,
        iota_search,
        faces,
        classical_iso,
    };
    Ok(TotalSpace { x, base, subdivision, pi, iota, q, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::s0;

    fn strings(fs: &[&[&str]]) -> Vec<Vec<String>> {
        fs.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect()
    }

    #[test]
    fn edge_with_point_fibers() {
        let b = strings(&[&["0", "1"]]);
        let f = StrictDiagram::constant(FinPoset::face_poset(&b).unwrap(), point());
        let t = total_space_pipeline(&b, &f, 10_000).unwrap();
        assert!(t.report.passes());
        assert!(t.q.is_isomorphism(t.x.set(), t.subdivision.set()));
    }

    #[test]
    fn non_equivalences_are_rejected() {
        let b = strings(&[&["0"]]);
        let p = FinPoset::face_poset(&b).unwrap();
        let f = StrictDiagram::new(p, vec![s0()], vec![]).unwrap();
        assert!(total_space_pipeline(&b, &f, 10).is_ok());
        let b = strings(&[&["0", "1"]]);
        let p = FinPoset::face_poset(&b).unwrap();
        let to_point = |x: &crate::simpset::SimplicialSet| SimplicialMap::constant(x, SimplexId::new(0, 0));
        let f = StrictDiagram::new(p, vec![s0(), point(), point()], vec![(0, 2, to_point(&s0())), (1, 2, to_point(&point()))]).unwrap();
        assert!(matches!(total_space_pipeline(&b, &f, 10), Err(Error::Rejected(_))));
    }

    #[test]
    fn circle_times_two_points() {
        let b = strings(&[&["0", "1"], &["1", "2"], &["0", "2"]]);
        let f = StrictDiagram::constant(FinPoset::face_poset(&b).unwrap(), s0());
        let t = total_space_pipeline(&b, &f, 100_000).unwrap();
        assert!(t.report.passes());
        assert_eq!(t.report.total.betti, vec![2, 2]);
    }
}
