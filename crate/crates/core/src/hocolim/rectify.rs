//! The standard rectification `rF(c) = cyl(F|_{↓c})`.

use serde::Serialize;

use crate::error::Result;
use crate::fincat::FinPoset;
use crate::homalg::compare_map;
use crate::simpset::{colimit, is_isomorphic, SetDiagram, SimplicialMap, SimplicialSet};

use super::coend::Cyl;
use super::compare::restriction_map;
use super::diagram::{CoherentDiagram, StrictDiagram};

#[derive(Clone, Debug, Serialize)]
pub struct ObjectAudit {
    pub object: String,
    pub counts: Vec<usize>,
    /// `colim_{d < c} rF(d) → rF(c)` is levelwise injective.
    pub cofibration: bool,
    /// `F(c) → rF(c)` is a rational homology isomorphism.
    pub equivalence: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RectificationAudit {
    pub colimit_counts: Vec<usize>,
    pub cyl_counts: Vec<usize>,
    /// The canonical `colim(rF) → cyl(F)` is an isomorphism.
    pub colimit_iso: bool,
    pub search: String,
    pub objects: Vec<ObjectAudit>,
    pub witness: Option<String>,
}

impl RectificationAudit {
    pub fn passes(&self) -> bool {
        self.colimit_iso && self.objects.iter().all(|o| o.cofibration && o.equivalence)
    }
}

pub struct Rectification {
    pub strict: StrictDiagram,
    /// `cyl(F|_{↓c})` for every `c`.
    pub cyls: Vec<Cyl>,
    /// `colim(rF)`.
    pub colimit: SimplicialSet,
    pub audit: RectificationAudit,
}

/// Colimit of the `cyl`s on `objects`, glued along covering relations, and
/// the induced map into `target`.
fn glue(p: &FinPoset, cyls: &[Cyl], objects: &[usize], target: &Cyl) -> Result<(SimplicialSet, SimplicialMap)> {
    let mut d = SetDiagram::default();
    for &c in objects {
        d.add_object(format!("{}:", p.name(c)), cyls[c].set().clone());
    }
    for (i, &a) in objects.iter().enumerate() {
        for (j, &b) in objects.iter().enumerate() {
            if p.lt(a, b) && !objects.iter().any(|&e| p.lt(a, e) && p.lt(e, b)) {
                d.add_map(i, j, restriction_map(&cyls[a], &cyls[b])?)?;
            }
        }
    }
    let col = colimit(&d)?;
    let cocone = objects.iter().map(|&c| restriction_map(&cyls[c], target)).collect::<Result<Vec<_>>>()?;
    let u = col.factor(&d, &cocone, target.set())?;
    Ok((col.set, u))
}

pub fn standard_rectification(f: &CoherentDiagram, budget: u64) -> Result<Rectification> {
    let p = f.poset();
    let cyls = (0..p.len()).map(|c| Cyl::new(&f.restrict(&p.down_set(c).map)?)).collect::<Result<Vec<_>>>()?;
    let mut maps = Vec::new();
    for (a, b) in p.covering_pairs() {
        maps.push((a, b, restriction_map(&cyls[a], &cyls[b])?));
    }
    let strict = StrictDiagram::new(p.clone(), cyls.iter().map(|c| c.set().clone()).collect(), maps)?;

    let whole = Cyl::new(f)?;
    let all: Vec<usize> = (0..p.len()).collect();
    let (col, u) = glue(p, &cyls, &all, &whole)?;
    let colimit_iso = u.is_isomorphism(&col, whole.set());
    let search = is_isomorphic(&col, whole.set(), budget).verdict().to_string();
    let mut witness = (!colimit_iso).then(|| format!("colim(rF) {:?} vs cyl(F) {:?}", col.counts(), whole.set().counts()));

    let mut objects = Vec::new();
    for c in 0..p.len() {
        let below: Vec<usize> = (0..p.len()).filter(|&d| p.lt(d, c)).collect();
        let (_, v) = glue(p, &cyls, &below, &cyls[c])?;
        let cofibration = v.is_levelwise_injective();
        let local = cyls[c].diagram.poset().index_of(p.name(c))?;
        let incl = cyls[c].inclusion(local)?;
        let equivalence = compare_map(f.value(c), cyls[c].set(), &incl).is_iso();
        if !(cofibration && equivalence) {
            witness.get_or_insert(format!(
                "at {}: cofibration {cofibration}, equivalence {equivalence}",
                p.name(c)
            ));
        }
        objects.push(ObjectAudit { object: p.name(c).to_string(), counts: cyls[c].set().counts(), cofibration, equivalence });
    }
    let audit = RectificationAudit {
        colimit_counts: col.counts(),
        cyl_counts: whole.set().counts(),
        colimit_iso,
        search,
        objects,
        witness,
    };
    Ok(Rectification { strict, cyls, colimit: col, audit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hocolim::coherent_from_strict;
    use crate::simpset::standard::{point, s0};

    #[test]
    fn one_point() {
        let f = coherent_from_strict(&StrictDiagram::constant(FinPoset::chain(0), s0()));
        let r = standard_rectification(&f, 10_000).unwrap();
        assert!(r.audit.passes(), "{:?}", r.audit.witness);
        assert_eq!(r.strict.value(0).counts(), s0().counts());
    }

    #[test]
    fn chain_of_points() {
        let f = coherent_from_strict(&StrictDiagram::constant(FinPoset::chain(2), point()));
        let r = standard_rectification(&f, 100_000).unwrap();
        assert!(r.audit.passes(), "{:?}", r.audit.witness);
        assert_eq!(r.audit.search, "isomorphic");
        assert_eq!(r.audit.objects[2].counts, r.audit.cyl_counts);
    }
}
