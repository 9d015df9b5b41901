//! Colimits of finite diagrams of simplicial sets.
//!
//! The colimit is computed degreewise as a quotient of the disjoint union of
//! all simplices (degenerate ones included) by the equivalence relation
//! generated by `x ~ f(x)`. A class is degenerate as soon as one of its
//! members is, which gives the nondegenerate simplices of the result.

use std::collections::HashMap;

use super::ez::{Ez, SimplexId};
use super::product::{product, Product};
use super::sset::{SimplicialMap, SimplicialSet};
use super::standard::delta;
use crate::error::{Error, Result};

/// A finite diagram: tagged objects and maps between them.
#[derive(Clone, Debug, Default)]
pub struct SetDiagram {
    pub objects: Vec<(String, SimplicialSet)>,
    pub maps: Vec<(usize, usize, SimplicialMap)>,
}

impl SetDiagram {
    pub fn add_object(&mut self, tag: impl Into<String>, set: SimplicialSet) -> usize {
        self.objects.push((tag.into(), set));
        self.objects.len() - 1
    }

    pub fn add_map(&mut self, src: usize, tgt: usize, map: SimplicialMap) -> Result<()> {
        map.validate(&self.objects[src].1, &self.objects[tgt].1)?;
        self.maps.push((src, tgt, map));
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Colimit {
    pub set: SimplicialSet,
    /// Structure map of every object of the diagram.
    pub legs: Vec<SimplicialMap>,
    /// A nondegenerate member `(object, simplex)` of every nondegenerate
    /// simplex of the colimit.
    pub representatives: Vec<Vec<(usize, SimplexId)>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root, so roots are minimal members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

struct Level {
    members: Vec<(usize, Ez)>,
    index: HashMap<(usize, Ez), usize>,
    root: Vec<usize>,
    degenerate_root: HashMap<usize, usize>,
}

pub fn colimit(diagram: &SetDiagram) -> Result<Colimit> {
    let top = diagram.objects.iter().map(|(_, s)| s.levels()).max().unwrap_or(0);
    let mut levels = Vec::with_capacity(top);
    for n in 0..top {
        let mut members = Vec::new();
        let mut index = HashMap::new();
        for (o, (_, set)) in diagram.objects.iter().enumerate() {
            for x in set.all_simplices(n) {
                index.insert((o, x.clone()), members.len());
                members.push((o, x));
            }
        }
        let mut uf = UnionFind::new(members.len());
        for (s, t, f) in &diagram.maps {
            for x in diagram.objects[*s].1.all_simplices(n) {
                let a = index[&(*s, x.clone())];
                let b = *index
                    .get(&(*t, f.apply(&x)))
                    .ok_or_else(|| Error::Validation("map image outside its target".into()))?;
                uf.union(a, b);
            }
        }
        let root: Vec<usize> = (0..members.len()).map(|i| uf.find(i)).collect();
        let mut degenerate_root = HashMap::new();
        for (i, (_, x)) in members.iter().enumerate() {
            if !x.is_nondegenerate() {
                degenerate_root.entry(root[i]).or_insert(i);
            }
        }
        levels.push(Level { members, index, root, degenerate_root });
    }

    // nondegenerate classes, ordered by their minimal member
    let mut class_id: Vec<HashMap<usize, usize>> = Vec::with_capacity(top);
    let mut representatives = Vec::with_capacity(top);
    let mut labels = Vec::with_capacity(top);
    for lvl in &levels {
        let mut ids = HashMap::new();
        let mut reps = Vec::new();
        let mut labs = Vec::new();
        for (i, (o, x)) in lvl.members.iter().enumerate() {
            if lvl.root[i] == i && !lvl.degenerate_root.contains_key(&i) {
                ids.insert(i, reps.len());
                reps.push((*o, x.base));
                let (tag, set) = &diagram.objects[*o];
                labs.push(format!("{tag}{}", set.label(x.base)));
            }
        }
        class_id.push(ids);
        representatives.push(reps);
        labels.push(labs);
    }

    let normal = |n: usize, member: usize| -> Ez { class_ez(&levels, &class_id, n, member) };

    let mut faces = Vec::with_capacity(top);
    for (n, reps) in representatives.iter().enumerate() {
        let mut fl = Vec::with_capacity(reps.len());
        for &(o, id) in reps {
            let set = &diagram.objects[o].1;
            let mut fs = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let y = set.face(&Ez::nondeg(id), i);
                    fs.push(normal(n - 1, levels[n - 1].index[&(o, y)]));
                }
            }
            fl.push(fs);
        }
        faces.push(fl);
    }
    let set = SimplicialSet::from_parts(labels, faces)?;
    let mut legs = Vec::with_capacity(diagram.objects.len());
    for (o, (_, src)) in diagram.objects.iter().enumerate() {
        let images = (0..src.levels())
            .map(|n| src.ids(n).map(|id| normal(n, levels[n].index[&(o, Ez::nondeg(id))])).collect())
            .collect();
        legs.push(SimplicialMap::checked(src, &set, images)?);
    }
    Ok(Colimit { set, legs, representatives })
}

fn class_ez(
    levels: &[Level],
    class_id: &[HashMap<usize, usize>],
    n: usize,
    member: usize,
) -> Ez {
    let lvl = &levels[n];
    let r = lvl.root[member];
    if let Some(&c) = class_id[n].get(&r) {
        return Ez::nondeg(SimplexId::new(n, c));
    }
    let (o, y) = &lvl.members[lvl.degenerate_root[&r]];
    let k = y.base.dim;
    let base_member = levels[k].index[&(*o, Ez::nondeg(y.base))];
    let inner = class_ez(levels, class_id, k, base_member);
    inner.degenerate_by(&y.surj)
}

impl Colimit {
    /// The map out of the colimit induced by a cocone. Fails if the cocone
    /// is not compatible.
    pub fn factor(&self, diagram: &SetDiagram, cocone: &[SimplicialMap], target: &SimplicialSet) -> Result<SimplicialMap> {
        if cocone.len() != diagram.objects.len() {
            return Err(Error::Validation("cocone has the wrong number of legs".into()));
        }
        let images: Vec<Vec<Ez>> = self
            .representatives
            .iter()
            .map(|reps| reps.iter().map(|&(o, id)| cocone[o].image(id).clone()).collect())
            .collect();
        let u = SimplicialMap::checked(&self.set, target, images)?;
        for (o, (_, src)) in diagram.objects.iter().enumerate() {
            for id in src.all_ids() {
                if &u.apply(self.legs[o].image(id)) != cocone[o].image(id) {
                    return Err(Error::Validation(format!(
                        "cocone is not compatible at {}{}",
                        diagram.objects[o].0,
                        src.label(id)
                    )));
                }
            }
        }
        Ok(u)
    }
}

pub fn coproduct(parts: &[(&str, &SimplicialSet)]) -> Result<Colimit> {
    let mut d = SetDiagram::default();
    for (tag, s) in parts {
        d.add_object(*tag, (*s).clone());
    }
    colimit(&d)
}

/// Pushout of `b ← a → c`. One of the legs must be levelwise injective.
pub fn pushout(
    a: &SimplicialSet,
    b: &SimplicialSet,
    c: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
    tags: [&str; 3],
) -> Result<(SetDiagram, Colimit)> {
    if !f.is_levelwise_injective() && !g.is_levelwise_injective() {
        return Err(Error::Precondition("pushout needs one levelwise injective leg".into()));
    }
    let mut d = SetDiagram::default();
    let ia = d.add_object(tags[0], a.clone());
    let ib = d.add_object(tags[1], b.clone());
    let ic = d.add_object(tags[2], c.clone());
    d.add_map(ia, ib, f.clone())?;
    d.add_map(ia, ic, g.clone())?;
    let col = colimit(&d)?;
    Ok((d, col))
}

pub fn coequalizer(x: &SimplicialSet, y: &SimplicialSet, f: &SimplicialMap, g: &SimplicialMap) -> Result<Colimit> {
    let mut d = SetDiagram::default();
    let ix = d.add_object("x:", x.clone());
    let iy = d.add_object("", y.clone());
    d.add_map(ix, iy, f.clone())?;
    d.add_map(ix, iy, g.clone())?;
    colimit(&d)
}

/// Which end of `X × Δ¹` is glued to the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Zero,
    One,
}

impl End {
    pub fn vertex(self) -> u32 {
        match self {
            End::Zero => 0,
            End::One => 1,
        }
    }

    pub fn other(self) -> End {
        match self {
            End::Zero => End::One,
            End::One => End::Zero,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MappingCylinder {
    pub set: SimplicialSet,
    pub prism: Product,
    pub diagram: SetDiagram,
    pub colimit: Colimit,
    /// `X × Δ¹ → M(u)`.
    pub from_prism: SimplicialMap,
    /// `Y → M(u)`.
    pub from_target: SimplicialMap,
    /// `X → M(u)` at the free end.
    pub free_end: SimplicialMap,
    /// The collapse `M(u) → Y`.
    pub projection: SimplicialMap,
}

/// `x ↦ (x, vertex)` into `X × Δ¹`.
pub fn end_inclusion(x: &SimplicialSet, prism: &Product, end: End) -> Result<SimplicialMap> {
    let v = SimplexId::new(0, end.vertex() as usize);
    let images = (0..x.levels())
        .map(|n| {
            x.ids(n)
                .map(|id| prism.pair(&Ez::nondeg(id), &Ez { surj: vec![0; n + 1], base: v }))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::checked(x, prism.set(), images)
}

/// Mapping cylinder `(X × Δ¹) ⊔_{X × {end}} Y` of `u: X → Y`.
pub fn mapping_cylinder(x: &SimplicialSet, y: &SimplicialSet, u: &SimplicialMap, end: End) -> Result<MappingCylinder> {
    u.validate(x, y)?;
    let prism = product(x, &delta(1))?;
    let glue = end_inclusion(x, &prism, end)?;
    let (diagram, colimit) = pushout(x, prism.set(), y, &glue, u, ["x:", "cyl:", ""])?;
    let from_prism = colimit.legs[1].clone();
    let from_target = colimit.legs[2].clone();
    let free_end = from_prism.after(&end_inclusion(x, &prism, end.other())?);
    let proj_prism = u.after(&prism.left);
    let projection = colimit.factor(&diagram, &[u.clone(), proj_prism, SimplicialMap::identity(y)], y)?;
    Ok(MappingCylinder { set: colimit.set.clone(), prism, diagram, colimit, from_prism, from_target, free_end, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{boundary, point, points};

    #[test]
    fn collapsing_boundary_gives_sphere() {
        let b = boundary(2);
        let (_, c) = pushout(&b, &delta(2), &point(), &inclusion_of_boundary(), &SimplicialMap::constant(&b, SimplexId::new(0, 0)), ["a", "b", "c"])
            .unwrap();
        assert_eq!(c.set.counts(), vec![1, 0, 1]);
        assert_eq!(c.set.euler_characteristic(), 2);
    }

    fn inclusion_of_boundary() -> SimplicialMap {
        let b = boundary(2);
        let d = delta(2);
        let images = (0..b.levels())
            .map(|n| b.ids(n).map(|id| Ez::nondeg(d.find(b.label(id)).unwrap())).collect())
            .collect();
        SimplicialMap::checked(&b, &d, images).unwrap()
    }

    #[test]
    fn coproduct_counts() {
        let c = coproduct(&[("a", &delta(1)), ("b", &points(2))]).unwrap();
        assert_eq!(c.set.counts(), vec![4, 1]);
    }

    #[test]
    fn cylinder_of_constant_map_is_cone() {
        let s = points(2);
        let u = SimplicialMap::constant(&s, SimplexId::new(0, 0));
        let m = mapping_cylinder(&s, &point(), &u, End::One).unwrap();
        assert_eq!(m.set.counts(), vec![3, 2]);
        assert!(m.free_end.is_levelwise_injective());
    }

    #[test]
    fn pushout_needs_an_injective_leg() {
        let s = points(2);
        let u = SimplicialMap::constant(&s, SimplexId::new(0, 0));
        assert!(pushout(&s, &point(), &point(), &u, &u, ["a", "b", "c"]).is_err());
    }
}
