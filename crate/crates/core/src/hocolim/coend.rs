//! The three homotopy colimit models as finite simplicial sets.
//!
//! Each coend `∫^c W(c) × F(c)` is computed on normal forms. For the weight
//! `φ(c) = F_•P̂(c, *)` every pair `(a, y)` is equivalent to exactly one pair
//! whose word is a single letter: split `a = (l) ∘ v` and move `v` across,
//! `(a, y) ~ ((l), F(v)y)`. For the weight `ψ` the first component is moved
//! across in the same way, and for the nerve weight `N(c\P)` the first
//! morphism of the string.

use crate::error::{Error, Result};
use crate::fincat::{FinPoset, Mor, Obj};
use crate::freeres::{psi_simplices, Coned, PsiModel, PsiSimplex, Resolution, Word, WordModel};
use crate::simpset::{product, realize, Ez, Product, Realized, SimplicialMap, SimplicialModel, SimplicialSet};

use super::diagram::{CoherentDiagram, ConeExtension, StrictDiagram};

/// A name for the cone point that is not an element of the poset.
pub fn fresh_apex(poset: &FinPoset) -> String {
    let mut name = "*".to_string();
    while poset.index_of(&name).is_ok() {
        name.push('*');
    }
    name
}

/// A simplex of `cyl(F)` in normal form: an atom `(l) ∈ φ_k(c)` and a
/// `k`-simplex of `F(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylSimplex {
    pub object: Obj,
    pub atom: Word,
    pub point: Ez,
}

pub struct CylModel<'a> {
    pub diagram: &'a CoherentDiagram,
    pub cone: &'a Coned,
}

impl CylModel<'_> {
    /// Normal form of `(a, y)` with `a ∈ φ_k(c)` and `y ∈ F(c)_k`.
    pub fn reduce(&self, a: &Word, y: &Ez) -> Result<CylSimplex> {
        let hat = &self.cone.hat;
        if a.source == self.cone.apex || a.target(hat) != self.cone.apex {
            return Err(Error::Operator(format!("{} is not a word into the cone point", a.show(hat))));
        }
        let rest = Word { level: a.level, source: a.source, root: a.root[1..].to_vec() };
        let v = self.cone.lower(&rest)?;
        let object = v.target(&self.cone.base);
        let atom = Word { level: a.level, source: object, root: vec![a.root[0].clone()] };
        Ok(CylSimplex { object, atom, point: self.diagram.act(&v, y)? })
    }
}

impl SimplicialModel for CylModel<'_> {
    type Simplex = CylSimplex;

    fn degree(&self, s: &CylSimplex) -> usize {
        s.point.degree()
    }

    fn face(&self, s: &CylSimplex, i: usize) -> Result<CylSimplex> {
        let y = self.diagram.value(s.object.0).face(&s.point, i);
        self.reduce(&s.atom.face(&self.cone.hat, i)?, &y)
    }

    fn degeneracy(&self, s: &CylSimplex, j: usize) -> Result<CylSimplex> {
        Ok(CylSimplex { object: s.object, atom: s.atom.degeneracy(j)?, point: s.point.degenerate(j) })
    }

    fn label(&self, s: &CylSimplex) -> String {
        format!("{}|{}", s.atom.show(&self.cone.hat), self.diagram.value(s.object.0).ez_label(&s.point))
    }
}

/// `cyl(F)`, the coend with weight `φ`.
#[derive(Clone, Debug)]
pub struct Cyl {
    pub diagram: CoherentDiagram,
    pub cone: Coned,
    pub realized: Realized<CylSimplex>,
}

impl Cyl {
    pub fn new(diagram: &CoherentDiagram) -> Result<Cyl> {
        let cone = Coned::new(diagram.category(), &fresh_apex(diagram.poset()))?;
        let model = CylModel { diagram, cone: &cone };
        let mut res = Resolution::new(&cone.hat)?;
        let mut cands = Vec::new();
        for c in diagram.category().objects() {
            let value = diagram.value(c.0);
            let Some(dim) = value.dim() else { continue };
            let top = res.top_dimension(c, cone.apex)? + dim;
            for k in 0..=top {
                let atoms: Vec<Word> = res.words(k, c, cone.apex).into_iter().filter(|w| w.root.len() == 1).collect();
                for y in value.all_simplices(k) {
                    for a in &atoms {
                        cands.push(CylSimplex { object: c, atom: a.clone(), point: y.clone() });
                    }
                }
            }
        }
        let realized = realize(&model, cands)?;
        Ok(Cyl { diagram: diagram.clone(), cone, realized })
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.realized.set
    }

    pub fn model(&self) -> CylModel<'_> {
        CylModel { diagram: &self.diagram, cone: &self.cone }
    }

    pub fn ez_of(&self, s: &CylSimplex) -> Result<Ez> {
        self.realized.ez_of(&self.model(), s)
    }

    /// The model element of a simplex.
    pub fn element(&self, x: &Ez) -> Result<CylSimplex> {
        self.realized.element_of(&self.model(), x)
    }

    /// `F(c) → cyl(F)`, the value at the vertex `t: c → *` of `φ(c)`.
    pub fn inclusion(&self, c: usize) -> Result<SimplicialMap> {
        let value = self.diagram.value(c);
        let t = self.cone.t(Obj(c));
        let images = (0..value.levels())
            .map(|k| {
                value
                    .ids(k)
                    .map(|y| {
                        let atom = Word::atom(&self.cone.hat, t, k);
                        self.ez_of(&CylSimplex { object: Obj(c), atom, point: Ez::nondeg(y) })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::checked(value, self.set(), images)
    }

    /// `φ(c)` as a simplicial set.
    pub fn weight(&self, c: usize) -> Result<Realized<Word>> {
        Resolution::new(&self.cone.hat)?.hom_sset(Obj(c), self.cone.apex, None)
    }

    /// The structure map `φ(c) × F(c) → cyl(F)`.
    pub fn structure_map(&self, c: usize) -> Result<(Realized<Word>, Product, SimplicialMap)> {
        let phi = self.weight(c)?;
        let prod = product(&phi.set, self.diagram.value(c))?;
        let wm = WordModel { cat: &self.cone.hat };
        let model = self.model();
        let mut images = Vec::new();
        for k in 0..prod.set().levels() {
            let mut level = Vec::new();
            for id in prod.set().ids(k) {
                let (a, y) = prod.components(id);
                let s = model.reduce(&phi.element_of(&wm, a)?, y)?;
                level.push(self.ez_of(&s)?);
            }
            images.push(level);
        }
        let map = SimplicialMap::checked(prod.set(), self.set(), images)?;
        Ok((phi, prod, map))
    }

    /// The map `cyl(F) → G(*)` determined by an extension `G` of `F` over the
    /// cone. It is checked against `G`'s action on every structure map.
    pub fn factor(&self, ext: &ConeExtension) -> Result<SimplicialMap> {
        ext.base.agrees_with(&self.diagram)?;
        let g = &ext.extension;
        let to_g = self.cone_functor(g.poset(), ext.apex)?;
        let act = |s: &CylSimplex| g.act(&s.atom.map(&to_g), &s.point);
        let images = (0..self.set().levels())
            .map(|k| self.realized.elements(k).iter().map(act).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let u = SimplicialMap::checked(self.set(), ext.apex_value(), images)?;
        // every simplex of φ(c) × F(c) goes to G of it
        let wm = WordModel { cat: &self.cone.hat };
        for c in 0..self.diagram.poset().len() {
            let (phi, prod, map) = self.structure_map(c)?;
            for id in prod.set().all_ids() {
                let (a, y) = prod.components(id);
                let expected = g.act(&phi.element_of(&wm, a)?.map(&to_g), y)?;
                if u.apply(map.image(id)) != expected {
                    return Err(Error::Validation(format!(
                        "extension incompatible with cyl at {} on {}",
                        self.diagram.poset().name(c),
                        prod.set().label(id)
                    )));
                }
            }
        }
        Ok(u)
    }

    /// The functor from the cone used here to a poset with the same elements
    /// and the top element `apex`.
    pub fn cone_functor(&self, target: &FinPoset, apex: usize) -> Result<crate::fincat::Functor> {
        let p = self.diagram.poset();
        let mut objects = Vec::with_capacity(p.len() + 1);
        for i in 0..p.len() {
            objects.push(Obj(target.index_of(p.name(i))?));
        }
        objects.push(Obj(apex));
        crate::fincat::Functor::from_object_map(&self.cone.hat, &target.to_category(), objects)
    }
}

/// A simplex of `Hocolim(F)` in normal form: `f_0` is empty, so the
/// simplex sits over `c_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HocoSimplex {
    pub psi: PsiSimplex,
    pub point: Ez,
}

pub struct HocolimModel<'a> {
    pub diagram: &'a CoherentDiagram,
}

impl HocolimModel<'_> {
    pub fn reduce(&self, x: &PsiSimplex, y: &Ez) -> Result<HocoSimplex> {
        let cat = self.diagram.category();
        let f0 = &x.comps[0];
        let c0 = f0.target(cat);
        let mut comps = x.comps.clone();
        comps[0] = Word::empty(f0.level, c0);
        Ok(HocoSimplex { psi: PsiSimplex { source: c0, comps }, point: self.diagram.act(f0, y)? })
    }
}

impl SimplicialModel for HocolimModel<'_> {
    type Simplex = HocoSimplex;

    fn degree(&self, s: &HocoSimplex) -> usize {
        s.point.degree()
    }

    fn face(&self, s: &HocoSimplex, i: usize) -> Result<HocoSimplex> {
        let cat = self.diagram.category();
        let y = self.diagram.value(s.psi.source.0).face(&s.point, i);
        self.reduce(&s.psi.face(cat, i)?, &y)
    }

    fn degeneracy(&self, s: &HocoSimplex, j: usize) -> Result<HocoSimplex> {
        Ok(HocoSimplex { psi: s.psi.degeneracy(self.diagram.category(), j)?, point: s.point.degenerate(j) })
    }

    fn label(&self, s: &HocoSimplex) -> String {
        let cat = self.diagram.category();
        let c = s.psi.source.0;
        format!("{}:{}|{}", cat.object_name(Obj(c)), s.psi.show(cat), self.diagram.value(c).ez_label(&s.point))
    }
}

/// `Hocolim(F)`, the coend with weight `ψ`.
#[derive(Clone, Debug)]
pub struct Hocolim {
    pub diagram: CoherentDiagram,
    pub realized: Realized<HocoSimplex>,
}

impl Hocolim {
    pub fn new(diagram: &CoherentDiagram) -> Result<Hocolim> {
        let cat = diagram.category();
        let longest = cat.longest_chain()?;
        let model = HocolimModel { diagram };
        let mut res = Resolution::new(cat)?;
        let mut cands = Vec::new();
        for c in cat.objects() {
            let value = diagram.value(c.0);
            let Some(dim) = value.dim() else { continue };
            for k in 0..=2 * longest + dim {
                let xs: Vec<PsiSimplex> =
                    psi_simplices(&mut res, c, k).into_iter().filter(|x| x.comps[0].is_empty()).collect();
                for y in value.all_simplices(k) {
                    for x in &xs {
                        cands.push(HocoSimplex { psi: x.clone(), point: y.clone() });
                    }
                }
            }
        }
        let realized = realize(&model, cands)?;
        Ok(Hocolim { diagram: diagram.clone(), realized })
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.realized.set
    }

    pub fn model(&self) -> HocolimModel<'_> {
        HocolimModel { diagram: &self.diagram }
    }

    pub fn ez_of(&self, s: &HocoSimplex) -> Result<Ez> {
        self.realized.ez_of(&self.model(), s)
    }

    /// The structure map `ψ(c) × F(c) → Hocolim(F)`.
    pub fn structure_map(&self, c: usize) -> Result<(Realized<PsiSimplex>, Product, SimplicialMap)> {
        let cat = self.diagram.category();
        let psi = crate::freeres::psi_sset(&mut Resolution::new(cat)?, Obj(c))?;
        let prod = product(&psi.set, self.diagram.value(c))?;
        let pm = PsiModel { cat };
        let model = self.model();
        let mut images = Vec::new();
        for k in 0..prod.set().levels() {
            let mut level = Vec::new();
            for id in prod.set().ids(k) {
                let (a, y) = prod.components(id);
                level.push(self.ez_of(&model.reduce(&psi.element_of(&pm, a)?, y)?)?);
            }
            images.push(level);
        }
        let map = SimplicialMap::checked(prod.set(), self.set(), images)?;
        Ok((psi, prod, map))
    }
}

/// A simplex of the Bousfield–Kan model: a chain `c_0 ≤ … ≤ c_k` and a
/// `k`-simplex of `F(c_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BkSimplex {
    pub chain: Vec<Obj>,
    pub point: Ez,
}

pub struct BkModel<'a> {
    pub diagram: &'a StrictDiagram,
}

impl BkModel<'_> {
    /// Normal form of the string `c → c_0 → … → c_k` (given by `α` and the
    /// chain) with a simplex of `F(c)`.
    pub fn reduce(&self, source: usize, chain: Vec<Obj>, y: &Ez) -> Result<BkSimplex> {
        let point = self.diagram.map(source, chain[0].0)?.apply(y);
        Ok(BkSimplex { chain, point })
    }
}

impl SimplicialModel for BkModel<'_> {
    type Simplex = BkSimplex;

    fn degree(&self, s: &BkSimplex) -> usize {
        s.point.degree()
    }

    fn face(&self, s: &BkSimplex, i: usize) -> Result<BkSimplex> {
        let c0 = s.chain[0].0;
        let y = self.diagram.value(c0).face(&s.point, i);
        let mut chain = s.chain.clone();
        chain.remove(i);
        self.reduce(c0, chain, &y)
    }

    fn degeneracy(&self, s: &BkSimplex, j: usize) -> Result<BkSimplex> {
        let mut chain = s.chain.clone();
        chain.insert(j, chain[j]);
        Ok(BkSimplex { chain, point: s.point.degenerate(j) })
    }

    fn label(&self, s: &BkSimplex) -> String {
        let p = self.diagram.poset();
        let names: Vec<&str> = s.chain.iter().map(|o| p.name(o.0)).collect();
        format!("{}|{}", names.join("≤"), self.diagram.value(s.chain[0].0).ez_label(&s.point))
    }
}

/// Weakly increasing chains of length `k + 1` starting at `c`.
fn chains_from(p: &FinPoset, c: usize, k: usize) -> Vec<Vec<Obj>> {
    let mut out = vec![vec![Obj(c)]];
    for _ in 0..k {
        let mut next = Vec::new();
        for ch in out {
            let last = ch.last().unwrap().0;
            for d in (0..p.len()).filter(|&d| p.leq(last, d)) {
                let mut e = ch.clone();
                e.push(Obj(d));
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// The Bousfield–Kan homotopy colimit `N(−\P) ⊗_P F`.
#[derive(Clone, Debug)]
pub struct ClassicalHocolim {
    pub diagram: StrictDiagram,
    pub realized: Realized<BkSimplex>,
}

impl ClassicalHocolim {
    pub fn new(diagram: &StrictDiagram) -> Result<ClassicalHocolim> {
        let p = diagram.poset();
        let longest = p.dimension().unwrap_or(0);
        let model = BkModel { diagram };
        let mut cands = Vec::new();
        for c in 0..p.len() {
            let value = diagram.value(c);
            let Some(dim) = value.dim() else { continue };
            for k in 0..=longest + dim {
                let chains = chains_from(p, c, k);
                for y in value.all_simplices(k) {
                    for ch in &chains {
                        cands.push(BkSimplex { chain: ch.clone(), point: y.clone() });
                    }
                }
            }
        }
        let realized = realize(&model, cands)?;
        Ok(ClassicalHocolim { diagram: diagram.clone(), realized })
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.realized.set
    }

    pub fn model(&self) -> BkModel<'_> {
        BkModel { diagram: &self.diagram }
    }

    pub fn ez_of(&self, s: &BkSimplex) -> Result<Ez> {
        self.realized.ez_of(&self.model(), s)
    }

    /// Chain of objects of an under-string `c → c_0 → … → c_k`.
    pub fn chain_of(&self, s: &[Mor]) -> Vec<Obj> {
        let cat = self.diagram.poset().to_category();
        s.iter().map(|m| cat.target(*m)).collect()
    }
}

/// `cyl(F)`, `Hocolim(F)` or the Bousfield–Kan model.
pub fn coend_phi(diagram: &CoherentDiagram) -> Result<Cyl> {
    Cyl::new(diagram)
}

pub fn coend_psi(diagram: &CoherentDiagram) -> Result<Hocolim> {
    Hocolim::new(diagram)
}

pub fn classical_hocolim(diagram: &StrictDiagram) -> Result<ClassicalHocolim> {
    ClassicalHocolim::new(diagram)
}
