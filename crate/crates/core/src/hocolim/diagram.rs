//! Strict and homotopy coherent diagrams of simplicial sets over finite
//! posets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinPoset, Obj};
use crate::freeres::{Resolution, Word, WordModel};
use crate::simpset::standard::{delta, StandardSimplex};
use crate::simpset::{product, Ez, Product, Realized, SimplexId, SimplicialMap, SimplicialModel, SimplicialSet};

/// A functor from a poset to simplicial sets. A map is stored for every
/// pair `c < d`.
#[derive(Clone, Debug)]
pub struct StrictDiagram {
    poset: FinPoset,
    values: Vec<SimplicialSet>,
    maps: BTreeMap<(usize, usize), SimplicialMap>,
}

impl StrictDiagram {
    /// Maps must be given at least for the covering pairs; missing pairs
    /// are filled in by composition. Composition laws are then checked.
    pub fn new(poset: FinPoset, values: Vec<SimplicialSet>, maps: Vec<(usize, usize, SimplicialMap)>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::Validation("one value per poset element is needed".into()));
        }
        let mut given = BTreeMap::new();
        for (c, d, f) in maps {
            if c >= poset.len() || d >= poset.len() {
                return Err(Error::Lookup(format!("map index ({c},{d}) out of range")));
            }
            f.validate(&values[c], &values[d])?;
            if c == d {
                if f != SimplicialMap::identity(&values[c]) {
                    return Err(Error::Validation(format!("map on {} ≤ {} is not the identity", poset.name(c), poset.name(d))));
                }
                continue;
            }
            if !poset.lt(c, d) {
                return Err(Error::Validation(format!("{} ≤ {} does not hold", poset.name(c), poset.name(d))));
            }
            given.insert((c, d), f);
        }
        let mut maps: BTreeMap<(usize, usize), SimplicialMap> = BTreeMap::new();
        let mut pairs = poset.strict_pairs();
        // shortest gaps first, so composites only use filled pairs
        pairs.sort_by_key(|&(c, d)| (0..poset.len()).filter(|&e| poset.lt(c, e) && poset.lt(e, d)).count());
        for (c, d) in pairs {
            let f = match given.get(&(c, d)) {
                Some(f) => f.clone(),
                None => {
                    let e = (0..poset.len()).find(|&e| poset.lt(c, e) && poset.lt(e, d)).ok_or_else(|| {
                        Error::Validation(format!("missing map for the covering pair {} < {}", poset.name(c), poset.name(d)))
                    })?;
                    maps[&(e, d)].after(&maps[&(c, e)])
                }
            };
            maps.insert((c, d), f);
        }
        let diagram = StrictDiagram { poset, values, maps };
        diagram.check_laws()?;
        Ok(diagram)
    }

    fn check_laws(&self) -> Result<()> {
        for (&(c, e), f) in &self.maps {
            for (&(e2, d), g) in self.maps.range((e, 0)..(e + 1, 0)) {
                debug_assert_eq!(e, e2);
                if g.after(f) != self.maps[&(c, d)] {
                    let p = &self.poset;
                    return Err(Error::Validation(format!(
                        "composition fails on {} < {} < {}",
                        p.name(c),
                        p.name(e),
                        p.name(d)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn constant(poset: FinPoset, value: SimplicialSet) -> Self {
        let values = vec![value.clone(); poset.len()];
        let maps = poset.strict_pairs().into_iter().map(|(c, d)| ((c, d), SimplicialMap::identity(&value))).collect();
        StrictDiagram { poset, values, maps }
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn values(&self) -> &[SimplicialSet] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &SimplicialSet {
        &self.values[c]
    }

    /// `F(c ≤ d)`.
    pub fn map(&self, c: usize, d: usize) -> Result<SimplicialMap> {
        if c == d {
            return Ok(SimplicialMap::identity(&self.values[c]));
        }
        self.maps.get(&(c, d)).cloned().ok_or_else(|| {
            Error::Lookup(format!("{} ≤ {} does not hold", self.poset.name(c), self.poset.name(d)))
        })
    }

    /// Every `(c, d, F(c < d))`.
    pub fn maps(&self) -> impl Iterator<Item = (usize, usize, &SimplicialMap)> {
        self.maps.iter().map(|(&(c, d), f)| (c, d, f))
    }

    /// `f^*F` for a monotone map `f: Q → P`.
    pub fn pullback(&self, q: &FinPoset, f: &[usize]) -> Result<StrictDiagram> {
        q.monotone_functor(&self.poset, f)?;
        let values = f.iter().map(|&i| self.values[i].clone()).collect();
        let maps = q
            .strict_pairs()
            .into_iter()
            .map(|(a, b)| Ok(((a, b), self.map(f[a], f[b])?)))
            .collect::<Result<_>>()?;
        Ok(StrictDiagram { poset: q.clone(), values, maps })
    }

    /// Restriction to the full subposet on `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<StrictDiagram> {
        let sub = self.poset.full_subposet(keep);
        self.pullback(&sub.poset, &sub.map)
    }
}

/// Action of a nondegenerate atom `w ∈ F_nP(c, d)`: a map
/// `F(c) × Δⁿ → F(d)`.
#[derive(Clone, Debug)]
pub struct AtomAction {
    pub product: Product,
    pub map: SimplicialMap,
}

#[derive(Clone, Debug)]
enum Action {
    /// Precomposition of a strict diagram with the augmentation.
    Strict(StrictDiagram),
    /// Actions of the nondegenerate atoms (single-letter words), which
    /// generate `F_•P` freely in each degree.
    Atoms(BTreeMap<Word, AtomAction>),
}

/// A homotopy coherent diagram `F_•P → sSet`.
#[derive(Clone, Debug)]
pub struct CoherentDiagram {
    poset: FinPoset,
    cat: FinCategory,
    values: Vec<SimplicialSet>,
    action: Action,
}

/// Vertex sequence of a simplex of `Δⁿ`.
fn vertex_sequence(delta_n: &Realized<Vec<u32>>, n: usize, x: &Ez) -> Result<Vec<u32>> {
    delta_n.element_of(&StandardSimplex { k: n }, x)
}

/// `θ` as a simplex of `Δⁿ` in normal form, for surjective `θ`.
fn surjection_simplex(surj: Vec<u32>, n: usize) -> Ez {
    Ez { surj, base: SimplexId::new(n, 0) }
}

/// Nondegenerate single-letter words of `F_•P(c, d)` for `c < d`, up to the
/// top dimension of each hom.
pub fn nondegenerate_atoms(res: &mut Resolution<'_>, poset: &FinPoset) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for (c, d) in poset.strict_pairs() {
        let top = res.top_dimension(Obj(c), Obj(d))?;
        for n in 0..=top {
            out.extend(res.nondegenerate(n, Obj(c), Obj(d)).into_iter().filter(|w| w.root.len() == 1));
        }
    }
    Ok(out)
}

impl CoherentDiagram {
    /// A diagram given by the actions of all nondegenerate atoms. Each map
    /// is defined on `F(c) × Δⁿ` as computed by [`product`]. Compatibility
    /// with every face is checked.
    pub fn from_atoms(poset: FinPoset, values: Vec<SimplicialSet>, actions: Vec<(Word, SimplicialMap)>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::Validation("one value per poset element is needed".into()));
        }
        let cat = poset.to_category();
        let mut atoms = BTreeMap::new();
        for (w, map) in actions {
            w.validate(&cat)?;
            if w.root.len() != 1 || w.is_degenerate() {
                return Err(Error::Validation(format!("{} is not a nondegenerate atom", w.show(&cat))));
            }
            let (c, d) = (w.source.0, w.target(&cat).0);
            let product = product(&values[c], &delta(w.level))?;
            map.validate(product.set(), &values[d])?;
            if atoms.insert(w.clone(), AtomAction { product, map }).is_some() {
                return Err(Error::Validation(format!("two actions for {}", w.show(&cat))));
            }
        }
        let mut res = Resolution::new(&cat)?;
        let needed = nondegenerate_atoms(&mut res, &poset)?;
        for w in &needed {
            if !atoms.contains_key(w) {
                return Err(Error::Validation(format!("no action for {}", w.show(&cat))));
            }
        }
        if atoms.len() != needed.len() {
            return Err(Error::Validation("actions given for words outside the resolution".into()));
        }
        let diagram = CoherentDiagram { poset, cat, values, action: Action::Atoms(atoms) };
        diagram.check_faces()?;
        Ok(diagram)
    }

    /// Every atom action agrees on `F(c) × ∂Δⁿ` with the action of the
    /// faces of the atom.
    fn check_faces(&self) -> Result<()> {
        let Action::Atoms(atoms) = &self.action else { return Ok(()) };
        let model = WordModel { cat: &self.cat };
        for (w, a) in atoms {
            let n = w.level;
            if n == 0 {
                continue;
            }
            let dn = StandardSimplex { k: n }.realize(false)?;
            let set = a.product.set();
            for id in set.all_ids() {
                let (y, t) = a.product.components(id).clone();
                let theta = vertex_sequence(&dn, n, &t)?;
                if (0..=n as u32).all(|v| theta.contains(&v)) {
                    continue;
                }
                let expected = self.act(&model.apply(w, &theta)?, &y)?;
                if &expected != a.map.image(id) {
                    return Err(Error::Validation(format!(
                        "action of {} disagrees with its faces on {}",
                        w.show(&self.cat),
                        set.label(id)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn category(&self) -> &FinCategory {
        &self.cat
    }

    pub fn values(&self) -> &[SimplicialSet] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &SimplicialSet {
        &self.values[c]
    }

    /// The underlying strict diagram, if the diagram was built from one.
    pub fn strict(&self) -> Option<&StrictDiagram> {
        match &self.action {
            Action::Strict(s) => Some(s),
            Action::Atoms(_) => None,
        }
    }

    /// `F(v)(y)` for a word `v ∈ F_kP(c, d)` and a `k`-simplex `y` of
    /// `F(c)`.
    pub fn act(&self, v: &Word, y: &Ez) -> Result<Ez> {
        if v.level != y.degree() {
            return Err(Error::Operator(format!("word of level {} acting on a {}-simplex", v.level, y.degree())));
        }
        let (c, d) = (v.source.0, v.target(&self.cat).0);
        match &self.action {
            Action::Strict(s) => Ok(s.map(c, d)?.apply(y)),
            Action::Atoms(atoms) => {
                let model = WordModel { cat: &self.cat };
                let mut cur = y.clone();
                let mut src = v.source;
                for node in v.root.iter().rev() {
                    let atom = Word { level: v.level, source: src, root: vec![node.clone()] };
                    let (surj, base) = model.decompose(&atom)?;
                    let a = atoms
                        .get(&base)
                        .ok_or_else(|| Error::Lookup(format!("no action for {}", base.show(&self.cat))))?;
                    let z = a.product.pair(&cur, &surjection_simplex(surj, base.level))?;
                    cur = a.map.apply(&z);
                    src = atom.target(&self.cat);
                }
                Ok(cur)
            }
        }
    }

    /// The action `F(c) × Δⁿ → F(d)` of an arbitrary word of level `n`.
    pub fn action(&self, w: &Word) -> Result<AtomAction> {
        w.validate(&self.cat)?;
        let (c, d) = (w.source.0, w.target(&self.cat).0);
        let n = w.level;
        let product = product(&self.values[c], &delta(n))?;
        let dn = StandardSimplex { k: n }.realize(false)?;
        let model = WordModel { cat: &self.cat };
        let mut images = Vec::new();
        for k in 0..product.set().levels() {
            let mut level = Vec::new();
            for id in product.set().ids(k) {
                let (y, t) = product.components(id).clone();
                let theta = vertex_sequence(&dn, n, &t)?;
                level.push(self.act(&model.apply(w, &theta)?, &y)?);
            }
            images.push(level);
        }
        let map = SimplicialMap::checked(product.set(), &self.values[d], images)?;
        Ok(AtomAction { product, map })
    }

    /// `f^*F` along a monotone map `f: Q → P`. For a coherent diagram, `f`
    /// must send strict inequalities to strict inequalities.
    pub fn pullback(&self, q: &FinPoset, f: &[usize]) -> Result<CoherentDiagram> {
        let functor = q.monotone_functor(&self.poset, f)?;
        if let Action::Strict(s) = &self.action {
            return Ok(coherent_from_strict(&s.pullback(q, f)?));
        }
        let qcat = q.to_category();
        if !functor.sends_non_identities_to_non_identities(&qcat, &self.cat) {
            return Err(Error::Precondition("pullback of a coherent diagram along a map collapsing an inequality".into()));
        }
        let values: Vec<SimplicialSet> = f.iter().map(|&i| self.values[i].clone()).collect();
        let mut res = Resolution::new(&qcat)?;
        let mut actions = Vec::new();
        for w in nondegenerate_atoms(&mut res, q)? {
            let a = self.action(&w.map(&functor))?;
            actions.push((w, a.map));
        }
        CoherentDiagram::from_atoms(q.clone(), values, actions)
    }

    /// Restriction to the full subposet on `keep`. Elements keep their names.
    pub fn restrict(&self, keep: &[usize]) -> Result<CoherentDiagram> {
        let sub = self.poset.full_subposet(keep);
        self.pullback(&sub.poset, &sub.map)
    }

    /// Restriction to the elements with the given names.
    pub fn restrict_named(&self, names: &[&str]) -> Result<CoherentDiagram> {
        let keep = names.iter().map(|n| self.poset.index_of(n)).collect::<Result<Vec<_>>>()?;
        self.restrict(&keep)
    }

    /// Checks that both diagrams have the same values and the same action
    /// on every nondegenerate atom.
    pub fn agrees_with(&self, other: &CoherentDiagram) -> Result<()> {
        if self.poset != other.poset {
            return Err(Error::Validation("diagrams over different posets".into()));
        }
        for c in 0..self.poset.len() {
            if self.values[c] != other.values[c] {
                return Err(Error::Validation(format!("values differ at {}", self.poset.name(c))));
            }
        }
        let mut res = Resolution::new(&self.cat)?;
        for w in nondegenerate_atoms(&mut res, &self.poset)? {
            if self.action(&w)?.map != other.action(&w)?.map {
                return Err(Error::Validation(format!("actions differ on {}", w.show(&self.cat))));
            }
        }
        Ok(())
    }
}

/// The coherent diagram `F ∘ ε` of a strict diagram.
pub fn coherent_from_strict(f: &StrictDiagram) -> CoherentDiagram {
    CoherentDiagram {
        poset: f.poset.clone(),
        cat: f.poset.to_category(),
        values: f.values.clone(),
        action: Action::Strict(f.clone()),
    }
}

/// An extension of a diagram over `P` to the cone on `P`.
#[derive(Clone, Debug)]
pub struct ConeExtension {
    pub base: CoherentDiagram,
    pub extension: CoherentDiagram,
    /// Index of the cone point in the extension.
    pub apex: usize,
}

impl ConeExtension {
    /// The extension's poset must be the base poset with one top element
    /// added, and it must restrict to the base diagram.
    pub fn new(base: CoherentDiagram, extension: CoherentDiagram) -> Result<Self> {
        let p = extension.poset();
        let apex = p
            .maximum()
            .ok_or_else(|| Error::Validation("the extension has no top element".into()))?;
        let keep: Vec<usize> = (0..p.len()).filter(|&i| i != apex).collect();
        extension.restrict(&keep)?.agrees_with(&base)?;
        Ok(ConeExtension { base, extension, apex })
    }

    /// `G(*)`.
    pub fn apex_value(&self) -> &SimplicialSet {
        self.extension.value(self.apex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{point, s0};

    fn vertex_map(x: &SimplicialSet, v: usize) -> SimplicialMap {
        SimplicialMap::constant(x, SimplexId::new(0, v))
    }

    #[test]
    fn composites_are_filled_in() {
        let p = FinPoset::chain(2);
        let vals = vec![s0(), s0(), point()];
        let swap = SimplicialMap::new(vec![vec![Ez::nondeg(SimplexId::new(0, 1)), Ez::nondeg(SimplexId::new(0, 0))]]);
        let f = StrictDiagram::new(p, vals.clone(), vec![(0, 1, swap), (1, 2, vertex_map(&vals[1], 0))]).unwrap();
        assert_eq!(f.map(0, 2).unwrap(), vertex_map(&vals[0], 0));
    }

    #[test]
    fn composition_is_checked() {
        let p = FinPoset::chain(2);
        let vals = vec![point(), s0(), s0()];
        let maps = vec![
            (0, 1, vertex_map(&vals[0], 0)),
            (1, 2, SimplicialMap::identity(&vals[1])),
            (0, 2, vertex_map(&vals[0], 1)),
        ];
        assert!(StrictDiagram::new(p, vals, maps).is_err());
    }

    #[test]
    fn strict_action_is_the_augmented_map() {
        let p = FinPoset::chain(2);
        let f = StrictDiagram::new(
            p,
            vec![point(), s0(), point()],
            vec![(0, 1, vertex_map(&point(), 1)), (1, 2, vertex_map(&s0(), 0))],
        )
        .unwrap();
        let g = coherent_from_strict(&f);
        let w = Word::parse(g.category(), "((1<2,0<1))", None).unwrap();
        let a = g.action(&w).unwrap();
        let h = f.map(0, 2).unwrap().after(&a.product.left);
        assert_eq!(a.map, h);
    }

    #[test]
    fn atoms_reproduce_a_strict_diagram() {
        let p = FinPoset::chain(2);
        let f = StrictDiagram::new(
            p.clone(),
            vec![point(), s0(), point()],
            vec![(0, 1, vertex_map(&point(), 1)), (1, 2, vertex_map(&s0(), 0))],
        )
        .unwrap();
        let g = coherent_from_strict(&f);
        let mut res = Resolution::new(g.category()).unwrap();
        let actions = nondegenerate_atoms(&mut res, &p)
            .unwrap()
            .into_iter()
            .map(|w| {
                let m = g.action(&w).unwrap().map;
                (w, m)
            })
            .collect();
        let h = CoherentDiagram::from_atoms(p, f.values().to_vec(), actions).unwrap();
        h.agrees_with(&g).unwrap();
    }
}
