use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Object of a [`FinCategory`], an index into its object table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub usize);

/// Morphism of a [`FinCategory`], an index into its morphism table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismInfo {
    pub name: String,
    pub source: Obj,
    pub target: Obj,
}

/// A finite category with interned objects and morphisms.
///
/// Identities are always present and are created by the constructor. The
/// composition table is total on composable pairs and checked for
/// associativity and unitality when the category is built.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismInfo>,
    identities: Vec<Mor>,
    homs: Vec<Vec<Vec<Mor>>>,
    compose: HashMap<(Mor, Mor), Mor>,
    by_name: HashMap<String, Mor>,
    obj_by_name: HashMap<String, Obj>,
}

impl FinCategory {
    /// Builds a category from its objects, its non-identity morphisms
    /// `(name, source, target)` and the composites `(g, f) -> g∘f` of every
    /// composable pair of non-identity morphisms, all given by name.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        composites: &[(String, String, String)],
    ) -> Result<Self> {
        let n = objects.len();
        let mut obj_by_name = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_by_name.insert(o.clone(), Obj(i)).is_some() {
                return Err(Error::Validation(format!("duplicate object {o}")));
            }
        }
        let mut infos = Vec::with_capacity(n + morphisms.len());
        let mut identities = Vec::with_capacity(n);
        for (i, o) in objects.iter().enumerate() {
            identities.push(Mor(infos.len()));
            infos.push(MorphismInfo { name: format!("id_{o}"), source: Obj(i), target: Obj(i) });
        }
        for (name, s, t) in morphisms {
            if s >= n || t >= n {
                return Err(Error::Validation(format!("morphism {name} has unknown endpoint")));
            }
            infos.push(MorphismInfo { name, source: Obj(s), target: Obj(t) });
        }
        let mut by_name = HashMap::new();
        for (i, m) in infos.iter().enumerate() {
            if by_name.insert(m.name.clone(), Mor(i)).is_some() {
                return Err(Error::Validation(format!("duplicate morphism name {}", m.name)));
            }
        }
        let mut compose = HashMap::new();
        for (g, f, h) in composites {
            let look = |s: &str| {
                by_name
                    .get(s)
                    .copied()
                    .ok_or_else(|| Error::Validation(format!("unknown morphism {s} in composition table")))
            };
            let (g, f, h) = (look(g)?, look(f)?, look(h)?);
            compose.insert((g, f), h);
        }
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (i, m) in infos.iter().enumerate() {
            homs[m.source.0][m.target.0].push(Mor(i));
        }
        for (i, id) in identities.iter().enumerate() {
            for (j, m) in infos.iter().enumerate() {
                if m.source == Obj(i) {
                    compose.insert((Mor(j), *id), Mor(j));
                }
                if m.target == Obj(i) {
                    compose.insert((*id, Mor(j)), Mor(j));
                }
            }
        }
        let cat = FinCategory { objects, morphisms: infos, identities, homs, compose, by_name, obj_by_name };
        cat.validate()?;
        Ok(cat)
    }

    /// Exhaustive law check: totality, typing, unit and associativity.
    pub fn validate(&self) -> Result<()> {
        let m = self.morphisms.len();
        for g in 0..m {
            for f in 0..m {
                let (g, f) = (Mor(g), Mor(f));
                let composable = self.source(g) == self.target(f);
                match (composable, self.compose.get(&(g, f))) {
                    (true, None) => {
                        return Err(Error::Validation(format!(
                            "missing composite {}∘{}",
                            self.name(g),
                            self.name(f)
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(Error::Validation(format!(
                            "composite given for non-composable {}∘{}",
                            self.name(g),
                            self.name(f)
                        )))
                    }
                    (true, Some(h)) => {
                        if self.source(*h) != self.source(f) || self.target(*h) != self.target(g) {
                            return Err(Error::Validation(format!(
                                "composite {}∘{} has wrong endpoints",
                                self.name(g),
                                self.name(f)
                            )));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..m {
            let f = Mor(f);
            for g in self.out_of(self.target(f)) {
                let gf = self.compose.get(&(g, f)).copied().unwrap();
                for h in self.out_of(self.target(g)) {
                    let lhs = self.compose[&(h, gf)];
                    let hg = self.compose[&(h, g)];
                    let rhs = self.compose[&(hg, f)];
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "composition not associative on ({}, {}, {})",
                            self.name(h),
                            self.name(g),
                            self.name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> {
        (0..self.objects.len()).map(Obj)
    }

    pub fn object_name(&self, o: Obj) -> &str {
        &self.objects[o.0]
    }

    pub fn object_by_name(&self, name: &str) -> Result<Obj> {
        self.obj_by_name.get(name).copied().ok_or_else(|| Error::Lookup(format!("unknown object {name}")))
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn morphism_by_name(&self, name: &str) -> Result<Mor> {
        self.by_name.get(name).copied().ok_or_else(|| Error::Lookup(format!("unknown morphism {name}")))
    }

    pub fn name(&self, m: Mor) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn source(&self, m: Mor) -> Obj {
        self.morphisms[m.0].source
    }

    pub fn target(&self, m: Mor) -> Obj {
        self.morphisms[m.0].target
    }

    pub fn identity(&self, o: Obj) -> Mor {
        self.identities[o.0]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identities[self.source(m).0] == m
    }

    pub fn hom(&self, c: Obj, d: Obj) -> &[Mor] {
        &self.homs[c.0][d.0]
    }

    /// Non-identity morphisms out of `c`.
    pub fn out_of(&self, c: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.homs[c.0].iter().flatten().copied()
    }

    pub fn non_identity_out_of(&self, c: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.out_of(c).filter(move |m| !self.is_identity(*m))
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: Mor, f: Mor) -> Result<Mor> {
        self.compose.get(&(g, f)).copied().ok_or_else(|| {
            Error::Operator(format!("{} and {} are not composable", self.name(g), self.name(f)))
        })
    }

    /// Composite of a chain listed last-first, `(f_k, ..., f_1)`; the
    /// identity of `source` for the empty chain.
    pub fn compose_chain(&self, source: Obj, chain: &[Mor]) -> Result<Mor> {
        let mut acc = self.identity(source);
        for m in chain.iter().rev() {
            acc = self.compose(*m, acc)?;
        }
        Ok(acc)
    }

    /// True when every hom-set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.homs.iter().flatten().all(|h| h.len() <= 1)
    }

    /// Adds one terminal object named `apex`.
    pub fn cone(&self, apex: &str) -> Result<FinCategory> {
        let n = self.objects.len();
        let mut objects = self.objects.clone();
        objects.push(apex.to_string());
        let mut morphisms = self.non_identity_list();
        let to_apex: Vec<String> = self.objects.iter().map(|o| format!("{o}<{apex}")).collect();
        for (i, name) in to_apex.iter().enumerate() {
            morphisms.push((name.clone(), i, n));
        }
        let mut composites = self.non_identity_composites();
        for f in self.morphisms() {
            if !self.is_identity(f) {
                composites.push((
                    to_apex[self.target(f).0].clone(),
                    self.name(f).to_string(),
                    to_apex[self.source(f).0].clone(),
                ));
            }
        }
        FinCategory::new(objects, morphisms, &composites)
    }

    /// `C × [n]` with objects `(c,i)`.
    pub fn product_with_chain(&self, n: usize) -> Result<FinCategory> {
        let mut objects = Vec::new();
        for c in &self.objects {
            for i in 0..=n {
                objects.push(format!("({c},{i})"));
            }
        }
        let idx = |c: usize, i: usize| c * (n + 1) + i;
        let pname = |f: Mor, i: usize, j: usize| format!("({},{i}<={j})", self.name(f));
        let mut morphisms = Vec::new();
        let mut list = Vec::new();
        for f in self.morphisms() {
            for i in 0..=n {
                for j in i..=n {
                    if self.is_identity(f) && i == j {
                        continue;
                    }
                    morphisms.push((pname(f, i, j), idx(self.source(f).0, i), idx(self.target(f).0, j)));
                    list.push((f, i, j));
                }
            }
        }
        let mut composites = Vec::new();
        for &(f, i, j) in &list {
            for &(g, k, l) in &list {
                if self.target(f) == self.source(g) && j == k {
                    let h = self.compose(g, f)?;
                    let hname = if self.is_identity(h) && i == l {
                        format!("id_{}", objects[idx(self.source(h).0, i)])
                    } else {
                        pname(h, i, l)
                    };
                    composites.push((pname(g, k, l), pname(f, i, j), hname));
                }
            }
        }
        FinCategory::new(objects, morphisms, &composites)
    }

    pub(crate) fn non_identity_list(&self) -> Vec<(String, usize, usize)> {
        self.morphisms()
            .filter(|m| !self.is_identity(*m))
            .map(|m| (self.name(m).to_string(), self.source(m).0, self.target(m).0))
            .collect()
    }

    pub(crate) fn non_identity_composites(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for (&(g, f), &h) in &self.compose {
            if !self.is_identity(g) && !self.is_identity(f) {
                out.push((self.name(g).to_string(), self.name(f).to_string(), self.name(h).to_string()));
            }
        }
        out.sort();
        out
    }

    /// The longest chain of composable non-identity morphisms, or an error
    /// if a non-identity cycle exists.
    pub fn longest_chain(&self) -> Result<usize> {
        let n = self.objects.len();
        let mut memo: Vec<Option<usize>> = vec![None; n];
        let mut on_stack = vec![false; n];
        fn visit(
            cat: &FinCategory,
            c: usize,
            memo: &mut Vec<Option<usize>>,
            on_stack: &mut Vec<bool>,
        ) -> Result<usize> {
            if let Some(v) = memo[c] {
                return Ok(v);
            }
            if on_stack[c] {
                return Err(Error::UnsupportedCategory(format!(
                    "non-identity cycle through object {}",
                    cat.objects[c]
                )));
            }
            on_stack[c] = true;
            let mut best = 0;
            let outs: Vec<Mor> = cat.non_identity_out_of(Obj(c)).collect();
            for m in outs {
                let t = cat.target(m).0;
                if t == c {
                    return Err(Error::UnsupportedCategory(format!(
                        "non-identity endomorphism {}",
                        cat.name(m)
                    )));
                }
                best = best.max(1 + visit(cat, t, memo, on_stack)?);
            }
            on_stack[c] = false;
            memo[c] = Some(best);
            Ok(best)
        }
        let mut best = 0;
        for c in 0..n {
            best = best.max(visit(self, c, &mut memo, &mut on_stack)?);
        }
        Ok(best)
    }

    /// Printable composition table.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str("objects:");
        for o in &self.objects {
            out.push(' ');
            out.push_str(o);
        }
        out.push('\n');
        for m in self.morphisms() {
            out.push_str(&format!(
                "{}: {} -> {}\n",
                self.name(m),
                self.object_name(self.source(m)),
                self.object_name(self.target(m))
            ));
        }
        out
    }
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.morphisms == other.morphisms && self.compose == other.compose
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table())
    }
}

/// A functor between two finite categories, stored as object and morphism
/// maps. It does not own the categories it connects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub objects: Vec<Obj>,
    pub morphisms: Vec<Mor>,
}

impl Functor {
    pub fn new(src: &FinCategory, tgt: &FinCategory, objects: Vec<Obj>, morphisms: Vec<Mor>) -> Result<Self> {
        let f = Functor { objects, morphisms };
        f.validate(src, tgt)?;
        Ok(f)
    }

    pub fn identity(cat: &FinCategory) -> Self {
        Functor { objects: cat.objects().collect(), morphisms: cat.morphisms().collect() }
    }

    /// Functor determined by an object map, for thin target categories.
    pub fn from_object_map(src: &FinCategory, tgt: &FinCategory, objects: Vec<Obj>) -> Result<Self> {
        if objects.len() != src.object_count() {
            return Err(Error::Validation("object map has wrong length".into()));
        }
        let mut morphisms = Vec::with_capacity(src.morphism_count());
        for m in src.morphisms() {
            let (s, t) = (objects[src.source(m).0], objects[src.target(m).0]);
            let hom = tgt.hom(s, t);
            if hom.len() != 1 {
                return Err(Error::Validation(format!(
                    "object map does not determine image of {} ({} candidates)",
                    src.name(m),
                    hom.len()
                )));
            }
            morphisms.push(hom[0]);
        }
        Functor::new(src, tgt, objects, morphisms)
    }

    pub fn validate(&self, src: &FinCategory, tgt: &FinCategory) -> Result<()> {
        if self.objects.len() != src.object_count() || self.morphisms.len() != src.morphism_count() {
            return Err(Error::Validation("functor maps have wrong length".into()));
        }
        for o in src.objects() {
            if tgt.identity(self.obj(o)) != self.mor(src.identity(o)) {
                return Err(Error::Validation(format!("functor does not preserve id_{}", src.object_name(o))));
            }
        }
        for m in src.morphisms() {
            let fm = self.mor(m);
            if tgt.source(fm) != self.obj(src.source(m)) || tgt.target(fm) != self.obj(src.target(m)) {
                return Err(Error::Validation(format!("functor does not preserve endpoints of {}", src.name(m))));
            }
        }
        for f in src.morphisms() {
            for g in src.out_of(src.target(f)) {
                let lhs = self.mor(src.compose(g, f)?);
                let rhs = tgt.compose(self.mor(g), self.mor(f))?;
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "functor does not preserve {}∘{}",
                        src.name(g),
                        src.name(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn obj(&self, o: Obj) -> Obj {
        self.objects[o.0]
    }

    pub fn mor(&self, m: Mor) -> Mor {
        self.morphisms[m.0]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            objects: first.objects.iter().map(|o| self.obj(*o)).collect(),
            morphisms: first.morphisms.iter().map(|m| self.mor(*m)).collect(),
        }
    }

    pub fn sends_non_identities_to_non_identities(&self, src: &FinCategory, tgt: &FinCategory) -> bool {
        src.morphisms().all(|m| src.is_identity(m) || !tgt.is_identity(self.mor(m)))
    }

    pub fn is_full_embedding(&self, src: &FinCategory, tgt: &FinCategory) -> bool {
        let mut seen = std::collections::HashSet::new();
        if !self.objects.iter().all(|o| seen.insert(*o)) {
            return false;
        }
        for c in src.objects() {
            for d in src.objects() {
                let mut img: Vec<Mor> = src.hom(c, d).iter().map(|m| self.mor(*m)).collect();
                img.sort();
                img.dedup();
                if img.len() != src.hom(c, d).len() || img.len() != tgt.hom(self.obj(c), self.obj(d)).len() {
                    return false;
                }
            }
        }
        true
    }
}
