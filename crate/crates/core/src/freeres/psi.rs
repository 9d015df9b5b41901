//! The bisimplicial weight `ψ` and the comparison maps `κ`, `λ` and the
//! homotopy `H` between `λκ` and the identity.

use super::resolution::{Resolution, WordModel};
use super::word::Word;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Mor, Obj};
use crate::simpset::{realize, realize_map, Realized, SimplicialMap, SimplicialModel};

/// A category with a terminal object adjoined, together with the inclusion
/// of the original category.
#[derive(Clone, Debug)]
pub struct Coned {
    pub base: FinCategory,
    pub hat: FinCategory,
    pub apex: Obj,
    pub embed: Functor,
    restrict: Vec<Option<Mor>>,
}

impl Coned {
    pub fn new(base: &FinCategory, apex: &str) -> Result<Self> {
        let hat = base.cone(apex)?;
        let apex_obj = hat.object_by_name(apex)?;
        let mut morphisms = Vec::with_capacity(base.morphism_count());
        for m in base.morphisms() {
            morphisms.push(hat.morphism_by_name(base.name(m))?);
        }
        let embed = Functor::new(base, &hat, base.objects().collect(), morphisms)?;
        let mut restrict = vec![None; hat.morphism_count()];
        for m in base.morphisms() {
            restrict[embed.mor(m).0] = Some(m);
        }
        Ok(Coned { base: base.clone(), hat, apex: apex_obj, embed, restrict })
    }

    /// The terminal morphism `c → *`.
    pub fn t(&self, c: Obj) -> Mor {
        self.hat.hom(c, self.apex)[0]
    }

    pub fn lift(&self, w: &Word) -> Word {
        w.map(&self.embed)
    }

    /// A word of the cone that avoids the apex, as a word of the base.
    pub fn lower(&self, w: &Word) -> Result<Word> {
        let f = Functor {
            objects: self.hat.objects().map(|o| if o == self.apex { Obj(0) } else { o }).collect(),
            morphisms: self.restrict.iter().map(|m| m.unwrap_or(Mor(0))).collect(),
        };
        if w.source == self.apex || w.leaves().iter().any(|m| self.restrict[m.0].is_none()) {
            return Err(Error::Operator(format!("word {} touches the apex", w.show(&self.hat))));
        }
        Ok(w.map(&f))
    }
}

/// An `n`-simplex of `ψ(c)`: words `f_j ∈ F_nC(c_{j−1}, c_j)` for
/// `j = 0..=n`, with `c_{−1} = c`. `comps[j]` is `f_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiSimplex {
    pub source: Obj,
    pub comps: Vec<Word>,
}

impl PsiSimplex {
    pub fn degree(&self) -> usize {
        self.comps.len() - 1
    }

    /// `c_j`, the target of `f_j`.
    pub fn object(&self, cat: &FinCategory, j: usize) -> Obj {
        self.comps[j].target(cat)
    }

    pub fn validate(&self, cat: &FinCategory) -> Result<()> {
        let n = self.degree();
        let mut cur = self.source;
        for f in &self.comps {
            if f.level != n || f.source != cur {
                return Err(Error::Validation("ψ components do not chain".into()));
            }
            f.validate(cat)?;
            cur = f.target(cat);
        }
        Ok(())
    }

    pub fn face(&self, cat: &FinCategory, i: usize) -> Result<PsiSimplex> {
        let n = self.degree();
        if n == 0 || i > n {
            return Err(Error::Operator(format!("face d{i} undefined in degree {n}")));
        }
        let faced: Vec<Word> = self.comps.iter().map(|f| f.face(cat, i)).collect::<Result<_>>()?;
        let mut comps = Vec::with_capacity(n);
        if i == n {
            comps.extend(faced[..n].iter().cloned());
        } else {
            comps.extend(faced[..i].iter().cloned());
            comps.push(faced[i + 1].compose(cat, &faced[i])?);
            comps.extend(faced[i + 2..].iter().cloned());
        }
        Ok(PsiSimplex { source: self.source, comps })
    }

    pub fn degeneracy(&self, cat: &FinCategory, i: usize) -> Result<PsiSimplex> {
        let n = self.degree();
        if i > n {
            return Err(Error::Operator(format!("degeneracy s{i} undefined in degree {n}")));
        }
        let mut comps: Vec<Word> = self.comps.iter().map(|f| f.degeneracy(i)).collect::<Result<_>>()?;
        comps.insert(i + 1, Word::empty(n + 1, self.object(cat, i)));
        Ok(PsiSimplex { source: self.source, comps })
    }

    /// Precomposition `x ∘ g`: `f_0 ↦ f_0 ∘ g`.
    pub fn precompose(&self, cat: &FinCategory, g: &Word) -> Result<PsiSimplex> {
        let mut comps = self.comps.clone();
        comps[0] = comps[0].compose(cat, g)?;
        Ok(PsiSimplex { source: g.source, comps })
    }

    /// `ε_•`: the string `c → c_0 → … → c_n` of augmentations.
    pub fn augmentations(&self, cat: &FinCategory) -> Vec<Mor> {
        self.comps.iter().map(|f| f.augment(cat)).collect()
    }

    pub fn show(&self, cat: &FinCategory) -> String {
        let parts: Vec<String> = self.comps.iter().rev().map(|f| f.show(cat)).collect();
        format!("<{}>", parts.join(";"))
    }
}

/// `κ_0(f_0) = Ft ∘ f_0`, `κ_n(f_n, …, f_0) = Fκ_{n−1}(d_0f_n, …, d_0f_1) ∘ f_0`.
pub fn kappa(cone: &Coned, x: &PsiSimplex) -> Result<Word> {
    let n = x.degree();
    let f0 = cone.lift(&x.comps[0]);
    let c0 = x.object(&cone.base, 0);
    if n == 0 {
        return Word::atom(&cone.hat, cone.t(c0), 0).compose(&cone.hat, &f0);
    }
    let inner = PsiSimplex {
        source: c0,
        comps: x.comps[1..].iter().map(|f| f.face(&cone.base, 0)).collect::<Result<_>>()?,
    };
    kappa(cone, &inner)?.extra_f().compose(&cone.hat, &f0)
}

/// Inverse of `κ`: `λ_0(Ft) = id`, `λ_n(Fl) = (Fλ_{n−1}(l), id)`, extended
/// by `λ(w ∘ v) = λ(w) ∘ v`.
pub fn lambda(cone: &Coned, w: &Word) -> Result<PsiSimplex> {
    let hat = &cone.hat;
    if w.source == cone.apex || w.target(hat) != cone.apex {
        return Err(Error::Operator(format!("{} is not a word into the apex", w.show(hat))));
    }
    let n = w.level;
    // w = (l) ∘ v with l the last letter
    let rest = Word { level: n, source: w.source, root: w.root[1..].to_vec() };
    let v = cone.lower(&rest)?;
    let c0 = v.target(&cone.base);
    if n == 0 {
        return Ok(PsiSimplex { source: w.source, comps: vec![v] });
    }
    let l = Word { level: n - 1, source: c0, root: w.letters(hat)[0].root.clone() };
    let g = lambda(cone, &l)?;
    let mut comps = vec![v];
    comps.extend(g.comps.iter().map(Word::extra_f));
    Ok(PsiSimplex { source: w.source, comps })
}

/// `x_j = F^j d_0^j`.
pub fn x_op(cat: &FinCategory, w: &Word, j: usize) -> Result<Word> {
    let mut v = w.clone();
    for _ in 0..j {
        v = v.face(cat, 0)?;
    }
    for _ in 0..j {
        v = v.extra_f();
    }
    Ok(v)
}

/// `k(α) = min{i : α(i) = 1}`, or `n + 1` when `α ≡ 0`.
pub fn k_of(alpha: &[u32]) -> usize {
    alpha.iter().position(|&a| a == 1).unwrap_or(alpha.len())
}

/// `H_n(f, α) = (x_{n∧k} f_n, …, x_{0∧k} f_0)` with `k = k(α)`.
pub fn homotopy_h(cat: &FinCategory, x: &PsiSimplex, k: usize) -> Result<PsiSimplex> {
    if k > x.degree() + 1 {
        return Err(Error::Operator(format!("k = {k} out of range in degree {}", x.degree())));
    }
    let comps = x.comps.iter().enumerate().map(|(j, f)| x_op(cat, f, j.min(k))).collect::<Result<_>>()?;
    Ok(PsiSimplex { source: x.source, comps })
}

/// All `n`-simplices of `ψ(c)` over a category.
pub fn psi_simplices(res: &mut Resolution<'_>, c: Obj, n: usize) -> Vec<PsiSimplex> {
    let cat = res.category();
    let mut out = Vec::new();
    let mut partial: Vec<(Obj, Vec<Word>)> = vec![(c, Vec::new())];
    for _ in 0..=n {
        let mut next = Vec::new();
        for (cur, comps) in partial {
            for d in cat.objects() {
                for w in res.words(n, cur, d) {
                    let mut cs = comps.clone();
                    cs.push(w);
                    next.push((d, cs));
                }
            }
        }
        partial = next;
    }
    for (_, comps) in partial {
        out.push(PsiSimplex { source: c, comps });
    }
    out.sort();
    out
}

/// `ψ(c)` as a simplicial model.
pub struct PsiModel<'a> {
    pub cat: &'a FinCategory,
}

impl SimplicialModel for PsiModel<'_> {
    type Simplex = PsiSimplex;

    fn degree(&self, s: &PsiSimplex) -> usize {
        s.degree()
    }

    fn face(&self, s: &PsiSimplex, i: usize) -> Result<PsiSimplex> {
        s.face(self.cat, i)
    }

    fn degeneracy(&self, s: &PsiSimplex, j: usize) -> Result<PsiSimplex> {
        s.degeneracy(self.cat, j)
    }

    fn label(&self, s: &PsiSimplex) -> String {
        s.show(self.cat)
    }
}

/// `ψ(c)` as a simplicial set. Nondegenerate simplices live in degrees at
/// most twice the longest chain of the category; the next degree is checked
/// to be degenerate.
pub fn psi_sset(res: &mut Resolution<'_>, c: Obj) -> Result<Realized<PsiSimplex>> {
    let cat = res.category();
    let top = 2 * cat.longest_chain()?;
    let model = PsiModel { cat };
    let mut cands = Vec::new();
    for n in 0..=top {
        cands.extend(psi_simplices(res, c, n));
    }
    for x in psi_simplices(res, c, top + 1) {
        if !model.is_degenerate(&x)? {
            return Err(Error::Validation(format!("nondegenerate simplex {} above degree {top}", x.show(cat))));
        }
    }
    realize(&model, cands)
}

/// `κ: ψ(c) → φ(c)` between the realized simplicial sets.
pub fn kappa_map(cone: &Coned, psi: &Realized<PsiSimplex>, phi: &Realized<Word>) -> Result<SimplicialMap> {
    realize_map::<PsiModel, WordModel, _>(psi, &WordModel { cat: &cone.hat }, phi, |x| kappa(cone, x))
}
