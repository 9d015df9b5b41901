//! Exhaustive checks of the laws satisfied by the resolution and the maps
//! built from it, with counterexamples.

use std::collections::HashSet;

use serde::Serialize;

use super::psi::{homotopy_h, k_of, kappa, lambda, psi_simplices, x_op, Coned, PsiSimplex};
use super::resolution::Resolution;
use super::tau::{iota, tau, DoubleCone};
use super::word::Word;
use crate::error::Result;
use crate::fincat::{FinCategory, Obj};
use crate::homalg::homology;

const KEPT: usize = 5;

/// Outcome of one law over all instances up to some degree.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instances: usize,
    pub violations: usize,
    /// The first few counterexamples.
    pub counterexamples: Vec<String>,
}

impl LawReport {
    fn new(law: &str) -> Self {
        LawReport { law: law.to_string(), instances: 0, violations: 0, counterexamples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.counterexamples.len() < KEPT {
                self.counterexamples.push(what());
            }
        }
    }

    pub fn passes(&self) -> bool {
        self.violations == 0
    }
}

fn all_words(res: &mut Resolution<'_>, cat: &FinCategory, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for c in cat.objects() {
        for d in cat.objects() {
            out.extend(res.words(n, c, d));
        }
    }
    out
}

/// `α: Δⁿ → Δ¹` as the list of its values, one for each `k(α)`.
fn alphas(n: usize) -> Vec<Vec<u32>> {
    (0..=n + 1).map(|k| (0..=n).map(|i| u32::from(i >= k)).collect()).collect()
}

/// Face, degeneracy and mixed identities on `F_•C(c, d)` for all `c, d`,
/// and agreement of the degeneracy test with the images of the `s_i`.
pub fn simplicial_identities(cat: &FinCategory, maxdeg: usize) -> Result<LawReport> {
    let mut r = LawReport::new("simplicial identities");
    let mut res = Resolution::new(cat)?;
    for n in 0..=maxdeg {
        for w in all_words(&mut res, cat, n) {
            let show = || w.show(cat);
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = w.face(cat, j)?.face(cat, i)?;
                        let rhs = w.face(cat, i)?.face(cat, j - 1)?;
                        r.check(lhs == rhs, || format!("d{i}d{j} on {}", show()));
                    }
                }
            }
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = w.degeneracy(j)?.degeneracy(i)?;
                    let rhs = w.degeneracy(i)?.degeneracy(j + 1)?;
                    r.check(lhs == rhs, || format!("s{i}s{j} on {}", show()));
                }
            }
            for j in 0..=n {
                let sj = w.degeneracy(j)?;
                for i in 0..=n + 1 {
                    let lhs = sj.face(cat, i)?;
                    let rhs = if i == j || i == j + 1 {
                        w.clone()
                    } else if n == 0 {
                        continue;
                    } else if i < j {
                        w.face(cat, i)?.degeneracy(j - 1)?
                    } else {
                        w.face(cat, i - 1)?.degeneracy(j)?
                    };
                    r.check(lhs == rhs, || format!("d{i}s{j} on {}", show()));
                }
            }
            let deg = (0..n).any(|i| w.face(cat, i).ok().and_then(|f| f.degeneracy(i).ok()) == Some(w.clone()));
            r.check(deg == w.is_degenerate(), || format!("degeneracy flag of {}", show()));
        }
    }
    Ok(r)
}

/// The extra degeneracy `F` and the augmentation.
pub fn extra_degeneracy(cat: &FinCategory, maxdeg: usize) -> Result<LawReport> {
    let mut r = LawReport::new("extra degeneracy");
    let mut res = Resolution::new(cat)?;
    for n in 0..=maxdeg {
        for w in all_words(&mut res, cat, n) {
            let fw = w.extra_f();
            r.check(fw.face(cat, 0)? == w, || format!("d0 F on {}", w.show(cat)));
            r.check(fw.degeneracy(0)? == fw.extra_f(), || format!("s0 F on {}", w.show(cat)));
            for i in 1..=n + 1 {
                let rhs = if n == 0 { Word::from_chain(cat, w.source, &[w.augment(cat)]) } else { w.face(cat, i - 1)?.extra_f() };
                r.check(fw.face(cat, i)? == rhs, || format!("d{i} F on {}", w.show(cat)));
                r.check(fw.degeneracy(i)? == w.degeneracy(i - 1)?.extra_f(), || format!("s{i} F on {}", w.show(cat)));
            }
            if n >= 1 {
                for i in 0..=n {
                    r.check(w.face(cat, i)?.augment(cat) == w.augment(cat), || format!("ε d{i} on {}", w.show(cat)));
                }
            }
        }
    }
    Ok(r)
}

/// `κ` commutes with faces and degeneracies, is natural in `c`, satisfies
/// `λκ = (x_0, …, x_n)` and `τκ = ε`.
pub fn kappa_identities(cat: &FinCategory, maxdeg: usize) -> Result<Vec<LawReport>> {
    let cone = Coned::new(cat, "*")?;
    let mut res = Resolution::new(cat)?;
    let mut simp = LawReport::new("κ simplicial");
    let mut nat = LawReport::new("κ natural");
    let mut xj = LawReport::new("λκ = x_j");
    let mut tk = LawReport::new("τκ = ε");
    for c in cat.objects() {
        for n in 0..=maxdeg {
            for x in psi_simplices(&mut res, c, n) {
                let k = kappa(&cone, &x)?;
                for i in 0..=n {
                    if n >= 1 {
                        let ok = k.face(&cone.hat, i)? == kappa(&cone, &x.face(cat, i)?)?;
                        simp.check(ok, || format!("d{i} on {}", x.show(cat)));
                    }
                    let ok = k.degeneracy(i)? == kappa(&cone, &x.degeneracy(cat, i)?)?;
                    simp.check(ok, || format!("s{i} on {}", x.show(cat)));
                }
                for b in cat.objects() {
                    for g in res.words(n, b, c) {
                        let ok = kappa(&cone, &x.precompose(cat, &g)?)? == k.compose(&cone.hat, &cone.lift(&g))?;
                        nat.check(ok, || format!("{} after {}", x.show(cat), g.show(cat)));
                    }
                }
                let direct = PsiSimplex {
                    source: x.source,
                    comps: x.comps.iter().enumerate().map(|(j, f)| x_op(cat, f, j)).collect::<Result<_>>()?,
                };
                xj.check(lambda(&cone, &k)? == direct, || x.show(cat));
                tk.check(tau(&cone, &k)? == x.augmentations(cat), || x.show(cat));
            }
        }
    }
    Ok(vec![simp, nat, xj, tk])
}

/// `κλ = id` on `φ(c)` for every `c`.
pub fn kappa_lambda(cat: &FinCategory, maxdeg: usize) -> Result<LawReport> {
    let cone = Coned::new(cat, "*")?;
    let mut hres = Resolution::new(&cone.hat)?;
    let mut r = LawReport::new("κλ = id");
    for c in cat.objects() {
        for n in 0..=maxdeg {
            for w in hres.words(n, c, cone.apex) {
                let ok = kappa(&cone, &lambda(&cone, &w)?)? == w;
                r.check(ok, || w.show(&cone.hat));
            }
        }
    }
    Ok(r)
}

/// `λ` commutes with all faces and degeneracies.
pub fn lambda_simplicial(cat: &FinCategory, maxdeg: usize) -> Result<LawReport> {
    let cone = Coned::new(cat, "*")?;
    let mut hres = Resolution::new(&cone.hat)?;
    let mut r = LawReport::new("λ simplicial");
    for c in cat.objects() {
        for n in 0..=maxdeg {
            for w in hres.words(n, c, cone.apex) {
                let l = lambda(&cone, &w)?;
                for i in 0..=n {
                    if n >= 1 {
                        let ok = l.face(cat, i)? == lambda(&cone, &w.face(&cone.hat, i)?)?;
                        r.check(ok, || format!("d{i} on {}", w.show(&cone.hat)));
                    }
                    let ok = l.degeneracy(cat, i)? == lambda(&cone, &w.degeneracy(i)?)?;
                    r.check(ok, || format!("s{i} on {}", w.show(&cone.hat)));
                }
            }
        }
    }
    Ok(r)
}

/// `H` has ends `id` (`α ≡ 1`) and `λκ` (`α ≡ 0`), and commutes with every
/// face and degeneracy of `ψ(c) × Δ¹`.
pub fn homotopy_laws(cat: &FinCategory, maxdeg: usize) -> Result<Vec<LawReport>> {
    let cone = Coned::new(cat, "*")?;
    let mut res = Resolution::new(cat)?;
    let mut ends = LawReport::new("H ends");
    let mut simp = LawReport::new("H simplicial");
    for c in cat.objects() {
        for n in 0..=maxdeg {
            for x in psi_simplices(&mut res, c, n) {
                ends.check(homotopy_h(cat, &x, 0)? == x, || format!("α ≡ 1 on {}", x.show(cat)));
                let lk = lambda(&cone, &kappa(&cone, &x)?)?;
                ends.check(homotopy_h(cat, &x, n + 1)? == lk, || format!("α ≡ 0 on {}", x.show(cat)));
                for a in alphas(n) {
                    let h = homotopy_h(cat, &x, k_of(&a))?;
                    for i in 0..=n {
                        if n >= 1 {
                            let mut da = a.clone();
                            da.remove(i);
                            let ok = h.face(cat, i)? == homotopy_h(cat, &x.face(cat, i)?, k_of(&da))?;
                            simp.check(ok, || format!("d{i} on {} with α = {a:?}", x.show(cat)));
                        }
                        let mut sa = a.clone();
                        sa.insert(i, a[i]);
                        let ok = h.degeneracy(cat, i)? == homotopy_h(cat, &x.degeneracy(cat, i)?, k_of(&sa))?;
                        simp.check(ok, || format!("s{i} on {} with α = {a:?}", x.show(cat)));
                    }
                }
            }
        }
    }
    Ok(vec![ends, simp])
}

/// `ι: φ(c) × Δ¹ → F_•Č(c, m)` is a degreewise bijection commuting with
/// faces and degeneracies, natural in `c`, and equal to composition with
/// `t` at the vertex 1 of `Δ¹`.
pub fn iota_laws(cat: &FinCategory, maxdeg: usize) -> Result<Vec<LawReport>> {
    let dc = DoubleCone::new(cat, "*", "m")?;
    let hat = &dc.inner.hat;
    let check = &dc.outer.hat;
    let mut hres = Resolution::new(hat)?;
    let mut cres = Resolution::new(check)?;
    let mut bres = Resolution::new(cat)?;
    let m = check.object_by_name("m")?;
    let mut bij = LawReport::new("ι bijective");
    let mut simp = LawReport::new("ι simplicial");
    let mut nat = LawReport::new("ι natural");
    let mut ev = LawReport::new("ι at vertex 1 is t∘");
    for c in cat.objects() {
        for n in 0..=maxdeg {
            let mut seen = HashSet::new();
            for w in hres.words(n, c, dc.inner.apex) {
                for a in alphas(n) {
                    let k = k_of(&a);
                    let v = iota(&dc, &w, k)?;
                    bij.check(seen.insert(v.clone()), || format!("{} hit twice", v.show(check)));
                    for i in 0..=n {
                        if n >= 1 {
                            let mut da = a.clone();
                            da.remove(i);
                            let ok = v.face(check, i)? == iota(&dc, &w.face(hat, i)?, k_of(&da))?;
                            simp.check(ok, || format!("d{i} on {} with α = {a:?}", w.show(hat)));
                        }
                        let mut sa = a.clone();
                        sa.insert(i, a[i]);
                        let ok = v.degeneracy(i)? == iota(&dc, &w.degeneracy(i)?, k_of(&sa))?;
                        simp.check(ok, || format!("s{i} on {} with α = {a:?}", w.show(hat)));
                    }
                    for b in cat.objects() {
                        for g in bres.words(n, b, c) {
                            let lhs = iota(&dc, &w.compose(hat, &dc.inner.lift(&g))?, k)?;
                            let rhs = v.compose(check, &dc.outer.lift(&dc.inner.lift(&g)))?;
                            nat.check(lhs == rhs, || format!("{} after {}", w.show(hat), g.show(cat)));
                        }
                    }
                }
                let at_one = iota(&dc, &w, 0)?;
                let composite = Word::atom(check, dc.t(), n).compose(check, &dc.outer.lift(&w))?;
                ev.check(at_one == composite, || w.show(hat));
            }
            let all: HashSet<Word> = cres.words(n, c, m).into_iter().collect();
            for v in all.difference(&seen) {
                bij.check(false, || format!("{} is missed", v.show(check)));
            }
        }
    }
    Ok(vec![bij, simp, nat, ev])
}

/// `F_•C(c, d)` has the homology of a point for every `c ≤ d`.
pub fn contractibility(cat: &FinCategory) -> Result<LawReport> {
    let mut r = LawReport::new("F(c, d) contractible");
    let mut res = Resolution::new(cat)?;
    for c in cat.objects() {
        for d in cat.objects() {
            if cat.hom(c, d).is_empty() {
                continue;
            }
            let h = homology(&res.hom_sset(c, d, None)?.set);
            r.check(h.is_acyclic(), || format!("F({}, {}): {}", cat.object_name(c), cat.object_name(d), h.summary()));
        }
    }
    Ok(r)
}

/// Number of nondegenerate words in `F_nC(c, d)` for `n ≤ maxdim`.
pub fn census(cat: &FinCategory, c: Obj, d: Obj, maxdim: usize) -> Result<Vec<usize>> {
    let mut res = Resolution::new(cat)?;
    Ok((0..=maxdim).map(|n| res.nondegenerate(n, c, d).len()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinPoset;

    #[test]
    fn laws_on_a_short_chain() {
        let cat = FinPoset::chain(2).to_category();
        assert!(simplicial_identities(&cat, 3).unwrap().passes());
        assert!(extra_degeneracy(&cat, 3).unwrap().passes());
        assert!(kappa_lambda(&cat, 2).unwrap().passes());
        for r in kappa_identities(&cat, 2).unwrap().into_iter().chain(iota_laws(&cat, 2).unwrap()) {
            assert!(r.passes(), "{r:?}");
        }
        assert!(contractibility(&cat).unwrap().passes());
    }

    #[test]
    fn census_of_the_two_chain() {
        let cat = FinPoset::chain(2).to_category();
        assert_eq!(census(&cat, Obj(0), Obj(2), 2).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn counterexamples_are_kept() {
        let cat = FinPoset::chain(2).to_category();
        let h = homotopy_laws(&cat, 2).unwrap();
        assert!(h[0].passes());
        assert!(!h[1].passes());
        assert!(!h[1].counterexamples.is_empty());
    }
}
