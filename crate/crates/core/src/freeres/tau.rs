//! The map `τ: φ → N(c\C)` and the cone isomorphism `ι`.

use super::psi::Coned;
use super::word::{Node, Word};
use crate::error::{Error, Result};
use crate::fincat::{Comma, FinCategory, Mor, Obj};

/// A string `c → c_0 → c_1 → … → c_n` of morphisms of the base category:
/// `[α_0, g_1, …, g_n]`.
pub type UnderString = Vec<Mor>;

/// `τ(f_k, …, f_1) = (ε(f_{k−1}, …, f_1), τ(f_k))`, recursing into the last
/// letter.
pub fn tau(cone: &Coned, w: &Word) -> Result<UnderString> {
    let hat = &cone.hat;
    if w.source == cone.apex || w.target(hat) != cone.apex {
        return Err(Error::Operator(format!("{} is not a word into the apex", w.show(hat))));
    }
    let rest = Word { level: w.level, source: w.source, root: w.root[1..].to_vec() };
    let v = cone.lower(&rest)?;
    let mut out = vec![v.augment(&cone.base)];
    if w.level > 0 {
        let l = w.letters(hat)[0].clone();
        out.extend(tau(cone, &l)?);
    }
    Ok(out)
}

/// The simplex of the nerve of `c\C` named by a string under `c`, as a
/// start object and morphisms of the comma category.
pub fn under_simplex(base: &FinCategory, under: &Comma, s: &UnderString) -> Result<(Obj, Vec<Mor>)> {
    let find_obj = |m: Mor| {
        under
            .structure
            .iter()
            .position(|x| *x == m)
            .map(Obj)
            .ok_or_else(|| Error::Lookup(format!("{} is not an object of the comma category", base.name(m))))
    };
    let mut cur = s[0];
    let start = find_obj(cur)?;
    let mut obj = start;
    let mut steps = Vec::with_capacity(s.len() - 1);
    for &g in &s[1..] {
        let next_m = base.compose(g, cur)?;
        let next = find_obj(next_m)?;
        let m = under
            .category
            .hom(obj, next)
            .iter()
            .copied()
            .find(|h| under.forget.mor(*h) == g)
            .ok_or_else(|| Error::Lookup("missing morphism of the comma category".into()))?;
        steps.push(m);
        obj = next;
        cur = next_m;
    }
    Ok((start, steps))
}

/// The category `Č`: the cone `Ĉ` with a further apex `m` and the
/// morphism `t: * → m`.
#[derive(Clone, Debug)]
pub struct DoubleCone {
    pub inner: Coned,
    pub outer: Coned,
}

impl DoubleCone {
    pub fn new(base: &FinCategory, apex: &str, top: &str) -> Result<Self> {
        let inner = Coned::new(base, apex)?;
        let outer = Coned::new(&inner.hat, top)?;
        Ok(DoubleCone { inner, outer })
    }

    /// `t: * → m`.
    pub fn t(&self) -> Mor {
        self.outer.t(self.inner.apex)
    }
}

/// `ι_n: φ_n(c) × Δ¹_n → F_nČ(c, m)`, with `α` given by `k(α)`.
pub fn iota(dc: &DoubleCone, w: &Word, k: usize) -> Result<Word> {
    let inner = &dc.inner;
    let check = &dc.outer.hat;
    if w.source == inner.apex {
        return Err(Error::Precondition("ι is not defined at the apex".into()));
    }
    if w.target(&inner.hat) != inner.apex {
        return Err(Error::Operator(format!("{} is not a word into the apex", w.show(&inner.hat))));
    }
    let n = w.level;
    if k > n + 1 {
        return Err(Error::Operator(format!("k = {k} out of range in degree {n}")));
    }
    let lifted = dc.outer.lift(w);
    if k == 0 {
        return Word::atom(check, dc.t(), n).compose(check, &lifted);
    }
    let mut root = lifted.root.clone();
    if n == 0 {
        let Node::Leaf(last) = root[0] else { unreachable!("level-0 letters are leaves") };
        root[0] = Node::Leaf(check.compose(dc.t(), last)?);
    } else {
        let l = w.letters(&inner.hat)[0].clone();
        root[0] = Node::Branch(iota(dc, &l, k - 1)?.root);
    }
    Ok(Word { level: n, source: w.source, root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinPoset;

    #[test]
    fn iota_in_degree_zero() {
        let cat = FinPoset::chain(1).to_category();
        let dc = DoubleCone::new(&cat, "*", "m").unwrap();
        let w = Word::parse(&dc.inner.hat, "(1<*,0<1)", None).unwrap();
        assert_eq!(iota(&dc, &w, 0).unwrap().show(&dc.outer.hat), "(*<m,1<*,0<1)");
        assert_eq!(iota(&dc, &w, 1).unwrap().show(&dc.outer.hat), "(1<m,0<1)");
    }

    #[test]
    fn tau_in_degree_zero() {
        let cat = FinPoset::chain(1).to_category();
        let cone = Coned::new(&cat, "*").unwrap();
        let w = Word::parse(&cone.hat, "(1<*,0<1)", None).unwrap();
        let s = tau(&cone, &w).unwrap();
        assert_eq!(s.iter().map(|m| cat.name(*m)).collect::<Vec<_>>(), vec!["0<1"]);
    }
}
