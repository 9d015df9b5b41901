//! Enumeration of the hom-sets `F_nC(c, d)` and their simplicial sets.

use std::collections::HashMap;

use super::word::{Node, Word};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Obj};
use crate::simpset::{realize, Realized, SimplicialModel};

/// Cached enumeration of the resolution of a category without
/// non-identity cycles.
pub struct Resolution<'a> {
    cat: &'a FinCategory,
    cache: HashMap<(usize, Obj, Obj), Vec<Word>>,
    longest: Vec<Vec<Option<usize>>>,
}

impl<'a> Resolution<'a> {
    pub fn new(cat: &'a FinCategory) -> Result<Self> {
        cat.longest_chain()?;
        let n = cat.object_count();
        let mut longest = vec![vec![None; n]; n];
        // longest factorisation length, by memoised search
        fn go(cat: &FinCategory, c: Obj, d: Obj, memo: &mut Vec<Vec<Option<usize>>>) -> Option<usize> {
            if let Some(v) = memo[c.0][d.0] {
                return Some(v);
            }
            let mut best = if c == d { Some(0) } else { None };
            for m in cat.non_identity_out_of(c).collect::<Vec<_>>() {
                if let Some(l) = go(cat, cat.target(m), d, memo) {
                    best = Some(best.map_or(l + 1, |b: usize| b.max(l + 1)));
                }
            }
            memo[c.0][d.0] = best;
            best
        }
        let mut memo = vec![vec![None; n]; n];
        for c in cat.objects() {
            for d in cat.objects() {
                longest[c.0][d.0] = go(cat, c, d, &mut memo);
            }
        }
        Ok(Resolution { cat, cache: HashMap::new(), longest })
    }

    pub fn category(&self) -> &'a FinCategory {
        self.cat
    }

    /// Length of the longest chain of non-identities from `c` to `d`.
    pub fn longest_factorization(&self, c: Obj, d: Obj) -> Option<usize> {
        self.longest[c.0][d.0]
    }

    /// `F_nC(c, d)`, sorted.
    pub fn words(&mut self, n: usize, c: Obj, d: Obj) -> Vec<Word> {
        if let Some(v) = self.cache.get(&(n, c, d)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if c == d {
            out.push(Word::empty(n, c));
        }
        if self.longest[c.0][d.0].is_some() && c != d {
            for e in self.cat.objects() {
                if e == c || self.longest[e.0][d.0].is_none() || self.longest[c.0][e.0].is_none() {
                    continue;
                }
                let letters: Vec<Node> = if n == 0 {
                    self.cat.hom(c, e).iter().filter(|m| !self.cat.is_identity(**m)).map(|m| Node::Leaf(*m)).collect()
                } else {
                    self.words(n - 1, c, e).into_iter().filter(|w| !w.is_empty()).map(|w| Node::Branch(w.root)).collect()
                };
                if letters.is_empty() {
                    continue;
                }
                for rest in self.words(n, e, d) {
                    for l in &letters {
                        let mut root = rest.root.clone();
                        root.push(l.clone());
                        out.push(Word { level: n, source: c, root });
                    }
                }
            }
        }
        out.sort();
        self.cache.insert((n, c, d), out.clone());
        out
    }

    pub fn nondegenerate(&mut self, n: usize, c: Obj, d: Obj) -> Vec<Word> {
        self.words(n, c, d).into_iter().filter(|w| !w.is_degenerate()).collect()
    }

    /// Top dimension of nondegenerate simplices of `F_•C(c, d)`: one less
    /// than the longest factorisation. The next degree is checked to be
    /// empty.
    pub fn top_dimension(&mut self, c: Obj, d: Obj) -> Result<usize> {
        let l = self.longest[c.0][d.0].unwrap_or(0);
        let top = l.saturating_sub(1);
        if !self.nondegenerate(top + 1, c, d).is_empty() {
            return Err(Error::Validation(format!(
                "nondegenerate words above the expected top dimension {top} from {} to {}",
                self.cat.object_name(c),
                self.cat.object_name(d)
            )));
        }
        Ok(top)
    }

    /// The simplicial set `F_•C(c, d)` up to `maxdim` (default: its top
    /// dimension).
    pub fn hom_sset(&mut self, c: Obj, d: Obj, maxdim: Option<usize>) -> Result<Realized<Word>> {
        let top = match maxdim {
            Some(m) => m,
            None => self.top_dimension(c, d)?,
        };
        let mut cands = Vec::new();
        for n in 0..=top {
            cands.extend(self.nondegenerate(n, c, d));
        }
        realize(&WordModel { cat: self.cat }, cands)
    }
}

/// Words of a category as a simplicial model.
pub struct WordModel<'a> {
    pub cat: &'a FinCategory,
}

impl SimplicialModel for WordModel<'_> {
    type Simplex = Word;

    fn degree(&self, s: &Word) -> usize {
        s.level
    }

    fn face(&self, s: &Word, i: usize) -> Result<Word> {
        s.face(self.cat, i)
    }

    fn degeneracy(&self, s: &Word, j: usize) -> Result<Word> {
        s.degeneracy(j)
    }

    fn label(&self, s: &Word) -> String {
        s.show(self.cat)
    }

    fn is_degenerate(&self, s: &Word) -> Result<bool> {
        Ok(s.is_degenerate())
    }
}

/// `F_•C(c, d)` as a simplicial set.
pub fn hom_sset(cat: &FinCategory, c: Obj, d: Obj, maxdim: Option<usize>) -> Result<Realized<Word>> {
    Resolution::new(cat)?.hom_sset(c, d, maxdim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinPoset;
    use crate::homalg::homology;

    #[test]
    fn two_chain_words() {
        let cat = FinPoset::chain(2).to_category();
        let mut r = Resolution::new(&cat).unwrap();
        let w0: Vec<String> = r.words(0, Obj(0), Obj(2)).iter().map(|w| w.show(&cat)).collect();
        assert_eq!(w0.len(), 2);
        assert!(w0.contains(&"(0<2)".to_string()) && w0.contains(&"(1<2,0<1)".to_string()));
        assert_eq!(r.words(1, Obj(0), Obj(2)).len(), 3);
        let nd = r.nondegenerate(1, Obj(0), Obj(2));
        assert_eq!(nd.len(), 1);
        assert_eq!(nd[0].show(&cat), "((1<2,0<1))");
    }

    #[test]
    fn hom_sset_is_an_interval() {
        let cat = FinPoset::chain(2).to_category();
        let h = hom_sset(&cat, Obj(0), Obj(2), None).unwrap();
        assert_eq!(h.set.counts(), vec![2, 1]);
        let p = hom_sset(&cat, Obj(1), Obj(1), None).unwrap();
        assert_eq!(p.set.counts(), vec![1]);
    }

    #[test]
    fn three_chain_is_contractible() {
        let cat = FinPoset::chain(3).to_category();
        let h = hom_sset(&cat, Obj(0), Obj(3), None).unwrap();
        assert_eq!(h.set.count(0), 4);
        assert!(homology(&h.set).is_acyclic());
    }

    #[test]
    fn cycles_are_rejected() {
        let cat = FinCategory::new(vec!["a".into()], vec![("e".into(), 0, 0)], &[("e".into(), "e".into(), "e".into())])
            .unwrap();
        assert!(matches!(Resolution::new(&cat), Err(Error::UnsupportedCategory(_))));
    }
}
