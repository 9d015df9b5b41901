use super::category::{FinCategory, Functor, Mor, Obj};
use crate::error::Result;
use crate::simpset::build::{realize, realize_map, Realized, SimplicialModel};

/// The nerve: an `n`-simplex is a start object and `n` composable
/// morphisms `c_0 → c_1 → ... → c_n`, listed in order of application.
pub struct NerveModel<'a> {
    pub cat: &'a FinCategory,
}

pub type Chain = (Obj, Vec<Mor>);

impl NerveModel<'_> {
    fn object_at(&self, s: &Chain, j: usize) -> Obj {
        if j == 0 {
            s.0
        } else {
            self.cat.target(s.1[j - 1])
        }
    }
}

impl SimplicialModel for NerveModel<'_> {
    type Simplex = Chain;

    fn degree(&self, s: &Chain) -> usize {
        s.1.len()
    }

    fn face(&self, s: &Chain, i: usize) -> Result<Chain> {
        let n = s.1.len();
        let mut ms = s.1.clone();
        if i == 0 {
            let start = self.object_at(s, 1);
            ms.remove(0);
            return Ok((start, ms));
        }
        if i == n {
            ms.pop();
            return Ok((s.0, ms));
        }
        let g = ms.remove(i);
        ms[i - 1] = self.cat.compose(g, ms[i - 1])?;
        Ok((s.0, ms))
    }

    fn degeneracy(&self, s: &Chain, j: usize) -> Result<Chain> {
        let mut ms = s.1.clone();
        ms.insert(j, self.cat.identity(self.object_at(s, j)));
        Ok((s.0, ms))
    }

    fn label(&self, s: &Chain) -> String {
        if s.1.is_empty() {
            self.cat.object_name(s.0).to_string()
        } else {
            s.1.iter().map(|m| self.cat.name(*m)).collect::<Vec<_>>().join("|")
        }
    }

    fn is_degenerate(&self, s: &Chain) -> Result<bool> {
        Ok(s.1.iter().any(|m| self.cat.is_identity(*m)))
    }
}

/// Chains of non-identity morphisms of length at most `maxdim`.
pub fn nondegenerate_chains(cat: &FinCategory, maxdim: usize) -> Vec<Chain> {
    let mut out = Vec::new();
    let mut stack: Vec<Chain> = cat.objects().map(|o| (o, Vec::new())).collect();
    while let Some(s) = stack.pop() {
        if s.1.len() < maxdim {
            let end = s.1.last().map_or(s.0, |m| cat.target(*m));
            for m in cat.non_identity_out_of(end) {
                let mut t = s.clone();
                t.1.push(m);
                stack.push(t);
            }
        }
        out.push(s);
    }
    out
}

/// The nerve truncated at `maxdim`, or the full nerve when `maxdim` is
/// `None` (which needs the category to have no non-identity cycles).
pub fn nerve(cat: &FinCategory, maxdim: Option<usize>) -> Result<Realized<Chain>> {
    let d = match maxdim {
        Some(d) => d,
        None => cat.longest_chain()?,
    };
    realize(&NerveModel { cat }, nondegenerate_chains(cat, d))
}

/// `N(f): N(C) → N(D)`.
pub fn nerve_map(
    src: &Realized<Chain>,
    tgt_cat: &FinCategory,
    tgt: &Realized<Chain>,
    f: &Functor,
) -> Result<crate::simpset::sset::SimplicialMap> {
    let tm = NerveModel { cat: tgt_cat };
    realize_map::<NerveModel, NerveModel, _>(src, &tm, tgt, |s| Ok((f.obj(s.0), s.1.iter().map(|m| f.mor(*m)).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::poset::FinPoset;

    #[test]
    fn nerve_of_chain_is_simplex() {
        let cat = FinPoset::chain(3).to_category();
        let n = nerve(&cat, None).unwrap();
        assert_eq!(n.set.counts(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn truncation() {
        let cat = FinPoset::chain(3).to_category();
        assert_eq!(nerve(&cat, Some(1)).unwrap().set.counts(), vec![4, 6]);
    }
}
