use super::build::{realize, Realized, SimplicialModel};
use super::ez::{Ez, SimplexId};
use super::sset::{SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};

/// Model of `X × Y`: pairs of simplices of equal degree.
pub struct ProductModel<'a> {
    pub left: &'a SimplicialSet,
    pub right: &'a SimplicialSet,
}

impl SimplicialModel for ProductModel<'_> {
    type Simplex = (Ez, Ez);

    fn degree(&self, s: &(Ez, Ez)) -> usize {
        s.0.degree()
    }

    fn face(&self, s: &(Ez, Ez), i: usize) -> Result<(Ez, Ez)> {
        Ok((self.left.face(&s.0, i), self.right.face(&s.1, i)))
    }

    fn degeneracy(&self, s: &(Ez, Ez), j: usize) -> Result<(Ez, Ez)> {
        Ok((s.0.degenerate(j), s.1.degenerate(j)))
    }

    fn label(&self, s: &(Ez, Ez)) -> String {
        format!("({},{})", self.left.ez_label(&s.0), self.right.ez_label(&s.1))
    }
}

/// `X × Y` with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub realized: Realized<(Ez, Ez)>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

/// Jointly injective pairs of surjections `[n] ↠ [p]`, `[n] ↠ [q]`, i.e.
/// lattice paths from `(0,0)` to `(p,q)` with `n` steps.
pub fn shuffles(p: usize, q: usize, n: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    if n < p.max(q) || n > p + q {
        return out;
    }
    let mut a = vec![0u32];
    let mut b = vec![0u32];
    fn rec(p: u32, q: u32, n: usize, a: &mut Vec<u32>, b: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Vec<u32>)>) {
        let (x, y) = (*a.last().unwrap(), *b.last().unwrap());
        if a.len() == n + 1 {
            if x == p && y == q {
                out.push((a.clone(), b.clone()));
            }
            return;
        }
        for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
            if x + dx <= p && y + dy <= q {
                a.push(x + dx);
                b.push(y + dy);
                rec(p, q, n, a, b, out);
                a.pop();
                b.pop();
            }
        }
    }
    rec(p as u32, q as u32, n, &mut a, &mut b, &mut out);
    out
}

pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> Result<Product> {
    let model = ProductModel { left: x, right: y };
    let mut cands = Vec::new();
    for a in x.all_ids() {
        for b in y.all_ids() {
            for n in a.dim.max(b.dim)..=a.dim + b.dim {
                for (sa, sb) in shuffles(a.dim, b.dim, n) {
                    cands.push((Ez { surj: sa, base: a }, Ez { surj: sb, base: b }));
                }
            }
        }
    }
    let realized = realize(&model, cands)?;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for n in 0..realized.set.levels() {
        left.push(realized.elements(n).iter().map(|(a, _)| a.clone()).collect());
        right.push(realized.elements(n).iter().map(|(_, b)| b.clone()).collect());
    }
    let left = SimplicialMap::checked(&realized.set, x, left)?;
    let right = SimplicialMap::checked(&realized.set, y, right)?;
    Ok(Product { realized, left, right })
}

impl Product {
    pub fn set(&self) -> &SimplicialSet {
        &self.realized.set
    }

    /// Normal form of the pair `(a, b)` of equal-degree simplices.
    pub fn pair(&self, a: &Ez, b: &Ez) -> Result<Ez> {
        if a.degree() != b.degree() {
            return Err(Error::Operator("pair of simplices of different degree".into()));
        }
        let n = a.degree();
        let mut pi = vec![0u32];
        let mut ra = vec![a.surj[0]];
        let mut rb = vec![b.surj[0]];
        for j in 1..=n {
            if a.surj[j] == a.surj[j - 1] && b.surj[j] == b.surj[j - 1] {
                pi.push(*pi.last().unwrap());
            } else {
                pi.push(pi.last().unwrap() + 1);
                ra.push(a.surj[j]);
                rb.push(b.surj[j]);
            }
        }
        let key = (Ez { surj: ra, base: a.base }, Ez { surj: rb, base: b.base });
        let id = self
            .realized
            .id_of(&key)
            .ok_or_else(|| Error::Lookup("pair is not a simplex of the product".into()))?;
        Ok(Ez { surj: pi, base: id })
    }

    /// The pair of components of a nondegenerate simplex.
    pub fn components(&self, id: SimplexId) -> &(Ez, Ez) {
        self.realized.element(id)
    }

    /// Components of an arbitrary simplex.
    pub fn split(&self, x: &Ez) -> (Ez, Ez) {
        let (a, b) = self.components(x.base);
        (a.degenerate_by(&x.surj), b.degenerate_by(&x.surj))
    }

    /// `f × g`.
    pub fn map_product(&self, f: &SimplicialMap, g: &SimplicialMap, target: &Product) -> Result<SimplicialMap> {
        let mut images = Vec::new();
        for n in 0..self.set().levels() {
            let mut level = Vec::new();
            for (a, b) in self.realized.elements(n) {
                level.push(target.pair(&f.apply(a), &g.apply(b))?);
            }
            images.push(level);
        }
        SimplicialMap::checked(self.set(), target.set(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{delta, point};

    #[test]
    fn square_has_two_triangles() {
        let p = product(&delta(1), &delta(1)).unwrap();
        assert_eq!(p.set().counts(), vec![4, 5, 2]);
    }

    #[test]
    fn prism_counts() {
        let p = product(&delta(1), &delta(2)).unwrap();
        assert_eq!(p.set().count(3), 3);
        assert_eq!(p.set().euler_characteristic(), 1);
    }

    #[test]
    fn unit_factor() {
        let p = product(&delta(2), &point()).unwrap();
        assert_eq!(p.set().counts(), delta(2).counts());
        assert!(p.left.is_isomorphism(p.set(), &delta(2)));
    }
}
