use super::build::{realize, Realized, SimplicialModel};
use super::ez::monotone_maps;
use super::sset::SimplicialSet;
use crate::error::Result;

/// The standard simplex `Δ^k`: an `m`-simplex is a monotone map `[m] → [k]`,
/// written as its vertex sequence.
#[derive(Clone, Copy, Debug)]
pub struct StandardSimplex {
    pub k: usize,
}

impl SimplicialModel for StandardSimplex {
    type Simplex = Vec<u32>;

    fn degree(&self, s: &Vec<u32>) -> usize {
        s.len() - 1
    }

    fn face(&self, s: &Vec<u32>, i: usize) -> Result<Vec<u32>> {
        let mut f = s.clone();
        f.remove(i);
        Ok(f)
    }

    fn degeneracy(&self, s: &Vec<u32>, j: usize) -> Result<Vec<u32>> {
        Ok(super::ez::duplicate(s, j))
    }

    fn label(&self, s: &Vec<u32>) -> String {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("")
    }
}

impl StandardSimplex {
    /// Faces of the standard simplex, optionally leaving out the top cell.
    pub fn realize(&self, boundary_only: bool) -> Result<Realized<Vec<u32>>> {
        let k = self.k;
        let mut cands = Vec::new();
        for mask in 1u64..(1u64 << (k + 1)) {
            if boundary_only && mask == (1u64 << (k + 1)) - 1 {
                continue;
            }
            cands.push((0..=k as u32).filter(|v| mask >> v & 1 == 1).collect::<Vec<u32>>());
        }
        realize(self, cands)
    }

    /// All `m`-simplices, degenerate ones included.
    pub fn simplices(&self, m: usize) -> Vec<Vec<u32>> {
        monotone_maps(m, self.k)
    }
}

pub fn delta(k: usize) -> SimplicialSet {
    StandardSimplex { k }.realize(false).expect("standard simplex").set
}

pub fn boundary(k: usize) -> SimplicialSet {
    StandardSimplex { k }.realize(true).expect("boundary of a simplex").set
}

pub fn point() -> SimplicialSet {
    delta(0)
}

/// `n` disjoint points labelled `p0, p1, ...`.
pub fn points(n: usize) -> SimplicialSet {
    SimplicialSet::from_parts(vec![(0..n).map(|i| format!("p{i}")).collect()], vec![vec![Vec::new(); n]])
        .expect("discrete set")
}

/// The 0-sphere.
pub fn s0() -> SimplicialSet {
    points(2)
}

/// The minimal circle: one vertex and one edge with both faces on it.
pub fn minimal_circle() -> SimplicialSet {
    use super::ez::{Ez, SimplexId};
    let v = Ez::nondeg(SimplexId::new(0, 0));
    SimplicialSet::from_parts(vec![vec!["v".into()], vec!["e".into()]], vec![vec![Vec::new()], vec![vec![v.clone(), v]]])
        .expect("minimal circle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_counts() {
        assert_eq!(delta(2).counts(), vec![3, 3, 1]);
        assert_eq!(boundary(2).counts(), vec![3, 3]);
        assert_eq!(point().counts(), vec![1]);
        assert_eq!(delta(3).euler_characteristic(), 1);
    }

    #[test]
    fn circle_faces() {
        let c = minimal_circle();
        assert_eq!(c.counts(), vec![1, 1]);
        c.audit().unwrap();
    }
}
