//! Isomorphism testing for finite simplicial sets by colour refinement and
//! backtracking.

use std::collections::{BTreeMap, HashMap};

use super::ez::{Ez, SimplexId};
use super::sset::{SimplicialMap, SimplicialSet};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum IsoResult {
    /// An explicit isomorphism from the first set to the second.
    Certificate(SimplicialMap),
    /// An invariant that differs.
    Refutation(String),
    /// The search budget ran out.
    Inconclusive { nodes: u64 },
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Certificate(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            IsoResult::Certificate(_) => "isomorphic",
            IsoResult::Refutation(_) => "not isomorphic",
            IsoResult::Inconclusive { .. } => "inconclusive",
        }
    }
}

fn colours(s: &SimplicialSet) -> HashMap<SimplexId, u64> {
    let mut cofaces: HashMap<SimplexId, Vec<(SimplexId, usize, Vec<u32>)>> = HashMap::new();
    for id in s.all_ids() {
        for (i, f) in s.faces(id).iter().enumerate() {
            cofaces.entry(f.base).or_default().push((id, i, f.surj.clone()));
        }
    }
    let mut col: HashMap<SimplexId, u64> = s.all_ids().map(|id| (id, id.dim as u64)).collect();
    let mut classes = 0usize;
    loop {
        let mut sig: BTreeMap<SimplexId, (u64, Vec<(Vec<u32>, u64)>, Vec<(usize, Vec<u32>, u64)>)> = BTreeMap::new();
        for id in s.all_ids() {
            let faces = s.faces(id).iter().map(|f| (f.surj.clone(), col[&f.base])).collect();
            let mut cos: Vec<(usize, Vec<u32>, u64)> = cofaces
                .get(&id)
                .map(|v| v.iter().map(|(c, i, surj)| (*i, surj.clone(), col[c])).collect())
                .unwrap_or_default();
            cos.sort();
            sig.insert(id, (col[&id], faces, cos));
        }
        let mut dict: BTreeMap<_, u64> = BTreeMap::new();
        for v in sig.values() {
            let n = dict.len() as u64;
            dict.entry(v.clone()).or_insert(n);
        }
        // canonical numbering independent of simplex order
        let mut keys: Vec<_> = dict.keys().cloned().collect();
        keys.sort();
        let canon: HashMap<_, u64> = keys.into_iter().enumerate().map(|(i, k)| (k, i as u64)).collect();
        col = sig.iter().map(|(id, v)| (*id, canon[v])).collect();
        if dict.len() == classes {
            return col;
        }
        classes = dict.len();
    }
}

struct Search<'a> {
    a: &'a SimplicialSet,
    b: &'a SimplicialSet,
    ca: HashMap<SimplexId, u64>,
    cb: HashMap<SimplexId, u64>,
    fwd: HashMap<SimplexId, SimplexId>,
    bwd: HashMap<SimplexId, SimplexId>,
    trail: Vec<SimplexId>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, x: SimplexId, y: SimplexId) -> bool {
        match (self.fwd.get(&x), self.bwd.get(&y)) {
            (Some(&t), _) if t == y => return true,
            (Some(_), _) | (_, Some(_)) => return false,
            _ => {}
        }
        if self.ca[&x] != self.cb[&y] {
            return false;
        }
        self.fwd.insert(x, y);
        self.bwd.insert(y, x);
        self.trail.push(x);
        let (fa, fb) = (self.a.faces(x).to_vec(), self.b.faces(y).to_vec());
        for (p, q) in fa.iter().zip(&fb) {
            if p.surj != q.surj || !self.assign(p.base, q.base) {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.fwd.remove(&x).unwrap();
            self.bwd.remove(&y);
        }
    }

    fn run(&mut self, order: &[SimplexId], pos: usize) -> Option<bool> {
        let mut pos = pos;
        while pos < order.len() && self.fwd.contains_key(&order[pos]) {
            pos += 1;
        }
        if pos == order.len() {
            return Some(true);
        }
        let x = order[pos];
        let cands: Vec<SimplexId> = self.b.ids(x.dim).filter(|y| !self.bwd.contains_key(y) && self.cb[y] == self.ca[&x]).collect();
        for y in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                match self.run(order, pos + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.undo(mark);
        }
        Some(false)
    }
}

pub fn is_isomorphic(a: &SimplicialSet, b: &SimplicialSet, budget: u64) -> IsoResult {
    if a.counts() != b.counts() {
        return IsoResult::Refutation(format!("simplex counts differ: {:?} vs {:?}", a.counts(), b.counts()));
    }
    let ca = colours(a);
    let cb = colours(b);
    let mut ha: Vec<u64> = ca.values().copied().collect();
    let mut hb: Vec<u64> = cb.values().copied().collect();
    ha.sort();
    hb.sort();
    if ha != hb {
        return IsoResult::Refutation("colour refinement separates the two sets".into());
    }
    let mut order: Vec<SimplexId> = a.all_ids().collect();
    order.sort_by_key(|id| (std::cmp::Reverse(id.dim), id.index));
    let mut s = Search {
        a,
        b,
        ca,
        cb,
        fwd: HashMap::new(),
        bwd: HashMap::new(),
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    match s.run(&order, 0) {
        None => IsoResult::Inconclusive { nodes: s.nodes },
        Some(false) => IsoResult::Refutation("exhaustive search found no isomorphism".into()),
        Some(true) => {
            let images =
                (0..a.levels()).map(|n| a.ids(n).map(|id| Ez::nondeg(s.fwd[&id])).collect()).collect();
            match SimplicialMap::checked(a, b, images) {
                Ok(m) if m.is_isomorphism(a, b) => IsoResult::Certificate(m),
                _ => IsoResult::Refutation("search produced an invalid map".into()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{boundary, delta, minimal_circle};

    #[test]
    fn simplex_is_self_isomorphic() {
        assert!(is_isomorphic(&delta(3), &delta(3), DEFAULT_BUDGET).is_iso());
    }

    #[test]
    fn circles_differ() {
        let r = is_isomorphic(&boundary(2), &minimal_circle(), DEFAULT_BUDGET);
        assert!(matches!(r, IsoResult::Refutation(_)));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let r = is_isomorphic(&delta(2), &delta(2), 0);
        assert!(matches!(r, IsoResult::Inconclusive { .. }));
    }
}
