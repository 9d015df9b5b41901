use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::snf::{invariant_factors, Matrix};
use crate::simpset::{SimplicialMap, SimplicialSet};

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![BTreeMap::new(); cols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn add(&mut self, r: usize, c: usize, x: i64) {
        let e = self.cols[c].entry(r).or_insert(0);
        *e += x;
        if *e == 0 {
            self.cols[c].remove(&r);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c].get(&r).copied().unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| (0..self.ncols()).map(|c| self.get(r, c)).collect()).collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.rows, other.ncols());
        for (c, col) in other.cols.iter().enumerate() {
            for (&k, &y) in col {
                for (&r, &x) in &self.cols[k] {
                    out.add(r, c, x * y);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// Nonzero invariant factors. Unit pivots are eliminated sparsely first;
    /// the rest goes through the dense Smith form.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); self.rows];
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.ncols()];
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, &x) in col {
                rows[r].insert(c, BigInt::from(x));
                col_rows[c].insert(r);
            }
        }
        let mut units = 0usize;
        loop {
            // unit entry with the sparsest column
            let mut pick: Option<(usize, usize, usize)> = None;
            for (r, row) in rows.iter().enumerate() {
                for (&c, x) in row {
                    if x.abs().is_one() {
                        let cost = col_rows[c].len() * row.len();
                        if pick.map_or(true, |(_, _, best)| cost < best) {
                            pick = Some((r, c, cost));
                        }
                    }
                }
                if pick.is_some_and(|(_, _, cost)| cost <= 1) {
                    break;
                }
            }
            let Some((r, c, _)) = pick else { break };
            let pivot = rows[r][&c].clone();
            let pivot_row = std::mem::take(&mut rows[r]);
            for &k in pivot_row.keys() {
                col_rows[k].remove(&r);
            }
            let others: Vec<usize> = col_rows[c].iter().copied().collect();
            for o in others {
                let factor = &rows[o][&c] * &pivot;
                for (&k, x) in &pivot_row {
                    let e = rows[o].entry(k).or_insert_with(BigInt::zero);
                    *e -= &factor * x;
                    if e.is_zero() {
                        rows[o].remove(&k);
                        col_rows[k].remove(&o);
                    } else {
                        col_rows[k].insert(o);
                    }
                }
            }
            units += 1;
        }
        let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
        let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&c| !col_rows[c].is_empty()).collect();
        let dense: Matrix = live_rows
            .iter()
            .map(|&r| live_cols.iter().map(|c| rows[r].get(c).cloned().unwrap_or_else(BigInt::zero)).collect())
            .collect();
        let mut out = vec![BigInt::one(); units];
        out.extend(invariant_factors(&dense));
        out
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Normalized chain complex: `C_n` is free on the nondegenerate
/// `n`-simplices and `boundaries[n]: C_n → C_{n-1}` (`boundaries[0]` is the
/// zero map to 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn boundary(&self, n: usize) -> SparseMatrix {
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => SparseMatrix::zero(if n == 0 { 0 } else { self.rank(n - 1) }, self.rank(n)),
        }
    }

    pub fn is_complex(&self) -> bool {
        (2..self.ranks.len()).all(|n| self.boundary(n - 1).mul(&self.boundary(n)).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

pub fn normalized_chains(x: &SimplicialSet) -> ChainComplex {
    let ranks = x.counts();
    let mut boundaries = Vec::with_capacity(ranks.len());
    for n in 0..ranks.len() {
        if n == 0 {
            boundaries.push(SparseMatrix::zero(0, ranks[0]));
            continue;
        }
        let mut m = SparseMatrix::zero(ranks[n - 1], ranks[n]);
        for id in x.ids(n) {
            for (i, f) in x.faces(id).iter().enumerate() {
                if f.is_nondegenerate() {
                    m.add(f.base.index, id.index, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { ranks, boundaries }
}

/// Induced chain map: nondegenerate images kept, degenerate ones sent to 0.
pub fn chain_map(x: &SimplicialSet, y: &SimplicialSet, f: &SimplicialMap) -> Vec<SparseMatrix> {
    (0..x.levels())
        .map(|n| {
            let mut m = SparseMatrix::zero(y.count(n), x.count(n));
            for id in x.ids(n) {
                let img = f.image(id);
                if img.is_nondegenerate() {
                    m.add(img.base.index, id.index, 1);
                }
            }
            m
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub betti: Vec<usize>,
    /// Torsion coefficients per dimension, in divisibility order.
    #[serde(serialize_with = "ser_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
}

fn ser_torsion<S: serde::Serializer>(t: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = t.iter().map(|v| v.iter().map(BigInt::to_string).collect()).collect();
    serde::Serialize::serialize(&strings, s)
}

impl HomologyResult {
    pub fn betti(&self, n: usize) -> usize {
        self.betti.get(n).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// `H_*` of a point.
    pub fn is_acyclic(&self) -> bool {
        self.betti(0) == 1 && self.betti.iter().skip(1).all(|&b| b == 0) && self.is_torsion_free()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        for (n, b) in self.betti.iter().enumerate() {
            let t = &self.torsion[n];
            if t.is_empty() {
                parts.push(format!("H{n}=Z^{b}"));
            } else {
                let ts: Vec<String> = t.iter().map(|x| format!("Z/{x}")).collect();
                parts.push(format!("H{n}=Z^{b}+{}", ts.join("+")));
            }
        }
        parts.join(" ")
    }
}

pub fn complex_homology(c: &ChainComplex) -> HomologyResult {
    let top = c.ranks.len();
    let factors: Vec<Vec<BigInt>> = (0..=top).map(|n| c.boundary(n).invariant_factors()).collect();
    let mut betti = Vec::with_capacity(top);
    let mut torsion = Vec::with_capacity(top);
    for n in 0..top {
        betti.push(c.rank(n) - factors[n].len() - factors[n + 1].len());
        torsion.push(factors[n + 1].iter().filter(|x| !x.is_one()).cloned().collect());
    }
    HomologyResult { betti, torsion }
}

pub fn homology(x: &SimplicialSet) -> HomologyResult {
    complex_homology(&normalized_chains(x))
}

/// Rational comparison of `H_*(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapComparison {
    pub source: HomologyResult,
    pub target: HomologyResult,
    /// Rank of `H_n(f; Q)`.
    pub ranks: Vec<usize>,
    pub iso: Vec<bool>,
}

impl MapComparison {
    pub fn is_iso(&self) -> bool {
        self.iso.iter().all(|&b| b)
    }
}

/// Mapping cone of a chain map `f: X → Y`: `C_n = Y_n ⊕ X_{n-1}` with
/// `∂(y, x) = (∂y + f x, −∂x)`.
pub fn mapping_cone(x: &ChainComplex, y: &ChainComplex, f: &[SparseMatrix]) -> ChainComplex {
    let top = y.ranks.len().max(x.ranks.len() + 1);
    let ranks: Vec<usize> = (0..top).map(|n| y.rank(n) + if n > 0 { x.rank(n - 1) } else { 0 }).collect();
    let mut boundaries = Vec::with_capacity(top);
    for n in 0..top {
        let rows = if n == 0 { 0 } else { ranks[n - 1] };
        let mut m = SparseMatrix::zero(rows, ranks[n]);
        if n > 0 {
            let yb = y.boundary(n);
            for (c, col) in yb.cols.iter().enumerate() {
                for (&r, &v) in col {
                    m.add(r, c, v);
                }
            }
            let off_r = y.rank(n - 1);
            let off_c = y.rank(n);
            if let Some(fm) = f.get(n - 1) {
                for (c, col) in fm.cols.iter().enumerate() {
                    for (&r, &v) in col {
                        m.add(r, off_c + c, v);
                    }
                }
            }
            if n >= 2 {
                let xb = x.boundary(n - 1);
                for (c, col) in xb.cols.iter().enumerate() {
                    for (&r, &v) in col {
                        m.add(off_r + r, off_c + c, -v);
                    }
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { ranks, boundaries }
}

/// Ranks of `H_n(f; Q)` from the long exact sequence of the mapping cone:
/// `b_n(C) = (b_n(Y) − r_n) + (b_{n-1}(X) − r_{n-1})`.
pub fn compare_map(x: &SimplicialSet, y: &SimplicialSet, f: &SimplicialMap) -> MapComparison {
    let cx = normalized_chains(x);
    let cy = normalized_chains(y);
    let fm = chain_map(x, y, f);
    let source = complex_homology(&cx);
    let target = complex_homology(&cy);
    let cone = complex_homology(&mapping_cone(&cx, &cy, &fm));
    let top = x.levels().max(y.levels());
    let mut ranks = Vec::with_capacity(top);
    let mut prev = 0usize;
    for n in 0..top {
        let bx_prev = if n > 0 { source.betti(n - 1) } else { 0 };
        let r = target.betti(n) + bx_prev - prev - cone.betti(n);
        ranks.push(r);
        prev = r;
    }
    let iso = (0..top).map(|n| ranks[n] == source.betti(n) && ranks[n] == target.betti(n)).collect();
    MapComparison { source, target, ranks, iso }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::standard::{boundary, delta, minimal_circle, point};
    use crate::simpset::SimplexId;

    #[test]
    fn interval_chains() {
        let c = normalized_chains(&delta(1));
        assert_eq!(c.ranks, vec![2, 1]);
        assert_eq!(c.boundaries[1].to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn minimal_circle_has_zero_boundary() {
        let c = normalized_chains(&minimal_circle());
        assert!(c.boundaries[1].is_zero());
        assert_eq!(homology(&minimal_circle()).betti, vec![1, 1]);
    }

    #[test]
    fn sphere_homology() {
        let h = homology(&boundary(3));
        assert_eq!(h.betti, vec![1, 0, 1]);
        assert!(h.is_torsion_free());
        assert!(homology(&delta(4)).is_acyclic());
    }

    #[test]
    fn collapse_is_a_rational_iso() {
        let d = delta(2);
        let f = SimplicialMap::constant(&d, SimplexId::new(0, 0));
        let cmp = compare_map(&d, &point(), &f);
        assert!(cmp.is_iso());
        let s = boundary(2);
        let g = SimplicialMap::constant(&s, SimplexId::new(0, 0));
        let cmp = compare_map(&s, &point(), &g);
        assert_eq!(cmp.ranks, vec![1, 0]);
        assert_eq!(cmp.iso, vec![true, false]);
    }
}
