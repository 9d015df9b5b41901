use std::fmt;

/// Identifier of a nondegenerate simplex: its dimension and its position
/// among the nondegenerate simplices of that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexId { dim, index }
    }
}

/// A simplex in Eilenberg–Zilber normal form: a monotone surjection
/// `[n] ↠ [k]` applied to a nondegenerate `k`-simplex.
///
/// `surj[j]` is the image of `j`; the simplex has degree `surj.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ez {
    pub surj: Vec<u32>,
    pub base: SimplexId,
}

impl Ez {
    pub fn nondeg(base: SimplexId) -> Self {
        Ez { surj: identity(base.dim), base }
    }

    pub fn degree(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.surj.len() == self.base.dim + 1
    }

    /// Indices `j` with `surj[j] == surj[j+1]`, in decreasing order. The
    /// simplex is `s_{j_1} ... s_{j_r}(base)` with `j_1 > ... > j_r`.
    pub fn degeneracy_word(&self) -> Vec<usize> {
        let mut w: Vec<usize> = (0..self.degree()).filter(|&j| self.surj[j] == self.surj[j + 1]).collect();
        w.reverse();
        w
    }

    /// Inverse of [`Ez::degeneracy_word`]. Returns `None` for an ill-formed
    /// word (not strictly decreasing).
    pub fn from_degeneracy_word(word: &[usize], base: SimplexId) -> Option<Self> {
        if word.windows(2).any(|w| w[0] <= w[1]) {
            return None;
        }
        let mut surj = identity(base.dim);
        for &j in word.iter().rev() {
            if j >= surj.len() {
                return None;
            }
            surj = duplicate(&surj, j);
        }
        Some(Ez { surj, base })
    }

    /// `s_j` of this simplex.
    pub fn degenerate(&self, j: usize) -> Ez {
        Ez { surj: duplicate(&self.surj, j), base: self.base }
    }

    /// Apply a further surjection `[m] ↠ [n]` on the right.
    pub fn degenerate_by(&self, pi: &[u32]) -> Ez {
        Ez { surj: pi.iter().map(|&p| self.surj[p as usize]).collect(), base: self.base }
    }
}

impl fmt::Display for Ez {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in self.degeneracy_word() {
            write!(f, "s{j}")?;
        }
        write!(f, "[{}:{}]", self.base.dim, self.base.index)
    }
}

pub fn identity(k: usize) -> Vec<u32> {
    (0..=k as u32).collect()
}

/// `map ∘ σ_j`: repeat entry `j`.
pub fn duplicate(map: &[u32], j: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(map.len() + 1);
    out.extend_from_slice(&map[..=j]);
    out.extend_from_slice(&map[j..]);
    out
}

/// Factor a monotone map into a surjection followed by an injection.
/// Returns `(surjection values, sorted image)`.
pub fn epi_mono(map: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut image: Vec<u32> = map.to_vec();
    image.dedup();
    let mut surj = Vec::with_capacity(map.len());
    let mut pos = 0u32;
    for (j, &v) in map.iter().enumerate() {
        if j > 0 && v != map[j - 1] {
            pos += 1;
        }
        surj.push(pos);
    }
    (surj, image)
}

/// All monotone surjections `[n] ↠ [k]`.
pub fn surjections(n: usize, k: usize) -> Vec<Vec<u32>> {
    // choose which k of the n gaps are steps
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut steps = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, steps: &mut Vec<usize>, out: &mut Vec<Vec<u32>>) {
        if steps.len() == k {
            let mut map = Vec::with_capacity(n + 1);
            let mut v = 0u32;
            map.push(0);
            for gap in 0..n {
                if steps.contains(&gap) {
                    v += 1;
                }
                map.push(v);
            }
            out.push(map);
            return;
        }
        for g in start..n {
            steps.push(g);
            rec(n, k, g + 1, steps, out);
            steps.pop();
        }
    }
    rec(n, k, 0, &mut steps, &mut out);
    out
}

/// All monotone maps `[n] → [k]` as value vectors, in lexicographic order.
pub fn monotone_maps(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn rec(n: usize, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=k {
            cur.push(v);
            rec(n, k, cur, out);
            cur.pop();
        }
    }
    rec(n, k as u32, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_word_round_trip() {
        let base = SimplexId::new(1, 0);
        for n in 1..5 {
            for s in surjections(n, 1) {
                let ez = Ez { surj: s, base };
                let w = ez.degeneracy_word();
                assert_eq!(Ez::from_degeneracy_word(&w, base), Some(ez));
            }
        }
    }

    #[test]
    fn surjection_counts_are_binomial() {
        assert_eq!(surjections(3, 1).len(), 3);
        assert_eq!(surjections(4, 2).len(), 6);
        assert_eq!(surjections(2, 2).len(), 1);
        assert_eq!(monotone_maps(1, 1).len(), 3);
    }

    #[test]
    fn epi_mono_factors() {
        let (s, i) = epi_mono(&[0, 0, 2, 3, 3]);
        assert_eq!(s, vec![0, 0, 1, 2, 2]);
        assert_eq!(i, vec![0, 2, 3]);
    }
}
