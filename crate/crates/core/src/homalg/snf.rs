//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl Snf {
    /// Nonzero diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal(&self.d)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn diagonal(d: &Matrix) -> Vec<BigInt> {
    let n = d.len().min(d.first().map_or(0, Vec::len));
    (0..n).map(|i| d[i][i].clone()).filter(|x| !x.is_zero()).collect()
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

struct Work {
    a: Matrix,
    u: Option<Matrix>,
    v: Option<Matrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    /// row `i` += q · row `j`
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        fn op(m: &mut Matrix, i: usize, j: usize, q: &BigInt) {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                *x += q * s;
            }
        }
        op(&mut self.a, i, j, q);
        if let Some(u) = &mut self.u {
            op(u, i, j, q);
        }
    }

    /// column `i` += q · column `j`
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        fn op(m: &mut Matrix, i: usize, j: usize, q: &BigInt) {
            for r in m.iter_mut() {
                let s = r[j].clone();
                r[i] += q * s;
            }
        }
        op(&mut self.a, i, j, q);
        if let Some(v) = &mut self.v {
            op(v, i, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }

    fn run(&mut self) {
        let rows = self.a.len();
        let cols = self.a.first().map_or(0, Vec::len);
        for t in 0..rows.min(cols) {
            // smallest nonzero entry of the remaining block, units first
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &self.a[i][j];
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
                if best.is_some_and(|(bi, bj)| self.a[bi][bj].abs().is_one()) {
                    break;
                }
            }
            let Some((bi, bj)) = best else { return };
            self.swap_rows(t, bi);
            self.swap_cols(t, bj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if !self.a[i][t].is_zero() {
                        let q = -self.a[i][t].div_floor(&self.a[t][t]);
                        self.add_row(i, t, &q);
                        if !self.a[i][t].is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..cols {
                    if !self.a[t][j].is_zero() {
                        let q = -self.a[t][j].div_floor(&self.a[t][t]);
                        self.add_col(j, t, &q);
                        if !self.a[t][j].is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    self.move_min_to_pivot(t, rows, cols);
                    continue;
                }
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !self.a[i][j].is_multiple_of(&self.a[t][t]));
                match bad {
                    Some((i, _)) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }

    fn move_min_to_pivot(&mut self, t: usize, rows: usize, cols: usize) {
        let mut best = (t, t);
        for i in t..rows {
            let x = &self.a[i][t];
            if !x.is_zero() && (self.a[best.0][best.1].is_zero() || x.abs() < self.a[best.0][best.1].abs()) {
                best = (i, t);
            }
        }
        for j in t..cols {
            let x = &self.a[t][j];
            if !x.is_zero() && (self.a[best.0][best.1].is_zero() || x.abs() < self.a[best.0][best.1].abs()) {
                best = (t, j);
            }
        }
        self.swap_rows(t, best.0);
        self.swap_cols(t, best.1);
    }
}

pub fn smith_normal_form(m: &Matrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut w = Work { a: m.clone(), u: Some(identity(rows)), v: Some(identity(cols)) };
    w.run();
    Snf { u: w.u.unwrap(), d: w.a, v: w.v.unwrap() }
}

/// Invariant factors only, without the transformation matrices.
pub fn invariant_factors(m: &Matrix) -> Vec<BigInt> {
    let mut w = Work { a: m.clone(), u: None, v: None };
    w.run();
    diagonal(&w.a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three() {
        let s = smith_normal_form(&from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.d, from_i64(&[vec![1, 0], vec![0, 6]]));
        assert_eq!(mul(&mul(&s.u, &from_i64(&[vec![2, 0], vec![0, 3]])), &s.v), s.d);
    }

    #[test]
    fn zero_and_identity() {
        let z = from_i64(&[vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(smith_normal_form(&z).d, z);
        let i = identity(3);
        assert_eq!(smith_normal_form(&i).d, i);
    }

    #[test]
    fn determinant_of_unimodular() {
        let s = smith_normal_form(&from_i64(&[vec![4, 6, 2], vec![1, 3, 5], vec![7, 0, 1]]));
        assert!(determinant(&s.u).abs().is_one());
        assert!(determinant(&s.v).abs().is_one());
    }
}
