//! Dense exact linear algebra over a number field.

use std::sync::Arc;

use crate::arith::{NFElem, NumberField};

pub type Matrix = Vec<Vec<NFElem>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for k in c..cols {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let v = &f * &m[r][k];
                    m[i][k] = &m[i][k] - &v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    rref(&mut m.clone()).len()
}

/// Basis of `{v : m v = 0}`, itself brought to reduced row echelon form.
pub fn kernel(m: &Matrix, cols: usize, field: &Arc<NumberField>) -> Vec<Vec<NFElem>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Matrix = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&a[row][f];
            }
            v
        })
        .collect();
    rref(&mut basis);
    basis
}

/// Solves `m x = b` for one solution, if any.
pub fn solve(m: &Matrix, b: &[NFElem], field: &Arc<NumberField>) -> Option<Vec<NFElem>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = a[row][cols].clone();
    }
    Some(x)
}

pub fn det(m: &Matrix, field: &Arc<NumberField>) -> NFElem {
    let n = m.len();
    let mut a = m.clone();
    let mut d = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for k in c..n {
                let v = &f * &a[c][k];
                a[i][k] = &a[i][k] - &v;
            }
        }
    }
    d
}

pub fn mat_mul(a: &Matrix, b: &Matrix, field: &Arc<NumberField>) -> Matrix {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).fold(field.zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize, field: &Arc<NumberField>) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

/// Inverse by Gauss-Jordan, `None` if singular.
pub fn inverse(m: &Matrix, field: &Arc<NumberField>) -> Option<Matrix> {
    let n = m.len();
    let id = identity(n, field);
    let mut a: Matrix = m.iter().zip(&id).map(|(r, e)| r.iter().chain(e).cloned().collect()).collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
