//! Cyclic quotient singularities and their Hirzebruch–Jung resolutions.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, Rat};
use crate::error::{Error, Result};

/// Singularity of type `1/n (1, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycQuotSing {
    n: u32,
    q: u32,
}

impl CycQuotSing {
    pub fn new(n: u32, q: u32) -> Result<Self> {
        if q == 0 || q >= n || n.gcd(&q) != 1 {
            return Err(Error::Degenerate(format!("1/{n}(1,{q}) needs 0 < q < n coprime")));
        }
        Ok(CycQuotSing { n, q })
    }

    /// `A_k = 1/(k+1) (1, k)`.
    pub fn a(k: u32) -> Self {
        CycQuotSing { n: k + 1, q: k }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

impl fmt::Display for CycQuotSing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.q)
    }
}

/// Chain of exceptional curves with self-intersections `-b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionChain {
    pub b: Vec<u32>,
}

/// Continued fraction `n/q = b_1 - 1/(b_2 - ...)`.
pub fn hj_resolution(s: CycQuotSing) -> ResolutionChain {
    let (mut n, mut q) = (s.n as u64, s.q as u64);
    let mut b = Vec::new();
    while q != 0 {
        let bi = n.div_ceil(q);
        b.push(bi as u32);
        (n, q) = (q, bi * q - n);
    }
    ResolutionChain { b }
}

impl ResolutionChain {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.b.iter().map(|&b| -(b as i64)).collect()
    }

    /// Re-evaluates the continued fraction.
    pub fn value(&self) -> Rat {
        let mut acc: Option<Rat> = None;
        for &bi in self.b.iter().rev() {
            acc = Some(match acc {
                None => int(bi as i64),
                Some(a) => int(bi as i64) - a.recip(),
            });
        }
        acc.unwrap_or_else(Rat::zero)
    }

    /// Intersection matrix of the chain (negative definite).
    pub fn intersection_matrix(&self) -> Vec<Vec<Rat>> {
        let l = self.len();
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| match i.abs_diff(j) {
                        0 => -int(self.b[i] as i64),
                        1 => Rat::one(),
                        _ => Rat::zero(),
                    })
                    .collect()
            })
            .collect()
    }

    /// Coefficients `d_i` with `K_Z = p^*K + sum d_i C_i`, from `K_Z . C_i = -2 - C_i^2`.
    pub fn discrepancies(&self) -> Vec<Rat> {
        // sum_j d_j C_j . C_i = b_i - 2
        let rhs: Vec<Rat> = self.b.iter().map(|&b| int(b as i64 - 2)).collect();
        solve(&self.intersection_matrix(), &rhs).expect("chain matrix is nonsingular")
    }
}

/// Leading principal minors alternate in sign, starting negative.
pub fn is_negative_definite(m: &[Vec<Rat>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<Rat>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = det(&sub);
        if k % 2 == 1 {
            d < Rat::zero()
        } else {
            d > Rat::zero()
        }
    })
}

pub(crate) fn det(m: &[Vec<Rat>]) -> Rat {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[i][k] -= v;
            }
        }
    }
    d
}

/// Solves a square system; `None` if singular.
pub(crate) fn solve(m: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.iter().zip(rhs).map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for k in c..=n {
            a[c][k] *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..=n {
                    let v = &f * &a[c][k];
                    a[i][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}
