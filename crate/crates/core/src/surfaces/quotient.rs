//! Invariants of a quotient surface `Y = X/G` from ramification data.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{int, Rat};
use crate::error::{Error, Result};

/// `d1 d2 / (w0 w1 w2)`: intersection of curves of weighted degrees `d1`, `d2`.
pub fn weighted_bezout(d1: u32, d2: u32, weights: [u32; 3]) -> Result<Rat> {
    if weights.iter().any(|&w| w == 0) {
        return Err(Error::Degenerate("weights must be positive".into()));
    }
    let w: i64 = weights.iter().map(|&w| w as i64).product();
    Ok(Rat::new((d1 as i64 * d2 as i64).into(), w.into()))
}

/// A union of `components` curves on `X`, all with ramification order `order`.
#[derive(Clone, Debug, Serialize)]
pub struct BranchClass {
    pub name: String,
    pub order: u32,
    pub components: u32,
    /// `B_i . B` for every component `B_i` (equal by transitivity).
    #[serde(serialize_with = "crate::ser::rat")]
    pub component_dot_total: Rat,
    /// `K_X . B`.
    #[serde(serialize_with = "crate::ser::rat")]
    pub k_dot: Rat,
}

impl BranchClass {
    pub fn self_int(&self) -> Rat {
        int(self.components as i64) * &self.component_dot_total
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientData {
    pub group_order: u32,
    #[serde(serialize_with = "crate::ser::rat")]
    pub k_sq: Rat,
    pub branches: Vec<BranchClass>,
    /// `B . B'` for distinct branch classes, by index pair.
    #[serde(serialize_with = "crate::ser::rat_triples")]
    pub cross: Vec<(usize, usize, Rat)>,
    /// `(number of elements, Euler number of their fixed locus)`; the identity contributes `e(X)`.
    pub fixed_euler: Vec<(u32, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientInvariants {
    /// `(pi^*K_Y)^2 = (K_X - R)^2` with `R = sum (r - 1) B`.
    #[serde(serialize_with = "crate::ser::rat")]
    pub pullback_k_sq: Rat,
    #[serde(serialize_with = "crate::ser::rat")]
    pub k_sq: Rat,
    #[serde(serialize_with = "crate::ser::rats")]
    pub branch_self_int: Vec<Rat>,
    pub euler: Option<i64>,
}

pub fn quotient_invariants(d: &QuotientData) -> Result<QuotientInvariants> {
    if d.group_order == 0 {
        return Err(Error::Degenerate("empty group".into()));
    }
    let r: Vec<Rat> = d.branches.iter().map(|b| int(b.order as i64 - 1)).collect();
    let mut r_sq = Rat::zero();
    for (i, b) in d.branches.iter().enumerate() {
        r_sq += &r[i] * &r[i] * b.self_int();
    }
    for (i, j, v) in &d.cross {
        if i == j || *i >= d.branches.len() || *j >= d.branches.len() {
            return Err(Error::Inconsistent(format!("cross term ({i}, {j})")));
        }
        r_sq += int(2) * &r[*i] * &r[*j] * v;
    }
    let k_r: Rat = d.branches.iter().zip(&r).map(|(b, ri)| ri * &b.k_dot).sum();
    let pullback_k_sq = &d.k_sq - int(2) * k_r + r_sq;
    let k_sq = &pullback_k_sq / int(d.group_order as i64);
    let euler = if d.fixed_euler.is_empty() {
        None
    } else {
        let count: u32 = d.fixed_euler.iter().map(|t| t.0).sum();
        if count != d.group_order {
            return Err(Error::Inconsistent(format!("fixed-locus data covers {count} of {} elements", d.group_order)));
        }
        let total: i64 = d.fixed_euler.iter().map(|&(n, e)| n as i64 * e).sum();
        let (q, rem) = total.div_rem(&(d.group_order as i64));
        if rem != 0 {
            return Err(Error::Inconsistent(format!("{total} is not divisible by {}", d.group_order)));
        }
        Some(q)
    };
    Ok(QuotientInvariants {
        pullback_k_sq,
        k_sq,
        branch_self_int: d.branches.iter().map(|b| b.self_int()).collect(),
        euler,
    })
}
