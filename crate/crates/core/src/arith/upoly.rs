//! Dense univariate helpers over a number field (coefficients constant-first,
//! trailing zeros trimmed, empty vector = zero polynomial).

use std::sync::Arc;

use super::{NFElem, NumberField};

pub fn trim(mut p: Vec<NFElem>) -> Vec<NFElem> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[NFElem]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = &*o + s;
    }
    trim(out)
}

pub fn sub(a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
    let nb: Vec<NFElem> = b.iter().map(|c| -c).collect();
    add(a, &nb)
}

pub fn mul(a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let f = a[0].field().clone();
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(out)
}

pub fn derivative(a: &[NFElem]) -> Vec<NFElem> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&super::int(k as i64)))
            .collect(),
    )
}

/// Division with remainder; `b` must be nonzero.
pub fn divrem(a: &[NFElem], b: &[NFElem]) -> (Vec<NFElem>, Vec<NFElem>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let f = b[0].field().clone();
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lc_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() * &lc_inv;
        for (i, x) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &(&c * x);
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(a: &[NFElem]) -> Vec<NFElem> {
    match a.last() {
        None => vec![],
        Some(lc) => {
            let inv = lc.inv().expect("nonzero");
            a.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic greatest common divisor (zero if both are zero).
pub fn gcd(a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    monic(&x)
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &[NFElem]) -> Vec<NFElem> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return monic(&f);
    }
    let g = gcd(&f, &derivative(&f));
    monic(&divrem(&f, &g).0)
}

pub fn eval(a: &[NFElem], x: &NFElem) -> NFElem {
    let f = x.field().clone();
    a.iter().rev().fold(f.zero(), |acc, c| &(&acc * x) + c)
}

/// Multiplicity of `x` as a root of `a` (nonzero `a`).
pub fn root_multiplicity(a: &[NFElem], x: &NFElem) -> usize {
    let f: Arc<NumberField> = x.field().clone();
    let lin = vec![-x, f.one()];
    let mut p = trim(a.to_vec());
    let mut k = 0;
    while !p.is_empty() {
        let (q, r) = divrem(&p, &lin);
        if !r.is_empty() {
            break;
        }
        p = q;
        k += 1;
    }
    k
}
