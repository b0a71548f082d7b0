//! Gröbner bases, normal forms, elimination and zero-dimensional solving.

mod solve;

pub use solve::{solve_zero_dim, SolutionSet};

use std::sync::Arc;

use crate::arith::rat_bits;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

/// Resource caps for Buchberger's algorithm. Hitting one is reported as
/// [`Error::Budget`], never as a (possibly wrong) basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_bits: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 50_000, max_basis: 5_000, max_bits: 1 << 16 }
    }
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<MultiPoly>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.same_ring(&ring.zero()) {
                return Err(Error::RingMismatch("ideal generator".into()));
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }
}

/// Reduced, monic Gröbner basis sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    basis: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let f = f.with_ring(&self.ring)?;
        Ok(reduce(&f, &self.basis))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Number of standard monomials, i.e. the vector-space dimension of the
    /// quotient ring; `None` when the ideal is not zero-dimensional.
    pub fn quotient_dimension(&self) -> Option<u64> {
        let n = self.ring.nvars();
        let heads: Vec<Monomial> = self.basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        let mut bound = vec![u32::MAX; n];
        for h in &heads {
            let e = h.exps();
            let nz: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
            match nz.as_slice() {
                [] => return Some(0),
                [i] => bound[*i] = bound[*i].min(e[*i]),
                _ => {}
            }
        }
        if bound.iter().any(|&b| b == u32::MAX) {
            return None;
        }
        let mut count = 0u64;
        let mut e = vec![0u32; n];
        'outer: loop {
            let m = Monomial::from_exps(&e);
            if !heads.iter().any(|h| h.divides(&m)) {
                count += 1;
            }
            for i in 0..n {
                e[i] += 1;
                if e[i] < bound[i] {
                    continue 'outer;
                }
                e[i] = 0;
            }
            return Some(count);
        }
    }
}

/// Full reduction of `f` by `g` (every term, not just the head).
pub fn reduce(f: &MultiPoly, g: &[MultiPoly]) -> MultiPoly {
    reduce_within(f, g, u64::MAX).expect("unbounded reduction")
}

/// As [`reduce`], giving up once a head coefficient exceeds `max_bits`.
fn reduce_within(f: &MultiPoly, g: &[MultiPoly], max_bits: u64) -> Result<MultiPoly> {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, crate::arith::NFElem)> = Vec::new();
    'outer: while let Some((m, c)) = p.terms().first().cloned() {
        if c.coeffs().iter().map(rat_bits).max().unwrap_or(0) > max_bits {
            return Err(Error::Budget(format!("coefficient size exceeded {max_bits} bits")));
        }
        for h in g {
            let lm = h.leading_monomial().unwrap();
            if lm.divides(&m) {
                let q = &c * &h.leading_coeff().unwrap().inv().expect("nonzero");
                p = &p - &h.mul_term(&m.div(lm), &q);
                continue 'outer;
            }
        }
        rem.push((m, c));
        p = ring.from_terms(p.terms()[1..].iter().cloned());
    }
    Ok(ring.from_terms(rem))
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(mg);
    let cf = f.leading_coeff().unwrap().inv().expect("nonzero");
    let cg = g.leading_coeff().unwrap().inv().expect("nonzero");
    &f.mul_term(&l.div(mf), &cf) - &g.mul_term(&l.div(mg), &cg)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn max_bits(f: &MultiPoly) -> u64 {
    f.terms()
        .iter()
        .flat_map(|(_, c)| c.coeffs().iter())
        .map(rat_bits)
        .max()
        .unwrap_or(0)
}

/// Buchberger's algorithm with the coprime and chain criteria and sugar selection.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    let ring = ideal.ring.with_order(order);
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut live: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut processed = 0usize;

    let mut inputs: Vec<MultiPoly> = Vec::new();
    for g in &ideal.gens {
        inputs.push(g.with_ring(&ring)?.monic());
    }
    inputs.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let add = |h: MultiPoly,
               s: u32,
               basis: &mut Vec<MultiPoly>,
               sugar: &mut Vec<u32>,
               live: &mut Vec<bool>,
               pairs: &mut Vec<Pair>|
     -> Result<()> {
        if basis.len() >= budget.max_basis {
            return Err(Error::Budget(format!("basis size exceeded {}", budget.max_basis)));
        }
        if max_bits(&h) > budget.max_bits {
            return Err(Error::Budget(format!("coefficient size exceeded {} bits", budget.max_bits)));
        }
        let k = basis.len();
        let lk = h.leading_monomial().unwrap().clone();
        for i in 0..k {
            if !live[i] {
                continue;
            }
            let li = basis[i].leading_monomial().unwrap();
            let lcm = li.lcm(&lk);
            let si = sugar[i] + lcm.degree() - li.degree();
            let sk = s + lcm.degree() - lk.degree();
            pairs.push(Pair { i, j: k, lcm, sugar: si.max(sk) });
        }
        // older elements whose head is a multiple of the new head are redundant
        for i in 0..k {
            if live[i] && lk.divides(basis[i].leading_monomial().unwrap()) {
                live[i] = false;
            }
        }
        basis.push(h);
        sugar.push(s);
        live.push(true);
        Ok(())
    };

    for g in inputs {
        let h = reduce_within(&g, &live_elems(&basis, &live), budget.max_bits)?;
        if h.is_zero() {
            continue;
        }
        let s = h.total_degree().unwrap();
        add(h.monic(), s, &mut basis, &mut sugar, &mut live, &mut pairs)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        done.insert((p.i, p.j));
        let (fi, fj) = (&basis[p.i], &basis[p.j]);
        let (li, lj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
        // first criterion: coprime heads
        if li.coprime(lj) {
            continue;
        }
        // second criterion: a third head divides the lcm and both other pairs are done
        let chain = (0..basis.len()).any(|k| {
            k != p.i
                && k != p.j
                && basis[k].leading_monomial().unwrap().divides(&p.lcm)
                && done.contains(&(p.i.min(k), p.i.max(k)))
                && done.contains(&(p.j.min(k), p.j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Budget(format!("pair count exceeded {}", budget.max_pairs)));
        }
        let s = s_polynomial(fi, fj);
        let h = reduce_within(&s, &live_elems(&basis, &live), budget.max_bits)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(GroebnerBasis { ring: ring.clone(), basis: vec![ring.one()] });
        }
        add(h.monic(), p.sugar, &mut basis, &mut sugar, &mut live, &mut pairs)?;
    }

    Ok(GroebnerBasis { basis: interreduce(live_elems(&basis, &live), order), ring })
}

fn live_elems(basis: &[MultiPoly], live: &[bool]) -> Vec<MultiPoly> {
    basis.iter().zip(live).filter(|(_, l)| **l).map(|(b, _)| b.clone()).collect()
}

fn interreduce(mut g: Vec<MultiPoly>, order: MonomialOrder) -> Vec<MultiPoly> {
    if g.iter().any(|p| p.is_constant()) {
        let ring = g[0].ring().clone();
        return vec![ring.one()];
    }
    // minimal: drop elements whose head is divisible by another head
    g.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for p in g {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let n = minimal.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        out.push(reduce(&minimal[k], &others).monic());
    }
    out
}

/// `f` lies in the ideal iff its normal form modulo a Gröbner basis vanishes.
pub fn member(f: &MultiPoly, ideal: &Ideal, order: MonomialOrder, budget: Budget) -> Result<bool> {
    buchberger(ideal, order, budget)?.contains(f)
}

/// Generators of `I ∩ k[kept variables]`, as an ideal of the ring on the kept variables.
pub fn elimination_ideal(ideal: &Ideal, drop: &[&str], budget: Budget) -> Result<Ideal> {
    let ring = &ideal.ring;
    let mut dropped = Vec::new();
    for name in drop {
        dropped.push(ring.var_index(name)?);
    }
    let kept: Vec<usize> = (0..ring.nvars()).filter(|i| !dropped.contains(i)).collect();
    let perm: Vec<usize> = dropped.iter().chain(&kept).copied().collect();
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let elim_ring = PolyRing::new(ring.field(), &names, MonomialOrder::Block(dropped.len()));
    // variable i of the source ring sits at position pos[i] of the elimination ring
    let mut pos = vec![0; ring.nvars()];
    for (k, &i) in perm.iter().enumerate() {
        pos[i] = k;
    }
    let gens: Vec<MultiPoly> = ideal.gens.iter().map(|g| g.rename_into(&elim_ring, &pos)).collect();
    let gb = buchberger(&Ideal::new(&elim_ring, gens)?, elim_ring.order(), budget)?;
    let kept_names: Vec<&str> = kept.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let sub_ring = PolyRing::new(ring.field(), &kept_names, MonomialOrder::Grevlex);
    let nd = dropped.len();
    let back: Vec<usize> = (0..elim_ring.nvars()).map(|k| k.saturating_sub(nd)).collect();
    let out = gb
        .basis()
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= nd))
        .map(|g| g.rename_into(&sub_ring, &back))
        .collect();
    Ideal::new(&sub_ring, out)
}

/// `f / g^k` for the largest `k`.
pub fn divide_out(f: &MultiPoly, g: &MultiPoly) -> (MultiPoly, u32) {
    f.divide_out(g)
}
