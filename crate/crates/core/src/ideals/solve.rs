//! Triangular solving of zero-dimensional systems by lex Gröbner bases.

use std::sync::Arc;

use super::{buchberger, Budget, Ideal};
use crate::arith::NFElem;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing, UniPoly};

/// Points with all coordinates in the working field, plus univariate factors
/// whose roots are not in the field.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub points: Vec<Vec<NFElem>>,
    /// `(variable, factor, partial point)`: the factor in that variable had no
    /// roots in the field once the coordinates listed in the partial point
    /// (later variables) were fixed.
    pub residual: Vec<(String, UniPoly, Vec<NFElem>)>,
}

impl SolutionSet {
    /// Total degree of the residual factors, i.e. an upper bound on the number
    /// of points missing from `points`, counted with their conjugates.
    pub fn residual_degree(&self) -> usize {
        self.residual.iter().map(|(_, u, _)| u.degree().unwrap_or(0)).sum()
    }
}

/// Solves a zero-dimensional system in all variables of its ring.
pub fn solve_zero_dim(ideal: &Ideal, budget: Budget) -> Result<SolutionSet> {
    let ring = ideal.ring().with_order(MonomialOrder::Lex);
    let gens: Vec<MultiPoly> = ideal.gens().iter().map(|g| g.with_ring(&ring)).collect::<Result<_>>()?;
    let n = ring.nvars();
    let mut out = SolutionSet { points: vec![], residual: vec![] };
    let mut partial = vec![None; n];
    solve_rec(&ring, gens, n, &mut partial, budget, &mut out)?;
    for p in &out.points {
        for g in ideal.gens() {
            if !g.eval(p).is_zero() {
                return Err(Error::Inconsistent("solver produced a non-solution".into()));
            }
        }
    }
    Ok(out)
}

/// Variables `0..active` are still unknown; the rest are fixed in `partial`.
fn solve_rec(
    ring: &Arc<PolyRing>,
    gens: Vec<MultiPoly>,
    active: usize,
    partial: &mut Vec<Option<NFElem>>,
    budget: Budget,
    out: &mut SolutionSet,
) -> Result<()> {
    if active == 0 {
        if gens.iter().all(|g| g.is_zero()) {
            out.points.push(partial.iter().map(|c| c.clone().unwrap()).collect());
        }
        return Ok(());
    }
    let gb = buchberger(&Ideal::new(ring, gens)?, MonomialOrder::Lex, budget)?;
    if gb.is_unit() || gb.basis().is_empty() && active > 0 {
        if gb.basis().is_empty() {
            return Err(Error::NotZeroDimensional("zero ideal".into()));
        }
        return Ok(());
    }
    for v in 0..active {
        let pure = gb.basis().iter().any(|g| {
            let lm = g.leading_monomial().unwrap().exps();
            lm[v] > 0 && lm.iter().enumerate().all(|(i, &e)| i == v || e == 0)
        });
        if !pure {
            return Err(Error::NotZeroDimensional(format!(
                "no pure power of {} among leading terms",
                ring.vars()[v]
            )));
        }
    }
    let v = active - 1;
    let elim = gb
        .basis()
        .iter()
        .find(|g| g.support_vars().iter().all(|&i| i == v))
        .expect("lex basis of a zero-dimensional ideal has an eliminant");
    let uni = elim.to_uni(v)?.squarefree_part();
    let roots = uni.roots();
    let mut rest = uni.clone();
    for r in &roots {
        let lin = UniPoly::new(ring.field(), vec![-r, ring.field().one()]);
        rest = rest.divrem(&lin).0;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let fixed: Vec<NFElem> = partial[active..].iter().map(|c| c.clone().unwrap()).collect();
        out.residual.push((ring.vars()[v].clone(), rest, fixed));
    }
    for r in roots {
        let mut images = ring.vars_all();
        images[v] = ring.constant(r.clone());
        let next: Vec<MultiPoly> =
            gb.basis().iter().map(|g| g.compose(&images)).collect::<Result<_>>()?;
        partial[v] = Some(r);
        solve_rec(ring, next, active - 1, partial, budget, out)?;
        partial[v] = None;
    }
    Ok(())
}
