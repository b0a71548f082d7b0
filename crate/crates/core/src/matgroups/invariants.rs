//! Polynomial invariants of finite matrix groups.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{MatGroup, Mirror};
use crate::arith::{NFElem, Rat};
use crate::curves::{classify, image_ideal, PlaneCurve, ProjMap, ProjPoint, SingularityReport};
use crate::error::{Error, Result};
use crate::ideals::Budget;
use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

/// Largest degree accepted by [`reynolds_invariants`].
pub const DEGREE_BOUND: u32 = 16;

fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for rest in monomials(n - 1, d - first) {
            let mut e = vec![first];
            e.extend_from_slice(rest.exps());
            out.push(Monomial::from_exps(&e));
        }
    }
    out
}

fn coefficient_row(f: &MultiPoly, index: &HashMap<Monomial, usize>, len: usize) -> Vec<NFElem> {
    let mut row = vec![f.field().zero(); len];
    for (m, c) in f.terms() {
        row[index[m]] = c.clone();
    }
    row
}

/// `1/|G| sum_g f(g x)`.
pub fn reynolds(g: &MatGroup, f: &MultiPoly) -> Result<MultiPoly> {
    let mut acc = f.ring().zero();
    for m in g.elements() {
        acc = acc.try_add(&m.act(f)?)?;
    }
    Ok(acc.scale_rat(&Rat::new(1.into(), (g.order() as i64).into())))
}

pub fn is_invariant(g: &MatGroup, f: &MultiPoly) -> Result<bool> {
    for m in g.elements() {
        if &m.act(f)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the degree-`d` invariants, in reduced echelon form.
pub fn reynolds_invariants(g: &MatGroup, ring: &Arc<PolyRing>, d: u32) -> Result<Vec<MultiPoly>> {
    if d > DEGREE_BOUND {
        return Err(Error::Budget(format!("degree {d} exceeds {DEGREE_BOUND}")));
    }
    if ring.nvars() != g.dim() || ring.field() != g.field() {
        return Err(Error::RingMismatch("ring does not match the group".into()));
    }
    let mons = monomials(ring.nvars(), d);
    let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Matrix = Vec::new();
    for m in &mons {
        let avg = reynolds(g, &ring.term(m.clone(), ring.field().one()))?;
        rows.push(coefficient_row(&avg, &index, mons.len()));
    }
    let rank = linalg::rref(&mut rows).len();
    Ok(rows
        .into_iter()
        .take(rank)
        .map(|r| ring.from_terms(mons.iter().cloned().zip(r)))
        .collect())
}

/// First `terms` coefficients of `1/|G| sum_g 1/det(I - t g)`.
pub fn molien_series(g: &MatGroup, terms: usize) -> Result<Vec<Rat>> {
    let k = g.field();
    let n = g.dim();
    let mut total = vec![k.zero(); terms];
    for m in g.elements() {
        // det(I - t m) = sum_j (-1)^j e_j t^j, e_j the sum of principal j-minors
        let rows = m.rows();
        let mut p = vec![k.one()];
        for j in 1..=n {
            let mut e = k.zero();
            for subset in subsets(n, j) {
                let sub: Matrix = subset.iter().map(|&a| subset.iter().map(|&b| rows[a][b].clone()).collect()).collect();
                e = &e + &linalg::det(&sub, k);
            }
            p.push(if j % 2 == 0 { e } else { -e });
        }
        let mut inv = vec![k.one()];
        for i in 1..terms {
            let mut c = k.zero();
            for (j, pj) in p.iter().enumerate().skip(1).take_while(|(j, _)| *j <= i) {
                c = &c - &(pj * &inv[i - j]);
            }
            inv.push(c);
        }
        for (t, c) in total.iter_mut().zip(inv) {
            *t = &*t + &c;
        }
    }
    let scale = Rat::new(1.into(), (g.order() as i64).into());
    total
        .iter()
        .map(|c| {
            c.scale(&scale)
                .as_rat()
                .cloned()
                .ok_or_else(|| Error::Inconsistent("Molien coefficient is not rational".into()))
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Products of `gens` (with degrees `degs`) of total degree `d`, as exponent vectors.
fn products(degs: &[u32], d: u32) -> Vec<Vec<u32>> {
    let Some((&first, rest)) = degs.split_first() else {
        return if d == 0 { vec![vec![]] } else { vec![] };
    };
    let mut out = Vec::new();
    let mut k = 0;
    while k * first <= d {
        for mut tail in products(rest, d - k * first) {
            tail.insert(0, k);
            out.push(tail);
        }
        k += 1;
    }
    out
}

fn eval_product(gens: &[MultiPoly], e: &[u32], ring: &Arc<PolyRing>) -> MultiPoly {
    gens.iter().zip(e).fold(ring.one(), |acc, (g, &k)| acc.try_mul(&g.pow(k)).expect("same ring"))
}

/// Greedy minimal generators of the invariant ring up to `max_degree`.
pub fn fundamental_invariants(g: &MatGroup, ring: &Arc<PolyRing>, max_degree: u32) -> Result<Vec<MultiPoly>> {
    let mut gens: Vec<MultiPoly> = Vec::new();
    let mut degs: Vec<u32> = Vec::new();
    for d in 1..=max_degree {
        let basis = reynolds_invariants(g, ring, d)?;
        if basis.is_empty() {
            continue;
        }
        let mons = monomials(ring.nvars(), d);
        let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span: Matrix = products(&degs, d)
            .iter()
            .map(|e| coefficient_row(&eval_product(&gens, e, ring), &index, mons.len()))
            .collect();
        let mut rank = linalg::rank(&span);
        for b in basis {
            span.push(coefficient_row(&b, &index, mons.len()));
            let r = linalg::rank(&span);
            if r > rank {
                rank = r;
                gens.push(b);
                degs.push(d);
            } else {
                span.pop();
            }
        }
    }
    Ok(gens)
}

/// Polynomial relations of weighted degree `d` among `gens`, written in `target`
/// (one variable per generator, weighted by the generator degrees).
pub fn invariant_relations(gens: &[MultiPoly], d: u32, target: &Arc<PolyRing>) -> Result<Vec<MultiPoly>> {
    if target.nvars() != gens.len() {
        return Err(Error::RingMismatch("one target variable per generator".into()));
    }
    let ring = gens.first().ok_or_else(|| Error::Degenerate("no generators".into()))?.ring().clone();
    let degs: Vec<u32> = gens
        .iter()
        .map(|g| g.total_degree().filter(|_| g.is_homogeneous()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Degenerate("generators must be homogeneous".into()))?;
    let exps = products(&degs, d);
    let mons = monomials(ring.nvars(), d);
    let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let cols: Vec<Vec<NFElem>> = exps.iter().map(|e| coefficient_row(&eval_product(gens, e, &ring), &index, mons.len())).collect();
    // columns are products; kernel vectors are relations
    let m: Matrix = (0..mons.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let ker = linalg::kernel(&m, exps.len(), ring.field());
    Ok(ker
        .into_iter()
        .map(|v| target.from_terms(exps.iter().map(|e| Monomial::from_exps(e)).zip(v)).monic())
        .collect())
}

/// Rank of the Hessian at the origin when `f` vanishes there to order exactly two; `None` otherwise.
pub fn quadratic_singularity_rank(f: &MultiPoly) -> Option<usize> {
    let n = f.ring().nvars();
    let origin = vec![f.field().zero(); n];
    if !f.eval(&origin).is_zero() || f.jacobian().iter().any(|d| !d.eval(&origin).is_zero()) {
        return None;
    }
    let h: Matrix = (0..n)
        .map(|i| (0..n).map(|j| f.derivative(i).derivative(j).eval(&origin)).collect())
        .collect();
    let r = linalg::rank(&h);
    (r > 0).then_some(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct MirrorImageReport {
    /// Distinct image curves in the plane of the first two invariants.
    pub components: Vec<String>,
    /// Each further invariant is a polynomial in the first along every image,
    /// so the plane projection is an isomorphism onto the image germ.
    pub graph: bool,
    pub union: SingularityReport,
    /// Image of the line through the given control vector.
    pub control: Option<SingularityReport>,
}

fn line_image(
    vector: &[NFElem],
    gens: &[MultiPoly],
    target: &Arc<PolyRing>,
    budget: Budget,
) -> Result<(PlaneCurve, bool)> {
    let k = target.field().clone();
    let vals: Vec<NFElem> = gens.iter().map(|g| g.eval(vector)).collect();
    let degs: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
    let (du, dv) = (degs[0], degs[1]);
    if du == 0 || dv <= du {
        return Err(Error::Degenerate("invariant degrees must increase".into()));
    }
    let src = PolyRing::new(&k, &["s", "h"], MonomialOrder::Grevlex);
    let mono = |c: &NFElem, a: u32, b: u32| src.term(Monomial::from_exps(&[a, b]), c.clone());
    let map = ProjMap::new(vec![mono(&vals[0], du, dv - du), mono(&vals[1], dv, 0), mono(&k.one(), 0, dv)])?;
    let gens_img = image_ideal(&map, &[], target, budget)?;
    let curve = match gens_img.as_slice() {
        [p] => PlaneCurve::new(p.clone())?.monic(),
        _ => return Err(Error::Contracted),
    };
    let graph = degs[2..].iter().all(|&d| d % du == 0) || vals[0].is_zero();
    Ok((curve, graph))
}

/// Images of the mirror lines under the first two invariants, classified at the image of the origin.
pub fn mirror_image_cusp_check(
    mirrors: &[Mirror],
    gens: &[MultiPoly],
    control: Option<&[NFElem]>,
    budget: Budget,
) -> Result<MirrorImageReport> {
    if gens.len() < 2 || mirrors.is_empty() {
        return Err(Error::Degenerate("need mirrors and at least two invariants".into()));
    }
    let k = gens[0].field().clone();
    let target = PolyRing::new(&k, &["u", "v", "z"], MonomialOrder::Grevlex);
    let origin = ProjPoint::from_ints(&k, [0, 0, 1])?;
    let mut comps: Vec<PlaneCurve> = Vec::new();
    let mut graph = true;
    for m in mirrors {
        let vec = m.fixed.first().ok_or_else(|| Error::Degenerate("mirror without a fixed vector".into()))?;
        let (c, gr) = line_image(vec, gens, &target, budget)?;
        graph &= gr;
        if !comps.iter().any(|d| d.same_curve(&c)) {
            comps.push(c);
        }
    }
    let union_form = comps.iter().skip(1).try_fold(comps[0].form().clone(), |acc, c| acc.try_mul(c.form()))?;
    let union = classify(&PlaneCurve::new(union_form)?, &origin)?;
    let control = match control {
        Some(v) => Some(classify(&line_image(v, gens, &target, budget)?.0, &origin)?),
        None => None,
    };
    Ok(MirrorImageReport { components: comps.iter().map(|c| c.form().to_string()).collect(), graph, union, control })
}

#[cfg(test)]
mod tests {
    use super::super::{closure, mirrors, sd16_generators, NFMatrix};
    use super::*;
    use crate::arith::{int, NumberField};
    use crate::curves::SingularityLabel;

    fn sd16() -> (MatGroup, MatGroup) {
        let [g1, g2] = sd16_generators();
        let g = closure(&[g1.clone(), g2.clone()], 64).unwrap();
        let d4 = closure(&[g2.clone(), g1.inverse().unwrap().mul(&g2).mul(&g1)], 64).unwrap();
        (g, d4)
    }

    #[test]
    fn small_cases() {
        let q = NumberField::rationals();
        let ring = PolyRing::new(&q, &["x", "y"], MonomialOrder::Grevlex);
        let minus = NFMatrix::parse(&[&["-1", "0"], &["0", "-1"]], &q).unwrap();
        let pm = closure(&[minus], 4).unwrap();
        assert_eq!(reynolds_invariants(&pm, &ring, 2).unwrap().len(), 3);
        assert!(reynolds_invariants(&pm, &ring, 1).unwrap().is_empty());
        let triv = closure(&[NFMatrix::identity(&q, 2)], 4).unwrap();
        assert_eq!(reynolds_invariants(&triv, &ring, 1).unwrap().len(), 2);
        assert!(reynolds_invariants(&triv, &ring, 17).unwrap_err().is_budget());
    }

    #[test]
    fn dimensions_match_molien() {
        let (g, d4) = sd16();
        let ring = PolyRing::new(g.field(), &["x", "y"], MonomialOrder::Grevlex);
        for grp in [&g, &d4] {
            let series = molien_series(grp, 9).unwrap();
            for d in 1..=8u32 {
                let basis = reynolds_invariants(grp, &ring, d).unwrap();
                assert_eq!(int(basis.len() as i64), series[d as usize], "degree {d}");
                for b in &basis {
                    assert!(is_invariant(grp, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn sd16_invariant_ring() {
        let (g, d4) = sd16();
        let ring = PolyRing::new(g.field(), &["x", "y"], MonomialOrder::Grevlex);
        let found = fundamental_invariants(&g, &ring, 12).unwrap();
        let degs: Vec<u32> = found.iter().map(|f| f.total_degree().unwrap()).collect();
        assert_eq!(degs, vec![4, 6, 8]);
        let gens: Vec<MultiPoly> =
            ["x^2*y^2", "x*y*(x^4+y^4)", "x^8+y^8"].iter().map(|s| ring.parse(s).unwrap()).collect();
        for f in &gens {
            assert!(is_invariant(&g, f).unwrap());
        }
        let t = PolyRing::new(g.field(), &["u", "v", "w"], MonomialOrder::Grevlex);
        let rel = invariant_relations(&gens, 12, &t).unwrap();
        assert_eq!(rel.len(), 1);
        assert_eq!(rel[0], t.parse("v^2 - u*w - 2*u^3").unwrap().monic());
        assert_eq!(quadratic_singularity_rank(&rel[0]), Some(3));

        let ms = mirrors(&d4, &ring).unwrap();
        let k = g.field();
        let control = [k.one(), k.from_int(2)];
        let rep = mirror_image_cusp_check(&ms, &gens, Some(&control), Budget::default()).unwrap();
        assert_eq!(rep.components.len(), 1);
        assert!(rep.graph);
        assert_eq!(rep.union.label, SingularityLabel::A(2));
    }
}
