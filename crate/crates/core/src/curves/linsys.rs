use std::sync::Arc;

use super::{local_at, PlaneCurve, ProjPoint};
use crate::arith::{int, NFElem};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, MultiPoly, PolyRing};

#[derive(Clone, Debug)]
pub enum Condition {
    /// Vanishing to order at least `m` at the point.
    Multiplicity { point: ProjPoint, m: u32 },
    /// A double point whose 2-jet is proportional to the given double line.
    TangentCone { point: ProjPoint, cone: MultiPoly },
}

#[derive(Clone, Debug)]
pub struct LinearSystemSpec {
    pub degree: u32,
    pub conditions: Vec<Condition>,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    /// Kernel basis in reduced row echelon form over monomials in descending lex order.
    pub basis: Vec<MultiPoly>,
    pub dimension: usize,
    pub rank: usize,
    pub monomials: usize,
}

/// Degree-`d` monomials in three variables, descending lex.
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push(Monomial::from_exps(&[i, j, d - i - j]));
        }
    }
    out
}

fn jet_coeff(f: &MultiPoly, i: u32, j: u32) -> NFElem {
    f.terms()
        .iter()
        .find(|(m, _)| m.exps() == [i, j])
        .map(|t| t.1.clone())
        .unwrap_or_else(|| f.field().zero())
}

/// Kernel of the condition matrix on forms of the given degree.
pub fn linear_system(ring: &Arc<PolyRing>, spec: &LinearSystemSpec) -> Result<LinearSystem> {
    let field = ring.field().clone();
    let mons = monomials(spec.degree);
    let n = mons.len();
    let mut rows: linalg::Matrix = Vec::new();
    for cond in &spec.conditions {
        let (point, m) = match cond {
            Condition::Multiplicity { point, m } => (point, *m),
            Condition::TangentCone { point, .. } => (point, 2),
        };
        let locals: Vec<MultiPoly> = mons
            .iter()
            .map(|mm| local_at(&ring.term(mm.clone(), field.one()), point))
            .collect();
        for total in 0..m {
            for i in 0..=total {
                rows.push(locals.iter().map(|f| jet_coeff(f, i, total - i)).collect());
            }
        }
        if let Condition::TangentCone { point, cone } = cond {
            let c = PlaneCurve::new(cone.clone())?;
            let lc = local_at(c.form(), point);
            let abc = [jet_coeff(&lc, 2, 0), jet_coeff(&lc, 1, 1), jet_coeff(&lc, 0, 2)];
            if lc.terms().iter().any(|(mm, _)| mm.degree() != 2) || abc.iter().all(|x| x.is_zero()) {
                return Err(Error::Degenerate("tangent cone must be a quadratic cone at the point".into()));
            }
            let disc = &(&abc[1] * &abc[1]) - &(&abc[0] * &abc[2]).scale(&int(4));
            if !disc.is_zero() {
                return Err(Error::Degenerate("tangent cone must be a double line".into()));
            }
            // the 2-jet must be orthogonal to every vector orthogonal to the cone
            let perp = linalg::kernel(&vec![abc.to_vec()], 3, &field);
            for w in perp {
                rows.push(
                    locals
                        .iter()
                        .map(|f| {
                            let j = [jet_coeff(f, 2, 0), jet_coeff(f, 1, 1), jet_coeff(f, 0, 2)];
                            (0..3).fold(field.zero(), |acc, k| &acc + &(&w[k] * &j[k]))
                        })
                        .collect(),
                );
            }
        }
    }
    let rank = linalg::rank(&rows);
    let kernel = linalg::kernel(&rows, n, &field);
    let basis = kernel
        .iter()
        .map(|v| ring.from_terms(mons.iter().cloned().zip(v.iter().cloned())))
        .collect::<Vec<_>>();
    Ok(LinearSystem { dimension: basis.len(), basis, rank, monomials: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::curves::tests::xyz;

    #[test]
    fn conics_through_five_points() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]];
        let conditions = pts
            .iter()
            .map(|c| Condition::Multiplicity { point: ProjPoint::from_ints(&q, *c).unwrap(), m: 1 })
            .collect();
        let ls = linear_system(&r, &LinearSystemSpec { degree: 2, conditions }).unwrap();
        assert_eq!(ls.dimension, 1);
        assert_eq!(ls.rank, 5);
    }

    #[test]
    fn rejects_non_double_line_cone() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let p = ProjPoint::from_ints(&q, [0, 0, 1]).unwrap();
        let cone = r.parse("x*y").unwrap();
        let spec = LinearSystemSpec { degree: 3, conditions: vec![Condition::TangentCone { point: p, cone }] };
        assert!(linear_system(&r, &spec).is_err());
    }
}
