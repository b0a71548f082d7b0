use std::sync::Arc;

use serde::Serialize;

use super::{common_points, PlaneCurve, ProjPoint};
use crate::arith::NFElem;
use crate::error::{Error, Result};
use crate::ideals::Budget;
use crate::linalg;
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};

/// Determinant of the matrix of second partial derivatives.
pub fn hessian(c: &PlaneCurve) -> MultiPoly {
    let f = c.form();
    let h: Vec<Vec<MultiPoly>> = (0..3)
        .map(|i| (0..3).map(|j| f.derivative(i).derivative(j)).collect())
        .collect();
    let minor = |a: usize, b: usize, c: usize, d: usize| &(&h[1][a] * &h[2][b]) - &(&h[1][c] * &h[2][d]);
    let t0 = &h[0][0] * &minor(1, 2, 2, 1);
    let t1 = &h[0][1] * &minor(0, 2, 2, 0);
    let t2 = &h[0][2] * &minor(0, 1, 1, 0);
    &(&t0 - &t1) + &t2
}

/// A curve restricted to a line `s*p0 + t*p1`, as a binary form in `(s, t)`.
#[derive(Clone, Debug)]
pub struct LineRestriction {
    pub p0: ProjPoint,
    pub p1: ProjPoint,
    pub form: MultiPoly,
}

impl LineRestriction {
    /// Parameter `(s, t)` of a point on the line.
    pub fn parameter(&self, p: &ProjPoint) -> Result<[NFElem; 2]> {
        let field = p.field().clone();
        let m: linalg::Matrix =
            (0..3).map(|i| vec![self.p0.coords()[i].clone(), self.p1.coords()[i].clone()]).collect();
        let st = linalg::solve(&m, p.coords(), &field).ok_or(Error::NotOnCurve)?;
        Ok([st[0].clone(), st[1].clone()])
    }

    /// Multiplicity of the point as a root of the binary form.
    pub fn root_multiplicity(&self, p: &ProjPoint) -> Result<u32> {
        let [s0, t0] = self.parameter(p)?;
        let r = self.form.ring();
        let lin = &r.var(0).scale(&t0) - &r.var(1).scale(&s0);
        Ok(self.form.divide_out(&lin).1)
    }
}

pub fn restrict_to_line(c: &PlaneCurve, line: &PlaneCurve) -> Result<LineRestriction> {
    if line.degree() != 1 {
        return Err(Error::Degenerate("not a line".into()));
    }
    let field = c.field().clone();
    let row: Vec<NFElem> = (0..3)
        .map(|i| {
            let mut e = vec![0u32; 3];
            e[i] = 1;
            line.form()
                .terms()
                .iter()
                .find(|(m, _)| m.exps() == e.as_slice())
                .map(|t| t.1.clone())
                .unwrap_or_else(|| field.zero())
        })
        .collect();
    let k = linalg::kernel(&vec![row], 3, &field);
    let p0 = ProjPoint::new([k[0][0].clone(), k[0][1].clone(), k[0][2].clone()])?;
    let p1 = ProjPoint::new([k[1][0].clone(), k[1][1].clone(), k[1][2].clone()])?;
    let pr = param_ring(&field);
    let (s, t) = (pr.var(0), pr.var(1));
    let images: Vec<MultiPoly> = (0..3)
        .map(|i| &s.scale(&p0.coords()[i]) + &t.scale(&p1.coords()[i]))
        .collect();
    let form = c.form().compose(&images)?;
    if form.is_zero() {
        return Err(Error::LineInCurve);
    }
    Ok(LineRestriction { p0, p1, form })
}

fn param_ring(field: &Arc<crate::arith::NumberField>) -> Arc<PolyRing> {
    PolyRing::new(field, &["s", "t"], MonomialOrder::Lex)
}

#[derive(Clone, Debug, Serialize)]
pub struct Flex {
    pub point: ProjPoint,
    #[serde(serialize_with = "ser_curve")]
    pub tangent: PlaneCurve,
    pub contact: u32,
}

fn ser_curve<S: serde::Serializer>(c: &PlaneCurve, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.form().to_text())
}

#[derive(Clone, Debug, Serialize)]
pub struct FlexSet {
    pub flexes: Vec<Flex>,
    /// Hessian intersection points outside the working field.
    pub residual: Vec<String>,
    pub residual_degree: usize,
}

/// Smooth points whose tangent meets the curve with multiplicity at least 3.
///
/// Candidates come from the Hessian; each is certified by restricting the
/// curve to its tangent line.
pub fn flexes(c: &PlaneCurve, budget: Budget) -> Result<FlexSet> {
    let h = hessian(c);
    let pts = common_points(&[c.form().clone(), h], budget)?;
    let mut out = Vec::new();
    for p in pts.points {
        if c.is_singular_at(&p) {
            continue;
        }
        let t = c.tangent_line(&p)?;
        let contact = match restrict_to_line(c, &t) {
            Ok(r) => r.root_multiplicity(&p)?,
            // a line component: every point of it is a flex
            Err(Error::LineInCurve) => continue,
            Err(e) => return Err(e),
        };
        if contact >= 3 {
            out.push(Flex { point: p, tangent: t, contact });
        }
    }
    Ok(FlexSet { flexes: out, residual: pts.residual, residual_degree: pts.residual_degree })
}
