use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{common_points, local_intersection, Mult, PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::ideals::Budget;

#[derive(Clone, Debug, Serialize)]
pub struct SingularLocus {
    pub points: Vec<ProjPoint>,
    pub residual: Vec<String>,
    pub residual_degree: usize,
}

/// Singular points with coordinates in the working field.
pub fn singular_points(c: &PlaneCurve, budget: Budget) -> Result<SingularLocus> {
    let mut forms = vec![c.form().clone()];
    forms.extend(c.form().jacobian());
    match common_points(&forms, budget) {
        Ok(s) => Ok(SingularLocus { points: s.points, residual: s.residual, residual_degree: s.residual_degree }),
        Err(Error::NotZeroDimensional(_)) => Err(Error::NonReduced),
        Err(e) => Err(e),
    }
}

const MILNOR_ATTEMPTS: usize = 3;

/// `I_p(f_u, f_v)` for a local equation `f`; retried in sheared coordinates if it degenerates.
pub fn milnor_number(c: &PlaneCurve, p: &ProjPoint) -> Result<u32> {
    if !c.contains(p) {
        return Err(Error::NotOnCurve);
    }
    if !c.is_singular_at(p) {
        return Err(Error::SmoothPoint);
    }
    let f = c.local_equation(p);
    let lr = f.ring().clone();
    let (u, v) = (lr.var(0), lr.var(1));
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d75);
    let mut g = f.clone();
    for _ in 0..MILNOR_ATTEMPTS {
        if let Mult::Finite(mu) = local_intersection(&g.derivative(0), &g.derivative(1)) {
            return Ok(mu);
        }
        let a = lr.from_int(rng.gen_range(1..=7));
        let b = lr.from_int(rng.gen_range(1..=7));
        // (u, v) -> (u + a v, b u + (ab + 1) v) has determinant 1
        let ab1 = &(&a * &b) + &lr.one();
        g = f.compose(&[&u + &(&a * &v), &(&b * &u) + &(&ab1 * &v)])?;
    }
    Err(Error::Degenerate("Milnor number is not finite at this point".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityLabel {
    A(u32),
    Other,
}

impl fmt::Display for SingularityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityLabel::A(k) => write!(f, "a{k}"),
            SingularityLabel::Other => write!(f, "other"),
        }
    }
}

impl Serialize for SingularityLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub multiplicity: u32,
    pub milnor: u32,
    pub label: SingularityLabel,
}

/// `a_k` exactly when the point is a double point with Milnor number `k`.
pub fn classify(c: &PlaneCurve, p: &ProjPoint) -> Result<SingularityReport> {
    let milnor = milnor_number(c, p)?;
    let multiplicity = c.multiplicity_at(p)?;
    let label = if multiplicity == 2 { SingularityLabel::A(milnor) } else { SingularityLabel::Other };
    Ok(SingularityReport { point: p.clone(), multiplicity, milnor, label })
}
