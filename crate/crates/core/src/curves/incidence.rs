use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{common_points, intersection_multiplicity, Mult, PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::ideals::{buchberger, Budget, Ideal};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};

#[derive(Clone, Debug, Serialize)]
pub struct Intersection {
    pub points: Vec<(ProjPoint, Mult)>,
    pub residual: Vec<String>,
    pub residual_degree: usize,
}

impl Intersection {
    pub fn total(&self) -> u32 {
        self.points.iter().map(|(_, m)| m.finite().unwrap_or(0)).sum()
    }
}

/// Intersection points of two curves over the working field with their local multiplicities.
pub fn intersection_points(c: &PlaneCurve, d: &PlaneCurve, budget: Budget) -> Result<Intersection> {
    let pts = match common_points(&[c.form().clone(), d.form().clone()], budget) {
        Err(Error::NotZeroDimensional(_)) => return Err(Error::CommonComponent),
        r => r?,
    };
    let mut points = Vec::new();
    for p in pts.points {
        let m = intersection_multiplicity(c, d, &p);
        if m == Mult::Infinite {
            return Err(Error::CommonComponent);
        }
        points.push((p, m));
    }
    Ok(Intersection { points, residual: pts.residual, residual_degree: pts.residual_degree })
}

/// Two independent counts of `C ∩ D` compared with `deg C · deg D`.
#[derive(Clone, Debug, Serialize)]
pub struct BezoutAudit {
    pub expected: u32,
    /// Sum of Fulton multiplicities over points found in the field.
    pub found: u32,
    /// Degree of the points not expressible in the field.
    pub residual_degree: usize,
    /// Dimension of the affine coordinate ring of `C ∩ D` in generic coordinates.
    pub quotient_dimension: u64,
    pub passed: bool,
}

const AUDIT_ATTEMPTS: usize = 8;

pub fn bezout_audit(c: &PlaneCurve, d: &PlaneCurve, budget: Budget) -> Result<BezoutAudit> {
    let inter = intersection_points(c, d, budget)?;
    let expected = c.degree() * d.degree();
    let found = inter.total();
    let quotient_dimension = generic_quotient_dimension(c, d, budget)?;
    let passed = quotient_dimension == expected as u64
        && found as usize + inter.residual_degree <= expected as usize
        && (inter.residual_degree > 0 || found == expected);
    Ok(BezoutAudit { expected, found, residual_degree: inter.residual_degree, quotient_dimension, passed })
}

/// `dim k[x, y]/(f, g)` after a random change of coordinates that moves every
/// intersection point off the line at infinity.
fn generic_quotient_dimension(c: &PlaneCurve, d: &PlaneCurve, budget: Budget) -> Result<u64> {
    let ring = c.ring().clone();
    let field = ring.field().clone();
    let names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6265);
    for _ in 0..AUDIT_ATTEMPTS {
        let m: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det == 0 {
            continue;
        }
        let lin: Vec<MultiPoly> = (0..3)
            .map(|i| (0..3).fold(ring.zero(), |acc, j| &acc + &ring.var(j).scale(&field.from_int(m[i][j]))))
            .collect();
        let f = c.form().compose(&lin)?;
        let g = d.form().compose(&lin)?;
        let r1 = PolyRing::new(&field, &names[..1], MonomialOrder::Lex);
        let at_inf = [r1.var(0), r1.one(), r1.zero()];
        let fi = f.compose(&at_inf)?.to_uni(0)?;
        let gi = g.compose(&at_inf)?.to_uni(0)?;
        let corner = [field.one(), field.zero(), field.zero()];
        if fi.gcd(&gi).degree().unwrap_or(1) > 0 || (f.eval(&corner).is_zero() && g.eval(&corner).is_zero()) {
            continue;
        }
        let r2 = PolyRing::new(&field, &names[..2], MonomialOrder::Grevlex);
        let aff = [r2.var(0), r2.var(1), r2.one()];
        let ideal = Ideal::new(&r2, vec![f.compose(&aff)?, g.compose(&aff)?])?;
        let gb = buchberger(&ideal, MonomialOrder::Grevlex, budget)?;
        return gb.quotient_dimension().ok_or(Error::CommonComponent);
    }
    Err(Error::Degenerate("no generic coordinates found".into()))
}

/// Points where at least two of the curves meet, with membership and pairwise multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct IncidenceTable {
    pub curves: Vec<String>,
    pub points: Vec<ProjPoint>,
    /// `membership[i][k]`: curve `i` passes through point `k`.
    pub membership: Vec<Vec<bool>>,
    /// For each pair `(i, j)`, the multiplicity at every point (0 off the pair).
    pub pairs: BTreeMap<String, Vec<Mult>>,
    pub residual_degree: BTreeMap<String, usize>,
}

impl IncidenceTable {
    pub fn pair(&self, i: usize, j: usize) -> &[Mult] {
        &self.pairs[&pair_key(i, j)]
    }

    /// Largest pairwise multiplicity at point `k`.
    pub fn max_contact(&self, k: usize) -> u32 {
        self.pairs.values().filter_map(|v| v[k].finite()).max().unwrap_or(0)
    }
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{}-{}", i.min(j), i.max(j))
}

pub fn incidence_table(curves: &[(String, PlaneCurve)], budget: Budget) -> Result<IncidenceTable> {
    let n = curves.len();
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut per_pair = Vec::new();
    let mut residual_degree = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let inter = intersection_points(&curves[i].1, &curves[j].1, budget)?;
            for (p, _) in &inter.points {
                if !points.contains(p) {
                    points.push(p.clone());
                }
            }
            residual_degree.insert(pair_key(i, j), inter.residual_degree);
            per_pair.push((i, j, inter));
        }
    }
    let membership = curves.iter().map(|(_, c)| points.iter().map(|p| c.contains(p)).collect()).collect();
    let mut pairs = BTreeMap::new();
    for (i, j, inter) in per_pair {
        let row = points
            .iter()
            .map(|p| inter.points.iter().find(|(q, _)| q == p).map(|t| t.1).unwrap_or(Mult::Finite(0)))
            .collect();
        pairs.insert(pair_key(i, j), row);
    }
    Ok(IncidenceTable { curves: curves.iter().map(|c| c.0.clone()).collect(), points, membership, pairs, residual_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::curves::tests::xyz;

    #[test]
    fn lines_and_conics() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let a = PlaneCurve::parse("x", &r).unwrap();
        let b = PlaneCurve::parse("y - z", &r).unwrap();
        let t = incidence_table(&[("a".into(), a.clone()), ("b".into(), b.clone())], Budget::default()).unwrap();
        assert_eq!(t.points, vec![ProjPoint::from_ints(&q, [0, 1, 1]).unwrap()]);
        assert_eq!(t.pair(0, 1), &[Mult::Finite(1)]);
        let c = PlaneCurve::parse("y*z - x^2", &r).unwrap();
        let audit = bezout_audit(&c, &PlaneCurve::parse("y", &r).unwrap(), Budget::default()).unwrap();
        assert_eq!((audit.found, audit.quotient_dimension, audit.passed), (2, 2, true));
        // x^2 + y^2 = 2 z^2 against y = z: two rational points
        let e = PlaneCurve::parse("x^2 + y^2 - 2*z^2", &r).unwrap();
        let audit = bezout_audit(&e, &b, Budget::default()).unwrap();
        assert_eq!((audit.found, audit.residual_degree, audit.passed), (2, 0, true));
        // against x = 3z the points are irrational
        let audit = bezout_audit(&e, &PlaneCurve::parse("x - 3*z", &r).unwrap(), Budget::default()).unwrap();
        assert_eq!((audit.found, audit.residual_degree, audit.passed), (0, 2, true));
        assert_eq!(intersection_points(&a, &a, Budget::default()).unwrap_err(), Error::CommonComponent);
    }
}
