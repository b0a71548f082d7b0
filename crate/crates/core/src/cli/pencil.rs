//! Sampled uniqueness for the pencil of quartics with a node and two cusps,
//! and a small elimination sub-case of the full uniqueness argument.

use serde::Serialize;

use crate::arith::NumberField;
use crate::curves::{flexes, intersection_points, PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::ideals::{elimination_ideal, Budget, Ideal};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};

/// Outcome of the flex / residual / collinearity test for one curve.
#[derive(Clone, Debug, Serialize)]
pub struct PencilConfiguration {
    pub holds: bool,
    pub flexes_in_field: usize,
    /// Flexes `p4, p5` and residual points `p6, p7` of a satisfying choice.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PencilSample {
    pub a: i64,
    #[serde(flatten)]
    pub config: PencilConfiguration,
}

impl std::ops::Deref for PencilSample {
    type Target = PencilConfiguration;
    fn deref(&self) -> &PencilConfiguration {
        &self.config
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PencilReport {
    pub holds_at: PencilSample,
    pub samples: Vec<PencilSample>,
    /// True iff the configuration holds at `holds_at` and fails at every sample.
    pub pass: bool,
}

/// `base + a * direction`.
pub fn member(base: &MultiPoly, direction: &MultiPoly, a: i64) -> Result<PlaneCurve> {
    let k = base.field().clone();
    PlaneCurve::new(base.try_add(&direction.scale(&k.from_int(a)))?)
}

/// Looks for flexes `p4 != p5` in the field whose tangents meet the curve again
/// at `p6`, `p7` with the line `p6 p7` through the node.
pub fn configuration_holds(f: &PlaneCurve, node: &ProjPoint, budget: Budget) -> Result<PencilConfiguration> {
    let fl = match flexes(f, budget) {
        Ok(fl) => fl,
        Err(e) if e.is_budget() => return Err(e),
        Err(e) => {
            return Ok(PencilConfiguration { holds: false, flexes_in_field: 0, witness: None, reason: Some(e.to_string()) })
        }
    };
    let mut residual = Vec::new();
    for fx in &fl.flexes {
        let inter = intersection_points(f, &fx.tangent, budget)?;
        let pts: Vec<ProjPoint> = inter.points.into_iter().map(|(p, _)| p).filter(|p| *p != fx.point).collect();
        residual.push(pts);
    }
    let n = fl.flexes.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for r6 in &residual[i] {
                for r7 in &residual[j] {
                    let pts = [node, &fl.flexes[i].point, &fl.flexes[j].point, r6, r7];
                    let distinct = (0..5).all(|a| (a + 1..5).all(|b| pts[a] != pts[b]));
                    if !distinct {
                        continue;
                    }
                    if r6.line_through(r7, f.ring())?.contains(node) {
                        let witness = [pts[1], pts[2], r6, r7].map(|p| p.to_text());
                        return Ok(PencilConfiguration { holds: true, flexes_in_field: n, witness: Some(witness), reason: None });
                    }
                }
            }
        }
    }
    let reason = if n < 2 { format!("{n} flexes in the field") } else { "no collinear residual pair".into() };
    Ok(PencilConfiguration { holds: false, flexes_in_field: n, witness: None, reason: Some(reason) })
}

/// Tests the configuration at `a` and at every sample; `a` and the samples must be nonzero.
pub fn falsify_pencil(
    base: &MultiPoly,
    direction: &MultiPoly,
    node: &ProjPoint,
    a: i64,
    samples: &[i64],
    budget: Budget,
) -> Result<PencilReport> {
    if a == 0 || samples.contains(&0) {
        return Err(Error::Degenerate("a = 0 gives a double conic".into()));
    }
    let run = |a: i64| -> Result<PencilSample> {
        Ok(PencilSample { a, config: configuration_holds(&member(base, direction, a)?, node, budget)? })
    };
    let holds_at = run(a)?;
    let samples = samples.iter().map(|&s| run(s)).collect::<Result<Vec<_>>>()?;
    let pass = holds_at.holds && samples.iter().all(|s| s.a == a || !s.holds);
    Ok(PencilReport { holds_at, samples, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct LongRunReport {
    /// Generators of the eliminant in `s`, where `a = s^2`.
    pub eliminant: Vec<String>,
    /// Every eliminant vanishes at `s^2 = -8`.
    pub consistent: bool,
}

/// Sub-case of the uniqueness elimination: the configuration symmetric under
/// `x <-> y`, so `p5 = (v : u : 1)` and `p7 = (-s : s : 1)` follow from
/// `p4 = (u : v : 1)` and `p6 = (s : -s : 1)`. On the anti-diagonal the pencil
/// member reduces to `s^4 - a s^2`, so `a = s^2`.
///
/// Unknowns `u, v, s` and a Rabinowitsch variable excluding `s = 0`, `u = v`
/// and the singular points (`u v = 0`); `u, v` and the auxiliary variable are
/// eliminated.
pub fn long_run(base: &MultiPoly, direction: &MultiPoly, node: &ProjPoint, budget: Budget) -> Result<LongRunReport> {
    let k = base.field().clone();
    if *node != ProjPoint::from_ints(&k, [0, 0, 1])? {
        return Err(Error::Degenerate("the sub-case assumes the node at (0 : 0 : 1)".into()));
    }
    if k.degree() != 2 || k.min_poly() != NumberField::sqrt_minus_two().min_poly() {
        return Err(Error::InvalidField("the sub-case runs over Q(sqrt(-2))".into()));
    }
    let big = PolyRing::new(&k, &["n", "u", "v", "s", "x", "y", "z"], MonomialOrder::Grevlex);
    let lift = |f: &MultiPoly| f.rename_into(&big, &[4, 5, 6]);
    let var = |name: &str| big.var_named(name);
    let s = var("s")?;
    let f = lift(base).try_add(&lift(direction).try_mul(&s.pow(2))?)?;

    let grad: Vec<MultiPoly> = (4..7).map(|i| f.derivative(i)).collect();
    let h: Vec<Vec<MultiPoly>> = grad.iter().map(|g| (4..7).map(|i| g.derivative(i)).collect()).collect();
    let minor = |a: usize, b: usize, c: usize, d: usize| -> Result<MultiPoly> {
        h[1][a].try_mul(&h[2][b])?.try_sub(&h[1][c].try_mul(&h[2][d])?)
    };
    let hess = h[0][0]
        .try_mul(&minor(1, 2, 2, 1)?)?
        .try_sub(&h[0][1].try_mul(&minor(0, 2, 2, 0)?)?)?
        .try_add(&h[0][2].try_mul(&minor(0, 1, 1, 0)?)?)?;

    let (u, v) = (var("u")?, var("v")?);
    let at_p4 = |g: &MultiPoly| g.substitute(&[("x", u.clone()), ("y", v.clone()), ("z", big.one())]);
    let tangent = at_p4(&grad[0])?.try_mul(&s)?.try_sub(&at_p4(&grad[1])?.try_mul(&s)?)?.try_add(&at_p4(&grad[2])?)?;
    let guard = var("n")?.try_mul(&s)?.try_mul(&u)?.try_mul(&v)?.try_mul(&u.try_sub(&v)?)?.try_sub(&big.one())?;
    let small = PolyRing::new(&k, &["n", "u", "v", "s"], MonomialOrder::Grevlex);
    let down = |g: &MultiPoly| g.rename_into(&small, &[0, 1, 2, 3, 0, 0, 0]);
    let eqs = vec![down(&at_p4(&f)?), down(&at_p4(&hess)?), down(&tangent), down(&guard)];
    let elim = elimination_ideal(&Ideal::new(&small, eqs)?, &["n", "u", "v"], budget)?;
    // s = 2 sqrt(-2)
    let root = k.gen().scale(&crate::arith::int(2));
    let consistent = elim.gens().iter().all(|g| g.eval(&[root.clone()]).is_zero());
    Ok(LongRunReport { eliminant: elim.gens().iter().map(|g| g.to_text()).collect(), consistent })
}
