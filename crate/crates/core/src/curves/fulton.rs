//! Local intersection numbers by Fulton's algorithm.

use serde::Serialize;

use super::{PlaneCurve, ProjPoint};
use crate::arith::NFElem;
use crate::poly::{Monomial, MultiPoly};

/// Intersection multiplicity; `Infinite` when the curves share a component through the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mult {
    Finite(u32),
    Infinite,
}

impl Mult {
    pub fn finite(self) -> Option<u32> {
        match self {
            Mult::Finite(n) => Some(n),
            Mult::Infinite => None,
        }
    }
}

impl Serialize for Mult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Mult::Finite(n) => s.serialize_u32(*n),
            Mult::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl std::ops::Add for Mult {
    type Output = Mult;
    fn add(self, o: Mult) -> Mult {
        match (self, o) {
            (Mult::Finite(a), Mult::Finite(b)) => Mult::Finite(a + b),
            _ => Mult::Infinite,
        }
    }
}

pub fn intersection_multiplicity(c: &PlaneCurve, d: &PlaneCurve, p: &ProjPoint) -> Mult {
    local_intersection(&c.local_equation(p), &d.local_equation(p))
}

fn restrict_v0(f: &MultiPoly) -> MultiPoly {
    f.coeffs_in(1).into_iter().next().unwrap_or_else(|| f.ring().zero())
}

fn lowest_u_power(f0: &MultiPoly) -> u32 {
    f0.terms().iter().map(|(m, _)| m.exps()[0]).min().unwrap()
}

/// `I_0(f, g)` for polynomials in two variables `(u, v)`.
///
/// A common component through the origin makes the reduction below run
/// forever; it is detected by the count passing `deg f * deg g`, which bounds
/// `I_0` once factors that are units at the origin are divided out.
pub fn local_intersection(f: &MultiPoly, g: &MultiPoly) -> Mult {
    let zero = |h: &MultiPoly| h.ring().vars().iter().map(|_| h.field().zero()).collect::<Vec<_>>();
    let bound = f.total_degree().unwrap_or(0) * g.total_degree().unwrap_or(0);
    let mut f = f.clone();
    let mut g = g.clone();
    let mut acc = 0u32;
    let v = f.ring().var(1);
    loop {
        if f.is_zero() || g.is_zero() {
            return Mult::Infinite;
        }
        let origin = zero(&f);
        if !f.eval(&origin).is_zero() || !g.eval(&origin).is_zero() {
            return Mult::Finite(acc);
        }
        if acc > bound {
            return Mult::Infinite;
        }
        let f0 = restrict_v0(&f);
        let g0 = restrict_v0(&g);
        match (f0.is_zero(), g0.is_zero()) {
            (true, true) => return Mult::Infinite,
            (false, true) => {
                // g = v h: I(f, g) = I(f, v) + I(f, h)
                acc += lowest_u_power(&f0);
                g = g.div_exact(&v).expect("v divides g");
            }
            (true, false) => {
                acc += lowest_u_power(&g0);
                f = f.div_exact(&v).expect("v divides f");
            }
            (false, false) => {
                let r = f0.degree_in(0).unwrap();
                let s = g0.degree_in(0).unwrap();
                if r > s {
                    std::mem::swap(&mut f, &mut g);
                    continue;
                }
                // lower the u-degree of g(u, 0) using f
                let lf = lead_in_u(&f0);
                let lg = lead_in_u(&g0);
                let c = &lg * &lf.inv().expect("nonzero");
                let shift = Monomial::from_exps(&[s - r, 0]);
                g = &g - &f.mul_term(&shift, &c);
            }
        }
    }
}

fn lead_in_u(f0: &MultiPoly) -> NFElem {
    let d = f0.degree_in(0).unwrap();
    f0.terms().iter().find(|(m, _)| m.exps()[0] == d).unwrap().1.clone()
}
