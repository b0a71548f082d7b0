//! Automorphisms `(x, y) -> (X(x), y Y(x))` of the curve `y^2 = x^5 - x`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{NFElem, NumberField};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, PolyRing, UniPoly};

/// Reduced quotient of univariate polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

fn constant(k: &Arc<NumberField>, c: NFElem) -> UniPoly {
    UniPoly::new(k, vec![c])
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = num.field().clone();
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree().unwrap_or(0) > 0 { (num.divrem(&g).0, den.divrem(&g).0) } else { (num, den) };
        let lc = d.leading_coeff().expect("nonzero").inv()?;
        n = n.mul(&constant(&k, lc.clone()));
        d = d.mul(&constant(&k, lc));
        Ok(RatFun { num: n, den: d })
    }

    /// Numerator and denominator in the variable `x`, in the syntax of the polynomial parser.
    pub fn parse(num: &str, den: &str, field: &Arc<NumberField>) -> Result<Self> {
        let ring = PolyRing::new(field, &["x"], MonomialOrder::Lex);
        Self::new(ring.parse(num)?.to_uni(0)?, ring.parse(den)?.to_uni(0)?)
    }

    pub fn poly(p: UniPoly) -> Self {
        let k = p.field().clone();
        RatFun { num: p, den: constant(&k, k.one()) }
    }

    pub fn x(k: &Arc<NumberField>) -> Self {
        Self::poly(UniPoly::new(k, vec![k.zero(), k.one()]))
    }

    pub fn constant(k: &Arc<NumberField>, c: NFElem) -> Self {
        Self::poly(constant(k, c))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.field(), self.field().one()), |acc, _| acc.mul(self))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &RatFun) -> Result<Self> {
        let ev = |p: &UniPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Self::constant(self.field(), self.field().zero()), |acc, c| {
                    acc.mul(inner).add(&Self::constant(self.field(), c.clone()))
                })
        };
        ev(&self.num).div(&ev(&self.den))
    }
}

/// `(x, y) -> (x(x), y * y(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAutomorphism {
    pub x: RatFun,
    pub y: RatFun,
}

fn curve_rhs(x: &RatFun) -> RatFun {
    x.pow(5).sub(x)
}

impl CurveAutomorphism {
    /// Certifies that the map preserves `y^2 = x^5 - x`.
    pub fn new(x: RatFun, y: RatFun) -> Result<Self> {
        let m = CurveAutomorphism { x, y };
        if !m.preserves() {
            return Err(Error::Inconsistent("map does not preserve y^2 = x^5 - x".into()));
        }
        Ok(m)
    }

    pub fn identity(k: &Arc<NumberField>) -> Self {
        CurveAutomorphism { x: RatFun::x(k), y: RatFun::constant(k, k.one()) }
    }

    /// `y'^2 - (x'^5 - x')` after substituting `y^2 = x^5 - x`.
    pub fn preserves(&self) -> bool {
        let k = self.x.field();
        let lhs = curve_rhs(&RatFun::x(k)).mul(&self.y.pow(2));
        lhs.sub(&curve_rhs(&self.x)).is_zero()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        Ok(CurveAutomorphism { x: other.x.compose(&self.x)?, y: self.y.mul(&other.y.compose(&self.x)?) })
    }

    pub fn is_identity(&self) -> bool {
        let k = self.x.field();
        *self == Self::identity(k)
    }

    pub fn order(&self, bound: u32) -> Result<Option<u32>> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Ok(Some(k));
            }
            p = p.then(self)?;
        }
        Ok(None)
    }

    /// `x`-coordinates of fixed points.
    pub fn fixed_x(&self) -> FixedX {
        let k = self.x.field().clone();
        let xp = UniPoly::new(&k, vec![k.zero(), k.one()]);
        let p = self.x.num.sub(&xp.mul(&self.x.den));
        if !p.is_zero() {
            let infinity = self.x.num.degree().unwrap_or(0) > self.x.den.degree().unwrap_or(0);
            return FixedX { roots: p.roots(), polynomial: p.monic(), infinity };
        }
        // x is fixed everywhere; the fixed points are where y Y(x) = y
        let one = RatFun::constant(&k, k.one());
        let q = self.y.sub(&one).num.clone();
        let w = curve_rhs(&RatFun::x(&k)).num;
        if q.is_zero() {
            return FixedX { roots: vec![], polynomial: UniPoly::new(&k, vec![]), infinity: true };
        }
        // y = 0 at the Weierstrass points, or Y(x) = 1
        let poly = w.mul(&q).squarefree_part();
        FixedX { roots: poly.roots(), polynomial: poly, infinity: true }
    }
}

#[derive(Clone, Debug)]
pub struct FixedX {
    pub roots: Vec<NFElem>,
    /// Monic polynomial cutting out the finite fixed `x` (zero when everything is fixed).
    pub polynomial: UniPoly,
    pub infinity: bool,
}

impl FixedX {
    /// No finite fixed `x` is a root of any of `polys`.
    pub fn avoids(&self, polys: &[UniPoly]) -> bool {
        self.roots.iter().all(|r| polys.iter().all(|p| !p.eval(r).is_zero()))
    }
}

impl Serialize for FixedX {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut v: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        if self.infinity {
            v.push("inf".into());
        }
        v.serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BolzaReport {
    pub preserves: bool,
    /// `None` when the order exceeds the bound.
    pub order: Option<u32>,
    pub fixed_x: FixedX,
}

/// Order bound: the automorphism group of the curve has 48 elements.
pub const ORDER_BOUND: u32 = 48;

pub fn bolza_check(m: &CurveAutomorphism) -> Result<BolzaReport> {
    Ok(BolzaReport { preserves: m.preserves(), order: m.order(ORDER_BOUND)?, fixed_x: m.fixed_x() })
}

/// The involution `v`, the order-three map `w` and the hyperelliptic involution over `Q(zeta_8)`,
/// where `i = t^2` and `sqrt(2) = t - t^3`.
///
/// The `y`-factors are the ones forced by `y^2 = x^5 - x`: `Y^2 = (X^5 - X)/(x^5 - x)`
/// equals `8/(ix+1)^6` for `v` and `64/((1-i)x+(1-i))^6` for `w`. The sign for `w`
/// is the one giving order three (the other sign gives order six).
pub fn bolza_maps() -> Result<[CurveAutomorphism; 3]> {
    let k = NumberField::cyclotomic8();
    let v = CurveAutomorphism::new(
        RatFun::parse("-(x + t^2)", "t^2*x + 1", &k)?,
        RatFun::parse("2*(t - t^3)", "(t^2*x + 1)^3", &k)?,
    )?;
    let w = CurveAutomorphism::new(
        RatFun::parse("(1 + t^2)*x - (1 + t^2)", "(1 - t^2)*x + (1 - t^2)", &k)?,
        RatFun::parse("-8", "((1 - t^2)*x + (1 - t^2))^3", &k)?,
    )?;
    let h = CurveAutomorphism::new(RatFun::x(&k), RatFun::constant(&k, k.from_int(-1)))?;
    Ok([v, w, h])
}
