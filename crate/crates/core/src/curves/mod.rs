//! Plane projective curves over a number field.

mod flex;
mod fulton;
mod incidence;
mod linsys;
mod maps;
mod singular;

pub use flex::{flexes, hessian, restrict_to_line, Flex, FlexSet, LineRestriction};
pub use fulton::{intersection_multiplicity, local_intersection, Mult};
pub use incidence::{bezout_audit, incidence_table, intersection_points, BezoutAudit, IncidenceTable};
pub use linsys::{linear_system, Condition, LinearSystem, LinearSystemSpec};
pub use maps::{apply_map, image_curve, image_ideal, MapImage, ProjMap};
pub use singular::{classify, milnor_number, singular_points, SingularLocus, SingularityLabel, SingularityReport};

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{NFElem, NumberField};
use crate::error::{Error, Result};
use crate::ideals::{solve_zero_dim, Budget, Ideal};
use crate::poly::{parse_element, MonomialOrder, MultiPoly, PolyRing, UniPoly};

/// Point of the projective plane, scaled so the last nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: [NFElem; 3],
}

impl ProjPoint {
    pub fn new(coords: [NFElem; 3]) -> Result<Self> {
        let k = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or_else(|| Error::Degenerate("all coordinates zero".into()))?;
        let inv = coords[k].inv()?;
        Ok(ProjPoint { coords: coords.map(|c| &c * &inv) })
    }

    pub fn from_ints(field: &Arc<NumberField>, c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(|n| field.from_int(n)))
    }

    /// Parses `"(a : b : c)"`, `"[a:b:c]"` or `"a, b, c"`.
    pub fn parse(text: &str, field: &Arc<NumberField>) -> Result<Self> {
        let inner = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let sep = if inner.contains(':') { ':' } else { ',' };
        let parts: Vec<&str> = inner.split(sep).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Syntax { offset: 0, message: format!("expected three coordinates in {text:?}") });
        };
        Self::new([parse_element(a, field)?, parse_element(b, field)?, parse_element(c, field)?])
    }

    pub fn coords(&self) -> &[NFElem; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.coords[0].field()
    }

    /// Index of the coordinate that is normalized to 1.
    pub fn chart(&self) -> usize {
        self.coords.iter().rposition(|c| !c.is_zero()).unwrap()
    }

    pub fn to_text(&self) -> String {
        format!("({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }

    /// Cross product: the line through two distinct points.
    pub fn line_through(&self, other: &ProjPoint, ring: &Arc<PolyRing>) -> Result<PlaneCurve> {
        let (a, b) = (&self.coords, &other.coords);
        let l = [
            &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
            &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
            &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
        ];
        if l.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("points coincide".into()));
        }
        PlaneCurve::new(linear_form(ring, &l))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

pub(crate) fn linear_form(ring: &Arc<PolyRing>, l: &[NFElem; 3]) -> MultiPoly {
    (0..3).fold(ring.zero(), |acc, i| &acc + &ring.var(i).scale(&l[i]))
}

/// Homogeneous nonzero form in a three-variable ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    form: MultiPoly,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(form: MultiPoly) -> Result<Self> {
        if form.ring().nvars() != 3 {
            return Err(Error::RingMismatch("plane curves need three variables".into()));
        }
        if form.is_zero() {
            return Err(Error::Degenerate("zero form".into()));
        }
        if !form.is_homogeneous() {
            return Err(Error::Degenerate(format!("form is not homogeneous: {form}")));
        }
        let degree = form.total_degree().unwrap();
        if degree == 0 {
            return Err(Error::Degenerate("constant form".into()));
        }
        Ok(PlaneCurve { form, degree })
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Self> {
        Self::new(ring.parse(text)?)
    }

    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.form.ring()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.form.field()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form.eval(p.coords()).is_zero()
    }

    /// Local affine equation at `p`, in the ring [`local_ring`], with `p` at the origin.
    pub fn local_equation(&self, p: &ProjPoint) -> MultiPoly {
        local_at(&self.form, p)
    }

    /// Order of vanishing at `p`.
    pub fn multiplicity_at(&self, p: &ProjPoint) -> Result<u32> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        Ok(lowest_degree(&self.local_equation(p)))
    }

    /// Lowest-degree part of the local equation, as a projective form vanishing at `p`.
    pub fn tangent_cone(&self, p: &ProjPoint) -> Result<MultiPoly> {
        let m = self.multiplicity_at(p)?;
        let f = self.local_equation(p);
        let lr = f.ring().clone();
        let cone = lr.from_terms(f.terms().iter().filter(|(mm, _)| mm.degree() == m).cloned());
        cone.compose(&chart_coordinates(self.ring(), p))
    }

    pub fn is_singular_at(&self, p: &ProjPoint) -> bool {
        self.contains(p) && self.form.jacobian().iter().all(|d| d.eval(p.coords()).is_zero())
    }

    /// Tangent line at a smooth point.
    pub fn tangent_line(&self, p: &ProjPoint) -> Result<PlaneCurve> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let g: Vec<NFElem> = self.form.jacobian().iter().map(|d| d.eval(p.coords())).collect();
        if g.iter().all(|c| c.is_zero()) {
            return Err(Error::SingularPoint);
        }
        PlaneCurve::new(linear_form(self.ring(), &[g[0].clone(), g[1].clone(), g[2].clone()]))
    }

    /// Same curve with the form scaled to leading coefficient 1.
    pub fn monic(&self) -> PlaneCurve {
        PlaneCurve { form: self.form.monic(), degree: self.degree }
    }

    /// True if the two forms are proportional.
    pub fn same_curve(&self, other: &PlaneCurve) -> bool {
        self.form.monic() == other.form.monic()
    }
}

/// Ring `K[u, v]` used for local equations.
pub fn local_ring(field: &Arc<NumberField>) -> Arc<PolyRing> {
    PolyRing::new(field, &["u", "v"], MonomialOrder::Grevlex)
}

pub(crate) fn local_at(f: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    let lr = local_ring(f.field());
    let (u, v) = (lr.var(0), lr.var(1));
    let c = p.coords();
    let k = |e: &NFElem| lr.constant(e.clone());
    let images = match p.chart() {
        2 => vec![&k(&c[0]) + &u, &k(&c[1]) + &v, lr.one()],
        1 => vec![&k(&c[0]) + &u, lr.one(), v],
        _ => vec![lr.one(), u, v],
    };
    f.compose(&images).expect("same field")
}

/// Linear forms that become the local coordinates `u, v` in the chart of `p`.
pub(crate) fn chart_coordinates(ring: &Arc<PolyRing>, p: &ProjPoint) -> Vec<MultiPoly> {
    let (x, y, z) = (ring.var(0), ring.var(1), ring.var(2));
    let c = p.coords();
    match p.chart() {
        2 => vec![&x - &z.scale(&c[0]), &y - &z.scale(&c[1])],
        1 => vec![&x - &y.scale(&c[0]), z],
        _ => vec![y, z],
    }
}

pub(crate) fn lowest_degree(f: &MultiPoly) -> u32 {
    f.terms().iter().map(|(m, _)| m.degree()).min().unwrap_or(u32::MAX)
}

/// Points of the plane in the working field plus unresolved factors.
#[derive(Clone, Debug, Default)]
pub struct PointSet {
    pub points: Vec<ProjPoint>,
    /// Descriptions of univariate factors without roots in the field.
    pub residual: Vec<String>,
    /// Degrees of those factors.
    pub residual_degree: usize,
}

/// Common zeros of homogeneous forms in three variables.
///
/// Fails with [`Error::NotZeroDimensional`] if the forms share a curve.
pub fn common_points(forms: &[MultiPoly], budget: Budget) -> Result<PointSet> {
    let ring = forms[0].ring().clone();
    let field = ring.field().clone();
    let names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let mut out = PointSet::default();

    // chart z = 1
    let r2 = PolyRing::new(&field, &names[..2], MonomialOrder::Lex);
    let img = vec![r2.var(0), r2.var(1), r2.one()];
    let aff: Vec<MultiPoly> = forms.iter().map(|f| f.compose(&img)).collect::<Result<_>>()?;
    let sol = solve_zero_dim(&Ideal::new(&r2, aff)?, budget)?;
    for p in sol.points {
        out.points.push(ProjPoint::new([p[0].clone(), p[1].clone(), field.one()])?);
    }
    for (v, u, fixed) in &sol.residual {
        out.residual.push(format!("{v}: {u:?} over {fixed:?} (z = 1)"));
        out.residual_degree += u.degree().unwrap_or(0);
    }

    // line z = 0, chart y = 1
    let r1 = PolyRing::new(&field, &names[..1], MonomialOrder::Lex);
    let img = vec![r1.var(0), r1.one(), r1.zero()];
    let mut g = UniPoly::new(&field, vec![]);
    for f in forms {
        g = g.gcd(&f.compose(&img)?.to_uni(0)?);
    }
    if g.is_zero() {
        return Err(Error::NotZeroDimensional("forms share the line z = 0".into()));
    }
    let g = g.squarefree_part();
    let roots = g.roots();
    let mut rest = g.clone();
    for r in &roots {
        rest = rest.divrem(&UniPoly::new(&field, vec![-r, field.one()])).0;
        out.points.push(ProjPoint::new([r.clone(), field.one(), field.zero()])?);
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.residual.push(format!("{}: {rest:?} (z = 0)", names[0]));
        out.residual_degree += rest.degree().unwrap();
    }

    let corner = [field.one(), field.zero(), field.zero()];
    if forms.iter().all(|f| f.eval(&corner).is_zero()) {
        out.points.push(ProjPoint::new(corner)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn xyz(field: &Arc<NumberField>) -> Arc<PolyRing> {
        PolyRing::new(field, &["x", "y", "z"], MonomialOrder::Grevlex)
    }

    #[test]
    fn multiplicities_and_cones() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let p2 = ProjPoint::from_ints(&q, [0, 1, 1]).unwrap();
        let a = PlaneCurve::parse("(x^2+x*y+y^2-x*z-y*z)^2", &r).unwrap();
        let b = PlaneCurve::parse("x*y*(x+y-z)^2", &r).unwrap();
        assert_eq!(a.multiplicity_at(&p2).unwrap(), 2);
        assert_eq!(b.multiplicity_at(&p2).unwrap(), 3);
        let f = PlaneCurve::parse("(x^2+x*y+y^2-x*z-y*z)^2 - 8*x*y*(x+y-z)^2", &r).unwrap();
        let cone = f.tangent_cone(&p2).unwrap();
        assert_eq!(cone.monic(), r.parse("(y-z)^2").unwrap().monic());
        let off = ProjPoint::from_ints(&q, [1, 1, 1]).unwrap();
        assert_eq!(f.multiplicity_at(&off), Err(Error::NotOnCurve));
    }

    #[test]
    fn points_in_all_charts() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        // three lines meeting the line z = 0 and the corner
        let f = r.parse("x*y*z").unwrap();
        let g = r.parse("x + y + z").unwrap();
        let s = common_points(&[f, g], Budget::default()).unwrap();
        assert_eq!(s.points.len(), 3);
        assert!(s.points.contains(&ProjPoint::from_ints(&q, [1, -1, 0]).unwrap()));
        assert!(s.points.contains(&ProjPoint::from_ints(&q, [0, -1, 1]).unwrap()));
    }

    #[test]
    fn line_through_points() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let a = ProjPoint::from_ints(&q, [1, 0, 0]).unwrap();
        let b = ProjPoint::from_ints(&q, [0, 1, 0]).unwrap();
        let l = a.line_through(&b, &r).unwrap();
        assert!(l.same_curve(&PlaneCurve::parse("z", &r).unwrap()));
    }
}
