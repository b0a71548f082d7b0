//! Rational maps of the plane: substitution with exceptional factors removed,
//! and implicitization of images by elimination.

use std::sync::Arc;

use super::{PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::ideals::{buchberger, Budget, Ideal};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};

/// Map given by homogeneous forms of one degree.
#[derive(Clone, Debug)]
pub struct ProjMap {
    components: Vec<MultiPoly>,
    degree: u32,
    pub base_locus: Option<Vec<ProjPoint>>,
}

impl ProjMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Degenerate("a map needs at least two components".into()));
        }
        let ring = components[0].ring().clone();
        let mut degree = None;
        for c in &components {
            if !c.same_ring(&ring.zero()) {
                return Err(Error::RingMismatch("map components".into()));
            }
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::Degenerate(format!("component {c} is not homogeneous")));
            }
            let d = c.total_degree().unwrap();
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::Degenerate("components of different degrees".into())),
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| Error::Degenerate("all components vanish".into()))?;
        Ok(ProjMap { components, degree, base_locus: None })
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.components[0].ring()
    }

    /// Image of a point, `None` if it is a base point.
    pub fn apply_point(&self, p: &ProjPoint) -> Option<Vec<crate::arith::NFElem>> {
        let v: Vec<_> = self.components.iter().map(|c| c.eval(p.coords())).collect();
        (!v.iter().all(|c| c.is_zero())).then_some(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ProjMap) -> Result<ProjMap> {
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(inner.components()))
            .collect::<Result<Vec<_>>>()?;
        ProjMap::new(comps)
    }
}

/// Result of pulling a curve back along a plane map.
#[derive(Clone, Debug)]
pub struct MapImage {
    pub curve: PlaneCurve,
    /// Degree of the substituted form before exceptional factors were removed.
    pub total_degree: u32,
    /// Multiplicity with which each exceptional form was divided out.
    pub removed: Vec<u32>,
}

/// Substitutes the map into the curve and divides out each exceptional form maximally.
pub fn apply_map(c: &PlaneCurve, map: &ProjMap, exceptional: &[MultiPoly]) -> Result<MapImage> {
    if map.components().len() != 3 {
        return Err(Error::Degenerate("plane maps need three components".into()));
    }
    let mut f = c.form().compose(map.components())?;
    if f.is_zero() {
        return Err(Error::Contracted);
    }
    let total_degree = f.total_degree().unwrap();
    let mut removed = Vec::new();
    for e in exceptional {
        let (g, k) = f.divide_out(e);
        f = g;
        removed.push(k);
    }
    if f.is_constant() {
        return Err(Error::Contracted);
    }
    Ok(MapImage { curve: PlaneCurve::new(f)?.monic(), total_degree, removed })
}

/// Homogeneous ideal of the closure of the image of `V(source)` (the whole
/// plane when `source` is empty), by eliminating the source variables from
/// `(source, T_i - map_i)`. The result lives in `target`.
pub fn image_ideal(
    map: &ProjMap,
    source: &[MultiPoly],
    target: &Arc<PolyRing>,
    budget: Budget,
) -> Result<Vec<MultiPoly>> {
    let src = map.ring().clone();
    let ns = src.nvars();
    let nt = map.components().len();
    if target.nvars() != nt || target.field() != src.field() {
        return Err(Error::RingMismatch("target ring does not fit the map".into()));
    }
    let mut names: Vec<String> = src.vars().to_vec();
    names.extend(target.vars().iter().map(|v| format!("{v}_")));
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let big = PolyRing::new(src.field(), &name_refs, MonomialOrder::Block(ns));
    let src_map: Vec<usize> = (0..ns).collect();
    let mut gens: Vec<MultiPoly> = source.iter().map(|f| f.rename_into(&big, &src_map)).collect();
    for (k, c) in map.components().iter().enumerate() {
        gens.push(&big.var(ns + k) - &c.rename_into(&big, &src_map));
    }
    let gb = buchberger(&Ideal::new(&big, gens)?, big.order(), budget)?;
    let back: Vec<usize> = (0..ns + nt).map(|i| i.saturating_sub(ns)).collect();
    Ok(gb
        .basis()
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= ns))
        .map(|g| g.rename_into(target, &back))
        .collect())
}

/// Implicit equation of the image of a plane curve under a map to the plane.
///
/// The equation `P` is certified by checking that the curve's form divides `P ∘ map`.
pub fn image_curve(map: &ProjMap, c: &PlaneCurve, target: &Arc<PolyRing>, budget: Budget) -> Result<PlaneCurve> {
    let gens = image_ideal(map, &[c.form().clone()], target, budget)?;
    match gens.as_slice() {
        [p] => {
            let img = PlaneCurve::new(p.clone())?.monic();
            let back = img.form().compose(map.components())?;
            if back.div_exact(c.form()).is_none() {
                return Err(Error::Inconsistent("image equation does not vanish on the curve".into()));
            }
            Ok(img)
        }
        [] => Err(Error::Degenerate("image is dense".into())),
        _ => Err(Error::Contracted),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::curves::tests::xyz;

    #[test]
    fn standard_cremona_on_a_line() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        let map = ProjMap::new(vec![r.parse("y*z").unwrap(), r.parse("x*z").unwrap(), r.parse("x*y").unwrap()])
            .unwrap();
        let l = PlaneCurve::parse("x + y + z", &r).unwrap();
        let img = apply_map(&l, &map, &r.vars_all()).unwrap();
        assert!(img.curve.same_curve(&PlaneCurve::parse("y*z + x*z + x*y", &r).unwrap()));
        assert_eq!(img.removed, vec![0, 0, 0]);
    }

    #[test]
    fn image_of_conic_under_veronese_projection() {
        let q = NumberField::rationals();
        let r = xyz(&q);
        // (x^2 : y^2 : z^2) sends the line x + y + z to the conic
        // X^2 + Y^2 + Z^2 - 2XY - 2YZ - 2XZ
        let map = ProjMap::new(vec![r.parse("x^2").unwrap(), r.parse("y^2").unwrap(), r.parse("z^2").unwrap()])
            .unwrap();
        let l = PlaneCurve::parse("x + y + z", &r).unwrap();
        let t = PolyRing::new(&q, &["X", "Y", "Z"], MonomialOrder::Grevlex);
        let img = image_curve(&map, &l, &t, Budget::default()).unwrap();
        assert!(img.same_curve(&PlaneCurve::parse("X^2+Y^2+Z^2-2*X*Y-2*Y*Z-2*X*Z", &t).unwrap()));
        let contracted = ProjMap::new(vec![r.parse("x").unwrap(), r.parse("x").unwrap(), r.parse("y").unwrap()])
            .unwrap();
        assert!(image_curve(&contracted, &PlaneCurve::parse("y", &r).unwrap(), &t, Budget::default()).is_err());
    }
}
