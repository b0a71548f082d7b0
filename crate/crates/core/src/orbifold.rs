//! Orbifold Chern numbers of a pair `(W, Delta)` and the
//! Bogomolov–Miyaoka–Yau equality `c1^2 = 3 c2`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, Rat};
use crate::error::{Error, Result};
use crate::surfaces::{mumford_intersect, DivisorClass, NormalSurfaceModel};

/// Branch weight of a component or isotropy order of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    /// `1 - 1/m`, equal to 1 for an infinite weight.
    pub fn coefficient(self) -> Rat {
        match self {
            Weight::Finite(m) => Rat::one() - Rat::new(1.into(), (m as i64).into()),
            Weight::Infinite => Rat::one(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(m) => write!(f, "{m}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbifoldComponent {
    pub curve: String,
    pub weight: Weight,
    /// Euler number of the component minus the special points.
    pub open_euler: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbifoldPoint {
    pub name: String,
    pub beta: Option<Weight>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbifoldSurface {
    pub model: NormalSurfaceModel,
    pub euler: i64,
    pub components: Vec<OrbifoldComponent>,
    pub points: Vec<OrbifoldPoint>,
}

impl OrbifoldSurface {
    pub fn new(
        model: NormalSurfaceModel,
        euler: i64,
        components: Vec<OrbifoldComponent>,
        points: Vec<OrbifoldPoint>,
    ) -> Result<Self> {
        for c in &components {
            if matches!(c.weight, Weight::Finite(m) if m < 2) {
                return Err(Error::Degenerate(format!("weight of {} must be at least 2", c.curve)));
            }
            model.curve(&c.curve)?;
        }
        Ok(OrbifoldSurface { model, euler, components, points })
    }

    /// Mumford pullback of `K_W + Delta`.
    pub fn log_canonical(&self) -> DivisorClass {
        let mut d = self.model.pullback_of("K");
        for c in &self.components {
            d = d.add(&self.model.pullback_of(&c.curve).scale(&c.weight.coefficient()));
        }
        d
    }

    /// Same surface with one component's weight replaced.
    pub fn with_weight(&self, curve: &str, weight: Weight) -> Result<Self> {
        let mut o = self.clone();
        let c = o
            .components
            .iter_mut()
            .find(|c| c.curve == curve)
            .ok_or_else(|| Error::Missing(format!("component {curve}")))?;
        c.weight = weight;
        Ok(o)
    }
}

/// `e(W) - sum (1 - 1/m_i) e(C_i minus S) - sum_p (1 - 1/beta(p))`.
pub fn orb_c2(o: &OrbifoldSurface) -> Result<Rat> {
    let mut c2 = int(o.euler);
    for c in &o.components {
        c2 -= c.weight.coefficient() * int(c.open_euler);
    }
    for p in &o.points {
        let beta = p.beta.ok_or_else(|| Error::Missing(format!("isotropy order at {}", p.name)))?;
        c2 -= beta.coefficient();
    }
    Ok(c2)
}

/// `(K_W + Delta)^2`.
pub fn orb_c1sq(o: &OrbifoldSurface) -> Result<Rat> {
    let d = o.log_canonical();
    mumford_intersect(&o.model, &d, &d)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BmyReport {
    #[serde(serialize_with = "crate::ser::rat")]
    pub c1sq: Rat,
    #[serde(serialize_with = "crate::ser::rat")]
    pub c2: Rat,
    /// `3 c2 - c1^2`.
    #[serde(serialize_with = "crate::ser::rat")]
    pub slack: Rat,
    pub equality: bool,
}

pub fn bmy_check(o: &OrbifoldSurface) -> Result<BmyReport> {
    let c1sq = orb_c1sq(o)?;
    let c2 = orb_c2(o)?;
    let slack = int(3) * &c2 - &c1sq;
    let equality = slack.is_zero();
    Ok(BmyReport { c1sq, c2, slack, equality })
}
