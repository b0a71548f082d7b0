//! Intersection numbers on normal surfaces with cyclic quotient singularities.
//!
//! Curves are known only through numbers: self-intersection and canonical
//! degree on the singular surface, and the local intersections `u` of their
//! strict transforms with the exceptional curves of the minimal resolution.
//! Rational pullbacks follow Mumford: `p^*C = C~ + sum a_i E_i` with `a = M^-1 u`
//! and `M` minus the intersection matrix of the block.

mod hj;
mod quotient;

pub use hj::{hj_resolution, is_negative_definite, CycQuotSing, ResolutionChain};
pub use quotient::{quotient_invariants, weighted_bezout, BranchClass, QuotientData, QuotientInvariants};

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, Rat};
use crate::error::{Error, Result};

/// One exceptional chain of the minimal resolution.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalBlock {
    pub label: String,
    pub sing: CycQuotSing,
    pub chain: ResolutionChain,
    #[serde(skip)]
    matrix: Vec<Vec<Rat>>,
    #[serde(skip)]
    discrepancy: Vec<Rat>,
}

impl ExceptionalBlock {
    pub fn new(label: &str, sing: CycQuotSing) -> Result<Self> {
        let chain = hj_resolution(sing);
        let matrix = chain.intersection_matrix();
        if !is_negative_definite(&matrix) {
            return Err(Error::Inconsistent(format!("block {label} is not negative definite")));
        }
        let discrepancy = chain.discrepancies();
        Ok(ExceptionalBlock { label: label.to_string(), sing, chain, matrix, discrepancy })
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn discrepancy(&self) -> &[Rat] {
        &self.discrepancy
    }

    /// `a = M^-1 u`.
    pub fn pullback_coefficients(&self, u: &[Rat]) -> Vec<Rat> {
        let m: Vec<Vec<Rat>> = self.matrix.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        hj::solve(&m, u).expect("negative definite block")
    }

    /// `x^T E y` on the block.
    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * &self.matrix[i][j] * yj;
            }
        }
        s
    }
}

/// Numerical class `sum c_D p^*D + sum e_i E_i` on the resolution, where the
/// `D` are named divisors of the singular surface (`"K"` is the canonical class).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisorClass {
    #[serde(serialize_with = "crate::ser::named_rats")]
    pub pullback: Vec<(String, Rat)>,
    #[serde(serialize_with = "crate::ser::rat_rows")]
    pub exceptional: Vec<Vec<Rat>>,
}

impl DivisorClass {
    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        let mut pullback = self.pullback.clone();
        pullback.extend(other.pullback.iter().cloned());
        let exceptional = self
            .exceptional
            .iter()
            .zip(&other.exceptional)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        DivisorClass { pullback, exceptional }
    }

    pub fn scale(&self, c: &Rat) -> DivisorClass {
        DivisorClass {
            pullback: self.pullback.iter().map(|(n, x)| (n.clone(), x * c)).collect(),
            exceptional: self.exceptional.iter().map(|b| b.iter().map(|x| x * c).collect()).collect(),
        }
    }
}

/// Per-curve data recorded in a model.
#[derive(Clone, Debug, Serialize)]
pub struct ModelCurve {
    pub name: String,
    /// Local intersections of the strict transform with each exceptional curve, per block.
    pub u: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalSurfaceModel {
    pub blocks: Vec<ExceptionalBlock>,
    pub curves: Vec<ModelCurve>,
    /// Symmetric intersection numbers on the singular surface, keyed by sorted name pairs.
    #[serde(serialize_with = "ser_pairs")]
    pairs: BTreeMap<(String, String), Rat>,
}

fn ser_pairs<S: serde::Serializer>(p: &BTreeMap<(String, String), Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(p.len()))?;
    for ((a, b), v) in p {
        m.serialize_entry(&format!("{a}.{b}"), &crate::arith::fmt_rat(v))?;
    }
    m.end()
}

fn key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

fn to_rats(u: &[u32]) -> Vec<Rat> {
    u.iter().map(|&x| int(x as i64)).collect()
}

impl NormalSurfaceModel {
    pub fn new(blocks: Vec<ExceptionalBlock>) -> Self {
        NormalSurfaceModel { blocks, curves: Vec::new(), pairs: BTreeMap::new() }
    }

    pub fn block_index(&self, label: &str) -> Result<usize> {
        self.blocks
            .iter()
            .position(|b| b.label == label)
            .ok_or_else(|| Error::Missing(format!("block {label}")))
    }

    pub fn set_pair(&mut self, a: &str, b: &str, value: Rat) {
        self.pairs.insert(key(a, b), value);
    }

    pub fn pair(&self, a: &str, b: &str) -> Result<Rat> {
        self.pairs.get(&key(a, b)).cloned().ok_or_else(|| Error::Missing(format!("{a}.{b}")))
    }

    /// `K^2` of the singular surface from `K_Z^2 = K^2 + sum d^T E d`.
    pub fn set_resolved_k_sq(&mut self, kz_sq: Rat) {
        let corr: Rat = self.blocks.iter().map(|b| b.pair(&b.discrepancy, &b.discrepancy)).sum();
        self.set_pair("K", "K", kz_sq - corr);
    }

    /// `K_Z^2` of the minimal resolution.
    pub fn resolved_k_sq(&self) -> Result<Rat> {
        let corr: Rat = self.blocks.iter().map(|b| b.pair(&b.discrepancy, &b.discrepancy)).sum();
        Ok(self.pair("K", "K")? + corr)
    }

    /// Euler number of the resolution: each point is replaced by a chain of `l` rational curves.
    pub fn resolved_euler(&self, e: i64) -> i64 {
        e + self.blocks.iter().map(|b| b.chain.len() as i64).sum::<i64>()
    }

    fn u_rats(&self, u: &[Vec<u32>]) -> Vec<Vec<Rat>> {
        (0..self.blocks.len()).map(|k| u.get(k).map(|v| to_rats(v)).unwrap_or_default()).collect()
    }

    fn check_u(&self, u: &[Vec<u32>]) -> Result<()> {
        if u.len() != self.blocks.len() || u.iter().zip(&self.blocks).any(|(v, b)| v.len() != b.chain.len()) {
            return Err(Error::Inconsistent("u-vector shape does not match the exceptional blocks".into()));
        }
        Ok(())
    }

    /// `sum_blocks u^T M^-1 v`.
    fn correction(&self, u: &[Vec<u32>], v: &[Vec<u32>]) -> Rat {
        let (u, v) = (self.u_rats(u), self.u_rats(v));
        self.blocks
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let a = b.pullback_coefficients(&u[k]);
                a.iter().zip(&v[k]).map(|(x, y)| x * y).sum::<Rat>()
            })
            .sum()
    }

    /// `sum_blocks d^T u`: change of canonical degree between strict transform and curve.
    fn k_correction(&self, u: &[Vec<u32>]) -> Rat {
        let u = self.u_rats(u);
        self.blocks
            .iter()
            .enumerate()
            .map(|(k, b)| b.discrepancy.iter().zip(&u[k]).map(|(d, x)| d * x).sum::<Rat>())
            .sum()
    }

    /// Adds a curve known by its numbers on the singular surface.
    pub fn add_curve(&mut self, name: &str, self_int: Rat, k_deg: Rat, u: Vec<Vec<u32>>) -> Result<()> {
        self.check_u(&u)?;
        self.set_pair(name, name, self_int);
        self.set_pair("K", name, k_deg);
        self.curves.push(ModelCurve { name: name.to_string(), u });
        Ok(())
    }

    /// Adds a smooth curve of genus `g` known by its strict transform on the resolution.
    pub fn add_resolved_curve(&mut self, name: &str, resolved_sq: i64, genus: i64, u: Vec<Vec<u32>>) -> Result<()> {
        self.check_u(&u)?;
        let kz = int(2 * genus - 2 - resolved_sq);
        let self_int = int(resolved_sq) + self.correction(&u, &u);
        let k_deg = kz - self.k_correction(&u);
        self.add_curve(name, self_int, k_deg, u)
    }

    /// Records `C~ . D~` on the resolution, stored as the Mumford number `C . D`.
    pub fn set_resolved_pair(&mut self, a: &str, b: &str, value: i64) -> Result<()> {
        let ua = self.curve(a)?.u.clone();
        let ub = self.curve(b)?.u.clone();
        let v = int(value) + self.correction(&ua, &ub);
        self.set_pair(a, b, v);
        Ok(())
    }

    pub fn curve(&self, name: &str) -> Result<&ModelCurve> {
        self.curves.iter().find(|c| c.name == name).ok_or_else(|| Error::Missing(format!("curve {name}")))
    }

    /// Class of the strict transform of a named curve.
    pub fn strict_transform(&self, name: &str) -> Result<DivisorClass> {
        let u = self.curve(name)?.u.clone();
        Ok(mumford_pullback(self, name, &u))
    }

    pub fn zero_exceptional(&self) -> Vec<Vec<Rat>> {
        self.blocks.iter().map(|b| vec![Rat::zero(); b.chain.len()]).collect()
    }

    pub fn pullback_of(&self, name: &str) -> DivisorClass {
        DivisorClass { pullback: vec![(name.to_string(), Rat::one())], exceptional: self.zero_exceptional() }
    }
}

/// Strict transform `p^*C - sum a_i E_i` of a curve meeting the exceptional curves with multiplicities `u`.
pub fn mumford_pullback(model: &NormalSurfaceModel, curve: &str, u: &[Vec<u32>]) -> DivisorClass {
    let u = model.u_rats(u);
    let exceptional = model
        .blocks
        .iter()
        .enumerate()
        .map(|(k, b)| b.pullback_coefficients(&u[k]).into_iter().map(|a| -a).collect())
        .collect();
    DivisorClass { pullback: vec![(curve.to_string(), Rat::one())], exceptional }
}

/// `K_Z = p^*K + sum d_i E_i`.
pub fn canonical_class(model: &NormalSurfaceModel) -> DivisorClass {
    DivisorClass {
        pullback: vec![("K".to_string(), Rat::one())],
        exceptional: model.blocks.iter().map(|b| b.discrepancy.clone()).collect(),
    }
}

/// Intersection number of two classes on the resolution.
pub fn mumford_intersect(model: &NormalSurfaceModel, x: &DivisorClass, y: &DivisorClass) -> Result<Rat> {
    let mut s = Rat::zero();
    for (a, ca) in &x.pullback {
        for (b, cb) in &y.pullback {
            s += ca * cb * model.pair(a, b)?;
        }
    }
    for (k, b) in model.blocks.iter().enumerate() {
        s += b.pair(&x.exceptional[k], &y.exceptional[k]);
    }
    Ok(s)
}

/// Numbers of a curve on the singular surface, for an adjunction search.
#[derive(Clone, Debug)]
pub struct CurveData {
    pub self_int: Rat,
    pub k_deg: Rat,
    /// Blocks the curve may pass through.
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjunctionSolution {
    pub u: Vec<Vec<u32>>,
    #[serde(serialize_with = "crate::ser::rat")]
    pub self_int: Rat,
    #[serde(serialize_with = "crate::ser::rat")]
    pub k_deg: Rat,
}

/// All `u` with `sum u <= bound` for which the strict transform is a smooth
/// rational curve: integral numbers and `K_Z . C~ + C~^2 = -2`.
pub fn adjunction_search(model: &NormalSurfaceModel, data: &CurveData, bound: u32) -> Vec<AdjunctionSolution> {
    let slots: Vec<(usize, usize)> = data
        .blocks
        .iter()
        .flat_map(|&k| (0..model.blocks[k].chain.len()).map(move |i| (k, i)))
        .collect();
    let mut out = Vec::new();
    let mut vals = vec![0u32; slots.len()];
    loop {
        let mut u: Vec<Vec<u32>> = model.blocks.iter().map(|b| vec![0; b.chain.len()]).collect();
        for (&(k, i), &v) in slots.iter().zip(&vals) {
            u[k][i] = v;
        }
        let self_int = &data.self_int - model.correction(&u, &u);
        let k_deg = &data.k_deg + model.k_correction(&u);
        if self_int.is_integer() && k_deg.is_integer() && &self_int + &k_deg == int(-2) {
            out.push(AdjunctionSolution { u, self_int, k_deg });
        }
        // next vector with coordinate sum <= bound
        let mut i = 0;
        loop {
            if i == vals.len() {
                return out;
            }
            vals[i] += 1;
            if vals.iter().sum::<u32>() <= bound {
                break;
            }
            vals[i] = 0;
            i += 1;
        }
    }
}
