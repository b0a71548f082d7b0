//! Finite matrix groups over number fields, their reflections and invariants,
//! and automorphisms of the genus two curve `y^2 = x^5 - x`.

mod bolza;
mod invariants;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{NFElem, NumberField};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::parse_element;
use crate::poly::{MultiPoly, PolyRing};

pub use bolza::{bolza_check, bolza_maps, BolzaReport, CurveAutomorphism, FixedX, RatFun, ORDER_BOUND};
pub use invariants::{
    fundamental_invariants, invariant_relations, is_invariant, mirror_image_cusp_check, molien_series,
    quadratic_singularity_rank, reynolds, reynolds_invariants, MirrorImageReport, DEGREE_BOUND,
};

/// Square matrix with number-field entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NFMatrix {
    n: usize,
    entries: Vec<NFElem>,
}

impl fmt::Debug for NFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for NFMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl NFMatrix {
    pub fn new(rows: Matrix) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Degenerate("matrix must be square and nonempty".into()));
        }
        let field = rows[0][0].field().clone();
        if rows.iter().flatten().any(|e| e.field() != &field) {
            return Err(Error::FieldMismatch("matrix entries".into()));
        }
        Ok(NFMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Entries in the field-element syntax of the polynomial parser.
    pub fn parse(rows: &[&[&str]], field: &Arc<NumberField>) -> Result<Self> {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|e| parse_element(e, field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        Self::new(m)
    }

    pub fn identity(field: &Arc<NumberField>, n: usize) -> Self {
        Self::new(linalg::identity(n, field)).expect("n > 0")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.entries[0].field()
    }

    pub fn entry(&self, i: usize, j: usize) -> &NFElem {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Matrix {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &NFMatrix) -> NFMatrix {
        NFMatrix::new(linalg::mat_mul(&self.rows(), &o.rows(), self.field())).expect("same size")
    }

    pub fn det(&self) -> NFElem {
        linalg::det(&self.rows(), self.field())
    }

    pub fn trace(&self) -> NFElem {
        (0..self.n).fold(self.field().zero(), |acc, i| &acc + self.entry(i, i))
    }

    pub fn inverse(&self) -> Result<NFMatrix> {
        let inv = linalg::inverse(&self.rows(), self.field()).ok_or(Error::DivisionByZero)?;
        NFMatrix::new(inv)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.entry(i, j).is_one() } else { self.entry(i, j).is_zero() }))
    }

    /// `self - I`.
    fn minus_identity(&self) -> Matrix {
        let mut m = self.rows();
        for (i, r) in m.iter_mut().enumerate() {
            r[i] = &r[i] - &self.field().one();
        }
        m
    }

    /// Image of a polynomial under the substitution `x_i -> sum_j m_ij x_j`, i.e. `f(m x)`.
    pub fn act(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let ring = f.ring();
        if ring.nvars() != self.n {
            return Err(Error::RingMismatch(format!("{} variables for a {}x{} matrix", ring.nvars(), self.n, self.n)));
        }
        let images: Vec<MultiPoly> = (0..self.n)
            .map(|i| ring.from_terms((0..self.n).map(|j| (crate::poly::Monomial::var(self.n, j), self.entry(i, j).clone()))))
            .collect();
        f.compose(&images)
    }
}

/// Least `k >= 1` with `m^k = I`, if at most `bound`.
pub fn element_order(m: &NFMatrix, bound: u32) -> Option<u32> {
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// A finite group given by generators and its enumerated elements.
#[derive(Clone, Debug, Serialize)]
pub struct MatGroup {
    pub generators: Vec<NFMatrix>,
    elements: Vec<NFMatrix>,
}

/// Breadth-first closure; fails once more than `bound` elements are found.
pub fn closure(gens: &[NFMatrix], bound: usize) -> Result<MatGroup> {
    if bound == 0 {
        return Err(Error::Degenerate("closure bound must be positive".into()));
    }
    let first = gens.first().ok_or_else(|| Error::Degenerate("no generators".into()))?;
    if gens.iter().any(|g| g.size() != first.size() || g.field() != first.field()) {
        return Err(Error::Degenerate("generators of different shapes".into()));
    }
    let id = NFMatrix::identity(first.field(), first.size());
    let mut index: HashMap<NFMatrix, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let h = elements[i].mul(g);
            if !index.contains_key(&h) {
                if elements.len() == bound {
                    return Err(Error::Budget(format!("group has more than {bound} elements")));
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
    }
    Ok(MatGroup { generators: gens.to_vec(), elements })
}

impl MatGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements, identity first.
    pub fn elements(&self) -> &[NFMatrix] {
        &self.elements
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.elements[0].field()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].size()
    }

    pub fn contains(&self, m: &NFMatrix) -> bool {
        self.elements.contains(m)
    }

    pub fn order_of(&self, m: &NFMatrix) -> Result<u32> {
        element_order(m, self.order() as u32).ok_or_else(|| Error::Degenerate(format!("{m} has no finite order in the group")))
    }
}

/// Witness `(r, s)` of `<r, s | r^8, s^2, s r s^-1 = r^3>` for a group of order 16.
#[derive(Clone, Debug, Serialize)]
pub struct SemidihedralWitness {
    pub r: NFMatrix,
    pub s: NFMatrix,
}

pub fn presentation_semidihedral(g: &MatGroup) -> Option<SemidihedralWitness> {
    if g.order() != 16 {
        return None;
    }
    let orders: Vec<u32> = g.elements().iter().map(|m| element_order(m, 16).unwrap_or(0)).collect();
    for (r, _) in g.elements().iter().zip(&orders).filter(|(_, &o)| o == 8) {
        let r3 = r.mul(r).mul(r);
        for (s, _) in g.elements().iter().zip(&orders).filter(|(_, &o)| o == 2) {
            // s^-1 = s
            if s.mul(r).mul(s) == r3 {
                return Some(SemidihedralWitness { r: r.clone(), s: s.clone() });
            }
        }
    }
    None
}

/// Fixed hyperplane of a reflection.
#[derive(Clone, Debug, Serialize)]
pub struct Mirror {
    pub reflection: NFMatrix,
    /// Spanning vectors of the fixed space.
    pub fixed: Vec<Vec<NFElem>>,
    /// Linear form vanishing on the mirror, monic.
    pub form: MultiPoly,
}

/// Mirrors of the order-two reflections (eigenvalues `1, ..., 1, -1`), deduplicated.
pub fn mirrors(g: &MatGroup, ring: &Arc<PolyRing>) -> Result<Vec<Mirror>> {
    let n = g.dim();
    if ring.nvars() != n {
        return Err(Error::RingMismatch("ring does not match the group dimension".into()));
    }
    let mut out: Vec<Mirror> = Vec::new();
    for m in g.elements() {
        if m.is_identity() || !m.mul(m).is_identity() {
            continue;
        }
        let a = m.minus_identity();
        if linalg::rank(&a) != 1 {
            continue;
        }
        let row = a.iter().find(|r| r.iter().any(|e| !e.is_zero())).expect("rank one");
        let form = ring
            .from_terms(row.iter().enumerate().map(|(j, c)| (crate::poly::Monomial::var(n, j), c.clone())))
            .monic();
        if out.iter().any(|o| o.form == form) {
            continue;
        }
        let fixed = linalg::kernel(&a, n, g.field());
        out.push(Mirror { reflection: m.clone(), fixed, form });
    }
    Ok(out)
}

/// The generators `g1`, `g2` of the semidihedral group over `Q(zeta_8)`.
pub fn sd16_generators() -> [NFMatrix; 2] {
    let k = NumberField::cyclotomic8();
    [
        NFMatrix::parse(&[&["0", "-t"], &["-t^3", "0"]], &k).expect("literal"),
        NFMatrix::parse(&[&["0", "1"], &["1", "0"]], &k).expect("literal"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    #[test]
    fn semidihedral_group() {
        let [g1, g2] = sd16_generators();
        let g = closure(&[g1.clone(), g2.clone()], 64).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(element_order(&g1.mul(&g2), 64), Some(8));
        assert_eq!(element_order(&g2, 64), Some(2));
        assert!(presentation_semidihedral(&g).is_some());
        let conj = g1.inverse().unwrap().mul(&g2).mul(&g1);
        let d4 = closure(&[g2, conj], 64).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(presentation_semidihedral(&d4).is_none());
        let ring = PolyRing::new(g.field(), &["x", "y"], MonomialOrder::Grevlex);
        assert_eq!(mirrors(&d4, &ring).unwrap().len(), 4);
        // closure is idempotent
        assert_eq!(closure(g.elements(), 64).unwrap().order(), 16);
        assert!(closure(&sd16_generators(), 10).unwrap_err().is_budget());
    }

    #[test]
    fn small_groups() {
        let q = NumberField::rationals();
        let ring = PolyRing::new(&q, &["x", "y"], MonomialOrder::Grevlex);
        let id = NFMatrix::identity(&q, 2);
        assert_eq!(closure(&[id], 4).unwrap().order(), 1);
        let minus = NFMatrix::parse(&[&["-1", "0"], &["0", "-1"]], &q).unwrap();
        let pm = closure(&[minus], 4).unwrap();
        assert!(mirrors(&pm, &ring).unwrap().is_empty());
        let refl = NFMatrix::parse(&[&["1", "0"], &["0", "-1"]], &q).unwrap();
        let ms = mirrors(&closure(&[refl], 4).unwrap(), &ring).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].form, ring.parse("y").unwrap());
        let shear = NFMatrix::parse(&[&["1", "1"], &["0", "1"]], &q).unwrap();
        assert!(closure(&[shear.clone()], 50).is_err());
        assert_eq!(element_order(&shear, 50), None);
    }
}
