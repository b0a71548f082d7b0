//! Sparse multivariate polynomials over a number field.

mod parse;
mod quartic;
mod resultant;
mod uni;

pub use parse::{parse_element, parse_poly};
pub use quartic::{BinaryQuartic, TripleRootReport};
pub use resultant::resultant;
pub use uni::UniPoly;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::{int, NFElem, NumberField, Rat};
use crate::error::{Error, Result};

/// Exponent vector; its length is the number of ring variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exps(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Term orders. `Block(k)` compares the first `k` variables by grevlex and
/// breaks ties by grevlex on the rest, so it eliminates the first block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Block(k) => {
                let k = k.min(a.0.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// Coefficient field, variable names and term order.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Arc<NumberField>,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: &Arc<NumberField>, vars: &[&str], order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { field: self.field.clone(), vars: self.vars.clone(), order })
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn zero(self: &Arc<Self>) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: vec![] }
    }

    pub fn one(self: &Arc<Self>) -> MultiPoly {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: NFElem) -> MultiPoly {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> MultiPoly {
        self.constant(self.field.from_int(n))
    }

    pub fn term(self: &Arc<Self>, m: Monomial, c: NFElem) -> MultiPoly {
        if c.is_zero() {
            self.zero()
        } else {
            MultiPoly { ring: self.clone(), terms: vec![(m, c)] }
        }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> MultiPoly {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<MultiPoly> {
        Ok(self.var(self.var_index(name)?))
    }

    pub fn vars_all(self: &Arc<Self>) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(self: &Arc<Self>, terms: impl IntoIterator<Item = (Monomial, NFElem)>) -> MultiPoly {
        let mut acc: HashMap<Monomial, NFElem> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = self.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        MultiPoly { ring: self.clone(), terms }
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<MultiPoly> {
        parse_poly(text, self)
    }
}

/// Polynomial with terms sorted strictly descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, NFElem)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl std::hash::Hash for MultiPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl MultiPoly {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, NFElem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<NFElem> {
        if self.is_zero() {
            Some(self.ring.field.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring.vars, other.ring.vars
            )))
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&NFElem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.0 .0[var]).max()
    }

    /// Indices of variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|t| t.0 .0[i] > 0))
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree(&vec![1; self.ring.nvars()]).is_some() || self.is_zero()
    }

    /// Common weighted degree of all terms, if the polynomial is weighted homogeneous.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self
            .terms
            .iter()
            .map(|(m, _)| m.0.iter().zip(weights).map(|(e, w)| e * w).sum::<u32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let ord = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: HashMap<Monomial, NFElem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = self.ring.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Multiplies by `c * m`; the order is multiplicative so sorting is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &NFElem) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &NFElem) -> MultiPoly {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn scale_rat(&self, r: &Rat) -> MultiPoly {
        self.scale(&self.ring.field.from_rat(r.clone()))
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero")),
        }
    }

    /// Same polynomial in a ring that differs only in its term order.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Result<MultiPoly> {
        if ring.field != self.ring.field || ring.vars != self.ring.vars {
            return Err(Error::RingMismatch("with_ring needs identical variables".into()));
        }
        let mut terms = self.terms.clone();
        let ord = ring.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Ok(MultiPoly { ring: ring.clone(), terms })
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
            let mut e = m.clone();
            let k = e.0[var];
            e.0[var] -= 1;
            (e, c.scale(&int(k as i64)))
        });
        self.ring.from_terms(terms)
    }

    /// Partial derivatives in variable order.
    pub fn jacobian(&self) -> Vec<MultiPoly> {
        (0..self.ring.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[NFElem]) -> NFElem {
        let f = &self.ring.field;
        let mut powers: Vec<Vec<NFElem>> = point.iter().map(|p| vec![f.one(), p.clone()]).collect();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Simultaneous substitution `x_i -> images[i]`; all images live in one target ring.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch("compose needs one image per variable".into()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| Error::RingMismatch("compose in empty ring".into()))?;
        for p in images {
            p.check_ring(&target.zero())?;
        }
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul_unchecked(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul_unchecked(&cache[i][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Substitutes the named variables; the others are left in place.
    pub fn substitute(&self, assignments: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let mut images = self.ring.vars_all();
        for (name, p) in assignments {
            let i = self.ring.var_index(name)?;
            images[i] = p.clone();
        }
        self.compose(&images)
    }

    /// Substitutes field elements for the named variables.
    pub fn substitute_values(&self, assignments: &[(&str, NFElem)]) -> Result<MultiPoly> {
        let a: Vec<(&str, MultiPoly)> =
            assignments.iter().map(|(n, c)| (*n, self.ring.constant(c.clone()))).collect();
        self.substitute(&a)
    }

    /// Coefficients with respect to `var`, lowest power first; they do not contain `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, NFElem)>> = vec![vec![]; d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            buckets[k].push((mm, c.clone()));
        }
        if self.is_zero() {
            return vec![];
        }
        buckets
            .into_iter()
            .map(|t| MultiPoly { ring: self.ring.clone(), terms: t })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(ring: &Arc<PolyRing>, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let x = Monomial::var(ring.nvars(), var);
        let mut acc = ring.zero();
        let mut pw = Monomial::one(ring.nvars());
        for c in coeffs {
            acc = acc.merge(&c.mul_term(&pw, &ring.field.one()), false);
            pw = pw.mul(&x);
        }
        acc
    }

    /// Univariate view in `var`; fails if another variable occurs.
    pub fn to_uni(&self, var: usize) -> Result<UniPoly> {
        if self.support_vars().iter().any(|&v| v != var) {
            return Err(Error::Degenerate(format!("not univariate in {}", self.ring.vars[var])));
        }
        let cs = self
            .coeffs_in(var)
            .into_iter()
            .map(|c| c.constant_value().unwrap())
            .collect();
        Ok(UniPoly::new(self.field(), cs))
    }

    pub fn from_uni(ring: &Arc<PolyRing>, var: usize, u: &UniPoly) -> MultiPoly {
        let terms = u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut m = Monomial::one(ring.nvars());
            m.0[var] = k as u32;
            (m, c.clone())
        });
        ring.from_terms(terms)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide.
    pub fn div_exact(&self, g: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = (g.leading_monomial()?, g.leading_coeff()?);
        let lc_inv = lc.inv().ok()?;
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = &c * &lc_inv;
            r = r.merge(&g.mul_term(&qm, &qc), true);
            q.push((qm, qc));
        }
        Some(MultiPoly { ring: self.ring.clone(), terms: q })
    }

    /// Largest `k` with `g^k | self`, and the cofactor.
    pub fn divide_out(&self, g: &MultiPoly) -> (MultiPoly, u32) {
        if g.is_constant() || self.is_zero() {
            return (self.clone(), 0);
        }
        let mut f = self.clone();
        let mut k = 0;
        while let Some(q) = f.div_exact(g) {
            f = q;
            k += 1;
        }
        (f, k)
    }

    /// Moves the polynomial into `target` by sending variable `i` to variable `map[i]`.
    pub fn rename_into(&self, target: &Arc<PolyRing>, map: &[usize]) -> MultiPoly {
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = Monomial::one(n);
            for (i, &x) in m.0.iter().enumerate() {
                e.0[map[i]] += x;
            }
            (e, c.clone())
        });
        target.from_terms(terms)
    }

    /// Applies a field embedding to every coefficient.
    pub fn map_coeffs(&self, target: &Arc<PolyRing>, f: impl Fn(&NFElem) -> Result<NFElem>) -> Result<MultiPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Ok(target.from_terms(terms))
    }

    /// Homogenizes with respect to variable `h`, which must not occur.
    pub fn homogenize(&self, h: usize) -> MultiPoly {
        let d = self.total_degree().unwrap_or(0);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.clone();
            e.0[h] += d - m.degree();
            (e, c.clone())
        });
        self.ring.from_terms(terms)
    }

    pub fn to_text(&self) -> String {
        parse::print_poly(self)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                self.$f(rhs).expect("polynomials from different rings")
            }
        }
        impl std::ops::$tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
