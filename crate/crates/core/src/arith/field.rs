use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rat, padic, rat_sqrt, Rat};
use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 8;

/// The field `Q[t]/(m(t))` for a monic irreducible `m`.
#[derive(Debug, Clone)]
pub struct NumberField {
    /// Coefficients of the monic minimal polynomial, constant term first.
    min_poly: Vec<Rat>,
    /// Symbol used when printing or parsing elements.
    generator: String,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly
    }
}
impl Eq for NumberField {}

impl NumberField {
    /// Builds a field from the coefficients of its minimal polynomial
    /// (constant term first). The polynomial is made monic and checked for
    /// irreducibility: no rational root, and for degree 4 no splitting into
    /// two rational quadratics.
    pub fn new(min_poly: Vec<Rat>, generator: &str) -> Result<Arc<Self>> {
        let mut m = min_poly;
        while m.last().is_some_and(|c| c.is_zero()) {
            m.pop();
        }
        let degree = m.len().saturating_sub(1);
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidField(format!(
                "degree {degree} outside supported range 1..={MAX_DEGREE}"
            )));
        }
        let lc = m[degree].clone();
        for c in m.iter_mut() {
            *c = &*c / &lc;
        }
        if degree > 1 {
            if !padic::rational_roots(&m).is_empty() {
                return Err(Error::InvalidField("minimal polynomial has a rational root".into()));
            }
            if degree == 4 && has_quadratic_factor(&m) {
                return Err(Error::InvalidField(
                    "minimal polynomial splits into two rational quadratics".into(),
                ));
            }
        }
        Ok(Arc::new(NumberField { min_poly: m, generator: generator.to_string() }))
    }

    /// The rationals, as the degree-one field `Q[t]/(t)`.
    pub fn rationals() -> Arc<Self> {
        static Q: OnceLock<Arc<NumberField>> = OnceLock::new();
        Q.get_or_init(|| {
            Arc::new(NumberField {
                min_poly: vec![Rat::zero(), Rat::one()],
                generator: "r".into(),
            })
        })
        .clone()
    }

    /// `Q(sqrt(-2)) = Q[r]/(r^2+2)`.
    pub fn sqrt_minus_two() -> Arc<Self> {
        static K: OnceLock<Arc<NumberField>> = OnceLock::new();
        K.get_or_init(|| {
            Arc::new(NumberField {
                min_poly: vec![Rat::from_integer(2.into()), Rat::zero(), Rat::one()],
                generator: "r".into(),
            })
        })
        .clone()
    }

    /// `Q(zeta_8) = Q[t]/(t^4+1)`; contains `i = t^2` and `sqrt(2) = t - t^3`.
    pub fn cyclotomic8() -> Arc<Self> {
        static K: OnceLock<Arc<NumberField>> = OnceLock::new();
        K.get_or_init(|| {
            Arc::new(NumberField {
                min_poly: vec![Rat::one(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()],
                generator: "t".into(),
            })
        })
        .clone()
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Rat] {
        &self.min_poly
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Minimal polynomial printed in the variable `t`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.min_poly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mon = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let body = if mon.is_empty() {
                fmt_rat(&c.abs())
            } else if c.abs().is_one() {
                mon
            } else {
                format!("{}*{}", fmt_rat(&c.abs()), mon)
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign}{body}"));
            }
        }
        parts.concat()
    }

    pub fn zero(self: &Arc<Self>) -> NFElem {
        NFElem { field: self.clone(), coeffs: vec![Rat::zero(); self.degree()] }
    }

    pub fn one(self: &Arc<Self>) -> NFElem {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(self: &Arc<Self>, r: Rat) -> NFElem {
        let mut e = self.zero();
        e.coeffs[0] = r;
        e
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> NFElem {
        self.from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// The class of `t`. In the rationals this is `0`.
    pub fn gen(self: &Arc<Self>) -> NFElem {
        self.from_poly(&[Rat::zero(), Rat::one()])
    }

    /// Reduces an arbitrary polynomial in `t` (constant term first).
    pub fn from_poly(self: &Arc<Self>, p: &[Rat]) -> NFElem {
        let mut c = p.to_vec();
        self.reduce(&mut c);
        NFElem { field: self.clone(), coeffs: c }
    }

    fn reduce(&self, p: &mut Vec<Rat>) {
        let n = self.degree();
        let m = &self.min_poly;
        if p.len() > n {
            for k in (n..p.len()).rev() {
                if p[k].is_zero() {
                    continue;
                }
                let c = p[k].clone();
                for i in 0..n {
                    if !m[i].is_zero() {
                        let d = &c * &m[i];
                        p[k - n + i] -= d;
                    }
                }
                p[k] = Rat::zero();
            }
        }
        p.resize(n, Rat::zero());
    }
}

/// Rational-quadratic factor search for a monic degree-4 polynomial.
///
/// After scaling to an integral monic polynomial, monic integer factors
/// `(x^2+bx+c)(x^2+b'x+c')` are enumerated over divisor pairs `c*c' = m0`.
fn has_quadratic_factor(m: &[Rat]) -> bool {
    use num_integer::Integer;
    // x -> x/D makes all coefficients integral: D^4 m(x/D).
    let d = super::common_denom(m.iter());
    let mut a = Vec::with_capacity(5);
    let mut pow = BigInt::one();
    for k in (0..=4).rev() {
        // coefficient of x^k becomes m_k * D^(4-k)
        let v = &m[k] * Rat::from_integer(pow.clone());
        a.push(v);
        pow *= &d;
    }
    a.reverse();
    let a: Vec<BigInt> = a.iter().map(|r| r.to_integer()).collect();
    let (m0, m1, m2, m3) = (&a[0], &a[1], &a[2], &a[3]);
    if m0.is_zero() {
        return true;
    }
    let n = m0.abs();
    let mut divisors = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            divisors.push(i.clone());
            divisors.push(&n / &i);
        }
        i += 1;
    }
    for dv in divisors {
        for c in [dv.clone(), -dv.clone()] {
            let cp = m0 / &c;
            if c != cp {
                // b (c' - c) = m1 - m3 c
                let num = m1 - m3 * &c;
                let den = &cp - &c;
                if !num.is_multiple_of(&den) {
                    continue;
                }
                let b = &num / &den;
                let bp = m3 - &b;
                if &c + &cp + &b * &bp == *m2 {
                    return true;
                }
            } else {
                if *m1 != m3 * &c {
                    continue;
                }
                // b^2 - m3 b + (m2 - 2c) = 0
                let disc = m3 * m3 - BigInt::from(4) * (m2 - BigInt::from(2) * &c);
                if disc.is_negative() {
                    continue;
                }
                let s = disc.sqrt();
                if &s * &s == disc && ((m3 + &s) % BigInt::from(2)).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Element of a number field, stored as the reduced residue modulo the
/// minimal polynomial.
#[derive(Clone)]
pub struct NFElem {
    field: Arc<NumberField>,
    coeffs: Vec<Rat>,
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.same_field(other)
    }
}
impl Eq for NFElem {}

impl std::hash::Hash for NFElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl NFElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn same_field(&self, other: &NFElem) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &NFElem) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.describe(),
                other.field.describe()
            )))
        }
    }

    pub fn try_add(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> NFElem {
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo the
    /// minimal polynomial.
    pub fn inv(&self) -> Result<NFElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(self.field.from_rat(r.recip()));
        }
        // Invariant: s_i * a == r_i (mod m).
        let mut r0 = self.field.min_poly.clone();
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rat> = vec![];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while r1.len() > 1 {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since m is irreducible.
        let c = r1[0].recip();
        let s: Vec<Rat> = s1.iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(&s))
    }

    pub fn pow(&self, mut e: u32) -> NFElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Ring homomorphism `Q[t]/(m) -> target` sending `t` to `gen_image`.
    pub fn embed(&self, target: &Arc<NumberField>, gen_image: &NFElem) -> Result<NFElem> {
        if !Arc::ptr_eq(gen_image.field(), target) && **gen_image.field() != **target {
            return Err(Error::FieldMismatch("generator image is not in the target field".into()));
        }
        let horner = |p: &[Rat]| {
            p.iter().rev().fold(target.zero(), |acc, c| &(&acc * gen_image) + &target.from_rat(c.clone()))
        };
        if !horner(&self.field.min_poly).is_zero() {
            return Err(Error::NotARoot(format!(
                "image of the generator is not a root of {}",
                self.field.describe()
            )));
        }
        Ok(horner(&self.coeffs))
    }

    /// A square root inside the field, if one exists.
    ///
    /// Of the two roots `s, -s` the one whose first nonzero coordinate is
    /// positive is returned.
    pub fn sqrt(&self) -> Option<NFElem> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if let (true, Some(r)) = (self.field.is_rationals(), self.as_rat()) {
            return rat_sqrt(r).map(|s| self.field.from_rat(s));
        }
        let f = self.field.clone();
        let poly = vec![-self.clone(), f.zero(), f.one()];
        let roots = padic::roots_of_squarefree(&poly);
        roots.into_iter().find(|s| {
            s.coeffs.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
        })
    }

    /// Writes the element with the field's generator symbol, e.g. `2*r - 1/3`.
    pub fn to_text(&self) -> String {
        let g = self.field.generator.clone();
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mon = match k {
                0 => String::new(),
                1 => g.clone(),
                _ => format!("{g}^{k}"),
            };
            let a = c.abs();
            let body = if mon.is_empty() {
                fmt_rat(&a)
            } else if a.is_one() {
                mon
            } else {
                format!("{}*{}", fmt_rat(&a), mon)
            };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        s
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(super::rat_bits).max().unwrap_or(0)
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl serde::Serialize for NFElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'a> Add<&'a NFElem> for &'a NFElem {
    type Output = NFElem;
    fn add(self, rhs: &NFElem) -> NFElem {
        debug_assert!(self.same_field(rhs));
        NFElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a NFElem> for &'a NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &NFElem) -> NFElem {
        debug_assert!(self.same_field(rhs));
        NFElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a NFElem> for &'a NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &NFElem) -> NFElem {
        debug_assert!(self.same_field(rhs));
        let n = self.coeffs.len();
        if n == 1 {
            return NFElem { field: self.field.clone(), coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut p = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&mut p);
        NFElem { field: self.field.clone(), coeffs: p }
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for NFElem {
    type Output = NFElem;
    fn neg(mut self) -> NFElem {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<NFElem> for NFElem {
            type Output = NFElem;
            fn $m(self, rhs: NFElem) -> NFElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a NFElem> for NFElem {
            type Output = NFElem;
            fn $m(self, rhs: &NFElem) -> NFElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Which arithmetic operation `nf_arith` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: errors on field mismatch or division by zero.
pub fn nf_arith(a: &NFElem, b: &NFElem, op: NfOp) -> Result<NFElem> {
    match op {
        NfOp::Add => a.try_add(b),
        NfOp::Sub => a.try_sub(b),
        NfOp::Mul => a.try_mul(b),
        NfOp::Div => a.try_div(b),
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn qpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut p = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j] += x * y;
        }
    }
    trim(p)
}

fn qpoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut p = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        p[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        p[i] -= x;
    }
    trim(p)
}

fn qpoly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    let lc = b[db].clone();
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lc;
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &c * x;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}
