//! Independent oracles for the acceptance and property tests. They share
//! infrastructure (number fields, polynomial arithmetic, resultants) with the
//! library but take a different route to every answer they check.
#![allow(dead_code)]

pub mod props;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use agcert::arith::{NFElem, NumberField};
use agcert::cli::{self, Certificate, RunOptions};
use agcert::poly::{resultant, MonomialOrder, MultiPoly, PolyRing, UniPoly};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn run(id: &str) -> Certificate {
    cli::run(&cli::scenario(id).expect("built-in scenario"), &RunOptions::default()).expect("scenario runs")
}

pub fn computed<'a>(cert: &'a Certificate, name: &str) -> &'a Value {
    &cert.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}")).computed
}

pub fn expected<'a>(cert: &'a Certificate, name: &str) -> &'a Value {
    &cert.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}")).expected
}

pub fn passed(cert: &Certificate, names: &[&str]) -> Result<(), String> {
    for n in names {
        let c = cert.checks.iter().find(|c| c.name == *n).ok_or_else(|| format!("no check {n}"))?;
        if !c.pass {
            return Err(format!("{n}: expected {} computed {}", c.expected, c.computed));
        }
    }
    Ok(())
}

pub fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// Rational of a JSON number or "a/b" string.
pub fn json_rat(v: &Value) -> Q {
    match v {
        Value::Number(n) => Q::from_integer(BigInt::from(n.as_i64().expect("integer"))),
        Value::String(s) => match s.split_once('/') {
            Some((a, b)) => Q::new(a.trim().parse().unwrap(), b.trim().parse().unwrap()),
            None => Q::from_integer(s.trim().parse().unwrap()),
        },
        other => panic!("not a rational: {other}"),
    }
}

// ---------------------------------------------------------------------------
// Binary quartics: triple roots by rational root enumeration.

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

fn eval_q(c: &[i64; 5], x: &Q) -> Q {
    c.iter().fold(Q::zero(), |acc, &a| acc * x + Q::from_integer(BigInt::from(a)))
}

fn deriv(c: &[i64; 5]) -> [i64; 5] {
    // coefficients of a x^4 + b x^3 + ... as a degree-4 array, shifted
    [0, 4 * c[0], 3 * c[1], 2 * c[2], c[3]]
}

/// `a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4` with integer coefficients has
/// a linear factor of multiplicity at least 3. A triple root of a quartic with
/// rational coefficients is rational, so the candidates are finite.
pub fn triple_root_rational(c: &[i64; 5]) -> bool {
    assert!(c.iter().any(|&x| x != 0));
    // root at infinity (z = 0) of multiplicity >= 3
    if c[0] == 0 && c[1] == 0 && c[2] == 0 {
        return true;
    }
    // strip the root at infinity
    let lead = c.iter().position(|&x| x != 0).unwrap();
    let last = c.iter().rposition(|&x| x != 0).unwrap();
    let mut cands: BTreeSet<Q> = BTreeSet::new();
    if last < 4 {
        cands.insert(Q::zero());
    }
    for p in divisors(c[last]) {
        for d in divisors(c[lead]) {
            cands.insert(q(p, d));
            cands.insert(q(-p, d));
        }
    }
    let d1 = deriv(c);
    let d2 = deriv(&d1);
    cands.iter().any(|x| eval_q(c, x).is_zero() && eval_q(&d1, x).is_zero() && eval_q(&d2, x).is_zero())
}

// ---------------------------------------------------------------------------
// Quartics: flexes through a resultant and univariate roots.

pub struct Plane {
    pub ring: Arc<PolyRing>,
    pub f: MultiPoly,
}

impl Plane {
    pub fn new(k: &Arc<NumberField>, f: &str) -> Plane {
        let ring = PolyRing::new(k, &["x", "y", "z"], MonomialOrder::Grevlex);
        let f = ring.parse(f).expect("parses");
        Plane { ring, f }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.ring.field()
    }

    pub fn hessian(&self) -> MultiPoly {
        let h: Vec<Vec<MultiPoly>> =
            (0..3).map(|i| (0..3).map(|j| self.f.derivative(i).derivative(j)).collect()).collect();
        let m = |a: usize, b: usize, c: usize, d: usize| &(&h[1][a] * &h[2][b]) - &(&h[1][c] * &h[2][d]);
        let t0 = &h[0][0] * &m(1, 2, 2, 1);
        let t1 = &h[0][1] * &m(0, 2, 2, 0);
        let t2 = &h[0][2] * &m(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }

    pub fn gradient_at(&self, p: &[NFElem; 3]) -> [NFElem; 3] {
        [0, 1, 2].map(|i| self.f.derivative(i).eval(p))
    }

    pub fn is_singular(&self, p: &[NFElem; 3]) -> bool {
        self.gradient_at(p).iter().all(|c| c.is_zero())
    }

    /// `F(s p + t d)` as binary quartic coefficients in `t` (with `s = 1`).
    pub fn restrict(&self, p: &[NFElem; 3], d: &[NFElem; 3]) -> Vec<NFElem> {
        let k = self.field();
        // interpolate at t = 0..=deg
        let deg = self.f.total_degree().unwrap() as usize;
        let vals: Vec<NFElem> = (0..=deg)
            .map(|t| {
                let t = k.from_int(t as i64);
                let pt = [0, 1, 2].map(|i| &p[i] + &(&t * &d[i]));
                self.f.eval(&pt)
            })
            .collect();
        newton_coefficients(k, &vals)
    }

    /// Contact order of the tangent line at a smooth point, and the residual
    /// point when the contact is 3 and the degree is 4.
    pub fn tangent_data(&self, p: &[NFElem; 3]) -> (usize, Option<[NFElem; 3]>) {
        let g = self.gradient_at(p);
        let d = direction_on_line(&g, p);
        let c = self.restrict(p, &d);
        let contact = c.iter().position(|a| !a.is_zero()).unwrap_or(c.len());
        let residual = if contact == 3 && c.len() == 5 {
            // t^3 (c3 + c4 t): residual at (s : t) = (c4 : -c3)
            Some([0, 1, 2].map(|i| &(&c[4] * &p[i]) - &(&c[3] * &d[i])))
        } else {
            None
        };
        (contact, residual)
    }

    /// Smooth points of `F = H = 0` with coordinates in the field.
    pub fn flexes(&self) -> Vec<[NFElem; 3]> {
        let k = self.field().clone();
        let h = self.hessian();
        let (zero, one) = (k.zero(), k.one());
        let mut out: Vec<[NFElem; 3]> = Vec::new();
        // affine part z = 1
        let fa = self.f.substitute(&[("z", self.ring.one())]).unwrap();
        let ha = h.substitute(&[("z", self.ring.one())]).unwrap();
        let res = resultant(&fa, &ha, 0).unwrap();
        for y0 in univariate(&res, 1).roots() {
            let fx = univariate(&fa.substitute_values(&[("y", y0.clone())]).unwrap(), 0);
            let hx = univariate(&ha.substitute_values(&[("y", y0.clone())]).unwrap(), 0);
            for x0 in fx.gcd(&hx).roots() {
                out.push([x0, y0.clone(), one.clone()]);
            }
        }
        // line at infinity z = 0
        let fi = self.f.substitute(&[("z", self.ring.zero()), ("y", self.ring.one())]).unwrap();
        let hi = h.substitute(&[("z", self.ring.zero()), ("y", self.ring.one())]).unwrap();
        for x0 in univariate(&fi, 0).gcd(&univariate(&hi, 0)).roots() {
            out.push([x0, one.clone(), zero.clone()]);
        }
        let p = [one.clone(), zero.clone(), zero.clone()];
        if self.f.eval(&p).is_zero() && h.eval(&p).is_zero() {
            out.push(p);
        }
        out.retain(|p| !self.is_singular(p));
        out
    }
}

/// Coefficients in `t` of the polynomial with the given values at `t = 0, 1, ..`.
fn newton_coefficients(k: &Arc<NumberField>, vals: &[NFElem]) -> Vec<NFElem> {
    let n = vals.len();
    // solve the Vandermonde system by elimination
    let mut rows: Vec<Vec<NFElem>> = (0..n)
        .map(|t| {
            let mut r: Vec<NFElem> = (0..n).map(|j| k.from_int((t as i64).pow(j as u32))).collect();
            r.push(vals[t].clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !rows[r][col].is_zero()).unwrap();
        rows.swap(col, piv);
        let inv = rows[col][col].inv().unwrap();
        rows[col] = rows[col].iter().map(|a| a * &inv).collect();
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let sub: Vec<NFElem> = rows[col].iter().map(|a| a * &f).collect();
                rows[r] = rows[r].iter().zip(&sub).map(|(a, b)| a - b).collect();
            }
        }
    }
    rows.into_iter().map(|r| r[n].clone()).collect()
}

/// A second point on the line `g . X = 0` through `p`.
fn direction_on_line(g: &[NFElem; 3], p: &[NFElem; 3]) -> [NFElem; 3] {
    let k = g[0].field();
    let basis = [[k.one(), k.zero(), k.zero()], [k.zero(), k.one(), k.zero()], [k.zero(), k.zero(), k.one()]];
    for e in &basis {
        // d = e - (g.e / g.p') p' is awkward when g.p = 0, so take a cross product
        let d = cross(e, g);
        if d.iter().any(|c| !c.is_zero()) && cross(&d, p).iter().any(|c| !c.is_zero()) {
            return d;
        }
    }
    unreachable!("a line has two distinct points")
}

pub fn cross(a: &[NFElem; 3], b: &[NFElem; 3]) -> [NFElem; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn same_point(a: &[NFElem; 3], b: &[NFElem; 3]) -> bool {
    cross(a, b).iter().all(|c| c.is_zero())
}

pub fn collinear(a: &[NFElem; 3], b: &[NFElem; 3], c: &[NFElem; 3]) -> bool {
    let n = cross(a, b);
    (&(&(&n[0] * &c[0]) + &(&n[1] * &c[1])) + &(&n[2] * &c[2])).is_zero()
}

fn univariate(f: &MultiPoly, var: usize) -> UniPoly {
    let k = f.field().clone();
    let deg = f.degree_in(var).unwrap_or(0) as usize;
    let mut c = vec![k.zero(); deg + 1];
    for (m, a) in f.terms() {
        let e = m.exps()[var] as usize;
        c[e] = &c[e] + a;
    }
    UniPoly::new(&k, c)
}

pub fn point(k: &Arc<NumberField>, coords: [&str; 3]) -> [NFElem; 3] {
    coords.map(|s| agcert::poly::parse_element(s, k).unwrap())
}

/// Flex / residual / collinearity configuration through the resultant route.
pub fn configuration_holds(f: &Plane, node: &[NFElem; 3]) -> bool {
    let fl = f.flexes();
    let data: Vec<([NFElem; 3], [NFElem; 3])> = fl
        .iter()
        .filter_map(|p| match f.tangent_data(p) {
            (3, Some(r)) => Some((p.clone(), r)),
            _ => None,
        })
        .collect();
    for (i, (p4, r6)) in data.iter().enumerate() {
        for (j, (p5, r7)) in data.iter().enumerate() {
            if i == j {
                continue;
            }
            let pts = [node, p4, p5, r6, r7];
            let distinct = (0..5).all(|a| (a + 1..5).all(|b| !same_point(pts[a], pts[b])));
            if distinct && collinear(r6, r7, node) {
                return true;
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Cyclic quotient singularities: the intersection form of a chain.

/// `(n, q)` to the chain `[b_1, .., b_r]` by the continued fraction of `n/q`.
pub fn hj_chain(n: i64, q: i64) -> Vec<i64> {
    let (mut a, mut b) = (n, q);
    let mut out = Vec::new();
    while b > 0 {
        let c = (a + b - 1) / b;
        out.push(c);
        let r = c * b - a;
        a = b;
        b = r;
    }
    out
}

/// Dense rational matrix inverse by Gauss-Jordan.
pub fn inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        let inv = Q::one() / a[col][col].clone();
        a[col] = a[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let sub: Vec<Q> = a[col].iter().map(|x| x * &f).collect();
                a[r] = a[r].iter().zip(&sub).map(|(x, y)| x - y).collect();
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Intersection matrix of a chain of rational curves.
pub fn chain_matrix(chain: &[i64]) -> Vec<Vec<Q>> {
    let n = chain.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Q::from_integer(BigInt::from(-chain[i]))
                    } else if i.abs_diff(j) == 1 {
                        Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `K_Z = pi^* K + sum a_i E_i`: solves `K_Z . E_j = -2 - E_j^2`.
pub fn discrepancies(chain: &[i64]) -> Vec<Q> {
    let m = chain_matrix(chain);
    let inv = inverse(&m);
    let rhs: Vec<Q> = chain.iter().map(|&b| Q::from_integer(BigInt::from(b - 2))).collect();
    inv.iter().map(|r| r.iter().zip(&rhs).map(|(a, b)| a * b).sum()).collect()
}

/// `u^T M^{-1} u` and `sum a_i u_i` for a curve meeting the chain with multiplicities `u`.
pub fn chain_corrections(chain: &[i64], u: &[i64]) -> (Q, Q) {
    let inv = inverse(&chain_matrix(chain));
    let uq: Vec<Q> = u.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect();
    let quad: Q = (0..u.len()).map(|i| (0..u.len()).map(|j| &uq[i] * &inv[i][j] * &uq[j]).sum::<Q>()).sum();
    let lin: Q = discrepancies(chain).iter().zip(&uq).map(|(a, b)| a * b).sum();
    (quad, lin)
}

/// Smooth rational strict transforms of a curve with `C^2 = sq`, `K.C = kd`
/// through the listed chains: every `u` with entries summing to at most `bound`.
pub fn adjunction_brute(sq: &Q, kd: &Q, chains: &[Vec<i64>], bound: i64) -> Vec<(Vec<i64>, Q, Q)> {
    let slots: usize = chains.iter().map(|c| c.len()).sum();
    let mut out = Vec::new();
    let mut u = vec![0i64; slots];
    loop {
        if u.iter().sum::<i64>() <= bound {
            let (mut s, mut k) = (sq.clone(), kd.clone());
            let mut at = 0;
            for c in chains {
                let (qd, ln) = chain_corrections(c, &u[at..at + c.len()]);
                s += qd;
                k += ln;
                at += c.len();
            }
            if s.is_integer() && k.is_integer() && &s + &k == Q::from_integer(BigInt::from(-2)) {
                out.push((u.clone(), s, k));
            }
        }
        let mut i = 0;
        loop {
            if i == slots {
                return out;
            }
            u[i] += 1;
            if u[i] <= bound {
                break;
            }
            u[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Z[zeta8] and monomial 2x2 matrices.

/// `c_0 + c_1 t + c_2 t^2 + c_3 t^3` with `t^4 = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z8(pub [i64; 4]);

impl Z8 {
    pub const ONE: Z8 = Z8([1, 0, 0, 0]);
    pub const ZERO: Z8 = Z8([0; 4]);

    /// `+- t^k`.
    pub fn unit(k: i64) -> Z8 {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0; 4];
        c[k % 4] = if k < 4 { 1 } else { -1 };
        Z8(c)
    }

    pub fn mul(self, o: Z8) -> Z8 {
        let mut c = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                let v = self.0[i] * o.0[j];
                if i + j < 4 {
                    c[i + j] += v;
                } else {
                    c[i + j - 4] -= v;
                }
            }
        }
        Z8(c)
    }

    pub fn add(self, o: Z8) -> Z8 {
        Z8([0, 1, 2, 3].map(|i| self.0[i] + o.0[i]))
    }

    pub fn pow(self, e: u32) -> Z8 {
        (0..e).fold(Z8::ONE, |acc, _| acc.mul(self))
    }
}

pub type M2 = [[Z8; 2]; 2];

pub fn m2_mul(a: &M2, b: &M2) -> M2 {
    let mut c = [[Z8::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0].mul(b[0][j]).add(a[i][1].mul(b[1][j]));
        }
    }
    c
}

pub const I2: M2 = [[Z8::ONE, Z8::ZERO], [Z8::ZERO, Z8::ONE]];

pub fn m2_order(m: &M2) -> u32 {
    let mut p = *m;
    for k in 1..=64 {
        if p == I2 {
            return k;
        }
        p = m2_mul(&p, m);
    }
    panic!("order above 64")
}

pub fn m2_closure(gens: &[M2]) -> Vec<M2> {
    let mut seen: BTreeSet<M2> = BTreeSet::from([I2]);
    let mut frontier = vec![I2];
    while let Some(a) = frontier.pop() {
        for g in gens {
            let b = m2_mul(&a, g);
            if seen.insert(b) {
                frontier.push(b);
            }
        }
    }
    seen.into_iter().collect()
}

/// Reflections: `g != I` fixing a line pointwise, i.e. `det(g - I) = 0`.
pub fn m2_is_reflection(m: &M2) -> bool {
    if *m == I2 {
        return false;
    }
    let a = m[0][0].add(Z8([-1, 0, 0, 0]));
    let d = m[1][1].add(Z8([-1, 0, 0, 0]));
    let det = a.mul(d).add(m[0][1].mul(m[1][0]).mul(Z8([-1, 0, 0, 0])));
    det == Z8::ZERO
}

/// Binary forms with `Z[zeta8]` coefficients, keyed by the exponent of `x`.
pub type Form = BTreeMap<(u32, u32), Z8>;

pub fn form(terms: &[(i64, u32, u32)]) -> Form {
    let mut f = Form::new();
    for &(c, a, b) in terms {
        let e = f.entry((a, b)).or_insert(Z8::ZERO);
        *e = e.add(Z8([c, 0, 0, 0]));
    }
    f
}

fn form_mul(f: &Form, g: &Form) -> Form {
    let mut out = Form::new();
    for (&(a, b), c) in f {
        for (&(a2, b2), c2) in g {
            let e = out.entry((a + a2, b + b2)).or_insert(Z8::ZERO);
            *e = e.add(c.mul(*c2));
        }
    }
    out.retain(|_, c| *c != Z8::ZERO);
    out
}

fn form_pow(f: &Form, e: u32) -> Form {
    (0..e).fold(form(&[(1, 0, 0)]), |acc, _| form_mul(&acc, f))
}

/// `f(m (x, y)^T)`.
pub fn act(m: &M2, f: &Form) -> Form {
    let xi = form_from(&[(m[0][0], 1, 0), (m[0][1], 0, 1)]);
    let yi = form_from(&[(m[1][0], 1, 0), (m[1][1], 0, 1)]);
    let mut out = Form::new();
    for (&(a, b), c) in f {
        let t = form_mul(&form_mul(&form_pow(&xi, a), &form_pow(&yi, b)), &form_from(&[(*c, 0, 0)]));
        for (k, v) in t {
            let e = out.entry(k).or_insert(Z8::ZERO);
            *e = e.add(v);
        }
    }
    out.retain(|_, c| *c != Z8::ZERO);
    out
}

fn form_from(terms: &[(Z8, u32, u32)]) -> Form {
    let mut f = Form::new();
    for &(c, a, b) in terms {
        if c != Z8::ZERO {
            f.insert((a, b), c);
        }
    }
    f
}

/// `|G| dim (K[x,y]_d)^G = sum_g trace(g | degree d)`, summed in `Z[zeta8]`.
pub fn invariant_dimension_times_order(group: &[M2], d: u32) -> Z8 {
    let mut total = Z8::ZERO;
    for g in group {
        for a in 0..=d {
            let image = act(g, &form(&[(1, a, d - a)]));
            if let Some(c) = image.get(&(a, d - a)) {
                total = total.add(*c);
            }
        }
    }
    total
}
