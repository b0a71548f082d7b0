//! Exact root finding in a number field by p-adic lifting.
//!
//! A prime `p` is chosen so that the minimal polynomial splits into distinct
//! linear factors mod `p`; this gives `d` embeddings `t -> tau_j` into the
//! p-adic integers. Roots of each conjugate polynomial are Hensel-lifted, the
//! coordinates of a candidate root are recovered from one root per embedding
//! by a Vandermonde solve, and rational reconstruction turns them back into
//! fractions. Every candidate is verified by exact evaluation, so a returned
//! root is always a root; roots whose height exceeds the precision cap are
//! missed (and end up in a caller's residual), never invented.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly;
use super::{NFElem, NumberField, Rat};

const FIRST_PRIME: u64 = 1009;
const PRIME_ATTEMPTS: usize = 400;

/// Distinct rational roots of a polynomial over `Q` (constant term first).
pub fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let q = NumberField::rationals();
    let poly: Vec<NFElem> = p.iter().map(|c| q.from_rat(c.clone())).collect();
    roots(&poly).into_iter().map(|e| e.coeffs()[0].clone()).collect()
}

/// Distinct roots in the coefficient field.
pub fn roots(p: &[NFElem]) -> Vec<NFElem> {
    let p = upoly::trim(p.to_vec());
    if p.len() <= 1 {
        return vec![];
    }
    roots_of_squarefree(&upoly::squarefree_part(&p))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

fn mod_u64(r: &BigInt, p: u64) -> u64 {
    let m = r.mod_floor(&BigInt::from(p));
    u64::try_from(m).unwrap()
}

fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_u64(a: u64, p: u64) -> u64 {
    pow_mod_u64(a, p - 2, p)
}

fn eval_u64(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0u64, |acc, &a| ((acc as u128 * x as u128 + a as u128) % p as u128) as u64)
}

fn roots_u64(c: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_u64(c, x, p) == 0).collect()
}

fn deriv_u64(c: &[u64], p: u64) -> Vec<u64> {
    c.iter().enumerate().skip(1).map(|(k, &a)| (a * (k as u64 % p)) % p).collect()
}

/// Rational number reduced mod p, if p does not divide its denominator.
fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let d = mod_u64(r.denom(), p);
    if d == 0 {
        return None;
    }
    Some(((mod_u64(r.numer(), p) as u128 * inv_u64(d, p) as u128) % p as u128) as u64)
}

fn rat_mod_big(r: &Rat, m: &BigInt) -> BigInt {
    let d = r.denom().mod_floor(m);
    (r.numer() * inv_big(&d, m)).mod_floor(m)
}

fn inv_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

struct PrimeData {
    p: u64,
    taus: Vec<u64>,
    roots: Vec<Vec<u64>>,
}

fn choose_prime(f: &[NFElem]) -> Option<PrimeData> {
    let field = f[0].field().clone();
    let d = field.degree();
    let n = f.len() - 1;
    let mut p = FIRST_PRIME;
    let mut tried = 0;
    'outer: while tried < PRIME_ATTEMPTS {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        tried += 1;
        let mut m = Vec::new();
        for c in field.min_poly() {
            match rat_mod(c, p) {
                Some(v) => m.push(v),
                None => continue 'outer,
            }
        }
        let taus = if d == 1 { vec![0] } else { roots_u64(&m, p) };
        if taus.len() != d {
            continue;
        }
        let mut roots = Vec::with_capacity(d);
        for &tau in &taus {
            let mut c = Vec::with_capacity(n + 1);
            for e in f {
                let mut coords = Vec::new();
                for r in e.coeffs() {
                    match rat_mod(r, p) {
                        Some(v) => coords.push(v),
                        None => continue 'outer,
                    }
                }
                c.push(eval_u64(&coords, tau, p));
            }
            if c[n] == 0 {
                continue 'outer;
            }
            let dc = deriv_u64(&c, p);
            let rs = roots_u64(&c, p);
            if rs.iter().any(|&r| eval_u64(&dc, r, p) == 0) {
                continue 'outer;
            }
            roots.push(rs);
        }
        return Some(PrimeData { p, taus, roots });
    }
    None
}

fn eval_big(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m))
}

fn deriv_big(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(k, a)| a * BigInt::from(k)).collect()
}

/// Newton iteration from a simple root mod p to a root mod m = p^k.
fn lift(c: &[BigInt], r0: u64, m: &BigInt, k: u32) -> BigInt {
    let dc = deriv_big(c);
    let mut r = BigInt::from(r0);
    let mut prec = 1u32;
    while prec < k {
        prec = (prec * 2).min(k);
        let fr = eval_big(c, &r, m);
        let dr = eval_big(&dc, &r, m);
        r = (r - fr * inv_big(&dr, m)).mod_floor(m);
    }
    // one extra step absorbs the rounding of the precision schedule
    let fr = eval_big(c, &r, m);
    let dr = eval_big(&dc, &r, m);
    (r - fr * inv_big(&dr, m)).mod_floor(m)
}

/// Smallest fraction congruent to `u` mod `m`, if one with numerator and
/// denominator below `sqrt(m/2)` exists.
fn reconstruct(u: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Inverse of the Vandermonde matrix `V[j][i] = tau_j^i` mod `m`.
fn vandermonde_inverse(taus: &[BigInt], m: &BigInt) -> Vec<Vec<BigInt>> {
    let d = taus.len();
    let mut a: Vec<Vec<BigInt>> = (0..d)
        .map(|j| {
            let mut row: Vec<BigInt> = Vec::with_capacity(2 * d);
            let mut pw = BigInt::one();
            for _ in 0..d {
                row.push(pw.clone());
                pw = (pw * &taus[j]).mod_floor(m);
            }
            for k in 0..d {
                row.push(if k == j { BigInt::one() } else { BigInt::zero() });
            }
            row
        })
        .collect();
    for col in 0..d {
        // pivot is a unit mod p because the taus are distinct mod p
        let piv = (col..d)
            .find(|&r| {
                let g = a[r][col].gcd(m);
                g.is_one()
            })
            .expect("vandermonde pivot");
        a.swap(col, piv);
        let inv = inv_big(&a[col][col], m);
        for k in 0..2 * d {
            a[col][k] = (&a[col][k] * &inv).mod_floor(m);
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..2 * d {
                    let v = &a[col][k] * &f;
                    a[r][k] = (&a[r][k] - v).mod_floor(m);
                }
            }
        }
    }
    a.into_iter().map(|row| row[d..].to_vec()).collect()
}

/// Distinct roots of a squarefree polynomial in its coefficient field.
pub fn roots_of_squarefree(f: &[NFElem]) -> Vec<NFElem> {
    let f = upoly::trim(f.to_vec());
    let n = match upoly::degree(&f) {
        None | Some(0) => return vec![],
        Some(n) => n,
    };
    let field = f[0].field().clone();
    if n == 1 {
        return vec![-(&f[0] * &f[1].inv().expect("nonzero"))];
    }
    if f[0].is_zero() {
        let mut out = vec![field.zero()];
        out.extend(roots_of_squarefree(&f[1..]));
        return out;
    }
    let d = field.degree();
    let data = match choose_prime(&f) {
        Some(d) => d,
        None => return vec![],
    };
    if data.roots.iter().any(|r| r.is_empty()) {
        return vec![];
    }
    let hbits = f
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .chain(field.min_poly().iter())
        .map(super::rat_bits)
        .max()
        .unwrap_or(1);
    let cap_bits = 128 + 4 * (d as u64) * (n as u64) * (hbits + 16);
    let p = BigInt::from(data.p);
    let mut found: Vec<NFElem> = Vec::new();
    let mut bits = 64u64;
    loop {
        let k = (bits / (64 - data.p.leading_zeros() as u64 - 1).max(1) + 1) as u32;
        let m = num_traits::pow(p.clone(), k as usize);
        let mp: Vec<BigInt> = field.min_poly().iter().map(|c| rat_mod_big(c, &m)).collect();
        let taus: Vec<BigInt> = if d == 1 {
            vec![BigInt::zero()]
        } else {
            data.taus.iter().map(|&t| lift(&mp, t, &m, k)).collect()
        };
        let mut lifted: Vec<Vec<BigInt>> = Vec::with_capacity(d);
        for (j, tau) in taus.iter().enumerate() {
            let c: Vec<BigInt> = f
                .iter()
                .map(|e| {
                    let coords: Vec<BigInt> = e.coeffs().iter().map(|r| rat_mod_big(r, &m)).collect();
                    eval_big(&coords, tau, &m)
                })
                .collect();
            lifted.push(data.roots[j].iter().map(|&r| lift(&c, r, &m, k)).collect());
        }
        let vinv = vandermonde_inverse(&taus, &m);
        let mut idx = vec![0usize; d];
        'combos: loop {
            let images: Vec<&BigInt> = (0..d).map(|j| &lifted[j][idx[j]]).collect();
            let mut coords = Vec::with_capacity(d);
            let mut ok = true;
            for row in &vinv {
                let v = row
                    .iter()
                    .zip(&images)
                    .fold(BigInt::zero(), |acc, (a, b)| (acc + a * *b).mod_floor(&m));
                match reconstruct(&v, &m) {
                    Some(r) => coords.push(r),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let cand = field.from_poly(&coords);
                if !found.contains(&cand) && upoly::eval(&f, &cand).is_zero() {
                    found.push(cand);
                }
            }
            for j in 0..d {
                idx[j] += 1;
                if idx[j] < lifted[j].len() {
                    continue 'combos;
                }
                idx[j] = 0;
            }
            break;
        }
        // every root in the field is a distinct root in the first embedding
        if found.len() == data.roots[0].len() || found.len() == n || bits >= cap_bits {
            break;
        }
        bits = (bits * 2).min(cap_bits);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn rational_roots_of_product() {
        // (x - 2/3)(x + 5)(x^2 + 1)
        let q = NumberField::rationals();
        let f = |v: Vec<Rat>| v.into_iter().map(|c| q.from_rat(c)).collect::<Vec<_>>();
        let a = upoly::mul(&f(vec![rat(-2, 3), int(1)]), &f(vec![int(5), int(1)]));
        let b = upoly::mul(&a, &f(vec![int(1), int(0), int(1)]));
        let p: Vec<Rat> = b.into_iter().map(|e| e.coeffs()[0].clone()).collect();
        let mut r = rational_roots(&p);
        r.sort();
        assert_eq!(r, vec![int(-5), rat(2, 3)]);
    }

    #[test]
    fn roots_in_quadratic_field() {
        let k = NumberField::sqrt_minus_two();
        // 625 x^2 - 400 x + 72 has roots (8 +- 2r)/25
        let f = vec![k.from_int(72), k.from_int(-400), k.from_int(625)];
        let rs = roots(&f);
        assert_eq!(rs.len(), 2);
        let r = k.gen();
        let want = (&k.from_int(8) + &r.scale(&int(2))).scale(&rat(1, 25));
        assert!(rs.contains(&want));
    }

    #[test]
    fn roots_with_field_coefficients() {
        let k = NumberField::sqrt_minus_two();
        let r = k.gen();
        // (x - r)(x - (1+r)/3)(x^2 - 3)
        let a = vec![-&r, k.one()];
        let b = vec![-(&k.one() + &r).scale(&rat(1, 3)), k.one()];
        let c = vec![k.from_int(-3), k.zero(), k.one()];
        let f = upoly::mul(&upoly::mul(&a, &b), &c);
        let rs = roots(&f);
        assert_eq!(rs.len(), 2);
        assert!(rs.contains(&r));
    }

    #[test]
    fn roots_in_degree_four_field() {
        let z = NumberField::cyclotomic8();
        let t = z.gen();
        // x^2 + 1: roots +- t^2
        let f = vec![z.one(), z.zero(), z.one()];
        let rs = roots(&f);
        assert_eq!(rs.len(), 2);
        assert!(rs.contains(&t.pow(2)));
        // x^2 - 6 has no root in Q(zeta_8)
        assert!(roots(&[z.from_int(-6), z.zero(), z.one()]).is_empty());
    }
}
