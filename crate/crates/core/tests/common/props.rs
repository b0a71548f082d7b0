//! Randomized properties, each driven by a seed so that the proptest suite and
//! the acceptance run exercise the same code.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use agcert::arith::{rat, NFElem, NumberField};
use agcert::curves::{local_intersection, local_ring, Mult};
use agcert::ideals::{buchberger, reduce, s_polynomial, Budget, Ideal};
use agcert::matgroups::{closure, is_invariant, molien_series, reynolds, reynolds_invariants, sd16_generators, MatGroup};
use agcert::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

use super::{ensure, invariant_dimension_times_order, m2_closure, M2, Z8};

pub type Prop = fn(u64) -> Result<(), String>;

pub const ALL: [(&str, Prop); 5] = [
    ("field axioms", field_axioms),
    ("groebner reducedness and s-pairs", groebner),
    ("fulton axioms", fulton),
    ("reynolds invariance", reynolds_invariance),
    ("molien agreement", molien_agreement),
];

fn elem(rng: &mut ChaCha8Rng, k: &Arc<NumberField>) -> NFElem {
    let coeffs: Vec<_> = (0..k.degree()).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
    k.from_poly(&coeffs)
}

pub fn field_axioms(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in [NumberField::rationals(), NumberField::sqrt_minus_two(), NumberField::cyclotomic8()] {
        let (a, b, c) = (elem(&mut rng, &k), elem(&mut rng, &k), elem(&mut rng, &k));
        ensure(&a + &b == &b + &a, "addition commutes")?;
        ensure(&a * &b == &b * &a, "multiplication commutes")?;
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition associates")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication associates")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributive law")?;
        ensure((&a - &a).is_zero(), "a - a = 0")?;
        ensure(&a * &k.one() == a, "one is neutral")?;
        if !a.is_zero() {
            let inv = a.inv().map_err(|e| e.to_string())?;
            ensure((&a * &inv).is_one(), format!("inverse of {a}"))?;
            ensure(b.try_div(&a).map_err(|e| e.to_string())? * &a == b, "division")?;
        }
        ensure(a.pow(3) == &(&a * &a) * &a, "power")?;
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_deg: u32, terms: usize) -> MultiPoly {
    let n = ring.nvars();
    let k = ring.field();
    ring.from_terms((0..terms).map(|_| {
        let mut e = vec![0u32; n];
        let d = rng.gen_range(0..=max_deg);
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        (Monomial::from_exps(&e), k.from_int(rng.gen_range(-3..=3)))
    }))
}

pub fn groebner(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = [MonomialOrder::Grevlex, MonomialOrder::Lex][rng.gen_range(0..2)];
    let ring = PolyRing::new(&NumberField::rationals(), &["x", "y", "z"], order);
    let count = rng.gen_range(1..=3);
    let gens: Vec<MultiPoly> = (0..count).map(|_| random_poly(&mut rng, &ring, 2, 3)).filter(|f| !f.is_zero()).collect();
    if gens.is_empty() {
        return Ok(());
    }
    let ideal = Ideal::new(&ring, gens.clone()).map_err(|e| e.to_string())?;
    let budget = Budget { max_pairs: 2_000, max_basis: 200, max_bits: 4_096 };
    let gb = match buchberger(&ideal, order, budget) {
        Ok(gb) => gb,
        Err(e) if e.is_budget() => return Ok(()),
        Err(e) => return Err(e.to_string()),
    };
    let basis = gb.basis();
    for (i, g) in basis.iter().enumerate() {
        ensure(g.leading_coeff().is_some_and(|c| c.is_one()), format!("{g} is not monic"))?;
        for (j, h) in basis.iter().enumerate() {
            if i != j {
                let lm = h.leading_monomial().unwrap();
                ensure(g.terms().iter().all(|(m, _)| !lm.divides(m)), format!("{g} reducible by {h}"))?;
                ensure(reduce(&s_polynomial(g, h), basis).is_zero(), format!("S({g}, {h}) does not reduce to 0"))?;
            }
        }
    }
    for f in &gens {
        ensure(gb.contains(f).map_err(|e| e.to_string())?, format!("generator {f} not in the basis ideal"))?;
    }
    let f = random_poly(&mut rng, &ring, 3, 4);
    let nf = gb.normal_form(&f).map_err(|e| e.to_string())?;
    ensure(gb.normal_form(&nf).map_err(|e| e.to_string())? == nf, "normal form is idempotent")?;
    ensure(gb.contains(&(&f - &nf)).map_err(|e| e.to_string())?, "f - NF(f) lies in the ideal")?;
    Ok(())
}

/// Random polynomial in `u, v` vanishing at the origin.
fn local_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>) -> MultiPoly {
    loop {
        let f = random_poly(rng, ring, 3, 3);
        let f = f.try_sub(&ring.constant(f.eval(&[ring.field().zero(), ring.field().zero()]))).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn fulton(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = NumberField::rationals();
    let ring = local_ring(&k);
    let (u, v) = (ring.var(0), ring.var(1));
    ensure(local_intersection(&u, &v) == Mult::Finite(1), "I(u, v) = 1")?;
    let f = local_poly(&mut rng, &ring);
    let g = local_poly(&mut rng, &ring);
    let h = local_poly(&mut rng, &ring);
    let fg = local_intersection(&f, &g);
    ensure(fg == local_intersection(&g, &f), format!("symmetry for {f}, {g}"))?;
    let a = random_poly(&mut rng, &ring, 2, 3);
    ensure(fg == local_intersection(&f, &(&g + &(&a * &f))), format!("I(f, g + a f) for {f}, {g}, {a}"))?;
    let prod = local_intersection(&f, &h) + fg;
    ensure(local_intersection(&f, &(&g * &h)) == prod, format!("I(f, g h) = I(f, g) + I(f, h) for {f}, {g}, {h}"))?;
    let unit = &ring.one() + &a.try_sub(&ring.constant(a.eval(&[k.zero(), k.zero()]))).unwrap();
    ensure(local_intersection(&f, &unit) == Mult::Finite(0), "a unit meets nothing")?;
    ensure(local_intersection(&f, &f) == Mult::Infinite, "a curve meets itself infinitely")?;
    Ok(())
}

fn sd16() -> MatGroup {
    closure(&sd16_generators(), 64).expect("finite group")
}

pub fn reynolds_invariance(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = sd16();
    let ring = PolyRing::new(g.field(), &["x", "y"], MonomialOrder::Grevlex);
    let f = random_poly(&mut rng, &ring, 8, 4);
    let e = random_poly(&mut rng, &ring, 8, 4);
    let rf = reynolds(&g, &f).map_err(|e| e.to_string())?;
    ensure(is_invariant(&g, &rf).map_err(|e| e.to_string())?, format!("R({f}) is not invariant"))?;
    ensure(reynolds(&g, &rf).map_err(|e| e.to_string())? == rf, "R is a projection")?;
    let re = reynolds(&g, &e).map_err(|e| e.to_string())?;
    ensure(reynolds(&g, &(&f + &e)).map_err(|e| e.to_string())? == &rf + &re, "R is linear")?;
    Ok(())
}

fn z8_of(m: &agcert::matgroups::NFMatrix) -> M2 {
    let conv = |e: &NFElem| {
        let mut c = [0i64; 4];
        for (i, r) in e.coeffs().iter().enumerate() {
            assert!(r.is_integer());
            c[i] = r.to_integer().try_into().unwrap();
        }
        Z8(c)
    };
    [[conv(m.entry(0, 0)), conv(m.entry(0, 1))], [conv(m.entry(1, 0)), conv(m.entry(1, 1))]]
}

pub fn molien_agreement(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = sd16();
    let elems = full.elements();
    let picks: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
    let h = closure(&picks, 64).map_err(|e| e.to_string())?;
    let ring = PolyRing::new(h.field(), &["x", "y"], MonomialOrder::Grevlex);
    let series = molien_series(&h, 9).map_err(|e| e.to_string())?;
    let oracle_group = m2_closure(&picks.iter().map(z8_of).collect::<Vec<_>>());
    ensure(oracle_group.len() == h.order(), "closure orders differ")?;
    for d in 0..=8u32 {
        let dim = reynolds_invariants(&h, &ring, d).map_err(|e| e.to_string())?.len();
        ensure(series[d as usize] == rat(dim as i64, 1), format!("degree {d}: Molien {} vs {dim}", series[d as usize]))?;
        let total = invariant_dimension_times_order(&oracle_group, d);
        ensure(total == Z8([(dim * h.order()) as i64, 0, 0, 0]), format!("degree {d}: trace sum {total:?}"))?;
    }
    Ok(())
}
