//! Eliminates the factorization parameters of `(ux+vz)^3 (mx+nz)` and
//! compares the result with the invariants `I` and `J` of a binary quartic.

use agcert::arith::NumberField;
use agcert::ideals::{buchberger, elimination_ideal, Budget, Ideal};
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let q = NumberField::rationals();
    let ring = PolyRing::new(&q, &["u", "v", "m", "n", "a", "b", "c", "d", "e"], MonomialOrder::Grevlex);
    let p = |s: &str| ring.parse(s);
    let gens = vec![
        p("a - u^3*m")?,
        p("b - (u^3*n + 3*u^2*v*m)")?,
        p("c - (3*u^2*v*n + 3*u*v^2*m)")?,
        p("d - (3*u*v^2*n + v^3*m)")?,
        p("e - v^3*n")?,
    ];
    let t = std::time::Instant::now();
    let elim = elimination_ideal(&Ideal::new(&ring, gens)?, &["u", "v", "m", "n"], Budget::default())?;
    println!("elimination ideal ({:?}):", t.elapsed());
    for g in elim.gens() {
        println!("  {g}");
    }
    let sub = elim.ring().clone();
    let inv = vec![
        sub.parse("12*a*e - 3*b*d + c^2")?,
        sub.parse("27*a*d^2 + 27*b^2*e - 27*b*c*d + 8*c^3")?,
    ];
    let gb_elim = buchberger(&elim, MonomialOrder::Grevlex, Budget::default())?;
    let gb_inv = buchberger(&Ideal::new(&sub, inv.clone())?, MonomialOrder::Grevlex, Budget::default())?;
    let forward = inv.iter().all(|f| gb_elim.contains(f).unwrap());
    let backward = elim.gens().iter().all(|f| gb_inv.contains(f).unwrap());
    println!("I, J in elimination ideal: {forward}");
    println!("elimination ideal in (I, J): {backward}");
    Ok(())
}
