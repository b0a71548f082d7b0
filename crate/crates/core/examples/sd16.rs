//! The semidihedral group of order 16 in GL(2, Q(zeta8)): closure, element
//! orders, its mirrors, invariants and their relation.

use agcert::arith::NumberField;
use agcert::matgroups::{
    closure, element_order, fundamental_invariants, invariant_relations, mirrors, molien_series,
    presentation_semidihedral, quadratic_singularity_rank, NFMatrix,
};
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let k = NumberField::cyclotomic8();
    let g1 = NFMatrix::parse(&[&["0", "-t"], &["-t^3", "0"]], &k)?;
    let g2 = NFMatrix::parse(&[&["0", "1"], &["1", "0"]], &k)?;
    let g = closure(&[g1.clone(), g2.clone()], 64)?;
    println!("order {}", g.order());
    for (name, m) in [("g1", &g1), ("g2", &g2), ("g1 g2", &g1.mul(&g2))] {
        println!("ord({name}) = {:?}", element_order(m, 64));
    }
    println!("semidihedral presentation: {:?}", presentation_semidihedral(&g).is_some());

    let ring = PolyRing::new(&k, &["x", "y"], MonomialOrder::Grevlex);
    let d4 = closure(&[g2.clone(), g1.inverse()?.mul(&g2).mul(&g1)], 64)?;
    let ms = mirrors(&d4, &ring)?;
    println!("dihedral subgroup of order {} with mirrors {:?}", d4.order(), ms.iter().map(|m| m.form.to_text()).collect::<Vec<_>>());

    let series = molien_series(&g, 13)?;
    println!("Molien series: {}", series.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    let inv = fundamental_invariants(&g, &ring, 12)?;
    for f in &inv {
        println!("invariant of degree {:?}: {f}", f.total_degree());
    }
    let gens = ["x^2*y^2", "x*y*(x^4 + y^4)", "x^8 + y^8"].map(|s| ring.parse(s)).into_iter().collect::<agcert::Result<Vec<_>>>()?;
    let target = PolyRing::new(&k, &["u", "v", "w"], MonomialOrder::Grevlex);
    for r in invariant_relations(&gens, 12, &target)? {
        println!("relation {r}: quadratic rank {:?}", quadratic_singularity_rank(&r));
    }
    Ok(())
}
