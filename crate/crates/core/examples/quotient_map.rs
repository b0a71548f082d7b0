//! Conics through the residual points map the plane onto a quadric; the
//! involution swapping two coordinates has quotient the plane, where the
//! quartic becomes a cuspidal cubic and the fixed curve a conic.

use agcert::arith::NumberField;
use agcert::curves::{
    classify, flexes, image_ideal, intersection_points, singular_points, PlaneCurve, ProjMap,
};
use agcert::ideals::{buchberger, Budget, Ideal};
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let k = NumberField::sqrt_minus_two();
    let p2 = PolyRing::new(&k, &["x", "y", "z"], MonomialOrder::Grevlex);
    let p3 = PolyRing::new(&k, &["a", "b", "c", "d"], MonomialOrder::Grevlex);
    let budget = Budget::default();
    let q = PlaneCurve::parse("(x^2 + x*y + y^2 - x*z - y*z)^2 - 8*x*y*(x + y - z)^2", &p2)?;

    let rho = ProjMap::new(["x^2 + 8*z^2", "x*y - 8*z^2", "x*z + y*z", "y^2 + 8*z^2"].iter().map(|s| p2.parse(s)).collect::<Result<_, _>>()?)?;
    let t = std::time::Instant::now();
    let quadric = image_ideal(&rho, &[], &p3, budget)?;
    println!("image of the plane: {:?} ({:?})", quadric.iter().map(|g| g.to_string()).collect::<Vec<_>>(), t.elapsed());
    let c = image_ideal(&rho, &[q.form().clone()], &p3, budget)?;
    println!("image of Q: {} generators, degrees {:?} ({:?})", c.len(), c.iter().map(|g| g.total_degree()).collect::<Vec<_>>(), t.elapsed());

    let sigma = [p3.parse("d")?, p3.parse("b")?, p3.parse("c")?, p3.parse("a")?];
    let gb = buchberger(&Ideal::new(&p3, c.clone())?, p3.order(), budget)?;
    let stable = c.iter().all(|g| gb.contains(&g.compose(&sigma).unwrap()).unwrap());
    println!("sigma preserves the image of Q: {stable}");

    let psi = ProjMap::new(vec![p3.parse("a + d")?, p3.parse("b")?, p3.parse("c")?])?;
    let cu = image_ideal(&psi, &c, &p2, budget)?;
    let cu = PlaneCurve::new(cu[0].clone())?.monic();
    println!("Cu = {} ({:?})", cu.form(), t.elapsed());
    let mut fixed = quadric.clone();
    fixed.push(p3.parse("a - d")?);
    let co = image_ideal(&psi, &fixed, &p2, budget)?;
    let co = PlaneCurve::new(co[0].clone())?.monic();
    println!("Co = {}", co.form());
    for p in singular_points(&cu, budget)?.points {
        println!("Cu singular at {p}: {:?}", classify(&cu, &p)?.label);
    }
    let inter = intersection_points(&co, &cu, budget)?;
    println!("Co . Cu: {:?} residual {}", inter.points.iter().map(|(p, m)| (p.to_string(), *m)).collect::<Vec<_>>(), inter.residual_degree);
    for f in flexes(&cu, budget)?.flexes {
        let i = intersection_points(&co, &f.tangent, budget)?;
        println!("flex {} tangent {} meets Co at {:?}", f.point, f.tangent.form(), i.points.iter().map(|(p, m)| (p.to_string(), *m)).collect::<Vec<_>>());
    }
    println!("elapsed {:?}", t.elapsed());
    Ok(())
}
