//! The rational quartic with a node and two cusps: singular points, flexes,
//! flex tangents and the collinearity of the residual points with the node.

use agcert::arith::NumberField;
use agcert::curves::{classify, flexes, intersection_points, singular_points, PlaneCurve, ProjPoint};
use agcert::ideals::Budget;
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let k = NumberField::sqrt_minus_two();
    let ring = PolyRing::new(&k, &["x", "y", "z"], MonomialOrder::Grevlex);
    let q = PlaneCurve::parse("(x^2 + x*y + y^2 - x*z - y*z)^2 - 8*x*y*(x + y - z)^2", &ring)?;
    let budget = Budget::default();

    let t = std::time::Instant::now();
    let sing = singular_points(&q, budget)?;
    for p in &sing.points {
        let rep = classify(&q, p)?;
        println!("singular {p}: multiplicity {} milnor {} -> {}", rep.multiplicity, rep.milnor, rep.label);
    }

    let node = ProjPoint::from_ints(&k, [0, 0, 1])?;
    let fl = flexes(&q, budget)?;
    println!("{} flexes in the field, {} Hessian points elsewhere", fl.flexes.len(), fl.residual_degree);
    let mut residual_points = Vec::new();
    for f in &fl.flexes {
        println!("flex {} contact {} tangent {}", f.point, f.contact, f.tangent.form());
        for (p, m) in intersection_points(&q, &f.tangent, budget)?.points {
            if p != f.point {
                println!("  tangent meets Q again at {p} (multiplicity {m:?})");
                residual_points.push(p);
            }
        }
    }
    if let [a, b] = residual_points.as_slice() {
        let line = a.line_through(b, &ring)?;
        println!("line through residual points: {} contains node: {}", line.form(), line.contains(&node));
    }
    println!("elapsed {:?}", t.elapsed());
    Ok(())
}
