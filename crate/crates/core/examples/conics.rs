//! Cremona transform of the quartic, its flex lines and the line through the
//! node and the residual points; incidence of the four images.

use agcert::arith::NumberField;
use agcert::curves::{apply_map, flexes, incidence_table, intersection_points, PlaneCurve, ProjMap, ProjPoint};
use agcert::ideals::Budget;
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let k = NumberField::sqrt_minus_two();
    let ring = PolyRing::new(&k, &["x", "y", "z"], MonomialOrder::Grevlex);
    let budget = Budget::default();
    let q = PlaneCurve::parse("(x^2 + x*y + y^2 - x*z - y*z)^2 - 8*x*y*(x + y - z)^2", &ring)?;

    // triangle x = 0, y = 0, x + y - z = 0 through the node and the two cusps;
    // the inverse quadratic map in triangle coordinates
    let phi = ProjMap::new(vec![ring.parse("y*z")?, ring.parse("x*z")?, ring.parse("y*z + x*z - x*y")?])?;
    let exceptional = ring.vars_all();

    let fl = flexes(&q, budget)?;
    let mut residual = Vec::new();
    let mut tangents = Vec::new();
    for f in &fl.flexes {
        tangents.push(f.tangent.clone());
        for (p, _) in intersection_points(&q, &f.tangent, budget)?.points {
            if p != f.point {
                residual.push(p);
            }
        }
    }
    let l0 = residual[0].line_through(&residual[1], &ring)?;
    let sources = [("D1", &q), ("D2", &l0), ("D3", &tangents[0]), ("D4", &tangents[1])];
    let mut images = Vec::new();
    for (name, c) in sources {
        let img = apply_map(c, &phi, &exceptional)?;
        println!("{name}: degree {} (removed {:?}): {}", img.curve.degree(), img.removed, img.curve.form());
        images.push((name.to_string(), img.curve));
    }
    let t = incidence_table(&images, budget)?;
    println!("{} points; residual degrees {:?}", t.points.len(), t.residual_degree);
    for (k, p) in t.points.iter().enumerate() {
        let row: Vec<String> = (0..4)
            .map(|i| {
                if !t.membership[i][k] {
                    return "0".into();
                }
                let tangent = (0..4).any(|j| j != i && t.pair(i, j)[k].finite() == Some(3));
                if tangent { "1+".into() } else { "1".into() }
            })
            .collect();
        println!("{p}: {}", row.join(" "));
    }
    let origin = ProjPoint::from_ints(&k, [0, 0, 1])?;
    println!("node on L0: {}", l0.contains(&origin));
    Ok(())
}
