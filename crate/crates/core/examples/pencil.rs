//! Quartics with a node and two cusps of prescribed tangent cones form a
//! pencil; sampling its members shows that only a = -8 carries the flex
//! configuration over Q(sqrt(-2)).

use agcert::arith::NumberField;
use agcert::cli::falsify_pencil;
use agcert::curves::{linear_system, Condition, LinearSystemSpec, ProjPoint};
use agcert::ideals::Budget;
use agcert::poly::{MonomialOrder, PolyRing};

fn main() -> agcert::Result<()> {
    let k = NumberField::sqrt_minus_two();
    let ring = PolyRing::new(&k, &["x", "y", "z"], MonomialOrder::Grevlex);
    let p = |c| ProjPoint::from_ints(&k, c);
    let spec = LinearSystemSpec {
        degree: 4,
        conditions: vec![
            Condition::Multiplicity { point: p([0, 0, 1])?, m: 2 },
            Condition::TangentCone { point: p([0, 1, 1])?, cone: ring.parse("(y - z)^2")? },
            Condition::TangentCone { point: p([1, 0, 1])?, cone: ring.parse("(x - z)^2")? },
        ],
    };
    let sys = linear_system(&ring, &spec)?;
    println!("{} monomials, conditions of rank {}, projective dimension {}", sys.monomials, sys.rank, sys.dimension - 1);
    for f in &sys.basis {
        println!("  {f}");
    }

    let base = ring.parse("(x^2 + x*y + y^2 - x*z - y*z)^2")?;
    let dir = ring.parse("x*y*(x + y - z)^2")?;
    let samples: Vec<i64> = (-5..=5).filter(|&a| a != 0).collect();
    let t = std::time::Instant::now();
    let r = falsify_pencil(&base, &dir, &p([0, 0, 1])?, -8, &samples, Budget::default())?;
    println!("a = {}: holds {} witness {:?}", r.holds_at.a, r.holds_at.holds, r.holds_at.witness);
    for s in &r.samples {
        println!("a = {:>2}: holds {} ({})", s.a, s.holds, s.reason.as_deref().unwrap_or(""));
    }
    println!("elapsed {:?}", t.elapsed());
    Ok(())
}
