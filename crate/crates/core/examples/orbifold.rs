//! The orbifold (W, Delta): intersection numbers from the resolution data,
//! orbifold Chern numbers and the Bogomolov-Miyaoka-Yau equality.

use agcert::arith::fmt_rat;
use agcert::orbifold::{bmy_check, OrbifoldComponent, OrbifoldPoint, OrbifoldSurface, Weight};
use agcert::surfaces::{CycQuotSing, ExceptionalBlock, NormalSurfaceModel};

fn main() -> agcert::Result<()> {
    let blocks = vec![
        ExceptionalBlock::new("A1 tangent", CycQuotSing::new(2, 1)?)?,
        ExceptionalBlock::new("A1 cusp", CycQuotSing::new(2, 1)?)?,
        ExceptionalBlock::new("A2", CycQuotSing::new(3, 2)?)?,
        ExceptionalBlock::new("A3", CycQuotSing::new(4, 3)?)?,
        ExceptionalBlock::new("1/3(1,1)", CycQuotSing::new(3, 1)?)?,
    ];
    let mut m = NormalSurfaceModel::new(blocks);
    m.set_resolved_k_sq(agcert::arith::int(-1));
    let u = |a: u32, b: u32, c: [u32; 3], d: u32| vec![vec![a], vec![b], vec![0, 0], c.to_vec(), vec![d]];
    m.add_resolved_curve("Cu", -4, 0, u(0, 0, [0, 0, 0], 0))?;
    m.add_resolved_curve("Co", 0, 0, u(2, 0, [0, 0, 0], 0))?;
    m.add_resolved_curve("Fd", -1, 0, u(0, 0, [1, 0, 0], 0))?;
    m.add_resolved_curve("H", -1, 0, u(0, 1, [0, 0, 0], 1))?;
    for (a, b, v) in [("Cu", "Co", 2), ("Cu", "Fd", 1), ("Cu", "H", 1), ("Co", "Fd", 1), ("Co", "H", 0), ("Fd", "H", 0)] {
        m.set_resolved_pair(a, b, v)?;
    }
    for (a, b) in [("K", "K"), ("Cu", "Cu"), ("Co", "Co"), ("Fd", "Fd"), ("H", "H"), ("K", "H")] {
        println!("{a}.{b} = {}", fmt_rat(&m.pair(a, b)?));
    }

    let comp = |c: &str, weight, open_euler| OrbifoldComponent { curve: c.into(), weight, open_euler };
    let comps = vec![
        comp("Cu", Weight::Infinite, -2),
        comp("Co", Weight::Finite(2), -2),
        comp("Fd", Weight::Finite(2), -1),
        comp("H", Weight::Finite(2), -1),
    ];
    let mut points: Vec<OrbifoldPoint> = [16, 4, 3, 8, 6, 4]
        .iter()
        .enumerate()
        .map(|(i, &b)| OrbifoldPoint { name: format!("s{i}"), beta: Some(Weight::Finite(b)) })
        .collect();
    points.extend((0..4).map(|i| OrbifoldPoint { name: format!("c{i}"), beta: Some(Weight::Infinite) }));
    let w = OrbifoldSurface::new(m, 5, comps, points)?;
    let r = bmy_check(&w)?;
    println!("c1^2 = {}, c2 = {}, c1^2 - 3 c2 = {}", fmt_rat(&r.c1sq), fmt_rat(&r.c2), fmt_rat(&r.slack));
    let p = bmy_check(&w.with_weight("H", Weight::Finite(3))?)?;
    println!("with H of weight 3: c1^2 = {}, c2 = {}", fmt_rat(&p.c1sq), fmt_rat(&p.c2));
    Ok(())
}
