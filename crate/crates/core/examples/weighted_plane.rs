//! P(1,3,8): canonical degree, its minimal resolution, Hirzebruch-Jung chains
//! and the adjunction searches for the strict transforms of the coordinate lines.

use agcert::arith::fmt_rat;
use agcert::surfaces::{
    adjunction_search, hj_resolution, weighted_bezout, CurveData, CycQuotSing, ExceptionalBlock, NormalSurfaceModel,
};

fn main() -> agcert::Result<()> {
    let w = [1, 3, 8];
    let kd = 12;
    for (n, q) in [(8, 3), (3, 2), (3, 1)] {
        let c = hj_resolution(CycQuotSing::new(n, q)?);
        let d: Vec<String> = c.discrepancies().iter().map(fmt_rat).collect();
        println!("1/{n}({q}): chain {:?} discrepancies {:?}", c.b, d);
    }

    let mut m = NormalSurfaceModel::new(vec![
        ExceptionalBlock::new("1/8(1,3)", CycQuotSing::new(8, 3)?)?,
        ExceptionalBlock::new("A2", CycQuotSing::new(3, 2)?)?,
    ]);
    let k_sq = weighted_bezout(kd, kd, w)?;
    m.set_pair("K", "K", k_sq.clone());
    println!("K^2 = {}, K_Z^2 = {}", fmt_rat(&k_sq), fmt_rat(&m.resolved_k_sq()?));

    for (name, degree, blocks) in [("L23", 1, vec![0, 1]), ("L13", 3, vec![0]), ("L12", 8, vec![1])] {
        let data = CurveData {
            self_int: weighted_bezout(degree, degree, w)?,
            k_deg: -weighted_bezout(kd, degree, w)?,
            blocks,
        };
        println!("{name}: C^2 = {}, K.C = {}", fmt_rat(&data.self_int), fmt_rat(&data.k_deg));
        for s in adjunction_search(&m, &data, 6) {
            println!("  u = {:?}: strict transform^2 = {}, K_Z.C = {}", s.u, fmt_rat(&s.self_int), fmt_rat(&s.k_deg));
        }
    }
    Ok(())
}
