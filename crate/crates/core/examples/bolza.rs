//! Automorphisms of the Bolza curve y^2 = x^5 - x over Q(zeta8), with
//! i = t^2 and sqrt(2) = t - t^3.

use agcert::matgroups::{bolza_check, bolza_maps};

fn main() -> agcert::Result<()> {
    let [v, w, hyper] = bolza_maps()?;
    for (name, m) in [("v", &v), ("w", &w), ("hyperelliptic", &hyper)] {
        let r = bolza_check(m)?;
        println!("{name}: preserves {} order {:?}", r.preserves, r.order);
        println!("  fixed x: {:?} roots {:?} infinity {}", r.fixed_x.polynomial, r.fixed_x.roots, r.fixed_x.infinity);
    }
    Ok(())
}
