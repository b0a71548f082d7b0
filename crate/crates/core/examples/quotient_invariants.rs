//! K^2 of a quotient surface from the branch data of the covering: the
//! abelian surface by a group of order 48 and the plane by Z/3 x Z/8 give the
//! same weighted plane.

use agcert::arith::{fmt_rat, int};
use agcert::surfaces::{quotient_invariants, BranchClass, QuotientData};

fn main() -> agcert::Result<()> {
    let abelian = QuotientData {
        group_order: 48,
        k_sq: int(0),
        branches: vec![BranchClass { name: "M".into(), order: 2, components: 12, component_dot_total: int(24), k_dot: int(0) }],
        cross: vec![],
        fixed_euler: vec![],
    };
    let a = quotient_invariants(&abelian)?;
    println!("A/G48: M^2 = {}, K^2 = {}", fmt_rat(&a.branch_self_int[0]), fmt_rat(&a.k_sq));

    let line = |name: &str, order| BranchClass { name: name.into(), order, components: 1, component_dot_total: int(1), k_dot: int(-3) };
    let plane = QuotientData {
        group_order: 24,
        k_sq: int(9),
        branches: vec![line("y", 3), line("z", 8)],
        cross: vec![(0, 1, int(1))],
        fixed_euler: vec![(1, 3), (23, 3)],
    };
    let p = quotient_invariants(&plane)?;
    println!("P^2/(Z3 x Z8): pullback K^2 = {}, K^2 = {}, e = {:?}", fmt_rat(&p.pullback_k_sq), fmt_rat(&p.k_sq), p.euler);
    Ok(())
}
