//! One runner per catalogue entry. Each runner reads its inputs from the
//! scenario, computes every expected name and records it in the context.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use super::pencil;
use super::Ctx;
use crate::arith::{fmt_rat, int, parse_rat, NFElem, Rat};
use crate::curves::{
    bezout_audit, classify, flexes, image_ideal, incidence_table, intersection_points, linear_system, singular_points,
    apply_map, Condition, Flex, LinearSystemSpec, PlaneCurve, ProjMap, ProjPoint,
};
use crate::error::{Error, Result};
use crate::ideals::{buchberger, elimination_ideal, Budget, Ideal};
use crate::linalg;
use crate::matgroups::{
    closure, element_order, fundamental_invariants, invariant_relations, is_invariant, mirror_image_cusp_check,
    mirrors, molien_series, presentation_semidihedral, quadratic_singularity_rank, reynolds_invariants, bolza_check,
    CurveAutomorphism, NFMatrix, RatFun,
};
use crate::orbifold::{bmy_check, OrbifoldComponent, OrbifoldPoint, OrbifoldSurface, Weight};
use crate::poly::{BinaryQuartic, Monomial, MonomialOrder, MultiPoly, PolyRing, UniPoly};
use crate::surfaces::{
    adjunction_search, canonical_class, hj_resolution, mumford_intersect, quotient_invariants, weighted_bezout,
    BranchClass, CurveData, CycQuotSing, ExceptionalBlock, NormalSurfaceModel, QuotientData,
};

pub(super) type Runner = fn(&mut Ctx) -> Result<()>;

pub(super) const RUNNERS: [(&str, Runner); 14] = [
    ("quartic", quartic),
    ("triple-root-criterion", triple_root_criterion),
    ("pencil", pencil_system),
    ("falsify-pencil", falsify),
    ("p138-invariants", p138_invariants),
    ("adjunction-searches", adjunction_searches),
    ("bolza-curve", bolza_curve),
    ("weighted-bezout-m48", weighted_bezout_m48),
    ("mirror24", mirror24),
    ("conics", conics),
    ("quotient-map-61", quotient_map),
    ("orbifold-W", orbifold_w),
    ("sd16", sd16),
    ("quotient-invariants-s2", quotient_invariants_s2),
];

fn texts(points: &[ProjPoint]) -> Vec<String> {
    points.iter().map(|p| p.to_text()).collect()
}

fn rat_input(ctx: &Ctx, name: &str) -> Result<Rat> {
    let v = ctx.input(name)?;
    let text = match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    parse_rat(&text).ok_or_else(|| Error::Missing(format!("input `{name}` is not a rational")))
}

fn parse_rat_str(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| Error::Syntax { offset: 0, message: format!("not a rational: {s}") })
}

/// Points other than `skip` where the line meets the curve.
fn residual_on_tangent(c: &PlaneCurve, f: &Flex, budget: Budget) -> Result<Vec<ProjPoint>> {
    let inter = intersection_points(c, &f.tangent, budget)?;
    Ok(inter.points.into_iter().map(|(p, _)| p).filter(|p| *p != f.point).collect())
}

/// Rank of the coefficient matrix of a family of polynomials.
fn span_rank(polys: &[&MultiPoly]) -> usize {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for f in polys {
        for (m, _) in f.terms() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let Some(first) = polys.first() else { return 0 };
    let k = first.field().clone();
    let rows: linalg::Matrix = polys
        .iter()
        .map(|f| {
            let mut row = vec![k.zero(); index.len()];
            for (m, c) in f.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows)
}

fn quartic(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let b = ctx.budget;
    let q = PlaneCurve::new(ctx.poly("Q", &ring)?)?;
    let p = (1..=7).map(|i| ctx.point(&format!("p{i}"))).collect::<Result<Vec<_>>>()?;

    let t = Instant::now();
    let sing = singular_points(&q, b)?;
    ctx.time("singular_points", t);
    ctx.set("singular_points", texts(&sing.points));
    ctx.note("singular_residual_degree", sing.residual_degree);
    let labels = p[..3].iter().map(|x| classify(&q, x).map(|r| r.label.to_string())).collect::<Result<Vec<_>>>();
    ctx.set_result("singularity_types", labels);

    let t = Instant::now();
    let fl = flexes(&q, b)?;
    ctx.time("flexes", t);
    ctx.note("flex_residual_degree", fl.residual_degree);
    let points: Vec<ProjPoint> = fl.flexes.iter().map(|f| f.point.clone()).collect();
    ctx.set("flex_points", texts(&points));
    ctx.set("flex_contacts", fl.flexes.iter().map(|f| f.contact).collect::<Vec<_>>());

    let mut residual = Vec::new();
    for (name, flex_point) in [("tangent_at_p4_residual", &p[3]), ("tangent_at_p5_residual", &p[4])] {
        match fl.flexes.iter().find(|f| f.point == *flex_point) {
            Some(f) => {
                let r = residual_on_tangent(&q, f, b)?;
                ctx.set(name, texts(&r));
                residual.extend(r);
            }
            None => ctx.fail(name, "point is not among the computed flexes"),
        }
    }
    ctx.set("flex_tangent_residuals", texts(&residual));
    match residual.as_slice() {
        [a, c] => {
            let line = a.line_through(c, &ring)?;
            ctx.set("residual_line_contains_node", line.contains(&p[0]));
            ctx.set("residual_line", line.monic().form().to_text());
        }
        _ => {
            let why = format!("{} residual points instead of 2", residual.len());
            ctx.fail("residual_line_contains_node", why.clone());
            ctx.fail("residual_line", why);
        }
    }
    Ok(())
}

/// Root of multiplicity at least 3 of `a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4`,
/// decided by gcds: `z^3` divides, or `p, p', p''` share a root in the chart `z = 1`.
fn triple_root_by_gcd(c: &[NFElem; 5]) -> bool {
    if c[0].is_zero() && c[1].is_zero() && c[2].is_zero() {
        return true;
    }
    let k = c[0].field().clone();
    let p = UniPoly::new(&k, c.iter().rev().cloned().collect());
    if p.is_zero() {
        return true;
    }
    let d1 = p.derivative();
    let g = p.gcd(&d1).gcd(&d1.derivative());
    g.degree().is_some_and(|d| d >= 1)
}

fn triple_root_criterion(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let b = ctx.budget;
    let gens = ctx.input_as::<Vec<String>>("generators")?.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
    let drop: Vec<String> = ctx.input_as("eliminate")?;
    let drop_refs: Vec<&str> = drop.iter().map(|s| s.as_str()).collect();

    let t = Instant::now();
    let elim = elimination_ideal(&Ideal::new(&ring, gens)?, &drop_refs, b);
    ctx.time("elimination", t);
    let equal = elim.and_then(|elim| {
        let sub = elim.ring().clone();
        let inv = ctx.input_as::<Vec<String>>("invariants")?.iter().map(|s| sub.parse(s)).collect::<Result<Vec<_>>>()?;
        let gb_elim = buchberger(&elim, MonomialOrder::Grevlex, b)?;
        let gb_inv = buchberger(&Ideal::new(&sub, inv.clone())?, MonomialOrder::Grevlex, b)?;
        let mut forward = true;
        for f in &inv {
            forward &= gb_elim.contains(f)?;
        }
        let mut backward = true;
        for f in elim.gens() {
            backward &= gb_inv.contains(f)?;
        }
        Ok(forward && backward)
    });
    ctx.set_result("ideal_equality", equal);

    let samples: usize = ctx.input_as("samples")?;
    let seed: u64 = ctx.input_as("seed")?;
    let range: i64 = ctx.input_as("coefficient_range")?;
    let k = ctx.field.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut agree, mut triple) = (0usize, 0usize);
    let t = Instant::now();
    for i in 0..samples {
        let mut draw = || -> [i64; 5] {
            if i % 2 == 0 {
                // (u x + v z)^3 (m x + n z)
                let [u, v, m, n] = [0; 4].map(|_| rng.gen_range(-range..=range));
                let cubed = [u * u * u, 3 * u * u * v, 3 * u * v * v, v * v * v];
                let mut out = [0i64; 5];
                for (j, cj) in cubed.iter().enumerate() {
                    out[j] += cj * m;
                    out[j + 1] += cj * n;
                }
                out
            } else {
                [0; 5].map(|_| rng.gen_range(-range..=range))
            }
        };
        // the zero form has no roots to speak of
        let c = loop {
            let c = draw();
            if c.iter().any(|&x| x != 0) {
                break c.map(|x| k.from_int(x));
            }
        };
        let by_invariants = BinaryQuartic::new(c.clone()).has_triple_root()?.triple;
        let by_gcd = triple_root_by_gcd(&c);
        agree += usize::from(by_invariants == by_gcd);
        triple += usize::from(by_gcd);
    }
    ctx.time("sampling", t);
    ctx.set("oracle_agreement", agree);
    ctx.set("triple_root_samples", triple);
    Ok(())
}

fn pencil_system(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    #[derive(Deserialize)]
    struct Cusp {
        point: String,
        cone: String,
    }
    let node = ctx.point("node")?;
    let cusps: Vec<Cusp> = ctx.input_as("cusps")?;
    let mut conditions = vec![Condition::Multiplicity { point: node, m: 2 }];
    for c in &cusps {
        conditions.push(Condition::TangentCone {
            point: ProjPoint::parse(&c.point, &ctx.field)?,
            cone: ring.parse(&c.cone)?,
        });
    }
    let degree: u32 = ctx.input_as("degree")?;
    let sys = linear_system(&ring, &LinearSystemSpec { degree, conditions })?;
    ctx.set("dimension", sys.dimension);
    ctx.set("condition_rank", sys.rank);
    let gens = ctx.input_as::<Vec<String>>("generators")?.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
    let basis: Vec<&MultiPoly> = sys.basis.iter().collect();
    let given: Vec<&MultiPoly> = gens.iter().collect();
    let both: Vec<&MultiPoly> = basis.iter().chain(&given).copied().collect();
    let r = span_rank(&both);
    ctx.set("span_equal", r == span_rank(&basis) && r == span_rank(&given));
    ctx.note("basis", sys.basis.iter().map(|f| f.to_text()).collect::<Vec<_>>());
    Ok(())
}

fn falsify(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let base = ctx.poly("base", &ring)?;
    let direction = ctx.poly("direction", &ring)?;
    let node = ctx.point("node")?;
    let holds_at: i64 = ctx.input_as("a")?;
    let samples: Vec<i64> = ctx.input_as("samples")?;
    let single: i64 = ctx.input_as("single_sample")?;
    let b = ctx.budget;

    let t = Instant::now();
    let report = pencil::falsify_pencil(&base, &direction, &node, holds_at, &samples, b);
    ctx.time("falsify", t);
    match report {
        Ok(r) => {
            ctx.set("configuration_at_a", r.holds_at.holds);
            ctx.set("failing_samples", r.samples.iter().filter(|c| !c.holds).count());
            if let Some(c) = r.samples.iter().find(|c| c.a == single) {
                ctx.set("single_sample_holds", c.holds);
            } else {
                let c = pencil::configuration_holds(&pencil::member(&base, &direction, single)?, &node, b)?;
                ctx.set("single_sample_holds", c.holds);
            }
            ctx.note("configurations", &r);
        }
        Err(e) if e.is_budget() => {
            for n in ["configuration_at_a", "failing_samples", "single_sample_holds"] {
                ctx.indeterminate(n, e.to_string());
            }
        }
        Err(e) => return Err(e),
    }

    if ctx.optional {
        let t = Instant::now();
        match pencil::long_run(&base, &direction, &node, b) {
            Ok(r) => {
                ctx.set("long_run_subcase", r.consistent);
                ctx.note("long_run", &r);
            }
            Err(e) if e.is_budget() => ctx.indeterminate("long_run_subcase", e.to_string()),
            Err(e) => ctx.fail("long_run_subcase", e.to_string()),
        }
        ctx.time("long_run", t);
    } else {
        ctx.skip("long_run_subcase", "opt-in; run with --optional");
    }
    Ok(())
}

#[derive(Deserialize)]
struct BlockSpec {
    label: String,
    n: u32,
    q: u32,
}

fn blocks(ctx: &Ctx) -> Result<Vec<ExceptionalBlock>> {
    ctx.input_as::<Vec<BlockSpec>>("blocks")?
        .iter()
        .map(|b| ExceptionalBlock::new(&b.label, CycQuotSing::new(b.n, b.q)?))
        .collect()
}

fn weights(ctx: &Ctx) -> Result<[u32; 3]> {
    ctx.input_as("weights")
}

fn p138_invariants(ctx: &mut Ctx) -> Result<()> {
    let w = weights(ctx)?;
    let k_deg: u32 = w.iter().sum();
    // K = O(-(w0 + w1 + w2))
    let k_sq = weighted_bezout(k_deg, k_deg, w)?;
    ctx.set("k_sq", fmt_rat(&k_sq));
    let mut m = NormalSurfaceModel::new(blocks(ctx)?);
    m.set_pair("K", "K", k_sq);
    ctx.set("k_sq_resolution", fmt_rat(&m.resolved_k_sq()?));
    let kz = canonical_class(&m);
    ctx.note("k_sq_resolution_by_pullback", fmt_rat(&mumford_intersect(&m, &kz, &kz)?));

    let fixed: Vec<(u32, i64)> = ctx.input_as("fixed_euler")?;
    let order = fixed.iter().map(|f| f.0).sum();
    let q = quotient_invariants(&QuotientData { group_order: order, k_sq: Rat::zero(), branches: vec![], cross: vec![], fixed_euler: fixed })?;
    let e = q.euler.ok_or_else(|| Error::Missing("fixed-locus data".into()))?;
    ctx.set("euler", e);
    ctx.set("euler_resolution", m.resolved_euler(e));

    let singularities: Vec<(String, u32, u32)> = ctx.input_as("singularities")?;
    for (name, n, q) in singularities {
        let chain = hj_resolution(CycQuotSing::new(n, q)?);
        ctx.set(&format!("chain_{name}"), &chain.b);
        ctx.set(&format!("discrepancy_{name}"), chain.discrepancies().iter().map(fmt_rat).collect::<Vec<_>>());
    }
    Ok(())
}

fn m48_form(ctx: &Ctx, ring: &Arc<PolyRing>) -> Result<MultiPoly> {
    ctx.poly("M48", ring)
}

fn adjunction_searches(ctx: &mut Ctx) -> Result<()> {
    let w = weights(ctx)?;
    let k_deg: u32 = w.iter().sum();
    let mut m = NormalSurfaceModel::new(blocks(ctx)?);
    m.set_pair("K", "K", weighted_bezout(k_deg, k_deg, w)?);
    let bound: u32 = ctx.input_as("bound")?;

    #[derive(Deserialize)]
    struct Line {
        name: String,
        degree: u32,
        blocks: Vec<usize>,
    }
    let lines: Vec<Line> = ctx.input_as("lines")?;
    let mut l23 = None;
    for l in &lines {
        let data = CurveData {
            self_int: weighted_bezout(l.degree, l.degree, w)?,
            k_deg: -weighted_bezout(k_deg, l.degree, w)?,
            blocks: l.blocks.clone(),
        };
        let sols = adjunction_search(&m, &data, bound);
        let mut values: Vec<(Rat, Rat)> = sols.iter().map(|s| (s.self_int.clone(), s.k_deg.clone())).collect();
        values.sort();
        values.dedup();
        let key = l.name.to_lowercase();
        ctx.set(&format!("{key}_solutions"), sols.len());
        match values.as_slice() {
            [(s, k)] => {
                ctx.set(&format!("{key}_self_int"), fmt_rat(s));
                ctx.set(&format!("{key}_k_deg"), fmt_rat(k));
            }
            _ => {
                let why = format!("{} distinct outcomes", values.len());
                ctx.fail(&format!("{key}_self_int"), why.clone());
                ctx.fail(&format!("{key}_k_deg"), why);
            }
        }
        if l.name == "L23" {
            l23 = Some((data, sols));
        }
    }
    let (l23_data, l23_sols) = l23.ok_or_else(|| Error::Missing("line L23".into()))?;

    // theta on A: its image in A/G has theta48^2 = theta^2/|G| and K.theta48 = -(mirrors . theta)/|G|
    let theta_sq = rat_input(ctx, "theta_sq")?;
    let order = rat_input(ctx, "group_order")?;
    let mirror_dot = rat_input(ctx, "mirrors_dot_theta")?;
    let t_self = &theta_sq / &order;
    let t_k = -(&mirror_dot / &order);
    ctx.set("theta48_self_int", fmt_rat(&t_self));
    ctx.set("theta48_k_deg", fmt_rat(&t_k));
    ctx.set("theta48_matches_l23", t_self == l23_data.self_int && t_k == l23_data.k_deg);
    let theta = CurveData { self_int: t_self, k_deg: t_k, blocks: l23_data.blocks.clone() };
    let c0: Vec<Rat> = adjunction_search(&m, &theta, bound).into_iter().map(|s| s.self_int).collect();
    if c0.is_empty() || c0.iter().any(|x| *x != c0[0]) {
        ctx.fail("c0_self_int", "no unique outcome");
    } else {
        ctx.set("c0_self_int", fmt_rat(&c0[0]));
    }

    // M48 avoids both singular points, so its strict transform is its pullback
    let ring = ctx.ring();
    let f = m48_form(ctx, &ring)?;
    let sing_points: Vec<String> = ctx.input_as("singular_points")?;
    let mut avoids = true;
    for p in &sing_points {
        avoids &= !f.eval(ProjPoint::parse(p, &ctx.field)?.coords()).is_zero();
    }
    ctx.set("m48_avoids_singular_points", avoids);
    let m48_deg: u32 = ctx.input_as("m48_degree")?;
    let zero_u: Vec<Vec<u32>> = m.blocks.iter().map(|b| vec![0; b.chain.len()]).collect();
    let u = l23_sols.first().ok_or_else(|| Error::Missing("L23 solution".into()))?.u.clone();
    m.add_curve("M48", weighted_bezout(m48_deg, m48_deg, w)?, -weighted_bezout(k_deg, m48_deg, w)?, zero_u)?;
    m.add_curve("C0", l23_data.self_int.clone(), l23_data.k_deg.clone(), u)?;
    m.set_pair("M48", "C0", weighted_bezout(m48_deg, 1, w)?);
    let (a, c) = (m.strict_transform("M48")?, m.strict_transform("C0")?);
    ctx.set("m48_dot_c0", fmt_rat(&mumford_intersect(&m, &a, &c)?));
    ctx.note("c0_self_int_by_pullback", fmt_rat(&mumford_intersect(&m, &c, &c)?));
    Ok(())
}

fn automorphism(ctx: &Ctx, name: &str) -> Result<std::result::Result<CurveAutomorphism, Error>> {
    let [xn, xd, yn, yd]: [String; 4] = ctx.input_as(name)?;
    let x = RatFun::parse(&xn, &xd, &ctx.field)?;
    let y = RatFun::parse(&yn, &yd, &ctx.field)?;
    Ok(CurveAutomorphism::new(x, y))
}

fn upolys(ctx: &Ctx, name: &str) -> Result<Vec<UniPoly>> {
    let ring = PolyRing::new(&ctx.field, &["x"], MonomialOrder::Lex);
    ctx.input_as::<Vec<String>>(name)?.iter().map(|s| ring.parse(s)?.to_uni(0)).collect()
}

fn bolza_curve(ctx: &mut Ctx) -> Result<()> {
    let torsion = upolys(ctx, "torsion_polynomials")?;
    let target = upolys(ctx, "w_fixed_divides")?;
    for name in ["v", "w"] {
        match automorphism(ctx, name)? {
            Ok(m) => {
                let r = bolza_check(&m)?;
                ctx.set(&format!("{name}_preserves"), r.preserves);
                match r.order {
                    Some(o) => ctx.set(&format!("{name}_order"), o),
                    None => ctx.indeterminate(&format!("{name}_order"), "order exceeds the bound"),
                }
                if name == "v" {
                    ctx.set("v_fixed_x", &r.fixed_x);
                    ctx.set("v_fixed_avoid_torsion", r.fixed_x.avoids(&torsion));
                } else {
                    ctx.set("w_fixed_degree", r.fixed_x.polynomial.degree());
                    ctx.set("w_fixed_divides", target.iter().all(|t| r.fixed_x.polynomial.divides(t)));
                }
            }
            Err(Error::Inconsistent(why)) => {
                ctx.set(&format!("{name}_preserves"), false);
                ctx.note(&format!("{name}_rejected"), why);
            }
            Err(e) => return Err(e),
        }
    }
    for name in ["v_printed", "w_printed"] {
        if ctx.s.inputs.contains_key(name) {
            let ok = automorphism(ctx, name)?.is_ok();
            ctx.note(&format!("{name}_preserves"), ok);
        }
    }
    Ok(())
}

fn weighted_bezout_m48(ctx: &mut Ctx) -> Result<()> {
    let w = weights(ctx)?;
    let m: u32 = ctx.input_as("m48_degree")?;
    let l12: u32 = ctx.input_as("l12_degree")?;
    let l13: u32 = ctx.input_as("l13_degree")?;
    ctx.set("m48_sq", fmt_rat(&weighted_bezout(m, m, w)?));
    ctx.set("l12_dot_m48", fmt_rat(&weighted_bezout(l12, m, w)?));
    ctx.set("l13_dot_m48", fmt_rat(&weighted_bezout(l13, m, w)?));
    // M48 = -2K, with K.D = -(w0+w1+w2) deg D / (w0 w1 w2)
    let k_deg: u32 = w.iter().sum();
    let k_dot = |d: u32| -> Result<Rat> { Ok(-weighted_bezout(k_deg, d, w)?) };
    if int(m as i64) != int(2 * k_deg as i64) {
        ctx.note("m48_is_minus_two_k", false);
    }
    let k_sq = weighted_bezout(k_deg, k_deg, w)?;
    ctx.set("m48_sq_via_k", fmt_rat(&(int(4) * k_sq)));
    ctx.set("l12_dot_m48_via_k", fmt_rat(&(int(-2) * k_dot(l12)?)));
    ctx.set("l13_dot_m48_via_k", fmt_rat(&(int(-2) * k_dot(l13)?)));
    Ok(())
}

fn mirror24(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let w = weights(ctx)?;
    let f = match ctx.poly("M48", &ring) {
        Ok(f) => {
            ctx.set("parses", true);
            f
        }
        Err(e) => {
            ctx.set("parses", false);
            return Err(Error::Inconsistent(e.to_string()));
        }
    };
    ctx.set("term_count", f.len());
    let deg = f.weighted_degree(&w);
    ctx.set("weighted_homogeneous", deg.is_some());
    let deg = deg.ok_or_else(|| Error::Inconsistent("not weighted homogeneous".into()))?;
    ctx.set("weighted_degree", deg);
    let l12: u32 = ctx.input_as("l12_degree")?;
    let l13: u32 = ctx.input_as("l13_degree")?;
    ctx.set("self_intersection", fmt_rat(&weighted_bezout(deg, deg, w)?));
    ctx.set("l12_intersection", fmt_rat(&weighted_bezout(deg, l12, w)?));
    ctx.set("l13_intersection", fmt_rat(&weighted_bezout(deg, l13, w)?));

    if !ctx.optional {
        ctx.skip("singularity_census", "stretch check; run with --optional");
        return Ok(());
    }
    // chart x = 1 is a smooth affine plane (weight 1); homogenize with a new variable
    let t = Instant::now();
    let plane = PolyRing::new(&ctx.field, &["y", "z", "h"], MonomialOrder::Grevlex);
    let one = ring.from_int(1);
    let affine = f.compose(&[one, ring.var(1), ring.var(2)])?;
    let affine = affine.rename_into(&plane, &[2, 0, 1]);
    let census = (|| -> Result<Vec<String>> {
        let c = PlaneCurve::new(affine.homogenize(2))?;
        let sing = singular_points(&c, ctx.budget)?;
        if sing.residual_degree > 0 {
            return Err(Error::Budget(format!("{} singular points outside the field", sing.residual_degree)));
        }
        let mut out = Vec::new();
        for p in sing.points.iter().filter(|p| !p.coords()[2].is_zero()) {
            out.push(classify(&c, p)?.label.to_string());
        }
        out.sort();
        Ok(out)
    })();
    ctx.time("census", t);
    ctx.set_result("singularity_census", census);
    Ok(())
}

/// Curves containing point `k`, with `+` on the ones meeting another with multiplicity 3.
fn signatures(t: &crate::curves::IncidenceTable) -> Vec<String> {
    let n = t.curves.len();
    (0..t.points.len())
        .map(|k| {
            (0..n)
                .filter(|&i| t.membership[i][k])
                .map(|i| {
                    let plus = (0..n).any(|j| j != i && t.pair(i, j)[k].finite() == Some(3));
                    format!("{}{}", t.curves[i], if plus { "+" } else { "" })
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn conics(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let b = ctx.budget;
    let q = PlaneCurve::new(ctx.poly("Q", &ring)?)?;
    let node = ctx.point("node")?;
    let comps = ctx.input_as::<Vec<String>>("cremona")?.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
    let phi = ProjMap::new(comps)?;
    let exceptional =
        ctx.input_as::<Vec<String>>("exceptional")?.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;

    let t = Instant::now();
    let fl = flexes(&q, b)?;
    let mut residual = Vec::new();
    for f in &fl.flexes {
        residual.extend(residual_on_tangent(&q, f, b)?);
    }
    let [r1, r2] = residual.as_slice() else {
        return Err(Error::Inconsistent(format!("{} residual points of flex tangents", residual.len())));
    };
    let l0 = r1.line_through(r2, &ring)?;
    ctx.note("l0", l0.monic().form().to_text());
    ctx.note("l0_contains_node", l0.contains(&node));
    let mut sources = vec![("D1", q.clone()), ("D2", l0)];
    for (i, f) in fl.flexes.iter().enumerate() {
        sources.push((["D3", "D4"].get(i).copied().unwrap_or("D5"), f.tangent.clone()));
    }
    let mut images = Vec::new();
    for (name, c) in &sources {
        let img = apply_map(c, &phi, &exceptional)?;
        ctx.set(&format!("{}_degree", name.to_lowercase()), img.curve.degree());
        ctx.note(&format!("{}_equation", name.to_lowercase()), img.curve.form().to_text());
        images.push((name.to_string(), img.curve));
    }
    ctx.time("images", t);

    let t = Instant::now();
    let conic_images: Vec<(String, PlaneCurve)> = images.iter().filter(|(n, _)| n != "D2").cloned().collect();
    let sub = incidence_table(&conic_images, b)?;
    ctx.set("signatures_d1_d3_d4", signatures(&sub));
    let mut sums = BTreeMap::new();
    let mut in_field = true;
    for i in 0..conic_images.len() {
        for j in i + 1..conic_images.len() {
            let a = bezout_audit(&conic_images[i].1, &conic_images[j].1, b)?;
            sums.insert(format!("{}.{}", conic_images[i].0, conic_images[j].0), a.found as usize + a.residual_degree);
            in_field &= a.residual_degree == 0;
        }
    }
    ctx.set("bezout_sums", &sums);
    ctx.set("points_in_field", in_field);
    let contacts = |name_a: &str, name_b: &str| {
        let i = sub.curves.iter().position(|n| n == name_a).unwrap();
        let j = sub.curves.iter().position(|n| n == name_b).unwrap();
        sub.pair(i, j).iter().filter(|m| m.finite() == Some(3)).count()
    };
    ctx.set("tangencies_d1_d4", contacts("D1", "D4"));
    ctx.set("tangencies_d1_d3", contacts("D1", "D3"));

    let full = incidence_table(&images, b)?;
    ctx.time("incidence", t);
    ctx.set("point_count", full.points.len());
    ctx.set("signatures_all", signatures(&full));
    ctx.note("points", texts(&full.points));
    Ok(())
}

fn parse_all(ctx: &Ctx, name: &str, ring: &Arc<PolyRing>) -> Result<Vec<MultiPoly>> {
    ctx.input_as::<Vec<String>>(name)?.iter().map(|s| ring.parse(s)).collect()
}

fn quotient_map(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let b = ctx.budget;
    let q = PlaneCurve::new(ctx.poly("Q", &ring)?)?;
    let base: Vec<ProjPoint> =
        ctx.input_as::<Vec<String>>("base_points")?.iter().map(|s| ProjPoint::parse(s, &ctx.field)).collect::<Result<_>>()?;
    let conditions = base.iter().map(|p| Condition::Multiplicity { point: p.clone(), m: 1 }).collect();
    let sys = linear_system(&ring, &LinearSystemSpec { degree: 2, conditions })?;
    ctx.set("conic_system_dimension", sys.dimension);
    let rho_c = parse_all(ctx, "rho", &ring)?;
    let on_base = rho_c.iter().all(|f| base.iter().all(|p| f.eval(p.coords()).is_zero()));
    let basis: Vec<&MultiPoly> = rho_c.iter().collect();
    ctx.set("rho_spans_system", on_base && span_rank(&basis) == sys.dimension);

    let target_vars: Vec<String> = ctx.input_as("target_vars")?;
    let tv: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
    let p3 = PolyRing::new(&ctx.field, &tv, MonomialOrder::Grevlex);
    let rho = ProjMap::new(rho_c)?;
    let t = Instant::now();
    let quadric = image_ideal(&rho, &[], &p3, b)?;
    ctx.set("quadric_degrees", quadric.iter().map(|g| g.total_degree()).collect::<Vec<_>>());
    let given = ctx.poly("quadric", &p3)?;
    ctx.set("quadric_matches", quadric.len() == 1 && quadric[0].monic() == given.monic());
    let image_q = image_ideal(&rho, &[q.form().clone()], &p3, b)?;
    ctx.time("image", t);
    ctx.note("image_of_q", image_q.iter().map(|g| g.to_text()).collect::<Vec<_>>());

    let sigma = parse_all(ctx, "sigma", &p3)?;
    let preserves = |gens: &[MultiPoly]| -> Result<bool> {
        let gb = buchberger(&Ideal::new(&p3, gens.to_vec())?, p3.order(), b)?;
        for g in gens {
            if !gb.contains(&g.compose(&sigma)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let r = preserves(&quadric);
    ctx.set_result("sigma_preserves_quadric", r);
    let r = preserves(&image_q);
    ctx.set_result("sigma_preserves_image", r);

    let psi = ProjMap::new(parse_all(ctx, "psi", &p3)?)?;
    let t = Instant::now();
    let cu = PlaneCurve::new(image_ideal(&psi, &image_q, &ring, b)?.first().cloned().ok_or(Error::Contracted)?)?.monic();
    let mut fixed = quadric.clone();
    fixed.extend(parse_all(ctx, "fixed_locus", &p3)?);
    let co = PlaneCurve::new(image_ideal(&psi, &fixed, &ring, b)?.first().cloned().ok_or(Error::Contracted)?)?.monic();
    ctx.time("quotient", t);
    ctx.note("cu", cu.form().to_text());
    ctx.note("co", co.form().to_text());
    ctx.set("cu_degree", cu.degree());
    ctx.set("co_degree", co.degree());
    let sing = singular_points(&cu, b)?;
    if sing.residual_degree > 0 {
        ctx.fail("cu_singularities", "singular points outside the field");
    } else {
        let labels = sing.points.iter().map(|p| classify(&cu, p).map(|r| r.label.to_string())).collect::<Result<Vec<_>>>();
        ctx.set_result("cu_singularities", labels);
    }

    // field points carry Fulton multiplicities; the rest of the scheme length is
    // spread over distinct conjugate points only if it equals their number
    let audit = bezout_audit(&co, &cu, b)?;
    let inter = intersection_points(&co, &cu, b)?;
    let mut mults: Vec<u32> = inter.points.iter().filter_map(|(_, m)| m.finite()).collect();
    let rest = audit.quotient_dimension as usize - audit.found as usize;
    if rest == inter.residual_degree {
        mults.extend(std::iter::repeat(1).take(rest));
        mults.sort_unstable_by(|a, b| b.cmp(a));
        ctx.set("cu_co_multiplicities", mults);
    } else {
        ctx.fail("cu_co_multiplicities", format!("scheme length {rest} off the field but {} points", inter.residual_degree));
    }
    ctx.note("cu_co_field_points", texts(&inter.points.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>()));

    let fl = flexes(&cu, b)?;
    match fl.flexes.as_slice() {
        [f] => {
            ctx.set("flex_contact_cu", f.contact);
            let i = intersection_points(&co, &f.tangent, b)?;
            let tangent = i.residual_degree == 0 && i.points.len() == 1 && i.points[0].1.finite() == Some(2);
            ctx.set("flex_line_tangent_to_co", tangent);
            ctx.note("flex", f.point.to_text());
        }
        other => {
            let why = format!("{} smooth flexes in the field", other.len());
            ctx.fail("flex_contact_cu", why.clone());
            ctx.fail("flex_line_tangent_to_co", why);
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct ResolvedCurve {
    name: String,
    resolved_sq: i64,
    genus: i64,
    u: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct ComponentSpec {
    curve: String,
    weight: serde_json::Value,
    open_euler: i64,
}

#[derive(Deserialize)]
struct PointSpec {
    name: String,
    beta: serde_json::Value,
}

fn weight(v: &serde_json::Value) -> Result<Weight> {
    match v {
        serde_json::Value::String(s) if s == "inf" => Ok(Weight::Infinite),
        serde_json::Value::Number(n) => {
            n.as_u64().map(|m| Weight::Finite(m as u32)).ok_or_else(|| Error::Missing(format!("weight {n}")))
        }
        other => Err(Error::Missing(format!("weight {other}"))),
    }
}

fn orbifold_w(ctx: &mut Ctx) -> Result<()> {
    let mut m = NormalSurfaceModel::new(blocks(ctx)?);
    m.set_resolved_k_sq(rat_input(ctx, "resolved_k_sq")?);
    for c in ctx.input_as::<Vec<ResolvedCurve>>("curves")? {
        m.add_resolved_curve(&c.name, c.resolved_sq, c.genus, c.u)?;
    }
    for (a, b, v) in ctx.input_as::<Vec<(String, String, i64)>>("resolved_pairs")? {
        m.set_resolved_pair(&a, &b, v)?;
    }
    ctx.set("k_sq", fmt_rat(&m.pair("K", "K")?));
    for c in ["Cu", "Co", "Fd", "H"] {
        ctx.set(&format!("{}_sq", c.to_lowercase()), fmt_rat(&m.pair(c, c)?));
    }
    ctx.set("k_dot_h", fmt_rat(&m.pair("K", "H")?));

    let comps = ctx
        .input_as::<Vec<ComponentSpec>>("components")?
        .into_iter()
        .map(|c| Ok(OrbifoldComponent { curve: c.curve, weight: weight(&c.weight)?, open_euler: c.open_euler }))
        .collect::<Result<Vec<_>>>()?;
    let points = ctx
        .input_as::<Vec<PointSpec>>("points")?
        .into_iter()
        .map(|p| Ok(OrbifoldPoint { name: p.name, beta: Some(weight(&p.beta)?) }))
        .collect::<Result<Vec<_>>>()?;
    let o = OrbifoldSurface::new(m, ctx.input_as("euler")?, comps, points)?;
    let r = bmy_check(&o)?;
    ctx.set("c2", fmt_rat(&r.c2));
    ctx.set("c1sq", fmt_rat(&r.c1sq));
    ctx.set("bmy_slack", fmt_rat(&r.slack));
    ctx.set("bmy_equality", r.equality);
    let (curve, w): (String, serde_json::Value) = ctx.input_as("perturbation")?;
    let p = bmy_check(&o.with_weight(&curve, weight(&w)?)?)?;
    ctx.set("perturbed_equality", p.equality);
    ctx.note("perturbed", &p);
    Ok(())
}

fn matrix(ctx: &Ctx, name: &str) -> Result<NFMatrix> {
    let rows: Vec<Vec<String>> = ctx.input_as(name)?;
    let refs: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(|s| s.as_str()).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(|r| r.as_slice()).collect();
    NFMatrix::parse(&slices, &ctx.field)
}

fn sd16(ctx: &mut Ctx) -> Result<()> {
    let ring = ctx.ring();
    let b = ctx.budget;
    let bound: usize = ctx.input_as("closure_bound")?;
    let (g1, g2) = (matrix(ctx, "g1")?, matrix(ctx, "g2")?);
    let g = closure(&[g1.clone(), g2.clone()], bound)?;
    ctx.set("group_order", g.order());
    let ord = |m: &NFMatrix| element_order(m, bound as u32);
    ctx.set("order_g1", ord(&g1));
    ctx.set("order_g2", ord(&g2));
    ctx.set("order_g1g2", ord(&g1.mul(&g2)));
    ctx.set("semidihedral_presentation", presentation_semidihedral(&g).is_some());
    let conj = g1.inverse()?.mul(&g2).mul(&g1);
    let d4 = closure(&[g2.clone(), conj], bound)?;
    ctx.set("d4_order", d4.order());
    let ms = mirrors(&d4, &ring)?;
    ctx.set("d4_mirrors", ms.len());
    ctx.note("d4_mirror_forms", ms.iter().map(|m| m.form.to_text()).collect::<Vec<_>>());

    let top: u32 = ctx.input_as("molien_degree")?;
    let mut agree = true;
    for grp in [&g, &d4] {
        let series = molien_series(grp, top as usize + 1)?;
        for d in 1..=top {
            agree &= int(reynolds_invariants(grp, &ring, d)?.len() as i64) == series[d as usize];
        }
    }
    ctx.set("molien_agreement", agree);
    let found = fundamental_invariants(&g, &ring, ctx.input_as("invariant_degree_bound")?)?;
    ctx.set("invariant_degrees", found.iter().map(|f| f.total_degree()).collect::<Vec<_>>());

    let gens = parse_all(ctx, "invariants", &ring)?;
    let mut all_invariant = true;
    for f in &gens {
        all_invariant &= is_invariant(&g, f)?;
    }
    ctx.set("invariants_are_invariant", all_invariant);
    let target = PolyRing::new(&ctx.field, &["u", "v", "w"], MonomialOrder::Grevlex);
    let rel_degree: u32 = ctx.input_as("relation_degree")?;
    let rel = invariant_relations(&gens, rel_degree, &target)?;
    let given = ctx.poly("relation", &target)?;
    ctx.set("relation_matches", rel.len() == 1 && rel[0] == given.monic());
    let label = match rel.first().and_then(quadratic_singularity_rank) {
        Some(3) => "a1".to_string(),
        Some(r) => format!("rank {r}"),
        None => "smooth or worse".to_string(),
    };
    ctx.set("relation_singularity", label);

    if ctx.optional {
        let control: Vec<NFElem> = ctx
            .input_as::<Vec<String>>("control_vector")?
            .iter()
            .map(|s| crate::poly::parse_element(s, &ctx.field))
            .collect::<Result<_>>()?;
        let t = Instant::now();
        match mirror_image_cusp_check(&ms, &gens, Some(&control), b) {
            Ok(r) => {
                ctx.set("mirror_image_singularity", r.union.label.to_string());
                ctx.note("mirror_image", &r);
            }
            Err(e) if e.is_budget() => ctx.indeterminate("mirror_image_singularity", e.to_string()),
            Err(e) => ctx.fail("mirror_image_singularity", e.to_string()),
        }
        ctx.time("mirror_image", t);
    } else {
        ctx.skip("mirror_image_singularity", "stretch check; run with --optional");
    }
    Ok(())
}

#[derive(Deserialize)]
struct BranchSpec {
    name: String,
    order: u32,
    components: u32,
    component_dot_total: String,
    k_dot: String,
}

#[derive(Deserialize)]
struct QuotientSpec {
    group_order: u32,
    k_sq: String,
    branches: Vec<BranchSpec>,
    #[serde(default)]
    cross: Vec<(usize, usize, String)>,
    #[serde(default)]
    fixed_euler: Vec<(u32, i64)>,
}

fn quotient_data(s: QuotientSpec) -> Result<QuotientData> {
    Ok(QuotientData {
        group_order: s.group_order,
        k_sq: parse_rat_str(&s.k_sq)?,
        branches: s
            .branches
            .into_iter()
            .map(|b| {
                Ok(BranchClass {
                    name: b.name,
                    order: b.order,
                    components: b.components,
                    component_dot_total: parse_rat_str(&b.component_dot_total)?,
                    k_dot: parse_rat_str(&b.k_dot)?,
                })
            })
            .collect::<Result<_>>()?,
        cross: s.cross.into_iter().map(|(i, j, v)| Ok((i, j, parse_rat_str(&v)?))).collect::<Result<_>>()?,
        fixed_euler: s.fixed_euler,
    })
}

fn quotient_invariants_s2(ctx: &mut Ctx) -> Result<()> {
    let a = quotient_invariants(&quotient_data(ctx.input_as("abelian")?)?)?;
    let mirrors = a.branch_self_int.first().ok_or_else(|| Error::Missing("mirror class".into()))?;
    ctx.set("m_sq", fmt_rat(mirrors));
    ctx.set("k_sq_abelian_quotient", fmt_rat(&a.k_sq));
    let p = quotient_invariants(&quotient_data(ctx.input_as("plane")?)?)?;
    ctx.set("pullback_k_sq_plane", fmt_rat(&p.pullback_k_sq));
    ctx.set("k_sq_plane_quotient", fmt_rat(&p.k_sq));
    ctx.note("euler_plane_quotient", p.euler);
    // both quotients are the same weighted plane
    ctx.set("k_sq_agree", a.k_sq == p.k_sq);
    Ok(())
}
