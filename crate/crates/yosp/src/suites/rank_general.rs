//! Checks for the rank-m presentations: relations among the diagonal series,
//! the simple-root series, and the corner series, the symmetrized
//! higher-order (Serre) relations, their images in the shifted generator
//! family, the auxiliary rank-2 corner identities, and the ladder relations
//! used to generate non-simple entries.

use super::builders::*;
use super::rank_one::{corner_relation_e, corner_relation_f, self_relation_bottom, self_relation_top};
use super::{Check, Context, Residual};
use crate::algebra::Poly;
use crate::scalar::Scalar;
use crate::series::USeries;
use crate::{RPoly, RUSeries, Rat};

fn half() -> Rat {
    Rat::ratio(1, 2)
}

fn z(n: i64) -> Rat {
    Rat::from_int(n)
}

fn rat(n: i64) -> Rat {
    Rat::from_int(n)
}

// -- symmetrized nested-bracket relations -------------------------------------

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            let mut perm = vec![head];
            perm.append(&mut tail);
            out.push(perm);
        }
    }
    out
}

/// sum_{sigma} [a^{(r_{sigma(1)})}, [ ..., [a^{(r_{sigma(k)})}, b^{(s)}] ...]]
/// computed through the quotient bracket with intermediate reduction.
fn serre_residual(ctx: &Context, a: &RUSeries, b: &RUSeries, rs: &[usize], s: usize) -> RPoly {
    let engine = &ctx.engine;
    let base = engine.normalize(b.coeff(s));
    let mut total = RPoly::zero();
    for perm in permutations(rs) {
        let mut acc = base.clone();
        for &r in perm.iter().rev() {
            acc = engine.bracket_nf(a.coeff(r), &acc);
        }
        total.add_assign(&acc);
    }
    total
}

/// Superscript tuples (r_1 <= ... <= r_k, s) with sum bounded by d + k.
fn serre_tuples(d: usize, k: usize) -> Vec<(Vec<usize>, usize)> {
    let budget = d + k;
    let mut out = Vec::new();
    fn rec(k: usize, min: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        for r in min..=left.saturating_sub(k - 1) {
            acc.push(r);
            rec(k - 1, r, left - r, acc, out);
            acc.pop();
        }
    }
    let mut stems = Vec::new();
    rec(k, 1, budget.saturating_sub(1), &mut Vec::new(), &mut stems);
    for stem in stems {
        let used: usize = stem.iter().sum();
        for s in 1..=budget - used {
            out.push((stem.clone(), s));
        }
    }
    out
}

fn serre_checks(
    ctx: &Context,
    id: &'static str,
    series_of: fn(&Context, usize) -> RUSeries,
) -> Vec<Check> {
    let m = ctx.m;
    let mut checks = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i == j {
                continue;
            }
            let k = ctx.roots.serre_order(i, j);
            for (rs, s) in serre_tuples(ctx.d, k) {
                let rs_clone = rs.clone();
                let mut indices: Vec<i64> = vec![i as i64, j as i64];
                indices.extend(rs.iter().map(|&r| r as i64));
                indices.push(s as i64);
                checks.push(Check::new(id, indices, move |ctx| {
                    let a = series_of(ctx, i);
                    let b = series_of(ctx, j);
                    Residual::Elem(serre_residual(ctx, &a, &b, &rs_clone, s))
                }));
            }
        }
    }
    checks
}

// -- the rank-m presentation ---------------------------------------------------

pub fn thm_dp_checks(ctx: &Context) -> Vec<Check> {
    let m = ctx.m;
    assert!(m >= 2);
    let mut checks = Vec::new();
    for i in 1..=m + 1 {
        for j in 1..=m + 1 {
            checks.push(Check::new(
                "hh-commute",
                vec![i as i64, j as i64],
                move |ctx| {
                    Residual::Bi(com(&bu(&ctx.h[i], ctx.d), &bv(&ctx.h[j], ctx.d)))
                },
            ));
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            checks.push(Check::new("ef-cross", vec![i as i64, j as i64], move |ctx| {
                let lhs = com(&bu(ctx.e_simple(i), ctx.d), &bv(ctx.f_simple(j), ctx.d));
                if i != j {
                    return Residual::Bi(lhs);
                }
                // sign (-1)^{bar(i+1)}: -1 below the top pair, +1 at i = m
                let sign = if i == ctx.m { rat(1) } else { rat(-1) };
                Residual::Bi(lhs.sub(&dq0(&ctx.k[i], ctx.d).scale(&sign)))
            }));
        }
    }
    for i in 1..=m + 1 {
        for j in 1..=m {
            if (i, j) == (m + 1, m) {
                continue;
            }
            let pairing = ctx.roots.eps_alpha(i, j);
            checks.push(Check::new("h-e", vec![i as i64, j as i64], move |ctx| {
                let hi = bu(&ctx.h[i], ctx.d);
                let lhs = com(&hi, &bv(ctx.e_simple(j), ctx.d));
                let rhs = bmul(&hi, &dq0(ctx.e_simple(j), ctx.d)).scale(&rat(-pairing));
                Residual::Bi(lhs.sub(&rhs))
            }));
            checks.push(Check::new("h-f", vec![i as i64, j as i64], move |ctx| {
                let hi = bu(&ctx.h[i], ctx.d);
                let lhs = com(&hi, &bv(ctx.f_simple(j), ctx.d));
                let rhs = bmul(&dq0(ctx.f_simple(j), ctx.d), &hi).scale(&rat(pairing));
                Residual::Bi(lhs.sub(&rhs))
            }));
        }
    }
    checks.push(Check::new("hlast-e", vec![], move |ctx| {
        let h = bu(&ctx.h[ctx.m + 1], ctx.d);
        let e = ctx.e_simple(ctx.m);
        let lhs = com(&h, &bv(e, ctx.d));
        let paren = dq0(e, ctx.d).sub(&dq(e, -half(), z(0), ctx.d));
        Residual::Bi(lhs.sub(&bmul(&h, &paren)))
    }));
    checks.push(Check::new("hlast-f", vec![], move |ctx| {
        let h = bu(&ctx.h[ctx.m + 1], ctx.d);
        let f = ctx.f_simple(ctx.m);
        let lhs = com(&h, &bv(f, ctx.d));
        let paren = dq(f, -half(), z(0), ctx.d).sub(&dq0(f, ctx.d));
        Residual::Bi(lhs.sub(&bmul(&paren, &h)))
    }));
    for i in 1..m {
        checks.push(Check::new("ee-self", vec![i as i64], move |ctx| {
            // [e_i(u), e_i(v)] = -(e_i(u)-e_i(v))^2/(u-v)
            let e = ctx.e_simple(i);
            let lhs = com(&bu(e, ctx.d), &bv(e, ctx.d));
            let sq = bmul(&dq0(e, ctx.d), &bu(e, ctx.d).sub(&bv(e, ctx.d)));
            Residual::Bi(lhs.add(&sq))
        }));
        checks.push(Check::new("ff-self", vec![i as i64], move |ctx| {
            let f = ctx.f_simple(i);
            let lhs = com(&bu(f, ctx.d), &bv(f, ctx.d));
            let sq = bmul(&dq0(f, ctx.d), &bu(f, ctx.d).sub(&bv(f, ctx.d)));
            Residual::Bi(lhs.sub(&sq))
        }));
    }
    checks.push(Check::new("ee-self-top", vec![], move |ctx| {
        self_relation_top(ctx.e_simple(ctx.m), ctx.e_corner(), ctx.d)
    }));
    checks.push(Check::new("ff-self-top", vec![], move |ctx| {
        self_relation_bottom(ctx.f_simple(ctx.m), ctx.f_corner(), ctx.d)
    }));
    for i in 1..=m {
        for j in i + 1..=m {
            let pairing = ctx.roots.alpha_alpha(i, j);
            checks.push(Check::new("ee-ladder", vec![i as i64, j as i64], move |ctx| {
                // u [e_i°(u), e_j(v)] - v [e_i(u), e_j°(v)] = -(a_i,a_j) e_i(u) e_j(v)
                let ei = ctx.e_simple(i);
                let ej = ctx.e_simple(j);
                let lhs1 = com(&bu(&ei.strict_tail(), ctx.d), &bv(ej, ctx.d))
                    .mul_kernel(&[(1, 0, rat(1))])
                    .expect("window");
                let lhs2 = com(&bu(ei, ctx.d), &bv(&ej.strict_tail(), ctx.d))
                    .mul_kernel(&[(0, 1, rat(1))])
                    .expect("window");
                let rhs = bmul(&bu(ei, ctx.d), &bv(ej, ctx.d)).scale(&rat(-pairing));
                Residual::Bi(lhs1.sub(&lhs2).sub(&rhs))
            }));
            checks.push(Check::new("ff-ladder", vec![i as i64, j as i64], move |ctx| {
                // u [f_i°(u), f_j(v)] - v [f_i(u), f_j°(v)] = (a_i,a_j) f_j(v) f_i(u)
                let fi = ctx.f_simple(i);
                let fj = ctx.f_simple(j);
                let lhs1 = com(&bu(&fi.strict_tail(), ctx.d), &bv(fj, ctx.d))
                    .mul_kernel(&[(1, 0, rat(1))])
                    .expect("window");
                let lhs2 = com(&bu(fi, ctx.d), &bv(&fj.strict_tail(), ctx.d))
                    .mul_kernel(&[(0, 1, rat(1))])
                    .expect("window");
                let rhs = bmul(&bv(fj, ctx.d), &bu(fi, ctx.d)).scale(&rat(pairing));
                Residual::Bi(lhs1.sub(&lhs2).sub(&rhs))
            }));
        }
    }
    checks.push(Check::new("e-corner", vec![], move |ctx| {
        corner_relation_e(ctx.e_simple(ctx.m), ctx.e_corner(), ctx.d)
    }));
    checks.push(Check::new("f-corner", vec![], move |ctx| {
        corner_relation_f(ctx.f_simple(ctx.m), ctx.f_corner(), ctx.d)
    }));
    checks.push(Check::new("e-corner-step", vec![], move |ctx| {
        // [e_{m-1}^(1), corner(v)] = e_{m-1}(v) corner(v) + corner(v) e_{m-1}(v-3/2)
        //   + e_m(v) [e_m^(1), e_{m-1}(v-3/2)] - [corner^(1), e_{m-1}(v) + e_{m-1}(v-3/2)]/2
        let em1 = ctx.e_simple(ctx.m - 1);
        let em = ctx.e_simple(ctx.m);
        let corner = ctx.e_corner();
        let em1_shift = em1.shift(&Rat::ratio(-3, 2));
        let lhs = ucom_poly_left(em1.coeff(1), corner);
        let mut res = lhs.sub(&em1.mul(corner));
        res = res.sub(&corner.mul(&em1_shift));
        res = res.sub(&em.mul(&ucom_poly_left(em.coeff(1), &em1_shift)));
        res = res.add(
            &ucom_poly_left(corner.coeff(1), &em1.add(&em1_shift)).scale(&half()),
        );
        Residual::Uni(res)
    }));
    checks.push(Check::new("f-corner-step", vec![], move |ctx| {
        // [f_{m-1}^(1), corner(v)] = -corner(v) f_{m-1}(v) - f_{m-1}(v-3/2) corner(v)
        //   - [f_m^(1), f_{m-1}(v-3/2)] f_m(v) - [corner^(1), f_{m-1}(v) + f_{m-1}(v-3/2)]/2
        let fm1 = ctx.f_simple(ctx.m - 1);
        let fm = ctx.f_simple(ctx.m);
        let corner = ctx.f_corner();
        let fm1_shift = fm1.shift(&Rat::ratio(-3, 2));
        let lhs = ucom_poly_left(fm1.coeff(1), corner);
        let mut res = lhs.add(&corner.mul(fm1));
        res = res.add(&fm1_shift.mul(corner));
        res = res.add(&ucom_poly_left(fm.coeff(1), &fm1_shift).mul(fm));
        res = res.add(
            &ucom_poly_left(corner.coeff(1), &fm1.add(&fm1_shift)).scale(&half()),
        );
        Residual::Uni(res)
    }));
    checks.extend(serre_checks(ctx, "serre-e", |ctx, i| ctx.e_simple(i).clone()));
    checks.extend(serre_checks(ctx, "serre-f", |ctx, i| ctx.f_simple(i).clone()));
    checks
}

// -- the Yangian presentation in shifted generators -----------------------------

pub fn cor_modpy_checks(ctx: &Context) -> Vec<Check> {
    let m = ctx.m;
    assert!(m >= 2);
    let mut checks = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            checks.push(Check::new(
                "kappa-commute",
                vec![i as i64, j as i64],
                move |ctx| {
                    Residual::Bi(com(
                        &bu(&ctx.kappa_i(i), ctx.d),
                        &bv(&ctx.kappa_i(j), ctx.d),
                    ))
                },
            ));
            checks.push(Check::new("xi-cross", vec![i as i64, j as i64], move |ctx| {
                // [xi+_i(u), xi-_j(v)] = -delta_ij (kappa_i(u)-kappa_i(v))/(u-v)
                let lhs = com(&bu(&ctx.xi_plus(i), ctx.d), &bv(&ctx.xi_minus(j), ctx.d));
                if i != j {
                    return Residual::Bi(lhs);
                }
                Residual::Bi(lhs.add(&dq0(&ctx.kappa_i(i), ctx.d)))
            }));
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            if (i, j) == (m, m) {
                continue;
            }
            let pairing = ctx.roots.alpha_alpha(i, j);
            for plus in [true, false] {
                let sign_label = if plus { 1 } else { -1 };
                checks.push(Check::new(
                    "kappa-xi",
                    vec![sign_label, i as i64, j as i64],
                    move |ctx| {
                        // [kappa_i(u), xi^pm_j(v)] =
                        //   -/+ (a_i,a_j)/2 {kappa_i(u), xi_j(u)-xi_j(v)}/(u-v)
                        let xi = if plus { ctx.xi_plus(j) } else { ctx.xi_minus(j) };
                        let kap = bu(&ctx.kappa_i(i), ctx.d);
                        let lhs = com(&kap, &bv(&xi, ctx.d));
                        let mut coef = Rat::ratio(-pairing, 2);
                        if !plus {
                            coef = -coef;
                        }
                        let rhs = acom(&kap, &dq0(&xi, ctx.d)).scale(&coef);
                        Residual::Bi(lhs.sub(&rhs))
                    },
                ));
            }
        }
    }
    for i in 1..=m {
        for j in i..=m {
            if (i, j) == (m, m) {
                continue;
            }
            let pairing = ctx.roots.alpha_alpha(i, j);
            for plus in [true, false] {
                let sign_label = if plus { 1 } else { -1 };
                checks.push(Check::new(
                    "xi-sym",
                    vec![sign_label, i as i64, j as i64],
                    move |ctx| {
                        // [xi_i(u),xi_j(v)] + [xi_j(u),xi_i(v)] =
                        //   -/+ (a_i,a_j)/2 {xi_i(u)-xi_i(v), xi_j(u)-xi_j(v)}/(u-v)
                        let (xi_i, xi_j) = if plus {
                            (ctx.xi_plus(i), ctx.xi_plus(j))
                        } else {
                            (ctx.xi_minus(i), ctx.xi_minus(j))
                        };
                        let lhs = com(&bu(&xi_i, ctx.d), &bv(&xi_j, ctx.d))
                            .add(&com(&bu(&xi_j, ctx.d), &bv(&xi_i, ctx.d)));
                        let mut coef = Rat::ratio(-pairing, 2);
                        if !plus {
                            coef = -coef;
                        }
                        let diff_j = bu(&xi_j, ctx.d).sub(&bv(&xi_j, ctx.d));
                        let rhs = acom(&dq0(&xi_i, ctx.d), &diff_j).scale(&coef);
                        Residual::Bi(lhs.sub(&rhs))
                    },
                ));
            }
        }
    }
    checks.push(Check::new("kappa-xi-plus-last", vec![], move |ctx| {
        // [kappa_m(u), xi+_m(v)] =
        //   ( (xi+_m(u-1/2)-xi+_m(v))/(3(u-v-1/2)) + 2(xi+_m(u+1)-xi+_m(v))/(3(u-v+1)) ) kappa_m(u)
        let xi = ctx.xi_plus(ctx.m);
        let kap = bu(&ctx.kappa_i(ctx.m), ctx.d);
        let lhs = com(&kap, &bv(&xi, ctx.d));
        let paren = dq(&xi, -half(), z(0), ctx.d)
            .scale(&Rat::ratio(1, 3))
            .add(&dq(&xi, z(1), z(0), ctx.d).scale(&Rat::ratio(2, 3)));
        Residual::Bi(lhs.sub(&bmul(&paren, &kap)))
    }));
    checks.push(Check::new("kappa-xi-minus-last", vec![], move |ctx| {
        let xi = ctx.xi_minus(ctx.m);
        let kap = bu(&ctx.kappa_i(ctx.m), ctx.d);
        let lhs = com(&kap, &bv(&xi, ctx.d));
        let paren = dq(&xi, -half(), z(0), ctx.d)
            .scale(&Rat::ratio(-1, 3))
            .add(&dq(&xi, z(1), z(0), ctx.d).scale(&Rat::ratio(-2, 3)));
        Residual::Bi(lhs.sub(&bmul(&kap, &paren)))
    }));
    for plus in [true, false] {
        let sign_label = if plus { 1 } else { -1 };
        checks.push(Check::new("xi-self-top", vec![sign_label], move |ctx| {
            // [xi_m(u),xi_m(v)] = (xi_m(u)^2 - xi(u) - xi_m(v)^2 + xi(v))/(u-v)
            //   -/+ (xi_m(u)xi_m(v)-xi_m(v)xi_m(u))/(2(u-v)) - (xi_m(u)-xi_m(v))^2/(2(u-v)^2)
            let (xi_m, xi_c) = if plus {
                (ctx.xi_plus(ctx.m), ctx.xi_plus_corner())
            } else {
                (ctx.xi_minus(ctx.m), ctx.xi_minus_corner())
            };
            let dq_m = dq0(&xi_m, ctx.d);
            let xu = bu(&xi_m, ctx.d);
            let lhs = com(&xu, &bv(&xi_m, ctx.d));
            let g = xi_m.mul(&xi_m).sub(&xi_c);
            let mut res = lhs.sub(&dq0(&g, ctx.d));
            let mid = bmul(&dq_m, &xu).sub(&bmul(&xu, &dq_m));
            let mid_sign = if plus { half() } else { -half() };
            res = res.add(&mid.scale(&mid_sign));
            res = res.add(&bmul(&dq_m, &dq_m).scale(&half()));
            Residual::Bi(res)
        }));
    }
    checks.push(Check::new("xi-plus-corner", vec![], move |ctx| {
        // [xi+_m(u), xi+(v)] = (xi+(u)-xi+(v))(xi+_m(u)-xi+_m(v))/(u-v)
        //   - xi+_m(u)^2 (xi+_m(u+1/2)-xi+_m(v))/(u-v+1/2)
        //   + xi+_m(u) (xi+(u+1/2)-xi+(v))/(u-v+1/2)
        let xm = ctx.xi_plus(ctx.m);
        let xc = ctx.xi_plus_corner();
        let xmu = bu(&xm, ctx.d);
        let lhs = com(&xmu, &bv(&xc, ctx.d));
        let mut res = lhs.sub(&bmul(&bu(&xc, ctx.d).sub(&bv(&xc, ctx.d)), &dq0(&xm, ctx.d)));
        res = res.add(&bmul(&bmul(&xmu, &xmu), &dq(&xm, half(), z(0), ctx.d)));
        res = res.sub(&bmul(&xmu, &dq(&xc, half(), z(0), ctx.d)));
        Residual::Bi(res)
    }));
    checks.push(Check::new("xi-minus-corner", vec![], move |ctx| {
        // [xi-_m(u), xi-(v)] = -(xi-_m(u)-xi-_m(v))(xi-(u)-xi-(v))/(u-v)
        //   + (xi-_m(u+1/2)-xi-_m(v))/(u-v+1/2) xi-_m(u)^2
        //   - (xi-(u+1/2)-xi-(v))/(u-v+1/2) xi-_m(u)
        let xm = ctx.xi_minus(ctx.m);
        let xc = ctx.xi_minus_corner();
        let xmu = bu(&xm, ctx.d);
        let lhs = com(&xmu, &bv(&xc, ctx.d));
        let mut res = lhs.add(&bmul(&xmu.sub(&bv(&xm, ctx.d)), &dq0(&xc, ctx.d)));
        res = res.sub(&bmul(&dq(&xm, half(), z(0), ctx.d), &bmul(&xmu, &xmu)));
        res = res.add(&bmul(&dq(&xc, half(), z(0), ctx.d), &xmu));
        Residual::Bi(res)
    }));
    checks.push(Check::new("xi-corner-step", vec![1], move |ctx| {
        // [xi+_{m-1,0}, xi+(v)] = -xi+(v) xi+_{m-1}(v+1/2)
        //   - [(xi+_{m,0})^2, xi+_{m-1}(v+1/2) + xi+_{m-1}(v-1)]
        //   - [xi+_{m,0}, xi+_{m-1}(v-1)] xi+_m(v) - xi+_{m-1}(v-1) xi+(v)
        let xm1 = ctx.xi_plus(ctx.m - 1);
        let xm = ctx.xi_plus(ctx.m);
        let xc = ctx.xi_plus_corner();
        let up = xm1.shift(&half());
        let down = xm1.shift(&z(-1));
        let lead_m1 = xm1.coeff(1).clone();
        let lead_m = xm.coeff(1).clone();
        let lhs = ucom_poly_left(&lead_m1, &xc);
        let mut res = lhs.add(&xc.mul(&up));
        res = res.add(&ucom_poly_left(&lead_m.mul(&lead_m), &up.add(&down)));
        res = res.add(&ucom_poly_left(&lead_m, &down).mul(&xm));
        res = res.add(&down.mul(&xc));
        Residual::Uni(res)
    }));
    checks.push(Check::new("xi-corner-step", vec![-1], move |ctx| {
        // [xi-_{m-1,0}, xi-(v)] = xi-_{m-1}(v+1/2) xi-(v)
        //   - [(xi-_{m,0})^2, xi-_{m-1}(v+1/2) + xi-_{m-1}(v-1)]
        //   - xi-_m(v) [xi-_{m,0}, xi-_{m-1}(v-1)] + xi-(v) xi-_{m-1}(v-1)
        let xm1 = ctx.xi_minus(ctx.m - 1);
        let xm = ctx.xi_minus(ctx.m);
        let xc = ctx.xi_minus_corner();
        let up = xm1.shift(&half());
        let down = xm1.shift(&z(-1));
        let lead_m1 = xm1.coeff(1).clone();
        let lead_m = xm.coeff(1).clone();
        let lhs = ucom_poly_left(&lead_m1, &xc);
        let mut res = lhs.sub(&up.mul(&xc));
        res = res.add(&ucom_poly_left(&lead_m.mul(&lead_m), &up.add(&down)));
        res = res.add(&xm.mul(&ucom_poly_left(&lead_m, &down)));
        res = res.sub(&xc.mul(&down));
        Residual::Uni(res)
    }));
    checks.extend(serre_checks(ctx, "serre-xi-plus", |ctx, i| ctx.xi_plus(i)));
    checks.extend(serre_checks(ctx, "serre-xi-minus", |ctx, i| ctx.xi_minus(i)));
    checks
}

// -- auxiliary rank-2 corner identities ----------------------------------------

pub fn ospl4_checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 2);
    let mut checks = Vec::new();
    checks.push(Check::new("corner-ladder-leading", vec![], move |ctx| {
        // [e_12^(1), e_{22'}(v)] = e_12(v) e_{22'}(v) - e_{12'}(v) - e_{21'}(v)
        let e12 = &ctx.e[&(1, 2)];
        let e22p = &ctx.e[&(2, 4)];
        let lhs = ucom_poly_left(e12.coeff(1), e22p);
        let mut res = lhs.sub(&e12.mul(e22p));
        res = res.add(&ctx.e[&(1, 4)]);
        res = res.add(&ctx.e[&(2, 5)]);
        Residual::Uni(res)
    }));
    checks.push(Check::new("corner-reflect", vec![], move |ctx| {
        // e_{21'}(u) = e_{12'}(u-3/2) - e_23(u) e_13(u-3/2) - e_{22'}(u) e_12(u-3/2)
        let back = Rat::ratio(-3, 2);
        let mut res = ctx.e[&(2, 5)].sub(&ctx.e[&(1, 4)].shift(&back));
        res = res.add(&ctx.e[&(2, 3)].mul(&ctx.e[&(1, 3)].shift(&back)));
        res = res.add(&ctx.e[&(2, 4)].mul(&ctx.e[&(1, 2)].shift(&back)));
        Residual::Uni(res)
    }));
    checks.push(Check::new("corner-ladder", vec![], move |ctx| {
        // [e_12^(1), e_{22'}(v)] = e_12(v) e_{22'}(v) - e_{12'}(v) - e_{12'}(v-3/2)
        //   + e_23(v) e_13(v-3/2) + e_{22'}(v) e_12(v-3/2)
        let back = Rat::ratio(-3, 2);
        let e12 = &ctx.e[&(1, 2)];
        let e22p = &ctx.e[&(2, 4)];
        let lhs = ucom_poly_left(e12.coeff(1), e22p);
        let mut res = lhs.sub(&e12.mul(e22p));
        res = res.add(&ctx.e[&(1, 4)]);
        res = res.add(&ctx.e[&(1, 4)].shift(&back));
        res = res.sub(&ctx.e[&(2, 3)].mul(&ctx.e[&(1, 3)].shift(&back)));
        res = res.sub(&e22p.mul(&e12.shift(&back)));
        Residual::Uni(res)
    }));
    checks.push(Check::new("corner-ladder-series", vec![], move |ctx| {
        // [e_12(u), e_{22'}(v)] = -(e_12(u)-e_12(v))/(u-v) e_{22'}(v)
        //   + (e_{12'}(u)-e_{12'}(v))/(u-v) + (e_{12'}(u)-e_{12'}(v-3/2))/(u-v+3/2)
        //   - e_23(v) (e_13(u)-e_13(v-3/2))/(u-v+3/2)
        //   - e_{22'}(v) (e_12(u)-e_12(v-3/2))/(u-v+3/2)
        let back = Rat::ratio(-3, 2);
        let e12 = &ctx.e[&(1, 2)];
        let e22p = &ctx.e[&(2, 4)];
        let lhs = com(&bu(e12, ctx.d), &bv(e22p, ctx.d));
        let mut res = lhs.add(&bmul(&dq0(e12, ctx.d), &bv(e22p, ctx.d)));
        res = res.sub(&dq0(&ctx.e[&(1, 4)], ctx.d));
        res = res.sub(&dq(&ctx.e[&(1, 4)], z(0), back.clone(), ctx.d));
        res = res.add(&bmul(
            &bv(&ctx.e[&(2, 3)], ctx.d),
            &dq(&ctx.e[&(1, 3)], z(0), back.clone(), ctx.d),
        ));
        res = res.add(&bmul(
            &bv(e22p, ctx.d),
            &dq(e12, z(0), back.clone(), ctx.d),
        ));
        Residual::Bi(res)
    }));
    checks.push(Check::new("corner-double", vec![], move |ctx| {
        // [e_{22'}^(1), e_12(u)] = 2 e_{12'}(u)
        let lhs = ucom_poly_left(ctx.e[&(2, 4)].coeff(1), &ctx.e[&(1, 2)]);
        Residual::Uni(lhs.sub(&ctx.e[&(1, 4)].scale(&rat(2))))
    }));
    checks
}

// -- ladder relations generating non-simple entries -----------------------------

pub fn derived_ladder_checks(ctx: &Context) -> Vec<Check> {
    let m = ctx.m;
    assert!(m >= 2);
    let mut checks = Vec::new();
    for j in 2..=m {
        for i in 1..j {
            checks.push(Check::new("t-ladder-right", vec![i as i64, j as i64], move |ctx| {
                // [t_ij(u), t^(1)_{j,j+1}] = -t_{i,j+1}(u)
                let txy = USeries::t_entry(&ctx.engine.ix, i, j, ctx.d);
                let step = Poly::letter(crate::algebra::Letter::t(&ctx.engine.ix, j, j + 1, 1));
                let lhs = ucom_poly_right(&txy, &step);
                Residual::Uni(lhs.add(&USeries::t_entry(&ctx.engine.ix, i, j + 1, ctx.d)))
            }));
        }
    }
    for j in 1..=m {
        for i in 1..=j {
            checks.push(Check::new("t-ladder-mirror", vec![i as i64, j as i64], move |ctx| {
                // [t^(1)_{j,j+1}, t_{i,(j+1)'}(u)] = -t_{i,j'}(u)
                let ixd = ctx.engine.ix;
                let step = Poly::letter(crate::algebra::Letter::t(&ixd, j, j + 1, 1));
                let target = USeries::t_entry(&ixd, i, ixd.prime(j + 1), ctx.d);
                let lhs = ucom_poly_left(&step, &target);
                Residual::Uni(lhs.add(&USeries::t_entry(&ixd, i, ixd.prime(j), ctx.d)))
            }));
        }
    }
    for j in 2..=m {
        for i in 1..j {
            checks.push(Check::new("e-ladder-right", vec![i as i64, j as i64], move |ctx| {
                // [e_ij(u), e^(1)_{j,j+1}] = -e_{i,j+1}(u)
                let lhs = ucom_poly_right(&ctx.e[&(i, j)], ctx.e_simple(j).coeff(1));
                Residual::Uni(lhs.add(&ctx.e[&(i, j + 1)]))
            }));
            checks.push(Check::new("e-ladder-mirror", vec![i as i64, j as i64], move |ctx| {
                // [e^(1)_{j,j+1}, e_{i,(j+1)'}(u)] = -e_{i,j'}(u)
                let ixd = ctx.engine.ix;
                let lhs =
                    ucom_poly_left(ctx.e_simple(j).coeff(1), &ctx.e[&(i, ixd.prime(j + 1))]);
                Residual::Uni(lhs.add(&ctx.e[&(i, ixd.prime(j))]))
            }));
        }
    }
    for i in 1..=m {
        checks.push(Check::new("e-ladder-corner", vec![i as i64], move |ctx| {
            // [e^(1)_{i,i+1}, e_{i,(i+1)'}(u)] = -e_{i,i'}(u) - e_{i,i+1}(u) e_{i,(i+1)'}(u)
            let ixd = ctx.engine.ix;
            let source = &ctx.e[&(i, ixd.prime(i + 1))];
            let lhs = ucom_poly_left(ctx.e_simple(i).coeff(1), source);
            let mut res = lhs.add(&ctx.e[&(i, ixd.prime(i))]);
            res = res.add(&ctx.e_simple(i).mul(source));
            Residual::Uni(res)
        }));
    }
    checks
}
