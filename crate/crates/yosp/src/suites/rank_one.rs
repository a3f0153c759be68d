//! Rank-one checks: the full relation list of the Drinfeld-type presentation
//! with corner generators, the reduced presentations of the Yangian proper,
//! and the flip-automorphism action on its generators.

use super::builders::*;
use super::{Check, Context, Residual};
use crate::morphisms::Morphism;
use crate::scalar::Scalar;
use crate::{RUSeries, Rat};

fn half() -> Rat {
    Rat::ratio(1, 2)
}

fn third() -> Rat {
    Rat::ratio(1, 3)
}

fn z(n: i64) -> Rat {
    Rat::from_int(n)
}

/// The two-variable self-relation shared by the simple-root series and its
/// rank-m top analogue:
/// [a(u),a(v)] = (a(u)^2 + corner(u) - a(v)^2 - corner(v))/(u-v)
///             + (a(u)a(v) - a(v)a(u))/(2(u-v)) - (a(u)-a(v))^2/(2(u-v)^2).
pub(super) fn self_relation_top(a: &RUSeries, corner: &RUSeries, d: usize) -> Residual {
    let dq_a = dq0(a, d);
    let au = bu(a, d);
    let av = bv(a, d);
    let lhs = com(&au, &av);
    let g = a.mul(a).add(corner);
    let mut res = lhs.sub(&dq0(&g, d));
    let mid = bmul(&dq_a, &au).sub(&bmul(&au, &dq_a));
    res = res.sub(&mid.scale(&half()));
    res = res.add(&bmul(&dq_a, &dq_a).scale(&half()));
    Residual::Bi(res)
}

/// [b(u),b(v)] = (b(u)^2 - corner(u) - b(v)^2 + corner(v))/(u-v)
///             - (b(u)b(v) - b(v)b(u))/(2(u-v)) - (b(u)-b(v))^2/(2(u-v)^2).
pub(super) fn self_relation_bottom(b: &RUSeries, corner: &RUSeries, d: usize) -> Residual {
    let dq_b = dq0(b, d);
    let bu_ = bu(b, d);
    let bv_ = bv(b, d);
    let lhs = com(&bu_, &bv_);
    let g = b.mul(b).sub(corner);
    let mut res = lhs.sub(&dq0(&g, d));
    let mid = bmul(&dq_b, &bu_).sub(&bmul(&bu_, &dq_b));
    res = res.add(&mid.scale(&half()));
    res = res.add(&bmul(&dq_b, &dq_b).scale(&half()));
    Residual::Bi(res)
}

/// [a(u), corner(v)] = -(a(u)-a(v))(corner(u)-corner(v))/(u-v)
///   - (a(u+1/2)-a(v))/(u-v+1/2) a(u)^2 - (corner(u+1/2)-corner(v))/(u-v+1/2) a(u).
pub(super) fn corner_relation_e(a: &RUSeries, corner: &RUSeries, d: usize) -> Residual {
    let au = bu(a, d);
    let av = bv(a, d);
    let lhs = com(&au, &bv(corner, d));
    let mut res = lhs.add(&bmul(&au.sub(&av), &dq0(corner, d)));
    res = res.add(&bmul(&dq(a, half(), z(0), d), &bmul(&au, &au)));
    res = res.add(&bmul(&dq(corner, half(), z(0), d), &au));
    Residual::Bi(res)
}

/// [b(u), corner(v)] = (corner(u)-corner(v))(b(u)-b(v))/(u-v)
///   - b(u)^2 (b(u+1/2)-b(v))/(u-v+1/2) + b(u) (corner(u+1/2)-corner(v))/(u-v+1/2).
pub(super) fn corner_relation_f(b: &RUSeries, corner: &RUSeries, d: usize) -> Residual {
    let bu_ = bu(b, d);
    let cu = bu(corner, d);
    let cv = bv(corner, d);
    let lhs = com(&bu_, &cv);
    let mut res = lhs.sub(&bmul(&cu.sub(&cv), &dq0(b, d)));
    res = res.add(&bmul(&bmul(&bu_, &bu_), &dq(b, half(), z(0), d)));
    res = res.sub(&bmul(&bu_, &dq(corner, half(), z(0), d)));
    Residual::Bi(res)
}

pub fn thm_odp_checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 1);
    let mut checks = Vec::new();
    for i in 1..=2i64 {
        for j in 1..=2i64 {
            checks.push(Check::new("hh-commute", vec![i, j], move |ctx| {
                let hi = bu(&ctx.h[i as usize], ctx.d);
                let hj = bv(&ctx.h[j as usize], ctx.d);
                Residual::Bi(com(&hi, &hj))
            }));
        }
    }
    checks.push(Check::new("ef-cross", vec![], move |ctx| {
        let e = bu(ctx.e_simple(1), ctx.d);
        let f = bv(ctx.f_simple(1), ctx.d);
        Residual::Bi(com(&e, &f).sub(&dq0(&ctx.k[1], ctx.d)))
    }));
    checks.push(Check::new("h1-e", vec![], move |ctx| {
        let h1 = bu(&ctx.h[1], ctx.d);
        let lhs = com(&h1, &bv(ctx.e_simple(1), ctx.d));
        Residual::Bi(lhs.sub(&bmul(&h1, &dq0(ctx.e_simple(1), ctx.d))))
    }));
    checks.push(Check::new("h1-f", vec![], move |ctx| {
        let h1 = bu(&ctx.h[1], ctx.d);
        let lhs = com(&h1, &bv(ctx.f_simple(1), ctx.d));
        Residual::Bi(lhs.add(&bmul(&dq0(ctx.f_simple(1), ctx.d), &h1)))
    }));
    checks.push(Check::new("h2-e", vec![], move |ctx| {
        let h2 = bu(&ctx.h[2], ctx.d);
        let e = ctx.e_simple(1);
        let lhs = com(&h2, &bv(e, ctx.d));
        let paren = dq0(e, ctx.d).sub(&dq(e, -half(), z(0), ctx.d));
        Residual::Bi(lhs.sub(&bmul(&h2, &paren)))
    }));
    checks.push(Check::new("h2-f", vec![], move |ctx| {
        let h2 = bu(&ctx.h[2], ctx.d);
        let f = ctx.f_simple(1);
        let lhs = com(&h2, &bv(f, ctx.d));
        let paren = dq(f, -half(), z(0), ctx.d).sub(&dq0(f, ctx.d));
        Residual::Bi(lhs.sub(&bmul(&paren, &h2)))
    }));
    checks.push(Check::new("ee-self", vec![], move |ctx| {
        self_relation_top(ctx.e_simple(1), &ctx.e[&(1, 3)], ctx.d)
    }));
    checks.push(Check::new("ff-self", vec![], move |ctx| {
        self_relation_bottom(ctx.f_simple(1), &ctx.f[&(3, 1)], ctx.d)
    }));
    checks.push(Check::new("e-corner", vec![], move |ctx| {
        corner_relation_e(ctx.e_simple(1), &ctx.e[&(1, 3)], ctx.d)
    }));
    checks.push(Check::new("f-corner", vec![], move |ctx| {
        corner_relation_f(ctx.f_simple(1), &ctx.f[&(3, 1)], ctx.d)
    }));

    // identities used on the way to the theorem
    checks.push(Check::new("e-second-row", vec![], move |ctx| {
        // e_{21'}(u) = -e(u - 1/2)
        let lhs = ctx.e[&(2, 3)].clone();
        Residual::Uni(lhs.add(&ctx.e_simple(1).shift(&(-half()))))
    }));
    checks.push(Check::new("f-second-col", vec![], move |ctx| {
        let lhs = ctx.f[&(3, 2)].clone();
        Residual::Uni(lhs.sub(&ctx.f_simple(1).shift(&(-half()))))
    }));
    checks.push(Check::new("h-balance-half", vec![], move |ctx| {
        // h_1(u) h_{1'}(u+1/2) = h_2(u) h_2(u+1/2)
        let lhs = ctx.h[1].mul(&ctx.h[3].shift(&half()));
        let rhs = ctx.h[2].mul(&ctx.h[2].shift(&half()));
        Residual::Uni(lhs.sub(&rhs))
    }));
    checks.push(Check::new("h-central-product", vec![], move |ctx| {
        // h_1(u) h_{1'}(u+3/2) = c(u)
        let lhs = ctx.h[1].mul(&ctx.h[3].shift(&Rat::ratio(3, 2)));
        Residual::Uni(lhs.sub(&ctx.c))
    }));
    checks.push(Check::new("h2-from-z", vec![], move |ctx| {
        // h_2(u) = z(u) h_1(u-1/2) h_1(u-1)^{-1}
        let zs = crate::gauss::z_series::<Rat>(&ctx.engine.ix, ctx.d);
        let rhs = zs
            .mul(&ctx.h[1].shift(&(-half())))
            .mul(&ctx.h[1].shift(&z(-1)).invert().expect("unit term"));
        Residual::Uni(ctx.h[2].sub(&rhs))
    }));
    checks.push(Check::new("e-past-h1", vec![], move |ctx| {
        // e(v) h_1(u) = h_1(u) (e(v) - (e(u)-e(v))/(u-v))
        let e = ctx.e_simple(1);
        let h1 = bu(&ctx.h[1], ctx.d);
        let lhs = bmul(&bv(e, ctx.d), &h1);
        let rhs = bmul(&h1, &bv(e, ctx.d).sub(&dq0(e, ctx.d)));
        Residual::Bi(lhs.sub(&rhs))
    }));
    checks.push(Check::new("e-shift-h1", vec![], move |ctx| {
        // e(u+1) h_1(u) = h_1(u) e(u)
        let e = ctx.e_simple(1);
        let lhs = e.shift(&z(1)).mul(&ctx.h[1]);
        Residual::Uni(lhs.sub(&ctx.h[1].mul(e)))
    }));
    checks.push(Check::new("e-past-h1-inv", vec![], move |ctx| {
        // e(v) h_1(u)^{-1} = h_1(u)^{-1} (e(v) + (e(u+1)-e(v))/(u-v+1))
        let e = ctx.e_simple(1);
        let h1inv = bu(&ctx.h[1].invert().expect("unit term"), ctx.d);
        let lhs = bmul(&bv(e, ctx.d), &h1inv);
        let rhs = bmul(&h1inv, &bv(e, ctx.d).add(&dq(e, z(1), z(0), ctx.d)));
        Residual::Bi(lhs.sub(&rhs))
    }));
    checks.push(Check::new("he-exchange", vec![], move |ctx| {
        // h_1(u+1) e(u+1) h_1(u) corner(u) = h_1(u+1) corner(u+1) h_1(u) e(u)
        let e = ctx.e_simple(1);
        let corner = &ctx.e[&(1, 3)];
        let h1s = ctx.h[1].shift(&z(1));
        let lhs = h1s.mul(&e.shift(&z(1))).mul(&ctx.h[1]).mul(corner);
        let rhs = h1s.mul(&corner.shift(&z(1))).mul(&ctx.h[1]).mul(e);
        Residual::Uni(lhs.sub(&rhs))
    }));
    checks.push(Check::new("e-corner-same-point", vec![], move |ctx| {
        // [e(u), corner(u)] = -2 e(u)^3
        let e = ctx.e_simple(1);
        let corner = &ctx.e[&(1, 3)];
        let lhs = ucom(e, corner);
        let cube = e.mul(e).mul(e);
        Residual::Uni(lhs.add(&cube.scale(&z(2))))
    }));
    checks.push(Check::new("corner-half-shift", vec![], move |ctx| {
        // corner(u+1/2) - corner(u) + e(u+1/2) e(u) - 2 e(u)^2 = 0
        let e = ctx.e_simple(1);
        let corner = &ctx.e[&(1, 3)];
        let mut res = corner.shift(&half()).sub(corner);
        res = res.add(&e.shift(&half()).mul(e));
        res = res.sub(&e.mul(e).scale(&z(2)));
        Residual::Uni(res)
    }));
    checks
}

pub fn cor_odpy_checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 1);
    let mut checks = Vec::new();
    checks.push(Check::new("kk-commute", vec![], move |ctx| {
        Residual::Bi(com(&bu(&ctx.k[1], ctx.d), &bv(&ctx.k[1], ctx.d)))
    }));
    checks.push(Check::new("k-e", vec![], move |ctx| {
        // [k(u),e(v)] = k(u) ( -(e(u-1/2)-e(v))/(3(u-v-1/2)) - 2(e(u+1)-e(v))/(3(u-v+1)) )
        let e = ctx.e_simple(1);
        let k = bu(&ctx.k[1], ctx.d);
        let lhs = com(&k, &bv(e, ctx.d));
        let paren = dq(e, -half(), z(0), ctx.d)
            .scale(&(-third()))
            .sub(&dq(e, z(1), z(0), ctx.d).scale(&(third() * z(2))));
        Residual::Bi(lhs.sub(&bmul(&k, &paren)))
    }));
    checks.push(Check::new("k-f", vec![], move |ctx| {
        let f = ctx.f_simple(1);
        let k = bu(&ctx.k[1], ctx.d);
        let lhs = com(&k, &bv(f, ctx.d));
        let paren = dq(f, -half(), z(0), ctx.d)
            .scale(&third())
            .add(&dq(f, z(1), z(0), ctx.d).scale(&(third() * z(2))));
        Residual::Bi(lhs.sub(&bmul(&paren, &k)))
    }));
    checks.push(Check::new("corner-from-e", vec![], move |ctx| {
        // corner(u) = -e(u)^2 - [e^(1), e(u)]
        let e = ctx.e_simple(1);
        let corner = &ctx.e[&(1, 3)];
        let mut res = corner.add(&e.mul(e));
        res = res.add(&ucom_poly_left(e.coeff(1), e));
        Residual::Uni(res)
    }));
    checks.push(Check::new("corner-from-f", vec![], move |ctx| {
        // f-corner(u) = f(u)^2 + [f^(1), f(u)]
        let f = ctx.f_simple(1);
        let corner = &ctx.f[&(3, 1)];
        let mut res = corner.sub(&f.mul(f));
        res = res.sub(&ucom_poly_left(f.coeff(1), f));
        Residual::Uni(res)
    }));
    checks
}

pub fn cor_serre_checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 1);
    let mut checks = Vec::new();
    checks.push(Check::new("k-f-alt", vec![], move |ctx| {
        // [k(u),f(v)] = k(u) ( (f(u+1/2)-f(v))/(3(u-v+1/2)) + 2(f(u-1)-f(v))/(3(u-v-1)) )
        let f = ctx.f_simple(1);
        let k = bu(&ctx.k[1], ctx.d);
        let lhs = com(&k, &bv(f, ctx.d));
        let paren = dq(f, half(), z(0), ctx.d)
            .scale(&third())
            .add(&dq(f, z(-1), z(0), ctx.d).scale(&(third() * z(2))));
        Residual::Bi(lhs.sub(&bmul(&k, &paren)))
    }));
    checks.push(Check::new("ee-self-reduced", vec![], move |ctx| {
        // [e(u),e(v)] = -[e^(1), (e(u)-e(v))/(u-v)]
        //   + (e(u)e(v)-e(v)e(u))/(2(u-v)) - (e(u)-e(v))^2/(2(u-v)^2)
        let e = ctx.e_simple(1);
        let dq_e = dq0(e, ctx.d);
        let eu = bu(e, ctx.d);
        let lhs = com(&eu, &bv(e, ctx.d));
        let mut res = lhs.add(&bi_com_poly_left(e.coeff(1), &dq_e));
        let mid = bmul(&dq_e, &eu).sub(&bmul(&eu, &dq_e));
        res = res.sub(&mid.scale(&half()));
        res = res.add(&bmul(&dq_e, &dq_e).scale(&half()));
        Residual::Bi(res)
    }));
    checks.push(Check::new("ff-self-reduced", vec![], move |ctx| {
        let f = ctx.f_simple(1);
        let dq_f = dq0(f, ctx.d);
        let fu = bu(f, ctx.d);
        let lhs = com(&fu, &bv(f, ctx.d));
        let mut res = lhs.add(&bi_com_poly_left(f.coeff(1), &dq_f));
        let mid = bmul(&dq_f, &fu).sub(&bmul(&fu, &dq_f));
        res = res.add(&mid.scale(&half()));
        res = res.add(&bmul(&dq_f, &dq_f).scale(&half()));
        Residual::Bi(res)
    }));
    checks.push(Check::new("e-cubic", vec![], move |ctx| {
        // e(u)^3 = e(u)[e(u),e^(1)] + [e^(1)^2, e(u)]
        let e = ctx.e_simple(1);
        let e1 = e.coeff(1);
        let cube = e.mul(e).mul(e);
        let mut res = cube.sub(&e.mul(&ucom_poly_right(e, e1)));
        res = res.sub(&ucom_poly_left(&e1.mul(e1), e));
        Residual::Uni(res)
    }));
    checks.push(Check::new("f-cubic", vec![], move |ctx| {
        // f(u)^3 = -f(u)[f(u),f^(1)] + [f^(1)^2, f(u)]
        let f = ctx.f_simple(1);
        let f1 = f.coeff(1);
        let cube = f.mul(f).mul(f);
        let mut res = cube.add(&f.mul(&ucom_poly_right(f, f1)));
        res = res.sub(&ucom_poly_left(&f1.mul(f1), f));
        Residual::Uni(res)
    }));
    checks.push(Check::new("f-cubic-alt", vec![], move |ctx| {
        // f(u)^3 = [f(u),f^(1)] f(u) - [f^(1)^2, f(u)]
        let f = ctx.f_simple(1);
        let f1 = f.coeff(1);
        let cube = f.mul(f).mul(f);
        let mut res = cube.sub(&ucom_poly_right(f, f1).mul(f));
        res = res.add(&ucom_poly_left(&f1.mul(f1), f));
        Residual::Uni(res)
    }));
    checks
}

fn sigma_series(s: &RUSeries) -> RUSeries {
    Morphism::<Rat>::Flip.apply_series(s)
}

fn negate_var(s: &RUSeries) -> RUSeries {
    s.substitute(-1, &z(0))
}

pub fn lem_sigauss_checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 1);
    let mut checks = Vec::new();
    checks.push(Check::new("sigma-k", vec![], move |ctx| {
        // sigma(k(u)) = k(-u)
        Residual::Uni(sigma_series(&ctx.k[1]).sub(&negate_var(&ctx.k[1])))
    }));
    checks.push(Check::new("sigma-e", vec![], move |ctx| {
        // sigma(e(u)) = f(-u)
        Residual::Uni(sigma_series(ctx.e_simple(1)).sub(&negate_var(ctx.f_simple(1))))
    }));
    checks.push(Check::new("sigma-f", vec![], move |ctx| {
        // sigma(f(u)) = -e(-u)
        Residual::Uni(sigma_series(ctx.f_simple(1)).add(&negate_var(ctx.e_simple(1))))
    }));
    checks
}
