//! Coproduct checks: the map respects the defining relations and the
//! dependent-letter eliminations (so it is well-defined on the quotient and
//! determines the group-like image of the central letters), and the explicit
//! rank-one formulas for the images of the simple-root series hold.

use super::{Check, Context, Residual};
use crate::algebra::Letter;
use crate::morphisms::{coproduct_letter, coproduct_poly, TSeries, TensorPoly};
use crate::scalar::Scalar;
use crate::{RUSeries, Rat};

fn tp_commutator(
    a: &TensorPoly<Rat>,
    b: &TensorPoly<Rat>,
    pa: u8,
    pb: u8,
) -> TensorPoly<Rat> {
    let ab = a.mul(b);
    let ba = b.mul(a);
    if pa & pb == 1 {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

pub fn checks(ctx: &Context) -> Vec<Check> {
    assert_eq!(ctx.m, 1);
    let n = ctx.engine.ix.n;
    let bound = 4usize.min(2 * ctx.d);
    let mut checks = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            checks.push(Check::new(
                "coproduct-table",
                vec![i as i64, j as i64],
                move |ctx| {
                    // the coproduct maps every defining-relation residue to
                    // zero in the tensor square
                    let ix = ctx.engine.ix;
                    let mut residuals = Vec::new();
                    for k in 1..=ix.n {
                        for l in 1..=ix.n {
                            for r in 1..bound {
                                for s in 1..=bound - r {
                                    let da = coproduct_letter::<Rat>(Letter::t(&ix, i, j, r));
                                    let db = coproduct_letter::<Rat>(Letter::t(&ix, k, l, s));
                                    let lhs =
                                        tp_commutator(&da, &db, ix.parity(i, j), ix.parity(k, l));
                                    let table = ctx.engine.commutator_table(i, j, k, l, r, s);
                                    residuals.push(lhs.sub(&coproduct_poly(&table)));
                                }
                            }
                        }
                    }
                    Residual::Tensor(residuals)
                },
            ));
        }
    }
    checks.push(Check::new("coproduct-elim", vec![], move |ctx| {
        // the coproduct respects the elimination of dependent letters, which
        // pins the group-like image of the central letters
        let ix = ctx.engine.ix;
        let mut residuals = Vec::new();
        for i in 1..=ix.n {
            for j in 1..=ix.n {
                if ix.is_allowed(i, j) {
                    continue;
                }
                for r in 1..=bound.min(ctx.d) {
                    let letter = Letter::t(&ix, i, j, r);
                    let lhs = coproduct_letter::<Rat>(letter);
                    let elim = ctx.engine.eliminate_forbidden(letter).expect("forbidden");
                    residuals.push(lhs.sub(&coproduct_poly(&elim)));
                }
            }
        }
        Residual::Tensor(residuals)
    }));
    checks.push(Check::new("coproduct-e", vec![], move |ctx| {
        Residual::Tensor(coproduct_e_residuals(ctx))
    }));
    checks.push(Check::new("coproduct-f", vec![], move |ctx| {
        Residual::Tensor(coproduct_f_residuals(ctx))
    }));
    checks
}

fn geometric(x: &TSeries<Rat>, order: usize) -> TSeries<Rat> {
    // sum_{r>=0} (-1)^r x^r; each power gains at least two orders of
    // valuation, so the sum is finite on the window
    assert!(x.valuation() >= 2, "geometric term must have valuation >= 2");
    let mut acc = TSeries::one(order);
    let mut power = TSeries::one(order);
    let mut sign = Rat::from_int(1);
    let rmax = order / 2 + 1;
    for _ in 1..=rmax {
        power = power.mul(x);
        sign = -sign;
        acc = acc.add(&power.scale(&sign));
    }
    acc
}

fn lhs_series(g: &RUSeries, order: usize) -> TSeries<Rat> {
    let mut out = TSeries::zero(order);
    for r in 0..=order {
        out.set_coeff(r, coproduct_poly(g.coeff(r)));
    }
    out
}

fn coproduct_e_residuals(ctx: &Context) -> Vec<TensorPoly<Rat>> {
    let dc = ctx.d.min(3);
    let e = ctx.e_simple(1).truncate(dc);
    let f = ctx.f_simple(1).truncate(dc);
    let k = ctx.k[1].truncate(dc);
    let e_corner = ctx.e[&(1, 3)].truncate(dc);
    let f_corner = ctx.f[&(3, 1)].truncate(dc);
    let one = Rat::from_int(1);
    let f_up = f.shift(&one);
    let left = |g: &RUSeries| TSeries::embed_left(g, dc);
    let right = |g: &RUSeries| TSeries::embed_right(g, dc);

    // x = e (x) f(u+1) + corner (x) (f-corner(u+1) - 2 f(u+1)^2)
    let x = left(&e).mul(&right(&f_up)).add(&left(&e_corner).mul(&right(
        &f_corner.shift(&one).sub(&f_up.mul(&f_up).scale(&Rat::from_int(2))),
    )));
    // y = e (x) 1 + corner (x) (f(u-1/2)/3 + 2 f(u+1)/3)
    let mix = f
        .shift(&Rat::ratio(-1, 2))
        .scale(&Rat::ratio(1, 3))
        .add(&f_up.scale(&Rat::ratio(2, 3)));
    let y = left(&e).add(&left(&e_corner).mul(&right(&mix)));
    let rhs = right(&e).add(&geometric(&x, dc).mul(&y).mul(&right(&k)));
    let lhs = lhs_series(&e, dc);
    let diff = lhs.sub(&rhs);
    (1..=dc).map(|r| diff.coeff(r).clone()).collect()
}

fn coproduct_f_residuals(ctx: &Context) -> Vec<TensorPoly<Rat>> {
    let dc = ctx.d.min(3);
    let e = ctx.e_simple(1).truncate(dc);
    let f = ctx.f_simple(1).truncate(dc);
    let k = ctx.k[1].truncate(dc);
    let e_corner = ctx.e[&(1, 3)].truncate(dc);
    let f_corner = ctx.f[&(3, 1)].truncate(dc);
    let one = Rat::from_int(1);
    let e_up = e.shift(&one);
    let left = |g: &RUSeries| TSeries::embed_left(g, dc);
    let right = |g: &RUSeries| TSeries::embed_right(g, dc);

    // z = e(u+1) (x) f + (corner(u+1) + 2 e(u+1)^2) (x) f-corner
    let z = left(&e_up).mul(&right(&f)).add(
        &left(&e_corner.shift(&one).add(&e_up.mul(&e_up).scale(&Rat::from_int(2))))
            .mul(&right(&f_corner)),
    );
    // mid = 1 (x) f - (e(u-1/2)/3 + 2 e(u+1)/3) (x) f-corner
    let mix = e
        .shift(&Rat::ratio(-1, 2))
        .scale(&Rat::ratio(1, 3))
        .add(&e_up.scale(&Rat::ratio(2, 3)));
    let mid = right(&f).sub(&left(&mix).mul(&right(&f_corner)));
    let rhs = left(&f).add(&left(&k).mul(&mid).mul(&geometric(&z, dc)));
    let lhs = lhs_series(&f, dc);
    let diff = lhs.sub(&rhs);
    (1..=dc).map(|r| diff.coeff(r).clone()).collect()
}
