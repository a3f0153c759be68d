//! Structural checks on the Gauss decomposition: exact reconstruction,
//! quasideterminant agreement, the diagonal balance identities, the central
//! series computed along two independent routes, scalarity of the dressed
//! matrix products, centrality, commutativity of the diagonal coefficients,
//! and the transposition action on the triangular series.

use super::{Check, Context, Residual};
use crate::algebra::{super_commutator, Letter, Poly};
use crate::gauss::{central_matrix, central_product, corner_submatrix, quasideterminant};
use crate::morphisms::Morphism;
use crate::scalar::Scalar;
use crate::{RPoly, Rat};

pub fn checks(ctx: &Context) -> Vec<Check> {
    let n = ctx.engine.ix.n;
    let m = ctx.m;
    let mut checks = Vec::new();

    checks.push(Check::new("reconstruction", vec![], move |ctx| {
        let back = ctx.raw.recompose();
        let mut residuals = Vec::new();
        for i in 1..=ctx.engine.ix.n {
            for j in 1..=ctx.engine.ix.n {
                residuals.push(back.entry(i, j).sub(ctx.t.entry(i, j)));
            }
        }
        Residual::UniMany(residuals)
    }));

    for i in 1..=(m + 1).min(3) {
        checks.push(Check::new("quasidet-h", vec![i as i64], move |ctx| {
            let sub = corner_submatrix(&ctx.t, i, i, i);
            let q = quasideterminant(&sub, i, i).expect("principal minor invertible");
            Residual::Uni(q.sub(&ctx.h[i]))
        }));
        checks.push(Check::new("quasidet-e", vec![i as i64], move |ctx| {
            // e_{i,i+1} = h_i^{-1} |boxed submatrix|
            let sub = corner_submatrix(&ctx.t, i, i, i + 1);
            let q = quasideterminant(&sub, i, i).expect("principal minor invertible");
            let candidate = ctx.h[i].invert().expect("unit term").mul(&q);
            Residual::Uni(candidate.sub(&ctx.e[&(i, i + 1)]))
        }));
        checks.push(Check::new("quasidet-f", vec![i as i64], move |ctx| {
            let sub = corner_submatrix(&ctx.t, i, i + 1, i);
            let q = quasideterminant(&sub, i, i).expect("principal minor invertible");
            let candidate = q.mul(&ctx.h[i].invert().expect("unit term"));
            Residual::Uni(candidate.sub(&ctx.f[&(i + 1, i)]))
        }));
    }

    for i in 1..=m {
        checks.push(Check::new("h-balance", vec![i as i64], move |ctx| {
            // h_i(u) h_{i'}(u+m-i+1/2) = h_{i+1}(u) h_{(i+1)'}(u+m-i+1/2)
            let ix = ctx.engine.ix;
            let shift = Rat::ratio(2 * (ctx.m as i64 - i as i64) + 1, 2);
            let lhs = ctx.h[i].mul(&ctx.h[ix.prime(i)].shift(&shift));
            let rhs = ctx.h[i + 1].mul(&ctx.h[ix.prime(i + 1)].shift(&shift));
            Residual::Uni(lhs.sub(&rhs))
        }));
    }

    checks.push(Check::new("central-product", vec![], move |ctx| {
        // c(u) = h_1(u) h_{1'}(u + m + 1/2)
        let ix = ctx.engine.ix;
        let shift = Rat::ratio(2 * ctx.m as i64 + 1, 2);
        let lhs = ctx.h[1].mul(&ctx.h[ix.prime(1)].shift(&shift));
        Residual::Uni(lhs.sub(&ctx.c))
    }));

    checks.push(Check::new("central-two-routes", vec![], move |ctx| {
        // the telescoping product over the first m+1 diagonal series
        let prod = central_product(&ctx.raw).expect("unit terms");
        Residual::Uni(prod.sub(&ctx.c))
    }));

    for order_flag in [0i64, 1] {
        checks.push(Check::new("central-matrix", vec![order_flag], move |ctx| {
            // T(u-kappa) T^t(u) and T^t(u) T(u-kappa) are c(u) times the
            // identity
            let prod = central_matrix::<Rat>(&ctx.engine.ix, ctx.d, order_flag == 1);
            let mut residuals = Vec::new();
            for i in 1..=ctx.engine.ix.n {
                for j in 1..=ctx.engine.ix.n {
                    if i == j {
                        residuals.push(prod.entry(i, j).sub(&ctx.c));
                    } else {
                        residuals.push(prod.entry(i, j).clone());
                    }
                }
            }
            Residual::UniMany(residuals)
        }));
    }

    checks.push(Check::new("central-letter-commute", vec![], move |ctx| {
        // [c^(r), t_kl^(s)] = 0 for r + s <= 2 d; and the defining expansion
        // of c^(r) (the (1,1) entry of the dressed product) is itself central
        // within the window r + s <= d + 1
        let ix = ctx.engine.ix;
        let mut residuals: Vec<RPoly> = Vec::new();
        for r in 1..2 * ctx.d {
            for s in 1..=2 * ctx.d - r {
                for (k, l) in ix.allowed_pairs() {
                    let c = Poly::letter(Letter::c(&ix, r));
                    let t = Poly::letter(Letter::t(&ix, k, l, s));
                    residuals.push(super_commutator(&c, &t));
                }
            }
        }
        let entry = central_matrix::<Rat>(&ix, ctx.d, false);
        for r in 1..=ctx.d {
            for (k, l) in ix.allowed_pairs() {
                for s in 1..=(ctx.d + 1).saturating_sub(r) {
                    let t = Poly::letter(Letter::t(&ix, k, l, s));
                    residuals.push(super_commutator(entry.entry(1, 1).coeff(r), &t));
                }
            }
        }
        Residual::ElemMany(residuals)
    }));

    checks.push(Check::new("h-coeff-commute", vec![], move |ctx| {
        // [h_i^(r), h_j^(s)] = 0 for all i, j and r + s <= 2 d
        let mut residuals = Vec::new();
        for i in 1..=ctx.engine.ix.n {
            for j in i..=ctx.engine.ix.n {
                for r in 1..=ctx.d {
                    for s in 1..=ctx.d {
                        if r + s > 2 * ctx.d {
                            continue;
                        }
                        residuals.push(super_commutator(ctx.h[i].coeff(r), ctx.h[j].coeff(s)));
                    }
                }
            }
        }
        Residual::ElemMany(residuals)
    }));

    for k in 1..=n {
        checks.push(Check::new("tau-h", vec![k as i64], move |ctx| {
            // tau fixes every diagonal series
            let image = Morphism::<Rat>::Transpose.apply_series(&ctx.h[k]);
            Residual::Uni(image.sub(&ctx.h[k]))
        }));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            checks.push(Check::new("tau-ef", vec![i as i64, j as i64], move |ctx| {
                // tau: e_ij -> (-1)^{bar i bar j + bar j} f_ji and
                //      f_ji -> (-1)^{bar i bar j + bar i} e_ij
                let ix = ctx.engine.ix;
                let tau = Morphism::<Rat>::Transpose;
                let sign_e = if (ix.bar(i) * ix.bar(j) + ix.bar(j)) % 2 == 0 {
                    Rat::from_int(1)
                } else {
                    Rat::from_int(-1)
                };
                let sign_f = if (ix.bar(i) * ix.bar(j) + ix.bar(i)) % 2 == 0 {
                    Rat::from_int(1)
                } else {
                    Rat::from_int(-1)
                };
                let re = tau
                    .apply_series(&ctx.e[&(i, j)])
                    .sub(&ctx.f[&(j, i)].scale(&sign_e));
                let rf = tau
                    .apply_series(&ctx.f[&(j, i)])
                    .sub(&ctx.e[&(i, j)].scale(&sign_f));
                Residual::UniMany(vec![re, rf])
            }));
        }
    }
    checks
}
