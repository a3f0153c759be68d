//! PBW evidence: enumerated normal words against the generating-function
//! dimension count, and exact-rank linear independence of ordered monomials
//! in the Gaussian generator coefficients at rank one.

use super::{Check, Context, Residual};
use crate::scalar::Scalar;
use num_traits::Zero;
use crate::{RPoly, RUSeries, Rat};
use std::collections::BTreeMap;

pub fn checks(ctx: &Context) -> Vec<Check> {
    let dmax = if ctx.m == 1 { 4 } else { 3 };
    let mut checks = Vec::new();
    for d in 0..=dmax {
        checks.push(Check::new("word-count", vec![d as i64], move |ctx| {
            let enumerated = ctx.engine.enumerate_normal_words(d).len() as i128;
            let series = ctx.engine.pbw_series_count(d);
            Residual::Counts(vec![(enumerated, series)])
        }));
    }
    if ctx.m == 1 {
        for d in 0..=2usize.min(ctx.d) {
            checks.push(Check::new("gaussian-rank", vec![d as i64], move |ctx| {
                let (count, rank) = gaussian_rank(ctx, d);
                let expected = ctx.engine.pbw_series_count(d);
                Residual::Counts(vec![(count as i128, expected), (rank as i128, expected)])
            }));
        }
    }
    checks
}

/// Ordered monomials of filtration degree exactly `d` in the rank-one
/// Gaussian coefficients (diagonal pair, simple pair, corner pair), expanded
/// to normal form; returns (monomial count, exact rank).
pub fn gaussian_rank(ctx: &Context, d: usize) -> (usize, usize) {
    // fixed generator order: f-corner < f < h1 < h2 < e < e-corner
    let families: Vec<(&RUSeries, bool)> = vec![
        (&ctx.f[&(3, 1)], false),
        (ctx.f_simple(1), true),
        (&ctx.h[1], false),
        (&ctx.h[2], false),
        (ctx.e_simple(1), true),
        (&ctx.e[&(1, 3)], false),
    ];
    // letters (family, r) with degree r, sorted by (family, r)
    let mut gletters = Vec::new();
    for (fam, (_, odd)) in families.iter().enumerate() {
        for r in 1..=d.max(1) {
            if r <= d {
                gletters.push((fam, r, *odd));
            }
        }
    }
    gletters.sort();
    let mut monomials: Vec<Vec<(usize, usize)>> = Vec::new();
    fn rec(
        gletters: &[(usize, usize, bool)],
        start: usize,
        remaining: usize,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for idx in start..gletters.len() {
            let (fam, r, odd) = gletters[idx];
            if r > remaining {
                continue;
            }
            acc.push((fam, r));
            let next = if odd { idx + 1 } else { idx };
            rec(gletters, next, remaining - r, acc, out);
            acc.pop();
        }
    }
    rec(&gletters, 0, d, &mut Vec::new(), &mut monomials);

    // expand and collect coordinates over normal words
    let mut columns: BTreeMap<crate::algebra::Word, usize> = BTreeMap::new();
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    for monomial in &monomials {
        let mut prod = RPoly::one();
        for &(fam, r) in monomial {
            prod = prod.mul(families[fam].0.coeff(r));
        }
        let nf = ctx.engine.normalize(&prod);
        let mut row = Vec::new();
        for (w, c) in nf.terms() {
            let next = columns.len();
            let col = *columns.entry(w.clone()).or_insert(next);
            row.push((col, c.clone()));
        }
        rows.push(row);
    }
    let rank = exact_rank(rows, columns.len());
    (monomials.len(), rank)
}

/// Row rank by exact Gaussian elimination over the rationals.
fn exact_rank(rows: Vec<Vec<(usize, Rat)>>, width: usize) -> usize {
    let mut dense: Vec<Vec<Rat>> = rows
        .into_iter()
        .map(|sparse| {
            let mut row = vec![Rat::from_int(0); width];
            for (col, v) in sparse {
                row[col] = v;
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..dense.len()).find(|&r| !dense[r][col].is_zero()) else {
            continue;
        };
        dense.swap(rank, pivot);
        let inv = Rat::from_int(1) / dense[rank][col].clone();
        for c in col..width {
            dense[rank][c] = dense[rank][c].clone() * inv.clone();
        }
        for r in 0..dense.len() {
            if r != rank && !dense[r][col].is_zero() {
                let factor = dense[r][col].clone();
                for c in col..width {
                    let delta = factor.clone() * dense[rank][c].clone();
                    dense[r][c] = dense[r][c].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == dense.len() {
            break;
        }
    }
    rank
}
