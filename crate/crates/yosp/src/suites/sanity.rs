//! Engine-level properties (table antisymmetry, quotient Jacobi, strategy
//! independence), the morphism suite (fourth powers, relation preservation,
//! the central-series images, scaling invariance), and deliberately broken
//! fixtures that must fail.

use super::builders::*;
use super::{Check, Context, Residual};
use crate::algebra::{super_commutator, Letter, Poly, Word};
use crate::gauss::central_matrix;
use crate::morphisms::Morphism;
use crate::rewrite::Strategy;
use crate::scalar::Scalar;
use crate::{RPoly, RUSeries, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn phi_samples() -> Vec<Rat> {
    vec![Rat::from_int(1), Rat::ratio(-1, 2), Rat::ratio(2, 3)]
}

/// Generators whose coefficients must be fixed by every scaling map.
fn scaling_fixed_series(ctx: &Context) -> Vec<(String, RUSeries)> {
    let mut out = Vec::new();
    for i in 1..=ctx.m {
        out.push((format!("k{i}"), ctx.k[i].clone()));
        out.push((format!("e{i}"), ctx.e_simple(i).clone()));
        out.push((format!("f{i}"), ctx.f_simple(i).clone()));
    }
    out.push(("e-corner".to_string(), ctx.e_corner().clone()));
    out.push(("f-corner".to_string(), ctx.f_corner().clone()));
    out
}

fn scaling_invariance_checks(checks: &mut Vec<Check>) {
    for (sample, phi) in phi_samples().into_iter().enumerate() {
        checks.push(Check::new(
            "scaling-invariance",
            vec![sample as i64],
            move |ctx| {
                let mu = Morphism::Scaling(phi.clone());
                let dc = ctx.d.min(3);
                let mut residuals = Vec::new();
                for (_, series) in scaling_fixed_series(ctx) {
                    let image = mu.apply_series(&series);
                    residuals.push(image.sub(&series).truncate(dc));
                }
                Residual::UniMany(residuals)
            },
        ));
    }
}

pub fn rtt_sanity_checks(ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    let sum_bound = if ctx.m == 1 { 5 } else { 3 };
    checks.push(Check::new("table-antisymmetry", vec![], move |ctx| {
        let ix = ctx.engine.ix;
        let mut residuals = Vec::new();
        for i in 1..=ix.n {
            for j in 1..=ix.n {
                for k in 1..=ix.n {
                    for l in 1..=ix.n {
                        for r in 1..sum_bound {
                            for s in 1..=sum_bound - r {
                                let fwd = ctx.engine.commutator_table(i, j, k, l, r, s);
                                let bwd = ctx.engine.commutator_table(k, l, i, j, s, r);
                                let residual = if ix.parity(i, j) & ix.parity(k, l) == 1 {
                                    fwd.sub(&bwd)
                                } else {
                                    fwd.add(&bwd)
                                };
                                residuals.push(residual);
                            }
                        }
                    }
                }
            }
        }
        Residual::ElemMany(residuals)
    }));
    checks.push(Check::new("jacobi-random", vec![], move |ctx| {
        let ix = ctx.engine.ix;
        let mut rng = ChaCha20Rng::seed_from_u64(ctx.seed ^ 0x6a61636f);
        let mut residuals = Vec::new();
        let mut letters: Vec<Letter> = Vec::new();
        for r in 1..=3 {
            for i in 1..=ix.n {
                for j in 1..=ix.n {
                    letters.push(Letter::t(&ix, i, j, r));
                }
            }
        }
        for _ in 0..50 {
            let pick = |rng: &mut ChaCha20Rng| letters[rng.gen_range(0..letters.len())];
            let (a, b, c) = loop {
                let a = pick(&mut rng);
                let b = pick(&mut rng);
                let c = pick(&mut rng);
                if a.r() + b.r() + c.r() <= 6 {
                    break (a, b, c);
                }
            };
            let pa = a.parity();
            let pb = b.parity();
            let (a, b, c) = (Poly::letter(a), Poly::letter(b), Poly::letter(c));
            let engine = &ctx.engine;
            let mut res = engine.bracket_nf(&a, &engine.bracket_nf(&b, &c));
            res.add_assign(&engine.bracket_nf(&engine.bracket_nf(&a, &b), &c).neg());
            let sign = if pa & pb == 1 {
                Rat::from_int(-1)
            } else {
                Rat::from_int(1)
            };
            res.add_assign(
                &engine
                    .bracket_nf(&b, &engine.bracket_nf(&a, &c))
                    .scale(&sign)
                    .neg(),
            );
            residuals.push(res);
        }
        Residual::ElemMany(residuals)
    }));
    checks.push(Check::new("strategy-independence", vec![], move |ctx| {
        let ix = ctx.engine.ix;
        let mut rng = ChaCha20Rng::seed_from_u64(ctx.seed ^ 0x73747261);
        let mut letters: Vec<Letter> = vec![Letter::c(&ix, 1), Letter::c(&ix, 2)];
        for r in 1..=2 {
            for i in 1..=ix.n {
                for j in 1..=ix.n {
                    letters.push(Letter::t(&ix, i, j, r));
                }
            }
        }
        let mut violations = 0;
        for _ in 0..100 {
            let mut p = RPoly::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let mut word = Vec::new();
                let mut degree = 0;
                for _ in 0..rng.gen_range(1..=3) {
                    let l = letters[rng.gen_range(0..letters.len())];
                    if degree + l.degree() > 4 {
                        break;
                    }
                    degree += l.degree();
                    word.push(l);
                }
                p.add_term(Word(word), Rat::from_int(rng.gen_range(-3..=3)));
            }
            let left = ctx.engine.normalize(&p);
            let right = ctx.engine.normalize_with_strategy(&p, Strategy::RightmostFirst);
            if left != right {
                violations += 1;
            }
        }
        Residual::Violations(violations)
    }));
    scaling_invariance_checks(&mut checks);
    checks
}

pub fn morphism_checks(_ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    for (name, morph) in [
        ("sigma-fourth", Morphism::<Rat>::Flip),
        ("tau-fourth", Morphism::<Rat>::Transpose),
    ] {
        checks.push(Check::new(name, vec![], move |ctx| {
            let ix = ctx.engine.ix;
            let mut residuals = Vec::new();
            for r in 1..=ctx.d {
                let mut letters = vec![Letter::c(&ix, r)];
                for i in 1..=ix.n {
                    for j in 1..=ix.n {
                        letters.push(Letter::t(&ix, i, j, r));
                    }
                }
                for l in letters {
                    let mut p = RPoly::letter(l);
                    for _ in 0..4 {
                        p = morph.apply(&p);
                    }
                    residuals.push(p.sub(&RPoly::letter(l)));
                }
            }
            Residual::ElemMany(residuals)
        }));
    }
    for (name, morph) in [
        ("sigma-relations", Morphism::<Rat>::Flip),
        ("tau-relations", Morphism::<Rat>::Transpose),
    ] {
        checks.push(Check::new(name, vec![], move |ctx| {
            // the morphism maps every defining-relation residue to zero
            let ix = ctx.engine.ix;
            let bound = if ctx.m == 1 { 5 } else { 3 };
            let mut residuals = Vec::new();
            for i in 1..=ix.n {
                for j in 1..=ix.n {
                    for k in 1..=ix.n {
                        for l in 1..=ix.n {
                            for r in 1..bound {
                                for s in 1..=bound - r {
                                    let lhs = super_commutator(
                                        &RPoly::letter(Letter::t(&ix, i, j, r)),
                                        &RPoly::letter(Letter::t(&ix, k, l, s)),
                                    );
                                    let relation =
                                        lhs.sub(&ctx.engine.commutator_table(i, j, k, l, r, s));
                                    residuals.push(morph.apply(&relation));
                                }
                            }
                        }
                    }
                }
            }
            Residual::ElemMany(residuals)
        }));
    }
    for (name, morph) in [
        ("sigma-central-series", Morphism::<Rat>::Flip),
        ("tau-central-series", Morphism::<Rat>::Transpose),
    ] {
        checks.push(Check::new(name, vec![], move |ctx| {
            // the image of the central letter agrees with the image of its
            // defining expansion (the (1,1) entry of the dressed product)
            let ix = ctx.engine.ix;
            let entry = central_matrix::<Rat>(&ix, ctx.d, false);
            let mut residuals = Vec::new();
            for r in 1..=ctx.d {
                let expansion = morph.apply(entry.entry(1, 1).coeff(r));
                let letter = morph.apply(&RPoly::letter(Letter::c(&ix, r)));
                residuals.push(expansion.sub(&letter));
            }
            Residual::ElemMany(residuals)
        }));
    }
    scaling_invariance_checks(&mut checks);
    checks
}

/// Deliberately perturbed fixtures; a healthy engine reports every one of
/// these as failing.
pub fn negative_control_checks(_ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(Check::new("mutated-table-entry", vec![], move |ctx| {
        let ix = ctx.engine.ix;
        let lhs = super_commutator(
            &RPoly::letter(Letter::t(&ix, 1, 1, 1)),
            &RPoly::letter(Letter::t(&ix, 1, 2, 1)),
        );
        // the true entry, perturbed by +t_12^(1)
        let mut table = (*ctx.engine.commutator_table(1, 1, 1, 2, 1, 1)).clone();
        table.add_term(Word::single(Letter::t(&ix, 1, 2, 1)), Rat::from_int(1));
        Residual::Elem(lhs.sub(&table))
    }));
    checks.push(Check::new("mutated-cross-relation", vec![], move |ctx| {
        // right side scaled by 2
        let e = bu(ctx.e_simple(1), ctx.d);
        let f = bv(ctx.f_simple(1), ctx.d);
        let rhs = dq0(&ctx.k[1], ctx.d).scale(&Rat::from_int(2));
        Residual::Bi(com(&e, &f).sub(&rhs))
    }));
    checks.push(Check::new("mutated-diagonal-action", vec![], move |ctx| {
        // sign of the right side flipped
        let h1 = bu(&ctx.h[1], ctx.d);
        let lhs = com(&h1, &bv(ctx.e_simple(1), ctx.d));
        Residual::Bi(lhs.add(&bmul(&h1, &dq0(ctx.e_simple(1), ctx.d))))
    }));
    checks.push(Check::new("mutated-word-count", vec![], move |ctx| {
        let enumerated = ctx.engine.enumerate_normal_words(2).len() as i128;
        Residual::Counts(vec![(enumerated, ctx.engine.pbw_series_count(2) + 1)])
    }));
    checks
}
