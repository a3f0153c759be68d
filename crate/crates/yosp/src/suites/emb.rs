//! Embedding of the finite-dimensional orthosymplectic Lie superalgebra into
//! the level-one generators, checked against an independent oracle: the
//! explicit matrix realization inside gl(1|2m) with exact rational entries.

use super::{Check, Context, Residual};
use crate::algebra::{super_commutator, Letter, Poly};
use crate::index::IndexData;
use crate::scalar::Scalar;
use num_traits::Zero;
use crate::{RPoly, Rat};

/// Dense exact matrix, 0-based.
#[derive(Clone, Debug, PartialEq)]
struct Mat {
    n: usize,
    a: Vec<Rat>,
}

impl Mat {
    fn zero(n: usize) -> Self {
        Mat {
            n,
            a: vec![Rat::from_int(0); n * n],
        }
    }

    fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[(i - 1) * self.n + (j - 1)]
    }

    fn add_at(&mut self, i: usize, j: usize, v: Rat) {
        let idx = (i - 1) * self.n + (j - 1);
        self.a[idx] = self.a[idx].clone() + v;
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 1..=self.n {
            for k in 1..=self.n {
                if self.get(i, k).is_zero() {
                    continue;
                }
                for j in 1..=self.n {
                    let v = self.get(i, k).clone() * other.get(k, j).clone();
                    out.add_at(i, j, v);
                }
            }
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for idx in 0..out.a.len() {
            out.a[idx] = out.a[idx].clone() - other.a[idx].clone();
        }
        out
    }

    fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for v in &mut out.a {
            *v = v.clone() * c.clone();
        }
        out
    }
}

fn sign_pm(exp: usize) -> Rat {
    if exp % 2 == 0 {
        Rat::from_int(1)
    } else {
        Rat::from_int(-1)
    }
}

/// Matrix realization F_ij = E_ij - E_{j'i'} (-1)^{bar i bar j + bar i}
/// theta_i theta_j.
fn f_matrix(ix: &IndexData, i: usize, j: usize) -> Mat {
    let mut m = Mat::zero(ix.n);
    m.add_at(i, j, Rat::from_int(1));
    let coef = sign_pm(ix.bar(i) as usize * ix.bar(j) as usize + ix.bar(i) as usize)
        * Rat::from_int(ix.theta(i) * ix.theta(j));
    m.add_at(ix.prime(j), ix.prime(i), -coef);
    m
}

/// Level-one image: F_ij -> (t_ij^(1) - t_{j'i'}^(1) (-1)^{bar j + bar i bar j}
/// theta_i theta_j) (-1)^{bar i} / 2.
fn f_embedded(ix: &IndexData, i: usize, j: usize) -> RPoly {
    let mut p = Poly::letter(Letter::t(ix, i, j, 1));
    let coef = sign_pm(ix.bar(j) as usize + ix.bar(i) as usize * ix.bar(j) as usize)
        * Rat::from_int(ix.theta(i) * ix.theta(j));
    p.add_term(
        crate::algebra::Word::single(Letter::t(ix, ix.prime(j), ix.prime(i), 1)),
        -coef,
    );
    p.scale(&(sign_pm(ix.bar(i) as usize) * Rat::ratio(1, 2)))
}

pub fn checks(ctx: &Context) -> Vec<Check> {
    let n = ctx.engine.ix.n;
    let mut checks = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            checks.push(Check::new(
                "embedding-bracket",
                vec![i as i64, j as i64],
                move |ctx| {
                    let ix = ctx.engine.ix;
                    let mut residuals = Vec::new();
                    let fij_mat = f_matrix(&ix, i, j);
                    let fij = f_embedded(&ix, i, j);
                    let p_ij = ix.parity(i, j);
                    for k in 1..=ix.n {
                        for l in 1..=ix.n {
                            let fkl_mat = f_matrix(&ix, k, l);
                            let fkl = f_embedded(&ix, k, l);
                            let p_kl = ix.parity(k, l);
                            // oracle super-bracket of matrices
                            let forward = fij_mat.mul(&fkl_mat);
                            let backward = fkl_mat.mul(&fij_mat);
                            let bracket = if p_ij & p_kl == 1 {
                                forward.sub(&backward.scale(&Rat::from_int(-1)))
                            } else {
                                forward.sub(&backward)
                            };
                            // expand in the embedded generators:
                            // M = (1/2) sum_ab mu_ab F_ab for M in the span
                            let mut expected = RPoly::zero();
                            for a in 1..=ix.n {
                                for b in 1..=ix.n {
                                    let mu = bracket.get(a, b);
                                    if mu.is_zero() {
                                        continue;
                                    }
                                    expected.add_assign(
                                        &f_embedded(&ix, a, b)
                                            .scale(&(mu.clone() * Rat::ratio(1, 2))),
                                    );
                                }
                            }
                            let lhs = super_commutator(&fij, &fkl);
                            residuals.push(lhs.sub(&expected));
                        }
                    }
                    Residual::ElemMany(residuals)
                },
            ));
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_bracket_shapes() {
        let ix = IndexData::new(1);
        // F_11 is even; the matrix super-bracket with itself is the plain
        // commutator and vanishes
        let f11 = f_matrix(&ix, 1, 1);
        let ad = f11.mul(&f11).sub(&f11.mul(&f11));
        assert!(ad.a.iter().all(|v| v.is_zero()));
        // odd generator: the bracket uses the anticommutator
        let f12 = f_matrix(&ix, 1, 2);
        let anti = {
            let fw = f12.mul(&f12);
            let bw = f12.mul(&f12);
            fw.sub(&bw.scale(&Rat::from_int(-1)))
        };
        assert!(!anti.a.iter().all(|v| v.is_zero()));
        // skew-symmetry of the realization: F_{j'i'} is proportional to F_ij
        let fji = f_matrix(&ix, ix.prime(2), ix.prime(1));
        let coef = sign_pm(ix.bar(1) as usize * ix.bar(2) as usize + ix.bar(1) as usize)
            * Rat::from_int(ix.theta(1) * ix.theta(2));
        assert_eq!(fji.scale(&(-coef)).a, f12.a);
    }
}
