//! Gauss decomposition T(u) = F(u) H(u) E(u) of the generator matrix,
//! quasideterminants as an independent route to the same series, the central
//! series in two forms, the auxiliary square-root series z(u), and the
//! shift-normalized generator family used by the rank-m Yangian presentation.
//!
//! Series produced here are raw free-algebra elements; callers normalize when
//! they compare. Deferring reduction keeps the decomposition cheap.

use crate::index::IndexData;
use crate::scalar::Scalar;
use crate::series::{kappa, SeriesError, SeriesMatrix, USeries};

/// The triangular/diagonal factors of the generator matrix and everything
/// derived from them.
pub struct GaussData<S: Scalar> {
    pub ix: IndexData,
    pub order: usize,
    /// Unit lower-triangular factor; entry (j, i) for i < j is f_ji(u).
    pub f: SeriesMatrix<S>,
    /// Diagonal series h_1(u), ..., h_{2m+1}(u), 1-based.
    h: Vec<USeries<S>>,
    /// Unit upper-triangular factor; entry (i, j) for i < j is e_ij(u).
    pub e: SeriesMatrix<S>,
}

impl<S: Scalar> GaussData<S> {
    pub fn h(&self, i: usize) -> &USeries<S> {
        &self.h[i]
    }

    pub fn e_entry(&self, i: usize, j: usize) -> &USeries<S> {
        assert!(i < j);
        self.e.entry(i, j)
    }

    pub fn f_entry(&self, j: usize, i: usize) -> &USeries<S> {
        assert!(i < j);
        self.f.entry(j, i)
    }

    /// k_i(u) = h_i(u)^{-1} h_{i+1}(u) for i = 1..=m.
    pub fn k(&self, i: usize) -> USeries<S> {
        assert!(1 <= i && i <= self.ix.m);
        self.h[i]
            .invert()
            .expect("diagonal factor has unit constant term")
            .mul(&self.h[i + 1])
    }

    /// e_i(u) = e_{i,i+1}(u).
    pub fn e_simple(&self, i: usize) -> &USeries<S> {
        assert!(1 <= i && i <= self.ix.m);
        self.e_entry(i, i + 1)
    }

    /// f_i(u) = f_{i+1,i}(u).
    pub fn f_simple(&self, i: usize) -> &USeries<S> {
        assert!(1 <= i && i <= self.ix.m);
        self.f_entry(i + 1, i)
    }

    /// The corner series e_{m,m'}(u).
    pub fn e_corner(&self) -> &USeries<S> {
        self.e_entry(self.ix.m, self.ix.prime(self.ix.m))
    }

    /// The corner series f_{m',m}(u).
    pub fn f_corner(&self) -> &USeries<S> {
        self.f_entry(self.ix.prime(self.ix.m), self.ix.m)
    }

    /// kappa_i(u) = k_i(u - (m-i)/2).
    pub fn kappa_series(&self, i: usize) -> USeries<S> {
        self.k(i).shift(&self.xi_shift(i))
    }

    /// xi^+_i(u) = f_i(u - (m-i)/2).
    pub fn xi_plus(&self, i: usize) -> USeries<S> {
        self.f_simple(i).shift(&self.xi_shift(i))
    }

    /// xi^-_i(u) = -e_i(u - (m-i)/2).
    pub fn xi_minus(&self, i: usize) -> USeries<S> {
        self.e_simple(i).shift(&self.xi_shift(i)).neg()
    }

    /// xi^+(u) = f_{m'm}(u).
    pub fn xi_plus_corner(&self) -> USeries<S> {
        self.f_corner().clone()
    }

    /// xi^-(u) = -e_{mm'}(u).
    pub fn xi_minus_corner(&self) -> USeries<S> {
        self.e_corner().neg()
    }

    fn xi_shift(&self, i: usize) -> S {
        S::ratio(-((self.ix.m - i) as i64), 2)
    }

    /// F * H * E, for the reconstruction check.
    pub fn recompose(&self) -> SeriesMatrix<S> {
        let n = self.ix.n;
        let mut diag = SeriesMatrix::zero(n, self.order);
        for i in 1..=n {
            *diag.entry_mut(i, i) = self.h[i].clone();
        }
        self.f.mul(&diag).mul(&self.e)
    }
}

/// Successive elimination on Schur complements: h_1 = t_11,
/// e_1j = h_1^{-1} t_1j, f_j1 = t_j1 h_1^{-1}, then recurse on
/// [t_ij - f_i1 h_1 e_1j].
pub fn gauss_decompose<S: Scalar>(t: &SeriesMatrix<S>, ix: &IndexData) -> Result<GaussData<S>, SeriesError> {
    assert_eq!(t.n, ix.n);
    let n = t.n;
    let order = t.order;
    let mut f = SeriesMatrix::identity(n, order);
    let mut e = SeriesMatrix::identity(n, order);
    let mut h = vec![USeries::zero(order); n + 1];
    let mut schur = t.clone();
    for level in 1..=n {
        let pivot = schur.entry(level, level).clone();
        let pivot_inv = pivot.invert()?;
        h[level] = pivot;
        for j in level + 1..=n {
            *e.entry_mut(level, j) = pivot_inv.mul(schur.entry(level, j));
            *f.entry_mut(j, level) = schur.entry(j, level).mul(&pivot_inv);
        }
        let mut next = schur.clone();
        for i in level + 1..=n {
            for j in level + 1..=n {
                let correction = f.entry(i, level).mul(&h[level]).mul(e.entry(level, j));
                *next.entry_mut(i, j) = schur.entry(i, j).sub(&correction);
            }
        }
        schur = next;
    }
    Ok(GaussData {
        ix: *ix,
        order,
        f,
        h,
        e,
    })
}

/// Boxed-entry quasideterminant |A|_ij = a_ij - r (A^{ij})^{-1} c, where the
/// deleted minor must be invertible as a series matrix.
pub fn quasideterminant<S: Scalar>(
    a: &SeriesMatrix<S>,
    i: usize,
    j: usize,
) -> Result<USeries<S>, SeriesError> {
    let n = a.n;
    assert!(1 <= i && i <= n && 1 <= j && j <= n);
    if n == 1 {
        return Ok(a.entry(1, 1).clone());
    }
    let rows: Vec<usize> = (1..=n).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
    let mut minor = SeriesMatrix::zero(n - 1, a.order);
    for (p, &r) in rows.iter().enumerate() {
        for (q, &c) in cols.iter().enumerate() {
            *minor.entry_mut(p + 1, q + 1) = a.entry(r, c).clone();
        }
    }
    let minor_inv = minor.invert().map_err(|_| SeriesError::SingularMinor)?;
    let mut correction = USeries::zero(a.order);
    for (p, &c) in cols.iter().enumerate() {
        for (q, &r) in rows.iter().enumerate() {
            // row entry a_{i,c} times (minor^{-1})_{p,q} times column a_{r,j}
            let term = a
                .entry(i, c)
                .mul(minor_inv.entry(p + 1, q + 1))
                .mul(a.entry(r, j));
            correction = correction.add(&term);
        }
    }
    Ok(a.entry(i, j).sub(&correction))
}

/// Leading i x i submatrix with the last column replaced by column j, the
/// shape whose boxed (i, j) quasideterminant computes e_ij; `f_ji` uses the
/// transposed shape.
pub fn corner_submatrix<S: Scalar>(
    t: &SeriesMatrix<S>,
    size: usize,
    last_row: usize,
    last_col: usize,
) -> SeriesMatrix<S> {
    let mut a = SeriesMatrix::zero(size, t.order);
    let row_of = |p: usize| if p == size { last_row } else { p };
    let col_of = |q: usize| if q == size { last_col } else { q };
    for p in 1..=size {
        for q in 1..=size {
            *a.entry_mut(p, q) = t.entry(row_of(p), col_of(q)).clone();
        }
    }
    a
}

/// The central-series product T(u - kappa) T^t(u) (or the reverse order).
pub fn central_matrix<S: Scalar>(
    ix: &IndexData,
    order: usize,
    transpose_first: bool,
) -> SeriesMatrix<S> {
    let t = SeriesMatrix::t_matrix(ix, order);
    let shifted = t.shift(&(-kappa::<S>(ix)));
    let transposed = t.super_transpose(ix);
    if transpose_first {
        transposed.mul(&shifted)
    } else {
        shifted.mul(&transposed)
    }
}

/// Right side of the product formula for the central series:
/// prod_i h_i(u+i-1) h_i(u+i)^{-1} * h_{m+1}(u+m+1/2) h_{m+1}(u+m).
pub fn central_product<S: Scalar>(gauss: &GaussData<S>) -> Result<USeries<S>, SeriesError> {
    let m = gauss.ix.m;
    let mut acc = USeries::one(gauss.order);
    for i in 1..=m {
        let num = gauss.h(i).shift(&S::from_int(i as i64 - 1));
        let den = gauss.h(i).shift(&S::from_int(i as i64)).invert()?;
        acc = acc.mul(&num).mul(&den);
    }
    let mid1 = gauss.h(m + 1).shift(&S::ratio(2 * m as i64 + 1, 2));
    let mid2 = gauss.h(m + 1).shift(&S::from_int(m as i64));
    Ok(acc.mul(&mid1).mul(&mid2))
}

/// The unique series z(u) = 1 + ... with central-letter coefficients solving
/// z(u) z(u+1/2) = c(u-1), coefficient by coefficient (the order-r equation
/// determines z^(r) linearly from lower data).
pub fn z_series<S: Scalar>(ix: &IndexData, order: usize) -> USeries<S> {
    let c_shifted = USeries::<S>::c_letters(ix, order).shift(&S::from_int(-1));
    let mut z = USeries::<S>::one(order);
    let half = S::ratio(1, 2);
    for r in 1..=order {
        let with_zero = z.mul(&z.shift(&half));
        let mut gap = c_shifted.coeff(r).sub(with_zero.coeff(r));
        gap = gap.scale(&half);
        z.set_coeff(r, gap);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Letter, Poly};
    use crate::{REngine, Rat, RPoly};

    fn setup(m: usize, d: usize) -> (REngine, GaussData<Rat>) {
        let engine = REngine::new(m);
        let t = SeriesMatrix::t_matrix(&engine.ix, d);
        let gauss = gauss_decompose(&t, &engine.ix).unwrap();
        (engine, gauss)
    }

    fn lt(ix: &IndexData, i: usize, j: usize, r: usize) -> RPoly {
        Poly::letter(Letter::t(ix, i, j, r))
    }

    #[test]
    fn first_pivot_is_the_entry() {
        let (engine, gauss) = setup(1, 3);
        let t11 = USeries::t_entry(&engine.ix, 1, 1, 3);
        assert_eq!(gauss.h(1), &t11);
        assert_eq!(gauss.e_simple(1).coeff(1), &lt(&engine.ix, 1, 2, 1));
    }

    #[test]
    fn second_order_raw_coefficient() {
        // e_12^(2) = t_12^(2) - t_11^(1) t_12^(1), already in the free algebra
        let (engine, gauss) = setup(1, 3);
        let expect = lt(&engine.ix, 1, 2, 2)
            .sub(&lt(&engine.ix, 1, 1, 1).mul(&lt(&engine.ix, 1, 2, 1)));
        assert_eq!(gauss.e_simple(1).coeff(2), &expect);
    }

    #[test]
    fn reconstruction_is_exact() {
        for m in [1, 2] {
            let (engine, gauss) = setup(m, 2);
            let t = SeriesMatrix::t_matrix(&engine.ix, 2);
            let back = gauss.recompose();
            for i in 1..=engine.ix.n {
                for j in 1..=engine.ix.n {
                    let diff = back.entry(i, j).sub(t.entry(i, j));
                    for r in 0..=2 {
                        assert!(engine.is_zero(diff.coeff(r)), "entry ({i},{j}) order {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn quasideterminant_basics() {
        let (engine, gauss) = setup(1, 3);
        let t = SeriesMatrix::t_matrix(&engine.ix, 3);
        // 1x1 case: the entry itself
        let sub = corner_submatrix(&t, 1, 1, 1);
        assert_eq!(quasideterminant(&sub, 1, 1).unwrap(), *t.entry(1, 1));
        // identity matrix
        let id = SeriesMatrix::<Rat>::identity(3, 3);
        assert_eq!(quasideterminant(&id, 2, 2).unwrap(), USeries::one(3));
        // 2x2 boxed (2,2) agrees with the Schur pivot h_2
        let sub2 = corner_submatrix(&t, 2, 2, 2);
        let q = quasideterminant(&sub2, 2, 2).unwrap();
        let diff = q.sub(gauss.h(2));
        for r in 0..=3 {
            assert!(engine.is_zero(diff.coeff(r)));
        }
    }

    #[test]
    fn central_series_first_coefficient() {
        // the (1,1) entry of T(u-kappa) T^t(u) normalizes to the central
        // letter series: at order 1, c^(1) itself
        let engine = REngine::new(1);
        let prod = central_matrix::<Rat>(&engine.ix, 2, false);
        let c1 = engine.normalize(prod.entry(1, 1).coeff(1));
        assert_eq!(c1, RPoly::letter(Letter::c(&engine.ix, 1)));
        assert_eq!(*prod.entry(1, 1).coeff(0), RPoly::one());
    }

    #[test]
    fn z_series_solves_its_equation() {
        let engine = REngine::new(1);
        let d = 4;
        let z = z_series::<Rat>(&engine.ix, d);
        // z^(1) = c^(1)/2
        assert_eq!(
            *z.coeff(1),
            RPoly::letter(Letter::c(&engine.ix, 1)).scale(&Rat::ratio(1, 2))
        );
        let lhs = z.mul(&z.shift(&Rat::ratio(1, 2)));
        let rhs = USeries::<Rat>::c_letters(&engine.ix, d).shift(&Rat::from_int(-1));
        for r in 0..=d {
            assert_eq!(lhs.coeff(r), rhs.coeff(r), "order {r}");
        }
    }

    #[test]
    fn xi_shifts() {
        let (_, gauss) = setup(2, 3);
        // i = m: zero shift
        assert_eq!(gauss.xi_minus(2), gauss.e_simple(2).neg());
        // leading coefficient unaffected by any shift
        assert_eq!(gauss.xi_minus(1).coeff(1), &gauss.e_simple(1).coeff(1).neg());
        // kappa_i at u^{-2} picks up the binomial correction (m-i)/2 * k^(1)
        let k1 = gauss.k(1);
        let kap1 = gauss.kappa_series(1);
        let expect = k1.coeff(2).add(&k1.coeff(1).scale(&Rat::ratio(-1, 2)).neg());
        assert_eq!(kap1.coeff(2), &expect);
    }
}
