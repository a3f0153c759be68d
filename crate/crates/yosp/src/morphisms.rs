//! Letter-image maps extended (anti)multiplicatively with Koszul signs: the
//! composed flip automorphism, the sign-dressed transposition
//! anti-automorphism, the scaling family, and the coproduct into an explicit
//! tensor-square algebra with its own normal form.

use crate::algebra::{Letter, Poly, Word};
use crate::index::IndexData;
use crate::rewrite::Engine;
use crate::scalar::Scalar;
use crate::series::{kappa, USeries};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Morphism<S: Scalar> {
    Identity,
    /// t_ij(u) -> t_ji(-u-1) (-1)^{bar i bar j + bar j}; multiplicative.
    Flip,
    /// t_ij(u) -> t_ji(u) (-1)^{bar i bar j + bar j}; anti-multiplicative.
    Transpose,
    /// t_ij(u) -> phi(u) t_ij(u) with phi = 1 + phi1 u^{-1}; multiplicative.
    Scaling(S),
}

impl<S: Scalar> Morphism<S> {
    pub fn is_anti(&self) -> bool {
        matches!(self, Morphism::Transpose)
    }

    fn dressing(ix: &IndexData, i: usize, j: usize) -> S {
        if (ix.bar(i) * ix.bar(j) + ix.bar(j)) % 2 == 0 {
            S::one()
        } else {
            -S::one()
        }
    }

    /// The image of a single letter.
    pub fn letter_image(&self, l: Letter) -> Poly<S> {
        let ix = l.index_data();
        let r = l.r();
        match self {
            Morphism::Identity => Poly::letter(l),
            Morphism::Flip => {
                if l.is_t() {
                    // coefficient of u^{-r} in t_ji(-u-1), dressed
                    let (i, j) = (l.i(), l.j());
                    let mut series = USeries::<S>::zero(r);
                    for s in 1..=r {
                        series.set_coeff(s, Poly::letter(Letter::t(&ix, j, i, s)));
                    }
                    let image = series.substitute(-1, &S::from_int(-1));
                    image.coeff(r).scale(&Self::dressing(&ix, i, j))
                } else {
                    // the central series maps to c(-u + kappa - 1)
                    let shift = kappa::<S>(&ix) - S::one();
                    let mut series = USeries::<S>::zero(r);
                    for s in 1..=r {
                        series.set_coeff(s, Poly::letter(Letter::c(&ix, s)));
                    }
                    series.substitute(-1, &shift).coeff(r).clone()
                }
            }
            Morphism::Transpose => {
                if l.is_t() {
                    let (i, j) = (l.i(), l.j());
                    Poly::letter(Letter::t(&ix, j, i, r)).scale(&Self::dressing(&ix, i, j))
                } else {
                    Poly::letter(l)
                }
            }
            Morphism::Scaling(phi1) => {
                if l.is_t() {
                    // coefficient r of phi(u) t_ij(u)
                    let mut out = Poly::letter(l);
                    if r >= 2 {
                        out.add_term(
                            Word::single(Letter::t(&ix, l.i(), l.j(), r - 1)),
                            phi1.clone(),
                        );
                    } else if l.i() == l.j() {
                        out.add_term(Word::one(), phi1.clone());
                    }
                    out
                } else {
                    // c(u) -> phi(u - kappa) phi(u) c(u)
                    let mut phi = USeries::<S>::one(r);
                    if r >= 1 {
                        phi.set_coeff(1, Poly::scalar(phi1.clone()));
                    }
                    let shifted = phi.shift(&(-kappa::<S>(&ix)));
                    let mut c_series = USeries::<S>::one(r);
                    for s in 1..=r {
                        c_series.set_coeff(s, Poly::letter(Letter::c(&ix, s)));
                    }
                    shifted.mul(&phi).mul(&c_series).coeff(r).clone()
                }
            }
        }
    }

    /// Homomorphic (or anti-homomorphic, with the Koszul reversal sign
    /// (-1)^{k(k-1)/2} for k odd letters) extension to polynomials.
    pub fn apply(&self, p: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let image = self.word_image(w);
            out.add_assign(&image.scale(c));
        }
        out
    }

    fn word_image(&self, w: &Word) -> Poly<S> {
        let mut acc = Poly::one();
        if self.is_anti() {
            for l in w.0.iter().rev() {
                acc = acc.mul(&self.letter_image(*l));
            }
            let odd = w.0.iter().filter(|l| l.parity() == 1).count();
            if (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
                acc = acc.neg();
            }
        } else {
            for l in &w.0 {
                acc = acc.mul(&self.letter_image(*l));
            }
        }
        acc
    }

    /// Applies coefficientwise to a series.
    pub fn apply_series(&self, s: &USeries<S>) -> USeries<S> {
        s.map_coeffs(|p| self.apply(p))
    }
}

// ---------------------------------------------------------------------------
// Tensor square
// ---------------------------------------------------------------------------

/// Linear combinations of split tensors w1 (x) w2. The product moves
/// right-factor content past left-factor content with the Koszul sign
/// (-1)^{p(b1) p(a2)}; the normal form reduces each factor separately, which
/// is a sound zero test because normal words of the tensor square are pairs
/// of normal words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly<S: Scalar> {
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Scalar> Default for TensorPoly<S> {
    fn default() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> TensorPoly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::one(), Word::one(), S::one())
    }

    pub fn term(left: Word, right: Word, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(left, right, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &S)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((a, b), c) in other.terms() {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a.clone(), b.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// (a1 (x) b1)(a2 (x) b2) = (-1)^{p(b1) p(a2)} a1 a2 (x) b1 b2.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                let mut c = c1.clone() * c2.clone();
                if b1.parity() & a2.parity() == 1 {
                    c = -c;
                }
                out.add_term(a1.concat(a2), b1.concat(b2), c);
            }
        }
        out
    }

    pub fn from_left(p: &Poly<S>) -> Self {
        let mut out = Self::zero();
        for (w, c) in p.terms() {
            out.add_term(w.clone(), Word::one(), c.clone());
        }
        out
    }

    pub fn from_right(p: &Poly<S>) -> Self {
        let mut out = Self::zero();
        for (w, c) in p.terms() {
            out.add_term(Word::one(), w.clone(), c.clone());
        }
        out
    }
}

/// Reduces both factors of every split tensor; sound and complete zero test
/// in the tensor square.
pub fn tensor_normalize<S: Scalar>(engine: &Engine<S>, p: &TensorPoly<S>) -> TensorPoly<S> {
    let mut out = TensorPoly::zero();
    for ((a, b), c) in p.terms() {
        let na = engine.normalize(&Poly::term(a.clone(), S::one()));
        let nb = engine.normalize(&Poly::term(b.clone(), S::one()));
        for (wa, ca) in na.terms() {
            for (wb, cb) in nb.terms() {
                out.add_term(
                    wa.clone(),
                    wb.clone(),
                    c.clone() * ca.clone() * cb.clone(),
                );
            }
        }
    }
    out
}

/// Coproduct on letters: t_ij^(r) -> sum_k sum_{a+b=r} t_ik^(a) (x) t_kj^(b)
/// with t^(0) = delta, and c^(r) -> sum_{a+b=r} c^(a) (x) c^(b).
pub fn coproduct_letter<S: Scalar>(l: Letter) -> TensorPoly<S> {
    let ix = l.index_data();
    let r = l.r();
    let mut out = TensorPoly::zero();
    if l.is_t() {
        let (i, j) = (l.i(), l.j());
        for k in 1..=ix.n {
            for a in 0..=r {
                let b = r - a;
                let left = match a {
                    0 if i == k => Word::one(),
                    0 => continue,
                    _ => Word::single(Letter::t(&ix, i, k, a)),
                };
                let right = match b {
                    0 if k == j => Word::one(),
                    0 => continue,
                    _ => Word::single(Letter::t(&ix, k, j, b)),
                };
                out.add_term(left, right, S::one());
            }
        }
    } else {
        for a in 0..=r {
            let b = r - a;
            let left = if a == 0 {
                Word::one()
            } else {
                Word::single(Letter::c(&ix, a))
            };
            let right = if b == 0 {
                Word::one()
            } else {
                Word::single(Letter::c(&ix, b))
            };
            out.add_term(left, right, S::one());
        }
    }
    out
}

/// Multiplicative extension of the coproduct to polynomials.
pub fn coproduct_poly<S: Scalar>(p: &Poly<S>) -> TensorPoly<S> {
    let mut out = TensorPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = TensorPoly::one();
        for l in &w.0 {
            acc = acc.mul(&coproduct_letter(*l));
        }
        out.add_assign(&acc.scale(c));
    }
    out
}

// ---------------------------------------------------------------------------
// Series with tensor-square coefficients
// ---------------------------------------------------------------------------

/// Truncated u-series with TensorPoly coefficients, for coproduct formulas
/// where both tensor factors carry series in the same variable.
#[derive(Clone, Debug)]
pub struct TSeries<S: Scalar> {
    order: usize,
    coeffs: Vec<TensorPoly<S>>,
}

impl<S: Scalar> TSeries<S> {
    pub fn zero(order: usize) -> Self {
        TSeries {
            order,
            coeffs: vec![TensorPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = TensorPoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, r: usize) -> &TensorPoly<S> {
        &self.coeffs[r]
    }

    pub fn set_coeff(&mut self, r: usize, p: TensorPoly<S>) {
        self.coeffs[r] = p;
    }

    /// Embeds g(u) in the left tensor factor.
    pub fn embed_left(g: &USeries<S>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for r in 0..=order.min(g.order()) {
            s.coeffs[r] = TensorPoly::from_left(g.coeff(r));
        }
        s
    }

    pub fn embed_right(g: &USeries<S>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for r in 0..=order.min(g.order()) {
            s.coeffs[r] = TensorPoly::from_right(g.coeff(r));
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for r in 0..=order {
            out.coeffs[r] = self.coeffs[r].add(&other.coeffs[r]);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for r in 0..=order {
            out.coeffs[r] = self.coeffs[r].sub(&other.coeffs[r]);
        }
        out
    }

    pub fn neg(&self) -> Self {
        TSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        TSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for r in 0..=order {
            if self.coeffs[r].is_zero() {
                continue;
            }
            for s in 0..=order - r {
                if other.coeffs[s].is_zero() {
                    continue;
                }
                let prod = self.coeffs[r].mul(&other.coeffs[s]);
                out.coeffs[r + s] = out.coeffs[r + s].add(&prod);
            }
        }
        out
    }

    /// Lowest order with a nonzero coefficient, or order+1.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|p| !p.is_zero())
            .unwrap_or(self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{REngine, Rat, RPoly};

    fn ix() -> IndexData {
        IndexData::new(1)
    }

    fn lt(i: usize, j: usize, r: usize) -> Letter {
        Letter::t(&ix(), i, j, r)
    }

    #[test]
    fn flip_letter_images() {
        let sigma = Morphism::<Rat>::Flip;
        // t_11^(1) -> -t_11^(1)
        assert_eq!(
            sigma.letter_image(lt(1, 1, 1)),
            RPoly::letter(lt(1, 1, 1)).neg()
        );
        // t_12^(1) -> -t_21^(1): the dressing sign is +1 here
        assert_eq!(
            sigma.letter_image(lt(1, 2, 1)),
            RPoly::letter(lt(2, 1, 1)).neg()
        );
    }

    #[test]
    fn transpose_letter_images() {
        let tau = Morphism::<Rat>::Transpose;
        assert_eq!(tau.letter_image(lt(1, 2, 1)), RPoly::letter(lt(2, 1, 1)));
        // anti-multiplicativity with the Koszul sign on homogeneous factors
        let a = RPoly::letter(lt(1, 2, 1)); // odd
        let b = RPoly::letter(lt(2, 1, 1)); // odd
        let image = tau.apply(&a.mul(&b));
        let expect = tau.apply(&b).mul(&tau.apply(&a)).neg();
        assert_eq!(image, expect);
    }

    #[test]
    fn fourth_powers_are_identity() {
        let ixd = ix();
        for morph in [Morphism::<Rat>::Flip, Morphism::<Rat>::Transpose] {
            for r in 1..=3 {
                let mut letters = vec![Letter::c(&ixd, r)];
                for i in 1..=3 {
                    for j in 1..=3 {
                        letters.push(Letter::t(&ixd, i, j, r));
                    }
                }
                for l in letters {
                    let mut p = RPoly::letter(l);
                    for _ in 0..4 {
                        p = morph.apply(&p);
                    }
                    assert_eq!(p, RPoly::letter(l), "{morph:?} at {l}");
                }
            }
        }
    }

    #[test]
    fn identity_morphism_is_identity() {
        let id = Morphism::<Rat>::Identity;
        let p = RPoly::letter(lt(1, 2, 1)).mul(&RPoly::letter(lt(1, 1, 2)));
        assert_eq!(id.apply(&p), p);
    }

    #[test]
    fn coproduct_examples() {
        // primitive-like leading coefficient: off-diagonal r = 1
        let d = coproduct_letter::<Rat>(lt(1, 2, 1));
        let mut expect = TensorPoly::term(Word::single(lt(1, 2, 1)), Word::one(), Rat::from_int(1));
        expect.add_term(Word::one(), Word::single(lt(1, 2, 1)), Rat::from_int(1));
        assert_eq!(d, expect);

        // t_11^(2): group-like corrections from all middle indices
        let d2 = coproduct_letter::<Rat>(lt(1, 1, 2));
        let mut expect2 = TensorPoly::term(Word::single(lt(1, 1, 2)), Word::one(), Rat::from_int(1));
        expect2.add_term(Word::one(), Word::single(lt(1, 1, 2)), Rat::from_int(1));
        for k in 1..=3 {
            expect2.add_term(
                Word::single(lt(1, k, 1)),
                Word::single(lt(k, 1, 1)),
                Rat::from_int(1),
            );
        }
        assert_eq!(d2, expect2);

        // central letters are group-like as a series
        let ixd = ix();
        let dc = coproduct_letter::<Rat>(Letter::c(&ixd, 2));
        let mut expectc = TensorPoly::term(
            Word::single(Letter::c(&ixd, 2)),
            Word::one(),
            Rat::from_int(1),
        );
        expectc.add_term(Word::one(), Word::single(Letter::c(&ixd, 2)), Rat::from_int(1));
        expectc.add_term(
            Word::single(Letter::c(&ixd, 1)),
            Word::single(Letter::c(&ixd, 1)),
            Rat::from_int(1),
        );
        assert_eq!(dc, expectc);
    }

    #[test]
    fn tensor_product_koszul_sign() {
        // (1 (x) odd)(odd (x) 1) = - odd (x) odd
        let x = Word::single(lt(1, 2, 1));
        let a = TensorPoly::<Rat>::term(Word::one(), x.clone(), Rat::from_int(1));
        let b = TensorPoly::<Rat>::term(x.clone(), Word::one(), Rat::from_int(1));
        let prod = a.mul(&b);
        assert_eq!(prod, TensorPoly::term(x.clone(), x.clone(), Rat::from_int(-1)));
        // and with an even right factor no sign appears
        let h = Word::single(lt(1, 1, 1));
        let c = TensorPoly::<Rat>::term(Word::one(), h.clone(), Rat::from_int(1));
        let prod2 = c.mul(&b);
        assert_eq!(prod2, TensorPoly::term(x.clone(), h.clone(), Rat::from_int(1)));
    }

    #[test]
    fn tensor_normalize_reduces_factors() {
        let engine = REngine::new(1);
        // left factor t_12 t_11 reduces to t_11 t_12 + t_12
        let w = Word(vec![lt(1, 2, 1), lt(1, 1, 1)]);
        let tp = TensorPoly::<Rat>::term(w, Word::one(), Rat::from_int(1));
        let nf = tensor_normalize(&engine, &tp);
        let mut expect = TensorPoly::term(
            Word(vec![lt(1, 1, 1), lt(1, 2, 1)]),
            Word::one(),
            Rat::from_int(1),
        );
        expect.add_term(Word::single(lt(1, 2, 1)), Word::one(), Rat::from_int(1));
        assert_eq!(nf, expect);
    }

    #[test]
    fn scaling_images() {
        let mu = Morphism::<Rat>::Scaling(Rat::from_int(2));
        // r = 1 diagonal letter picks up the constant
        let img = mu.letter_image(lt(1, 1, 1));
        let mut expect = RPoly::letter(lt(1, 1, 1));
        expect.add_term(Word::one(), Rat::from_int(2));
        assert_eq!(img, expect);
        // off-diagonal r = 1 is unchanged except by higher phi coefficients
        assert_eq!(mu.letter_image(lt(1, 2, 1)), RPoly::letter(lt(1, 2, 1)));
        // r = 2 shifts down
        let img2 = mu.letter_image(lt(1, 2, 2));
        let mut expect2 = RPoly::letter(lt(1, 2, 2));
        expect2.add_term(Word::single(lt(1, 2, 1)), Rat::from_int(2));
        assert_eq!(img2, expect2);
    }
}
