//! The free associative superalgebra over an exact scalar field: generator
//! letters `t[i,j,r]` and central letters `c[r]`, words, and sparse linear
//! combinations with canonically ordered terms.
//!
//! The free product never introduces signs; Koszul signs live exclusively in
//! the super-commutator and in morphism application. Parity is additive over
//! letters, filtration degree is the sum of superscripts.

use crate::index::IndexData;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A generator symbol, packed into a `u32` so that the derived ordering is
/// the canonical letter order: superscript first, then central letters before
/// t-letters, then row, then column.
///
/// Layout (most significant first): r (8) | kind (1) | i (5) | j (5) | m (4).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn t(ix: &IndexData, i: usize, j: usize, r: usize) -> Self {
        assert!(r >= 1 && r < 256, "superscript out of range");
        assert!(1 <= i && i <= ix.n && 1 <= j && j <= ix.n, "index out of range");
        assert!(ix.m < 16);
        Letter(
            ((r as u32) << 24)
                | (1 << 23)
                | ((i as u32) << 18)
                | ((j as u32) << 13)
                | ((ix.m as u32) << 9),
        )
    }

    pub fn c(ix: &IndexData, r: usize) -> Self {
        assert!(r >= 1 && r < 256, "superscript out of range");
        assert!(ix.m < 16);
        Letter(((r as u32) << 24) | ((ix.m as u32) << 9))
    }

    pub fn is_t(&self) -> bool {
        self.0 & (1 << 23) != 0
    }

    pub fn is_c(&self) -> bool {
        !self.is_t()
    }

    pub fn r(&self) -> usize {
        (self.0 >> 24) as usize
    }

    /// Row index; 0 for central letters.
    pub fn i(&self) -> usize {
        ((self.0 >> 18) & 0x1f) as usize
    }

    /// Column index; 0 for central letters.
    pub fn j(&self) -> usize {
        ((self.0 >> 13) & 0x1f) as usize
    }

    pub fn m(&self) -> usize {
        ((self.0 >> 9) & 0xf) as usize
    }

    pub fn index_data(&self) -> IndexData {
        IndexData::new(self.m())
    }

    pub fn parity(&self) -> u8 {
        if self.is_c() {
            0
        } else {
            self.index_data().parity(self.i(), self.j())
        }
    }

    pub fn degree(&self) -> usize {
        self.r()
    }

    pub fn is_allowed(&self) -> bool {
        self.is_c() || self.index_data().is_allowed(self.i(), self.j())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_t() {
            write!(f, "t[{},{},{}]", self.i(), self.j(), self.r())
        } else {
            write!(f, "c[{}]", self.r())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `t[i,j,r]` or `c[r]`; the ambient rank is supplied by the caller.
pub fn parse_letter(ix: &IndexData, text: &str) -> Option<Letter> {
    let body = text.strip_suffix(']')?;
    if let Some(rest) = body.strip_prefix("t[") {
        let mut parts = rest.split(',');
        let i: usize = parts.next()?.parse().ok()?;
        let j: usize = parts.next()?.parse().ok()?;
        let r: usize = parts.next()?.parse().ok()?;
        if parts.next().is_some() || i == 0 || j == 0 || i > ix.n || j > ix.n || r == 0 {
            return None;
        }
        Some(Letter::t(ix, i, j, r))
    } else if let Some(rest) = body.strip_prefix("c[") {
        let r: usize = rest.parse().ok()?;
        if r == 0 {
            return None;
        }
        Some(Letter::c(ix, r))
    } else {
        None
    }
}

/// An ordered product of letters. The empty word is the algebra unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn parity(&self) -> u8 {
        (self.0.iter().map(|l| l.parity() as usize).sum::<usize>() % 2) as u8
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn parse_word(ix: &IndexData, text: &str) -> Option<Word> {
    if text == "1" {
        return Some(Word::one());
    }
    let letters: Option<Vec<Letter>> =
        text.split_whitespace().map(|tok| parse_letter(ix, tok)).collect();
    Some(Word(letters?))
}

/// A finite linear combination of words with nonzero coefficients, kept in
/// canonical term order. Zero coefficients are pruned eagerly so that the
/// syntactic zero test on normal forms is sound.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<S: Scalar> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for Poly<S> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::one(), S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Word::single(l), S::one())
    }

    pub fn term(w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_assign(&mut self, other: &Poly<S>) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<S> {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Poly<S> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Free product: bilinear extension of word concatenation. No signs.
    pub fn mul(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                out.add_term(wa.concat(wb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Splits into parity-homogeneous components: `(even, odd)`.
    pub fn parity_split(&self) -> (Poly<S>, Poly<S>) {
        let mut even = Poly::zero();
        let mut odd = Poly::zero();
        for (w, c) in self.terms() {
            if w.parity() == 0 {
                even.add_term(w.clone(), c.clone());
            } else {
                odd.add_term(w.clone(), c.clone());
            }
        }
        (even, odd)
    }

    /// Parity of a homogeneous polynomial; `None` when mixed or zero.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let p = it.next()?.parity();
        if it.all(|w| w.parity() == p) {
            Some(p)
        } else {
            None
        }
    }

    pub fn encode(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{}*{}", c.encode(), w))
            .collect();
        parts.join(" + ")
    }

    pub fn decode(ix: &IndexData, text: &str) -> Option<Poly<S>> {
        let mut out = Poly::zero();
        if text == "0" {
            return Some(out);
        }
        for part in text.split(" + ") {
            let (c, w) = part.split_once('*')?;
            out.add_term(parse_word(ix, w)?, S::decode(c)?);
        }
        Some(out)
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// Super-commutator `[a,b] = ab - (-1)^{p(a)p(b)} ba`, extended bilinearly
/// over the parity decompositions of both arguments.
pub fn super_commutator<S: Scalar>(a: &Poly<S>, b: &Poly<S>) -> Poly<S> {
    let (ae, ao) = a.parity_split();
    let (be, bo) = b.parity_split();
    let mut out = Poly::zero();
    for (ah, pa) in [(&ae, 0u8), (&ao, 1u8)] {
        for (bh, pb) in [(&be, 0u8), (&bo, 1u8)] {
            if ah.is_zero() || bh.is_zero() {
                continue;
            }
            let forward = ah.mul(bh);
            let backward = bh.mul(ah);
            out.add_assign(&forward);
            if pa & pb == 1 {
                out.add_assign(&backward);
            } else {
                out.add_assign(&backward.neg());
            }
        }
    }
    out
}

/// Anti-commutator `{a,b} = ab + ba`.
pub fn anti_commutator<S: Scalar>(a: &Poly<S>, b: &Poly<S>) -> Poly<S> {
    let mut out = a.mul(b);
    out.add_assign(&b.mul(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RPoly};

    fn ix() -> IndexData {
        IndexData::new(1)
    }

    fn t(i: usize, j: usize, r: usize) -> RPoly {
        Poly::letter(Letter::t(&ix(), i, j, r))
    }

    #[test]
    fn letter_order_is_degree_then_kind_then_indices() {
        let ix = ix();
        let c1 = Letter::c(&ix, 1);
        let t111 = Letter::t(&ix, 1, 1, 1);
        let t121 = Letter::t(&ix, 1, 2, 1);
        let c2 = Letter::c(&ix, 2);
        let t112 = Letter::t(&ix, 1, 1, 2);
        let mut v = vec![t112, c2, t121, t111, c1];
        v.sort();
        assert_eq!(v, vec![c1, t111, t121, c2, t112]);
    }

    #[test]
    fn parity_split_examples() {
        // bar(1)+bar(2) = 1 mod 2: odd; bar(1)+bar(1) = 0: even.
        let p = t(1, 2, 1).add(&t(1, 1, 1));
        let (even, odd) = p.parity_split();
        assert_eq!(even, t(1, 1, 1));
        assert_eq!(odd, t(1, 2, 1));
        assert_eq!(t(1, 2, 1).homogeneous_parity(), Some(1));
        assert_eq!(t(1, 1, 1).homogeneous_parity(), Some(0));
    }

    #[test]
    fn free_product_examples() {
        let a = t(1, 1, 1).scale(&Rat::from_int(2));
        let b = t(1, 2, 1).scale(&Rat::from_int(3));
        let ab = a.mul(&b);
        assert_eq!(ab.num_terms(), 1);
        let (w, c) = ab.terms().next().unwrap();
        assert_eq!(c, &Rat::from_int(6));
        assert_eq!(w.len(), 2);
        assert_eq!(w.degree(), 2);

        let one = RPoly::one();
        assert_eq!(one.mul(&b), b);

        let sq = t(1, 2, 1).mul(&t(1, 2, 1));
        let (w, _) = sq.terms().next().unwrap();
        assert_eq!((w.len(), w.degree()), (2, 2));
    }

    #[test]
    fn super_commutator_of_odd_letter_with_itself() {
        // [x,x] = 2 x^2 for odd x in the free algebra.
        let x = t(1, 2, 1);
        let lhs = super_commutator(&x, &x);
        assert_eq!(lhs, x.mul(&x).scale(&Rat::from_int(2)));
    }

    #[test]
    fn super_commutator_even_is_plain() {
        let a = t(1, 1, 1);
        let b = t(1, 2, 1);
        assert_eq!(super_commutator(&a, &b), a.mul(&b).sub(&b.mul(&a)));
    }

    #[test]
    fn anti_commutator_examples() {
        let p = t(1, 2, 1);
        assert_eq!(anti_commutator(&RPoly::one(), &p), p.scale(&Rat::from_int(2)));
        let h = t(1, 1, 1);
        assert_eq!(anti_commutator(&h, &h), h.mul(&h).scale(&Rat::from_int(2)));
    }

    #[test]
    fn encode_decode_round_trip() {
        let p = t(1, 2, 1)
            .mul(&t(1, 1, 2))
            .scale(&Rat::ratio(-3, 2))
            .add(&RPoly::letter(Letter::c(&ix(), 1)));
        let text = p.encode();
        assert_eq!(RPoly::decode(&ix(), &text), Some(p));
    }
}
