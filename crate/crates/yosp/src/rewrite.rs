//! The quotient-algebra rewrite engine.
//!
//! Three mutually recursive, memoized computations implement reduction to the
//! PBW normal form:
//!
//! * the commutator table `[t_ij^(r), t_kl^(s)]`, generated from the defining
//!   relations in multiplied-through polynomial form (no expansion convention
//!   for the rational kernels is ever chosen): with
//!   A = sign * (t_kj(u) t_il(v) - t_kj(v) t_il(u)) and B the two delta-gated
//!   sums, the identity (u-v)(u-v-kappa) [t_ij(u), t_kl(v)] = (u-v-kappa) A
//!   - (u-v) B is solved coefficientwise along anti-diagonals r+s = n:
//!   c_{r,s} = RHS_{r-2,s} + 2 c_{r-1,s+1} - c_{r-2,s+2}
//!             + kappa c_{r-1,s} - kappa c_{r-2,s+1};
//!
//! * elimination of dependent generators (row-column positions outside the
//!   retained set) through t_ab(u) = eps * c(u) * (T(u-kappa)^{-1})_{b'a'},
//!   expanding the matrix inverse as a Neumann series;
//!
//! * word normalization: replace dependent letters, sort adjacent letters by
//!   the canonical order picking up a commutator term, and contract repeated
//!   odd letters via xx = [x,x]/2.
//!
//! Termination is grounded by (total degree, dependent-letter count,
//! inversion count); confluence is inherited from the PBW property and is
//! exercised by the strategy-independence and Jacobi checks in the suites.

use crate::algebra::{parse_word, super_commutator, Letter, Poly, Word};
use crate::index::IndexData;
use crate::scalar::{binomial, Scalar};
use crate::series::kappa;
use dashmap::DashMap;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RewriteError {
    /// eliminate_forbidden called on a retained generator.
    LetterNotForbidden(Letter),
    /// A letter from a different ambient rank reached this engine.
    RankMismatch { expected: usize, found: usize },
    /// Cache file malformed or inconsistent.
    BadCache(String),
}

impl std::fmt::Display for RewriteError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RewriteError::LetterNotForbidden(l) => write!(f, "letter {l} is not forbidden"),
            RewriteError::RankMismatch { expected, found } => {
                write!(f, "letter of rank {found} used with engine of rank {expected}")
            }
            RewriteError::BadCache(msg) => write!(f, "bad cache: {msg}"),
        }
    }
}

impl std::error::Error for RewriteError {}

/// Rule selection order; normal forms must not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

type TableKey = (u8, u8, u8, u8, u8, u8);

/// Rewrite engine for a fixed rank. All memo maps are write-once per key with
/// idempotent values, so concurrent duplicate computation is harmless and the
/// engine can be shared freely across worker threads.
pub struct Engine<S: Scalar> {
    pub ix: IndexData,
    kappa: S,
    table: DashMap<TableKey, Arc<Poly<S>>>,
    elim: DashMap<Letter, Arc<Poly<S>>>,
    nf: DashMap<Word, Arc<Poly<S>>>,
    // (i, j, r) -> coefficient of u^{-r} in (T(u-kappa)^{-1})_{ij}; single
    // letters kept raw so elimination can fold its own leading letter.
    inv: DashMap<(u8, u8, u8), Arc<Poly<S>>>,
}

impl<S: Scalar> Engine<S> {
    pub fn new(m: usize) -> Self {
        let ix = IndexData::new(m);
        Engine {
            ix,
            kappa: kappa(&ix),
            table: DashMap::new(),
            elim: DashMap::new(),
            nf: DashMap::new(),
            inv: DashMap::new(),
        }
    }

    pub fn kappa(&self) -> &S {
        &self.kappa
    }

    fn check_rank(&self, l: &Letter) -> Result<(), RewriteError> {
        if l.m() != self.ix.m {
            return Err(RewriteError::RankMismatch {
                expected: self.ix.m,
                found: l.m(),
            });
        }
        Ok(())
    }

    // -- commutator table ---------------------------------------------------

    /// `[t_ij^(r), t_kl^(s)]` in normal form.
    pub fn commutator_table(
        &self,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        r: usize,
        s: usize,
    ) -> Arc<Poly<S>> {
        assert!(r >= 1 && s >= 1);
        let key = (i as u8, j as u8, k as u8, l as u8, r as u8, s as u8);
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        // fill the anti-diagonal triangle for this index quadruple
        for n in 2..=r + s {
            for rr in 1..n {
                let ss = n - rr;
                let cell = (i as u8, j as u8, k as u8, l as u8, rr as u8, ss as u8);
                if self.table.contains_key(&cell) {
                    continue;
                }
                let value = self.table_cell(i, j, k, l, rr, ss);
                debug_assert!(
                    value.max_degree() <= rr + ss - 1,
                    "degree bound violated at {cell:?}: {value:?}"
                );
                self.table.insert(cell, Arc::new(value));
            }
        }
        self.table.get(&key).expect("triangle filled").clone()
    }

    fn table_lookup(&self, i: usize, j: usize, k: usize, l: usize, r: i64, s: i64) -> Poly<S> {
        if r < 1 || s < 1 {
            return Poly::zero();
        }
        let key = (i as u8, j as u8, k as u8, l as u8, r as u8, s as u8);
        let arc = match self.table.get(&key) {
            Some(v) => v.clone(),
            None => self.commutator_table(i, j, k, l, r as usize, s as usize),
        };
        (*arc).clone()
    }

    fn table_cell(&self, i: usize, j: usize, k: usize, l: usize, r: usize, s: usize) -> Poly<S> {
        let x = r as i64 - 2;
        let y = s as i64;
        let mut rhs = self.defrel_rhs(i, j, k, l, x, y);
        let two = S::from_int(2);
        rhs.add_assign(&self.table_lookup(i, j, k, l, x + 1, y + 1).scale(&two));
        rhs.add_assign(&self.table_lookup(i, j, k, l, x, y + 2).neg());
        rhs.add_assign(&self.table_lookup(i, j, k, l, x + 1, y).scale(&self.kappa));
        rhs.add_assign(
            &self
                .table_lookup(i, j, k, l, x, y + 1)
                .scale(&self.kappa)
                .neg(),
        );
        self.normalize(&rhs)
    }

    /// Coefficient of u^{-x} v^{-y} in (u-v-kappa) A - (u-v) B.
    fn defrel_rhs(&self, i: usize, j: usize, k: usize, l: usize, x: i64, y: i64) -> Poly<S> {
        let mut out = Poly::zero();
        let a = |xx: i64, yy: i64| self.defrel_a(i, j, k, l, xx, yy);
        let b = |xx: i64, yy: i64| self.defrel_b(i, j, k, l, xx, yy);
        out.add_assign(&a(x + 1, y));
        out.add_assign(&a(x, y + 1).neg());
        out.add_assign(&a(x, y).scale(&self.kappa).neg());
        out.add_assign(&b(x + 1, y).neg());
        out.add_assign(&b(x, y + 1));
        out
    }

    /// Coefficient (x, y) of one factor pair t_ab(u) t_cd(v); `x` is the
    /// exponent on the first factor's variable when `first_is_u`.
    fn pair_coeff(
        &self,
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        x: i64,
        y: i64,
        first_is_u: bool,
    ) -> Poly<S> {
        let (p, q) = if first_is_u { (x, y) } else { (y, x) };
        if p < 0 || q < 0 {
            return Poly::zero();
        }
        let first: Option<Letter> = match p {
            0 => {
                if a == b {
                    None
                } else {
                    return Poly::zero();
                }
            }
            _ => Some(Letter::t(&self.ix, a, b, p as usize)),
        };
        let second: Option<Letter> = match q {
            0 => {
                if c == d {
                    None
                } else {
                    return Poly::zero();
                }
            }
            _ => Some(Letter::t(&self.ix, c, d, q as usize)),
        };
        let mut letters = Vec::new();
        if let Some(f) = first {
            letters.push(f);
        }
        if let Some(g) = second {
            letters.push(g);
        }
        Poly::term(Word(letters), S::one())
    }

    fn defrel_a(&self, i: usize, j: usize, k: usize, l: usize, x: i64, y: i64) -> Poly<S> {
        let ix = &self.ix;
        let exp = ix.bar(i) * ix.bar(j) + ix.bar(i) * ix.bar(k) + ix.bar(j) * ix.bar(k);
        let sign = if exp % 2 == 0 { S::one() } else { -S::one() };
        // t_kj(u) t_il(v) - t_kj(v) t_il(u)
        let mut p = self.pair_coeff(k, j, i, l, x, y, true);
        p.add_assign(&self.pair_coeff(k, j, i, l, x, y, false).neg());
        p.scale(&sign)
    }

    fn defrel_b(&self, i: usize, j: usize, k: usize, l: usize, x: i64, y: i64) -> Poly<S> {
        let ix = &self.ix;
        let mut out = Poly::zero();
        if k == ix.prime(i) {
            for p in 1..=ix.n {
                let exp =
                    ix.bar(i) + ix.bar(i) * ix.bar(j) + ix.bar(j) * ix.bar(p);
                let theta = ix.theta(i) * ix.theta(p);
                let mut c = S::from_int(theta);
                if exp % 2 == 1 {
                    c = -c;
                }
                out.add_assign(
                    &self
                        .pair_coeff(p, j, ix.prime(p), l, x, y, true)
                        .scale(&c),
                );
            }
        }
        if l == ix.prime(j) {
            for p in 1..=ix.n {
                let exp =
                    ix.bar(i) * ix.bar(k) + ix.bar(j) * ix.bar(k) + ix.bar(i) * ix.bar(p);
                let theta = ix.theta(ix.prime(j)) * ix.theta(ix.prime(p));
                let mut c = S::from_int(theta);
                if exp % 2 == 1 {
                    c = -c;
                }
                // t_{k p'}(v) t_{i p}(u): the first factor carries v
                out.add_assign(
                    &self
                        .pair_coeff(k, ix.prime(p), i, p, x, y, false)
                        .scale(&c)
                        .neg(),
                );
            }
        }
        out
    }

    // -- elimination of dependent letters ------------------------------------

    /// Coefficient of u^{-r} in (T(u - kappa))_{ij} minus its constant term,
    /// i.e. the Neumann kernel entry, as raw letters.
    fn shifted_entry_coeff(&self, i: usize, j: usize, r: usize) -> Poly<S> {
        let mut out = Poly::zero();
        let minus_kappa = -self.kappa.clone();
        for q in 1..=r {
            let coef = binomial::<S>(-(q as i64), (r - q) as u32) * minus_kappa.pow((r - q) as u32);
            out.add_term(
                Word::single(Letter::t(&self.ix, i, j, q)),
                coef,
            );
        }
        out
    }

    /// Coefficient of u^{-r} in (T(u-kappa)^{-1})_{ij}. Products of lower
    /// entries are normalized; bare letters stay raw so the caller can fold
    /// out a self-reference before normalizing.
    fn inv_entry(&self, i: usize, j: usize, r: usize) -> Arc<Poly<S>> {
        if r == 0 {
            return Arc::new(if i == j { Poly::one() } else { Poly::zero() });
        }
        let key = (i as u8, j as u8, r as u8);
        if let Some(v) = self.inv.get(&key) {
            return v.clone();
        }
        let mut raw = self.shifted_entry_coeff(i, j, r).neg();
        let mut products = Poly::zero();
        for p in 1..r {
            for k in 1..=self.ix.n {
                let m_ik = self.shifted_entry_coeff(i, k, p);
                if m_ik.is_zero() {
                    continue;
                }
                let inv_kj = self.inv_entry(k, j, r - p);
                products.add_assign(&m_ik.mul(&inv_kj).neg());
            }
        }
        raw.add_assign(&self.normalize(&products));
        let value = Arc::new(raw);
        self.inv.insert(key, value.clone());
        value
    }

    /// Expresses a dependent generator through retained letters and central
    /// letters, exactly.
    pub fn eliminate_forbidden(&self, letter: Letter) -> Result<Arc<Poly<S>>, RewriteError> {
        self.check_rank(&letter)?;
        if letter.is_allowed() || letter.is_c() {
            return Err(RewriteError::LetterNotForbidden(letter));
        }
        if let Some(v) = self.elim.get(&letter) {
            return Ok(v.clone());
        }
        let ix = &self.ix;
        let (a, b, r) = (letter.i(), letter.j(), letter.r());
        let (ap, bp) = (ix.prime(a), ix.prime(b));
        let exp = ix.bar(a) * ix.bar(b) + ix.bar(a);
        let theta = ix.theta(ap) * ix.theta(bp);
        let mut eps = S::from_int(theta);
        if exp % 2 == 1 {
            eps = -eps;
        }
        // c(u) * Inv_{b'a'}(u) at order r
        let mut acc = (*self.inv_entry(bp, ap, r)).clone();
        for q in 1..=r {
            let c_letter = Poly::letter(Letter::c(ix, q));
            acc.add_assign(&c_letter.mul(&self.inv_entry(bp, ap, r - q)));
        }
        acc = acc.scale(&eps);
        // fold out a self-reference (middle diagonal only)
        let self_word = Word::single(letter);
        let lambda = acc.coeff(&self_word);
        if !lambda.is_zero() {
            acc.add_term(self_word, -lambda.clone());
            acc = acc.scale(&(S::one() / (S::one() - lambda)));
        }
        let value = Arc::new(self.normalize(&acc));
        debug_assert!(value.max_degree() <= r);
        debug_assert!(value
            .terms()
            .all(|(w, _)| w.0.iter().all(|l| l.is_allowed())));
        self.elim.insert(letter, value.clone());
        Ok(value)
    }

    // -- normalization -------------------------------------------------------

    pub fn is_normal_word(&self, w: &Word) -> bool {
        for (pos, l) in w.0.iter().enumerate() {
            if !l.is_allowed() {
                return false;
            }
            if pos + 1 < w.0.len() {
                let next = &w.0[pos + 1];
                if l > next {
                    return false;
                }
                if l == next && l.parity() == 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Reduces to the canonical PBW normal form (leftmost-first rule
    /// selection, memoized per word).
    pub fn normalize(&self, p: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            if self.is_normal_word(w) {
                out.add_term(w.clone(), c.clone());
            } else {
                let nf = self.normalize_word(w);
                out.add_assign(&nf.scale(c));
            }
        }
        out
    }

    pub fn is_zero(&self, p: &Poly<S>) -> bool {
        self.normalize(p).is_zero()
    }

    fn normalize_word(&self, w: &Word) -> Arc<Poly<S>> {
        if let Some(v) = self.nf.get(w) {
            return v.clone();
        }
        let mut result = Poly::zero();
        let mut fringe: BTreeMap<Word, S> = BTreeMap::new();
        fringe.insert(w.clone(), S::one());
        while let Some((word, coef)) = fringe.pop_last() {
            if coef.is_zero() {
                continue;
            }
            if self.is_normal_word(&word) {
                result.add_term(word, coef);
                continue;
            }
            if word != *w {
                if let Some(v) = self.nf.get(&word) {
                    result.add_assign(&v.scale(&coef));
                    continue;
                }
            }
            let step = self.rewrite_step(&word, Strategy::LeftmostFirst);
            for (w2, c2) in step.terms() {
                let c = coef.clone() * c2.clone();
                if c.is_zero() {
                    continue;
                }
                match fringe.entry(w2.clone()) {
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
        }
        let value = Arc::new(result);
        self.nf.insert(w.clone(), value.clone());
        value
    }

    /// Normalization with an explicit strategy and a private memo; used to
    /// test that normal forms are independent of the rule selection order.
    pub fn normalize_with_strategy(&self, p: &Poly<S>, strategy: Strategy) -> Poly<S> {
        let mut pending = p.clone();
        let mut result = Poly::zero();
        loop {
            let mut next = Poly::zero();
            let mut progressed = false;
            for (w, c) in pending.terms() {
                if self.is_normal_word(w) {
                    result.add_term(w.clone(), c.clone());
                    continue;
                }
                progressed = true;
                let step = self.rewrite_step(w, strategy);
                next.add_assign(&step.scale(c));
            }
            if !progressed {
                return result;
            }
            pending = next;
        }
    }

    /// One rewrite step at the first violation in strategy order.
    fn rewrite_step(&self, w: &Word, strategy: Strategy) -> Poly<S> {
        let len = w.0.len();
        let positions: Vec<usize> = match strategy {
            Strategy::LeftmostFirst => (0..len).collect(),
            Strategy::RightmostFirst => (0..len).rev().collect(),
        };
        for p in positions {
            let l = w.0[p];
            if !l.is_allowed() {
                let replacement = self
                    .eliminate_forbidden(l)
                    .expect("letter checked forbidden");
                return self.splice(w, p, p + 1, &replacement);
            }
            let pair = match strategy {
                Strategy::LeftmostFirst => {
                    if p + 1 < len {
                        Some(p)
                    } else {
                        None
                    }
                }
                Strategy::RightmostFirst => {
                    if p > 0 {
                        Some(p - 1)
                    } else {
                        None
                    }
                }
            };
            if let Some(q) = pair {
                let (x, y) = (w.0[q], w.0[q + 1]);
                if !x.is_allowed() || !y.is_allowed() {
                    continue; // the dependent letter is handled on its own turn
                }
                if x > y {
                    let mut swapped = w.clone();
                    swapped.0.swap(q, q + 1);
                    let sign = if x.parity() & y.parity() == 1 {
                        -S::one()
                    } else {
                        S::one()
                    };
                    let mut out = Poly::term(swapped, sign);
                    let bracket = self.letter_bracket(&x, &y);
                    out.add_assign(&self.splice(w, q, q + 2, &bracket));
                    return out;
                }
                if x == y && x.parity() == 1 {
                    let bracket = self.letter_bracket(&x, &x).scale(&S::ratio(1, 2));
                    return self.splice(w, q, q + 2, &bracket);
                }
            }
        }
        unreachable!("rewrite_step called on a normal word");
    }

    /// `[x, y]` for letters, from the table; central letters commute.
    fn letter_bracket(&self, x: &Letter, y: &Letter) -> Poly<S> {
        if x.is_c() || y.is_c() {
            return Poly::zero();
        }
        (*self.commutator_table(x.i(), x.j(), y.i(), y.j(), x.r(), y.r())).clone()
    }

    /// prefix * replacement * suffix, replacing w[from..to].
    fn splice(&self, w: &Word, from: usize, to: usize, replacement: &Poly<S>) -> Poly<S> {
        let prefix = Word(w.0[..from].to_vec());
        let suffix = Word(w.0[to..].to_vec());
        let mut out = Poly::zero();
        for (mid, c) in replacement.terms() {
            out.add_term(prefix.concat(mid).concat(&suffix), c.clone());
        }
        out
    }

    // -- PBW bookkeeping ------------------------------------------------------

    /// All normal words of filtration degree exactly `d`, in canonical order.
    pub fn enumerate_normal_words(&self, d: usize) -> Vec<Word> {
        let mut letters: Vec<Letter> = Vec::new();
        for r in 1..=d.max(1) {
            if r > d {
                break;
            }
            letters.push(Letter::c(&self.ix, r));
            for (i, j) in self.ix.allowed_pairs() {
                letters.push(Letter::t(&self.ix, i, j, r));
            }
        }
        letters.sort();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            letters: &[Letter],
            start: usize,
            remaining: usize,
            current: &mut Vec<Letter>,
            out: &mut Vec<Word>,
        ) {
            if remaining == 0 {
                out.push(Word(current.clone()));
                return;
            }
            for idx in start..letters.len() {
                let l = letters[idx];
                if l.degree() > remaining {
                    continue;
                }
                current.push(l);
                let next_start = if l.parity() == 1 { idx + 1 } else { idx };
                rec(letters, next_start, remaining - l.degree(), current, out);
                current.pop();
            }
        }
        rec(&letters, 0, d, &mut current, &mut out);
        out.sort_by(|a, b| a.cmp(b));
        out
    }

    /// Coefficient of q^d in prod_{r>=1} (1+q^r)^{2m} (1-q^r)^{-(2m^2+m+1)}.
    pub fn pbw_series_count(&self, d: usize) -> i128 {
        let m = self.ix.m;
        let odd = 2 * m;
        let even = 2 * m * m + m + 1;
        let mut poly: Vec<i128> = vec![0; d + 1];
        poly[0] = 1;
        let mul_into = |poly: &mut Vec<i128>, factor: &[i128]| {
            let mut out = vec![0i128; d + 1];
            for (a, &ca) in poly.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for (b, &cb) in factor.iter().enumerate() {
                    if a + b <= d && cb != 0 {
                        out[a + b] += ca * cb;
                    }
                }
            }
            *poly = out;
        };
        for r in 1..=d.max(1) {
            if r > d {
                break;
            }
            let mut plus = vec![0i128; d + 1];
            plus[0] = 1;
            plus[r] = 1;
            for _ in 0..odd {
                mul_into(&mut poly, &plus);
            }
            let mut geom = vec![0i128; d + 1];
            let mut k = 0;
            while k * r <= d {
                geom[k * r] = 1;
                k += 1;
            }
            for _ in 0..even {
                mul_into(&mut poly, &geom);
            }
        }
        poly[d]
    }

    // -- cache ---------------------------------------------------------------

    /// Writes every memoized table entry, one per line, sorted by key.
    pub fn save_cache<W: Write>(&self, mut out: W) -> std::io::Result<usize> {
        writeln!(out, "yosp-table-cache v1")?;
        let mut keys: Vec<TableKey> = self.table.iter().map(|e| *e.key()).collect();
        keys.sort();
        for key in &keys {
            let (i, j, k, l, r, s) = *key;
            let value = self.table.get(key).expect("key listed");
            writeln!(
                out,
                "{};{},{},{},{};{},{};{}",
                self.ix.m,
                i,
                j,
                k,
                l,
                r,
                s,
                value.encode()
            )?;
        }
        Ok(keys.len())
    }

    /// Loads entries previously written by `save_cache`; entries for other
    /// ranks are ignored.
    pub fn load_cache<R: BufRead>(&self, reader: R) -> Result<usize, RewriteError> {
        let mut lines = reader.lines();
        match lines.next() {
            Some(Ok(header)) if header == "yosp-table-cache v1" => {}
            _ => return Err(RewriteError::BadCache("missing version header".into())),
        }
        let mut loaded = 0;
        for line in lines {
            let line = line.map_err(|e| RewriteError::BadCache(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.splitn(4, ';').collect();
            if parts.len() != 4 {
                return Err(RewriteError::BadCache(format!("bad line: {line}")));
            }
            let m: usize = parts[0]
                .parse()
                .map_err(|_| RewriteError::BadCache("bad rank".into()))?;
            if m != self.ix.m {
                continue;
            }
            let ijkl: Vec<u8> = parts[1]
                .split(',')
                .map(|t| t.parse().unwrap_or(0))
                .collect();
            let rs: Vec<u8> = parts[2]
                .split(',')
                .map(|t| t.parse().unwrap_or(0))
                .collect();
            if ijkl.len() != 4 || rs.len() != 2 {
                return Err(RewriteError::BadCache(format!("bad key: {line}")));
            }
            let poly = Poly::decode(&self.ix, parts[3])
                .ok_or_else(|| RewriteError::BadCache(format!("bad poly: {line}")))?;
            self.table.insert(
                (ijkl[0], ijkl[1], ijkl[2], ijkl[3], rs[0], rs[1]),
                Arc::new(poly),
            );
            loaded += 1;
        }
        Ok(loaded)
    }

    /// Forces generation of all table entries with r + s <= max_super.
    pub fn fill_table(&self, max_super: usize) -> usize {
        let n = self.ix.n;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        for r in 1..max_super {
                            let s = max_super - r;
                            self.commutator_table(i, j, k, l, r, s);
                        }
                    }
                }
            }
        }
        self.table.len()
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    /// Iterates memoized table entries (key, value) sorted by key.
    pub fn table_entries(&self) -> Vec<(TableKey, Arc<Poly<S>>)> {
        let mut out: Vec<(TableKey, Arc<Poly<S>>)> = self
            .table
            .iter()
            .map(|e| (*e.key(), e.value().clone()))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Parses a word in canonical text form against this engine's rank.
    pub fn parse_word(&self, text: &str) -> Option<Word> {
        parse_word(&self.ix, text)
    }

    /// Quotient-algebra super-commutator: normalize([a, b]).
    pub fn bracket_nf(&self, a: &Poly<S>, b: &Poly<S>) -> Poly<S> {
        self.normalize(&super_commutator(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{REngine, Rat, RPoly};

    fn engine() -> REngine {
        Engine::new(1)
    }

    fn lt(e: &REngine, i: usize, j: usize, r: usize) -> Letter {
        Letter::t(&e.ix, i, j, r)
    }

    fn pt(e: &REngine, i: usize, j: usize, r: usize) -> RPoly {
        Poly::letter(lt(e, i, j, r))
    }

    #[test]
    fn table_base_cases() {
        let e = engine();
        // [t_11^(1), t_12^(1)] = -t_12^(1): expanding the multiplied-through
        // identity by hand, only the coefficient of u^1 v^{-1} on the right
        // contributes -t_12^(1).
        let got = e.commutator_table(1, 1, 1, 2, 1, 1);
        assert_eq!(*got, pt(&e, 1, 2, 1).neg());
        // [t_12^(1), t_11^(s)] = t_12^(s)
        for s in 1..=3 {
            let got = e.commutator_table(1, 2, 1, 1, 1, s);
            assert_eq!(*got, pt(&e, 1, 2, s));
        }
        // diagonal self-commutators vanish identically
        for r in 1..=3 {
            for s in 1..=3 {
                assert!(e.commutator_table(1, 1, 1, 1, r, s).is_zero());
            }
        }
    }

    #[test]
    fn table_base_cases_rank_two() {
        let e: REngine = Engine::new(2);
        for s in 1..=2 {
            assert_eq!(*e.commutator_table(1, 2, 1, 1, 1, s), pt(&e, 1, 2, s));
        }
    }

    #[test]
    fn table_degree_bound_and_antisymmetry() {
        let e = engine();
        for (i, j, k, l) in [(1, 2, 2, 1), (1, 1, 1, 3), (2, 1, 1, 2), (1, 3, 3, 1)] {
            for r in 1..=2 {
                for s in 1..=2 {
                    let fwd = e.commutator_table(i, j, k, l, r, s);
                    assert!(fwd.max_degree() <= r + s - 1);
                    let bwd = e.commutator_table(k, l, i, j, s, r);
                    let p = e.ix.parity(i, j) & e.ix.parity(k, l);
                    let expect = if p == 1 { (*bwd).clone() } else { bwd.neg() };
                    assert_eq!(*fwd, expect, "antisymmetry at {:?}", (i, j, k, l, r, s));
                }
            }
        }
    }

    #[test]
    fn elimination_examples() {
        let e = engine();
        // t_22^(1) = c^(1)/2
        let t22 = e.eliminate_forbidden(lt(&e, 2, 2, 1)).unwrap();
        let c1 = RPoly::letter(Letter::c(&e.ix, 1));
        assert_eq!(*t22, c1.scale(&Rat::ratio(1, 2)));
        // t_33^(1) = c^(1) - t_11^(1)
        let t33 = e.eliminate_forbidden(lt(&e, 3, 3, 1)).unwrap();
        assert_eq!(*t33, c1.sub(&pt(&e, 1, 1, 1)));
        // output degree matches the superscript
        for r in 1..=3 {
            let v = e.eliminate_forbidden(lt(&e, 3, 2, r)).unwrap();
            assert!(v.max_degree() <= r);
            assert!(v.terms().any(|(w, _)| w.degree() == r));
        }
        // retained letters are rejected
        assert!(matches!(
            e.eliminate_forbidden(lt(&e, 1, 2, 1)),
            Err(RewriteError::LetterNotForbidden(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let e = engine();
        // already normal
        let w = pt(&e, 1, 1, 1).mul(&pt(&e, 1, 2, 1));
        assert_eq!(e.normalize(&w), w);
        // swap picks up the table term: t_12 t_11 -> t_11 t_12 + t_12
        let p = pt(&e, 1, 2, 1).mul(&pt(&e, 1, 1, 1));
        let expect = w.add(&pt(&e, 1, 2, 1));
        assert_eq!(e.normalize(&p), expect);
        // difference of equal elements
        let q = pt(&e, 2, 1, 2).mul(&pt(&e, 1, 3, 1));
        assert!(e.is_zero(&q.sub(&q)));
        assert!(!e.is_zero(&pt(&e, 1, 2, 1)));
    }

    #[test]
    fn odd_square_contracts() {
        let e = engine();
        let x = pt(&e, 1, 2, 1);
        let sq = e.normalize(&x.mul(&x));
        let half_bracket = e.commutator_table(1, 2, 1, 2, 1, 1).scale(&Rat::ratio(1, 2));
        assert_eq!(sq, e.normalize(&half_bracket));
    }

    #[test]
    fn central_letters_commute() {
        let e = engine();
        let c2 = RPoly::letter(Letter::c(&e.ix, 2));
        for (i, j) in e.ix.allowed_pairs() {
            let t = pt(&e, i, j, 1);
            assert!(e.is_zero(&super_commutator(&c2, &t)));
        }
    }

    #[test]
    fn normal_word_counts() {
        let e = engine();
        assert_eq!(e.enumerate_normal_words(1).len(), 6);
        assert_eq!(e.enumerate_normal_words(2).len(), 25);
        assert_eq!(e.pbw_series_count(0), 1);
        assert_eq!(e.pbw_series_count(1), 6);
        assert_eq!(e.pbw_series_count(2), 25);
        for d in 1..=3 {
            assert_eq!(
                e.enumerate_normal_words(d).len() as i128,
                e.pbw_series_count(d),
                "degree {d}"
            );
        }
        let e2: REngine = Engine::new(2);
        assert_eq!(e2.enumerate_normal_words(1).len(), 15);
        assert_eq!(e2.pbw_series_count(1), 15);
    }

    #[test]
    fn strategy_independence_sample() {
        let e = engine();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(3);
        let letters: Vec<Letter> = {
            let mut v = vec![Letter::c(&e.ix, 1)];
            for r in 1..=2 {
                for (i, j) in e.ix.allowed_pairs() {
                    v.push(Letter::t(&e.ix, i, j, r));
                }
            }
            // include a dependent letter to exercise elimination
            v.push(Letter::t(&e.ix, 2, 2, 1));
            v
        };
        for _ in 0..20 {
            let mut p = RPoly::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let len = rng.gen_range(1..=3);
                let mut w = Vec::new();
                let mut deg = 0;
                for _ in 0..len {
                    let l = letters[rng.gen_range(0..letters.len())];
                    if deg + l.degree() > 4 {
                        break;
                    }
                    deg += l.degree();
                    w.push(l);
                }
                p.add_term(Word(w), Rat::from_int(rng.gen_range(-3..=3)));
            }
            let left = e.normalize(&p);
            let right = e.normalize_with_strategy(&p, Strategy::RightmostFirst);
            assert_eq!(left, right);
        }
    }

    #[test]
    fn quotient_jacobi_sample() {
        let e = engine();
        let triples = [
            ((1, 2, 1), (2, 1, 1), (1, 1, 1)),
            ((1, 1, 1), (1, 3, 1), (3, 1, 1)),
            ((1, 2, 1), (1, 2, 2), (2, 1, 1)),
        ];
        for ((ai, aj, ar), (bi, bj, br), (ci, cj, cr)) in triples {
            let a = pt(&e, ai, aj, ar);
            let b = pt(&e, bi, bj, br);
            let c = pt(&e, ci, cj, cr);
            let bc = e.bracket_nf(&b, &c);
            let ab = e.bracket_nf(&a, &b);
            let ac = e.bracket_nf(&a, &c);
            let mut res = e.bracket_nf(&a, &bc);
            res.add_assign(&e.bracket_nf(&ab, &c).neg());
            let pa = a.homogeneous_parity().unwrap();
            let pb = b.homogeneous_parity().unwrap();
            let sign = if pa & pb == 1 { Rat::from_int(-1) } else { Rat::from_int(1) };
            res.add_assign(&e.bracket_nf(&b, &ac).scale(&sign).neg());
            assert!(e.is_zero(&res), "jacobi failed at {:?}", ((ai, aj, ar), (bi, bj, br), (ci, cj, cr)));
        }
    }

    #[test]
    fn cache_round_trip_bit_identical() {
        let e = engine();
        e.fill_table(3);
        let mut buf1 = Vec::new();
        e.save_cache(&mut buf1).unwrap();
        let e2 = engine();
        e2.load_cache(std::io::BufReader::new(buf1.as_slice())).unwrap();
        let mut buf2 = Vec::new();
        e2.save_cache(&mut buf2).unwrap();
        assert_eq!(buf1, buf2);
        // warm table agrees with cold recomputation
        let cold = engine();
        for (key, value) in e.table_entries().into_iter().take(20) {
            let (i, j, k, l, r, s) = key;
            let fresh = cold.commutator_table(
                i as usize, j as usize, k as usize, l as usize, r as usize, s as usize,
            );
            assert_eq!(*fresh, *value);
        }
    }
}
