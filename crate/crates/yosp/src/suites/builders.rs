//! Shared residual-construction helpers. Every relation is rendered as
//! LHS - RHS built from series primitives only; the runner normalizes the
//! residual coefficientwise and counts surviving terms.

use crate::algebra::{super_commutator, Poly};
use crate::morphisms::{tensor_normalize, TensorPoly};
use crate::rewrite::Engine;
use crate::scalar::Scalar;
use crate::series::{diff_quotient, BiSeries, USeries};
use crate::{RBiSeries, RPoly, RUSeries, Rat};

/// What a check evaluates to; zero everywhere means pass.
pub enum Residual {
    Bi(RBiSeries),
    /// Several bivariate residuals under one check id.
    BiMany(Vec<RBiSeries>),
    Uni(RUSeries),
    UniMany(Vec<RUSeries>),
    Elem(RPoly),
    ElemMany(Vec<RPoly>),
    Tensor(Vec<TensorPoly<Rat>>),
    /// Exact integer comparison (counts, ranks).
    Counts(Vec<(i128, i128)>),
    /// Outcome of a meta-check; the payload is the number of violations.
    Violations(usize),
}

impl Residual {
    pub fn count_terms(&self, engine: &Engine<Rat>) -> usize {
        match self {
            Residual::Bi(b) => bi_terms(engine, b),
            Residual::BiMany(list) => list.iter().map(|b| bi_terms(engine, b)).sum(),
            Residual::Uni(s) => uni_terms(engine, s),
            Residual::UniMany(list) => list.iter().map(|s| uni_terms(engine, s)).sum(),
            Residual::Elem(p) => engine.normalize(p).num_terms(),
            Residual::ElemMany(list) => {
                list.iter().map(|p| engine.normalize(p).num_terms()).sum()
            }
            Residual::Tensor(list) => list
                .iter()
                .map(|t| tensor_normalize(engine, t).num_terms())
                .sum(),
            Residual::Counts(pairs) => pairs
                .iter()
                .map(|(a, b)| (a - b).unsigned_abs() as usize)
                .sum(),
            Residual::Violations(n) => *n,
        }
    }
}

fn bi_terms(engine: &Engine<Rat>, b: &RBiSeries) -> usize {
    b.valid_cells()
        .iter()
        .map(|(_, _, p)| engine.normalize(p).num_terms())
        .sum()
}

fn uni_terms(engine: &Engine<Rat>, s: &RUSeries) -> usize {
    (0..=s.order())
        .map(|r| engine.normalize(s.coeff(r)).num_terms())
        .sum()
}

// -- bivariate shorthand -----------------------------------------------------

pub fn bu(g: &RUSeries, d: usize) -> RBiSeries {
    BiSeries::from_u(g, d)
}

pub fn bv(g: &RUSeries, d: usize) -> RBiSeries {
    BiSeries::from_v(g, d)
}

/// (g(u+cu) - g(v+cv)) / ((u+cu) - (v+cv)).
pub fn dq(g: &RUSeries, cu: Rat, cv: Rat, d: usize) -> RBiSeries {
    diff_quotient(g, &cu, &cv, d)
}

pub fn dq0(g: &RUSeries, d: usize) -> RBiSeries {
    dq(g, Rat::from_int(0), Rat::from_int(0), d)
}

/// [a(u), b(v)] as a bivariate value.
pub fn com(a: &RBiSeries, b: &RBiSeries) -> RBiSeries {
    a.super_commutator(b).expect("window")
}

pub fn acom(a: &RBiSeries, b: &RBiSeries) -> RBiSeries {
    a.anti_commutator(b).expect("window")
}

pub fn bmul(a: &RBiSeries, b: &RBiSeries) -> RBiSeries {
    a.mul(b).expect("window")
}

/// Coefficientwise super-commutator of a fixed algebra element with a
/// bivariate value.
pub fn bi_com_poly_left(p: &RPoly, b: &RBiSeries) -> RBiSeries {
    b.map_coeffs(|cell| super_commutator(p, cell))
}

// -- univariate shorthand -----------------------------------------------------

/// [a(u), b(u)] in a single variable.
pub fn ucom(a: &RUSeries, b: &RUSeries) -> RUSeries {
    let d = a.order().min(b.order());
    let mut out = USeries::zero(d);
    for r in 0..=d {
        let mut acc = Poly::zero();
        for p in 0..=r {
            acc.add_assign(&super_commutator(a.coeff(p), b.coeff(r - p)));
        }
        out.set_coeff(r, acc);
    }
    out
}

/// [p, s(u)] coefficientwise.
pub fn ucom_poly_left(p: &RPoly, s: &RUSeries) -> RUSeries {
    s.map_coeffs(|a| super_commutator(p, a))
}

/// [s(u), p] coefficientwise.
pub fn ucom_poly_right(s: &RUSeries, p: &RPoly) -> RUSeries {
    s.map_coeffs(|a| super_commutator(a, p))
}
