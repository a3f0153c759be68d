//! Coefficient scalars.
//!
//! Everything downstream zero-tests exact residues, so the scalar must be an
//! exact field of characteristic zero. The algebra and series layers are
//! generic over [`Scalar`]; the crate root exports the arbitrary-precision
//! rational instantiation used by the engine and the suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Div, Neg, Sub};

/// An exact field with enough structure for the rewrite engine: ring ops,
/// division, small-integer ratios (structure constants are half-integers and
/// thirds), and a canonical `p/q` text form for caches and reports.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Exact `n/d`. Panics on `d == 0`.
    fn ratio(n: i64, d: i64) -> Self;

    /// Canonical text form `p/q` with `q >= 1` and `gcd(|p|, q) = 1`.
    fn encode(&self) -> String;

    fn decode(text: &str) -> Option<Self>;

    /// Integer power with exact arithmetic; `pow(0) = 1`.
    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn encode(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn decode(text: &str) -> Option<Self> {
        let (n, d) = text.split_once('/')?;
        let numer: BigInt = n.parse().ok()?;
        let denom: BigInt = d.parse().ok()?;
        if denom.is_zero() || denom.is_negative() {
            return None;
        }
        Some(BigRational::new(numer, denom))
    }
}

/// Exact binomial coefficient `C(n, k)` for signed `n`, as in the expansion
/// `(u+c)^{-k} = sum_t C(-k, t) c^t u^{-k-t}`.
pub fn binomial<S: Scalar>(n: i64, k: u32) -> S {
    let mut acc = S::one();
    for t in 0..k {
        acc = acc * S::from_int(n - t as i64);
    }
    let mut fact = S::one();
    for t in 1..=k {
        fact = fact * S::from_int(t as i64);
    }
    acc / fact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn ratio_is_reduced() {
        let x: Rat = Scalar::ratio(2, 4);
        assert_eq!(x.encode(), "1/2");
        let y: Rat = Scalar::ratio(3, -6);
        assert_eq!(y.encode(), "-1/2");
    }

    #[test]
    fn encode_decode_round_trip() {
        for (n, d) in [(0, 1), (7, 3), (-22, 8), (5, 1)] {
            let x: Rat = Scalar::ratio(n, d);
            assert_eq!(Rat::decode(&x.encode()), Some(x));
        }
        assert_eq!(Rat::decode("1/0"), None);
        assert_eq!(Rat::decode("x"), None);
    }

    #[test]
    fn negative_binomials() {
        // (u+c)^{-1} = u^{-1} - c u^{-2} + c^2 u^{-3} - ...
        assert_eq!(binomial::<Rat>(-1, 0), Scalar::from_int(1));
        assert_eq!(binomial::<Rat>(-1, 1), Scalar::from_int(-1));
        assert_eq!(binomial::<Rat>(-1, 2), Scalar::from_int(1));
        assert_eq!(binomial::<Rat>(-2, 3), Scalar::from_int(-4));
        assert_eq!(binomial::<Rat>(4, 2), Scalar::from_int(6));
    }
}
