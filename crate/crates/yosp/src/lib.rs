//! Exact symbolic engine and verification suites for the extended Yangian of
//! type osp(1|2m) in its RTT presentation, its Gauss decomposition, and the
//! Drinfeld-type presentations phrased in the Gaussian generators.
//!
//! Everything is computed over exact rationals in the free superalgebra on
//! the generator letters, reduced to a PBW normal form by a fixed rewrite
//! system; every verified statement is an exact zero-residue check.

pub mod algebra;
pub mod cli;
pub mod gauss;
pub mod index;
pub mod morphisms;
pub mod rewrite;
pub mod scalar;
pub mod series;
pub mod suites;

/// The exact scalar type used by the engine and the suites.
pub type Rat = num_rational::BigRational;

/// Free-superalgebra element over the exact scalars.
pub type RPoly = algebra::Poly<Rat>;

/// Univariate truncated series over the exact scalars.
pub type RUSeries = series::USeries<Rat>;

/// Bivariate truncated series over the exact scalars.
pub type RBiSeries = series::BiSeries<Rat>;

/// Series matrix over the exact scalars.
pub type RSeriesMatrix = series::SeriesMatrix<Rat>;

/// Rewrite engine over the exact scalars.
pub type REngine = rewrite::Engine<Rat>;
