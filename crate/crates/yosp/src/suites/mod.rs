//! The verification catalog: every relation and identity of the presentations
//! rendered as an exact zero-residue check over a shared context (rewrite
//! engine, Gauss data, normalized generator series), plus PBW counting,
//! morphism, embedding, and engine-sanity suites and deliberately broken
//! negative controls.

mod builders;
mod copr;
mod emb;
mod gauss_core;
pub mod pbw;
mod rank_general;
mod rank_one;
mod sanity;

use crate::gauss::{gauss_decompose, GaussData};
use crate::rewrite::Engine;
use crate::series::{SeriesMatrix, USeries};
use crate::{REngine, RSeriesMatrix, RUSeries, Rat};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

pub use builders::Residual;

/// Root-system data: inner products on the weight basis, simple roots, and
/// the Cartan matrix with its doubled last row.
#[derive(Debug, Clone, Copy)]
pub struct RootData {
    pub m: usize,
}

impl RootData {
    pub fn new(m: usize) -> Self {
        RootData { m }
    }

    /// (eps_i, eps_j) = -delta_ij on indices 1..=m; eps_{m+1} := 0.
    pub fn eps_dot(&self, i: usize, j: usize) -> i64 {
        if i == j && i <= self.m {
            -1
        } else {
            0
        }
    }

    /// (eps_i, alpha_j) for the simple root alpha_j = eps_j - eps_{j+1}.
    pub fn eps_alpha(&self, i: usize, j: usize) -> i64 {
        self.eps_dot(i, j) - self.eps_dot(i, j + 1)
    }

    /// (alpha_i, alpha_j).
    pub fn alpha_alpha(&self, i: usize, j: usize) -> i64 {
        self.eps_alpha(i, j) - self.eps_alpha(i + 1, j)
    }

    /// Cartan matrix entry: (alpha_i, alpha_j), doubled on the last row.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let base = self.alpha_alpha(i, j);
        if i == self.m {
            2 * base
        } else {
            base
        }
    }

    /// Nesting order of the symmetrized higher relation for a pair of
    /// distinct simple roots: 1 + c_ij.
    pub fn serre_order(&self, i: usize, j: usize) -> usize {
        assert!(i != j);
        let k = 1 + self.cartan(i, j);
        assert!(k >= 1);
        k as usize
    }
}

/// Shared immutable state for one verification run. Generator series are
/// pre-reduced once; every relation residual is then built from compact
/// normal-form coefficients.
pub struct Context {
    pub m: usize,
    pub d: usize,
    pub seed: u64,
    pub engine: Arc<REngine>,
    pub t: RSeriesMatrix,
    pub raw: GaussData<Rat>,
    /// Normalized diagonal series, 1-based.
    pub h: Vec<RUSeries>,
    /// Normalized e_ij(u), i < j.
    pub e: BTreeMap<(usize, usize), RUSeries>,
    /// Normalized f_ji(u), keyed (j, i) with i < j.
    pub f: BTreeMap<(usize, usize), RUSeries>,
    /// Normalized k_i(u) = h_i^{-1} h_{i+1}, 1-based up to m.
    pub k: Vec<RUSeries>,
    /// The primitive central-letter series 1 + sum c^(r) u^{-r}.
    pub c: RUSeries,
    pub roots: RootData,
}

impl Context {
    pub fn build(m: usize, d: usize, seed: u64) -> Self {
        let engine = Arc::new(REngine::new(m));
        let ix = engine.ix;
        let t = SeriesMatrix::t_matrix(&ix, d);
        let raw = gauss_decompose(&t, &ix).expect("generator matrix has unit diagonal");
        let nf = |s: &RUSeries| s.map_coeffs(|p| engine.normalize(p));
        let mut h = vec![USeries::zero(d)];
        for i in 1..=ix.n {
            h.push(nf(raw.h(i)));
        }
        let mut e = BTreeMap::new();
        let mut f = BTreeMap::new();
        for i in 1..=ix.n {
            for j in i + 1..=ix.n {
                e.insert((i, j), nf(raw.e_entry(i, j)));
                f.insert((j, i), nf(raw.f_entry(j, i)));
            }
        }
        let mut k = vec![USeries::zero(d)];
        for i in 1..=m {
            let inv = h[i].invert().expect("unit constant term");
            k.push(nf(&inv.mul(&h[i + 1])));
        }
        let c = USeries::c_letters(&ix, d);
        Context {
            m,
            d,
            seed,
            engine,
            t,
            raw,
            h,
            e,
            f,
            k,
            c,
            roots: RootData::new(m),
        }
    }

    pub fn e_simple(&self, i: usize) -> &RUSeries {
        &self.e[&(i, i + 1)]
    }

    pub fn f_simple(&self, i: usize) -> &RUSeries {
        &self.f[&(i + 1, i)]
    }

    pub fn e_corner(&self) -> &RUSeries {
        &self.e[&(self.m, self.engine.ix.prime(self.m))]
    }

    pub fn f_corner(&self) -> &RUSeries {
        &self.f[&(self.engine.ix.prime(self.m), self.m)]
    }

    fn xi_shift(&self, i: usize) -> Rat {
        use crate::scalar::Scalar;
        Rat::ratio(-((self.m - i) as i64), 2)
    }

    pub fn kappa_i(&self, i: usize) -> RUSeries {
        self.k[i].shift(&self.xi_shift(i))
    }

    pub fn xi_plus(&self, i: usize) -> RUSeries {
        self.f_simple(i).shift(&self.xi_shift(i))
    }

    pub fn xi_minus(&self, i: usize) -> RUSeries {
        self.e_simple(i).shift(&self.xi_shift(i)).neg()
    }

    pub fn xi_plus_corner(&self) -> RUSeries {
        self.f_corner().clone()
    }

    pub fn xi_minus_corner(&self) -> RUSeries {
        self.e_corner().neg()
    }
}

// ---------------------------------------------------------------------------
// Checks, reports, runner
// ---------------------------------------------------------------------------

pub struct Check {
    pub id: String,
    pub indices: Vec<i64>,
    pub run: Box<dyn Fn(&Context) -> Residual + Send + Sync>,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        indices: Vec<i64>,
        run: impl Fn(&Context) -> Residual + Send + Sync + 'static,
    ) -> Self {
        Check {
            id: id.into(),
            indices,
            run: Box::new(run),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub indices: Vec<i64>,
    pub status: Status,
    pub residual_terms: usize,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub m: usize,
    pub order: usize,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn strip_timings(&mut self) {
        for c in &mut self.checks {
            c.millis = 0;
        }
        self.totals.millis = 0;
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (m={}, order={})\n",
            self.suite, self.m, self.order
        ));
        for c in &self.checks {
            let idx = if c.indices.is_empty() {
                String::new()
            } else {
                format!(
                    " [{}]",
                    c.indices
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            out.push_str(&format!(
                "  {} {}{} residual_terms={} ({} ms)\n",
                match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                },
                c.id,
                idx,
                c.residual_terms,
                c.millis
            ));
        }
        out.push_str(&format!(
            "  totals: {} checks, {} passed, {} failed ({} ms)\n",
            self.totals.checks, self.totals.passed, self.totals.failed, self.totals.millis
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    UnknownSuite(String),
    NotApplicable { suite: String, m: usize },
}

impl std::fmt::Display for SuiteError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SuiteError::UnknownSuite(s) => {
                write!(f, "unknown suite '{s}'; valid ids: {}", SUITE_IDS.join(", "))
            }
            SuiteError::NotApplicable { suite, m } => {
                write!(f, "suite '{suite}' is not applicable at m = {m}")
            }
        }
    }
}

impl std::error::Error for SuiteError {}

pub const SUITE_IDS: &[&str] = &[
    "thm-odp",
    "cor-odpy",
    "cor-serre",
    "lem-sigauss",
    "prop-copr",
    "ospl4",
    "thm-dp",
    "cor-modpy",
    "gauss-core",
    "derived-ladders",
    "rtt-sanity",
    "emb-osp",
    "pbw",
    "morphisms",
    "negative-control",
];

/// Whether a suite has content at the given rank.
pub fn applicable(suite: &str, m: usize) -> bool {
    match suite {
        "thm-odp" | "cor-odpy" | "cor-serre" | "lem-sigauss" | "prop-copr" | "morphisms"
        | "negative-control" => m == 1,
        "ospl4" | "cor-modpy" | "derived-ladders" => m == 2,
        "thm-dp" => m == 2 || m == 3,
        "gauss-core" | "rtt-sanity" => m <= 3,
        "emb-osp" | "pbw" => m <= 2,
        _ => false,
    }
}

fn checks_for(suite: &str, ctx: &Context) -> Vec<Check> {
    match suite {
        "thm-odp" => rank_one::thm_odp_checks(ctx),
        "cor-odpy" => rank_one::cor_odpy_checks(ctx),
        "cor-serre" => rank_one::cor_serre_checks(ctx),
        "lem-sigauss" => rank_one::lem_sigauss_checks(ctx),
        "prop-copr" => copr::checks(ctx),
        "ospl4" => rank_general::ospl4_checks(ctx),
        "thm-dp" => rank_general::thm_dp_checks(ctx),
        "cor-modpy" => rank_general::cor_modpy_checks(ctx),
        "gauss-core" => gauss_core::checks(ctx),
        "derived-ladders" => rank_general::derived_ladder_checks(ctx),
        "rtt-sanity" => sanity::rtt_sanity_checks(ctx),
        "emb-osp" => emb::checks(ctx),
        "pbw" => pbw::checks(ctx),
        "morphisms" => sanity::morphism_checks(ctx),
        "negative-control" => sanity::negative_control_checks(ctx),
        _ => Vec::new(),
    }
}

fn run_checks(ctx: &Context, checks: Vec<Check>, jobs: usize) -> Vec<CheckResult> {
    let run_one = |check: &Check| {
        let start = Instant::now();
        let residual = (check.run)(ctx);
        let residual_terms = residual.count_terms(&ctx.engine);
        CheckResult {
            id: check.id.clone(),
            indices: check.indices.clone(),
            status: if residual_terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms,
            millis: start.elapsed().as_millis() as u64,
        }
    };
    if jobs <= 1 {
        checks.iter().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .stack_size(64 << 20)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            checks.par_iter().map(run_one).collect()
        })
    }
}

/// Resolves a suite id (or `all`) against the rank; errors on unknown ids
/// and inapplicable ranks.
pub fn resolve_suites(suite: &str, m: usize) -> Result<Vec<&'static str>, SuiteError> {
    if suite == "all" {
        return Ok(SUITE_IDS
            .iter()
            .copied()
            .filter(|s| applicable(s, m) && *s != "negative-control")
            .collect());
    }
    let Some(id) = SUITE_IDS.iter().copied().find(|s| *s == suite) else {
        return Err(SuiteError::UnknownSuite(suite.to_string()));
    };
    if !applicable(id, m) {
        return Err(SuiteError::NotApplicable {
            suite: suite.to_string(),
            m,
        });
    }
    Ok(vec![id])
}

/// Runs one suite (or `all`) in a pre-built context.
pub fn run_suite_in(ctx: &Context, suite: &str, jobs: usize) -> Result<Report, SuiteError> {
    let suites = resolve_suites(suite, ctx.m)?;
    let start = Instant::now();
    let mut all_checks = Vec::new();
    for s in &suites {
        let mut checks = checks_for(s, ctx);
        if suite == "all" {
            for c in &mut checks {
                c.id = format!("{s}/{}", c.id);
            }
        }
        all_checks.extend(checks);
    }
    let results = run_checks(ctx, all_checks, jobs);
    let passed = results.iter().filter(|c| c.status == Status::Pass).count();
    let failed = results.len() - passed;
    Ok(Report {
        suite: suite.to_string(),
        m: ctx.m,
        order: ctx.d,
        totals: Totals {
            checks: results.len(),
            passed,
            failed,
            millis: start.elapsed().as_millis() as u64,
        },
        checks: results,
    })
}

/// Runs one suite (or `all`) at the given rank and truncation order.
pub fn run_suite(
    suite: &str,
    m: usize,
    d: usize,
    jobs: usize,
    seed: u64,
) -> Result<Report, SuiteError> {
    resolve_suites(suite, m)?;
    let ctx = Context::build(m, d, seed);
    run_suite_in(&ctx, suite, jobs)
}

/// Shared engine accessor used by table/pbw commands.
pub fn engine_for(m: usize) -> REngine {
    Engine::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_data_tables() {
        let r = RootData::new(2);
        // alpha_1 = eps_1 - eps_2, alpha_2 = eps_2
        assert_eq!(r.alpha_alpha(1, 1), -2);
        assert_eq!(r.alpha_alpha(1, 2), 1);
        assert_eq!(r.alpha_alpha(2, 2), -1);
        assert_eq!(r.cartan(1, 1), -2);
        assert_eq!(r.cartan(1, 2), 1);
        assert_eq!(r.cartan(2, 1), 2);
        assert_eq!(r.cartan(2, 2), -2);
        assert_eq!(r.serre_order(1, 2), 2);
        assert_eq!(r.serre_order(2, 1), 3);
        // orthogonality beyond neighbours
        let r3 = RootData::new(3);
        assert_eq!(r3.alpha_alpha(1, 3), 0);
        assert_eq!(r3.serre_order(1, 3), 1);
        // (eps_i, alpha_j) table at m = 2
        assert_eq!(r.eps_alpha(1, 1), -1);
        assert_eq!(r.eps_alpha(2, 1), 1);
        assert_eq!(r.eps_alpha(2, 2), -1);
        assert_eq!(r.eps_alpha(3, 1), 0); // eps_{m+1} = 0
        assert_eq!(r.eps_alpha(3, 2), 0);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("nosuch", 1, 2, 1, 0),
            Err(SuiteError::UnknownSuite(_))
        ));
        assert!(matches!(
            run_suite("ospl4", 1, 2, 1, 0),
            Err(SuiteError::NotApplicable { .. })
        ));
    }
}
