//! Claim registry: every checked statement bound to an executable check,
//! plus the invariant table of the Fano cases and the parameter ledgers.

mod cases;
mod checks;

use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::is_prime;
pub use crate::report::ReportFormat;
pub use cases::{cases, ledgers, prym_ledger, DiscriminantModel, FanoCase, LedgerEntry, LedgerTerm, ModelSurface};

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_SECOND_PRIME: u64 = 31991;
pub const DEFAULT_TRIALS: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("negative entry in linear system specification")]
    NegativeEntry,
    #[error("{dims} factors but {degrees} degrees")]
    LengthMismatch { dims: usize, degrees: usize },
    #[error("case {0} has no discriminant model")]
    MissingModel(String),
}

/// A claimed or computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    List(Vec<i64>),
    Text(String),
    Missing,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::List(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Text(s) => write!(f, "{s}"),
            Value::Missing => write!(f, "-"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Symbolic,
    Chow,
    Lattice,
    Zerodim,
    Birat,
    Arithmetic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cost {
    Fast,
    Slow,
}

/// How `computed` is compared with `expected`. Every rule reduces to value
/// equality once the check has produced its value; the rule records what
/// that value means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    ExactInteger,
    IntegerList,
    IdentityUpToScalar,
    Boolean,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Unstable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Unstable => "unstable",
        };
        f.write_str(s)
    }
}

/// Output of a check: the computed value, and whether the randomized parts
/// disagreed among themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub value: Value,
    pub unstable: bool,
}

impl Outcome {
    pub fn stable(value: Value) -> Self {
        Outcome { value, unstable: false }
    }
}

type Check = fn(&RunConfig) -> Result<Outcome, String>;

#[derive(Clone, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub paper_ref: &'static str,
    pub kind: Kind,
    pub comparison: Comparison,
    pub expected: Value,
    pub cost: Cost,
    /// Module entry point and parameters exercised by the check.
    pub entry: &'static str,
    #[serde(skip)]
    check: Check,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("expected", &self.expected).finish()
    }
}

impl Claim {
    pub fn run(&self, config: &RunConfig) -> ClaimResult {
        let base = |status, computed, elapsed_ms| ClaimResult {
            claim_id: self.id.to_string(),
            description: self.description.to_string(),
            paper_ref: self.paper_ref.to_string(),
            status,
            expected: self.expected.clone(),
            computed,
            elapsed_ms,
            seed: config.seed,
            prime: config.prime,
        };
        if self.cost == Cost::Slow && !config.include_slow {
            return base(Status::Skipped, Value::Missing, 0);
        }
        let start = Instant::now();
        let outcome = (self.check)(config);
        let elapsed = if config.timings { start.elapsed().as_millis() as u64 } else { 0 };
        match outcome {
            Err(msg) => base(Status::Fail, Value::Text(format!("error: {msg}")), elapsed),
            Ok(o) if o.unstable => base(Status::Unstable, o.value, elapsed),
            Ok(o) => {
                let status = if o.value == self.expected { Status::Pass } else { Status::Fail };
                base(status, o.value, elapsed)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub description: String,
    pub paper_ref: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub elapsed_ms: u64,
    pub seed: u64,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: u64,
    pub second_prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub include_slow: bool,
    /// Claims to run; empty means all.
    pub claims: Vec<String>,
    pub format: ReportFormat,
    /// Record wall-clock times in results. Off by default so reports are
    /// reproducible byte for byte.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: DEFAULT_PRIME,
            second_prime: DEFAULT_SECOND_PRIME,
            seed: 0,
            trials: DEFAULT_TRIALS,
            include_slow: false,
            claims: Vec::new(),
            format: ReportFormat::Text,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CatalogError> {
        for p in [self.prime, self.second_prime] {
            if !is_prime(p) {
                return Err(CatalogError::NotPrime(p));
            }
        }
        if self.trials == 0 {
            return Err(CatalogError::ZeroTrials);
        }
        for id in &self.claims {
            find(id)?;
        }
        Ok(())
    }
}

/// All registered claims, sorted by id.
pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = checks::claims();
        v.sort_by_key(|c| c.id);
        v
    })
}

pub fn find(id: &str) -> Result<&'static Claim, CatalogError> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| CatalogError::UnknownClaim(id.to_string()))
}

pub fn run_claim(id: &str, config: &RunConfig) -> Result<ClaimResult, CatalogError> {
    config.validate()?;
    Ok(find(id)?.run(config))
}

/// Runs the configured selection (every claim when the filter is empty) in
/// parallel; results are ordered by id.
pub fn run_all(config: &RunConfig) -> Result<Vec<ClaimResult>, CatalogError> {
    config.validate()?;
    let selected: Vec<&Claim> = if config.claims.is_empty() {
        registry().iter().collect()
    } else {
        let mut ids: Vec<&str> = config.claims.iter().map(String::as_str).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(find).collect::<Result<_, _>>()?
    };
    let mut results: Vec<ClaimResult> = selected.par_iter().map(|c| c.run(config)).collect();
    results.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(results)
}

/// Projective dimension `prod C(n_i + d_i, n_i) - 1` of the complete linear
/// system of multidegree `d` on `P^{n_1} x ... x P^{n_k}`.
pub fn linear_system_dim(dims: &[i64], d: &[i64]) -> Result<i64, CatalogError> {
    if dims.len() != d.len() {
        return Err(CatalogError::LengthMismatch { dims: dims.len(), degrees: d.len() });
    }
    if dims.iter().chain(d).any(|&x| x < 0) {
        return Err(CatalogError::NegativeEntry);
    }
    let sections: i64 = dims.iter().zip(d).map(|(&n, &k)| binomial(n + k, n)).product();
    Ok(sections - 1)
}

fn binomial(n: i64, k: i64) -> i64 {
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}
