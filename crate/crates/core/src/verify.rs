//! Runs every applicable counting method over a sweep of shapes and collects
//! disagreements against the closed form.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{count_closed, count_two_row};
use crate::dft_a2::{compare_initial_states, count_dft, evaluate_dft, DftConfig, DftCount, DftMode, InitialStateDiff};
use crate::error::{Error, Result};
use crate::laurent::{genfun, LaurentPoly};
use crate::method::Method;
use crate::oracle::{count_oracle, DEFAULT_CAP};
use crate::partitions::{partitions_of, Partition};
use crate::vertexdp::count_paths;

/// Per-call settings shared by all methods.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountOptions {
    pub dft: DftConfig,
    pub oracle_cap: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            dft: DftConfig::default(),
            oracle_cap: DEFAULT_CAP,
        }
    }
}

/// A count together with the Fourier diagnostics when they apply.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodCount {
    pub method: Method,
    pub value: BigInt,
    pub dft: Option<DftCount>,
}

/// Whether `method` can handle `lambda` with `r` rows.
pub fn applicable(method: Method, lambda: &Partition, r: usize, opts: &CountOptions) -> bool {
    let h = lambda.height();
    match method {
        Method::Dp | Method::Genfun | Method::Closed => h <= r,
        Method::TwoRow => h <= 2,
        Method::Dft => h <= 3 && lambda.size() <= opts.dft.max_n,
        Method::Oracle => lambda.size() <= opts.oracle_cap,
    }
}

/// `f^λ` by the chosen method. `r` is ignored by the methods that fix their
/// own row count.
pub fn count_by(method: Method, lambda: &Partition, r: usize, opts: &CountOptions) -> Result<MethodCount> {
    let mut dft = None;
    let value: BigInt = match method {
        Method::Dp => count_paths(lambda, r)?.count.into(),
        Method::Genfun => crate::laurent::count_via_genfun(lambda, r)?.into(),
        Method::Closed => count_closed(lambda, r)?.value.into(),
        Method::TwoRow => {
            let h = lambda.height();
            if h > 2 {
                return Err(Error::HeightExceedsR { height: h, r: 2 });
            }
            count_two_row(lambda.part(0) as i64, lambda.part(1) as i64)?
                .value
                .into()
        }
        Method::Dft => {
            let c = count_dft(lambda, &opts.dft)?;
            dft = Some(c);
            BigInt::from(c.rounded)
        }
        Method::Oracle => count_oracle(lambda, opts.oracle_cap)?.into(),
    };
    Ok(MethodCount { method, value, dft })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_r: usize,
    pub dft_max_n: usize,
    pub options: CountOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 10,
            max_r: 4,
            dft_max_n: 12,
            options: CountOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeReport {
    pub shape: Partition,
    pub n: usize,
    /// Decimal counts keyed by method.
    pub values: BTreeMap<Method, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Disagreement {
    pub shape: Partition,
    pub method: Method,
    pub expected: String,
    pub found: String,
}

/// A Fourier evaluation in verbatim mode that misses the true count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DftModeDiff {
    pub shape: Partition,
    pub expected: String,
    pub raw_re: f64,
    pub raw_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub max_r: usize,
    pub dft_max_n: usize,
    pub dft_mode: DftMode,
    pub shapes: Vec<ShapeReport>,
    pub disagreements: Vec<Disagreement>,
    /// Only filled in verbatim mode.
    pub dft_mode_diffs: Vec<DftModeDiff>,
    /// Only filled in verbatim mode.
    pub initial_state_diffs: Vec<InitialStateDiff>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

struct ShapeOutcome {
    report: ShapeReport,
    disagreements: Vec<Disagreement>,
    dft_diff: Option<DftModeDiff>,
}

fn check_shape(
    lambda: &Partition,
    config: &VerifyConfig,
    genfuns: &HashMap<usize, LaurentPoly>,
) -> ShapeOutcome {
    let r = config.max_r;
    let opts = &config.options;
    let n = lambda.size();
    let mut values = BTreeMap::new();
    let mut disagreements = Vec::new();
    let mut dft_diff = None;

    let expected = match count_closed(lambda, r) {
        Ok(c) => BigInt::from(c.value),
        Err(e) => {
            disagreements.push(Disagreement {
                shape: lambda.clone(),
                method: Method::Closed,
                expected: "-".into(),
                found: e.to_string(),
            });
            BigInt::from(-1)
        }
    };
    values.insert(Method::Closed, expected.to_string());

    for method in [Method::Dp, Method::Genfun, Method::TwoRow, Method::Dft, Method::Oracle] {
        if !applicable(method, lambda, r, opts) {
            continue;
        }
        if method == Method::Dft && n > config.dft_max_n {
            continue;
        }
        let outcome = match method {
            Method::Genfun => {
                let exps: Vec<i64> = lambda
                    .padded(r)
                    .expect("height checked")
                    .into_iter()
                    .map(|p| p as i64)
                    .collect();
                genfuns[&n].coefficient(&exps).map(|value| MethodCount {
                    method,
                    value,
                    dft: None,
                })
            }
            Method::Dft if opts.dft.mode == DftMode::Verbatim => {
                evaluate_dft(lambda, DftMode::Verbatim).map(|c| MethodCount {
                    method,
                    value: BigInt::from(c.rounded),
                    dft: Some(c),
                })
            }
            _ => count_by(method, lambda, r, opts),
        };
        match outcome {
            Ok(mc) => {
                values.insert(method, mc.value.to_string());
                if mc.value == expected {
                    continue;
                }
                if opts.dft.mode == DftMode::Verbatim && method == Method::Dft {
                    let c = mc.dft.expect("dft diagnostics");
                    dft_diff = Some(DftModeDiff {
                        shape: lambda.clone(),
                        expected: expected.to_string(),
                        raw_re: c.re,
                        raw_im: c.im,
                    });
                } else {
                    disagreements.push(Disagreement {
                        shape: lambda.clone(),
                        method,
                        expected: expected.to_string(),
                        found: mc.value.to_string(),
                    });
                }
            }
            Err(e) => {
                values.insert(method, format!("error: {e}"));
                disagreements.push(Disagreement {
                    shape: lambda.clone(),
                    method,
                    expected: expected.to_string(),
                    found: e.to_string(),
                });
            }
        }
    }
    ShapeOutcome {
        report: ShapeReport {
            shape: lambda.clone(),
            n,
            values,
        },
        disagreements,
        dft_diff,
    }
}

/// Sweeps every partition with `|λ| ≤ max_n` and height `≤ max_r`.
pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_r == 0 {
        return Err(Error::InvalidArgument("max_r must be at least 1".into()));
    }
    let genfuns: HashMap<usize, LaurentPoly> = (0..=config.max_n)
        .into_par_iter()
        .map(|n| genfun(n, config.max_r).map(|p| (n, p)))
        .collect::<Result<_>>()?;
    let shapes: Vec<Partition> = (0..=config.max_n)
        .flat_map(|n| partitions_of(n, config.max_r))
        .collect();
    // par_iter().map().collect() keeps input order
    let outcomes: Vec<ShapeOutcome> = shapes
        .par_iter()
        .map(|l| check_shape(l, config, &genfuns))
        .collect();

    let mut report = VerifyReport {
        max_n: config.max_n,
        max_r: config.max_r,
        dft_max_n: config.dft_max_n,
        dft_mode: config.options.dft.mode,
        shapes: Vec::with_capacity(outcomes.len()),
        disagreements: Vec::new(),
        dft_mode_diffs: Vec::new(),
        initial_state_diffs: Vec::new(),
    };
    for o in outcomes {
        report.shapes.push(o.report);
        report.disagreements.extend(o.disagreements);
        report.dft_mode_diffs.extend(o.dft_diff);
    }
    if config.options.dft.mode == DftMode::Verbatim {
        report.initial_state_diffs = (0..=4).map(compare_initial_states).collect();
    }
    Ok(report)
}
