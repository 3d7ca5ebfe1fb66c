use std::fmt::Write as _;

use serde::Serialize;

use syt::dft_a2::{DftCount, DftMode};
use syt::verify::VerifyReport;
use syt::Method;

#[derive(Debug, Serialize)]
pub struct DftReport {
    pub mode: DftMode,
    pub side: usize,
    pub raw_re: f64,
    pub raw_im: f64,
    pub residual: f64,
}

impl From<DftCount> for DftReport {
    fn from(c: DftCount) -> Self {
        DftReport {
            mode: c.mode,
            side: c.side,
            raw_re: c.re,
            raw_im: c.im,
            residual: c.residual,
        }
    }
}

/// Counts are decimal strings; they outgrow 64 bits quickly.
#[derive(Debug, Serialize)]
pub struct CountReport {
    pub shape: String,
    pub n: usize,
    pub r: usize,
    pub method: Method,
    pub count: String,
    pub elapsed_us: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dft: Option<DftReport>,
}

impl CountReport {
    pub fn render(&self) -> String {
        let mut s = format!(
            "f({}) = {}  [method {}, n = {}, r = {}, {:.1} us]",
            self.shape, self.count, self.method, self.n, self.r, self.elapsed_us
        );
        if let Some(d) = &self.dft {
            let _ = write!(
                s,
                "\n  fourier sum = {:.6} {:+.3e}i, residual {:.3e} ({} mode, grid side {})",
                d.raw_re, d.raw_im, d.residual, d.mode, d.side
            );
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub shape: String,
    pub count: String,
    pub agree: bool,
}

impl TableRow {
    pub fn render(&self) -> String {
        let flag = if self.agree { "ok" } else { "MISMATCH" };
        format!("{}\t{}\t{}", self.shape, self.count, flag)
    }
}

pub fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "swept |lambda| <= {}, height <= {}, fourier up to n = {} ({} mode)",
        report.max_n, report.max_r, report.dft_max_n, report.dft_mode
    );
    for s in &report.shapes {
        let values: Vec<String> = s.values.iter().map(|(m, v)| format!("{m}={v}")).collect();
        let _ = writeln!(out, "{}\t{}", s.shape, values.join(" "));
    }
    let _ = writeln!(out, "disagreements: {}", report.disagreements.len());
    for d in &report.disagreements {
        let _ = writeln!(
            out,
            "  {} {}: expected {}, found {}",
            d.shape, d.method, d.expected, d.found
        );
    }
    if !report.dft_mode_diffs.is_empty() || !report.initial_state_diffs.is_empty() {
        let _ = writeln!(out, "verbatim fourier misses: {}", report.dft_mode_diffs.len());
        for d in &report.dft_mode_diffs {
            let _ = writeln!(
                out,
                "  {}: expected {}, sum {:.6} {:+.3e}i",
                d.shape, d.expected, d.raw_re, d.raw_im
            );
        }
        for d in &report.initial_state_diffs {
            let _ = writeln!(
                out,
                "  initial state side {}: max |verbatim - derived| = {:.3e}, max |verbatim + derived| = {:.3e}",
                d.side, d.max_difference, d.max_negated_difference
            );
        }
    }
    out
}
