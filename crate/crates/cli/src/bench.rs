use std::fmt::Write as _;
use std::time::Instant;

use syt::verify::{applicable, count_by, CountOptions};
use syt::{partitions_of, Method};

/// CSV of total wall time per method per size, over all shapes of that size
/// with at most `r` rows. Shapes a method cannot handle are skipped.
pub fn run(max_n: usize, r: usize, methods: &[Method]) -> String {
    let opts = CountOptions::default();
    let mut out = String::from("method,n,shapes,elapsed_us\n");
    for &method in methods {
        for n in 0..=max_n {
            let shapes: Vec<_> = partitions_of(n, r)
                .into_iter()
                .filter(|s| applicable(method, s, r, &opts))
                .collect();
            if shapes.is_empty() {
                continue;
            }
            let start = Instant::now();
            for shape in &shapes {
                // errors (e.g. a tolerance miss) still cost time; keep going
                let _ = count_by(method, shape, r, &opts);
            }
            let us = start.elapsed().as_secs_f64() * 1e6;
            let _ = writeln!(out, "{method},{n},{},{us:.1}", shapes.len());
        }
    }
    out
}
