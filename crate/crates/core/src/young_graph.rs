//! DOT rendering of the Young lattice `Λʳ` cut off at `λ₁ ≤ max`, each vertex
//! labelled with its path count `f^λ`.

use std::fmt::Write as _;

use crate::closedform::count_closed;
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub const MAX_R: usize = 3;
pub const MAX_COORDINATE: usize = 6;

const ARROWHEADS: [&str; MAX_R] = ["normal", "empty", "diamond"];

/// All `λ ∈ Λʳ` with every part `≤ max`, smallest size first.
pub fn lattice_points(r: usize, max: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    points_rec(r, max, &mut cur, &mut out);
    out.sort();
    out
}

fn points_rec(r: usize, upper: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if cur.len() == r {
        out.push(Partition::from_parts_unchecked(cur.clone()));
        return;
    }
    for part in 0..=upper {
        cur.push(part);
        points_rec(r, part, cur, out);
        cur.pop();
    }
}

fn node_id(parts: &[usize]) -> String {
    let mut s = String::from("p");
    for p in parts {
        let _ = write!(s, "_{p}");
    }
    s
}

fn tuple(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

/// The digraph of legal `δ_i` steps, one arrowhead style per row `i`.
pub fn young_graph_dot(r: usize, max: usize) -> Result<String> {
    if r == 0 || r > MAX_R {
        return Err(Error::InvalidArgument(format!(
            "graph needs 1 <= r <= {MAX_R}, got {r}"
        )));
    }
    if max > MAX_COORDINATE {
        return Err(Error::InvalidArgument(format!(
            "graph needs max coordinate <= {MAX_COORDINATE}, got {max}"
        )));
    }
    let points = lattice_points(r, max);
    let mut out = String::new();
    let _ = writeln!(out, "digraph young_r{r} {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box];");
    for lambda in &points {
        let parts = lambda.padded(r)?;
        let count = count_closed(lambda, r)?.value;
        let _ = writeln!(
            out,
            "  {} [label=\"{} : {}\"];",
            node_id(&parts),
            tuple(&parts),
            count
        );
    }
    for lambda in &points {
        let parts = lambda.padded(r)?;
        for (i, head) in ARROWHEADS.iter().enumerate().take(r) {
            let Some(next) = lambda.add_cell(i) else {
                continue;
            };
            if next.first() > max || next.height() > r {
                continue;
            }
            let _ = writeln!(
                out,
                "  {} -> {} [arrowhead={head}];",
                node_id(&parts),
                node_id(&next.padded(r)?)
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}
