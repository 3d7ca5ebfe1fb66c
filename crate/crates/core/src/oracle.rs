//! Brute-force ground truth by backtracking over row lengths.
//!
//! Placing label `k` in row `i` is the lattice step `δ_i`; a step is legal
//! when the row above is strictly longer. This module deliberately uses
//! nothing from the counting modules beyond reading the shape's parts.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default cap on `|λ|` for enumeration.
pub const DEFAULT_CAP: usize = 16;

/// A standard filling, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Rows and columns strictly increase and the labels are `1..=n`.
    pub fn is_standard(&self) -> bool {
        let parts = self.shape.nonzero_parts();
        if self.rows.len() != parts.len() || self.rows.iter().zip(parts).any(|(r, &p)| r.len() != p) {
            return false;
        }
        let n = self.shape.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &label in row {
                if label == 0 || label > n || seen[label] {
                    return false;
                }
                seen[label] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        })
    }

    /// Row index (0-based) of each label `1..=n`, i.e. the lattice path.
    pub fn row_word(&self) -> Vec<usize> {
        let mut word = vec![0; self.shape.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &label in row {
                word[label - 1] = i;
            }
        }
        word
    }

    /// One row per line, labels separated by spaces.
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn check_cap(lambda: &Partition, cap: usize) -> Result<Vec<usize>> {
    let size = lambda.size();
    if size > cap {
        return Err(Error::ShapeTooLarge { size, cap });
    }
    Ok(lambda.nonzero_parts().to_vec())
}

/// Rows that may receive the next label given current row lengths.
fn legal_rows<'a>(target: &'a [usize], lengths: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    (0..target.len()).filter(move |&i| lengths[i] < target[i] && (i == 0 || lengths[i - 1] > lengths[i]))
}

/// Every standard filling of `λ`, ordered by the row chosen at steps `1..n`.
pub fn enumerate_tableaux(lambda: &Partition, cap: usize) -> Result<Vec<Tableau>> {
    let target = check_cap(lambda, cap)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); target.len()];
    let mut lengths = vec![0; target.len()];
    enumerate_rec(lambda, &target, &mut lengths, &mut rows, 1, &mut out);
    Ok(out)
}

fn enumerate_rec(
    shape: &Partition,
    target: &[usize],
    lengths: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    label: usize,
    out: &mut Vec<Tableau>,
) {
    if lengths.as_slice() == target {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let choices: Vec<usize> = legal_rows(target, lengths).collect();
    for i in choices {
        lengths[i] += 1;
        rows[i].push(label);
        enumerate_rec(shape, target, lengths, rows, label + 1, out);
        rows[i].pop();
        lengths[i] -= 1;
    }
}

/// Number of standard fillings of `λ`, counted without building them.
pub fn count_oracle(lambda: &Partition, cap: usize) -> Result<BigUint> {
    let target = check_cap(lambda, cap)?;
    let mut lengths = vec![0; target.len()];
    Ok(BigUint::from(count_rec(&target, &mut lengths)))
}

fn count_rec(target: &[usize], lengths: &mut [usize]) -> u64 {
    if lengths == target {
        return 1;
    }
    let mut total = 0;
    for i in 0..target.len() {
        if lengths[i] < target[i] && (i == 0 || lengths[i - 1] > lengths[i]) {
            lengths[i] += 1;
            total += count_rec(target, lengths);
            lengths[i] -= 1;
        }
    }
    total
}
