//! Height-3 counts through a discrete Fourier transform on the `A₂` lattice.
//!
//! A shape `λ = (a,b,c)` sits in the plane `x + y + z = n`. The affine map
//! `P(x,y,z) = ⟨x−z+2, y−z+1⟩` sends it to a point `⟨u,v⟩ = uα + vβ` of the
//! triangular lattice with `u > v > 0`, and the three moves `δ₁, δ₂, δ₃`
//! become `α`, `β` and `−α−β`. Paths that stay in the Weyl chamber are
//! counted by putting six signed copies of the start point (one per
//! permutation of `(2,1,0)`) on a periodic grid, stepping `n` times with the
//! transition symbol `T̂⁺` in frequency space, and evaluating at the target.
//!
//! # Grid and chart
//!
//! The period lattice is `M·{(p,q) : p + q ≡ 0 (mod 3)}`, whose quotient is
//! identified with `ℤ_M × ℤ_{3M}` through `(p,q) ↦ (p mod M, (q − 2p) mod 3M)`.
//! In that chart `α ↦ (1,−2)`, `β ↦ (0,1)` and `−α−β ↦ (−1,1)`, which is
//! exactly the symbol `T̂⁺` used below. The grid is indexed by the side
//! parameter `s` with `M = s + 1`, so it has `(s+1) × 3(s+1)` frequencies.
//!
//! Reflections of the period lattice add an affine wall at `u = M`; paths to
//! `λ` reach `u = a − c + 2`, so [`DftMode::Derived`] runs on side `a + 2`.
//! [`DftMode::Verbatim`] keeps the literal side `a`, the sine-form initial
//! state, and the raw target `⟨u, v⟩`; it does not reproduce `f^λ` and is
//! kept for comparison only.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The point `u·α + v·β`, `α = (1,0)`, `β = (−1/2, √3/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct A2Point {
    pub u: i64,
    pub v: i64,
}

impl A2Point {
    pub const ALPHA: A2Point = A2Point { u: 1, v: 0 };
    pub const BETA: A2Point = A2Point { u: 0, v: 1 };

    pub fn new(u: i64, v: i64) -> Self {
        A2Point { u, v }
    }

    /// Cartesian coordinates in the plane.
    pub fn cartesian(self) -> (f64, f64) {
        let (u, v) = (self.u as f64, self.v as f64);
        (u - 0.5 * v, v * 3f64.sqrt() / 2.0)
    }
}

impl std::ops::Add for A2Point {
    type Output = A2Point;
    fn add(self, o: A2Point) -> A2Point {
        A2Point::new(self.u + o.u, self.v + o.v)
    }
}

impl std::ops::Neg for A2Point {
    type Output = A2Point;
    fn neg(self) -> A2Point {
        A2Point::new(-self.u, -self.v)
    }
}

/// Linear part of `P`: `(x,y,z) ↦ ⟨x−z, y−z⟩`.
pub fn project(x: [i64; 3]) -> A2Point {
    A2Point::new(x[0] - x[2], x[1] - x[2])
}

fn height3(lambda: &Partition) -> Result<[i64; 3]> {
    let h = lambda.height();
    if h > 3 {
        return Err(Error::HeightExceedsThree(h));
    }
    Ok([
        lambda.part(0) as i64,
        lambda.part(1) as i64,
        lambda.part(2) as i64,
    ])
}

/// `P(a,b,c) = ⟨a−c+2, b−c+1⟩`.
pub fn embed(lambda: &Partition) -> Result<A2Point> {
    let [a, b, c] = height3(lambda)?;
    Ok(A2Point::new(a - c + 2, b - c + 1))
}

/// Images of `δ₁, δ₂, δ₃`: `α`, `β`, `−α−β`.
pub fn move_images() -> [A2Point; 3] {
    [
        project([1, 0, 0]),
        project([0, 1, 0]),
        project([0, 0, 1]),
    ]
}

/// Complex values on the `(s+1) × 3(s+1)` frequency (or position) grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DftGrid {
    side: usize,
    values: Vec<Complex64>,
}

impl DftGrid {
    pub fn from_fn(side: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let (rows, cols) = (side + 1, 3 * (side + 1));
        let mut values = Vec::with_capacity(rows * cols);
        for w1 in 0..rows {
            for w2 in 0..cols {
                values.push(f(w1, w2));
            }
        }
        DftGrid { side, values }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// `s + 1`.
    pub fn rows(&self) -> usize {
        self.side + 1
    }

    /// `3(s + 1)`.
    pub fn cols(&self) -> usize {
        3 * (self.side + 1)
    }

    pub fn get(&self, w1: usize, w2: usize) -> Complex64 {
        self.values[w1 * self.cols() + w2]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Index of the frequency `−ω`.
    pub fn complement(&self, w1: usize, w2: usize) -> (usize, usize) {
        ((self.rows() - w1) % self.rows(), (self.cols() - w2) % self.cols())
    }
}

fn phase(turns: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * turns)
}

/// `T̂⁺(ω₁,ω₂) = e^{−2πiω₂/3M} + e^{−2πi(ω₁/M − 2ω₂/3M)} + e^{−2πi(−ω₁/M + ω₂/3M)}`.
pub fn symbol_t(side: usize) -> DftGrid {
    let m = (side + 1) as f64;
    DftGrid::from_fn(side, |w1, w2| {
        let (w1, w2) = (w1 as f64, w2 as f64);
        phase(-w2 / (3.0 * m))
            + phase(-(w1 / m - 2.0 * w2 / (3.0 * m)))
            + phase(-(-w1 / m + w2 / (3.0 * m)))
    })
}

/// The sine-form initial state,
/// `2i[−sin(2πω₁/M) − sin(2π(ω₁−ω₂)/M) + sin(2π(2ω₁−ω₂)/M)]`.
pub fn initial_state_verbatim(side: usize) -> DftGrid {
    let m = (side + 1) as f64;
    DftGrid::from_fn(side, |w1, w2| {
        let (w1, w2) = (w1 as f64, w2 as f64);
        let s = -(2.0 * PI * w1 / m).sin() - (2.0 * PI * (w1 - w2) / m).sin()
            + (2.0 * PI * (2.0 * w1 - w2) / m).sin();
        Complex64::new(0.0, 2.0 * s)
    })
}

/// Position of an `A₂` point on the periodic grid of the given side.
pub fn torus_coords(p: A2Point, side: usize) -> (usize, usize) {
    let m = (side + 1) as i64;
    (
        p.u.rem_euclid(m) as usize,
        (p.v - 2 * p.u).rem_euclid(3 * m) as usize,
    )
}

/// The six signed images of the start `P(0,0,0) = ⟨2,1⟩`: each permutation
/// `σ` of `(2,1,0)` is projected and weighted by `sgn(σ)`.
pub fn start_images() -> Vec<(A2Point, i64)> {
    crate::laurent::permutations(3)
        .into_iter()
        .map(|perm| {
            let mut x = [0i64; 3];
            for (k, &slot) in perm.iter().enumerate() {
                x[slot] = 2 - k as i64;
            }
            (project(x), crate::laurent::permutation_sign(&perm))
        })
        .collect()
}

/// The signed start mass laid out on the position grid.
pub fn initial_mass(side: usize) -> DftGrid {
    let mut grid = DftGrid::from_fn(side, |_, _| Complex64::new(0.0, 0.0));
    let cols = grid.cols();
    for (p, sign) in start_images() {
        let (s, t) = torus_coords(p, side);
        grid.values[s * cols + t] += sign as f64;
    }
    grid
}

/// `F[f](ω) = Σ_x f(x)·e^{−2πi(x₁ω₁/M + x₂ω₂/3M)}`.
pub fn forward(positions: &DftGrid) -> DftGrid {
    transform(positions, -1.0, 1.0)
}

/// Inverse of [`forward`], including the `1/3M²` normalization.
pub fn inverse(frequencies: &DftGrid) -> DftGrid {
    let n = (frequencies.rows() * frequencies.cols()) as f64;
    transform(frequencies, 1.0, 1.0 / n)
}

fn transform(input: &DftGrid, sign: f64, scale: f64) -> DftGrid {
    let (rows, cols) = (input.rows() as f64, input.cols() as f64);
    DftGrid::from_fn(input.side, |k1, k2| {
        let mut acc = Complex64::new(0.0, 0.0);
        for x1 in 0..input.rows() {
            for x2 in 0..input.cols() {
                let f = input.get(x1, x2);
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let turns = (x1 * k1) as f64 / rows + (x2 * k2) as f64 / cols;
                acc += f * phase(sign * turns);
            }
        }
        acc * scale
    })
}

/// The forward transform of [`initial_mass`].
pub fn initial_state_derived(side: usize) -> DftGrid {
    forward(&initial_mass(side))
}

/// Pointwise comparison of the two initial states on one grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InitialStateDiff {
    pub side: usize,
    /// `max |verbatim − derived|`.
    pub max_difference: f64,
    /// `max |verbatim + derived|`; zero when the two differ only by sign.
    pub max_negated_difference: f64,
}

pub fn compare_initial_states(side: usize) -> InitialStateDiff {
    let verbatim = initial_state_verbatim(side);
    let derived = initial_state_derived(side);
    let mut diff = 0f64;
    let mut neg = 0f64;
    for (a, b) in verbatim.values().iter().zip(derived.values()) {
        diff = diff.max((a - b).norm());
        neg = neg.max((a + b).norm());
    }
    InitialStateDiff {
        side,
        max_difference: diff,
        max_negated_difference: neg,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DftMode {
    #[default]
    Derived,
    Verbatim,
}

impl fmt::Display for DftMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DftMode::Derived => "derived",
            DftMode::Verbatim => "verbatim",
        })
    }
}

impl FromStr for DftMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "derived" => Ok(DftMode::Derived),
            "verbatim" => Ok(DftMode::Verbatim),
            _ => Err(Error::InvalidArgument(format!("unknown dft mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DftConfig {
    pub mode: DftMode,
    /// Accept the rounded value only when `|raw − rounded|` is below this.
    pub tolerance: f64,
    /// Largest `n` evaluated in double precision.
    pub max_n: usize,
}

impl Default for DftConfig {
    fn default() -> Self {
        DftConfig {
            mode: DftMode::Derived,
            tolerance: 0.25,
            max_n: 24,
        }
    }
}

/// The evaluated double sum and its nearest integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DftCount {
    pub re: f64,
    pub im: f64,
    pub rounded: i64,
    /// `|raw − rounded|` as a complex magnitude.
    pub residual: f64,
    pub side: usize,
    pub mode: DftMode,
}

impl DftCount {
    pub fn raw(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// `zⁿ`, by `exp(n·log z)` away from zero.
fn power(z: Complex64, n: usize) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let r = z.norm();
    if r > 0.0 {
        Complex64::from_polar(r.powi(n as i32), z.arg() * n as f64)
    } else {
        z.powu(n as u32)
    }
}

/// Evaluates the double sum without the tolerance check.
pub fn evaluate_dft(lambda: &Partition, mode: DftMode) -> Result<DftCount> {
    let [a, _, _] = height3(lambda)?;
    let n = lambda.size();
    let target = embed(lambda)?;
    let (side, initial, (s, t)) = match mode {
        DftMode::Derived => {
            let side = a as usize + 2;
            (side, initial_state_derived(side), torus_coords(target, side))
        }
        DftMode::Verbatim => {
            let side = a as usize;
            let m = side as i64 + 1;
            let raw = (
                target.u.rem_euclid(m) as usize,
                target.v.rem_euclid(3 * m) as usize,
            );
            (side, initial_state_verbatim(side), raw)
        }
    };
    let symbol = symbol_t(side);
    let (rows, cols) = (symbol.rows(), symbol.cols());
    let mut acc = Complex64::new(0.0, 0.0);
    for w1 in 0..rows {
        for w2 in 0..cols {
            let outer = phase((s * w1) as f64 / rows as f64 + (t * w2) as f64 / cols as f64);
            acc += outer * power(symbol.get(w1, w2), n) * initial.get(w1, w2);
        }
    }
    let raw = acc / (rows * cols) as f64;
    let rounded = raw.re.round();
    Ok(DftCount {
        re: raw.re,
        im: raw.im,
        rounded: rounded as i64,
        residual: (raw - Complex64::new(rounded, 0.0)).norm(),
        side,
        mode,
    })
}

/// `f^{(a,b,c)}` from the Fourier double sum, rejected when the residual is
/// not below the configured tolerance.
pub fn count_dft(lambda: &Partition, config: &DftConfig) -> Result<DftCount> {
    height3(lambda)?;
    let n = lambda.size();
    if n > config.max_n {
        return Err(Error::PrecisionBudget {
            n,
            max: config.max_n,
        });
    }
    let count = evaluate_dft(lambda, config.mode)?;
    if count.residual >= config.tolerance {
        return Err(Error::ToleranceExceeded {
            residual: count.residual,
            tolerance: config.tolerance,
        });
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::validate(parts).unwrap()
    }

    const EPS: f64 = 1e-9;

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&Partition::empty()).unwrap(), A2Point::new(2, 1));
        assert_eq!(embed(&p(&[3, 1, 0])).unwrap(), A2Point::new(5, 2));
        assert_eq!(embed(&p(&[2, 2, 2])).unwrap(), A2Point::new(2, 1));
        assert_eq!(embed(&p(&[1, 1, 1, 1])), Err(Error::HeightExceedsThree(4)));
    }

    #[test]
    fn moves() {
        let [d1, d2, d3] = move_images();
        assert_eq!(d1, A2Point::ALPHA);
        assert_eq!(d2, A2Point::BETA);
        assert_eq!(d3, -(A2Point::ALPHA + A2Point::BETA));
        let (x, y) = A2Point::BETA.cartesian();
        assert!((x + 0.5).abs() < EPS && (y - 3f64.sqrt() / 2.0).abs() < EPS);
    }

    #[test]
    fn chart_matches_symbol() {
        // α, β, −α−β land on the shifts read off the three exponentials
        let side = 4;
        let m = side + 1;
        assert_eq!(torus_coords(A2Point::ALPHA, side), (1, 3 * m - 2));
        assert_eq!(torus_coords(A2Point::BETA, side), (0, 1));
        assert_eq!(
            torus_coords(-(A2Point::ALPHA + A2Point::BETA), side),
            (m - 1, 1)
        );
    }

    #[test]
    fn symbol_examples() {
        for side in 0..5 {
            let t = symbol_t(side);
            assert!((t.get(0, 0) - Complex64::new(3.0, 0.0)).norm() < EPS);
            assert!(t.values().iter().all(|z| z.norm() <= 3.0 + EPS));
            assert_eq!((t.rows(), t.cols()), (side + 1, 3 * (side + 1)));
        }
        // side 1: M = 2, ω = (1,3); phases −1/2, −(1/2 − 1), −(−1/2 + 1/2)
        let t = symbol_t(1).get(1, 3);
        let expect = Complex64::new(-1.0, 0.0) + Complex64::new(-1.0, 0.0) + Complex64::new(1.0, 0.0);
        assert!((t - expect).norm() < EPS, "{t}");
    }

    #[test]
    fn verbatim_initial_state() {
        let g = initial_state_verbatim(2);
        assert!(g.get(0, 0).norm() < EPS);
        assert!(g.values().iter().all(|z| z.re.abs() < EPS));
        for (w1, w2) in [(0, 1), (1, 4), (2, 8), (1, 0), (2, 5)] {
            let (a, b) = (w1 as f64, w2 as f64);
            let direct = 2.0
                * (-(2.0 * PI * a / 3.0).sin() - (2.0 * PI * (a - b) / 3.0).sin()
                    + (2.0 * PI * (2.0 * a - b) / 3.0).sin());
            assert!((g.get(w1, w2).im - direct).abs() < EPS);
        }
    }

    #[test]
    fn derived_initial_state_round_trips() {
        for side in 0..5 {
            let mass = initial_mass(side);
            let spectrum = initial_state_derived(side);
            assert!(spectrum.values().iter().all(|z| z.re.abs() < EPS));
            let back = inverse(&spectrum);
            for (a, b) in back.values().iter().zip(mass.values()) {
                assert!((a - b).norm() < EPS);
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for side in 0..4 {
            for grid in [symbol_t(side), initial_state_derived(side), initial_state_verbatim(side)] {
                for w1 in 0..grid.rows() {
                    for w2 in 0..grid.cols() {
                        let (c1, c2) = grid.complement(w1, w2);
                        assert!((grid.get(c1, c2) - grid.get(w1, w2).conj()).norm() < 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn initial_states_differ_by_sign() {
        for side in 0..=4 {
            let d = compare_initial_states(side);
            assert!(d.max_negated_difference < 1e-9, "{d:?}");
        }
        assert!(compare_initial_states(3).max_difference > 1.0);
    }

    #[test]
    fn count_examples() {
        let cfg = DftConfig::default();
        assert_eq!(count_dft(&p(&[3, 1, 0]), &cfg).unwrap().rounded, 3);
        assert_eq!(count_dft(&Partition::empty(), &cfg).unwrap().rounded, 1);
        assert_eq!(count_dft(&p(&[2, 2, 2]), &cfg).unwrap().rounded, 5);
        assert_eq!(count_dft(&p(&[4, 3, 2]), &cfg).unwrap().rounded, 168);
        assert!(matches!(
            count_dft(&p(&[10, 10, 5]), &cfg),
            Err(Error::PrecisionBudget { n: 25, max: 24 })
        ));
    }

    #[test]
    fn verbatim_mode_misses() {
        let c = evaluate_dft(&p(&[3, 1, 0]), DftMode::Verbatim).unwrap();
        assert_eq!(c.side, 3);
        assert_ne!(c.rounded, 3);
    }

    #[test]
    fn tolerance_is_enforced() {
        let cfg = DftConfig {
            tolerance: 0.0,
            ..DftConfig::default()
        };
        assert!(matches!(
            count_dft(&p(&[2, 1]), &cfg),
            Err(Error::ToleranceExceeded { .. })
        ));
    }

    #[test]
    fn start_images_signs() {
        let imgs = start_images();
        assert_eq!(imgs.len(), 6);
        assert!(imgs.contains(&(A2Point::new(2, 1), 1)));
        assert!(imgs.contains(&(A2Point::new(-1, 1), 1)));
        assert!(imgs.contains(&(A2Point::new(1, 2), -1)));
        assert_eq!(imgs.iter().map(|(_, s)| s).sum::<i64>(), 0);
    }
}
