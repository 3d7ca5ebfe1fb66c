//! Counting standard Young tableaux five different ways.
//!
//! Every method here computes `f^λ`, the number of standard fillings of the
//! Ferrers diagram of a partition `λ`:
//!
//! * [`vertexdp`] iterates a sign-equivariant vertex function on the shifted
//!   lattice `Λʳ + r*`; the value at `λ + r*` after `|λ|` steps is `f^λ`.
//! * [`laurent`] builds `(x₁ + ⋯ + x_r)ⁿ · V_r / x^{r*}` and reads off the
//!   coefficient of `x^λ`.
//! * [`closedform`] evaluates `n!/∏μ_k! · ∏_{i<j}(μ_i − μ_j)` with `μ = λ + r*`,
//!   and the two-row binomial difference.
//! * [`dft_a2`] counts height-3 shapes with a double sum over a discrete Fourier
//!   grid on the `A₂` triangular lattice.
//! * [`oracle`] enumerates tableaux by backtracking. It shares no code with the
//!   other methods and serves as ground truth in tests.
//!
//! [`verify`] runs all applicable methods over a sweep of shapes and collects
//! any disagreement, and [`young_graph`] renders the Young lattice with its
//! path counts as a DOT digraph.

pub mod closedform;
pub mod dft_a2;
pub mod error;
pub mod laurent;
pub mod method;
pub mod oracle;
pub mod partitions;
pub mod verify;
pub mod vertexdp;
pub mod young_graph;

pub use closedform::{count_closed, count_two_row, ExactCount};
pub use dft_a2::{count_dft, A2Point, DftConfig, DftCount, DftGrid, DftMode};
pub use error::{Error, Result};
pub use laurent::{count_via_genfun, genfun, LaurentPoly};
pub use method::Method;
pub use oracle::{count_oracle, enumerate_tableaux, Tableau};
pub use partitions::{mu, partitions_of, Partition, StaircaseVector};
pub use verify::{verify, VerifyConfig, VerifyReport};
pub use vertexdp::{count_paths, LatticePathCount, VertexFunction};
