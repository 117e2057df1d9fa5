//! Exact computer algebra for symmetric functions and q-series.
//!
//! The crate provides, over exact rational arithmetic:
//!
//! - truncated formal power series, univariate and multivariate ([`series`]);
//! - integer partitions and multipartite (vector) indices ([`partition`]);
//! - Bell polynomials by recurrence and by Faà di Bruno's partition sum ([`bell`]);
//! - multipartite generating functions and their exponential forms ([`multigen`]);
//! - q-Pochhammer products, the Euler product/coefficient recursion, and
//!   numerical Ruelle-type spectral products ([`qspectral`]);
//! - the classical ring of symmetric functions: p/e/h/m/s bases, characters,
//!   Jacobi-Trudi, skew functions, Cauchy kernels ([`symfunc`]);
//! - Hall-Littlewood / Jack / Macdonald and general ξ-deformed orthogonal
//!   bases with their Cauchy identities ([`deformed`]);
//! - the Heisenberg realization on Λ, vertex operators and regularized
//!   traces ([`vertex`]);
//! - transfer-matrix eigenfrequencies of the 2N-piece composite string
//!   ([`string2n`]).
//!
//! Every identity is checkable term-by-term at a finite truncation degree;
//! [`checks`] collects the cross-module identity suite that the CLI and the
//! acceptance tests share.

pub mod bell;
pub mod checks;
pub mod cli;
pub mod deformed;
pub mod error;
pub mod multigen;
pub mod partition;
pub mod qspectral;
pub mod rat;
pub mod ring;
pub mod series;
pub mod string2n;
pub mod symfunc;
pub mod vertex;

pub use error::Error;
pub use partition::{MultiIndex, Partition};
pub use rat::Rat;
pub use series::Series;
pub use symfunc::{Basis, SymFunc};
