//! Exact computation of symmetric and non-symmetric Jack polynomials.
//!
//! Two independent engines produce the integral normalization `F_λ`: the
//! creation-operator recursion ([`recursion`]) and the admissible-tableau
//! sum ([`tableau`]). The symmetric polynomials `J_λ`, `P_λ` are derived from
//! `F` in [`symmetric`], and [`cherednik`] implements the differential-
//! reflection operators and the constant-term pairing used to check them.

pub mod checks;
pub mod cherednik;
pub mod combinatorics;
pub mod error;
pub mod format;
pub mod poly;
pub mod recursion;
pub mod symmetric;
pub mod tableau;

pub use combinatorics::{compare, Cell, Composition, HookData, OrderRelation, Permutation};
pub use error::{JackError, Result};
pub use poly::{AlphaFrac, AlphaPoly, Coeff, Exponent, MPoly};
