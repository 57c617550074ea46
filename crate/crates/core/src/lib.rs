//! Synthesis of binary-input, k-valued-output logic functions (k odd) as
//! reversible cascades over the dihedral group `D_k`.
//!
//! The pipeline is: truth vector -> modular Walsh spectrum -> canonical
//! cascade of shift gates `a^w` and controlled reflections `g^S` -> local
//! rewrite passes -> NOT/SWAP/CSWAP circuit over k value rails -> exhaustive
//! simulation against the original truth vector.
//!
//! - [`dihedral`]: the group `D_k` as rail permutations.
//! - [`spectral`]: Walsh matrices and the spectrum `w = W_n^{-1} F (mod k)`.
//! - [`cascade`]: the mid-level cascade IR and the canonical builder.
//! - [`rewrite`]: cell-level local transformations with a fixpoint driver.
//! - [`lowering`]: compilation to NOT/SWAP/CSWAP gates plus circuit peepholes.
//! - [`simulate`]: the exhaustive ground-truth simulator.
//! - [`format`]: JSON file formats and the plain-text cascade word form.

pub mod cascade;
pub mod dihedral;
pub mod draw;
pub mod format;
pub mod lowering;
pub mod rewrite;
pub mod simulate;
pub mod spectral;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The output radix must be odd and at least 3; see the modular-inverse
    /// argument behind `spectral::walsh_inverse_scalar`.
    #[error("invalid radix {0}: the output radix must be an odd integer >= 3 (2^n has no inverse modulo an even radix)")]
    InvalidRadix(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("assignment has {got} variables, expected {expected}")]
    Arity { expected: usize, got: usize },
    #[error("size out of range: {0}")]
    Size(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("structural error: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
