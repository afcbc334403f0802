//! Reference implementations of the sixteen-sutra mental arithmetic
//! procedures, each paired with the conventional algorithm it shortcuts.
//!
//! Every procedure records its working (deficiencies, partial products,
//! remainder chains, …) so the steps can be shown, and every result is
//! exact: integers are arbitrary precision and polynomial coefficients are
//! rationals. The [`oracle`] module holds the conventional algorithms the
//! procedures are checked against.
//!
//! | Procedure | Module |
//! |-----------|--------|
//! | Ekadhika, Sesanya (recurring decimals) | [`recurring`] |
//! | Nikhilam, squares ending in 5, Ekanyuna, Urdhva, first-by-first | [`multiply`] |
//! | Paravartya, Anurupyena, Lopana, Sopantya, Gunita | [`algebra`] |
//!
//! ```
//! use sutra::{multiply::nikhilam_multiply, Natural};
//! let working = nikhilam_multiply(&Natural::from(88u32), &Natural::from(98u32), &Natural::from(100u32)).unwrap();
//! assert_eq!(working.product, Natural::from(8624u32));
//! ```
//!
//! Procedures known only by name (the fifth, ninth, tenth and eleventh
//! sutras and the *Vilokanam* sub-sutra) have no executable form; see
//! `NOTES.md` in the crate root.

#![warn(missing_docs)]

pub mod algebra;
pub mod multiply;
pub mod oracle;
pub mod polynomial;
pub mod recurring;

use thiserror::Error;

pub use num_bigint::{BigInt, BigUint};
pub use polynomial::{ParsePolynomialError, Polynomial, Rational, Var};
pub use recurring::RepeatingDecimal;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Why a procedure could not be carried out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SutraError {
    /// An input violates the procedure's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The shortcut's applicability condition fails; the conventional
    /// product or quotient must be used instead.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// No factorization over the rationals exists.
    #[error("not factorable: {0}")]
    NotFactorable(String),
    /// A polynomial input is identically zero.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// A division by zero would be required.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
}

/// Shorthand for results of sutra procedures.
pub type Result<T, E = SutraError> = std::result::Result<T, E>;

/// The guide's chapter, compiled so its snippets run as doc-tests.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/sutras.md")]
struct Guide;
