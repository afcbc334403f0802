//! Inference engines for fuzzy and neutrosophic cognitive maps.
//!
//! A cognitive map is a matrix of causal weights between concepts. Switching
//! some concepts on and iterating "multiply, threshold, re-clamp" drives the
//! map to a *hidden pattern*: a fixed point or a limit cycle. This crate
//! implements that machinery for
//!
//! * fuzzy cognitive maps and fuzzy relational maps ([`crisp`]),
//! * their neutrosophic counterparts with an indeterminate weight `I`
//!   ([`neutrosophic`]),
//! * the multi-expert max-min fuzzy and fuzzy-neutrosophic dynamical systems
//!   ([`fuzzy`]),
//!
//! together with exact neutrosophic arithmetic ([`neutro`]), a validated
//! JSON model format ([`model`]), a catalog of worked examples
//! ([`fixtures`]), and trace rendering ([`render`]).
//!
//! All arithmetic is exact: weights and states are integers or arbitrary
//! precision rationals, so fixed points are detected by equality, never by
//! tolerance.
//!
//! ```
//! use cogmap::{crisp::fcm_infer, fixtures::fixture, Classification};
//! let model = fixture("child-labor").unwrap();
//! let e = model.signed_matrix().unwrap();
//! let pattern = fcm_infer(&e, &[1, 0, 0, 0, 0, 0, 0]).unwrap();
//! assert_eq!(pattern.classification, Classification::FixedPoint);
//! assert_eq!(pattern.states[0], vec![1, 0, 0, 1, 1, 1, 0]);
//! ```

#![warn(missing_docs)]

pub mod combine;
pub mod crisp;
pub mod dispatch;
pub mod fixtures;
pub mod fuzzy;
pub mod matrix;
pub mod model;
pub mod neutro;
pub mod neutrosophic;
pub mod pattern;
pub mod render;
pub mod survey;

pub use matrix::Matrix;
pub use model::{load_model, save_model, ConceptSpace, Model, ModelError, ModelKind};
pub use neutro::{NeutroValue, Rational, TriState};
pub use pattern::{Classification, EngineError, HiddenPattern, Pair, PairRaw, Side};

/// The guide's chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/neutrosophic-values.md")]
    struct NeutrosophicValues;
    #[doc = include_str!("../../../book/src/crisp-maps.md")]
    struct CrispMaps;
    #[doc = include_str!("../../../book/src/neutrosophic-maps.md")]
    struct NeutrosophicMaps;
    #[doc = include_str!("../../../book/src/max-min-systems.md")]
    struct MaxMinSystems;
    #[doc = include_str!("../../../book/src/combining.md")]
    struct Combining;
    #[doc = include_str!("../../../book/src/models.md")]
    struct Models;
    #[doc = include_str!("../../../book/src/traces.md")]
    struct Traces;
}
