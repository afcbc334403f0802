//! The multi-expert fuzzy dynamical system: average several experts' fuzzy
//! matrices, then iterate max-min composition until a state recurs.
//!
//! Every operation is generic over [`FuzzyScalar`], implemented for exact
//! rationals in `[0, 1]` and for fuzzy-neutrosophic values `a + bI` with
//! `a, b ∈ [0, 1]`. The neutrosophic variant uses the lexicographic order of
//! [`NeutroValue`] for `min` and `max`, so a matrix without indeterminate
//! parts behaves exactly like its real counterpart.
//!
//! There is no clamping: seeded nodes are free to relax below 1.

use std::collections::BTreeSet;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::crisp::{require_len, require_same_shape, require_square};
use crate::matrix::Matrix;
use crate::neutro::{NeutroValue, Rational};
use crate::pattern::{run_to_recurrence, state_bound, EngineError, HiddenPattern, Pair, Side};

/// A value a fuzzy state or fuzzy matrix entry may take.
pub trait FuzzyScalar: Clone + Ord + Hash + Zero + std::fmt::Display {
    /// Description of the admissible set, for error messages.
    const UNIT: &'static str;
    /// True when the value is admissible (`[0, 1]`, or its neutrosophic
    /// closure).
    fn in_unit(&self) -> bool;
    /// `self / n`, componentwise for neutrosophic values.
    fn divide(&self, n: usize) -> Self;
}

impl FuzzyScalar for Rational {
    const UNIT: &'static str = "[0, 1]";
    fn in_unit(&self) -> bool {
        *self >= Rational::zero() && *self <= Rational::one()
    }
    fn divide(&self, n: usize) -> Self {
        self / Rational::from_integer(BigInt::from(n))
    }
}

impl FuzzyScalar for NeutroValue {
    const UNIT: &'static str = "{a + bI : a, b ∈ [0, 1]}";
    fn in_unit(&self) -> bool {
        self.in_unit_closure()
    }
    fn divide(&self, n: usize) -> Self {
        self.scale(&Rational::new(BigInt::one(), BigInt::from(n)))
    }
}

/// How states travel through the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Square matrix, iterate `X ↦ X∘M` only.
    Monopartite,
    /// Rectangular matrix, alternate `B ↦ B∘M` and `A ↦ M∘Aᵀ`, starting from
    /// the given side.
    Bipartite(Side),
}

/// The outcome of [`fuzzy_infer`], shaped by the [`Mode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuzzyPattern<T> {
    /// Single state vector per step.
    Monopartite(HiddenPattern<Vec<T>>),
    /// (domain, range) pair per step.
    Bipartite(HiddenPattern<Pair<T>>),
}

impl<T> FuzzyPattern<T> {
    /// Fixed point or limit cycle.
    pub fn classification(&self) -> crate::Classification {
        match self {
            FuzzyPattern::Monopartite(p) => p.classification,
            FuzzyPattern::Bipartite(p) => p.classification,
        }
    }

    /// Number of recurring states.
    pub fn period(&self) -> usize {
        match self {
            FuzzyPattern::Monopartite(p) => p.period,
            FuzzyPattern::Bipartite(p) => p.period,
        }
    }
}

/// Entrywise arithmetic mean of several experts' fuzzy matrices.
///
/// ```
/// use cogmap::{fuzzy::average_experts, Matrix, neutro::parse_rational};
/// let a = Matrix::from_rows(vec![vec![parse_rational("0.2").unwrap()]]).unwrap();
/// let b = Matrix::from_rows(vec![vec![parse_rational("0.4").unwrap()]]).unwrap();
/// assert_eq!(average_experts(&[a, b]).unwrap()[(0, 0)], parse_rational("0.3").unwrap());
/// ```
pub fn average_experts<T: FuzzyScalar>(matrices: &[Matrix<T>]) -> Result<Matrix<T>, EngineError> {
    let first = require_same_shape(matrices)?;
    Ok(Matrix::from_fn(first.rows(), first.cols(), |i, j| {
        matrices
            .iter()
            .fold(T::zero(), |acc, m| acc + m[(i, j)].clone())
            .divide(matrices.len())
    }))
}

/// `B∘M`: component `k` is `maxᵢ min(bᵢ, mᵢₖ)`.
///
/// ```
/// use cogmap::{fuzzy::maxmin_forward, Matrix, neutro::parse_rational as r};
/// let m = Matrix::from_rows(vec![
///     vec![r("0.2").unwrap(), r("0.9").unwrap()],
///     vec![r("0.7").unwrap(), r("0.1").unwrap()],
/// ]).unwrap();
/// let b = [r("0.5").unwrap(), r("1").unwrap()];
/// let image = maxmin_forward(&b, &m).unwrap();
/// assert_eq!(image, vec![r("0.7").unwrap(), r("0.5").unwrap()]);
/// ```
pub fn maxmin_forward<T: FuzzyScalar>(b: &[T], m: &Matrix<T>) -> Result<Vec<T>, EngineError> {
    require_len("state", b.len(), m.rows())?;
    Ok(forward(b, m))
}

/// `M∘Aᵀ`: component `i` is `maxₖ min(mᵢₖ, aₖ)`.
pub fn maxmin_backward<T: FuzzyScalar>(m: &Matrix<T>, a: &[T]) -> Result<Vec<T>, EngineError> {
    require_len("state", a.len(), m.cols())?;
    Ok(backward(m, a))
}

/// Iterates max-min composition from `seed` until a state recurs.
///
/// In [`Mode::Monopartite`] the matrix must be square. In
/// [`Mode::Bipartite`] the seed lives on the given side, the other side
/// starts at zero, and each step maps across and back; the state is the
/// (domain, range) pair.
///
/// The default cap is `(|V| + 1)^len + 1`, where `V` is the set of values
/// in the matrix, the seed and zero; every iterate takes its components
/// from `V`, so the cap is never reached by a correct engine.
pub fn fuzzy_infer<T: FuzzyScalar>(
    m: &Matrix<T>,
    seed: &[T],
    mode: Mode,
) -> Result<FuzzyPattern<T>, EngineError> {
    let values = value_set(m, seed).len();
    let len = match mode {
        Mode::Monopartite => m.rows(),
        Mode::Bipartite(_) => m.rows() + m.cols(),
    };
    fuzzy_infer_capped(m, seed, mode, state_bound(values + 1, len))
}

/// [`fuzzy_infer`] with an explicit step cap.
pub fn fuzzy_infer_capped<T: FuzzyScalar>(
    m: &Matrix<T>,
    seed: &[T],
    mode: Mode,
    cap: usize,
) -> Result<FuzzyPattern<T>, EngineError> {
    check_seed(seed)?;
    match mode {
        Mode::Monopartite => {
            require_square(m)?;
            require_len("seed", seed.len(), m.rows())?;
            run_to_recurrence(seed.to_vec(), cap, |x| ((), forward(x, m)))
                .map(FuzzyPattern::Monopartite)
        }
        Mode::Bipartite(side) => {
            let (rows, cols) = m.shape();
            let start = match side {
                Side::Domain => {
                    require_len("seed", seed.len(), rows)?;
                    Pair {
                        domain: seed.to_vec(),
                        range: vec![T::zero(); cols],
                    }
                }
                Side::Range => {
                    require_len("seed", seed.len(), cols)?;
                    Pair {
                        domain: vec![T::zero(); rows],
                        range: seed.to_vec(),
                    }
                }
            };
            run_to_recurrence(start, cap, |pair| match side {
                Side::Domain => {
                    let range = forward(&pair.domain, m);
                    let domain = backward(m, &range);
                    ((), Pair { domain, range })
                }
                Side::Range => {
                    let domain = backward(m, &pair.range);
                    let range = forward(&domain, m);
                    ((), Pair { domain, range })
                }
            })
            .map(FuzzyPattern::Bipartite)
        }
    }
}

/// The values a run can ever produce: matrix entries, seed entries and 0.
pub fn value_set<T: FuzzyScalar>(m: &Matrix<T>, seed: &[T]) -> BTreeSet<T> {
    let mut set: BTreeSet<T> = m.iter_rows().flatten().cloned().collect();
    set.extend(seed.iter().cloned());
    set.insert(T::zero());
    set
}

fn check_seed<T: FuzzyScalar>(seed: &[T]) -> Result<(), EngineError> {
    match seed.iter().position(|x| !x.in_unit()) {
        Some(i) => Err(EngineError::OutOfRange {
            index: i + 1,
            value: seed[i].to_string(),
            allowed: T::UNIT,
        }),
        None => Ok(()),
    }
}

fn forward<T: FuzzyScalar>(b: &[T], m: &Matrix<T>) -> Vec<T> {
    (0..m.cols())
        .map(|k| {
            b.iter()
                .zip(m.iter_rows())
                .map(|(bi, row)| bi.min(&row[k]).clone())
                .max()
                .unwrap_or_else(T::zero)
        })
        .collect()
}

fn backward<T: FuzzyScalar>(m: &Matrix<T>, a: &[T]) -> Vec<T> {
    m.iter_rows()
        .map(|row| {
            row.iter()
                .zip(a)
                .map(|(mik, ak)| mik.min(ak).clone())
                .max()
                .unwrap_or_else(T::zero)
        })
        .collect()
}
