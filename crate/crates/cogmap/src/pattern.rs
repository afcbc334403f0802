//! Hidden patterns: the fixed point or limit cycle an iterated map settles
//! into, together with the full trace that led there.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

/// Equilibrium type of a hidden pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    /// A single state that maps to itself.
    FixedPoint,
    /// Two or more states visited in rotation.
    LimitCycle,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::FixedPoint => "FIXED_POINT",
            Classification::LimitCycle => "LIMIT_CYCLE",
        })
    }
}

/// Which side of a rectangular (relational) matrix a state vector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Row concepts; propagated through `E`.
    Domain,
    /// Column concepts; propagated through `Eᵀ`.
    Range,
}

impl Side {
    /// The other side.
    pub fn opposite(self) -> Side {
        match self {
            Side::Domain => Side::Range,
            Side::Range => Side::Domain,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Domain => "domain",
            Side::Range => "range",
        })
    }
}

/// A (domain, range) state pair of a relational map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair<T> {
    /// State of the row concepts.
    pub domain: Vec<T>,
    /// State of the column concepts.
    pub range: Vec<T>,
}

impl<T> Pair<T> {
    /// The vector on `side`.
    pub fn side(&self, side: Side) -> &[T] {
        match side {
            Side::Domain => &self.domain,
            Side::Range => &self.range,
        }
    }
}

/// The two raw (pre-threshold) vectors computed in one round of a
/// relational map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRaw<T> {
    /// Raw image on the domain side (`B·Eᵀ`).
    pub domain: Vec<T>,
    /// Raw image on the range side (`A·E`).
    pub range: Vec<T>,
}

/// The equilibrium reached from a seed, plus the full visited history.
///
/// `trace[0]` is the seed; `raw[k]` is the pre-threshold vector that
/// produced `trace[k + 1]`. The last trace entry repeats an earlier one,
/// and `states` is the recurring suffix (transient states are kept in the
/// trace only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiddenPattern<S, R = ()> {
    /// Fixed point or limit cycle.
    pub classification: Classification,
    /// Number of distinct recurring states (1 for a fixed point).
    pub period: usize,
    /// The recurring states, in visit order.
    pub states: Vec<S>,
    /// Every visited state, seed first, ending with the first repeat.
    pub trace: Vec<S>,
    /// Raw vectors, one per step.
    pub raw: Vec<R>,
}

impl<S, R> HiddenPattern<S, R> {
    /// Number of steps taken (`trace.len() - 1`).
    pub fn iterations(&self) -> usize {
        self.trace.len() - 1
    }

    /// The fixed point, if this pattern is one.
    pub fn fixed_point(&self) -> Option<&S> {
        match self.classification {
            Classification::FixedPoint => self.states.first(),
            Classification::LimitCycle => None,
        }
    }

    /// Visited states before the recurring part.
    pub fn transient(&self) -> &[S] {
        let recurring_from = self.trace.len() - 1 - self.period;
        &self.trace[..recurring_from]
    }
}

/// Why an inference request could not be served.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// A vector's length does not match the matrix.
    #[error("dimension mismatch: {what} has length {found}, expected {expected}")]
    Dimension {
        /// What was being matched.
        what: &'static str,
        /// Required length.
        expected: usize,
        /// Supplied length.
        found: usize,
    },
    /// A square matrix was required.
    #[error("matrix must be square, got {rows}×{cols}")]
    NotSquare {
        /// Row count.
        rows: usize,
        /// Column count.
        cols: usize,
    },
    /// The seed switches no node on.
    #[error("seed switches no node on")]
    EmptySeed,
    /// A crisp seed contains a value other than 0 or 1.
    #[error("seed entry {index} is not 0 or 1")]
    NonCrispSeed {
        /// 1-based position.
        index: usize,
    },
    /// A node index is outside the state vector.
    #[error("node index {index} out of range for {len} nodes")]
    IndexOutOfRange {
        /// 1-based index supplied.
        index: usize,
        /// Vector length.
        len: usize,
    },
    /// A value lies outside the admissible set.
    #[error("value {value} at position {index} is outside {allowed}")]
    OutOfRange {
        /// 1-based position.
        index: usize,
        /// Rendered value.
        value: String,
        /// Description of the admissible set.
        allowed: &'static str,
    },
    /// Matrices to combine have different shapes.
    #[error("shape mismatch: matrix {index} is {found:?}, expected {expected:?}")]
    ShapeMismatch {
        /// 1-based position in the input list.
        index: usize,
        /// Shape of the first matrix.
        expected: (usize, usize),
        /// Shape of the offending matrix.
        found: (usize, usize),
    },
    /// Nothing to combine.
    #[error("no matrices supplied")]
    NoMatrices,
    /// Averaging produced a value below zero.
    #[error("negative aggregate {value} at row {row}, column {col}")]
    NegativeAggregate {
        /// 1-based row.
        row: usize,
        /// 1-based column.
        col: usize,
        /// The summed entry.
        value: String,
    },
    /// The iteration cap was reached without a repeated state. The default
    /// caps exceed the number of distinct states, so this indicates either a
    /// lowered cap or an engine defect.
    #[error("no recurrence within {cap} steps")]
    IterationCap {
        /// The cap that was hit.
        cap: usize,
    },
}

/// `base^exp + 1`, saturating at `usize::MAX`.
pub(crate) fn state_bound(base: usize, exp: usize) -> usize {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .and_then(|n| n.checked_add(1))
        .unwrap_or(usize::MAX)
}

/// Iterates `step` from `seed` until a state repeats.
pub(crate) fn run_to_recurrence<S, R>(
    seed: S,
    cap: usize,
    mut step: impl FnMut(&S) -> (R, S),
) -> Result<HiddenPattern<S, R>, EngineError>
where
    S: Clone + Eq + Hash,
{
    let mut seen: HashMap<S, usize> = HashMap::new();
    seen.insert(seed.clone(), 0);
    let mut trace = vec![seed];
    let mut raw = Vec::new();
    loop {
        if raw.len() >= cap {
            return Err(EngineError::IterationCap { cap });
        }
        let (r, next) = step(trace.last().expect("trace starts non-empty"));
        raw.push(r);
        if let Some(&first) = seen.get(&next) {
            let states = trace[first..].to_vec();
            trace.push(next);
            let period = states.len();
            let classification = if period == 1 {
                Classification::FixedPoint
            } else {
                Classification::LimitCycle
            };
            return Ok(HiddenPattern {
                classification,
                period,
                states,
                trace,
                raw,
            });
        }
        seen.insert(next.clone(), trace.len());
        trace.push(next);
    }
}
