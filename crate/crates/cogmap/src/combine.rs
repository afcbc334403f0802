//! Aggregation of several experts' models into one: the entrywise sum
//! (a combined map) or the entrywise mean (a fuzzy map).

use std::fmt;

use thiserror::Error;

use crate::crisp::{fcm_average, frm_combine};
use crate::fuzzy::average_experts;
use crate::model::{Model, ModelError, ModelKind};
use crate::neutro::NeutroValue;
use crate::neutrosophic::ncm_combine;
use crate::pattern::EngineError;

/// How expert matrices are aggregated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CombineMode {
    /// Entrywise sum; the result is a combined model of the same kind.
    Sum,
    /// Entrywise mean; crisp inputs yield a fuzzy model.
    Average,
}

impl fmt::Display for CombineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CombineMode::Sum => "sum",
            CombineMode::Average => "average",
        })
    }
}

/// Why models could not be aggregated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombineError {
    /// Nothing to aggregate.
    #[error("no models supplied")]
    NoModels,
    /// Inputs of different kinds.
    #[error("model {index} is {found}, expected {expected}")]
    KindMismatch {
        /// 1-based input position.
        index: usize,
        /// Kind of the first input.
        expected: ModelKind,
        /// Kind of this input.
        found: ModelKind,
    },
    /// Inputs over different concepts.
    #[error("model {index} has different concepts from model 1")]
    ConceptMismatch {
        /// 1-based input position.
        index: usize,
    },
    /// The aggregation is not defined for this kind.
    #[error("cannot {mode} {kind} models")]
    Unsupported {
        /// Kind of the inputs.
        kind: ModelKind,
        /// Requested aggregation.
        mode: CombineMode,
    },
    /// Matrix-level failure (shape, negative aggregate).
    #[error(transparent)]
    Engine(#[from] EngineError),
    /// The aggregate is not a valid model.
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Aggregates models of one kind over the same concepts.
///
/// ```
/// use cogmap::{combine::{combine_models, CombineMode}, fixtures::fixture, ModelKind};
/// let experts: Vec<_> = (1..=10).map(|k| fixture(&format!("public-expert-{k}")).unwrap()).collect();
/// let mean = combine_models(&experts, CombineMode::Average).unwrap();
/// assert_eq!(mean.kind(), ModelKind::Fuzzy);
/// assert_eq!(mean.values(), fixture("public-combined-N").unwrap().values());
/// ```
pub fn combine_models(models: &[Model], mode: CombineMode) -> Result<Model, CombineError> {
    let first = models.first().ok_or(CombineError::NoModels)?;
    let kind = first.kind();
    for (k, m) in models.iter().enumerate() {
        if m.kind() != kind {
            return Err(CombineError::KindMismatch {
                index: k + 1,
                expected: kind,
                found: m.kind(),
            });
        }
        if m.row_space() != first.row_space() || m.col_space() != first.col_space() {
            return Err(CombineError::ConceptMismatch { index: k + 1 });
        }
    }
    let values: Vec<_> = models.iter().map(|m| m.values().clone()).collect();
    let (result_kind, matrix) = match (kind, mode) {
        (ModelKind::Fcm | ModelKind::Frm, CombineMode::Sum) => {
            let sum = frm_combine(&signed(models))?;
            (kind, sum.map(|&x| NeutroValue::from(x)))
        }
        (ModelKind::Ncm | ModelKind::Nrm, CombineMode::Sum) => (kind, ncm_combine(&values)?),
        (ModelKind::Fcm | ModelKind::Frm, CombineMode::Average) => {
            let mean = fcm_average(&signed(models))?;
            (
                ModelKind::Fuzzy,
                mean.map(|x| NeutroValue::from_real(x.clone())),
            )
        }
        (ModelKind::Fuzzy | ModelKind::FuzzyNeutrosophic, CombineMode::Average) => {
            (kind, average_experts(&values)?)
        }
        _ => return Err(CombineError::Unsupported { kind, mode }),
    };
    let (rows, cols) = (first.row_space().clone(), first.col_space().clone());
    let cols =
        (matches!(result_kind, ModelKind::Frm | ModelKind::Nrm) || rows != cols).then_some(cols);
    Ok(Model::new(
        result_kind,
        rows,
        cols,
        matrix,
        mode == CombineMode::Sum,
    )?)
}

fn signed(models: &[Model]) -> Vec<crate::Matrix<i64>> {
    models
        .iter()
        .map(|m| {
            m.signed_matrix()
                .expect("crisp models have integer entries")
        })
        .collect()
}
