//! Enumeration of hidden patterns: switch on each node alone and record
//! where the map settles.

use num_traits::One;
use rayon::prelude::*;

use crate::dispatch::{infer, Engine, RunError, RunRequest, Seed};
use crate::model::{Model, ModelKind};
use crate::neutro::NeutroValue;
use crate::pattern::Side;
use crate::render::SurveyRow;

/// Runs every single-node seed of `model` through `engine`.
///
/// Square models contribute one row per concept. Relational models, and
/// rectangular fuzzy models, contribute one row per domain concept followed
/// by one row per range concept. Seeds run in parallel; the row order is
/// fixed regardless of scheduling.
///
/// ```
/// use cogmap::{dispatch::Engine, fixtures::fixture, survey::enumerate_hidden_patterns};
/// let model = fixture("socio-economic").unwrap();
/// let rows = enumerate_hidden_patterns(&model, Engine::Fcm).unwrap();
/// assert_eq!(rows.len(), 5);
/// assert_eq!(rows[0].period, 4);
/// ```
pub fn enumerate_hidden_patterns(
    model: &Model,
    engine: Engine,
) -> Result<Vec<SurveyRow>, RunError> {
    let (rows, cols) = model.shape();
    let relational = matches!(model.kind(), ModelKind::Frm | ModelKind::Nrm) || rows != cols;
    let sides = if relational {
        vec![(Some(Side::Domain), rows), (Some(Side::Range), cols)]
    } else {
        vec![(None, rows)]
    };
    let jobs: Vec<(Option<Side>, usize, usize)> = sides
        .into_iter()
        .flat_map(|(side, len)| (0..len).map(move |i| (side, i, len)))
        .collect();
    jobs.into_par_iter()
        .map(|(side, i, len)| {
            let seed = if engine.takes_values() {
                let mut v = vec![NeutroValue::from(0); len];
                v[i] = NeutroValue::one();
                Seed::Values(v)
            } else {
                let mut v = vec![0u8; len];
                v[i] = 1;
                Seed::Crisp(v)
            };
            let request = RunRequest {
                seed,
                side: side.unwrap_or(Side::Domain),
                bipartite: None,
                max_iterations: None,
            };
            let trace = infer(model, "", engine, &request)?;
            let label = match side {
                Some(Side::Range) => model.col_space().label(i),
                _ => model.row_space().label(i),
            };
            Ok(SurveyRow {
                seed: label.to_string(),
                side,
                classification: trace.classification,
                period: trace.period,
                iterations: trace.iterations,
                recurring: trace.recurring,
            })
        })
        .collect()
}
