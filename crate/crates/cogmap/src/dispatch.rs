//! One entry point for every engine: check that the engine fits the model,
//! run it, and render the result as a [`Trace`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::crisp::{fcm_infer_capped, frm_infer_capped};
use crate::fuzzy::{fuzzy_infer_capped, value_set, FuzzyPattern, Mode};
use crate::model::{Model, ModelKind};
use crate::neutro::{NeutroValue, Rational, TriState};
use crate::neutrosophic::{ncm_infer_capped, nrm_infer_capped};
use crate::pattern::{state_bound, EngineError, Side};
use crate::render::{cells, Trace};

/// The inference engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Fuzzy cognitive map (crisp states, signed square matrix).
    Fcm,
    /// Fuzzy relational map (crisp state pairs, rectangular matrix).
    Frm,
    /// Neutrosophic cognitive map (`{0,1,I}` states).
    Ncm,
    /// Neutrosophic relational map.
    Nrm,
    /// Max-min fuzzy dynamical system.
    Fuzzy,
    /// Max-min fuzzy-neutrosophic dynamical system.
    NFuzzy,
}

impl Engine {
    /// Every engine, in documentation order.
    pub const ALL: [Engine; 6] = [
        Engine::Fcm,
        Engine::Frm,
        Engine::Ncm,
        Engine::Nrm,
        Engine::Fuzzy,
        Engine::NFuzzy,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Engine::Fcm => "fcm",
            Engine::Frm => "frm",
            Engine::Ncm => "ncm",
            Engine::Nrm => "nrm",
            Engine::Fuzzy => "fuzzy",
            Engine::NFuzzy => "nfuzzy",
        }
    }

    /// The model kind this engine runs on.
    pub fn model_kind(self) -> ModelKind {
        match self {
            Engine::Fcm => ModelKind::Fcm,
            Engine::Frm => ModelKind::Frm,
            Engine::Ncm => ModelKind::Ncm,
            Engine::Nrm => ModelKind::Nrm,
            Engine::Fuzzy => ModelKind::Fuzzy,
            Engine::NFuzzy => ModelKind::FuzzyNeutrosophic,
        }
    }

    /// The engine that runs models of `kind`.
    pub fn for_kind(kind: ModelKind) -> Engine {
        Engine::ALL
            .into_iter()
            .find(|e| e.model_kind() == kind)
            .expect("every kind has an engine")
    }

    /// True when seeds are fuzzy value lists rather than sets of ON nodes.
    pub fn takes_values(self) -> bool {
        matches!(self, Engine::Fuzzy | Engine::NFuzzy)
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine {s:?}"))
    }
}

/// The initial state of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    /// `{0,1}` vector for the threshold engines.
    Crisp(Vec<u8>),
    /// Value vector for the max-min engines.
    Values(Vec<NeutroValue>),
}

/// Everything besides the model that a run needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRequest {
    /// Initial state.
    pub seed: Seed,
    /// Side the seed lives on (relational and bipartite runs).
    pub side: Side,
    /// Force monopartite or bipartite max-min iteration; by default square
    /// models iterate forward only and rectangular ones alternate.
    pub bipartite: Option<bool>,
    /// Overrides the engine's default step cap.
    pub max_iterations: Option<usize>,
}

impl RunRequest {
    /// A domain-side request with default settings.
    pub fn new(seed: Seed) -> Self {
        RunRequest {
            seed,
            side: Side::Domain,
            bipartite: None,
            max_iterations: None,
        }
    }
}

/// Why a run was refused or failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    /// The engine does not operate on this kind of model.
    #[error("engine {engine} cannot run a {kind} model (use {expected})")]
    Incompatible {
        /// Requested engine.
        engine: Engine,
        /// Model kind.
        kind: ModelKind,
        /// Engine matching the model.
        expected: Engine,
    },
    /// The seed form does not suit the engine.
    #[error("engine {engine} expects {expected}")]
    SeedForm {
        /// Requested engine.
        engine: Engine,
        /// What was expected.
        expected: &'static str,
    },
    /// The engine rejected the request.
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Runs `engine` on `model` and renders the trace.
///
/// Engines must match the model kind exactly; combined models run on the
/// engine of their kind.
///
/// ```
/// use cogmap::{dispatch::{infer, Engine, RunRequest, Seed}, fixtures::fixture, Classification};
/// let model = fixture("child-labor-ncm").unwrap();
/// let request = RunRequest::new(Seed::Crisp(vec![1, 0, 0, 0, 0, 0, 0]));
/// let trace = infer(&model, "child-labor-ncm", Engine::Ncm, &request).unwrap();
/// assert_eq!(trace.classification, Classification::FixedPoint);
/// ```
pub fn infer(
    model: &Model,
    model_name: &str,
    engine: Engine,
    request: &RunRequest,
) -> Result<Trace, RunError> {
    let expected = Engine::for_kind(model.kind());
    if engine != expected {
        return Err(RunError::Incompatible {
            engine,
            kind: model.kind(),
            expected,
        });
    }
    let (rows, cols) = model.shape();
    let cap = |default: usize| request.max_iterations.unwrap_or(default);
    let side = request.side;
    let trace = match (engine, &request.seed) {
        (Engine::Fcm, Seed::Crisp(seed)) => {
            let e = model.signed_matrix().expect("fcm entries are integers");
            let p = fcm_infer_capped(&e, seed, cap(state_bound(2, rows)))?;
            Trace::from_pattern(engine.name(), model_name, cells(seed), None, &p)
        }
        (Engine::Frm, Seed::Crisp(seed)) => {
            let e = model.signed_matrix().expect("frm entries are integers");
            let p = frm_infer_capped(&e, seed, side, cap(state_bound(2, rows + cols)))?;
            Trace::from_pattern(engine.name(), model_name, cells(seed), Some(side), &p)
        }
        (Engine::Ncm, Seed::Crisp(seed)) => {
            let seed = tri_seed(seed)?;
            let p = ncm_infer_capped(model.values(), &seed, cap(state_bound(3, rows)))?;
            Trace::from_pattern(engine.name(), model_name, cells(&seed), None, &p)
        }
        (Engine::Nrm, Seed::Crisp(seed)) => {
            let seed = tri_seed(seed)?;
            let p = nrm_infer_capped(
                model.values(),
                &seed,
                side,
                cap(state_bound(3, rows + cols)),
            )?;
            Trace::from_pattern(engine.name(), model_name, cells(&seed), Some(side), &p)
        }
        (Engine::Fuzzy, Seed::Values(seed)) => {
            let m = model.real_matrix().expect("fuzzy entries are real");
            let seed = real_seed(seed)?;
            let mode = mode_for(request, rows, cols);
            let len = mode_len(mode, rows, cols);
            let default = state_bound(value_set(&m, &seed).len() + 1, len);
            let p = fuzzy_infer_capped(&m, &seed, mode, cap(default))?;
            fuzzy_trace(engine, model_name, cells(&seed), mode, &p)
        }
        (Engine::NFuzzy, Seed::Values(seed)) => {
            let m = model.values();
            let mode = mode_for(request, rows, cols);
            let len = mode_len(mode, rows, cols);
            let default = state_bound(value_set(m, seed).len() + 1, len);
            let p = fuzzy_infer_capped(m, seed, mode, cap(default))?;
            fuzzy_trace(engine, model_name, cells(seed), mode, &p)
        }
        (Engine::Fuzzy | Engine::NFuzzy, Seed::Crisp(_)) => {
            return Err(RunError::SeedForm {
                engine,
                expected: "a value vector",
            })
        }
        (_, Seed::Values(_)) => {
            return Err(RunError::SeedForm {
                engine,
                expected: "a set of ON nodes",
            })
        }
    };
    Ok(trace)
}

fn mode_for(request: &RunRequest, rows: usize, cols: usize) -> Mode {
    match request.bipartite {
        Some(true) => Mode::Bipartite(request.side),
        Some(false) => Mode::Monopartite,
        None if rows == cols => Mode::Monopartite,
        None => Mode::Bipartite(request.side),
    }
}

fn mode_len(mode: Mode, rows: usize, cols: usize) -> usize {
    match mode {
        Mode::Monopartite => rows,
        Mode::Bipartite(_) => rows + cols,
    }
}

fn fuzzy_trace<T>(
    engine: Engine,
    model_name: &str,
    seed: Vec<crate::render::Cell>,
    mode: Mode,
    pattern: &FuzzyPattern<T>,
) -> Trace
where
    T: crate::render::ToCell,
{
    match (pattern, mode) {
        (FuzzyPattern::Monopartite(p), _) => {
            Trace::from_pattern(engine.name(), model_name, seed, None, p)
        }
        (FuzzyPattern::Bipartite(p), Mode::Bipartite(side)) => {
            Trace::from_pattern(engine.name(), model_name, seed, Some(side), p)
        }
        (FuzzyPattern::Bipartite(p), Mode::Monopartite) => {
            Trace::from_pattern(engine.name(), model_name, seed, None, p)
        }
    }
}

fn tri_seed(seed: &[u8]) -> Result<Vec<TriState>, EngineError> {
    seed.iter()
        .enumerate()
        .map(|(i, &b)| TriState::from_bit(b).ok_or(EngineError::NonCrispSeed { index: i + 1 }))
        .collect()
}

fn real_seed(seed: &[NeutroValue]) -> Result<Vec<Rational>, EngineError> {
    seed.iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_real() {
                Ok(v.real().clone())
            } else {
                Err(EngineError::OutOfRange {
                    index: i + 1,
                    value: v.to_string(),
                    allowed: "[0, 1]",
                })
            }
        })
        .collect()
}
