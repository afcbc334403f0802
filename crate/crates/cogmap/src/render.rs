//! Engine-independent views of a run: the trace document emitted as JSON and
//! the arrow-notation text shown to people.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::neutro::{NeutroValue, Rational, TriState};
use crate::pattern::{Classification, HiddenPattern, Pair, PairRaw, Side};

/// One rendered vector component: integers (including crisp and tri-state
/// 0 and 1) are numbers, everything else is written in the scalar grammar
/// (`I`, `0.8`, `2+I`, …).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    /// Crisp states and integer raw vectors.
    Int(i64),
    /// Tri-state, fuzzy and neutrosophic values.
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(n) => write!(f, "{n}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

/// Conversion of engine values into [`Cell`]s.
pub trait ToCell {
    /// The rendered component.
    fn to_cell(&self) -> Cell;
}

impl ToCell for u8 {
    fn to_cell(&self) -> Cell {
        Cell::Int(i64::from(*self))
    }
}

impl ToCell for i64 {
    fn to_cell(&self) -> Cell {
        Cell::Int(*self)
    }
}

impl ToCell for TriState {
    fn to_cell(&self) -> Cell {
        NeutroValue::from(*self).to_cell()
    }
}

impl ToCell for NeutroValue {
    fn to_cell(&self) -> Cell {
        match self.is_real().then(|| integer(self.real())).flatten() {
            Some(n) => Cell::Int(n),
            None => Cell::Text(self.to_string()),
        }
    }
}

impl ToCell for Rational {
    fn to_cell(&self) -> Cell {
        match integer(self) {
            Some(n) => Cell::Int(n),
            None => Cell::Text(crate::neutro::format_rational(self)),
        }
    }
}

fn integer(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

/// A rendered state: a single vector, or a (domain, range) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum StateView {
    /// Square maps.
    Vector(Vec<Cell>),
    /// Relational maps and bipartite fuzzy systems.
    Pair {
        /// Row-concept side.
        domain: Vec<Cell>,
        /// Column-concept side.
        range: Vec<Cell>,
    },
}

/// Rendering of whole states and raw images.
pub trait ToView {
    /// The rendered state.
    fn to_view(&self) -> StateView;
}

impl<T: ToCell> ToView for Vec<T> {
    fn to_view(&self) -> StateView {
        StateView::Vector(cells(self))
    }
}

impl<T: ToCell> ToView for Pair<T> {
    fn to_view(&self) -> StateView {
        StateView::Pair {
            domain: cells(&self.domain),
            range: cells(&self.range),
        }
    }
}

impl<T: ToCell> ToView for PairRaw<T> {
    fn to_view(&self) -> StateView {
        StateView::Pair {
            domain: cells(&self.domain),
            range: cells(&self.range),
        }
    }
}

/// Renders a slice of values.
pub fn cells<T: ToCell>(values: &[T]) -> Vec<Cell> {
    values.iter().map(ToCell::to_cell).collect()
}

/// The trace document of one inference run.
///
/// `states[0]` is the seed state and `states[k + 1]` the image of
/// `states[k]`; `raw[k]` (when the engine thresholds) is the pre-threshold
/// vector behind `states[k + 1]`. `recurring` lists the fixed point or
/// the limit cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    /// Engine name.
    pub engine: String,
    /// Model name or path, as given.
    pub model: String,
    /// The seed vector.
    pub seed: Vec<Cell>,
    /// Seeded side for relational and bipartite runs.
    pub side: Option<Side>,
    /// Fixed point or limit cycle.
    pub classification: Classification,
    /// Number of recurring states.
    pub period: usize,
    /// Steps taken until the first repeat.
    pub iterations: usize,
    /// Every visited state, seed first.
    pub states: Vec<StateView>,
    /// Pre-threshold vectors, one per step (empty for max-min engines).
    pub raw: Vec<StateView>,
    /// The recurring states.
    pub recurring: Vec<StateView>,
}

impl Trace {
    /// Builds a trace from a hidden pattern.
    pub fn from_pattern<S: ToView, R: RawView>(
        engine: &str,
        model: &str,
        seed: Vec<Cell>,
        side: Option<Side>,
        pattern: &HiddenPattern<S, R>,
    ) -> Self {
        Trace {
            engine: engine.to_string(),
            model: model.to_string(),
            seed,
            side,
            classification: pattern.classification,
            period: pattern.period,
            iterations: pattern.iterations(),
            states: pattern.trace.iter().map(ToView::to_view).collect(),
            raw: pattern.raw.iter().filter_map(RawView::raw_view).collect(),
            recurring: pattern.states.iter().map(ToView::to_view).collect(),
        }
    }

    /// Pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces serialize") + "\n"
    }

    /// Arrow-notation text: one line per step, `raw → state`.
    ///
    /// ```
    /// use cogmap::{dispatch::{infer, Engine, RunRequest, Seed}, fixtures::fixture};
    /// let model = fixture("socio-economic").unwrap();
    /// let request = RunRequest::new(Seed::Crisp(vec![1, 0, 0, 0, 0]));
    /// let trace = infer(&model, "socio-economic", Engine::Fcm, &request).unwrap();
    /// let text = trace.to_human();
    /// assert!(text.contains("step 1: (0 0 -1 0 1) → (1 0 0 0 1)"));
    /// assert!(text.contains("LIMIT_CYCLE, period 4"));
    /// ```
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let side = self.side.map(|s| format!(" on {s}")).unwrap_or_default();
        let _ = writeln!(out, "{} on {}", self.engine, self.model);
        let _ = writeln!(out, "seed{side}: {}", vector(&self.seed));
        for (k, state) in self.states.iter().enumerate().skip(1) {
            let line = match self.raw.get(k - 1) {
                Some(raw) => arrow(raw, state, self.side),
                None => plain(state),
            };
            let _ = writeln!(out, "step {k}: {line}");
        }
        let _ = writeln!(
            out,
            "{}, period {} after {} iterations",
            self.classification, self.period, self.iterations
        );
        for state in &self.recurring {
            let _ = writeln!(out, "  {}", plain(state));
        }
        out
    }
}

/// Raw vectors that have a rendering; max-min engines record `()`.
pub trait RawView {
    /// The rendered raw image, if the engine produces one.
    fn raw_view(&self) -> Option<StateView>;
}

impl RawView for () {
    fn raw_view(&self) -> Option<StateView> {
        None
    }
}

impl<T: ToView> RawView for T {
    fn raw_view(&self) -> Option<StateView> {
        Some(self.to_view())
    }
}

/// One row of an enumeration table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    /// Label of the node switched on.
    pub seed: String,
    /// Seeded side for relational models.
    pub side: Option<Side>,
    /// Fixed point or limit cycle.
    pub classification: Classification,
    /// Number of recurring states.
    pub period: usize,
    /// Steps until the first repeat.
    pub iterations: usize,
    /// The recurring states.
    pub recurring: Vec<StateView>,
}

/// Renders an enumeration table as aligned text.
pub fn survey_to_human(rows: &[SurveyRow]) -> String {
    let width = rows.iter().map(|r| r.seed.len()).max().unwrap_or(4).max(4);
    let mut out = format!(
        "{:<width$}  {:<6}  {:<11}  {:>6}  recurring\n",
        "seed", "side", "class", "period"
    );
    for row in rows {
        let side = row
            .side
            .map(|s| s.to_string())
            .unwrap_or_else(|| "-".into());
        let states: Vec<String> = row.recurring.iter().map(plain).collect();
        let _ = writeln!(
            out,
            "{:<width$}  {:<6}  {:<11}  {:>6}  {}",
            row.seed,
            side,
            row.classification.to_string(),
            row.period,
            states.join(" | ")
        );
    }
    out
}

fn vector(cells: &[Cell]) -> String {
    let parts: Vec<String> = cells.iter().map(Cell::to_string).collect();
    format!("({})", parts.join(" "))
}

fn plain(state: &StateView) -> String {
    match state {
        StateView::Vector(v) => vector(v),
        StateView::Pair { domain, range } => format!("{} ; {}", vector(domain), vector(range)),
    }
}

fn arrow(raw: &StateView, state: &StateView, side: Option<Side>) -> String {
    match (raw, state) {
        (StateView::Vector(r), StateView::Vector(s)) => format!("{} → {}", vector(r), vector(s)),
        (
            StateView::Pair {
                domain: rd,
                range: rr,
            },
            StateView::Pair { domain, range },
        ) => {
            let forward = format!("A·E = {} → {}", vector(rr), vector(range));
            let backward = format!("B·Eᵀ = {} → {}", vector(rd), vector(domain));
            match side {
                Some(Side::Range) => format!("{backward} ; {forward}"),
                _ => format!("{forward} ; {backward}"),
            }
        }
        _ => plain(state),
    }
}
