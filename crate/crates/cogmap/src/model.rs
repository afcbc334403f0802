//! Concept spaces, model documents, validation and serialization.
//!
//! A model file is one JSON document:
//!
//! ```json
//! {
//!   "kind": "ncm",
//!   "row_concepts": ["C1", "C2"],
//!   "matrix": [[0, "I"], [-1, 0]],
//!   "meta": {"description": "two-node example"}
//! }
//! ```
//!
//! `col_concepts` is optional (omitted means the column space equals the row
//! space), `combined` flags matrices obtained by summing several experts'
//! maps, and `meta` is free-form. Entries are JSON numbers or scalar strings
//! in the [`NeutroValue`] grammar; their original spelling is preserved so
//! that saving a loaded model reproduces every entry string exactly.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::neutro::{NeutroValue, Rational};

/// The six kinds of map a model file may describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    /// Fuzzy cognitive map: square, signed `{-1, 0, 1}` edges, zero diagonal.
    Fcm,
    /// Fuzzy relational map: rectangular domain × range, signed edges.
    Frm,
    /// Neutrosophic cognitive map: square, edges in `{-1, 0, 1, I}`, zero diagonal.
    Ncm,
    /// Neutrosophic relational map: rectangular, edges in `{-1, 0, 1, I}`.
    Nrm,
    /// Fuzzy matrix with membership grades in `[0, 1]`.
    Fuzzy,
    /// Fuzzy neutrosophic matrix with entries `a + bI`, `a, b ∈ [0, 1]`.
    FuzzyNeutrosophic,
}

impl ModelKind {
    /// Every kind, in declaration order.
    pub const ALL: [ModelKind; 6] = [
        ModelKind::Fcm,
        ModelKind::Frm,
        ModelKind::Ncm,
        ModelKind::Nrm,
        ModelKind::Fuzzy,
        ModelKind::FuzzyNeutrosophic,
    ];

    /// The name used in model files.
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Fcm => "fcm",
            ModelKind::Frm => "frm",
            ModelKind::Ncm => "ncm",
            ModelKind::Nrm => "nrm",
            ModelKind::Fuzzy => "fuzzy",
            ModelKind::FuzzyNeutrosophic => "fuzzy-neutrosophic",
        }
    }

    /// Cognitive maps are square with a single concept space and no
    /// self-loops.
    pub fn is_causal_square(self) -> bool {
        matches!(self, ModelKind::Fcm | ModelKind::Ncm)
    }

    /// Kinds whose entries may carry the indeterminate `I`.
    pub fn is_neutrosophic(self) -> bool {
        matches!(
            self,
            ModelKind::Ncm | ModelKind::Nrm | ModelKind::FuzzyNeutrosophic
        )
    }

    /// Kinds whose entries are membership grades.
    pub fn is_fuzzy(self) -> bool {
        matches!(self, ModelKind::Fuzzy | ModelKind::FuzzyNeutrosophic)
    }

    fn alphabet(self, combined: bool) -> &'static str {
        match (self, combined) {
            (ModelKind::Fcm | ModelKind::Frm, false) => "-1, 0, 1",
            (ModelKind::Fcm | ModelKind::Frm, true) => "integers",
            (ModelKind::Ncm | ModelKind::Nrm, false) => "-1, 0, 1, I",
            (ModelKind::Ncm | ModelKind::Nrm, true) => "a+bI with integer a, b",
            (ModelKind::Fuzzy, _) => "rationals in [0, 1]",
            (ModelKind::FuzzyNeutrosophic, _) => "a+bI with a, b in [0, 1]",
        }
    }

    fn admits(self, combined: bool, v: &NeutroValue) -> bool {
        let crisp = |v: &NeutroValue| {
            v.is_real() && v.real().is_integer() && v.real().numer().magnitude() <= &1u32.into()
        };
        match (self, combined) {
            (ModelKind::Fcm | ModelKind::Frm, false) => crisp(v),
            (ModelKind::Fcm | ModelKind::Frm, true) => {
                v.is_real() && v.real().is_integer() && v.real().to_integer().to_i64().is_some()
            }
            (ModelKind::Ncm | ModelKind::Nrm, false) => crisp(v) || *v == NeutroValue::i(),
            (ModelKind::Ncm | ModelKind::Nrm, true) => v.has_integer_components(),
            (ModelKind::Fuzzy, _) => v.is_real() && v.in_unit_closure(),
            (ModelKind::FuzzyNeutrosophic, _) => v.in_unit_closure(),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ModelError::Schema(format!("unknown kind `{s}`")))
    }
}

/// Why a model document or model could not be accepted.
///
/// Matrix coordinates are 1-based, as in the printed matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    /// The document is not well-formed JSON or lacks required fields.
    #[error("schema violation at line {line}, column {column}: {message}")]
    Syntax {
        /// 1-based line in the document.
        line: usize,
        /// 1-based column in the document.
        column: usize,
        /// Parser message.
        message: String,
    },
    /// A structural rule (labels, kind, concept spaces) is broken.
    #[error("schema violation: {0}")]
    Schema(String),
    /// The matrix has the wrong number of rows.
    #[error("dimension mismatch: {found} matrix rows for {expected} row concepts")]
    RowCount {
        /// Number of row concepts.
        expected: usize,
        /// Number of matrix rows.
        found: usize,
    },
    /// A matrix row has the wrong number of entries.
    #[error("dimension mismatch at row {row}: expected {expected} entries, found {found}")]
    RowLength {
        /// 1-based row.
        row: usize,
        /// Number of column concepts.
        expected: usize,
        /// Entries in this row.
        found: usize,
    },
    /// An entry is neither a number nor a scalar string.
    #[error("entry at row {row}, column {col} is not a valid scalar: {text}")]
    Entry {
        /// 1-based row.
        row: usize,
        /// 1-based column.
        col: usize,
        /// The offending JSON text.
        text: String,
    },
    /// A cognitive map has a self-loop.
    #[error("nonzero diagonal entry {value} at row {row}, column {col}")]
    Diagonal {
        /// 1-based row.
        row: usize,
        /// 1-based column (equal to `row`).
        col: usize,
        /// The entry.
        value: String,
    },
    /// An entry lies outside the kind's value set.
    #[error("entry {value} at row {row}, column {col} is outside the {kind} alphabet ({allowed})")]
    Alphabet {
        /// 1-based row.
        row: usize,
        /// 1-based column.
        col: usize,
        /// The entry.
        value: String,
        /// The model kind.
        kind: ModelKind,
        /// Human-readable description of the admissible values.
        allowed: &'static str,
    },
}

/// An ordered list of unique, non-empty node labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConceptSpace {
    labels: Vec<String>,
}

impl ConceptSpace {
    /// Validates and wraps a label list.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, ModelError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(ModelError::Schema(
                "a concept space needs at least one label".into(),
            ));
        }
        let mut seen = HashSet::new();
        for (i, label) in labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(ModelError::Schema(format!("label {} is empty", i + 1)));
            }
            if !seen.insert(label.as_str()) {
                return Err(ModelError::Schema(format!("duplicate label `{label}`")));
            }
        }
        Ok(Self { labels })
    }

    /// Labels `prefix1 … prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self, ModelError> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    /// The labels in order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of concepts.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a concept space is never empty.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// 0-based position of `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Label at 0-based position `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDocument {
    kind: String,
    row_concepts: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_concepts: Option<Vec<String>>,
    matrix: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    combined: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Value>,
}

/// A validated map: kind, concept spaces and matrix.
///
/// Models are immutable once built and can be shared freely between
/// inference workers.
#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    kind: ModelKind,
    rows: ConceptSpace,
    cols: ConceptSpace,
    explicit_cols: bool,
    values: Matrix<NeutroValue>,
    cells: Matrix<Value>,
    combined: Option<bool>,
    meta: Option<Value>,
}

impl Model {
    /// Builds and validates a model from parsed values.
    ///
    /// `cols` of `None` means the column space equals the row space. Entry
    /// spellings are generated canonically (numbers for real values that
    /// render as decimals, strings otherwise).
    pub fn new(
        kind: ModelKind,
        rows: ConceptSpace,
        cols: Option<ConceptSpace>,
        values: Matrix<NeutroValue>,
        combined: bool,
    ) -> Result<Self, ModelError> {
        let cells = values.map(canonical_cell);
        let explicit_cols = cols.is_some();
        let cols = cols.unwrap_or_else(|| rows.clone());
        let model = Self {
            kind,
            rows,
            cols,
            explicit_cols,
            values,
            cells,
            combined: combined.then_some(true),
            meta: None,
        };
        model.validate()?;
        Ok(model)
    }

    /// Attaches free-form metadata.
    pub fn with_meta(mut self, meta: Value) -> Self {
        self.meta = Some(meta);
        self
    }

    /// The model kind.
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Row (domain) concepts.
    pub fn row_space(&self) -> &ConceptSpace {
        &self.rows
    }

    /// Column (range) concepts; equal to the row space for square kinds.
    pub fn col_space(&self) -> &ConceptSpace {
        &self.cols
    }

    /// True for matrices produced by summing several maps.
    pub fn is_combined(&self) -> bool {
        self.combined.unwrap_or(false)
    }

    /// Free-form metadata, if any.
    pub fn meta(&self) -> Option<&Value> {
        self.meta.as_ref()
    }

    /// `(rows, cols)` of the matrix.
    pub fn shape(&self) -> (usize, usize) {
        self.values.shape()
    }

    /// The matrix as neutrosophic values (every kind embeds into these).
    pub fn values(&self) -> &Matrix<NeutroValue> {
        &self.values
    }

    /// The matrix as integers; `None` unless every entry is a real integer.
    pub fn signed_matrix(&self) -> Option<Matrix<i64>> {
        let rows = self
            .values
            .iter_rows()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        (v.is_real() && v.real().is_integer())
                            .then(|| v.real().to_integer().to_i64())
                            .flatten()
                    })
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Matrix::from_rows(rows).ok()
    }

    /// The matrix as real rationals; `None` if any entry carries `I`.
    pub fn real_matrix(&self) -> Option<Matrix<Rational>> {
        self.values
            .iter_rows()
            .all(|row| row.iter().all(NeutroValue::is_real))
            .then(|| self.values.map(|v| v.real().clone()))
    }

    /// Parses and validates a model document.
    ///
    /// ```
    /// let doc = r#"{"kind": "fcm", "row_concepts": ["A", "B"], "matrix": [[0, 1], [-1, 0]]}"#;
    /// let model = cogmap::load_model(doc).unwrap();
    /// assert_eq!(model.shape(), (2, 2));
    ///
    /// let bad = r#"{"kind": "fcm", "row_concepts": ["A", "B"], "matrix": [[1, 1], [-1, 0]]}"#;
    /// let err = cogmap::load_model(bad).unwrap_err();
    /// assert_eq!(err.to_string(), "nonzero diagonal entry 1 at row 1, column 1");
    /// ```
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let doc: ModelDocument = serde_json::from_str(text).map_err(|e| ModelError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let kind: ModelKind = doc.kind.parse()?;
        let rows = ConceptSpace::new(doc.row_concepts)?;
        let explicit_cols = doc.col_concepts.is_some();
        let cols = match doc.col_concepts {
            Some(labels) => ConceptSpace::new(labels)?,
            None => rows.clone(),
        };
        if doc.matrix.len() != rows.len() {
            return Err(ModelError::RowCount {
                expected: rows.len(),
                found: doc.matrix.len(),
            });
        }
        for (i, row) in doc.matrix.iter().enumerate() {
            if row.len() != cols.len() {
                return Err(ModelError::RowLength {
                    row: i + 1,
                    expected: cols.len(),
                    found: row.len(),
                });
            }
        }
        let mut parsed = Vec::with_capacity(rows.len());
        for (i, row) in doc.matrix.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, cell) in row.iter().enumerate() {
                out.push(parse_cell(cell).ok_or_else(|| ModelError::Entry {
                    row: i + 1,
                    col: j + 1,
                    text: cell.to_string(),
                })?);
            }
            parsed.push(out);
        }
        let values = Matrix::from_rows(parsed).expect("row lengths checked above");
        let cells = Matrix::from_rows(doc.matrix).expect("row lengths checked above");
        let model = Self {
            kind,
            rows,
            cols,
            explicit_cols,
            values,
            cells,
            combined: doc.combined,
            meta: doc.meta,
        };
        model.validate()?;
        Ok(model)
    }

    /// Serializes the model; one matrix row per line.
    pub fn to_json(&self) -> String {
        let doc = ModelDocument {
            kind: self.kind.name().to_string(),
            row_concepts: self.rows.labels.clone(),
            col_concepts: self.explicit_cols.then(|| self.cols.labels.clone()),
            matrix: self.cells.to_rows(),
            combined: self.combined,
            meta: self.meta.clone(),
        };
        let mut out = String::from("{\n");
        out += &format!("  \"kind\": {},\n", compact(&doc.kind));
        out += &format!("  \"row_concepts\": {},\n", compact(&doc.row_concepts));
        if let Some(cols) = &doc.col_concepts {
            out += &format!("  \"col_concepts\": {},\n", compact(cols));
        }
        out += "  \"matrix\": [\n";
        let rendered: Vec<String> = doc
            .matrix
            .iter()
            .map(|row| format!("    {}", compact(row)))
            .collect();
        out += &rendered.join(",\n");
        out += "\n  ]";
        if let Some(combined) = doc.combined {
            out += &format!(",\n  \"combined\": {combined}");
        }
        if let Some(meta) = &doc.meta {
            let pretty = serde_json::to_string_pretty(meta).expect("JSON values serialize");
            out += &format!(",\n  \"meta\": {}", pretty.replace('\n', "\n  "));
        }
        out += "\n}\n";
        out
    }

    fn validate(&self) -> Result<(), ModelError> {
        let (n, m) = self.values.shape();
        if n != self.rows.len() {
            return Err(ModelError::RowCount {
                expected: self.rows.len(),
                found: n,
            });
        }
        if m != self.cols.len() {
            return Err(ModelError::RowLength {
                row: 1,
                expected: self.cols.len(),
                found: m,
            });
        }
        if self.kind.is_causal_square() && self.cols != self.rows {
            return Err(ModelError::Schema(format!(
                "{} models use one concept space; col_concepts must equal row_concepts",
                self.kind
            )));
        }
        let combined = self.is_combined();
        for i in 0..n {
            for j in 0..m {
                let v = &self.values[(i, j)];
                if !self.kind.admits(combined, v) {
                    return Err(ModelError::Alphabet {
                        row: i + 1,
                        col: j + 1,
                        value: v.to_string(),
                        kind: self.kind,
                        allowed: self.kind.alphabet(combined),
                    });
                }
                if self.kind.is_causal_square() && i == j && !v.is_zero() {
                    return Err(ModelError::Diagonal {
                        row: i + 1,
                        col: j + 1,
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Parses and validates a model document (see [`Model::from_json`]).
pub fn load_model(document: &str) -> Result<Model, ModelError> {
    Model::from_json(document)
}

/// Serializes a model (see [`Model::to_json`]).
pub fn save_model(model: &Model) -> String {
    model.to_json()
}

fn parse_cell(cell: &Value) -> Option<NeutroValue> {
    match cell {
        // With arbitrary precision enabled a number keeps its source digits.
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn canonical_cell(v: &NeutroValue) -> Value {
    let text = v.to_string();
    if v.is_real() && !text.contains('/') {
        if let Ok(n) = serde_json::Number::from_str(&text) {
            return Value::Number(n);
        }
    }
    Value::String(text)
}

fn compact<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("JSON values serialize")
}
