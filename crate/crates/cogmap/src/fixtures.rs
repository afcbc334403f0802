//! The bundled catalog of worked example models.
//!
//! Every fixture is embedded at compile time, so the catalog is available
//! without touching the file system. Matrices that were reconstructed from
//! their iteration traces are listed in `ERRATA.md` next to the fixtures.

use crate::model::{load_model, Model, ModelError, ModelKind};

macro_rules! catalog {
    ($($name:literal,)*) => {
        /// Names and JSON documents of every bundled fixture, in catalog order.
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name, ".json"))),)*
        ];
    };
}

catalog! {
    "socio-economic",
    "teacher-student",
    "child-labor",
    "child-labor-ncm",
    "teacher-student-nrm",
    "teachers-frm-m1",
    "teachers-frm-m2",
    "educationalists-fuzzy",
    "educationalists-fuzzy-neutro",
    "public-expert-1",
    "public-expert-2",
    "public-expert-3",
    "public-expert-4",
    "public-expert-5",
    "public-expert-6",
    "public-expert-7",
    "public-expert-8",
    "public-expert-9",
    "public-expert-10",
    "public-combined",
    "public-combined-N",
    "public-ncm",
}

/// The JSON document of a bundled fixture.
pub fn fixture_document(name: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| *doc)
}

/// Loads a bundled fixture by name.
///
/// ```
/// let m = cogmap::fixtures::fixture("socio-economic").unwrap();
/// assert_eq!(m.shape(), (5, 5));
/// assert!(cogmap::fixtures::fixture("no-such-model").is_none());
/// ```
pub fn fixture(name: &str) -> Option<Model> {
    fixture_document(name).map(|doc| load_model(doc).expect("bundled fixtures are valid"))
}

/// One line of the catalog report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Fixture name.
    pub name: &'static str,
    /// Model kind.
    pub kind: ModelKind,
    /// `(rows, cols)`.
    pub shape: (usize, usize),
}

/// Loads and validates every bundled fixture.
///
/// ```
/// let report = cogmap::fixtures::validate_fixture_catalog().unwrap();
/// assert!(report.iter().any(|e| e.name == "public-combined-N" && e.shape == (9, 9)));
/// ```
pub fn validate_fixture_catalog() -> Result<Vec<CatalogEntry>, (&'static str, ModelError)> {
    FIXTURES
        .iter()
        .map(|&(name, doc)| {
            let model = load_model(doc).map_err(|e| (name, e))?;
            Ok(CatalogEntry {
                name,
                kind: model.kind(),
                shape: model.shape(),
            })
        })
        .collect()
}
