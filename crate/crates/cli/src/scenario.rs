//! Scenario documents: what to classify and with which parameters.

use serde::{Deserialize, Serialize};

use crate::codec::MatrixRows;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: ScenarioBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ScenarioBody {
    Finite(FiniteScenario),
    Sl2v(Sl2vScenario),
    Affine(AffineScenario),
    Heisenberg(HeisenbergScenario),
    Solvable(SolvableScenario),
}

/// `(linear, translation)` in the block convention `[[A, b], [0, 1]]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineInput {
    pub linear: MatrixRows,
    pub translation: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Constructive conjugators where the linear part has no fixed vector,
    /// exhaustive search elsewhere.
    #[default]
    Auto,
    Exhaustive,
}

/// The group generated by `(A, 0)` for each linear generator and, unless
/// disabled, the unit translations; over 𝔽_p.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteScenario {
    pub p: u64,
    pub dim: usize,
    pub linear_generators: Vec<MatrixRows>,
    #[serde(default = "yes")]
    pub translations: bool,
    /// Elements to classify; every group element when absent.
    #[serde(default)]
    pub elements: Option<Vec<AffineInput>>,
    #[serde(default)]
    pub route: Route,
    /// Record every conjugator found by exhaustive search, not just the first.
    #[serde(default)]
    pub all_witnesses: bool,
    #[serde(default)]
    pub cap: Option<usize>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sl2vInput {
    pub x: MatrixRows,
    pub v: Vec<String>,
}

/// `count` elements `(diag(r, 1/r), v)`, cycling `r` through `r_values`,
/// with `v` drawn at the given height.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sl2vRandom {
    pub count: usize,
    pub height: i64,
    pub r_values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sl2vScenario {
    pub n: usize,
    #[serde(default)]
    pub elements: Vec<Sl2vInput>,
    #[serde(default)]
    pub random: Option<Sl2vRandom>,
    #[serde(default)]
    pub t: Option<String>,
    #[serde(default)]
    pub t_grid: Option<Vec<String>>,
    #[serde(default)]
    pub conjugation_grid: Option<Vec<String>>,
    #[serde(default = "yes")]
    pub rationality: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineElementInput {
    pub x: MatrixRows,
    pub v: Vec<String>,
    /// Multiple of the order of `x`; found by iteration when absent.
    #[serde(default)]
    pub order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineScenario {
    /// `"Q"` or `"F_p"`.
    pub field: String,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub elements: Vec<AffineElementInput>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeisenbergInput {
    pub v: Vec<String>,
    pub t: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub count: usize,
    pub height: i64,
}

/// `x·n ∈ GSp(4) ⋉ H₅`; `x` and its inverter `h` default to the shipped
/// pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeisenbergScenario {
    #[serde(default)]
    pub x: Option<MatrixRows>,
    #[serde(default)]
    pub h: Option<MatrixRows>,
    #[serde(default)]
    pub elements: Vec<HeisenbergInput>,
    #[serde(default)]
    pub random: Option<RandomSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolvableFixture {
    Rotation,
    Scalar,
    TorusHeisenberg,
    ComplexTorusHeisenberg,
    /// `(±1, n)` in the torus over the complex Heisenberg group, with the
    /// closed-form verdict.
    ComplexHeisenberg,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexHeisenbergInput {
    /// `"1"` or `"-1"`.
    pub x: String,
    pub n: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvableScenario {
    pub instance: SolvableFixture,
    #[serde(default)]
    pub elements: Vec<ComplexHeisenbergInput>,
    /// Random `(−1, n)`; every other sample has `c = ab/2`.
    #[serde(default)]
    pub random: Option<RandomSpec>,
    #[serde(default)]
    pub lambda: Option<String>,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<(Scenario, serde_json::Value), CliError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let version = value.get("schema_version").and_then(|v| v.as_u64());
        if version != Some(SCHEMA_VERSION as u64) {
            return Err(CliError::Parse(format!(
                "unsupported schema_version {version:?}, expected {SCHEMA_VERSION}"
            )));
        }
        let scenario: Scenario = serde_json::from_value(value.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok((scenario, value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_finite() {
        let text = r#"{"schema_version": 1, "kind": "finite", "p": 2, "dim": 2,
            "linear_generators": [[["0","1"],["1","0"]]]}"#;
        let (s, _) = Scenario::parse(text).unwrap();
        match s.body {
            ScenarioBody::Finite(f) => {
                assert!(f.translations);
                assert_eq!(f.route, Route::Auto);
                assert!(f.elements.is_none());
            }
            other => panic!("wrong kind {other:?}"),
        }
    }

    #[test]
    fn rejects_other_versions() {
        let text = r#"{"schema_version": 2, "kind": "affine", "field": "Q"}"#;
        assert!(matches!(Scenario::parse(text), Err(CliError::Parse(_))));
        assert!(Scenario::parse(r#"{"schema_version": 1, "kind": "nope"}"#).is_err());
    }
}
