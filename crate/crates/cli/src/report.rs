//! Report documents and their canonical digests.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use semireal::group::Relation;
use semireal::heisenberg::{CirclePoint, GSpElement, Heisenberg3, HeisenbergElement, Torus};
use semireal::sl2::Sl2VElement;
use semireal::{AffineElement, Field, Rational, SemidirectElement, Vector};

use crate::codec::{enc_matrix, enc_vector};

pub const REPORT_VERSION: u32 = 1;

/// The group every element and certificate of a report lives in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum GroupKind {
    /// `GL(d) ⋉ F^d` in the block convention; `field` is `Q`, `Q(i)` or `F<p>`.
    Affine { field: String },
    Sl2v { n: usize },
    GspHeisenberg { dim: usize },
    Circle,
    TorusHeisenberg { field: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RelationRecord {
    Inverse,
    Power { k: i64 },
}

impl From<Relation> for RelationRecord {
    fn from(r: Relation) -> Self {
        match r {
            Relation::Inverse => RelationRecord::Inverse,
            Relation::Power(k) => RelationRecord::Power { k },
        }
    }
}

impl From<RelationRecord> for Relation {
    fn from(r: RelationRecord) -> Self {
        match r {
            RelationRecord::Inverse => Relation::Inverse,
            RelationRecord::Power { k } => Relation::Power(k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertRecord {
    pub id: String,
    pub relation: RelationRecord,
    pub subject: Value,
    pub witness: Value,
    pub verified: bool,
    pub digest: String,
}

impl CertRecord {
    pub fn new(id: String, relation: Relation, subject: Value, witness: Value) -> Self {
        let relation = RelationRecord::from(relation);
        let digest = cert_digest(&relation, &subject, &witness);
        CertRecord {
            id,
            relation,
            subject,
            witness,
            verified: true,
            digest,
        }
    }
}

pub fn cert_digest(relation: &RelationRecord, subject: &Value, witness: &Value) -> String {
    digest_of(&json!({ "relation": relation, "subject": subject, "witness": witness }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub element: Value,
    /// A decimal order, `infinite`, or `unknown`.
    pub order: String,
    /// `Real`, `NotReal` or `Unknown`.
    pub real: String,
    /// `Rational`, `NotRational`, `Partial` or `Unknown`.
    pub rational: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    pub notes: Vec<String>,
    pub certificates: Vec<CertRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub scenario: Value,
    pub seed: u64,
    pub bound: u64,
    pub group: GroupKind,
    pub entries: Vec<Entry>,
    pub checks: Vec<CheckOutcome>,
    pub digest: String,
}

impl Report {
    /// Digest of the report with the `digest` field blanked.
    pub fn compute_digest(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["digest"] = Value::String(String::new());
        digest_of(&v)
    }

    pub fn seal(mut self) -> Self {
        self.digest = self.compute_digest();
        self
    }

    pub fn certificate_count(&self) -> usize {
        self.entries.iter().map(|e| e.certificates.len()).sum()
    }
}

/// Hex SHA-256 of the compact JSON form; object keys are sorted.
pub fn digest_of(v: &Value) -> String {
    let text = serde_json::to_string(v).expect("json value serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn enc_affine<F: Field>(a: &AffineElement<F>) -> Value {
    json!({ "linear": enc_matrix(a.linear()), "translation": enc_vector(a.translation()) })
}

pub fn enc_sl2v(s: &Sl2VElement) -> Value {
    json!({ "g": enc_matrix(&s.linear().to_matrix()), "v": enc_vector(s.translation().coeffs()) })
}

pub fn enc_gsp_heisenberg(s: &SemidirectElement<GSpElement, HeisenbergElement>) -> Value {
    json!({ "g": enc_matrix(s.h.matrix()), "v": enc_vector(&s.n.v), "t": s.n.t.to_string() })
}

pub fn enc_circle(s: &SemidirectElement<CirclePoint, Vector<Rational>>) -> Value {
    json!({ "cos": s.h.cos().to_string(), "sin": s.h.sin().to_string(), "n": enc_vector(&s.n) })
}

pub fn enc_torus_heisenberg<F: Field>(s: &SemidirectElement<Torus<F>, Heisenberg3<F>>) -> Value {
    json!({
        "lambda": s.h.value().to_string(),
        "n": [s.n.a.to_string(), s.n.b.to_string(), s.n.c.to_string()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_key_order() {
        let a: Value = serde_json::from_str(r#"{"x": 1, "y": [2, 3]}"#).unwrap();
        let b: Value = serde_json::from_str(r#"{"y": [2, 3], "x": 1}"#).unwrap();
        assert_eq!(digest_of(&a), digest_of(&b));
        assert_eq!(digest_of(&a).len(), 64);
    }

    #[test]
    fn relation_round_trip() {
        for r in [Relation::Inverse, Relation::Power(-1), Relation::Power(5)] {
            let rec = RelationRecord::from(r);
            let text = serde_json::to_string(&rec).unwrap();
            let back: RelationRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(Relation::from(back), r);
        }
    }
}
