use std::fmt;

use thiserror::Error;

use super::GroupElement;

/// The relation a certificate witnesses for its subject `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `g·s·g⁻¹ = s⁻¹`
    Inverse,
    /// `g·s·g⁻¹ = s^k`
    Power(i64),
}

impl Relation {
    pub fn target<G: GroupElement>(&self, subject: &G) -> G {
        match *self {
            Relation::Inverse => subject.inverse(),
            Relation::Power(k) => subject.pow(k),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Inverse => write!(f, "g s g^-1 = s^-1"),
            Relation::Power(k) => write!(f, "g s g^-1 = s^{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("witness does not satisfy {relation}")]
pub struct CertificateError {
    pub relation: Relation,
}

/// A conjugating element together with the relation it satisfies.
///
/// The only constructor re-multiplies `witness · subject · witness⁻¹` and
/// compares against the target exactly, so every value of this type is
/// verified.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate<G> {
    subject: G,
    witness: G,
    relation: Relation,
}

impl<G: GroupElement> Certificate<G> {
    pub fn new(subject: G, witness: G, relation: Relation) -> Result<Self, CertificateError> {
        let cert = Certificate {
            subject,
            witness,
            relation,
        };
        if cert.check() {
            Ok(cert)
        } else {
            Err(CertificateError { relation })
        }
    }

    fn check(&self) -> bool {
        self.subject.conjugate_by(&self.witness) == self.relation.target(&self.subject)
    }

    pub fn subject(&self) -> &G {
        &self.subject
    }

    pub fn witness(&self) -> &G {
        &self.witness
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    /// `s⁻¹` or `s^k`.
    pub fn target(&self) -> G {
        self.relation.target(&self.subject)
    }

    /// Always true: set only after exact re-multiplication at construction.
    pub fn verified(&self) -> bool {
        true
    }

    /// Runs the multiplication check again from scratch.
    pub fn reverify(&self) -> bool {
        self.check()
    }

    /// Reinterpret under a relation that has the same target, e.g. `Power(k)`
    /// for `Power(k mod m)` when `s^m = e`. Re-verified.
    pub fn with_relation(&self, relation: Relation) -> Result<Self, CertificateError> {
        Certificate::new(self.subject.clone(), self.witness.clone(), relation)
    }

    pub fn into_parts(self) -> (G, G, Relation) {
        (self.subject, self.witness, self.relation)
    }
}
