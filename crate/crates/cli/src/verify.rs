//! Independent re-checking of a report: digests, verdict/certificate
//! consistency, and every relation by exact multiplication.

use serde_json::Value;

use semireal::group::{coprime_residues, GroupElement, Relation};
use semireal::heisenberg::{five_by_five, CirclePoint, GSpElement, Heisenberg3, HeisenbergElement, Torus};
use semireal::sl2::{PolyVector, SL2Element, Sl2VElement};
use semireal::{AffineElement, Field, Fp, GaussianRational, Matrix, Rational, SemidirectElement};

use crate::codec::{matrix, scalar, vector};
use crate::error::CliError;
use crate::report::{cert_digest, CertRecord, Entry, GroupKind, Report, RelationRecord, REPORT_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifySummary {
    pub entries: usize,
    pub certificates: usize,
}

pub fn verify_text(text: &str) -> Result<VerifySummary, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let report: Report =
        serde_json::from_value(value).map_err(|e| CliError::verification("report", format!("malformed: {e}")))?;
    verify_report(&report)
}

pub fn verify_report(report: &Report) -> Result<VerifySummary, CliError> {
    if report.schema_version != REPORT_VERSION {
        return Err(CliError::verification("report", format!("schema_version {}", report.schema_version)));
    }
    if report.digest != report.compute_digest() {
        return Err(CliError::verification("report", "digest mismatch"));
    }
    for check in &report.checks {
        if !check.passed {
            return Err(CliError::verification(format!("check {}", check.name), &check.detail));
        }
    }
    for (i, entry) in report.entries.iter().enumerate() {
        if entry.index != i {
            return Err(CliError::verification(format!("entry {i}"), format!("index {}", entry.index)));
        }
        check_entry(&report.group, entry)?;
    }
    Ok(VerifySummary {
        entries: report.entries.len(),
        certificates: report.certificate_count(),
    })
}

fn check_entry(group: &GroupKind, entry: &Entry) -> Result<(), CliError> {
    let entry_id = format!("entry {}", entry.index);
    for cert in &entry.certificates {
        if !cert.verified {
            return Err(CliError::verification(&cert.id, "verified flag is false"));
        }
        if cert.digest != cert_digest(&cert.relation, &cert.subject, &cert.witness) {
            return Err(CliError::verification(&cert.id, "certificate digest mismatch"));
        }
        if cert.subject != entry.element {
            return Err(CliError::verification(&cert.id, "subject differs from the entry element"));
        }
        check_certificate(group, cert).map_err(|reason| CliError::verification(&cert.id, reason))?;
    }
    let has_inverse = entry.certificates.iter().any(|c| c.relation == RelationRecord::Inverse);
    match entry.real.as_str() {
        "Real" if !has_inverse => return Err(CliError::verification(&entry_id, "Real without an inverse certificate")),
        "Real" | "NotReal" | "Unknown" => {}
        other => return Err(CliError::verification(&entry_id, format!("unknown reality verdict {other:?}"))),
    }
    match entry.rational.as_str() {
        "Rational" => check_rational_coverage(entry, has_inverse).map_err(|r| CliError::verification(&entry_id, r))?,
        "NotRational" | "Partial" | "Unknown" => {}
        other => return Err(CliError::verification(&entry_id, format!("unknown rationality verdict {other:?}"))),
    }
    Ok(())
}

/// Every exponent coprime to a finite order, or `−1` for infinite order,
/// must carry a certificate.
fn check_rational_coverage(entry: &Entry, has_inverse: bool) -> Result<(), String> {
    let powers: Vec<i64> = entry
        .certificates
        .iter()
        .filter_map(|c| match c.relation {
            RelationRecord::Power { k } => Some(k),
            RelationRecord::Inverse => None,
        })
        .collect();
    match entry.order.as_str() {
        "infinite" => {
            if has_inverse || powers.contains(&-1) {
                Ok(())
            } else {
                Err("Rational infinite-order element without a k = -1 certificate".into())
            }
        }
        m => {
            let m: u64 = m.parse().map_err(|_| format!("Rational with order {m:?}"))?;
            for k in coprime_residues(m) {
                let covered = powers.iter().any(|&j| (j - k as i64).rem_euclid(m as i64) == 0)
                    || (has_inverse && (k + 1) % m == 0);
                if !covered {
                    return Err(format!("no certificate for k = {k}"));
                }
            }
            Ok(())
        }
    }
}

/// Runs the relation check for one certificate in the report's group.
pub fn check_certificate(group: &GroupKind, cert: &CertRecord) -> Result<(), String> {
    let relation = Relation::from(cert.relation);
    let s = &cert.subject;
    let w = &cert.witness;
    match group {
        GroupKind::Affine { field } => match field.as_str() {
            "Q" => check_affine::<Rational>(s, w, relation),
            "Q(i)" => check_affine::<GaussianRational>(s, w, relation),
            "F2" => check_affine::<Fp<2>>(s, w, relation),
            "F3" => check_affine::<Fp<3>>(s, w, relation),
            "F5" => check_affine::<Fp<5>>(s, w, relation),
            "F7" => check_affine::<Fp<7>>(s, w, relation),
            "F11" => check_affine::<Fp<11>>(s, w, relation),
            "F13" => check_affine::<Fp<13>>(s, w, relation),
            other => Err(format!("unsupported field {other:?}")),
        },
        GroupKind::Sl2v { n } => {
            let s = decode_sl2v(s, *n)?.to_affine();
            let w = decode_sl2v(w, *n)?.to_affine();
            check_blocks(&s.to_block_matrix(), &w.to_block_matrix(), relation)
        }
        GroupKind::GspHeisenberg { dim } => {
            check_by_multiplication(&decode_gsp_heisenberg(s, *dim)?, &decode_gsp_heisenberg(w, *dim)?, relation)
        }
        GroupKind::Circle => {
            let s = five_by_five(&decode_circle(s)?);
            let w = five_by_five(&decode_circle(w)?);
            check_blocks(&s, &w, relation)
        }
        GroupKind::TorusHeisenberg { field } => match field.as_str() {
            "Q" => check_by_multiplication(&decode_torus::<Rational>(s)?, &decode_torus::<Rational>(w)?, relation),
            "Q(i)" => check_by_multiplication(
                &decode_torus::<GaussianRational>(s)?,
                &decode_torus::<GaussianRational>(w)?,
                relation,
            ),
            other => Err(format!("unsupported field {other:?}")),
        },
    }
}

fn check_blocks<F: Field>(s: &Matrix<F>, w: &Matrix<F>, relation: Relation) -> Result<(), String> {
    let w_inv = w.inverse().map_err(|_| "witness is singular".to_string())?;
    let lhs = &(w * s) * &w_inv;
    let rhs = match relation {
        Relation::Inverse => s.inverse(),
        Relation::Power(k) => s.pow(k),
    }
    .map_err(|e| e.to_string())?;
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("witness fails {relation}"))
    }
}

fn check_by_multiplication<G: GroupElement>(s: &G, w: &G, relation: Relation) -> Result<(), String> {
    if s.conjugate_by(w) == relation.target(s) {
        Ok(())
    } else {
        Err(format!("witness fails {relation}"))
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

fn strings(v: &Value) -> Result<Vec<String>, String> {
    serde_json::from_value(v.clone()).map_err(|e| e.to_string())
}

fn rows(v: &Value) -> Result<Vec<Vec<String>>, String> {
    serde_json::from_value(v.clone()).map_err(|e| e.to_string())
}

fn text(v: &Value) -> Result<&str, String> {
    v.as_str().ok_or_else(|| "expected a string scalar".to_string())
}

fn decode_affine<F: Field>(v: &Value) -> Result<AffineElement<F>, String> {
    let linear = matrix::<F>(&rows(field(v, "linear")?)?).map_err(|e| e.to_string())?;
    let translation = vector::<F>(&strings(field(v, "translation")?)?).map_err(|e| e.to_string())?;
    AffineElement::new(linear, translation).map_err(|e| e.to_string())
}

fn check_affine<F: Field>(s: &Value, w: &Value, relation: Relation) -> Result<(), String> {
    let s = decode_affine::<F>(s)?;
    let w = decode_affine::<F>(w)?;
    if s.dim() != w.dim() {
        return Err("subject and witness dimensions differ".into());
    }
    check_blocks(&s.to_block_matrix(), &w.to_block_matrix(), relation)
}

fn decode_sl2v(v: &Value, n: usize) -> Result<Sl2VElement, String> {
    let g = matrix::<Rational>(&rows(field(v, "g")?)?).map_err(|e| e.to_string())?;
    let g = SL2Element::from_matrix(&g).map_err(|e| e.to_string())?;
    let coeffs = vector::<Rational>(&strings(field(v, "v")?)?).map_err(|e| e.to_string())?;
    if coeffs.dim() != n + 1 {
        return Err(format!("expected {} coefficients, found {}", n + 1, coeffs.dim()));
    }
    Ok(Sl2VElement::new(g, PolyVector::new(coeffs).map_err(|e| e.to_string())?))
}

fn decode_gsp_heisenberg(v: &Value, dim: usize) -> Result<SemidirectElement<GSpElement, HeisenbergElement>, String> {
    let g = matrix::<Rational>(&rows(field(v, "g")?)?).map_err(|e| e.to_string())?;
    let g = GSpElement::new(g).map_err(|e| e.to_string())?;
    let x = vector::<Rational>(&strings(field(v, "v")?)?).map_err(|e| e.to_string())?;
    let t = scalar::<Rational>(text(field(v, "t")?)?).map_err(|e| e.to_string())?;
    if g.dim() != dim || x.dim() != dim {
        return Err(format!("expected dimension {dim}"));
    }
    Ok(SemidirectElement::new(g, HeisenbergElement::new(x, t)))
}

fn decode_circle(v: &Value) -> Result<SemidirectElement<CirclePoint, semireal::Vector<Rational>>, String> {
    let cos = scalar::<Rational>(text(field(v, "cos")?)?).map_err(|e| e.to_string())?;
    let sin = scalar::<Rational>(text(field(v, "sin")?)?).map_err(|e| e.to_string())?;
    let n = vector::<Rational>(&strings(field(v, "n")?)?).map_err(|e| e.to_string())?;
    if n.dim() != 2 {
        return Err("circle translations are 2-dimensional".into());
    }
    Ok(SemidirectElement::new(CirclePoint::new(cos, sin).map_err(|e| e.to_string())?, n))
}

fn decode_torus<F: Field>(v: &Value) -> Result<SemidirectElement<Torus<F>, Heisenberg3<F>>, String> {
    let lambda = scalar::<F>(text(field(v, "lambda")?)?).map_err(|e| e.to_string())?;
    let n = strings(field(v, "n")?)?;
    let [a, b, c] = n.as_slice() else {
        return Err("Heisenberg coordinates must have length 3".into());
    };
    let parse = |s: &String| scalar::<F>(s).map_err(|e| e.to_string());
    Ok(SemidirectElement::new(
        Torus::new(lambda).map_err(|e| e.to_string())?,
        Heisenberg3::new(parse(a)?, parse(b)?, parse(c)?),
    ))
}
