use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::MatrixKind;
use crate::polynomial::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "thm1")]
    Theorem1,
    #[serde(rename = "thm2")]
    Theorem2,
    #[serde(rename = "lem2.1")]
    Lemma2_1,
    #[serde(rename = "lem2.3")]
    Lemma2_3,
    #[serde(rename = "lem2.4")]
    Lemma2_4,
    #[serde(rename = "lem2.5")]
    Lemma2_5,
    #[serde(rename = "lem3.1")]
    Lemma3_1,
    #[serde(rename = "lem3.2")]
    Lemma3_2,
    #[serde(rename = "lem3.3")]
    Lemma3_3,
}

impl IdentityId {
    pub const LEMMAS: [IdentityId; 7] = [
        IdentityId::Lemma2_1,
        IdentityId::Lemma2_3,
        IdentityId::Lemma2_4,
        IdentityId::Lemma2_5,
        IdentityId::Lemma3_1,
        IdentityId::Lemma3_2,
        IdentityId::Lemma3_3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "thm1",
            IdentityId::Theorem2 => "thm2",
            IdentityId::Lemma2_1 => "lem2.1",
            IdentityId::Lemma2_3 => "lem2.3",
            IdentityId::Lemma2_4 => "lem2.4",
            IdentityId::Lemma2_5 => "lem2.5",
            IdentityId::Lemma3_1 => "lem3.1",
            IdentityId::Lemma3_2 => "lem3.2",
            IdentityId::Lemma3_3 => "lem3.3",
        }
    }

    pub fn needs_symmetric(&self) -> bool {
        matches!(self, IdentityId::Lemma3_1 | IdentityId::Lemma3_2 | IdentityId::Lemma3_3)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [IdentityId::Theorem1, IdentityId::Theorem2]
            .into_iter()
            .chain(IdentityId::LEMMAS)
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse { format: "identity id", reason: s.to_string() })
    }
}

/// Signs applied to the two rim-hook polynomials on the right-hand side of
/// the undirected identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignConvention {
    pub horizontal: i8,
    pub vertical: i8,
}

impl SignConvention {
    /// `… − Φ^{□□} + Φ^{vertical}`, as displayed in the theorem.
    pub const STATEMENT: SignConvention = SignConvention { horizontal: -1, vertical: 1 };
    /// `… − [Φ^{□□} + Φ^{vertical}]`, as in the last line of its proof.
    pub const PROOF_FINAL: SignConvention = SignConvention { horizontal: -1, vertical: -1 };

    pub fn new(horizontal: i8, vertical: i8) -> Result<Self> {
        if horizontal.abs() != 1 || vertical.abs() != 1 {
            return Err(Error::Parse {
                format: "sign convention",
                reason: format!("signs must be ±1, got ({horizontal}, {vertical})"),
            });
        }
        Ok(SignConvention { horizontal, vertical })
    }

    pub fn name(&self) -> Option<&'static str> {
        match *self {
            SignConvention::STATEMENT => Some("statement"),
            SignConvention::PROOF_FINAL => Some("proof-final"),
            _ => None,
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "({:+},{:+})", self.horizontal, self.vertical),
        }
    }
}

impl FromStr for SignConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "statement" => Ok(SignConvention::STATEMENT),
            "proof" | "proof-final" => Ok(SignConvention::PROOF_FINAL),
            other => Err(Error::Parse { format: "sign convention", reason: other.to_string() }),
        }
    }
}

/// Left side minus right side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Polynomial(IntPolynomial),
    Scalar(BigInt),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Polynomial(p) => p.is_zero(),
            Residual::Scalar(v) => v.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Polynomial(p) => p.fmt(f),
            Residual::Scalar(v) => v.fmt(f),
        }
    }
}

/// Polynomials serialize as `{"coeffs": [...]}`, scalars as a decimal string.
impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Residual::Polynomial(p) => p.serialize(s),
            Residual::Scalar(v) => s.serialize_str(&v.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<MatrixKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<SignConvention>,
    pub residual: Residual,
    /// Human-readable residual, e.g. `"6x"`.
    pub residual_text: String,
    pub passed: bool,
    /// Residual of the form as printed, where it differs from the verified one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_form_residual: Option<Residual>,
}

impl VerificationReport {
    pub(crate) fn new(identity: IdentityId, residual: Residual) -> Self {
        VerificationReport {
            identity,
            k: None,
            kind: None,
            signs: None,
            residual_text: residual.to_string(),
            passed: residual.is_zero(),
            residual,
            printed_form_residual: None,
        }
    }

    pub(crate) fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub(crate) fn with_kind(mut self, kind: MatrixKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub(crate) fn with_signs(mut self, signs: SignConvention) -> Self {
        self.signs = Some(signs);
        self
    }

    pub(crate) fn with_printed_form(mut self, residual: Residual) -> Self {
        self.printed_form_residual = Some(residual);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::LEMMAS.into_iter().chain([IdentityId::Theorem1, IdentityId::Theorem2]) {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert!("lem2.2".parse::<IdentityId>().is_err());
    }

    #[test]
    fn sign_presets() {
        assert_eq!("statement".parse::<SignConvention>().unwrap(), SignConvention::STATEMENT);
        assert_eq!("proof".parse::<SignConvention>().unwrap(), SignConvention::PROOF_FINAL);
        assert!(SignConvention::new(2, 1).is_err());
        assert_eq!(SignConvention::new(1, 1).unwrap().to_string(), "(+1,+1)");
    }

    #[test]
    fn report_json() {
        let r = VerificationReport::new(IdentityId::Theorem2, Residual::Polynomial(IntPolynomial::from_i64s(&[0, 6])))
            .with_k(1)
            .with_signs(SignConvention::PROOF_FINAL);
        assert!(!r.passed);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["identity"], "thm2");
        assert_eq!(v["residual"]["coeffs"], serde_json::json!(["0", "6"]));
        assert_eq!(v["residual_text"], "6x");
        assert_eq!(v["signs"], serde_json::json!({"horizontal": -1, "vertical": -1}));
        let s = VerificationReport::new(IdentityId::Lemma2_1, Residual::Scalar(BigInt::zero()));
        assert!(s.passed);
        assert_eq!(serde_json::to_value(&s).unwrap()["residual"], "0");
    }
}
