use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::report::Report;

#[derive(Debug, Clone, Error)]
pub enum StructureError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("base algebras differ: {0}")]
    BaseMismatch(String),
    #[error("not closed under the product: {0}")]
    Closure(String),
    #[error("{subject} failed verification: {laws}")]
    Verification { subject: String, laws: String, report: Box<Report> },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

impl StructureError {
    /// Wraps a failing report; passes a passing one through as `Ok`.
    pub fn from_report(report: Report) -> Result<(), StructureError> {
        if report.passed() {
            return Ok(());
        }
        Err(StructureError::Verification {
            subject: report.subject.clone(),
            laws: report.failed_law_names().join(", "),
            report: Box::new(report),
        })
    }
}
