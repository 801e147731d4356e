//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (negative mass, empty composition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The CSL-modified luminosity function has its pole at `m_div`, inside
    /// or below the requested magnitude range.
    #[error("luminosity function diverges at M_bol = {m_div:.4}, inside the requested range")]
    Divergence { m_div: f64 },

    /// The reduced chi-squared never reaches the threshold inside the search
    /// bracket; carries the bracket endpoints and their chi-squared values.
    #[error(
        "no chi2 crossing: chi2_red({lo:.6e}) = {chi2_lo:.4}, chi2_red({hi:.6e}) = {chi2_hi:.4}, threshold = {threshold:.4}"
    )]
    NoCrossing {
        lo: f64,
        hi: f64,
        chi2_lo: f64,
        chi2_hi: f64,
        threshold: f64,
    },

    /// A catalog or dataset file failed validation.
    #[error("{}", validation_msg(.path, .row, .column, .message))]
    Validation {
        path: String,
        row: Option<u64>,
        column: Option<String>,
        message: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(
        path: &str,
        row: Option<u64>,
        column: Option<&str>,
        msg: impl Into<String>,
    ) -> Self {
        Error::Validation {
            path: path.to_string(),
            row,
            column: column.map(str::to_string),
            message: msg.into(),
        }
    }
}

fn validation_msg(
    path: &str,
    row: &Option<u64>,
    column: &Option<String>,
    message: &str,
) -> String {
    let mut out = path.to_string();
    if let Some(r) = row {
        out.push_str(&format!(": line {r}"));
    }
    if let Some(c) = column {
        out.push_str(&format!(", column `{c}`"));
    }
    out.push_str(": ");
    out.push_str(message);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_message_includes_location() {
        let err = Error::validation("cat.csv", Some(4), Some("mass"), "mass must be positive");
        assert_eq!(
            err.to_string(),
            "cat.csv: line 4, column `mass`: mass must be positive"
        );
    }

    #[test]
    fn validation_message_without_location() {
        let err = Error::validation("cat.csv", None, None, "missing header");
        assert_eq!(err.to_string(), "cat.csv: missing header");
    }
}
