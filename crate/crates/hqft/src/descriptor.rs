//! Single-line signal descriptors
//!
//! ```text
//! gaussian q0 q1 q2 q3 alpha1 alpha2
//! hermite k l gamma
//! polygauss gamma d c_00 c_10 c_01 c_20 c_11 c_02 ...
//! ```
//!
//! Polynomial coefficients are listed by total degree, and within a degree
//! by decreasing power of `x1`.

use hqft_core::{AnalyticSignal, Polynomial2, Quaternion};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DescriptorError {
    #[error("empty signal descriptor")]
    Empty,
    #[error("unknown signal variant `{0}` (expected gaussian, hermite or polygauss)")]
    UnknownVariant(String),
    #[error("{variant}: missing {what}")]
    Missing { variant: &'static str, what: &'static str },
    #[error("{variant}: `{token}` is not a valid {what}")]
    BadToken { variant: &'static str, token: String, what: &'static str },
    #[error("{variant}: unexpected token `{token}`")]
    Trailing { variant: &'static str, token: String },
    #[error("{variant}: {source}")]
    Invalid { variant: &'static str, source: hqft_core::Error },
}

struct Tokens<'a> {
    variant: &'static str,
    rest: std::slice::Iter<'a, String>,
}

impl<'a> Tokens<'a> {
    fn next_token(&mut self, what: &'static str) -> Result<&'a str, DescriptorError> {
        self.rest.next().map(String::as_str).ok_or(DescriptorError::Missing { variant: self.variant, what })
    }

    fn float(&mut self, what: &'static str) -> Result<f64, DescriptorError> {
        let token = self.next_token(what)?;
        match token.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(self.bad(token, what)),
        }
    }

    fn int(&mut self, what: &'static str) -> Result<u32, DescriptorError> {
        let token = self.next_token(what)?;
        token.parse().map_err(|_| self.bad(token, what))
    }

    fn bad(&self, token: &str, what: &'static str) -> DescriptorError {
        DescriptorError::BadToken { variant: self.variant, token: token.to_string(), what }
    }

    fn finish(mut self) -> Result<(), DescriptorError> {
        match self.rest.next() {
            Some(t) => Err(DescriptorError::Trailing { variant: self.variant, token: t.clone() }),
            None => Ok(()),
        }
    }

    fn invalid(&self, source: hqft_core::Error) -> DescriptorError {
        DescriptorError::Invalid { variant: self.variant, source }
    }
}

/// Parses whitespace-split descriptor tokens.
pub fn parse(tokens: &[String]) -> Result<AnalyticSignal, DescriptorError> {
    let (head, rest) = tokens.split_first().ok_or(DescriptorError::Empty)?;
    let variant = match head.as_str() {
        "gaussian" => "gaussian",
        "hermite" => "hermite",
        "polygauss" => "polygauss",
        other => return Err(DescriptorError::UnknownVariant(other.to_string())),
    };
    let mut t = Tokens { variant, rest: rest.iter() };
    let signal = match variant {
        "gaussian" => {
            let q = Quaternion::new(t.float("q0")?, t.float("q1")?, t.float("q2")?, t.float("q3")?);
            let (a1, a2) = (t.float("alpha1")?, t.float("alpha2")?);
            AnalyticSignal::gaussian(q, a1, a2).map_err(|e| t.invalid(e))?
        }
        "hermite" => {
            let (k, l) = (t.int("k")?, t.int("l")?);
            let gamma = t.float("gamma")?;
            AnalyticSignal::hermite(k, l, gamma).map_err(|e| t.invalid(e))?
        }
        _ => {
            let gamma = t.float("gamma")?;
            let degree = t.int("degree")?;
            let count = Polynomial2::coeff_count(degree);
            let coeffs = (0..count).map(|_| t.float("coefficient")).collect::<Result<Vec<_>, _>>()?;
            let poly = Polynomial2::new(degree, coeffs).map_err(|e| t.invalid(e))?;
            AnalyticSignal::poly_gaussian(poly, gamma).map_err(|e| t.invalid(e))?
        }
    };
    t.finish()?;
    Ok(signal)
}

/// Splits a single descriptor string on whitespace and parses it.
pub fn parse_str(text: &str) -> Result<AnalyticSignal, DescriptorError> {
    let tokens: Vec<String> = text.split_whitespace().map(String::from).collect();
    parse(&tokens)
}

/// Inverse of [`parse`], using shortest round-trip floats.
pub fn render(signal: &AnalyticSignal) -> String {
    match signal {
        AnalyticSignal::Gaussian { q, alpha1, alpha2 } => {
            format!("gaussian {} {} {} {} {alpha1} {alpha2}", q.q0, q.q1, q.q2, q.q3)
        }
        AnalyticSignal::HermiteGauss { k, l, gamma } => format!("hermite {k} {l} {gamma}"),
        AnalyticSignal::PolyGaussian { poly, gamma } => {
            let mut s = format!("polygauss {gamma} {}", poly.declared_degree());
            for c in poly.coeffs() {
                s.push_str(&format!(" {c}"));
            }
            s
        }
    }
}
