//! Line-oriented text interchange for sampled fields and spectra.
//!
//! ```text
//! QFLD1 n1 n2 h1 h2
//! q0 q1 q2 q3          <- node (0, 0)
//! q0 q1 q2 q3          <- node (0, 1)
//! ...
//! ```
//!
//! Spectra use the tag `QSPEC1`. Nodes are row-major (`m1 * n2 + m2`),
//! every float is printed with 17 significant digits so a read after a
//! write is bit-exact, and lines end in LF.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use hqft_core::{Domain, Frequency, Grid2D, Quaternion, Samples, Spatial};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: sample count mismatch: header declares {expected} samples, found {found}")]
    SampleCountMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: non-finite value `{token}`")]
    NonFinite { line: usize, token: String },
    #[error("line {line}: malformed sample: {reason}")]
    MalformedSample { line: usize, reason: String },
}

/// A [`FormatError`] or I/O failure tagged with the file it came from.
#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: FormatError },
}

/// Header tag of a sample domain.
pub trait FileTag: Domain {
    const TAG: &'static str;
}

impl FileTag for Spatial {
    const TAG: &'static str = "QFLD1";
}

impl FileTag for Frequency {
    const TAG: &'static str = "QSPEC1";
}

fn push_float(out: &mut String, v: f64) {
    write!(out, "{v:.16e}").unwrap();
}

pub fn write_samples<D: FileTag>(s: &Samples<D>) -> String {
    let g = s.grid();
    let mut out = String::with_capacity(80 * (g.len() + 1));
    write!(out, "{} {} {} ", D::TAG, g.n1(), g.n2()).unwrap();
    push_float(&mut out, g.h1());
    out.push(' ');
    push_float(&mut out, g.h2());
    out.push('\n');
    for q in s.values() {
        for (i, c) in q.to_array().into_iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            push_float(&mut out, c);
        }
        out.push('\n');
    }
    out
}

fn header_error(reason: impl Into<String>) -> FormatError {
    FormatError::MalformedHeader { line: 1, reason: reason.into() }
}

fn parse_header<D: FileTag>(line: &str) -> Result<Grid2D, FormatError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.first() {
        Some(&tag) if tag == D::TAG => {}
        Some(tag) => return Err(header_error(format!("expected tag {}, found `{tag}`", D::TAG))),
        None => return Err(header_error("empty header")),
    }
    if tokens.len() != 5 {
        return Err(header_error(format!("expected `{} n1 n2 h1 h2`", D::TAG)));
    }
    let size = |t: &str| t.parse::<usize>().map_err(|_| header_error(format!("bad grid size `{t}`")));
    let spacing = |t: &str| match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(header_error(format!("bad spacing `{t}`"))),
    };
    let (n1, n2) = (size(tokens[1])?, size(tokens[2])?);
    let (h1, h2) = (spacing(tokens[3])?, spacing(tokens[4])?);
    Grid2D::new(n1, n2, h1, h2).map_err(|e| header_error(e.to_string()))
}

fn parse_sample(line: &str, number: usize) -> Result<Quaternion, FormatError> {
    let mut c = [0.0; 4];
    let mut tokens = line.split_whitespace();
    for (i, slot) in c.iter_mut().enumerate() {
        let token = tokens.next().ok_or_else(|| FormatError::MalformedSample {
            line: number,
            reason: format!("expected 4 coefficients, found {i}"),
        })?;
        let v: f64 = token
            .parse()
            .map_err(|_| FormatError::MalformedSample { line: number, reason: format!("`{token}` is not a number") })?;
        if !v.is_finite() {
            return Err(FormatError::NonFinite { line: number, token: token.to_string() });
        }
        *slot = v;
    }
    if let Some(extra) = tokens.next() {
        return Err(FormatError::MalformedSample { line: number, reason: format!("unexpected fifth token `{extra}`") });
    }
    Ok(Quaternion::from_array(c))
}

pub fn read_samples<D: FileTag>(text: &str) -> Result<Samples<D>, FormatError> {
    let body = text.trim_end_matches('\n');
    let mut lines = body.split('\n');
    let grid = parse_header::<D>(lines.next().unwrap_or(""))?;
    let expected = grid.len();
    let mut values = Vec::with_capacity(expected);
    for (i, line) in lines.enumerate() {
        let number = i + 2;
        if values.len() == expected {
            let found = body.split('\n').count() - 1;
            return Err(FormatError::SampleCountMismatch { line: number, expected, found });
        }
        values.push(parse_sample(line, number)?);
    }
    if values.len() != expected {
        let line = values.len() + 2;
        return Err(FormatError::SampleCountMismatch { line, expected, found: values.len() });
    }
    // every coefficient was checked above, so construction cannot fail
    Ok(Samples::new(grid, values).expect("validated samples"))
}

pub fn read_file<D: FileTag>(path: &Path) -> Result<Samples<D>, FileError> {
    let name = || path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io { path: name(), source })?;
    read_samples(&text).map_err(|source| FileError::Parse { path: name(), source })
}

pub fn write_file<D: FileTag>(path: &Path, s: &Samples<D>) -> io::Result<()> {
    std::fs::write(path, write_samples(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hqft_core::{QField, SpectrumField};

    fn small() -> QField {
        let grid = Grid2D::new(4, 6, 0.5, 0.25).unwrap();
        QField::from_fn(grid, |a, b| Quaternion::new(a, b, -0.0, 1.0 / 3.0)).unwrap()
    }

    #[test]
    fn header_and_layout() {
        let text = write_samples(&small());
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "QFLD1 4 6 5.0000000000000000e-1 2.5000000000000000e-1");
        assert_eq!(
            lines.next().unwrap(),
            "-1.0000000000000000e0 -7.5000000000000000e-1 -0.0000000000000000e0 3.3333333333333331e-1"
        );
        assert_eq!(text.lines().count(), 25);
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let f = small();
        let back: QField = read_samples(&write_samples(&f)).unwrap();
        assert_eq!(back.grid(), f.grid());
        for (a, b) in back.values().iter().zip(f.values()) {
            for (x, y) in a.to_array().iter().zip(b.to_array()) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }

    #[test]
    fn tags_are_checked() {
        let text = write_samples(&small());
        let err = read_samples::<Frequency>(&text).unwrap_err();
        assert!(matches!(err, FormatError::MalformedHeader { line: 1, .. }), "{err}");
        let spec = SpectrumField::zeros(*small().grid());
        assert!(write_samples(&spec).starts_with("QSPEC1 4 6 "));
    }

    #[test]
    fn header_only_is_a_count_mismatch() {
        let err = read_samples::<Spatial>("QFLD1 4 4 0.5 0.5\n").unwrap_err();
        assert!(matches!(err, FormatError::SampleCountMismatch { expected: 16, found: 0, line: 2 }));
        assert!(err.to_string().contains("sample count mismatch"));
    }

    #[test]
    fn too_many_rows() {
        let mut text = write_samples(&small());
        text.push_str("0 0 0 0\n");
        let err = read_samples::<Spatial>(&text).unwrap_err();
        assert!(matches!(err, FormatError::SampleCountMismatch { line: 26, expected: 24, found: 25 }), "{err}");
    }

    #[test]
    fn non_finite_names_line() {
        let mut lines: Vec<String> = write_samples(&small()).lines().map(String::from).collect();
        lines[3] = "0 NaN 0 0".into();
        let err = read_samples::<Spatial>(&lines.join("\n")).unwrap_err();
        assert!(matches!(err, FormatError::NonFinite { line: 4, .. }), "{err}");
        lines[3] = "0 1e999 0 0".into();
        let err = read_samples::<Spatial>(&lines.join("\n")).unwrap_err();
        assert_eq!(err.to_string(), "line 4: non-finite value `1e999`");
    }

    #[test]
    fn malformed_inputs() {
        for (text, line) in [
            ("", 1),
            ("QFLD1 4 4 0.5\n", 1),
            ("QFLD1 5 4 0.5 0.5\n", 1),
            ("QFLD1 4 4 -0.5 0.5\n", 1),
            ("QFLD1 x 4 0.5 0.5\n", 1),
        ] {
            let err = read_samples::<Spatial>(text).unwrap_err();
            assert!(matches!(err, FormatError::MalformedHeader { line: l, .. } if l == line), "{text:?}: {err}");
        }
        let err = read_samples::<Spatial>("QFLD1 4 4 0.5 0.5\n1 2 3\n").unwrap_err();
        assert!(matches!(err, FormatError::MalformedSample { line: 2, .. }));
        let err = read_samples::<Spatial>("QFLD1 4 4 0.5 0.5\n1 2 3 4 5\n").unwrap_err();
        assert!(matches!(err, FormatError::MalformedSample { line: 2, .. }));
        let err = read_samples::<Spatial>("QFLD1 4 4 0.5 0.5\n1 2 x 4\n").unwrap_err();
        assert!(err.to_string().contains("`x` is not a number"));
    }
}
