//! Plain-text tensor interchange.
//!
//! The format is line-oriented and whitespace-tolerant:
//!
//! ```text
//! 2            <- line 1: dimension d
//! 3 4          <- line 2: d axis lengths
//! 0 1 2 ... 11 <- remaining tokens: flat_size elements, row-major
//! ```
//!
//! Elements may be split across any number of lines. Values are written
//! with Rust's shortest-round-trip float formatting, so writing and
//! re-reading a tensor reproduces it bit for bit.

use std::io::{self, BufRead, Write};

use crate::error::Error;
use crate::shape::Shape;
use crate::tensor::Tensor;

/// Why a fixture failed to load.
#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("read failed: {0}")]
    Io(#[from] io::Error),

    /// The text does not follow the format: missing lines, unparsable
    /// numbers, or a token count that disagrees with the header.
    #[error("malformed fixture: {0}")]
    Malformed(String),

    /// The header parsed but describes an impossible tensor (for example a
    /// dimension above the supported maximum).
    #[error(transparent)]
    Shape(#[from] Error),
}

fn malformed(message: impl Into<String>) -> FixtureError {
    FixtureError::Malformed(message.into())
}

/// Parses a tensor from fixture text.
pub fn parse_tensor(text: &str) -> Result<Tensor<f64>, FixtureError> {
    let mut lines = text.lines();
    let dimension_line = lines.next().ok_or_else(|| malformed("empty input"))?;
    let dimension: usize = dimension_line
        .trim()
        .parse()
        .map_err(|_| malformed(format!("bad dimension line {dimension_line:?}")))?;

    let axes_line = lines
        .next()
        .ok_or_else(|| malformed("missing axis-length line"))?;
    let axes = axes_line
        .split_whitespace()
        .map(|token| {
            token
                .parse::<usize>()
                .map_err(|_| malformed(format!("bad axis length {token:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if axes.len() != dimension {
        return Err(malformed(format!(
            "dimension line says {dimension} axes but {} were given",
            axes.len()
        )));
    }
    let shape = Shape::new(axes)?;

    let expected = shape.flat_size();
    let mut flat = Vec::with_capacity(expected);
    for token in lines.flat_map(str::split_whitespace) {
        if flat.len() == expected {
            return Err(malformed(format!(
                "more than {expected} elements for shape {shape}"
            )));
        }
        let value: f64 = token
            .parse()
            .map_err(|_| malformed(format!("bad element {token:?}")))?;
        flat.push(value);
    }
    if flat.len() != expected {
        return Err(malformed(format!(
            "shape {shape} needs {expected} elements but {} were given",
            flat.len()
        )));
    }
    Ok(Tensor::new(shape, flat).expect("element count was just checked"))
}

/// Reads a tensor from any buffered reader holding fixture text.
pub fn read_tensor(reader: &mut impl BufRead) -> Result<Tensor<f64>, FixtureError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_tensor(&text)
}

/// Writes a tensor as fixture text: dimension, axis lengths, then elements,
/// at full round-trip precision.
pub fn write_tensor(writer: &mut impl Write, tensor: &Tensor<f64>) -> io::Result<()> {
    writeln!(writer, "{}", tensor.dimension())?;
    let axes: Vec<String> = tensor.shape().axes().iter().map(usize::to_string).collect();
    writeln!(writer, "{}", axes.join(" "))?;
    for (k, value) in tensor.flat().iter().enumerate() {
        if k > 0 {
            write!(writer, " ")?;
        }
        write!(writer, "{value}")?;
    }
    writeln!(writer)
}

/// [`write_tensor`] into a fresh string.
pub fn tensor_to_string(tensor: &Tensor<f64>) -> String {
    let mut out = Vec::new();
    write_tensor(&mut out, tensor).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("fixture text is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_layout() {
        let t = parse_tensor("2\n3 4\n0 1 2 3 4 5 6 7 8 9 10 11\n").unwrap();
        assert_eq!(t.shape(), &Shape::new([3, 4]).unwrap());
        assert_eq!(t.flat()[5], 5.0);
    }

    #[test]
    fn elements_may_span_lines() {
        let t = parse_tensor("1\n4\n0.5 -1.5\n2.25\n\n-0.125\n").unwrap();
        assert_eq!(t.flat(), &[0.5, -1.5, 2.25, -0.125]);
    }

    #[test]
    fn writes_round_trip_bit_for_bit() {
        let shape = Shape::new([2, 3]).unwrap();
        let t = Tensor::new(
            shape,
            vec![
                0.1,
                -2.0 / 3.0,
                f64::MIN_POSITIVE,
                1e300,
                -0.0,
                std::f64::consts::PI,
            ],
        )
        .unwrap();
        let text = tensor_to_string(&t);
        let back = parse_tensor(&text).unwrap();
        assert_eq!(back.shape(), t.shape());
        for (a, b) in back.flat().iter().zip(t.flat()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn rejects_malformed_inputs() {
        for (text, what) in [
            ("", "empty"),
            ("x\n2 2\n1 2 3 4", "bad dimension"),
            ("2\n2\n1 2", "axis count"),
            ("2\n2 2\n1 2 3", "too few elements"),
            ("2\n2 2\n1 2 3 4 5", "too many elements"),
            ("1\n2\n1 plenty", "bad element"),
        ] {
            assert!(
                matches!(parse_tensor(text), Err(FixtureError::Malformed(_))),
                "{what}: {text:?}"
            );
        }
        // Dimension outside the supported range is a shape error.
        assert!(matches!(
            parse_tensor("0\n\n"),
            Err(FixtureError::Shape(Error::UnsupportedDimension { .. }))
        ));
    }

    #[test]
    fn reads_from_any_bufread() {
        let text = b"1\n3\n1 2 3\n";
        let t = read_tensor(&mut &text[..]).unwrap();
        assert_eq!(t.flat(), &[1.0, 2.0, 3.0]);
    }
}
