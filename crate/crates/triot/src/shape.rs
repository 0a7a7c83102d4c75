//! Shapes, index tuples, and up-front bounds checking.
//!
//! A [`Shape`] is the list of axis lengths of a dense row-major tensor; an
//! [`IndexTuple`] addresses one element of such a tensor. All bounds
//! validation happens here, once per operation, so the per-element loops in
//! the rest of the crate never re-check anything.

use std::fmt;

use crate::engine::MAX_DIMENSION;
use crate::error::Error;

/// Axis lengths of a dense row-major tensor.
///
/// The dimension (number of axes) is between 1 and [`MAX_DIMENSION`];
/// individual axis lengths may be zero, which makes every iteration over the
/// shape an empty no-op.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    axes: Vec<usize>,
}

impl Shape {
    /// Builds a shape from axis lengths, rejecting unsupported dimensions.
    pub fn new(axes: impl Into<Vec<usize>>) -> Result<Self, Error> {
        let axes = axes.into();
        let dimension = axes.len();
        if dimension == 0 || dimension > MAX_DIMENSION {
            return Err(Error::UnsupportedDimension {
                dimension,
                max: MAX_DIMENSION,
            });
        }
        Ok(Self { axes })
    }

    /// Number of axes.
    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    /// Axis lengths, highest-order (slowest-varying) axis first.
    pub fn axes(&self) -> &[usize] {
        &self.axes
    }

    /// Length of one axis.
    pub fn axis(&self, k: usize) -> usize {
        self.axes[k]
    }

    /// Number of elements a tensor of this shape holds: the product of all
    /// axis lengths (1 for the empty product never occurs since `dimension
    /// >= 1`; a zero axis makes the whole product zero).
    pub fn flat_size(&self) -> usize {
        self.axes.iter().product()
    }

    /// Copies the axes into a fixed-size array once the dimension has been
    /// established by dispatch.
    pub(crate) fn fixed_axes<const D: usize>(&self) -> [usize; D] {
        self.axes[..]
            .try_into()
            .expect("dimension was matched before fixing the shape")
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, axis) in self.axes.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{axis}")?;
        }
        write!(f, ")")
    }
}

/// Coordinates of one element inside a [`Shape`].
///
/// A tuple is only meaningful relative to a shape of the same dimension;
/// [`IndexTuple::is_valid_for`] checks both the dimension and that every
/// coordinate is below the corresponding axis length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    coords: Vec<usize>,
}

impl IndexTuple {
    /// Wraps raw coordinates. Validity is relative to a shape, so nothing is
    /// checked here.
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Self {
            coords: coords.into(),
        }
    }

    /// The all-zeros tuple addressing the first element of any non-empty
    /// tensor of the given dimension.
    pub fn zeros(dimension: usize) -> Self {
        Self {
            coords: vec![0; dimension],
        }
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [usize] {
        &mut self.coords
    }

    /// Single coordinate access.
    pub fn coord(&self, k: usize) -> usize {
        self.coords[k]
    }

    /// True when the tuple has the shape's dimension and every coordinate is
    /// strictly below the matching axis length.
    pub fn is_valid_for(&self, shape: &Shape) -> bool {
        self.coords.len() == shape.dimension()
            && self.coords.iter().zip(shape.axes()).all(|(&c, &a)| c < a)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A shape whose axis lengths are all powers of two, stored as base-2 logs.
///
/// Lets [`crate::index::reindex_powers_of_2`] replace division and modulo
/// with shifts and masks. Converting a shape in and out of log form is exact:
/// `LogShape::from_shape(&s)?.to_shape() == s` whenever the conversion
/// succeeds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogShape {
    log_axes: Vec<u32>,
}

impl LogShape {
    /// Builds a log-shape directly from exponents: axis `k` has length
    /// `2^log_axes[k]`.
    pub fn new(log_axes: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let log_axes = log_axes.into();
        let dimension = log_axes.len();
        if dimension == 0 || dimension > MAX_DIMENSION {
            return Err(Error::UnsupportedDimension {
                dimension,
                max: MAX_DIMENSION,
            });
        }
        Ok(Self { log_axes })
    }

    /// Takes logs of every axis, rejecting any length that is not a power of
    /// two (zero included).
    pub fn from_shape(shape: &Shape) -> Result<Self, Error> {
        let mut log_axes = Vec::with_capacity(shape.dimension());
        for &axis_len in shape.axes() {
            if !axis_len.is_power_of_two() {
                return Err(Error::NotPowerOfTwo { axis_len });
            }
            log_axes.push(axis_len.trailing_zeros());
        }
        Ok(Self { log_axes })
    }

    /// Expands the exponents back into ordinary axis lengths.
    pub fn to_shape(&self) -> Shape {
        Shape::new(
            self.log_axes
                .iter()
                .map(|&l| 1usize << l)
                .collect::<Vec<_>>(),
        )
        .expect("log-shape dimension is already validated")
    }

    pub fn dimension(&self) -> usize {
        self.log_axes.len()
    }

    /// Base-2 logs of the axis lengths.
    pub fn log_axes(&self) -> &[u32] {
        &self.log_axes
    }
}

/// Checks that every tensor shape can absorb the iteration shape: same
/// dimension, and at least as long on every axis.
///
/// This is the single validation pass the iteration combinators run before
/// entering their loops; errors identify the offending tensor by its
/// position in `tensor_shapes`.
pub fn check_bounds(iteration: &Shape, tensor_shapes: &[&Shape]) -> Result<(), Error> {
    for (tensor, shape) in tensor_shapes.iter().enumerate() {
        check_tensor_bounds(iteration, shape, tensor)?;
    }
    Ok(())
}

/// [`check_bounds`] for a single tensor, reporting it as tensor number
/// `tensor` in errors.
pub(crate) fn check_tensor_bounds(
    iteration: &Shape,
    tensor_shape: &Shape,
    tensor: usize,
) -> Result<(), Error> {
    if tensor_shape.dimension() != iteration.dimension() {
        return Err(Error::TensorDimensionMismatch {
            tensor,
            expected: iteration.dimension(),
            actual: tensor_shape.dimension(),
        });
    }
    for (axis, (&required, &available)) in iteration
        .axes()
        .iter()
        .zip(tensor_shape.axes())
        .enumerate()
    {
        if required > available {
            return Err(Error::AxisOutOfBounds {
                tensor,
                axis,
                required,
                available,
            });
        }
    }
    Ok(())
}
