//! Error type shared by shape construction, index arithmetic, and iteration.

use thiserror::Error;

/// Everything that can go wrong when building shapes or iterating tensors.
///
/// All validation happens up front, on whole shapes, so none of these are
/// raised from inside a per-element loop.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A shape or iteration was requested with a dimension outside the
    /// supported range `1..=MAX_DIMENSION`.
    #[error("dimension {dimension} is outside the supported range 1..={max}")]
    UnsupportedDimension { dimension: usize, max: usize },

    /// Two arguments that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A flat index does not address an element of the shape.
    #[error("flat index {index} is out of range for a tensor of {size} elements")]
    IndexOutOfRange { index: usize, size: usize },

    /// Tensor number `tensor` of an argument pack has a different dimension
    /// than the iteration shape.
    #[error("tensor {tensor}: iteration is {expected}-dimensional but the tensor is {actual}-dimensional")]
    TensorDimensionMismatch {
        tensor: usize,
        expected: usize,
        actual: usize,
    },

    /// Tensor number `tensor` of an argument pack is too small to contain
    /// the iteration shape on `axis`.
    #[error("tensor {tensor}: iteration needs {required} elements on axis {axis} but the tensor has {available}")]
    AxisOutOfBounds {
        tensor: usize,
        axis: usize,
        required: usize,
        available: usize,
    },

    /// A view window (start tuple plus window shape) sticks out of its base
    /// tensor on `axis`.
    #[error("view exceeds the base tensor on axis {axis}: start {start} + window {window} > {available}")]
    WindowOutOfBounds {
        axis: usize,
        start: usize,
        window: usize,
        available: usize,
    },

    /// An axis length must be a power of two for the log-domain operations.
    #[error("axis length {axis_len} is not a power of two")]
    NotPowerOfTwo { axis_len: usize },

    /// Flat storage was supplied with the wrong number of elements for the
    /// shape it is paired with.
    #[error("shape holds {expected} elements but {actual} were supplied")]
    ElementCountMismatch { expected: usize, actual: usize },

    /// An operation that grows axes (such as convolution) was given an
    /// empty axis it cannot handle.
    #[error("axis {axis} has length zero")]
    ZeroLengthAxis { axis: usize },
}
