//! Iterate callbacks over several dense tensors of different shapes at
//! once, with loop kernels generated per dimension at compile time and
//! selected by a bounded runtime dispatch.
//!
//! The pieces:
//!
//! - [`shape`]: [`Shape`], [`IndexTuple`], [`LogShape`], and the single
//!   up-front bounds check every iteration runs.
//! - [`index`]: row-major linearization, the lexicographic odometer step,
//!   and flat-index translation between shapes.
//! - [`tensor`]: dense [`Tensor`] storage and zero-copy rectangular views.
//! - [`engine`]: the iteration combinators ([`for_each`], [`apply`],
//!   [`modify`], [`enumerate_for_each`]) and the dimension dispatch they are
//!   built on.
//! - [`kernels`]: ready-made operations built from the combinators, next to
//!   reference implementations of the same operations written with
//!   conventional iteration strategies.
//! - [`fixture`]: a plain-text tensor interchange format.
//!
//! Tensors own plain `Vec` storage and borrow immutably or mutably like any
//! other Rust data: shared references iterate concurrently without locks,
//! and mutation requires exclusive access, so data races are ruled out at
//! compile time.

pub mod engine;
pub mod error;
pub mod fixture;
pub mod index;
pub mod kernels;
pub mod shape;
pub mod tensor;

pub use engine::{
    apply, dispatch_dimension, enumerate_for_each, for_each, modify, DimensionWorker,
    MAX_DIMENSION,
};
pub use error::Error;
pub use shape::{check_bounds, IndexTuple, LogShape, Shape};
pub use tensor::{Tensor, TensorView, TensorViewMut};
