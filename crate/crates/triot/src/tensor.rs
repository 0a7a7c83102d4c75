//! Dense row-major tensors and rectangular views into them.
//!
//! A view selects a window of a base tensor by a start tuple and a window
//! shape. It stores no copied data: accesses add the flat position of the
//! start tuple (the *bias*) and linearize against the base shape, so a view
//! participates in iteration exactly like a tensor whose elements happen to
//! live apart in memory.

use crate::error::Error;
use crate::index::raw;
use crate::shape::{IndexTuple, Shape};

/// A dense row-major tensor: a shape plus one flat element per position.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    shape: Shape,
    flat: Vec<T>,
}

impl<T> Tensor<T> {
    /// Wraps flat storage in a shape; the element count must match
    /// `shape.flat_size()` exactly.
    pub fn new(shape: Shape, flat: Vec<T>) -> Result<Self, Error> {
        if flat.len() != shape.flat_size() {
            return Err(Error::ElementCountMismatch {
                expected: shape.flat_size(),
                actual: flat.len(),
            });
        }
        Ok(Self { shape, flat })
    }

    /// A tensor with every element equal to `value`.
    pub fn filled(shape: Shape, value: T) -> Self
    where
        T: Clone,
    {
        let flat = vec![value; shape.flat_size()];
        Self { shape, flat }
    }

    /// A tensor of default elements (zeros for the numeric types).
    pub fn zeros(shape: Shape) -> Self
    where
        T: Default + Clone,
    {
        Self::filled(shape, T::default())
    }

    /// Builds the flat storage by calling `f` on every flat position in
    /// order.
    pub fn from_fn(shape: Shape, f: impl FnMut(usize) -> T) -> Self {
        let flat = (0..shape.flat_size()).map(f).collect();
        Self { shape, flat }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        self.shape.dimension()
    }

    /// The elements in row-major order.
    pub fn flat(&self) -> &[T] {
        &self.flat
    }

    pub fn flat_mut(&mut self) -> &mut [T] {
        &mut self.flat
    }

    /// Splits the tensor into its storage and its shape so a mutable borrow
    /// of the elements can coexist with a shared borrow of the layout.
    pub(crate) fn split_mut(&mut self) -> (&mut [T], &Shape) {
        (&mut self.flat, &self.shape)
    }

    /// Element at `tuple`, validating it against the shape.
    pub fn get(&self, tuple: &IndexTuple) -> Result<&T, Error> {
        let index = self.checked_flat_index(tuple)?;
        Ok(&self.flat[index])
    }

    /// Mutable element at `tuple`, validating it against the shape.
    pub fn get_mut(&mut self, tuple: &IndexTuple) -> Result<&mut T, Error> {
        let index = self.checked_flat_index(tuple)?;
        Ok(&mut self.flat[index])
    }

    fn checked_flat_index(&self, tuple: &IndexTuple) -> Result<usize, Error> {
        if !tuple.is_valid_for(&self.shape) {
            if tuple.dimension() != self.shape.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: self.shape.dimension(),
                    actual: tuple.dimension(),
                });
            }
            return Err(Error::IndexOutOfRange {
                index: raw::tuple_to_index(tuple.coords(), self.shape.axes()),
                size: self.shape.flat_size(),
            });
        }
        Ok(raw::tuple_to_index(tuple.coords(), self.shape.axes()))
    }

    /// A read-only window of shape `window` whose element `(0, ..., 0)` sits
    /// at `start` in this tensor. The window must fit inside the tensor on
    /// every axis.
    pub fn view(&self, start: &IndexTuple, window: Shape) -> Result<TensorView<'_, T>, Error> {
        let bias = view_bias(&self.shape, start, &window)?;
        Ok(TensorView {
            base: self,
            bias,
            window,
        })
    }

    /// A mutable window of shape `window` starting at `start`.
    pub fn view_mut(
        &mut self,
        start: &IndexTuple,
        window: Shape,
    ) -> Result<TensorViewMut<'_, T>, Error> {
        let bias = view_bias(&self.shape, start, &window)?;
        let Tensor { shape, flat } = self;
        Ok(TensorViewMut {
            flat,
            layout: shape,
            bias,
            window,
        })
    }
}

/// Validates that `start + window` fits in `base` on every axis and returns
/// the bias: the flat position of `start` inside `base`.
fn view_bias(base: &Shape, start: &IndexTuple, window: &Shape) -> Result<usize, Error> {
    if start.dimension() != base.dimension() {
        return Err(Error::DimensionMismatch {
            expected: base.dimension(),
            actual: start.dimension(),
        });
    }
    if window.dimension() != base.dimension() {
        return Err(Error::DimensionMismatch {
            expected: base.dimension(),
            actual: window.dimension(),
        });
    }
    for (axis, ((&s, &w), &available)) in start
        .coords()
        .iter()
        .zip(window.axes())
        .zip(base.axes())
        .enumerate()
    {
        if s + w > available {
            return Err(Error::WindowOutOfBounds {
                axis,
                start: s,
                window: w,
                available,
            });
        }
    }
    Ok(raw::tuple_to_index(start.coords(), base.axes()))
}

/// A read-only rectangular window into a [`Tensor`].
///
/// Tuples are linearized against the *base* tensor's shape and offset by the
/// view's bias, so no elements are copied or moved.
#[derive(Debug)]
pub struct TensorView<'a, T> {
    base: &'a Tensor<T>,
    bias: usize,
    window: Shape,
}

// Written out so cloning a view never demands T: Clone.
impl<'a, T> Clone for TensorView<'a, T> {
    fn clone(&self) -> Self {
        Self {
            base: self.base,
            bias: self.bias,
            window: self.window.clone(),
        }
    }
}

impl<'a, T> TensorView<'a, T> {
    /// The window shape: what the view looks like from the outside.
    pub fn window(&self) -> &Shape {
        &self.window
    }

    /// Flat position of the window's origin inside the base tensor.
    pub fn bias(&self) -> usize {
        self.bias
    }

    /// The whole base tensor this view was taken from.
    pub fn base(&self) -> &'a Tensor<T> {
        self.base
    }

    /// Element at `tuple` of the *window*, validated against the window
    /// shape.
    pub fn get(&self, tuple: &IndexTuple) -> Result<&'a T, Error> {
        if !tuple.is_valid_for(&self.window) {
            if tuple.dimension() != self.window.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: self.window.dimension(),
                    actual: tuple.dimension(),
                });
            }
            return Err(Error::IndexOutOfRange {
                index: raw::tuple_to_index(tuple.coords(), self.window.axes()),
                size: self.window.flat_size(),
            });
        }
        let index = self.bias + raw::tuple_to_index(tuple.coords(), self.base.shape().axes());
        Ok(&self.base.flat()[index])
    }

    /// Copies the window into a free-standing tensor by walking the window
    /// tuples in lexicographic order.
    pub fn materialize(&self) -> Tensor<T>
    where
        T: Clone,
    {
        let size = self.window.flat_size();
        let mut flat = Vec::with_capacity(size);
        if size > 0 {
            let mut tuple = IndexTuple::zeros(self.window.dimension());
            let base_axes = self.base.shape().axes();
            for _ in 0..size {
                let index = self.bias + raw::tuple_to_index(tuple.coords(), base_axes);
                flat.push(self.base.flat()[index].clone());
                raw::advance_tuple(tuple.coords_mut(), self.window.axes());
            }
        }
        Tensor {
            shape: self.window.clone(),
            flat,
        }
    }
}

/// A mutable rectangular window into a [`Tensor`].
///
/// Holds the base tensor's storage and shape split apart so the borrow
/// covers only one tensor-sized region while staying mutable.
#[derive(Debug)]
pub struct TensorViewMut<'a, T> {
    flat: &'a mut [T],
    layout: &'a Shape,
    bias: usize,
    window: Shape,
}

impl<'a, T> TensorViewMut<'a, T> {
    /// The window shape: what the view looks like from the outside.
    pub fn window(&self) -> &Shape {
        &self.window
    }

    /// Flat position of the window's origin inside the base tensor.
    pub fn bias(&self) -> usize {
        self.bias
    }

    /// Shape of the base tensor the window indexes into.
    pub fn layout(&self) -> &Shape {
        self.layout
    }

    /// Mutable element at `tuple` of the *window*, validated against the
    /// window shape.
    pub fn get_mut(&mut self, tuple: &IndexTuple) -> Result<&mut T, Error> {
        if !tuple.is_valid_for(&self.window) {
            if tuple.dimension() != self.window.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: self.window.dimension(),
                    actual: tuple.dimension(),
                });
            }
            return Err(Error::IndexOutOfRange {
                index: raw::tuple_to_index(tuple.coords(), self.window.axes()),
                size: self.window.flat_size(),
            });
        }
        let index = self.bias + raw::tuple_to_index(tuple.coords(), self.layout.axes());
        Ok(&mut self.flat[index])
    }

    pub(crate) fn into_parts(self) -> (&'a mut [T], &'a Shape, usize) {
        (self.flat, self.layout, self.bias)
    }
}
