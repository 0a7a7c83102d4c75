//! Ready-made tensor operations built on the iteration combinators, next to
//! reference implementations of the same operations using conventional
//! iteration strategies ([`baselines`]).
//!
//! The public functions here are the dimension-dispatched versions: they
//! validate once, dispatch on the dimension, and run dimension-fixed loop
//! nests. The [`baselines`] module holds the strategies they are measured
//! against — runtime tuple iteration, integer reindexing, and hand-written
//! fixed-dimension loops — each computing bit-identical results so the
//! comparison is purely about iteration cost.

pub mod baselines;

use std::ops::{Add, AddAssign, Mul, Sub};

use crate::engine::{apply, enumerate_for_each, for_each, MAX_DIMENSION};
use crate::error::Error;
use crate::index::raw;
use crate::shape::Shape;
use crate::tensor::Tensor;

/// Copies the leading window of `src` into all of `dest`: for every tuple
/// `t` of `dest`'s shape, `dest[t] = src[t]`.
///
/// `src` must contain `dest`'s shape on every axis. (The reverse operation,
/// writing into a window of a larger tensor, is a view: take
/// [`Tensor::view_mut`] of the destination and `modify` it.)
pub fn copy_embedded<T: Copy>(dest: &mut Tensor<T>, src: &Tensor<T>) -> Result<(), Error> {
    let shape = dest.shape().clone();
    apply(&shape, |d: &mut T, s: &T| *d = *s, dest, (src,))
}

/// Inner product of the elements of `x` and `y` over a shared iteration
/// shape contained in both: the sum of `x[t] * y[t]` in lexicographic tuple
/// order.
pub fn inner_product_shared<T>(x: &Tensor<T>, y: &Tensor<T>, shape: &Shape) -> Result<T, Error>
where
    T: Copy + Default + Mul<Output = T> + AddAssign,
{
    let mut acc = T::default();
    for_each(shape, |xv: &T, yv: &T| acc += *xv * *yv, (x, y))?;
    Ok(acc)
}

/// Fused elementwise update `x = x + y * x - z` over `x`'s shape, which `y`
/// and `z` must contain.
pub fn fused_update<T>(x: &mut Tensor<T>, y: &Tensor<T>, z: &Tensor<T>) -> Result<(), Error>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let shape = x.shape().clone();
    apply(
        &shape,
        |xv: &mut T, yv: &T, zv: &T| {
            let old = *xv;
            *xv = old + *yv * old - *zv;
        },
        x,
        (y, z),
    )
}

/// Shape of a full discrete convolution: each axis grows to
/// `lhs_axis + rhs_axis - 1`.
///
/// Both operands must have the same dimension and no empty axes (an empty
/// operand has no well-defined convolution support).
pub fn convolution_shape(lhs: &Shape, rhs: &Shape) -> Result<Shape, Error> {
    if lhs.dimension() != rhs.dimension() {
        return Err(Error::DimensionMismatch {
            expected: lhs.dimension(),
            actual: rhs.dimension(),
        });
    }
    let mut axes = Vec::with_capacity(lhs.dimension());
    for (axis, (&l, &r)) in lhs.axes().iter().zip(rhs.axes()).enumerate() {
        if l == 0 || r == 0 {
            return Err(Error::ZeroLengthAxis { axis });
        }
        axes.push(l + r - 1);
    }
    Shape::new(axes)
}

/// Full discrete convolution by runtime tuple iteration: for every pair of
/// an `lhs` tuple and an `rhs` tuple, the product of their elements is
/// accumulated at the elementwise sum of the tuples.
///
/// Every flat position is recomputed from its tuple by runtime-dimension
/// linearization each time it is needed — the conventional strategy the
/// dispatched version is measured against.
pub fn convolve_tuple_iteration<T>(lhs: &Tensor<T>, rhs: &Tensor<T>) -> Result<Tensor<T>, Error>
where
    T: Copy + Default + Mul<Output = T> + AddAssign,
{
    let result_shape = convolution_shape(lhs.shape(), rhs.shape())?;
    let mut result = Tensor::<T>::zeros(result_shape);
    let dimension = lhs.dimension();
    let lhs_axes = lhs.shape().axes();
    let rhs_axes = rhs.shape().axes();
    let lhs_size = lhs.shape().flat_size();
    let rhs_size = rhs.shape().flat_size();
    let (result_flat, result_layout) = result.split_mut();
    let result_axes = result_layout.axes();

    let mut lhs_tuple = vec![0usize; dimension];
    let mut rhs_tuple = vec![0usize; dimension];
    let mut result_tuple = vec![0usize; dimension];
    for _ in 0..lhs_size {
        rhs_tuple.fill(0);
        for _ in 0..rhs_size {
            for k in 0..dimension {
                result_tuple[k] = lhs_tuple[k] + rhs_tuple[k];
            }
            let result_index = raw::tuple_to_index(&result_tuple, result_axes);
            let lhs_index = raw::tuple_to_index(&lhs_tuple, lhs_axes);
            let rhs_index = raw::tuple_to_index(&rhs_tuple, rhs_axes);
            // SAFETY: lhs and rhs tuples stay inside their own shapes, and
            // coordinate sums are at most (lhs_axis - 1) + (rhs_axis - 1),
            // the last valid result coordinate on that axis.
            unsafe {
                *result_flat.get_unchecked_mut(result_index) +=
                    *lhs.flat().get_unchecked(lhs_index) * *rhs.flat().get_unchecked(rhs_index);
            }
            raw::advance_tuple(&mut rhs_tuple, rhs_axes);
        }
        raw::advance_tuple(&mut lhs_tuple, lhs_axes);
    }
    Ok(result)
}

/// Full discrete convolution as two nested dimension-dispatched
/// enumerations: the outer walks `lhs`, the inner walks `rhs`, and each
/// inner visit accumulates into the result at the coordinate sum.
///
/// Pairs are visited in the same lexicographic order as
/// [`convolve_tuple_iteration`], so the two produce bit-identical results
/// for floating-point elements.
pub fn convolve_triot<T>(lhs: &Tensor<T>, rhs: &Tensor<T>) -> Result<Tensor<T>, Error>
where
    T: Copy + Default + Mul<Output = T> + AddAssign,
{
    let result_shape = convolution_shape(lhs.shape(), rhs.shape())?;
    let mut result = Tensor::<T>::zeros(result_shape);
    let (result_flat, result_layout) = result.split_mut();
    let result_axes = result_layout.axes();

    // One scratch tuple reused across all pairs, written by the innermost
    // callback just before each accumulation. Its capacity is the dispatch
    // bound rather than the runtime dimension, and the active length below
    // is read off the counter slices: the monomorphized loop nests hand
    // those over with a compile-time length, so the sums and the
    // linearization unroll after inlining.
    let mut result_tuple = [0usize; MAX_DIMENSION];
    enumerate_for_each(
        lhs.shape(),
        |lhs_counter: &[usize], lhs_value: &T| {
            enumerate_for_each(
                rhs.shape(),
                |rhs_counter: &[usize], rhs_value: &T| {
                    let dimension = rhs_counter.len();
                    for k in 0..dimension {
                        result_tuple[k] = lhs_counter[k] + rhs_counter[k];
                    }
                    let result_index =
                        raw::tuple_to_index(&result_tuple[..dimension], result_axes);
                    // SAFETY: as in convolve_tuple_iteration — coordinate
                    // sums cannot leave the result shape.
                    unsafe {
                        *result_flat.get_unchecked_mut(result_index) += *lhs_value * *rhs_value;
                    }
                },
                (rhs,),
            )
            .expect("iterating a tensor over its own shape cannot fail");
        },
        (lhs,),
    )?;
    Ok(result)
}
