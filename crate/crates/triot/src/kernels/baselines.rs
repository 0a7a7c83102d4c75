//! Reference iteration strategies the dispatched kernels are measured
//! against.
//!
//! Every function here recomputes one of the public kernel operations with
//! a conventional strategy:
//!
//! - *tuple iteration*: walk an [`IndexTuple`](crate::shape::IndexTuple)-style
//!   counter with the runtime-dimension odometer step and linearize it per
//!   tensor per element;
//! - *fixed-dimension tuple iteration*: the same walk after dimension
//!   dispatch, with the counter in a fixed-size array;
//! - *integer reindex*: iterate one flat counter and translate it into each
//!   tensor's flat space with div/mod peeling (or shift/mask for
//!   power-of-two shapes);
//! - *hard-coded loops*: hand-written loop nests for one specific
//!   dimension, with all index arithmetic hoisted by hand — the
//!   ceiling any generated iteration is compared against.
//!
//! All strategies visit tuples in lexicographic order and evaluate
//! arithmetically identical expressions, so for any given inputs every
//! strategy produces bit-identical floating-point results; only iteration
//! cost differs. As in the dispatched engine, bounds are validated once up
//! front and the loops use unchecked element access.

use crate::engine::{dispatch_dimension, DimensionWorker};
use crate::error::Error;
use crate::index::raw;
use crate::kernels::convolution_shape;
use crate::shape::{check_bounds, LogShape};
use crate::tensor::Tensor;

fn ensure_dimension(actual: usize, expected: usize) -> Result<(), Error> {
    if actual != expected {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// copy_embedded: dest[t] = src[t] over dest's shape.
// ---------------------------------------------------------------------------

/// [`copy_embedded`](crate::kernels::copy_embedded) by runtime tuple
/// iteration: the destination is walked flat while a counter tuple tracks
/// the position, and each source index is linearized from the counter.
pub fn copy_embedded_tuple_iteration(
    dest: &mut Tensor<f64>,
    src: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
    let size = dest.shape().flat_size();
    let src_axes = src.shape().axes();
    let (dest_flat, dest_layout) = dest.split_mut();
    let dest_axes = dest_layout.axes();
    let mut tuple = vec![0usize; dest_axes.len()];
    for k in 0..size {
        let src_index = raw::tuple_to_index(&tuple, src_axes);
        // SAFETY: the up-front containment check proves every tuple of the
        // destination shape linearizes inside src; k < size by the loop.
        unsafe {
            *dest_flat.get_unchecked_mut(k) = *src.flat().get_unchecked(src_index);
        }
        raw::advance_tuple(&mut tuple, dest_axes);
    }
    Ok(())
}

struct CopyFixed<'a> {
    dest_flat: &'a mut [f64],
    dest_axes: &'a [usize],
    src_flat: &'a [f64],
    src_axes: &'a [usize],
}

impl DimensionWorker for CopyFixed<'_> {
    type Output = ();

    fn run<const D: usize>(self) {
        let dest_axes: [usize; D] = self.dest_axes.try_into().expect("dispatched dimension");
        let src_axes: [usize; D] = self.src_axes.try_into().expect("dispatched dimension");
        let size: usize = dest_axes.iter().product();
        let mut tuple = [0usize; D];
        for k in 0..size {
            let src_index = raw::tuple_to_index_fixed(&tuple, &src_axes);
            // SAFETY: as in copy_embedded_tuple_iteration; bounds were
            // checked before dispatch.
            unsafe {
                *self.dest_flat.get_unchecked_mut(k) = *self.src_flat.get_unchecked(src_index);
            }
            raw::advance_tuple_fixed(&mut tuple, &dest_axes);
        }
    }
}

/// [`copy_embedded`](crate::kernels::copy_embedded) by tuple iteration with
/// the dimension fixed by dispatch, so the odometer step and the
/// linearization unroll.
pub fn copy_embedded_tuple_iteration_fixed_dim(
    dest: &mut Tensor<f64>,
    src: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
    let dimension = dest.dimension();
    let src_axes = src.shape().axes();
    let (dest_flat, dest_layout) = dest.split_mut();
    dispatch_dimension(
        dimension,
        CopyFixed {
            dest_flat,
            dest_axes: dest_layout.axes(),
            src_flat: src.flat(),
            src_axes,
        },
    )
}

/// [`copy_embedded`](crate::kernels::copy_embedded) by integer reindexing:
/// one flat counter over the destination, translated into the source's flat
/// space with div/mod peeling per element.
pub fn copy_embedded_reindex(dest: &mut Tensor<f64>, src: &Tensor<f64>) -> Result<(), Error> {
    check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
    let size = dest.shape().flat_size();
    let src_axes = src.shape().axes();
    let (dest_flat, dest_layout) = dest.split_mut();
    let dest_axes = dest_layout.axes();
    for k in 0..size {
        let src_index = raw::reindex(k, dest_axes, src_axes);
        // SAFETY: reindexing a valid destination index yields coordinates
        // valid for the containing source shape.
        unsafe {
            *dest_flat.get_unchecked_mut(k) = *src.flat().get_unchecked(src_index);
        }
    }
    Ok(())
}

/// [`copy_embedded_reindex`] with shift/mask translation; both shapes must
/// be powers of two on every axis.
pub fn copy_embedded_reindex_pow2(dest: &mut Tensor<f64>, src: &Tensor<f64>) -> Result<(), Error> {
    check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
    let dest_log = LogShape::from_shape(dest.shape())?;
    let src_log = LogShape::from_shape(src.shape())?;
    let size = dest.shape().flat_size();
    let dest_flat = dest.flat_mut();
    for k in 0..size {
        let src_index = raw::reindex_powers_of_2(k, dest_log.log_axes(), src_log.log_axes());
        // SAFETY: as in copy_embedded_reindex.
        unsafe {
            *dest_flat.get_unchecked_mut(k) = *src.flat().get_unchecked(src_index);
        }
    }
    Ok(())
}

/// [`copy_embedded`](crate::kernels::copy_embedded) as a hand-written 3-D
/// loop nest with per-level biases hoisted by hand.
pub fn copy_embedded_hard_coded(dest: &mut Tensor<f64>, src: &Tensor<f64>) -> Result<(), Error> {
    ensure_dimension(dest.dimension(), 3)?;
    check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
    let [_, s1, s2]: [usize; 3] = src.shape().axes().try_into().expect("dimension checked");
    let (dest_flat, dest_layout) = dest.split_mut();
    let [d0, d1, d2]: [usize; 3] = dest_layout.axes().try_into().expect("dimension checked");
    let src_flat = src.flat();
    for k in 0..d0 {
        let dest_bias_k = k * d1;
        let src_bias_k = k * s1;
        for j in 0..d1 {
            let dest_bias = (dest_bias_k + j) * d2;
            let src_bias = (src_bias_k + j) * s2;
            for i in 0..d2 {
                // SAFETY: biases follow the row-major layout of shapes the
                // up-front check proved containing.
                unsafe {
                    *dest_flat.get_unchecked_mut(dest_bias + i) =
                        *src_flat.get_unchecked(src_bias + i);
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// inner_product_shared: sum of x[t] * y[t] over y's shape (y is the smaller
// operand, so it is indexed flat while x is addressed through its tuples).
// ---------------------------------------------------------------------------

/// [`inner_product_shared`](crate::kernels::inner_product_shared) over
/// `y`'s shape by runtime tuple iteration.
pub fn inner_product_tuple_iteration(x: &Tensor<f64>, y: &Tensor<f64>) -> Result<f64, Error> {
    check_bounds(y.shape(), &[x.shape(), y.shape()])?;
    let size = y.shape().flat_size();
    let x_axes = x.shape().axes();
    let y_axes = y.shape().axes();
    let mut tuple = vec![0usize; y_axes.len()];
    let mut acc = 0.0;
    for k in 0..size {
        let x_index = raw::tuple_to_index(&tuple, x_axes);
        // SAFETY: tuples of y's shape linearize inside x by the containment
        // check; k < size by the loop.
        unsafe {
            acc += *x.flat().get_unchecked(x_index) * *y.flat().get_unchecked(k);
        }
        raw::advance_tuple(&mut tuple, y_axes);
    }
    Ok(acc)
}

struct InnerProductFixed<'a> {
    x_flat: &'a [f64],
    x_axes: &'a [usize],
    y_flat: &'a [f64],
    y_axes: &'a [usize],
}

impl DimensionWorker for InnerProductFixed<'_> {
    type Output = f64;

    fn run<const D: usize>(self) -> f64 {
        let x_axes: [usize; D] = self.x_axes.try_into().expect("dispatched dimension");
        let y_axes: [usize; D] = self.y_axes.try_into().expect("dispatched dimension");
        let size: usize = y_axes.iter().product();
        let mut tuple = [0usize; D];
        let mut acc = 0.0;
        for k in 0..size {
            let x_index = raw::tuple_to_index_fixed(&tuple, &x_axes);
            // SAFETY: as in inner_product_tuple_iteration.
            unsafe {
                acc += *self.x_flat.get_unchecked(x_index) * *self.y_flat.get_unchecked(k);
            }
            raw::advance_tuple_fixed(&mut tuple, &y_axes);
        }
        acc
    }
}

/// [`inner_product_shared`](crate::kernels::inner_product_shared) by tuple
/// iteration with the dimension fixed by dispatch.
pub fn inner_product_tuple_iteration_fixed_dim(
    x: &Tensor<f64>,
    y: &Tensor<f64>,
) -> Result<f64, Error> {
    check_bounds(y.shape(), &[x.shape(), y.shape()])?;
    dispatch_dimension(
        y.dimension(),
        InnerProductFixed {
            x_flat: x.flat(),
            x_axes: x.shape().axes(),
            y_flat: y.flat(),
            y_axes: y.shape().axes(),
        },
    )
}

/// [`inner_product_shared`](crate::kernels::inner_product_shared) by
/// integer reindexing of the flat counter into `x`'s flat space.
pub fn inner_product_reindex(x: &Tensor<f64>, y: &Tensor<f64>) -> Result<f64, Error> {
    check_bounds(y.shape(), &[x.shape(), y.shape()])?;
    let size = y.shape().flat_size();
    let x_axes = x.shape().axes();
    let y_axes = y.shape().axes();
    let mut acc = 0.0;
    for k in 0..size {
        let x_index = raw::reindex(k, y_axes, x_axes);
        // SAFETY: as in inner_product_tuple_iteration.
        unsafe {
            acc += *x.flat().get_unchecked(x_index) * *y.flat().get_unchecked(k);
        }
    }
    Ok(acc)
}

/// [`inner_product_reindex`] with shift/mask translation; both shapes must
/// be powers of two on every axis.
pub fn inner_product_reindex_pow2(x: &Tensor<f64>, y: &Tensor<f64>) -> Result<f64, Error> {
    check_bounds(y.shape(), &[x.shape(), y.shape()])?;
    let x_log = LogShape::from_shape(x.shape())?;
    let y_log = LogShape::from_shape(y.shape())?;
    let size = y.shape().flat_size();
    let mut acc = 0.0;
    for k in 0..size {
        let x_index = raw::reindex_powers_of_2(k, y_log.log_axes(), x_log.log_axes());
        // SAFETY: as in inner_product_tuple_iteration.
        unsafe {
            acc += *x.flat().get_unchecked(x_index) * *y.flat().get_unchecked(k);
        }
    }
    Ok(acc)
}

/// [`inner_product_shared`](crate::kernels::inner_product_shared) as a
/// hand-written 3-D loop nest.
pub fn inner_product_hard_coded(x: &Tensor<f64>, y: &Tensor<f64>) -> Result<f64, Error> {
    ensure_dimension(y.dimension(), 3)?;
    check_bounds(y.shape(), &[x.shape(), y.shape()])?;
    let [_, x1, x2]: [usize; 3] = x.shape().axes().try_into().expect("dimension checked");
    let [y0, y1, y2]: [usize; 3] = y.shape().axes().try_into().expect("dimension checked");
    let x_flat = x.flat();
    let y_flat = y.flat();
    let mut acc = 0.0;
    for k in 0..y0 {
        let x_bias_k = k * x1;
        let y_bias_k = k * y1;
        for j in 0..y1 {
            let x_bias = (x_bias_k + j) * x2;
            let y_bias = (y_bias_k + j) * y2;
            for i in 0..y2 {
                // SAFETY: as in copy_embedded_hard_coded.
                unsafe {
                    acc += *x_flat.get_unchecked(x_bias + i) * *y_flat.get_unchecked(y_bias + i);
                }
            }
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// fused_update: x = x + y * x - z over x's shape (x is the smallest operand
// and is indexed flat; y and z are addressed through their tuples).
// ---------------------------------------------------------------------------

/// [`fused_update`](crate::kernels::fused_update) by runtime tuple
/// iteration.
pub fn fused_update_tuple_iteration(
    x: &mut Tensor<f64>,
    y: &Tensor<f64>,
    z: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
    let size = x.shape().flat_size();
    let y_axes = y.shape().axes();
    let z_axes = z.shape().axes();
    let (x_flat, x_layout) = x.split_mut();
    let x_axes = x_layout.axes();
    let mut tuple = vec![0usize; x_axes.len()];
    for k in 0..size {
        let y_index = raw::tuple_to_index(&tuple, y_axes);
        let z_index = raw::tuple_to_index(&tuple, z_axes);
        // SAFETY: tuples of x's shape linearize inside y and z by the
        // containment check; k < size by the loop.
        unsafe {
            let old = *x_flat.get_unchecked(k);
            *x_flat.get_unchecked_mut(k) =
                old + *y.flat().get_unchecked(y_index) * old - *z.flat().get_unchecked(z_index);
        }
        raw::advance_tuple(&mut tuple, x_axes);
    }
    Ok(())
}

struct FusedUpdateFixed<'a> {
    x_flat: &'a mut [f64],
    x_axes: &'a [usize],
    y_flat: &'a [f64],
    y_axes: &'a [usize],
    z_flat: &'a [f64],
    z_axes: &'a [usize],
}

impl DimensionWorker for FusedUpdateFixed<'_> {
    type Output = ();

    fn run<const D: usize>(self) {
        let x_axes: [usize; D] = self.x_axes.try_into().expect("dispatched dimension");
        let y_axes: [usize; D] = self.y_axes.try_into().expect("dispatched dimension");
        let z_axes: [usize; D] = self.z_axes.try_into().expect("dispatched dimension");
        let size: usize = x_axes.iter().product();
        let mut tuple = [0usize; D];
        for k in 0..size {
            let y_index = raw::tuple_to_index_fixed(&tuple, &y_axes);
            let z_index = raw::tuple_to_index_fixed(&tuple, &z_axes);
            // SAFETY: as in fused_update_tuple_iteration.
            unsafe {
                let old = *self.x_flat.get_unchecked(k);
                *self.x_flat.get_unchecked_mut(k) = old
                    + *self.y_flat.get_unchecked(y_index) * old
                    - *self.z_flat.get_unchecked(z_index);
            }
            raw::advance_tuple_fixed(&mut tuple, &x_axes);
        }
    }
}

/// [`fused_update`](crate::kernels::fused_update) by tuple iteration with
/// the dimension fixed by dispatch.
pub fn fused_update_tuple_iteration_fixed_dim(
    x: &mut Tensor<f64>,
    y: &Tensor<f64>,
    z: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
    let dimension = x.dimension();
    let y_axes = y.shape().axes();
    let z_axes = z.shape().axes();
    let (x_flat, x_layout) = x.split_mut();
    dispatch_dimension(
        dimension,
        FusedUpdateFixed {
            x_flat,
            x_axes: x_layout.axes(),
            y_flat: y.flat(),
            y_axes,
            z_flat: z.flat(),
            z_axes,
        },
    )
}

/// [`fused_update`](crate::kernels::fused_update) by integer reindexing of
/// the flat counter into `y`'s and `z`'s flat spaces.
pub fn fused_update_reindex(
    x: &mut Tensor<f64>,
    y: &Tensor<f64>,
    z: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
    let size = x.shape().flat_size();
    let y_axes = y.shape().axes();
    let z_axes = z.shape().axes();
    let (x_flat, x_layout) = x.split_mut();
    let x_axes = x_layout.axes();
    for k in 0..size {
        let y_index = raw::reindex(k, x_axes, y_axes);
        let z_index = raw::reindex(k, x_axes, z_axes);
        // SAFETY: as in fused_update_tuple_iteration.
        unsafe {
            let old = *x_flat.get_unchecked(k);
            *x_flat.get_unchecked_mut(k) =
                old + *y.flat().get_unchecked(y_index) * old - *z.flat().get_unchecked(z_index);
        }
    }
    Ok(())
}

/// [`fused_update_reindex`] with shift/mask translation; all three shapes
/// must be powers of two on every axis.
pub fn fused_update_reindex_pow2(
    x: &mut Tensor<f64>,
    y: &Tensor<f64>,
    z: &Tensor<f64>,
) -> Result<(), Error> {
    check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
    let x_log = LogShape::from_shape(x.shape())?;
    let y_log = LogShape::from_shape(y.shape())?;
    let z_log = LogShape::from_shape(z.shape())?;
    let size = x.shape().flat_size();
    let x_flat = x.flat_mut();
    for k in 0..size {
        let y_index = raw::reindex_powers_of_2(k, x_log.log_axes(), y_log.log_axes());
        let z_index = raw::reindex_powers_of_2(k, x_log.log_axes(), z_log.log_axes());
        // SAFETY: as in fused_update_tuple_iteration.
        unsafe {
            let old = *x_flat.get_unchecked(k);
            *x_flat.get_unchecked_mut(k) =
                old + *y.flat().get_unchecked(y_index) * old - *z.flat().get_unchecked(z_index);
        }
    }
    Ok(())
}

/// [`fused_update`](crate::kernels::fused_update) as a hand-written 4-D
/// loop nest with per-level biases hoisted by hand.
pub fn fused_update_hard_coded(
    x: &mut Tensor<f64>,
    y: &Tensor<f64>,
    z: &Tensor<f64>,
) -> Result<(), Error> {
    ensure_dimension(x.dimension(), 4)?;
    check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
    let [_, y1, y2, y3]: [usize; 4] = y.shape().axes().try_into().expect("dimension checked");
    let [_, z1, z2, z3]: [usize; 4] = z.shape().axes().try_into().expect("dimension checked");
    let (x_flat, x_layout) = x.split_mut();
    let [x0, x1, x2, x3]: [usize; 4] = x_layout.axes().try_into().expect("dimension checked");
    let y_flat = y.flat();
    let z_flat = z.flat();
    for a in 0..x0 {
        let x_bias_a = a * x1;
        let y_bias_a = a * y1;
        let z_bias_a = a * z1;
        for b in 0..x1 {
            let x_bias_b = (x_bias_a + b) * x2;
            let y_bias_b = (y_bias_a + b) * y2;
            let z_bias_b = (z_bias_a + b) * z2;
            for c in 0..x2 {
                let x_bias_c = (x_bias_b + c) * x3;
                let y_bias_c = (y_bias_b + c) * y3;
                let z_bias_c = (z_bias_b + c) * z3;
                for e in 0..x3 {
                    // SAFETY: as in copy_embedded_hard_coded.
                    unsafe {
                        let old = *x_flat.get_unchecked(x_bias_c + e);
                        *x_flat.get_unchecked_mut(x_bias_c + e) = old
                            + *y_flat.get_unchecked(y_bias_c + e) * old
                            - *z_flat.get_unchecked(z_bias_c + e);
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Convolution by tuple iteration with the dimension fixed by dispatch.
// ---------------------------------------------------------------------------

struct ConvolveFixed<'a> {
    lhs_flat: &'a [f64],
    lhs_axes: &'a [usize],
    rhs_flat: &'a [f64],
    rhs_axes: &'a [usize],
    result_flat: &'a mut [f64],
    result_axes: &'a [usize],
}

impl DimensionWorker for ConvolveFixed<'_> {
    type Output = ();

    fn run<const D: usize>(self) {
        let lhs_axes: [usize; D] = self.lhs_axes.try_into().expect("dispatched dimension");
        let rhs_axes: [usize; D] = self.rhs_axes.try_into().expect("dispatched dimension");
        let result_axes: [usize; D] = self.result_axes.try_into().expect("dispatched dimension");
        let lhs_size: usize = lhs_axes.iter().product();
        let rhs_size: usize = rhs_axes.iter().product();
        let mut lhs_tuple = [0usize; D];
        let mut result_tuple = [0usize; D];
        for _ in 0..lhs_size {
            let mut rhs_tuple = [0usize; D];
            for _ in 0..rhs_size {
                for k in 0..D {
                    result_tuple[k] = lhs_tuple[k] + rhs_tuple[k];
                }
                let result_index = raw::tuple_to_index_fixed(&result_tuple, &result_axes);
                let lhs_index = raw::tuple_to_index_fixed(&lhs_tuple, &lhs_axes);
                let rhs_index = raw::tuple_to_index_fixed(&rhs_tuple, &rhs_axes);
                // SAFETY: operand tuples stay in their own shapes and their
                // coordinate sums stay in the result shape by construction.
                unsafe {
                    *self.result_flat.get_unchecked_mut(result_index) += *self
                        .lhs_flat
                        .get_unchecked(lhs_index)
                        * *self.rhs_flat.get_unchecked(rhs_index);
                }
                raw::advance_tuple_fixed(&mut rhs_tuple, &rhs_axes);
            }
            raw::advance_tuple_fixed(&mut lhs_tuple, &lhs_axes);
        }
    }
}

/// [`convolve_tuple_iteration`](crate::kernels::convolve_tuple_iteration)
/// with the dimension fixed by dispatch.
pub fn convolve_tuple_iteration_fixed_dim(
    lhs: &Tensor<f64>,
    rhs: &Tensor<f64>,
) -> Result<Tensor<f64>, Error> {
    let result_shape = convolution_shape(lhs.shape(), rhs.shape())?;
    let mut result = Tensor::<f64>::zeros(result_shape);
    let dimension = lhs.dimension();
    let (result_flat, result_layout) = result.split_mut();
    dispatch_dimension(
        dimension,
        ConvolveFixed {
            lhs_flat: lhs.flat(),
            lhs_axes: lhs.shape().axes(),
            rhs_flat: rhs.flat(),
            rhs_axes: rhs.shape().axes(),
            result_flat,
            result_axes: result_layout.axes(),
        },
    )?;
    Ok(result)
}
