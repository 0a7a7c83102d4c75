//! Flat-index arithmetic for dense row-major tensors.
//!
//! Linearization ([`tuple_to_index`]), its inverse ([`index_to_tuple`]), the
//! odometer step that walks tuples in lexicographic order
//! ([`advance_tuple`]), and translation of a flat index between two shapes
//! of the same dimension ([`reindex`], with a shift/mask fast path for
//! power-of-two shapes in [`reindex_powers_of_2`]).
//!
//! The typed functions validate their arguments and return errors; the
//! [`raw`] module exposes the same arithmetic on bare slices for callers
//! that have already validated, such as the iteration engine and the
//! reference kernels.

use crate::error::Error;
use crate::shape::{IndexTuple, LogShape, Shape};

/// Row-major linearization: the flat position of `tuple` inside `shape`.
///
/// Coordinates are folded from the highest-order axis down, multiplying by
/// the next axis length at each step, so the lowest-order coordinate varies
/// fastest in memory.
pub fn tuple_to_index(tuple: &IndexTuple, shape: &Shape) -> Result<usize, Error> {
    ensure_same_dimension(tuple.dimension(), shape.dimension())?;
    Ok(raw::tuple_to_index(tuple.coords(), shape.axes()))
}

/// Inverse of [`tuple_to_index`]: recovers the coordinates of flat position
/// `index` inside `shape`.
pub fn index_to_tuple(index: usize, shape: &Shape) -> Result<IndexTuple, Error> {
    let size = shape.flat_size();
    if index >= size {
        return Err(Error::IndexOutOfRange { index, size });
    }
    let mut tuple = IndexTuple::zeros(shape.dimension());
    raw::index_to_tuple(index, shape.axes(), tuple.coords_mut());
    Ok(tuple)
}

/// Steps `tuple` to its lexicographic successor inside `shape`, like the
/// odometer of a car: the last coordinate is incremented and overflow
/// carries toward the front.
///
/// After the last valid tuple, the first coordinate exceeds its axis length
/// by exactly one and all the others are zero; callers that loop over a whole
/// tensor stop after `flat_size` steps rather than inspecting the tuple.
pub fn advance_tuple(tuple: &mut IndexTuple, shape: &Shape) -> Result<(), Error> {
    ensure_same_dimension(tuple.dimension(), shape.dimension())?;
    raw::advance_tuple(tuple.coords_mut(), shape.axes());
    Ok(())
}

/// Translates a flat index in `shape` to the flat index of the same
/// coordinates in `new_shape`, without materializing the tuple.
///
/// Coordinates are peeled off `index` from the lowest-order axis and
/// reassembled against `new_shape`'s axis products. The result is the
/// composition `tuple_to_index(index_to_tuple(index, shape), new_shape)`
/// whenever the coordinates of `index` are valid for both shapes.
pub fn reindex(index: usize, shape: &Shape, new_shape: &Shape) -> Result<usize, Error> {
    ensure_same_dimension(new_shape.dimension(), shape.dimension())?;
    let size = shape.flat_size();
    if index >= size {
        return Err(Error::IndexOutOfRange { index, size });
    }
    Ok(raw::reindex(index, shape.axes(), new_shape.axes()))
}

/// [`reindex`] for power-of-two shapes: divisions and moduli become shifts
/// and masks against the base-2 logs of the axis lengths.
pub fn reindex_powers_of_2(
    index: usize,
    log_shape: &LogShape,
    new_log_shape: &LogShape,
) -> Result<usize, Error> {
    ensure_same_dimension(new_log_shape.dimension(), log_shape.dimension())?;
    let size = log_shape.to_shape().flat_size();
    if index >= size {
        return Err(Error::IndexOutOfRange { index, size });
    }
    Ok(raw::reindex_powers_of_2(
        index,
        log_shape.log_axes(),
        new_log_shape.log_axes(),
    ))
}

fn ensure_same_dimension(actual: usize, expected: usize) -> Result<(), Error> {
    if actual != expected {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(())
}

/// The same index arithmetic on bare slices and arrays, with no validation.
///
/// Callers are responsible for matching lengths and in-range values; the
/// iteration engine and the reference kernels validate once up front and
/// then stay in this module for every element.
pub mod raw {
    /// Row-major linearization of `tuple` inside `shape`.
    ///
    /// Both slices must have the same non-zero length.
    #[inline(always)]
    pub fn tuple_to_index(tuple: &[usize], shape: &[usize]) -> usize {
        debug_assert!(!tuple.is_empty());
        debug_assert_eq!(tuple.len(), shape.len());
        let last = tuple.len() - 1;
        let mut index = 0;
        for k in 0..last {
            index += tuple[k];
            index *= shape[k + 1];
        }
        index + tuple[last]
    }

    /// [`tuple_to_index`] with the dimension fixed at compile time, so the
    /// fold unrolls into straight-line adds and multiplies by loop-invariant
    /// axis lengths.
    #[inline(always)]
    pub fn tuple_to_index_fixed<const D: usize>(tuple: &[usize; D], shape: &[usize; D]) -> usize {
        const { assert!(D >= 1, "tensors have at least one axis") }
        let mut index = 0;
        for k in 0..D - 1 {
            index += tuple[k];
            index *= shape[k + 1];
        }
        index + tuple[D - 1]
    }

    /// Recovers coordinates from a flat index; `out` receives one coordinate
    /// per axis. All three slices must have the same non-zero length and
    /// every axis must be non-zero.
    #[inline]
    pub fn index_to_tuple(mut index: usize, shape: &[usize], out: &mut [usize]) {
        debug_assert_eq!(shape.len(), out.len());
        for k in (0..shape.len()).rev() {
            out[k] = index % shape[k];
            index /= shape[k];
        }
    }

    /// Lexicographic odometer step. After the final tuple of the shape, the
    /// leading coordinate is left one past its axis length.
    #[inline(always)]
    pub fn advance_tuple(tuple: &mut [usize], shape: &[usize]) {
        debug_assert!(!tuple.is_empty());
        debug_assert_eq!(tuple.len(), shape.len());
        let last = tuple.len() - 1;
        tuple[last] += 1;
        for k in (1..=last).rev() {
            if tuple[k] >= shape[k] {
                tuple[k - 1] += 1;
                tuple[k] = 0;
            } else {
                return;
            }
        }
    }

    /// [`advance_tuple`] with the dimension fixed at compile time.
    #[inline(always)]
    pub fn advance_tuple_fixed<const D: usize>(tuple: &mut [usize; D], shape: &[usize; D]) {
        const { assert!(D >= 1, "tensors have at least one axis") }
        tuple[D - 1] += 1;
        for k in (1..D).rev() {
            if tuple[k] >= shape[k] {
                tuple[k - 1] += 1;
                tuple[k] = 0;
            } else {
                return;
            }
        }
    }

    /// Translates `index` from `shape` to `new_shape` by peeling coordinates
    /// off the low end with div/mod and reassembling them against
    /// `new_shape`'s axis products.
    ///
    /// Stops as soon as the remaining index is zero: leading zero
    /// coordinates contribute nothing to the result, so they are never
    /// computed.
    #[inline(always)]
    pub fn reindex(mut index: usize, shape: &[usize], new_shape: &[usize]) -> usize {
        debug_assert_eq!(shape.len(), new_shape.len());
        let mut new_index = 0;
        let mut new_axis_product_from_right = 1;
        let mut k = shape.len();
        while index > 0 && k > 0 {
            k -= 1;
            let coordinate = index % shape[k];
            new_index += coordinate * new_axis_product_from_right;
            index /= shape[k];
            new_axis_product_from_right *= new_shape[k];
        }
        new_index
    }

    /// [`reindex`] over base-2 logs of power-of-two axis lengths: modulo
    /// becomes a mask, division and the axis products become shifts.
    #[inline(always)]
    pub fn reindex_powers_of_2(mut index: usize, log_shape: &[u32], new_log_shape: &[u32]) -> usize {
        debug_assert_eq!(log_shape.len(), new_log_shape.len());
        let mut new_index = 0;
        let mut new_axis_shift_from_right = 0u32;
        let mut k = log_shape.len();
        while index > 0 && k > 0 {
            k -= 1;
            let coordinate = index & ((1usize << log_shape[k]) - 1);
            new_index += coordinate << new_axis_shift_from_right;
            index >>= log_shape[k];
            new_axis_shift_from_right += new_log_shape[k];
        }
        new_index
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(axes: &[usize]) -> Shape {
        Shape::new(axes).unwrap()
    }

    #[test]
    fn tuple_to_index_matches_hand_computation() {
        // ((2 * 9 + 0) * 7 + 4) * 5 + 1 = 651
        assert_eq!(
            tuple_to_index(&IndexTuple::new([2, 0, 4, 1]), &shape(&[4, 9, 7, 5])),
            Ok(651)
        );
        assert_eq!(
            tuple_to_index(&IndexTuple::zeros(4), &shape(&[4, 9, 7, 5])),
            Ok(0)
        );
        // Last tuple maps to flat_size - 1.
        assert_eq!(
            tuple_to_index(&IndexTuple::new([3, 8, 6, 4]), &shape(&[4, 9, 7, 5])),
            Ok(1259)
        );
    }

    #[test]
    fn tuple_to_index_checks_dimension() {
        assert_eq!(
            tuple_to_index(&IndexTuple::new([1, 2]), &shape(&[4, 9, 7])),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn index_to_tuple_inverts_linearization() {
        let s = shape(&[4, 9, 7, 5]);
        assert_eq!(index_to_tuple(651, &s), Ok(IndexTuple::new([2, 0, 4, 1])));
        assert_eq!(index_to_tuple(0, &s), Ok(IndexTuple::zeros(4)));
        assert_eq!(index_to_tuple(1259, &s), Ok(IndexTuple::new([3, 8, 6, 4])));
        assert_eq!(
            index_to_tuple(1260, &s),
            Err(Error::IndexOutOfRange {
                index: 1260,
                size: 1260
            })
        );
    }

    #[test]
    fn advance_tuple_steps_lexicographically() {
        let s = shape(&[4, 9, 7]);
        let mut t = IndexTuple::zeros(3);
        advance_tuple(&mut t, &s).unwrap();
        assert_eq!(t, IndexTuple::new([0, 0, 1]));

        let mut t = IndexTuple::new([0, 0, 6]);
        advance_tuple(&mut t, &s).unwrap();
        assert_eq!(t, IndexTuple::new([0, 1, 0]));

        let mut t = IndexTuple::new([0, 8, 6]);
        advance_tuple(&mut t, &s).unwrap();
        assert_eq!(t, IndexTuple::new([1, 0, 0]));
    }

    #[test]
    fn advance_tuple_past_the_end_overflows_the_leading_coordinate() {
        let s = shape(&[4, 9, 7]);
        let mut t = IndexTuple::new([3, 8, 6]);
        advance_tuple(&mut t, &s).unwrap();
        // One past the end: leading coordinate out of range, the rest zero.
        assert_eq!(t, IndexTuple::new([4, 0, 0]));
    }

    #[test]
    fn advance_tuple_checks_dimension() {
        let mut t = IndexTuple::zeros(2);
        assert_eq!(
            advance_tuple(&mut t, &shape(&[4, 9, 7])),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn reindex_translates_between_shapes() {
        let old = shape(&[4, 9, 7, 5]);
        let new = shape(&[5, 10, 8, 6]);
        // (2, 0, 4, 1) is 651 in the old shape and
        // ((2 * 10 + 0) * 8 + 4) * 6 + 1 = 985 in the new one.
        assert_eq!(reindex(651, &old, &new), Ok(985));
        assert_eq!(reindex(0, &old, &new), Ok(0));
        // Identical shapes translate every index to itself.
        assert_eq!(reindex(651, &old, &old), Ok(651));
    }

    #[test]
    fn reindex_validates_arguments() {
        let old = shape(&[4, 9, 7, 5]);
        assert_eq!(
            reindex(1260, &old, &old),
            Err(Error::IndexOutOfRange {
                index: 1260,
                size: 1260
            })
        );
        assert_eq!(
            reindex(0, &old, &shape(&[4, 9, 7])),
            Err(Error::DimensionMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn reindex_powers_of_2_matches_reindex() {
        let old = LogShape::new([2, 3]).unwrap(); // shape (4, 8)
        let new = LogShape::new([3, 4]).unwrap(); // shape (8, 16)
        // 13 = (1, 5) in (4, 8); in (8, 16) that is 1 * 16 + 5 = 21.
        assert_eq!(reindex_powers_of_2(13, &old, &new), Ok(21));
        assert_eq!(reindex(13, &old.to_shape(), &new.to_shape()), Ok(21));
        assert_eq!(reindex_powers_of_2(0, &old, &new), Ok(0));
        assert_eq!(
            reindex_powers_of_2(32, &old, &old),
            Err(Error::IndexOutOfRange {
                index: 32,
                size: 32
            })
        );
    }

    #[test]
    fn raw_fixed_variants_agree_with_slice_variants() {
        let shape4 = [4usize, 9, 7, 5];
        let tuple4 = [2usize, 0, 4, 1];
        assert_eq!(raw::tuple_to_index_fixed(&tuple4, &shape4), 651);
        assert_eq!(raw::tuple_to_index(&tuple4, &shape4), 651);

        let mut a = [0usize, 8, 6];
        let mut b = a;
        let shape3 = [4usize, 9, 7];
        raw::advance_tuple(&mut a, &shape3);
        raw::advance_tuple_fixed(&mut b, &shape3);
        assert_eq!(a, [1, 0, 0]);
        assert_eq!(a, b);
    }
}
