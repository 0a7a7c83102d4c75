//! Property tests for the index arithmetic: linearization and enumeration
//! are checked against independent reference implementations, and the
//! shift/mask fast path is checked against the general div/mod path.

mod common;

use common::{flat_index_reference, lex_tuples};
use proptest::prelude::*;
use triot::index::{
    advance_tuple, index_to_tuple, raw, reindex, reindex_powers_of_2, tuple_to_index,
};
use triot::{Error, IndexTuple, LogShape, Shape, MAX_DIMENSION};

/// Axis bound chosen so a full enumeration stays in the low thousands of
/// tuples at every supported dimension.
fn axis_cap(dimension: usize) -> usize {
    match dimension {
        1 => 64,
        2 => 12,
        3 => 8,
        4 => 6,
        _ => 3,
    }
}

fn small_axes() -> impl Strategy<Value = Vec<usize>> {
    (1..=MAX_DIMENSION).prop_flat_map(|d| prop::collection::vec(1..=axis_cap(d), d))
}

fn axes_and_index() -> impl Strategy<Value = (Vec<usize>, usize)> {
    small_axes().prop_flat_map(|axes| {
        let size: usize = axes.iter().product();
        (Just(axes), 0..size)
    })
}

/// A shape together with a second shape that contains it axis by axis.
fn contained_axes() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    small_axes().prop_flat_map(|outer| {
        let inner: Vec<_> = outer.iter().map(|&a| 1..=a).collect();
        (inner, Just(outer))
    })
}

/// Per-axis base-2 logs for a power-of-two shape contained in another,
/// small enough to enumerate exhaustively.
fn contained_log_axes() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (1..=MAX_DIMENSION)
        .prop_flat_map(|d| prop::collection::vec((0u32..=3, 0u32..=3), d))
        .prop_map(|pairs| {
            let inner: Vec<u32> = pairs.iter().map(|&(a, b)| a.min(b)).collect();
            let outer: Vec<u32> = pairs.iter().map(|&(a, b)| a.max(b)).collect();
            (inner, outer)
        })
        .prop_filter("keep the enumeration small", |(inner, _)| {
            inner.iter().sum::<u32>() <= 12
        })
}

proptest! {
    #[test]
    fn flat_indexes_round_trip_through_tuples((axes, index) in axes_and_index()) {
        let shape = Shape::new(&axes[..]).unwrap();
        let tuple = index_to_tuple(index, &shape).unwrap();
        prop_assert!(tuple.is_valid_for(&shape));
        prop_assert_eq!(tuple_to_index(&tuple, &shape).unwrap(), index);
        prop_assert_eq!(flat_index_reference(tuple.coords(), &axes), index);
    }

    #[test]
    fn raw_and_validated_paths_agree((axes, index) in axes_and_index()) {
        let shape = Shape::new(&axes[..]).unwrap();
        let tuple = index_to_tuple(index, &shape).unwrap();
        prop_assert_eq!(raw::tuple_to_index(tuple.coords(), &axes), index);
        let mut out = vec![0usize; axes.len()];
        raw::index_to_tuple(index, &axes, &mut out);
        prop_assert_eq!(&out[..], tuple.coords());
    }

    #[test]
    fn the_odometer_enumerates_tuples_in_lexicographic_order(axes in small_axes()) {
        let shape = Shape::new(&axes[..]).unwrap();
        let mut tuple = IndexTuple::zeros(axes.len());
        for (k, expected) in lex_tuples(&axes).iter().enumerate() {
            prop_assert_eq!(tuple.coords(), &expected[..]);
            prop_assert_eq!(tuple_to_index(&tuple, &shape).unwrap(), k);
            advance_tuple(&mut tuple, &shape).unwrap();
        }
        // One past the end: the leading coordinate exceeds its axis by one
        // and every other coordinate is zero.
        prop_assert_eq!(tuple.coord(0), axes[0]);
        prop_assert!(tuple.coords()[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn reindexing_lands_on_the_same_tuple_in_the_new_shape(
        (inner, outer) in contained_axes()
    ) {
        let inner_shape = Shape::new(&inner[..]).unwrap();
        let outer_shape = Shape::new(&outer[..]).unwrap();
        for (k, tuple) in lex_tuples(&inner).iter().enumerate() {
            let mapped = reindex(k, &inner_shape, &outer_shape).unwrap();
            prop_assert_eq!(mapped, flat_index_reference(tuple, &outer));
        }
    }

    #[test]
    fn reindexing_into_the_same_shape_is_the_identity((axes, index) in axes_and_index()) {
        let shape = Shape::new(&axes[..]).unwrap();
        prop_assert_eq!(reindex(index, &shape, &shape).unwrap(), index);
    }

    #[test]
    fn shift_mask_reindexing_matches_the_general_path(
        (inner_logs, outer_logs) in contained_log_axes()
    ) {
        let inner_log = LogShape::new(&inner_logs[..]).unwrap();
        let outer_log = LogShape::new(&outer_logs[..]).unwrap();
        let inner = inner_log.to_shape();
        let outer = outer_log.to_shape();
        for k in 0..inner.flat_size() {
            prop_assert_eq!(
                reindex_powers_of_2(k, &inner_log, &outer_log).unwrap(),
                reindex(k, &inner, &outer).unwrap()
            );
        }
    }
}

#[test]
fn out_of_range_indexes_are_rejected_with_the_size() {
    let shape = Shape::new([4, 9, 7]).unwrap();
    assert_eq!(
        index_to_tuple(252, &shape),
        Err(Error::IndexOutOfRange {
            index: 252,
            size: 252
        })
    );
    let other = Shape::new([5, 10, 8]).unwrap();
    assert_eq!(
        reindex(252, &shape, &other),
        Err(Error::IndexOutOfRange {
            index: 252,
            size: 252
        })
    );
}

#[test]
fn mismatched_dimensions_are_rejected() {
    let three = Shape::new([4, 9, 7]).unwrap();
    let two = Shape::new([4, 9]).unwrap();
    assert_eq!(
        reindex(0, &three, &two),
        Err(Error::DimensionMismatch {
            expected: 3,
            actual: 2
        })
    );
    let tuple = IndexTuple::new([1, 2]);
    assert_eq!(
        tuple_to_index(&tuple, &three),
        Err(Error::DimensionMismatch {
            expected: 3,
            actual: 2
        })
    );
}
