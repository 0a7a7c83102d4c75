//! Randomized transparency properties for windowed views: reading,
//! iterating, and writing through a view behaves exactly like addressing
//! the base tensor at window-start plus offset.

mod common;

use common::{flat_index_reference, lex_tuples};
use proptest::prelude::*;
use triot::{apply, for_each};
use triot::{Error, IndexTuple, Shape, Tensor, MAX_DIMENSION};

fn axis_cap(dimension: usize) -> usize {
    match dimension {
        1 => 24,
        2 => 8,
        3 => 6,
        4 => 4,
        _ => 3,
    }
}

/// A base shape, a window start inside it, and a window extent that fits.
fn base_start_window() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
    (1..=MAX_DIMENSION)
        .prop_flat_map(|d| prop::collection::vec(1..=axis_cap(d), d))
        .prop_flat_map(|base| {
            let pairs: Vec<_> = base
                .iter()
                .map(|&a| (0..a).prop_flat_map(move |s| (Just(s), 0..=a - s)))
                .collect();
            (Just(base), pairs)
        })
        .prop_map(|(base, pairs)| {
            let (start, window) = pairs.into_iter().unzip();
            (base, start, window)
        })
}

fn tensor_for(id: usize, axes: &[usize]) -> Tensor<f64> {
    Tensor::from_fn(Shape::new(axes).unwrap(), |k| (id * 1_000_003 + k) as f64)
}

proptest! {
    #[test]
    fn materializing_equals_the_reference_gather(
        (base_axes, start, window) in base_start_window()
    ) {
        let base = tensor_for(1, &base_axes);
        let view = base
            .view(&IndexTuple::new(&start[..]), Shape::new(&window[..]).unwrap())
            .unwrap();
        let copied = view.materialize();

        let bias = flat_index_reference(&start, &base_axes);
        prop_assert_eq!(view.bias(), bias);
        prop_assert_eq!(copied.shape().axes(), &window[..]);
        let expected: Vec<f64> = lex_tuples(&window)
            .iter()
            .map(|t| base.flat()[bias + flat_index_reference(t, &base_axes)])
            .collect();
        prop_assert_eq!(copied.flat(), &expected[..]);
    }

    #[test]
    fn iterating_a_view_matches_iterating_its_materialized_copy(
        (base_axes, start, window) in base_start_window()
    ) {
        let base = tensor_for(2, &base_axes);
        let window_shape = Shape::new(&window[..]).unwrap();
        let view = base
            .view(&IndexTuple::new(&start[..]), window_shape.clone())
            .unwrap();
        let copied = view.materialize();

        let mut via_view = Vec::new();
        for_each(&window_shape, |v: &f64| via_view.push(*v), (&view,)).unwrap();
        let mut via_copy = Vec::new();
        for_each(&window_shape, |v: &f64| via_copy.push(*v), (&copied,)).unwrap();
        prop_assert_eq!(via_view, via_copy);
    }

    #[test]
    fn getting_each_window_tuple_reads_the_reference_element(
        (base_axes, start, window) in base_start_window()
    ) {
        let base = tensor_for(3, &base_axes);
        let view = base
            .view(&IndexTuple::new(&start[..]), Shape::new(&window[..]).unwrap())
            .unwrap();
        let bias = flat_index_reference(&start, &base_axes);
        for t in lex_tuples(&window) {
            let got = *view.get(&IndexTuple::new(&t[..])).unwrap();
            let expected = base.flat()[bias + flat_index_reference(&t, &base_axes)];
            prop_assert_eq!(got.to_bits(), expected.to_bits());
        }
    }

    #[test]
    fn writing_through_a_view_scatters_into_the_window_only(
        (base_axes, start, window) in base_start_window()
    ) {
        let mut base = tensor_for(4, &base_axes);
        let src = tensor_for(9, &window);
        let window_shape = Shape::new(&window[..]).unwrap();

        let bias = flat_index_reference(&start, &base_axes);
        let mut expected = base.flat().to_vec();
        for t in lex_tuples(&window) {
            let s = src.flat()[flat_index_reference(&t, &window)];
            expected[bias + flat_index_reference(&t, &base_axes)] = 10.0 * s + 1.0;
        }

        let view = base
            .view_mut(&IndexTuple::new(&start[..]), window_shape.clone())
            .unwrap();
        apply(
            &window_shape,
            |d: &mut f64, s: &f64| *d = 10.0 * s + 1.0,
            view,
            (&src,),
        )
        .unwrap();
        prop_assert_eq!(base.flat(), &expected[..]);
    }
}

#[test]
fn windows_that_overhang_any_axis_are_rejected() {
    let base = tensor_for(1, &[4, 5]);
    let err = base.view(
        &IndexTuple::new([2, 3]),
        Shape::new([3, 2]).unwrap(),
    );
    assert_eq!(
        err.err(),
        Some(Error::WindowOutOfBounds {
            axis: 0,
            start: 2,
            window: 3,
            available: 4
        })
    );
}

#[test]
fn window_lookups_are_validated_against_the_window_shape() {
    let base = tensor_for(1, &[4, 5]);
    let view = base
        .view(&IndexTuple::new([1, 1]), Shape::new([2, 2]).unwrap())
        .unwrap();
    assert!(matches!(
        view.get(&IndexTuple::new([2, 0])),
        Err(Error::IndexOutOfRange { .. })
    ));
    assert!(matches!(
        view.get(&IndexTuple::new([0, 0, 0])),
        Err(Error::DimensionMismatch {
            expected: 2,
            actual: 3
        })
    ));
}
