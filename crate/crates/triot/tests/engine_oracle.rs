//! Randomized equivalence between the dispatched iteration engine and a
//! direct reference enumeration: same visit order, same argument values,
//! same final tensor contents, across dimensions and broadcast shapes.

mod common;

use common::{flat_index_reference, lex_tuples};
use proptest::prelude::*;
use triot::{apply, enumerate_for_each, for_each, modify};
use triot::{IndexTuple, Shape, Tensor, MAX_DIMENSION};

/// Iteration axes are kept small: with up to three tensors in play the
/// point is coverage of dimensions and broadcast offsets, not volume.
fn axis_cap(dimension: usize) -> usize {
    match dimension {
        1 => 16,
        2 => 6,
        3 => 4,
        4 => 3,
        _ => 2,
    }
}

fn iteration_axes() -> impl Strategy<Value = Vec<usize>> {
    (1..=MAX_DIMENSION).prop_flat_map(|d| prop::collection::vec(1..=axis_cap(d), d))
}

/// Axes of a tensor that contains the given iteration axes, each extended
/// by up to two extra positions so broadcasting is actually exercised.
fn containing(axes: &[usize]) -> Vec<std::ops::RangeInclusive<usize>> {
    axes.iter().map(|&a| a..=a + 2).collect()
}

fn iteration_and_tensor_axes(
    tensors: usize,
) -> impl Strategy<Value = (Vec<usize>, Vec<Vec<usize>>)> {
    iteration_axes().prop_flat_map(move |iter| {
        let shapes: Vec<_> = (0..tensors).map(|_| containing(&iter)).collect();
        (Just(iter), shapes)
    })
}

/// Deterministic, pairwise-distinct element values: tensor id and flat
/// position are both recoverable from the value.
fn tensor_for(id: usize, axes: &[usize]) -> Tensor<f64> {
    Tensor::from_fn(Shape::new(axes).unwrap(), |k| (id * 1_000_003 + k) as f64)
}

proptest! {
    #[test]
    fn for_each_visits_the_reference_values_in_reference_order(
        (iter, shapes) in iteration_and_tensor_axes(3)
    ) {
        let iteration = Shape::new(&iter[..]).unwrap();
        let x = tensor_for(1, &shapes[0]);
        let y = tensor_for(2, &shapes[1]);
        let z = tensor_for(3, &shapes[2]);

        let mut seen = Vec::new();
        for_each(
            &iteration,
            |a: &f64, b: &f64, c: &f64| seen.push((*a, *b, *c)),
            (&x, &y, &z),
        )
        .unwrap();

        let expected: Vec<_> = lex_tuples(&iter)
            .iter()
            .map(|t| {
                (
                    x.flat()[flat_index_reference(t, &shapes[0])],
                    y.flat()[flat_index_reference(t, &shapes[1])],
                    z.flat()[flat_index_reference(t, &shapes[2])],
                )
            })
            .collect();
        prop_assert_eq!(seen, expected);
    }

    #[test]
    fn enumerate_for_each_reports_the_reference_counters(
        (iter, shapes) in iteration_and_tensor_axes(2)
    ) {
        let iteration = Shape::new(&iter[..]).unwrap();
        let x = tensor_for(1, &shapes[0]);
        let y = tensor_for(2, &shapes[1]);

        let mut seen = Vec::new();
        enumerate_for_each(
            &iteration,
            |counter: &[usize], a: &f64, b: &f64| seen.push((counter.to_vec(), *a, *b)),
            (&x, &y),
        )
        .unwrap();

        let expected: Vec<_> = lex_tuples(&iter)
            .into_iter()
            .map(|t| {
                let a = x.flat()[flat_index_reference(&t, &shapes[0])];
                let b = y.flat()[flat_index_reference(&t, &shapes[1])];
                (t, a, b)
            })
            .collect();
        prop_assert_eq!(seen, expected);
    }

    #[test]
    fn apply_writes_exactly_the_reference_destination(
        (iter, shapes) in iteration_and_tensor_axes(3)
    ) {
        let iteration = Shape::new(&iter[..]).unwrap();
        let mut dest = tensor_for(1, &shapes[0]);
        let x = tensor_for(2, &shapes[1]);
        let y = tensor_for(3, &shapes[2]);

        // Reference: update a copy of the destination's flat storage at the
        // reference positions only, leaving everything else untouched.
        let mut expected = dest.flat().to_vec();
        for t in lex_tuples(&iter) {
            let d = flat_index_reference(&t, &shapes[0]);
            let a = x.flat()[flat_index_reference(&t, &shapes[1])];
            let b = y.flat()[flat_index_reference(&t, &shapes[2])];
            expected[d] = expected[d] + 2.0 * a - b;
        }

        apply(
            &iteration,
            |d: &mut f64, a: &f64, b: &f64| *d = *d + 2.0 * a - b,
            &mut dest,
            (&x, &y),
        )
        .unwrap();
        prop_assert_eq!(dest.flat(), &expected[..]);
    }

    #[test]
    fn modify_mutates_every_tensor_like_the_reference(
        (iter, shapes) in iteration_and_tensor_axes(2)
    ) {
        let iteration = Shape::new(&iter[..]).unwrap();
        let mut x = tensor_for(1, &shapes[0]);
        let mut y = tensor_for(2, &shapes[1]);

        let mut expected_x = x.flat().to_vec();
        let mut expected_y = y.flat().to_vec();
        for t in lex_tuples(&iter) {
            let a = flat_index_reference(&t, &shapes[0]);
            let b = flat_index_reference(&t, &shapes[1]);
            expected_y[b] += expected_x[a];
            expected_x[a] = -expected_x[a];
        }

        modify(
            &iteration,
            |a: &mut f64, b: &mut f64| {
                *b += *a;
                *a = -*a;
            },
            (&mut x, &mut y),
        )
        .unwrap();
        prop_assert_eq!(x.flat(), &expected_x[..]);
        prop_assert_eq!(y.flat(), &expected_y[..]);
    }
}

/// Windowed views in a pack read through their bias exactly like the
/// reference gather `base[bias + linearize(counter, base_axes)]`.
#[test]
fn views_in_a_pack_read_through_their_bias() {
    let base_axes = [5usize, 6, 4];
    let base = tensor_for(7, &base_axes);
    let start = [1usize, 2, 1];
    let window_axes = [3usize, 2, 2];
    let view = base
        .view(
            &IndexTuple::new(&start[..]),
            Shape::new(&window_axes[..]).unwrap(),
        )
        .unwrap();

    let mut seen = Vec::new();
    for_each(
        &Shape::new(&window_axes[..]).unwrap(),
        |v: &f64| seen.push(*v),
        (&view,),
    )
    .unwrap();

    let bias = flat_index_reference(&start, &base_axes);
    let expected: Vec<_> = lex_tuples(&window_axes)
        .iter()
        .map(|t| base.flat()[bias + flat_index_reference(t, &base_axes)])
        .collect();
    assert_eq!(seen, expected);
}
