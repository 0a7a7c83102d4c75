//! Runtime dimension dispatch into dimension-fixed code.
//!
//! Loop kernels are generated once per supported dimension, but a shape's
//! dimension is only known at runtime. [`dispatch_dimension`] bridges the
//! gap with a chain of integer comparisons — bounded by [`MAX_DIMENSION`],
//! resolved without any indirect calls — that hands control to a
//! [`DimensionWorker`] monomorphized for the matched dimension.

use crate::error::Error;

/// Largest tensor dimension kernels are generated for: 8 by default, raised
/// to 16 or 32 by the `max-dim-16` / `max-dim-32` features at the cost of
/// proportionally more generated code.
pub const MAX_DIMENSION: usize = if cfg!(feature = "max-dim-32") {
    32
} else if cfg!(feature = "max-dim-16") {
    16
} else {
    8
};

/// A computation that wants its tensor dimension as a compile-time constant.
///
/// Implementors put their runtime inputs in `self`; [`dispatch_dimension`]
/// calls [`run`](DimensionWorker::run) with `D` equal to the runtime
/// dimension it matched.
pub trait DimensionWorker {
    type Output;

    /// Runs the computation with the dimension fixed at compile time.
    fn run<const D: usize>(self) -> Self::Output;
}

/// The supported-dimension table. Invokes `$consumer` with the parenthesized
/// extra arguments followed by one `(gate dimension [axis literals])` row
/// per dimension that can be compiled in, so every dispatch chain and loop
/// nest in the crate is generated from this single list.
///
/// `gate` selects the feature gate: `base` rows are always present, `dim16`
/// rows need `max-dim-16`, and `dim32` rows need `max-dim-32` (which
/// implies `max-dim-16`).
macro_rules! for_each_supported_dimension {
    ($consumer:ident!($($args:tt)*)) => {
        $consumer!(
            ($($args)*)
            (base 1 [0])
            (base 2 [0 1])
            (base 3 [0 1 2])
            (base 4 [0 1 2 3])
            (base 5 [0 1 2 3 4])
            (base 6 [0 1 2 3 4 5])
            (base 7 [0 1 2 3 4 5 6])
            (base 8 [0 1 2 3 4 5 6 7])
            (dim16 9 [0 1 2 3 4 5 6 7 8])
            (dim16 10 [0 1 2 3 4 5 6 7 8 9])
            (dim16 11 [0 1 2 3 4 5 6 7 8 9 10])
            (dim16 12 [0 1 2 3 4 5 6 7 8 9 10 11])
            (dim16 13 [0 1 2 3 4 5 6 7 8 9 10 11 12])
            (dim16 14 [0 1 2 3 4 5 6 7 8 9 10 11 12 13])
            (dim16 15 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14])
            (dim16 16 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15])
            (dim32 17 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16])
            (dim32 18 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17])
            (dim32 19 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18])
            (dim32 20 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19])
            (dim32 21 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20])
            (dim32 22 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21])
            (dim32 23 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22])
            (dim32 24 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23])
            (dim32 25 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24])
            (dim32 26 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25])
            (dim32 27 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26])
            (dim32 28 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27])
            (dim32 29 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28])
            (dim32 30 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29])
            (dim32 31 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30])
            (dim32 32 [0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31])
        )
    };
}

/// Wraps a block in the `#[cfg]` attribute matching a dimension-table gate.
macro_rules! gate_block {
    (base $body:block) => {
        $body
    };
    (dim16 $body:block) => {
        #[cfg(feature = "max-dim-16")]
        $body
    };
    (dim32 $body:block) => {
        #[cfg(feature = "max-dim-32")]
        $body
    };
}

/// Dimension-table consumer building the comparison chain of
/// [`dispatch_dimension`].
macro_rules! dispatch_arms {
    ( ($dimension:ident $worker:ident) $(($gate:ident $n:literal [$($axis:tt)*]))+ ) => {
        $(
            gate_block!($gate {
                if $dimension == $n {
                    return Ok($worker.run::<$n>());
                }
            });
        )+
    };
}

pub(crate) use {for_each_supported_dimension, gate_block};

/// Runs `worker` with the given dimension as a compile-time constant.
///
/// The dimension is matched by comparing against each supported dimension
/// in turn, cheapest-first; dimensions outside `1..=MAX_DIMENSION` are
/// rejected. The comparison chain is the entire runtime cost of moving from
/// dynamic to static dimension — at most [`MAX_DIMENSION`] integer
/// comparisons, typically compiled to a jump table.
pub fn dispatch_dimension<W: DimensionWorker>(
    dimension: usize,
    worker: W,
) -> Result<W::Output, Error> {
    for_each_supported_dimension!(dispatch_arms!(dimension worker));
    Err(Error::UnsupportedDimension {
        dimension,
        max: MAX_DIMENSION,
    })
}
