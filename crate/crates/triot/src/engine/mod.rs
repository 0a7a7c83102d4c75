//! The iteration engine: broadcast a callback over several tensors at once.
//!
//! Every combinator takes an *iteration shape*, a callback, and a pack of
//! tensors or views. The shape's dimension is matched at runtime by
//! [`dispatch_dimension`] — a bounded chain of integer comparisons — after
//! which iteration runs as a loop nest generated for exactly that dimension:
//! no per-element dimension checks, no index stack, no virtual calls.
//!
//! The tensors in a pack may have different shapes. Each one only has to
//! *contain* the iteration shape; the callback is invoked once per counter
//! tuple of the iteration shape, in lexicographic order, with every tensor's
//! element at that tuple. Bounds are validated once up front
//! ([`crate::shape::check_bounds`]), which is what lets the element accesses
//! inside the nest skip per-element checks.
//!
//! The combinators differ only in what the callback receives:
//!
//! | combinator                | callback arguments                          |
//! |---------------------------|---------------------------------------------|
//! | [`for_each`]              | `&T` per tensor                              |
//! | [`apply`]                 | `&mut T` for the destination, then `&T` per source |
//! | [`modify`]                | `&mut T` per tensor                          |
//! | [`enumerate_for_each`]    | `&[usize]` counter, then `&T` per tensor     |

pub mod dispatch;
mod nest;
pub mod pack;

pub use dispatch::{dispatch_dimension, DimensionWorker, MAX_DIMENSION};

use crate::error::Error;
use crate::shape::Shape;
use dispatch::{for_each_supported_dimension, gate_block};
use nest::nest_loops;
use pack::{
    ApplyArgs, ApplyFixed, EnumerateArgs, EnumerateFixed, ForEachArgs, ForEachFixed, ModifyArgs,
    ModifyFixed,
};

/// Dimension-table consumer shared by the combinators: one dimension-fixed
/// loop nest per supported dimension, selected by comparing against the
/// runtime dimension.
macro_rules! combinator_arms {
    ( ($dimension:ident $shape:ident $args:ident $f:ident $family:ident)
      $(($gate:ident $n:literal [$($axis:tt)*]))+ ) => {
        $(
            gate_block!($gate {
                if $dimension == $n {
                    let axes: [usize; $n] = $shape.fixed_axes();
                    let mut fixed = $args.fix::<$n>();
                    let mut counter = [0usize; $n];
                    nest_loops!(counter axes [$($axis)*] {
                        $family::invoke(&mut fixed, &mut $f, &counter);
                    });
                    return Ok(());
                }
            });
        )+
    };
}

/// Calls `f` once per tuple of `shape`, in lexicographic order, with a
/// shared reference to each pack member's element at that tuple.
///
/// ```
/// use triot::{for_each, Shape, Tensor};
///
/// let shape = Shape::new([3]).unwrap();
/// let x = Tensor::new(shape.clone(), vec![1.0, 2.0, 3.0]).unwrap();
/// let y = Tensor::new(shape.clone(), vec![0.0, 1.0, 1.0]).unwrap();
/// let mut dot = 0.0;
/// for_each(&shape, |xv: &f64, yv: &f64| dot += xv * yv, (&x, &y)).unwrap();
/// assert_eq!(dot, 5.0);
/// ```
pub fn for_each<'a, T, F, P>(shape: &Shape, mut f: F, args: P) -> Result<(), Error>
where
    P: ForEachArgs<'a, T, F>,
{
    args.check(shape)?;
    let dimension = shape.dimension();
    for_each_supported_dimension!(combinator_arms!(dimension shape args f ForEachFixed));
    // Shapes are validated against MAX_DIMENSION at construction, so this
    // is unreachable for any shape this crate can build.
    Err(Error::UnsupportedDimension {
        dimension,
        max: MAX_DIMENSION,
    })
}

/// Like [`for_each`], but the callback receives the counter tuple first, as
/// a slice with one coordinate per axis of `shape`.
///
/// The counter is owned by the engine and passed immutably: callbacks
/// observe positions, they cannot steer the iteration.
pub fn enumerate_for_each<'a, T, F, P>(shape: &Shape, mut f: F, args: P) -> Result<(), Error>
where
    P: EnumerateArgs<'a, T, F>,
{
    args.check(shape)?;
    let dimension = shape.dimension();
    for_each_supported_dimension!(combinator_arms!(dimension shape args f EnumerateFixed));
    Err(Error::UnsupportedDimension {
        dimension,
        max: MAX_DIMENSION,
    })
}

/// Calls `f` once per tuple of `shape` with a mutable reference into `dest`
/// first and shared references into the sources after it.
///
/// ```
/// use triot::{apply, Shape, Tensor};
///
/// let shape = Shape::new([2, 2]).unwrap();
/// let src = Tensor::new(shape.clone(), vec![1.0, 2.0, 3.0, 4.0]).unwrap();
/// let mut dest = Tensor::zeros(shape.clone());
/// apply(&shape, |d: &mut f64, s: &f64| *d = 2.0 * s, &mut dest, (&src,)).unwrap();
/// assert_eq!(dest.flat(), &[2.0, 4.0, 6.0, 8.0]);
/// ```
pub fn apply<'a, T, F, W, S>(shape: &Shape, f: F, dest: W, sources: S) -> Result<(), Error>
where
    (W, S): ApplyArgs<'a, T, F>,
{
    let mut f = f;
    let args = (dest, sources);
    args.check(shape)?;
    let dimension = shape.dimension();
    for_each_supported_dimension!(combinator_arms!(dimension shape args f ApplyFixed));
    Err(Error::UnsupportedDimension {
        dimension,
        max: MAX_DIMENSION,
    })
}

/// Calls `f` once per tuple of `shape` with mutable references to every
/// pack member's element: the all-mutable counterpart of [`for_each`].
pub fn modify<'a, T, F, P>(shape: &Shape, mut f: F, tensors: P) -> Result<(), Error>
where
    P: ModifyArgs<'a, T, F>,
{
    tensors.check(shape)?;
    let dimension = shape.dimension();
    for_each_supported_dimension!(combinator_arms!(dimension shape tensors f ModifyFixed));
    Err(Error::UnsupportedDimension {
        dimension,
        max: MAX_DIMENSION,
    })
}
