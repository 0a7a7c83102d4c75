//! Argument packs: how tensors and views enter an iteration.
//!
//! A pack is a tuple of borrowed tensors and views, one per callback
//! parameter. Before any element is touched, the iteration combinator
//! validates every member against the iteration shape in a single pass;
//! the pack is then *fixed* to the dispatched dimension, reducing each
//! member to flat storage, a bias, and a fixed-size layout array.
//!
//! Inside the loop nest, each member's flat position is recomputed from the
//! full counter by dimension-fixed linearization rather than carried as an
//! incremental stride. The recomputation is loop-invariant in all but the
//! innermost coordinate, so the optimizer hoists the prefix out of inner
//! loops and strength-reduces what remains — and element access can skip
//! per-element bounds checks because the up-front validation already proved
//! every counter in range.

use crate::error::Error;
use crate::index::raw::tuple_to_index_fixed;
use crate::shape::{check_tensor_bounds, Shape};
use crate::tensor::{Tensor, TensorView, TensorViewMut};

/// Read access to one pack position: a dense tensor, or a window of one
/// sitting behind a bias in flat storage.
pub trait TensorRef<'a, T> {
    /// Shape the iteration bounds are validated against (the window shape
    /// for a view).
    fn bounds_shape(&self) -> &Shape;

    /// Flat storage, bias, and the shape tuples are linearized against.
    fn read_parts(self) -> ReadParts<'a, T>;
}

/// Write access to one pack position.
pub trait TensorMut<'a, T> {
    /// Shape the iteration bounds are validated against.
    fn bounds_shape(&self) -> &Shape;

    /// Flat storage, bias, and the shape tuples are linearized against.
    fn write_parts(self) -> WriteParts<'a, T>;
}

/// The pieces a read-only pack member reduces to.
pub struct ReadParts<'a, T> {
    pub flat: &'a [T],
    pub bias: usize,
    pub layout: &'a Shape,
}

/// The pieces a mutable pack member reduces to.
pub struct WriteParts<'a, T> {
    pub flat: &'a mut [T],
    pub bias: usize,
    pub layout: &'a Shape,
}

impl<'a, T> TensorRef<'a, T> for &'a Tensor<T> {
    fn bounds_shape(&self) -> &Shape {
        self.shape()
    }

    fn read_parts(self) -> ReadParts<'a, T> {
        ReadParts {
            flat: self.flat(),
            bias: 0,
            layout: self.shape(),
        }
    }
}

impl<'a, 'b, T> TensorRef<'a, T> for &'a TensorView<'b, T> {
    fn bounds_shape(&self) -> &Shape {
        self.window()
    }

    fn read_parts(self) -> ReadParts<'a, T> {
        ReadParts {
            flat: self.base().flat(),
            bias: self.bias(),
            layout: self.base().shape(),
        }
    }
}

impl<'a, T> TensorRef<'a, T> for TensorView<'a, T> {
    fn bounds_shape(&self) -> &Shape {
        self.window()
    }

    fn read_parts(self) -> ReadParts<'a, T> {
        ReadParts {
            flat: self.base().flat(),
            bias: self.bias(),
            layout: self.base().shape(),
        }
    }
}

impl<'a, T> TensorMut<'a, T> for &'a mut Tensor<T> {
    fn bounds_shape(&self) -> &Shape {
        self.shape()
    }

    fn write_parts(self) -> WriteParts<'a, T> {
        let (flat, layout) = Tensor::split_mut(self);
        WriteParts {
            flat,
            bias: 0,
            layout,
        }
    }
}

impl<'a, T> TensorMut<'a, T> for TensorViewMut<'a, T> {
    fn bounds_shape(&self) -> &Shape {
        self.window()
    }

    fn write_parts(self) -> WriteParts<'a, T> {
        let (flat, layout, bias) = self.into_parts();
        WriteParts { flat, bias, layout }
    }
}

/// A read-only pack member after fixing: flat storage plus a bias and a
/// dimension-fixed layout.
pub struct FixedRead<'a, T, const D: usize> {
    flat: &'a [T],
    bias: usize,
    layout: [usize; D],
}

impl<'a, T, const D: usize> FixedRead<'a, T, D> {
    fn new(parts: ReadParts<'a, T>) -> Self {
        Self {
            flat: parts.flat,
            bias: parts.bias,
            layout: parts.layout.fixed_axes(),
        }
    }

    /// # Safety
    ///
    /// `counter` must lie inside the bounds shape this member was checked
    /// against when the pack was fixed.
    #[inline(always)]
    unsafe fn at(&self, counter: &[usize; D]) -> &'a T {
        let index = self.bias + tuple_to_index_fixed(counter, &self.layout);
        debug_assert!(index < self.flat.len());
        unsafe { self.flat.get_unchecked(index) }
    }
}

/// A mutable pack member after fixing.
pub struct FixedWrite<'a, T, const D: usize> {
    flat: &'a mut [T],
    bias: usize,
    layout: [usize; D],
}

impl<'a, T, const D: usize> FixedWrite<'a, T, D> {
    fn new(parts: WriteParts<'a, T>) -> Self {
        Self {
            flat: parts.flat,
            bias: parts.bias,
            layout: parts.layout.fixed_axes(),
        }
    }

    /// # Safety
    ///
    /// `counter` must lie inside the bounds shape this member was checked
    /// against when the pack was fixed.
    #[inline(always)]
    unsafe fn at_mut(&mut self, counter: &[usize; D]) -> &mut T {
        let index = self.bias + tuple_to_index_fixed(counter, &self.layout);
        debug_assert!(index < self.flat.len());
        unsafe { self.flat.get_unchecked_mut(index) }
    }
}

/// Read-only pack for [`for_each`](crate::engine::for_each): the callback
/// receives one `&T` per member.
pub trait ForEachArgs<'a, T, F> {
    /// The pack after dispatch fixes the dimension.
    type Fixed<const D: usize>: ForEachFixed<T, F, D>;

    /// Validates every member against the iteration shape.
    fn check(&self, iteration: &Shape) -> Result<(), Error>;

    /// Reduces the members to flat storage, bias, and fixed layout.
    fn fix<const D: usize>(self) -> Self::Fixed<D>;
}

/// Dimension-fixed counterpart of [`ForEachArgs`].
pub trait ForEachFixed<T, F, const D: usize> {
    /// Calls `f` on every member's element at `counter`.
    fn invoke(&mut self, f: &mut F, counter: &[usize; D]);
}

/// Read-only pack for [`enumerate_for_each`](crate::engine::enumerate_for_each):
/// the callback receives the counter first, then one `&T` per member.
pub trait EnumerateArgs<'a, T, F> {
    type Fixed<const D: usize>: EnumerateFixed<T, F, D>;

    fn check(&self, iteration: &Shape) -> Result<(), Error>;

    fn fix<const D: usize>(self) -> Self::Fixed<D>;
}

/// Dimension-fixed counterpart of [`EnumerateArgs`].
pub trait EnumerateFixed<T, F, const D: usize> {
    fn invoke(&mut self, f: &mut F, counter: &[usize; D]);
}

/// Destination-plus-sources pack for [`apply`](crate::engine::apply): the
/// callback receives `&mut T` for the destination, then one `&T` per source.
pub trait ApplyArgs<'a, T, F> {
    type Fixed<const D: usize>: ApplyFixed<T, F, D>;

    fn check(&self, iteration: &Shape) -> Result<(), Error>;

    fn fix<const D: usize>(self) -> Self::Fixed<D>;
}

/// Dimension-fixed counterpart of [`ApplyArgs`].
pub trait ApplyFixed<T, F, const D: usize> {
    fn invoke(&mut self, f: &mut F, counter: &[usize; D]);
}

/// All-mutable pack for [`modify`](crate::engine::modify): the callback
/// receives one `&mut T` per member.
pub trait ModifyArgs<'a, T, F> {
    type Fixed<const D: usize>: ModifyFixed<T, F, D>;

    fn check(&self, iteration: &Shape) -> Result<(), Error>;

    fn fix<const D: usize>(self) -> Self::Fixed<D>;
}

/// Dimension-fixed counterpart of [`ModifyArgs`].
pub trait ModifyFixed<T, F, const D: usize> {
    fn invoke(&mut self, f: &mut F, counter: &[usize; D]);
}

// The helpers below emit one token of impl text per pack member. They take
// the surrounding generics as arguments so the emitted tokens resolve to
// the impl's own parameters (macro hygiene would otherwise keep a lifetime
// written here separate from one written in the impl header).

macro_rules! shared_ref {
    ($member:ident $T:ident) => { &$T };
}

macro_rules! unique_ref {
    ($member:ident $T:ident) => { &mut $T };
}

macro_rules! fixed_read_of {
    ($member:ident $lt:lifetime $T:ident $D:ident) => { FixedRead<$lt, $T, $D> };
}

macro_rules! fixed_write_of {
    ($member:ident $lt:lifetime $T:ident $D:ident) => { FixedWrite<$lt, $T, $D> };
}

/// Implements [`ForEachArgs`] and [`EnumerateArgs`] for one tuple arity.
/// Each `(idx TypeParam binding)` triple is one pack member.
macro_rules! read_pack {
    ($(($idx:tt $A:ident $a:ident))+) => {
        impl<'a, T, F, $($A),+> ForEachArgs<'a, T, F> for ($($A,)+)
        where
            T: 'a,
            F: FnMut($(shared_ref!($A T)),+),
            $($A: TensorRef<'a, T>,)+
        {
            type Fixed<const D: usize> = ($(fixed_read_of!($A 'a T D),)+);

            fn check(&self, iteration: &Shape) -> Result<(), Error> {
                $(check_tensor_bounds(iteration, self.$idx.bounds_shape(), $idx)?;)+
                Ok(())
            }

            fn fix<const D: usize>(self) -> Self::Fixed<D> {
                ($(FixedRead::new(self.$idx.read_parts()),)+)
            }
        }

        impl<'a, T, F, const D: usize> ForEachFixed<T, F, D> for ($(fixed_read_of!($A 'a T D),)+)
        where
            T: 'a,
            F: FnMut($(shared_ref!($A T)),+),
        {
            #[inline(always)]
            fn invoke(&mut self, f: &mut F, counter: &[usize; D]) {
                let ($($a,)+) = self;
                // SAFETY: the combinator checked every member against the
                // iteration shape before fixing the pack, and every counter
                // it produces lies inside that shape.
                f($(unsafe { $a.at(counter) }),+);
            }
        }

        impl<'a, T, F, $($A),+> EnumerateArgs<'a, T, F> for ($($A,)+)
        where
            T: 'a,
            F: FnMut(&[usize], $(shared_ref!($A T)),+),
            $($A: TensorRef<'a, T>,)+
        {
            type Fixed<const D: usize> = ($(fixed_read_of!($A 'a T D),)+);

            fn check(&self, iteration: &Shape) -> Result<(), Error> {
                $(check_tensor_bounds(iteration, self.$idx.bounds_shape(), $idx)?;)+
                Ok(())
            }

            fn fix<const D: usize>(self) -> Self::Fixed<D> {
                ($(FixedRead::new(self.$idx.read_parts()),)+)
            }
        }

        impl<'a, T, F, const D: usize> EnumerateFixed<T, F, D> for ($(fixed_read_of!($A 'a T D),)+)
        where
            T: 'a,
            F: FnMut(&[usize], $(shared_ref!($A T)),+),
        {
            #[inline(always)]
            fn invoke(&mut self, f: &mut F, counter: &[usize; D]) {
                let ($($a,)+) = self;
                // SAFETY: as for the read-only pack above.
                f(&counter[..], $(unsafe { $a.at(counter) }),+);
            }
        }
    };
}

read_pack! { (0 A0 a0) }
read_pack! { (0 A0 a0) (1 A1 a1) }
read_pack! { (0 A0 a0) (1 A1 a1) (2 A2 a2) }
read_pack! { (0 A0 a0) (1 A1 a1) (2 A2 a2) (3 A3 a3) }

/// Implements [`ApplyArgs`] for a destination plus one tuple arity of
/// sources. The pack's self type is `(dest, (sources...))`.
macro_rules! apply_pack {
    ($W:ident $w:ident $(($idx:tt $A:ident $a:ident))+) => {
        impl<'a, T, F, $W, $($A),+> ApplyArgs<'a, T, F> for ($W, ($($A,)+))
        where
            T: 'a,
            F: FnMut(unique_ref!($W T), $(shared_ref!($A T)),+),
            $W: TensorMut<'a, T>,
            $($A: TensorRef<'a, T>,)+
        {
            type Fixed<const D: usize> =
                (fixed_write_of!($W 'a T D), ($(fixed_read_of!($A 'a T D),)+));

            fn check(&self, iteration: &Shape) -> Result<(), Error> {
                // The destination is tensor 0 in error reports; sources
                // follow in order.
                let (dest, ($($a,)+)) = self;
                check_tensor_bounds(iteration, dest.bounds_shape(), 0)?;
                $(check_tensor_bounds(iteration, $a.bounds_shape(), 1 + $idx)?;)+
                Ok(())
            }

            fn fix<const D: usize>(self) -> Self::Fixed<D> {
                let (dest, ($($a,)+)) = self;
                (
                    FixedWrite::new(dest.write_parts()),
                    ($(FixedRead::new($a.read_parts()),)+),
                )
            }
        }

        impl<'a, T, F, const D: usize> ApplyFixed<T, F, D>
            for (fixed_write_of!($W 'a T D), ($(fixed_read_of!($A 'a T D),)+))
        where
            T: 'a,
            F: FnMut(unique_ref!($W T), $(shared_ref!($A T)),+),
        {
            #[inline(always)]
            fn invoke(&mut self, f: &mut F, counter: &[usize; D]) {
                let ($w, ($($a,)+)) = self;
                // SAFETY: as for the read-only pack above.
                f(unsafe { $w.at_mut(counter) }, $(unsafe { $a.at(counter) }),+);
            }
        }
    };
}

apply_pack! { W0 w0 (0 A0 a0) }
apply_pack! { W0 w0 (0 A0 a0) (1 A1 a1) }
apply_pack! { W0 w0 (0 A0 a0) (1 A1 a1) (2 A2 a2) }

/// Implements [`ModifyArgs`] for one tuple arity.
macro_rules! modify_pack {
    ($(($idx:tt $A:ident $a:ident))+) => {
        impl<'a, T, F, $($A),+> ModifyArgs<'a, T, F> for ($($A,)+)
        where
            T: 'a,
            F: FnMut($(unique_ref!($A T)),+),
            $($A: TensorMut<'a, T>,)+
        {
            type Fixed<const D: usize> = ($(fixed_write_of!($A 'a T D),)+);

            fn check(&self, iteration: &Shape) -> Result<(), Error> {
                $(check_tensor_bounds(iteration, self.$idx.bounds_shape(), $idx)?;)+
                Ok(())
            }

            fn fix<const D: usize>(self) -> Self::Fixed<D> {
                ($(FixedWrite::new(self.$idx.write_parts()),)+)
            }
        }

        impl<'a, T, F, const D: usize> ModifyFixed<T, F, D> for ($(fixed_write_of!($A 'a T D),)+)
        where
            T: 'a,
            F: FnMut($(unique_ref!($A T)),+),
        {
            #[inline(always)]
            fn invoke(&mut self, f: &mut F, counter: &[usize; D]) {
                let ($($a,)+) = self;
                // SAFETY: as for the read-only pack above.
                f($(unsafe { $a.at_mut(counter) }),+);
            }
        }
    };
}

modify_pack! { (0 A0 a0) }
modify_pack! { (0 A0 a0) (1 A1 a1) }
modify_pack! { (0 A0 a0) (1 A1 a1) (2 A2 a2) }
modify_pack! { (0 A0 a0) (1 A1 a1) (2 A2 a2) (3 A3 a3) }
