//! Loop-nest construction for dimension-fixed iteration.

/// Expands to one `for` loop per axis literal, outermost axis first, writing
/// each loop variable into `$counter[axis]` and running `$body` innermost.
///
/// `$counter` and `$axes` must be fixed-size arrays with one slot per axis
/// literal; the loop bounds come from `$axes`. With the dimension spelled
/// out as literals the compiler sees a completely static nest: the innermost
/// body is free of dimension-dependent branches, so invariant index
/// arithmetic is hoisted and the remainder strength-reduced.
macro_rules! nest_loops {
    ($counter:ident $axes:ident [] $body:block) => {
        $body
    };
    ($counter:ident $axes:ident [$axis:tt $($rest:tt)*] $body:block) => {
        for value in 0..$axes[$axis] {
            $counter[$axis] = value;
            nest_loops!($counter $axes [$($rest)*] $body);
        }
    };
}

pub(crate) use nest_loops;
