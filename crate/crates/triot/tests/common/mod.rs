//! Shared reference implementations for the integration tests.
//!
//! Everything here is written in the most direct style possible —
//! mixed-radix counting and stride summation over slices — deliberately
//! avoiding the library's dispatch, loop-nest, and Horner-scheme code so
//! the tests compare two independent derivations of the same values.

/// Every coordinate tuple of `axes` in lexicographic order.
pub fn lex_tuples(axes: &[usize]) -> Vec<Vec<usize>> {
    let size: usize = axes.iter().product();
    let mut out = Vec::with_capacity(size);
    let mut tuple = vec![0usize; axes.len()];
    for _ in 0..size {
        out.push(tuple.clone());
        advance_reference(&mut tuple, axes);
    }
    out
}

/// Mixed-radix increment, most significant coordinate first; past the last
/// tuple the leading coordinate exceeds its axis by one and the rest are
/// zero.
pub fn advance_reference(tuple: &mut [usize], axes: &[usize]) {
    for k in (0..tuple.len()).rev() {
        tuple[k] += 1;
        if tuple[k] < axes[k] || k == 0 {
            return;
        }
        tuple[k] = 0;
    }
}

/// Row-major flat index by explicit stride summation (suffix products),
/// not by the nested-multiplication scheme the library uses.
pub fn flat_index_reference(tuple: &[usize], axes: &[usize]) -> usize {
    let mut stride = 1;
    let mut index = 0;
    for k in (0..axes.len()).rev() {
        index += tuple[k] * stride;
        stride *= axes[k];
    }
    index
}
