//! Iterates one index space over three tensors of different shapes:
//! reads two, writes the third, then walks the result with its counter.

use triot::{apply, enumerate_for_each, Error, Shape, Tensor};

fn main() -> Result<(), Error> {
    // The iteration space is 2 x 3; every tensor must contain it, but
    // their shapes are otherwise unrelated.
    let iteration = Shape::new([2usize, 3])?;
    let x = Tensor::from_fn(Shape::new([2usize, 3])?, |k| k as f64);
    let y = Tensor::from_fn(Shape::new([4usize, 3])?, |k| 10.0 * k as f64);
    let mut sum = Tensor::zeros(Shape::new([2usize, 4])?);

    // sum[t] = x[t] + y[t] for every tuple t of the iteration space. Each
    // tensor linearizes t against its own shape, so the same tuple lands
    // on different flat positions in each operand.
    apply(
        &iteration,
        |s: &mut f64, a: &f64, b: &f64| *s = a + b,
        &mut sum,
        (&x, &y),
    )?;

    enumerate_for_each(
        &iteration,
        |t: &[usize], s: &f64| println!("sum{t:?} = {s}"),
        (&sum,),
    )?;
    Ok(())
}
