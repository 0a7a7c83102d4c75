//! Benchmark task data: deterministic input generation, per-method
//! applicability, and execution returning a result checksum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triot::kernels::baselines::{
    convolve_tuple_iteration_fixed_dim, copy_embedded_hard_coded, copy_embedded_reindex,
    copy_embedded_reindex_pow2, copy_embedded_tuple_iteration,
    copy_embedded_tuple_iteration_fixed_dim, fused_update_hard_coded, fused_update_reindex,
    fused_update_reindex_pow2, fused_update_tuple_iteration,
    fused_update_tuple_iteration_fixed_dim, inner_product_hard_coded, inner_product_reindex,
    inner_product_reindex_pow2, inner_product_tuple_iteration,
    inner_product_tuple_iteration_fixed_dim,
};
use triot::kernels::{
    convolution_shape, convolve_triot, convolve_tuple_iteration, copy_embedded, fused_update,
    inner_product_shared,
};
use triot::{check_bounds, Shape, Tensor};

use crate::config::Method;
use crate::error::BenchError;

/// Sum of all elements, folded in flat storage order; used to certify that
/// different iteration strategies computed identical results.
pub fn checksum(values: &[f64]) -> f64 {
    values.iter().sum()
}

/// One benchmark's operand tensors, ready to execute repeatedly.
pub enum Task {
    /// Benchmark 1: copy the leading window of `src` into `dest`.
    Copy { dest: Tensor<f64>, src: Tensor<f64> },
    /// Benchmark 2: inner product over the tuples the operands share —
    /// the whole of `small`'s shape.
    InnerProduct {
        large: Tensor<f64>,
        small: Tensor<f64>,
    },
    /// Benchmark 3: x ← x + y·x − z over x's shape. `pristine_x` restores
    /// x between repetitions, outside the timed region.
    FusedUpdate {
        x: Tensor<f64>,
        pristine_x: Vec<f64>,
        y: Tensor<f64>,
        z: Tensor<f64>,
    },
    /// Benchmark 4: full naive convolution of two operands.
    Convolution {
        lhs: Tensor<f64>,
        rhs: Tensor<f64>,
    },
}

fn fill(rng: &mut ChaCha8Rng, shape: &Shape) -> Tensor<f64> {
    Tensor::from_fn(shape.clone(), |_| rng.gen_range(-1.0..1.0))
}

impl Task {
    /// Builds the task's tensors from the seed and validates every shape
    /// precondition up front, so nothing can fail inside the timed loop.
    ///
    /// `shapes` follow the operation's argument order (see
    /// [`preset_shapes`](crate::config::preset_shapes)). Input values are
    /// deterministic in (seed, shapes), so checksums are reproducible
    /// across runs and methods.
    pub fn prepare(benchmark: u8, shapes: &[Shape], seed: u64) -> Result<Self, BenchError> {
        let expected = crate::config::tensor_count(benchmark)?;
        if shapes.len() != expected {
            return Err(BenchError::WrongShapeCount {
                benchmark,
                expected,
                actual: shapes.len(),
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match benchmark {
            1 => {
                let dest = Tensor::zeros(shapes[0].clone());
                let src = fill(&mut rng, &shapes[1]);
                check_bounds(dest.shape(), &[dest.shape(), src.shape()])?;
                Ok(Task::Copy { dest, src })
            }
            2 => {
                let large = fill(&mut rng, &shapes[0]);
                let small = fill(&mut rng, &shapes[1]);
                check_bounds(small.shape(), &[large.shape(), small.shape()])?;
                Ok(Task::InnerProduct { large, small })
            }
            3 => {
                let x = fill(&mut rng, &shapes[0]);
                let y = fill(&mut rng, &shapes[1]);
                let z = fill(&mut rng, &shapes[2]);
                check_bounds(x.shape(), &[x.shape(), y.shape(), z.shape()])?;
                let pristine_x = x.flat().to_vec();
                Ok(Task::FusedUpdate {
                    x,
                    pristine_x,
                    y,
                    z,
                })
            }
            4 => {
                let lhs = fill(&mut rng, &shapes[0]);
                let rhs = fill(&mut rng, &shapes[1]);
                convolution_shape(lhs.shape(), rhs.shape())?;
                Ok(Task::Convolution { lhs, rhs })
            }
            other => Err(BenchError::UnknownBenchmark(other)),
        }
    }

    pub fn benchmark(&self) -> u8 {
        match self {
            Task::Copy { .. } => 1,
            Task::InnerProduct { .. } => 2,
            Task::FusedUpdate { .. } => 3,
            Task::Convolution { .. } => 4,
        }
    }

    /// Dimension of the iteration space.
    pub fn dimension(&self) -> usize {
        match self {
            Task::Copy { dest, .. } => dest.dimension(),
            Task::InnerProduct { small, .. } => small.dimension(),
            Task::FusedUpdate { x, .. } => x.dimension(),
            Task::Convolution { lhs, .. } => lhs.dimension(),
        }
    }

    fn all_axes_power_of_two(&self) -> bool {
        let shapes: Vec<&Shape> = match self {
            Task::Copy { dest, src } => vec![dest.shape(), src.shape()],
            Task::InnerProduct { large, small } => vec![large.shape(), small.shape()],
            Task::FusedUpdate { x, y, z, .. } => vec![x.shape(), y.shape(), z.shape()],
            Task::Convolution { lhs, rhs } => vec![lhs.shape(), rhs.shape()],
        };
        shapes
            .iter()
            .all(|s| s.axes().iter().all(|a| a.is_power_of_two()))
    }

    /// Whether `method` can run this task with these shapes.
    pub fn applicable(&self, method: Method) -> bool {
        self.inapplicability_reason(method).is_none()
    }

    /// Why `method` cannot run this task, if it cannot.
    pub fn inapplicability_reason(&self, method: Method) -> Option<&'static str> {
        match method {
            Method::Triot | Method::TupleIteration | Method::TupleIterationFixedDim => None,
            Method::IntegerReindex => match self {
                Task::Convolution { .. } => {
                    Some("reindexing methods do not apply to convolution")
                }
                _ => None,
            },
            Method::IntegerReindexPow2 => match self {
                Task::Convolution { .. } => {
                    Some("reindexing methods do not apply to convolution")
                }
                _ if !self.all_axes_power_of_two() => {
                    Some("every axis of every shape must be a power of two")
                }
                _ => None,
            },
            Method::HardCodedLoops => match self {
                Task::Copy { .. } | Task::InnerProduct { .. } if self.dimension() == 3 => None,
                Task::FusedUpdate { .. } if self.dimension() == 4 => None,
                Task::Convolution { .. } => {
                    Some("no hand-written loop nest exists for convolution")
                }
                _ => Some(
                    "hand-written loop nests exist only for the 3-D copy and \
                     inner-product tasks and the 4-D fused-update task",
                ),
            },
        }
    }

    /// Restores operands a previous execution mutated. Runs outside the
    /// timed region.
    pub fn reset(&mut self) {
        if let Task::FusedUpdate { x, pristine_x, .. } = self {
            x.flat_mut().copy_from_slice(pristine_x);
        }
    }

    /// Runs the task once with `method` and returns the result checksum.
    pub fn execute(&mut self, method: Method) -> Result<f64, BenchError> {
        let fail = |task: &Task| BenchError::InapplicableMethod {
            method: method.name(),
            benchmark: task.benchmark(),
            reason: task
                .inapplicability_reason(method)
                .unwrap_or("method cannot run this task"),
        };
        match self {
            Task::Copy { dest, src } => {
                match method {
                    Method::Triot => copy_embedded(dest, src),
                    Method::TupleIteration => copy_embedded_tuple_iteration(dest, src),
                    Method::TupleIterationFixedDim => {
                        copy_embedded_tuple_iteration_fixed_dim(dest, src)
                    }
                    Method::IntegerReindex => copy_embedded_reindex(dest, src),
                    Method::IntegerReindexPow2 => copy_embedded_reindex_pow2(dest, src),
                    Method::HardCodedLoops => copy_embedded_hard_coded(dest, src),
                }?;
                Ok(checksum(dest.flat()))
            }
            Task::InnerProduct { large, small } => {
                let value = match method {
                    Method::Triot => inner_product_shared(large, small, small.shape())?,
                    Method::TupleIteration => inner_product_tuple_iteration(large, small)?,
                    Method::TupleIterationFixedDim => {
                        inner_product_tuple_iteration_fixed_dim(large, small)?
                    }
                    Method::IntegerReindex => inner_product_reindex(large, small)?,
                    Method::IntegerReindexPow2 => inner_product_reindex_pow2(large, small)?,
                    Method::HardCodedLoops => inner_product_hard_coded(large, small)?,
                };
                Ok(value)
            }
            Task::FusedUpdate { x, y, z, .. } => {
                match method {
                    Method::Triot => fused_update(x, y, z),
                    Method::TupleIteration => fused_update_tuple_iteration(x, y, z),
                    Method::TupleIterationFixedDim => {
                        fused_update_tuple_iteration_fixed_dim(x, y, z)
                    }
                    Method::IntegerReindex => fused_update_reindex(x, y, z),
                    Method::IntegerReindexPow2 => fused_update_reindex_pow2(x, y, z),
                    Method::HardCodedLoops => fused_update_hard_coded(x, y, z),
                }?;
                Ok(checksum(x.flat()))
            }
            Task::Convolution { lhs, rhs } => {
                let result = match method {
                    Method::Triot => convolve_triot(lhs, rhs)?,
                    Method::TupleIteration => convolve_tuple_iteration(lhs, rhs)?,
                    Method::TupleIterationFixedDim => {
                        convolve_tuple_iteration_fixed_dim(lhs, rhs)?
                    }
                    Method::IntegerReindex
                    | Method::IntegerReindexPow2
                    | Method::HardCodedLoops => return Err(fail(self)),
                };
                Ok(checksum(result.flat()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{preset_shapes, Preset};

    fn desk_task(benchmark: u8) -> Task {
        let shapes = preset_shapes(benchmark, Preset::Desk).unwrap();
        Task::prepare(benchmark, &shapes, 42).unwrap()
    }

    fn tiny_shapes(benchmark: u8) -> Vec<Shape> {
        let axes: &[&[usize]] = match benchmark {
            1 => &[&[2, 2, 2], &[4, 2, 2]],
            2 => &[&[4, 2, 2], &[2, 2, 2]],
            3 => &[&[2, 2, 2, 2], &[2, 3, 2, 2], &[3, 2, 2, 2]],
            _ => &[&[3, 2], &[2, 2]],
        };
        axes.iter().map(|a| Shape::new(*a).unwrap()).collect()
    }

    #[test]
    fn desk_preset_applicability_matches_the_roster() {
        let applicable = |benchmark: u8| -> Vec<&'static str> {
            let task = desk_task(benchmark);
            Method::ALL
                .iter()
                .filter(|m| task.applicable(**m))
                .map(|m| m.name())
                .collect()
        };
        // Benchmarks 1 and 2 use power-of-two 3-D shapes: everything runs.
        let all = [
            "triot",
            "tuple-iteration",
            "tuple-iteration-fixed-dim",
            "integer-reindex",
            "integer-reindex-pow2",
            "hard-coded-loops",
        ];
        assert_eq!(applicable(1), all);
        assert_eq!(applicable(2), all);
        // Benchmark 3 has non-power-of-two axes.
        assert_eq!(
            applicable(3),
            [
                "triot",
                "tuple-iteration",
                "tuple-iteration-fixed-dim",
                "integer-reindex",
                "hard-coded-loops",
            ]
        );
        // Benchmark 4 excludes reindexing and has no hand-written nest.
        assert_eq!(
            applicable(4),
            ["triot", "tuple-iteration", "tuple-iteration-fixed-dim"]
        );
    }

    #[test]
    fn hard_coded_loops_require_the_benchmarks_dimension() {
        let shapes = [
            Shape::new([4, 4]).unwrap(),
            Shape::new([4, 4]).unwrap(),
        ];
        let task = Task::prepare(1, &shapes, 1).unwrap();
        assert!(!task.applicable(Method::HardCodedLoops));
        assert!(task.applicable(Method::IntegerReindexPow2));
    }

    #[test]
    fn every_applicable_method_yields_the_same_checksum() {
        for benchmark in 1..=4 {
            let shapes = tiny_shapes(benchmark);
            let mut task = Task::prepare(benchmark, &shapes, 7).unwrap();
            let methods: Vec<Method> = Method::ALL
                .into_iter()
                .filter(|m| task.applicable(*m))
                .collect();
            let mut checksums = Vec::new();
            for method in methods {
                task.reset();
                checksums.push(task.execute(method).unwrap());
            }
            assert!(
                checksums
                    .windows(2)
                    .all(|w| w[0].to_bits() == w[1].to_bits()),
                "benchmark {benchmark}: {checksums:?}"
            );
        }
    }

    #[test]
    fn the_same_seed_reproduces_the_same_checksum() {
        let run = |seed: u64| {
            let mut task = Task::prepare(2, &tiny_shapes(2), seed).unwrap();
            task.execute(Method::Triot).unwrap()
        };
        assert_eq!(run(9).to_bits(), run(9).to_bits());
        assert_ne!(run(9).to_bits(), run(10).to_bits());
    }

    #[test]
    fn resetting_makes_mutating_executions_repeatable() {
        let mut task = Task::prepare(3, &tiny_shapes(3), 3).unwrap();
        let first = task.execute(Method::Triot).unwrap();
        // Without reset the update compounds and the checksum moves.
        let compounded = task.execute(Method::Triot).unwrap();
        assert_ne!(first.to_bits(), compounded.to_bits());
        task.reset();
        let repeated = task.execute(Method::Triot).unwrap();
        assert_eq!(first.to_bits(), repeated.to_bits());
    }

    #[test]
    fn executing_an_inapplicable_method_fails_loudly() {
        let mut task = Task::prepare(4, &tiny_shapes(4), 5).unwrap();
        assert!(matches!(
            task.execute(Method::IntegerReindex),
            Err(BenchError::InapplicableMethod {
                method: "integer-reindex",
                benchmark: 4,
                ..
            })
        ));
    }

    #[test]
    fn preparation_validates_containment_up_front() {
        let shapes = [
            Shape::new([4, 4, 4]).unwrap(),
            Shape::new([2, 8, 8]).unwrap(),
        ];
        assert!(matches!(
            Task::prepare(1, &shapes, 1),
            Err(BenchError::Tensor(triot::Error::AxisOutOfBounds { .. }))
        ));
    }
}
