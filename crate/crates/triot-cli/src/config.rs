//! Command-line surface and the resolved run configuration.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use triot::Shape;

use crate::error::BenchError;

/// Iteration strategies that can compete in a benchmark run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Dispatched dimension-fixed loop nests.
    Triot,
    /// Runtime odometer walk, linearizing a counter tuple per element.
    TupleIteration,
    /// The odometer walk after dimension dispatch, on fixed-size arrays.
    TupleIterationFixedDim,
    /// One flat counter translated per tensor with div/mod peeling.
    IntegerReindex,
    /// Flat-counter translation with shifts and masks; needs power-of-two
    /// axes everywhere.
    IntegerReindexPow2,
    /// Hand-written loop nest for the benchmark's specific dimension.
    HardCodedLoops,
}

impl Method {
    /// Full roster in reporting order.
    pub const ALL: [Method; 6] = [
        Method::Triot,
        Method::TupleIteration,
        Method::TupleIterationFixedDim,
        Method::IntegerReindex,
        Method::IntegerReindexPow2,
        Method::HardCodedLoops,
    ];

    /// The name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Method::Triot => "triot",
            Method::TupleIteration => "tuple-iteration",
            Method::TupleIterationFixedDim => "tuple-iteration-fixed-dim",
            Method::IntegerReindex => "integer-reindex",
            Method::IntegerReindexPow2 => "integer-reindex-pow2",
            Method::HardCodedLoops => "hard-coded-loops",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One element of `--methods`: a method name or the word `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodSelector {
    All,
    Triot,
    TupleIteration,
    TupleIterationFixedDim,
    IntegerReindex,
    IntegerReindexPow2,
    HardCodedLoops,
}

impl MethodSelector {
    fn method(self) -> Option<Method> {
        match self {
            MethodSelector::All => None,
            MethodSelector::Triot => Some(Method::Triot),
            MethodSelector::TupleIteration => Some(Method::TupleIteration),
            MethodSelector::TupleIterationFixedDim => Some(Method::TupleIterationFixedDim),
            MethodSelector::IntegerReindex => Some(Method::IntegerReindex),
            MethodSelector::IntegerReindexPow2 => Some(Method::IntegerReindexPow2),
            MethodSelector::HardCodedLoops => Some(Method::HardCodedLoops),
        }
    }
}

/// Shape scale used when no explicit `--shape` is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Scaled-down shapes: every run finishes well under two seconds while
    /// keeping the non-contiguous access patterns. 32 reps by default.
    Desk,
    /// Full-scale shapes. Benchmarks 1 and 2 allocate roughly 1 GiB.
    /// 128 reps by default.
    Paper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Benchmark harness comparing tensor-iteration strategies.
///
/// Times one benchmark across the selected methods and reports one row per
/// method with min/mean/max wall-clock seconds and a result checksum. The
/// checksum must agree bit-for-bit across methods or the run fails.
#[derive(Debug, Parser)]
#[command(name = "bench", version)]
pub struct Cli {
    /// Benchmark to run: 1 = tensor copy, 2 = inner product, 3 = fused
    /// multiply-add update, 4 = naive convolution.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub benchmark: u8,

    /// Comma-separated methods to time, or "all" for every method
    /// applicable to the benchmark and shapes.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub methods: Vec<MethodSelector>,

    /// Timed repetitions per method [default: 32 desk, 128 paper].
    #[arg(long)]
    pub reps: Option<usize>,

    /// Shape scale to use when no explicit --shape is given.
    #[arg(long, value_enum, default_value_t = Preset::Desk)]
    pub preset: Preset,

    /// Explicit tensor shape as comma-separated axis lengths; repeat once
    /// per tensor, in the benchmark operation's argument order
    /// (1: dest,src; 2: large,small; 3: x,y,z; 4: lhs,rhs). Overrides the
    /// preset.
    #[arg(long = "shape", value_name = "AXIS,AXIS,...")]
    pub shapes: Vec<String>,

    /// Seed for the deterministic input generator.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Write the report to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Which methods a run should time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodSelection {
    /// Every method applicable to the benchmark and shapes, roster order.
    AllApplicable,
    /// Exactly these methods, in the given order; an inapplicable entry
    /// fails the run.
    Explicit(Vec<Method>),
}

/// A fully resolved run: everything the runner needs.
#[derive(Clone, Debug)]
pub struct BenchmarkConfig {
    pub benchmark: u8,
    pub methods: MethodSelection,
    pub reps: usize,
    /// One shape per tensor, in the benchmark operation's argument order.
    pub shapes: Vec<Shape>,
    pub seed: u64,
}

impl BenchmarkConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, BenchError> {
        let methods = resolve_selectors(&cli.methods)?;
        let shapes = if cli.shapes.is_empty() {
            preset_shapes(cli.benchmark, cli.preset)?
        } else {
            let expected = tensor_count(cli.benchmark)?;
            if cli.shapes.len() != expected {
                return Err(BenchError::WrongShapeCount {
                    benchmark: cli.benchmark,
                    expected,
                    actual: cli.shapes.len(),
                });
            }
            cli.shapes
                .iter()
                .map(|text| parse_shape(text))
                .collect::<Result<_, _>>()?
        };
        let reps = cli.reps.unwrap_or(match cli.preset {
            Preset::Desk => 32,
            Preset::Paper => 128,
        });
        if reps == 0 {
            return Err(BenchError::ZeroReps);
        }
        Ok(Self {
            benchmark: cli.benchmark,
            methods,
            reps,
            shapes,
            seed: cli.seed,
        })
    }
}

/// Collapses `--methods` selectors into a selection, rejecting "all" mixed
/// with explicit names and duplicated names.
pub fn resolve_selectors(selectors: &[MethodSelector]) -> Result<MethodSelection, BenchError> {
    if selectors.contains(&MethodSelector::All) {
        if selectors.len() > 1 {
            return Err(BenchError::MixedAllWithExplicit);
        }
        return Ok(MethodSelection::AllApplicable);
    }
    let mut methods = Vec::with_capacity(selectors.len());
    for selector in selectors {
        let method = selector.method().expect("\"all\" is handled above");
        if methods.contains(&method) {
            return Err(BenchError::DuplicateMethod {
                method: method.name(),
            });
        }
        methods.push(method);
    }
    Ok(MethodSelection::Explicit(methods))
}

/// Number of tensors (and so `--shape` arguments) each benchmark takes.
pub fn tensor_count(benchmark: u8) -> Result<usize, BenchError> {
    match benchmark {
        1 | 2 | 4 => Ok(2),
        3 => Ok(3),
        other => Err(BenchError::UnknownBenchmark(other)),
    }
}

/// Built-in shapes per benchmark, in operation argument order.
pub fn preset_shapes(benchmark: u8, preset: Preset) -> Result<Vec<Shape>, BenchError> {
    let axes: &[&[usize]] = match (benchmark, preset) {
        // 1: copy the leading window of src into dest: [dest, src].
        (1, Preset::Desk) => &[&[128, 128, 16], &[256, 128, 64]],
        (1, Preset::Paper) => &[&[512, 512, 32], &[1024, 512, 256]],
        // 2: inner product over the smaller shape: [large, small].
        (2, Preset::Desk) => &[&[256, 128, 64], &[128, 128, 16]],
        (2, Preset::Paper) => &[&[1024, 512, 256], &[512, 512, 32]],
        // 3: x ← x + y·x − z over x's shape: [x, y, z].
        (3, Preset::Desk) => &[&[33, 8, 13, 4], &[61, 16, 16, 11], &[64, 15, 16, 9]],
        (3, Preset::Paper) => &[
            &[129, 32, 13, 16],
            &[253, 64, 64, 23],
            &[256, 39, 64, 33],
        ],
        // 4: full convolution of two matrices: [lhs, rhs]; the operands are
        // small enough that both scales use the same shapes.
        (4, _) => &[&[256, 8], &[256, 8]],
        (other, _) => return Err(BenchError::UnknownBenchmark(other)),
    };
    Ok(axes
        .iter()
        .map(|a| Shape::new(*a).expect("preset shapes are valid"))
        .collect())
}

/// Parses "a,b,c" into a shape.
pub fn parse_shape(text: &str) -> Result<Shape, BenchError> {
    let bad = |reason: String| BenchError::BadShape {
        text: text.to_string(),
        reason,
    };
    let axes = text
        .split(',')
        .map(|token| token.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| bad(e.to_string()))?;
    Shape::new(axes).map_err(|e| bad(e.to_string()))
}
