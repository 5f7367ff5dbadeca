"""fastnorm: overflow/underflow-robust normalization of vectors and quaternions.

Scaling-based normalization of 2-, 3- and 4-component vectors with verified
rounding-error behavior, quotient and naive baselines for comparison, a
quaternion-to-rotation-matrix builder, a high-precision error oracle, and a
microbenchmark harness.  Hot kernels live in a compiled extension with a
pure-Python fallback selected at import (see :func:`backend_name`).
"""

from fastnorm._backend import available_backends, backend_name
from fastnorm.baselines import (
    naive_normalize2,
    naive_normalize3,
    naive_normalize4,
    quotient2,
    quotient3_fast,
    quotient3_robust,
    quotient4,
)
from fastnorm.bench import BenchConfig, BenchReport, generate_inputs, run_bench
from fastnorm.normalize import (
    NormalizeOutcome,
    norm2,
    norm3,
    norm4,
    normalize2,
    normalize3,
    normalize4,
)
from fastnorm.oracle import ErrorReport, measure, ref_normalize, ulp_distance
from fastnorm.params import (
    FpParams,
    FpParamsError,
    Violation,
    derive_tau,
    preset,
    validate_conditions,
)
from fastnorm.rotation import RotationMatrix, rotation_general, rotation_unit
from fastnorm.scale import ScaleOutcome, scale2, scale3, scale4

__version__ = "0.1.0"

__all__ = [
    "FpParams",
    "FpParamsError",
    "Violation",
    "preset",
    "validate_conditions",
    "derive_tau",
    "ScaleOutcome",
    "scale2",
    "scale3",
    "scale4",
    "NormalizeOutcome",
    "normalize2",
    "normalize3",
    "normalize4",
    "norm2",
    "norm3",
    "norm4",
    "naive_normalize2",
    "naive_normalize3",
    "naive_normalize4",
    "quotient2",
    "quotient3_robust",
    "quotient3_fast",
    "quotient4",
    "RotationMatrix",
    "rotation_general",
    "rotation_unit",
    "ErrorReport",
    "ref_normalize",
    "measure",
    "ulp_distance",
    "BenchConfig",
    "BenchReport",
    "run_bench",
    "generate_inputs",
    "backend_name",
    "available_backends",
    "__version__",
]
