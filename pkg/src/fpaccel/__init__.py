"""fpaccel: turn crawling fixed point iterations into superlinear ones.

The package is organised around second-order jets (:mod:`fpaccel.jets`),
iteration maps with fixed point metadata (:mod:`fpaccel.maps`), the
accelerated step functions (:mod:`fpaccel.accelerators`), whole-sequence
transforms (:mod:`fpaccel.transforms`), an iteration driver
(:mod:`fpaccel.engine`), detection of exactly-collapsing map families
(:mod:`fpaccel.kernel`) and a CLI (:mod:`fpaccel.cli`).
"""

from .accelerators import (
    DEFAULT_TOL,
    QuadratureError,
    StepOutcome,
    StepStatus,
    adaptive_simpson,
    combined_map_value,
    compose_step,
    first_newton_step,
    integral_step,
    phi_step,
    standard_step,
    steffensen_step,
)
from .engine import (
    IterationTrace,
    OrderReport,
    StopReason,
    TracePoint,
    empirical_order,
    iterate,
)
from .jets import (
    Jet2,
    JetDomainError,
    Scalar,
    SingularJetError,
    const,
    is_finite,
    lift,
)
from .kernel import (
    FitInconclusiveError,
    KernelVerdict,
    affinity_test,
    kernel_family_fit,
)
from .maps import (
    HYPERBOLIC,
    NEUTRAL,
    UNKNOWN,
    CorpusError,
    GoldenValue,
    IterationMap,
    ProblemSpec,
    corpus_lookup,
    corpus_names,
    kernel_family_map,
)
from .transforms import (
    SequenceView,
    aitken_delta2,
    iterated_aitken,
    sequence_view,
    theta2,
    w_transform,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "CorpusError",
    "FitInconclusiveError",
    "GoldenValue",
    "HYPERBOLIC",
    "IterationMap",
    "IterationTrace",
    "Jet2",
    "JetDomainError",
    "KernelVerdict",
    "NEUTRAL",
    "OrderReport",
    "ProblemSpec",
    "QuadratureError",
    "Scalar",
    "SequenceView",
    "SingularJetError",
    "StepOutcome",
    "StepStatus",
    "StopReason",
    "TracePoint",
    "UNKNOWN",
    "adaptive_simpson",
    "affinity_test",
    "aitken_delta2",
    "combined_map_value",
    "compose_step",
    "const",
    "corpus_lookup",
    "corpus_names",
    "empirical_order",
    "first_newton_step",
    "integral_step",
    "is_finite",
    "iterate",
    "iterated_aitken",
    "kernel_family_fit",
    "kernel_family_map",
    "lift",
    "phi_step",
    "sequence_view",
    "standard_step",
    "steffensen_step",
    "theta2",
    "w_transform",
]
