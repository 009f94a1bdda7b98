"""Schur functors on super vector spaces over the rationals.

Exact computations with partitions, even maps between super vector spaces,
Young symmetrizers acting on tensor powers, and the vanishing calculus that
reads super-dimensions and exactness properties off which Schur functors die.
"""

from .calculus import (
    CheckResult,
    DimExactReport,
    PropertySVerdict,
    VanishingSet,
    check_p4_inequality,
    check_property_S,
    check_property_S_op,
    check_schur_of_sum,
    check_theorem_p2b,
    dim_exact_report,
    is_dim_exact,
    is_exact_at_middle,
    minimal_vanishing_partition,
    schur_vanishes,
    superdim_from_vanishing,
    vanishing_set,
)
from .errors import (
    CapExceeded,
    CapTooSmall,
    ContractViolation,
    InternalInconsistency,
    PreconditionError,
    ShapeError,
    SuperSchurError,
)
from .linalg import QMatrix
from .partitions import Partition, conjugate, contains, lr_coefficient, partitions_of, partitions_up_to, rectangle
from .schur import (
    graded_dimension,
    idempotent_rank,
    map_rank,
    schur_apply_map,
    schur_apply_space,
    schur_dimension,
    vanishing_rectangle,
)
from .supervec import (
    SuperDim,
    SuperMap,
    SuperSpace,
    ZeroSequence,
    braiding,
    cokernel,
    dual,
    dual_map,
    evaluation,
    coevaluation,
    image,
    kernel,
    name,
    coname,
    split_iso_zero,
    supertrace,
    tensor,
)
from .symgroup import young_symmetrizer

__version__ = "0.1.0"
