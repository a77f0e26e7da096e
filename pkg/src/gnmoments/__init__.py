"""Exact solver for truncated moment problems in generalized Nevanlinna classes."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateTransform,
    ImproperFunction,
    IndexOutOfRange,
    LengthMismatch,
    MomentError,
    NoNormalIndex,
    NonzeroConstantTerm,
    NotNormalizable,
    NotParametrized,
    ZeroDenominator,
)
from .exact import (  # noqa: E402
    LaurentExpansion,
    MomentSequence,
    Polynomial,
    RationalFunction,
    laurent_expand,
    moments_from_expansion,
    moments_of,
    rf_normalize,
)
from .hankel import (  # noqa: E402
    HankelMatrix,
    Inertia,
    NormalIndexSet,
    extend_preserving_inertia,
    hankel_matrix,
    hankel_rank,
    inertia,
    normal_indices,
    recursive_generation,
)
from .toeplitz import (  # noqa: E402
    Regime,
    UpperToeplitz,
    expansion_product,
    invert_expansion,
    monic_inverter,
)
from .schur import (  # noqa: E402
    PolyMatrix2x2,
    SchurChain,
    SchurStep,
    pq_polynomials,
    resolvent,
    schur_chain,
    schur_step,
)
from .nevanlinna import (  # noqa: E402
    INF,
    apply_lft,
    check_parameter,
    gpnt_multiplicity,
    gznt_multiplicity,
    index_report,
    kappa_of,
    kronecker_kappa,
    verify_solution,
)
from .solver import (  # noqa: E402
    Category,
    Classification,
    ParamDescriptor,
    ProblemInstance,
    Reason,
    SolutionReport,
    Status,
    classify,
    param_matrix,
    solve,
)

__all__ = [
    "__version__",
    "DegenerateTransform",
    "ImproperFunction",
    "IndexOutOfRange",
    "LengthMismatch",
    "MomentError",
    "NoNormalIndex",
    "NonzeroConstantTerm",
    "NotNormalizable",
    "NotParametrized",
    "ZeroDenominator",
    "LaurentExpansion",
    "MomentSequence",
    "Polynomial",
    "RationalFunction",
    "laurent_expand",
    "moments_from_expansion",
    "moments_of",
    "rf_normalize",
    "HankelMatrix",
    "Inertia",
    "NormalIndexSet",
    "extend_preserving_inertia",
    "hankel_matrix",
    "hankel_rank",
    "inertia",
    "normal_indices",
    "recursive_generation",
    "Regime",
    "UpperToeplitz",
    "expansion_product",
    "invert_expansion",
    "monic_inverter",
    "PolyMatrix2x2",
    "SchurChain",
    "SchurStep",
    "pq_polynomials",
    "resolvent",
    "schur_chain",
    "schur_step",
    "INF",
    "apply_lft",
    "check_parameter",
    "gpnt_multiplicity",
    "gznt_multiplicity",
    "index_report",
    "kappa_of",
    "kronecker_kappa",
    "verify_solution",
    "Category",
    "Classification",
    "ParamDescriptor",
    "ProblemInstance",
    "Reason",
    "SolutionReport",
    "Status",
    "classify",
    "param_matrix",
    "solve",
]
