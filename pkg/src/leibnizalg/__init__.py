"""Exact-arithmetic toolkit for finite-dimensional nilpotent Leibniz algebras.

Everything computes over the rationals with fractions.Fraction; no floats
enter any decision.  The package covers structure constants and nilpotency
invariants (`core`), second cohomology with central coefficients
(`cohomology`), central extensions and their reduction (`extension`), a
catalog of named families (`catalog`), isomorphism verification and search
(`isomorphism`), JSON file formats (`files`), and scripted verification
experiments (`reproduce`).
"""

from .catalog import family_ids, family_info, list_families, make
from .cohomology import (
    BilinearForm,
    CochainSpace,
    CohomologyBasis,
    coboundary_generator,
    coboundary_space,
    cocycle_space,
    cocycle_violations,
    cohomology_basis,
    cohomology_class,
    cohomology_dim,
    combine,
    is_cocycle,
    preferred_cohomology_basis,
)
from .core import (
    Algebra,
    CharSeq,
    CharSeqWitness,
    GradedAlgebra,
    LeibnizError,
    LeibnizViolation,
    NotNilpotentError,
    Subspace,
    abelian_algebra,
    algebra_from_products,
    bracket,
    center,
    characteristic_sequence,
    check_leibniz,
    classify_shape,
    direct_sum,
    left_annihilator,
    lower_central_series,
    natural_gradation,
    nilindex,
    right_annihilator,
    right_mult_operator,
    series_dims,
    squares_subspace,
)
from .extension import (
    ExtensionSpec,
    InvalidCocycleError,
    SplitReport,
    central_extension,
    centrality_report,
    is_split,
    make_spec,
    random_cocycle_forms,
    reduce_extension,
    reduced_spec,
    validate_cocycle,
)
from .files import (
    FileFormatError,
    read_algebra_file,
    read_cocycle_file,
    read_matrix_file,
    write_algebra_file,
    write_cocycle_file,
    write_matrix_file,
)
from .isomorphism import (
    Comparison,
    Fingerprint,
    IsoCheck,
    SearchResult,
    compare_fingerprints,
    fingerprint,
    float_change_residual,
    search_isomorphism,
    transform_algebra,
    verify_isomorphism,
)
from .linalg import Matrix, frac

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BilinearForm",
    "CharSeq",
    "CharSeqWitness",
    "CochainSpace",
    "CohomologyBasis",
    "Comparison",
    "ExtensionSpec",
    "Fingerprint",
    "FileFormatError",
    "GradedAlgebra",
    "InvalidCocycleError",
    "IsoCheck",
    "LeibnizError",
    "LeibnizViolation",
    "Matrix",
    "NotNilpotentError",
    "SearchResult",
    "SplitReport",
    "Subspace",
    "abelian_algebra",
    "algebra_from_products",
    "bracket",
    "center",
    "central_extension",
    "centrality_report",
    "characteristic_sequence",
    "check_leibniz",
    "classify_shape",
    "coboundary_generator",
    "coboundary_space",
    "cocycle_space",
    "cocycle_violations",
    "cohomology_basis",
    "cohomology_class",
    "cohomology_dim",
    "combine",
    "compare_fingerprints",
    "direct_sum",
    "family_ids",
    "family_info",
    "fingerprint",
    "float_change_residual",
    "frac",
    "is_cocycle",
    "is_split",
    "left_annihilator",
    "list_families",
    "lower_central_series",
    "make",
    "make_spec",
    "natural_gradation",
    "nilindex",
    "preferred_cohomology_basis",
    "random_cocycle_forms",
    "read_algebra_file",
    "read_cocycle_file",
    "read_matrix_file",
    "reduce_extension",
    "reduced_spec",
    "right_annihilator",
    "right_mult_operator",
    "search_isomorphism",
    "series_dims",
    "squares_subspace",
    "transform_algebra",
    "validate_cocycle",
    "verify_isomorphism",
    "write_algebra_file",
    "write_cocycle_file",
    "write_matrix_file",
]
