"""charmonoid: exact monoid-algebra analysis of finite-group character data.

The monoid of interest sits inside N^r, generated by the decomposition
vectors of the induced linear characters of a group; the package
computes its Hilbert basis, classification flags, toric relations,
integral closure and supercharacter-theoretic refinements, all over
arbitrary-precision integers.
"""

from ._kernels import BACKEND as kernel_backend
from .classification import (
    AramataReport,
    ClassificationReport,
    aramata,
    classify,
    product_check,
    prop24_harness,
    quotient_check,
    sl2_conjecture_check,
    sl2_conjecture_generators,
    support_cover,
)
from .cone import (
    NormalizationResult,
    RationalCone,
    cone_from_generators,
    contains_regular_shifts,
    is_normal,
    normalize,
)
from .dataio import (
    GroupCharData,
    bundled_names,
    emit_dataset,
    emit_report,
    load_bundled,
    parse_dataset,
    render_monomial,
)
from .lattice import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel_basis,
    lattice_is_full_unimodular,
    minimal_homogeneous_solutions,
)
from .monoid import (
    DecompositionCertificate,
    MonoidPresentation,
    member,
    minimal_generators,
    monoid_equal,
    outer_product_monoid,
    presentation,
    regular_vector,
    restrict_support,
)
from .supercharacter import (
    SuperMonoid,
    SupertheoryData,
    c_almost_monomial,
    c_quasi_monomial,
    classical_theory,
    maximal_theory,
    sigma_vectors,
    super_monoid,
    super_product_check,
    super_quotient_check,
    supertheory,
    validate_supertheory,
)
from .toric import Binomial, is_factorial, markov_basis, verify_relation

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
