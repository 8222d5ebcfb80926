"""Exact computation in finitely presented semi-graded algebras.

Presentations are quadratic PBW rewrite systems over Q or GF(p).  On top of
normal forms the package computes degree-multiplier spaces, truncated ideal
slices, central localizations and schematicness verdicts.
"""

__version__ = "0.1.0"

from .errors import (
    AlgebraError,
    AmbientMismatchError,
    FieldDivisionError,
    MixedFieldsError,
    PresentationError,
    SemigradedError,
    ZeroInputError,
)
from .exact import GF, QQ, FieldScalar, Matrix, Subspace, kernel, multiplicative_order, rref, subspace_ops
from .presentation import Presentation, make_presentation, parse_presentation, presentation_digest, two_gen_presentation, validate
from .ncpoly import NcPolynomial, commutator, decompose, multiply, normal_form, power, reassemble
from .grading import (
    MultiplierReport,
    basis_of_degree,
    central_powers_search,
    is_central,
    is_exact_degree_additive,
    r_double_prime,
    r_prime,
)
from .ideals import EvidenceResult, IdealSlice, check_containment, left_ideal_slice, power_slice, r_geq_slice
from .localization import (
    CentralDenominator,
    central_denominator,
    embed,
    frac_add,
    frac_decompose,
    frac_mul,
    frac_reassemble,
    fraction,
    parse_fraction,
)
from .schematic import (
    SchematicVerdict,
    TwoGenParams,
    bounded_schematic_evidence,
    central_powers_criterion,
    classify_two_gen,
    condition_u,
    delta_n,
    ore_set_spec,
    two_gen_commutation_oracle,
)
from . import corpus
