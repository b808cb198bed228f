"""Zeta maps on Dyck paths: area-vector scan, sweep and scaffolding, with
area/bounce/dinv statistics, q,t-Catalan polynomials and an exhaustive
verification harness."""

from .dyck import (
    DyckWord,
    PeakSet,
    area_sequence,
    levels,
    levels_raw,
    parse_word,
    peaks,
    rev_complement,
    reverse,
    right_steps,
)
from .enumeration import catalan, enumerate_dyck, unrank
from .errors import (
    BelowDiagonal,
    DuplicateAgent,
    DyckError,
    InternalInvariantViolation,
    NonBinaryAlphabet,
    NonTermination,
    NotBalanced,
    NotInjective,
    SemilengthOutOfRange,
)
from .scaffolding import (
    DEFAULT_VARIANT,
    MapVariant,
    TraceRecord,
    scaffolding,
    scaffolding_conjugate,
    scaffolding_grouped,
    trace_scaffolding,
    variant_search,
)
from .statistics import QTPolynomial, area, bounce, dinv, qt_catalan
from .zeta import inverse_zeta, zeta_area_vector, zeta_sweep

__version__ = "0.1.0"
