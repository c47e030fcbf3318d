"""Descent and level statistics of tensor words and cyclic tensor words."""
from .core import (
    CAP_ENV_VAR,
    DEFAULT_CAP,
    CapExceededError,
    Shape,
    StatKind,
    TensorWord,
    TensorWordError,
    adjacent_pair_count,
    complement,
    enumeration_cap,
    make_shape,
    statistic,
    word_from_values,
    word_rank,
    word_unrank,
)
from .closed_forms import (
    FormulaDomainError,
    cyc_total_descents,
    cyc_total_levels,
    cycdes_upper_bound,
    max_descents_1d,
    max_ones_bounded_run,
    total_descents,
    total_levels,
)
from .genfunc import (
    DistPolynomial,
    RationalGF,
    build_cyclic_descent_gf,
    build_cyclic_level_gf,
    build_descent_gf,
    build_level_gf,
    distribution_brute,
    distribution_transfer,
    series_coefficients,
)
from .bijections import (
    BoundedRunBinary,
    cyclic_normalize,
    extremal_binary,
    extremal_word,
    phi,
    run_decompose,
    theta,
)
from .search import MaxResult, VerifyReport, brute_max, brute_total, verify_suite

__version__ = "0.1.0"
