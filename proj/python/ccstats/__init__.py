"""Exact point-count statistics for affine cyclic covers y^m = f(x) over
small finite fields.

All arithmetic is exact: field elements are integers in [0, q), counts are
Python ints, probabilities and sums are fractions.Fraction.

Lifetime note: Poly, FamilySpec, PowerClassifier and CurveSpec objects
reference the Field they were built from; keep the Field object alive while
using anything derived from it.
"""

from fractions import Fraction

from ._ccstats import (  # noqa: F401
    CurveSpec,
    Field,
    FamilySpec,
    NotPowerFree,
    Poly,
    PowerClassifier,
    PowerFreeDecomposition,
    RVModel,
    UnsupportedError,
    convolve,
    count_constrained,
    count_family,
    count_points,
    count_powerfree,
    count_squarefree,
    empirical_distribution,
    empirical_distribution_mc,
    enumerate_family,
    fiber_profile,
    fiber_size,
    genus,
    genus_weight,
    is_powerfree,
    is_squarefree,
    key_bijection,
    key_bijection_inverse,
    poly_gcd,
    powerfree_decompose,
    predicted_constrained_count,
    restricted_sqfree_closed,
    restricted_sqfree_counts,
    restricted_sqfree_partial,
    rv_fixed_profile,
    rv_from_psi,
    rv_general_weight,
    rv_powerfree_family,
    rv_quartic_weight,
    rv_squarefree_family,
    sample_family,
    squarefree_decompose,
    tail_bound,
    tilde_expand,
    zeta_closed,
)


def normalize(table):
    """Empirical count table -> exact probability table."""
    total = sum(table.values())
    if total == 0:
        raise ValueError("cannot normalize an empty table")
    return {k: Fraction(v, total) for k, v in table.items()}


def total_variation(a, b):
    """Exact total variation distance between two probability tables
    (dicts mapping point counts to Fractions; empirical count tables are
    normalized first)."""

    def as_prob(t):
        values = list(t.values())
        if values and all(isinstance(v, int) for v in values):
            return normalize(t)
        return t

    pa, pb = as_prob(a), as_prob(b)
    keys = set(pa) | set(pb)
    return sum(abs(Fraction(pa.get(k, 0)) - Fraction(pb.get(k, 0))) for k in keys) / 2


__all__ = [name for name in dir() if not name.startswith("_")]
