"""Belief-interval uncertainty measures for D numbers.

The known uncertainty KU sums, over the known elements, one minus the
Euclidean distance between each singleton's belief interval and the most
uncertain interval [0, 1]. The unknown uncertainty is Pl({X}) times a
pluggable function of the cardinality of X; since that function is left
open, the coefficient Pl({X}) is the primary output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import dst
from .core import BeliefInterval, DNumber, belief_interval, pl


class UnknownModel(str, Enum):
    """How to evaluate the unknown-uncertainty term from its coefficient."""

    COEFFICIENT = "coefficient"   # report Pl(X) only, no evaluation
    UNIT = "unit"                 # U = 1
    CARDINALITY = "cardinality"   # U = |X|
    LOG2 = "log2"                 # U = log2 |X|


@dataclass(frozen=True)
class TotalUncertainty:
    """The (KU, UU) pair; ``uu_evaluated`` is present when a model applies."""

    ku: float
    uu_coefficient: float
    uu_evaluated: float | None = None


def interval_distance_to_unit(interval: BeliefInterval) -> float:
    """Euclidean distance from a belief interval to [0, 1]."""
    lo = min(max(interval.lower, 0.0), 1.0)
    hi = min(max(interval.upper, 0.0), 1.0)
    return math.sqrt(lo * lo + (hi - 1.0) * (hi - 1.0))


def ku(d: DNumber) -> float:
    """Known uncertainty: Σ over known singletons of 1 - distance to [0, 1]."""
    terms = [1.0 - interval_distance_to_unit(belief_interval(d, 1 << i))
             for i in range(d.frame.size)]
    return math.fsum(terms)


def uu_coefficient(d: DNumber) -> float:
    """Unknown-uncertainty coefficient Pl({X})."""
    return pl(d, d.frame.x_mask)


def evaluate_unknown(model: UnknownModel, coefficient: float,
                     cardinality: int | None) -> float | None:
    if model is UnknownModel.COEFFICIENT:
        return None
    if model is UnknownModel.UNIT:
        return coefficient
    if cardinality is None:
        raise ValueError(f"model {model.value!r} needs a known cardinality for X")
    if model is UnknownModel.CARDINALITY:
        return coefficient * cardinality
    return coefficient * math.log2(cardinality)


def total_uncertainty(d: DNumber,
                      model: UnknownModel = UnknownModel.COEFFICIENT,
                      ) -> TotalUncertainty:
    """The total uncertainty tuple of a completed D number."""
    coeff = uu_coefficient(d)
    return TotalUncertainty(
        ku=ku(d),
        uu_coefficient=coeff,
        uu_evaluated=evaluate_unknown(model, coeff, d.frame.unknown_cardinality),
    )


def dst_ku_reference(bpa: DNumber) -> float:
    """KU recomputed through the classical DST layer.

    Independent re-derivation path for degeneration checks; only valid
    when the input is a classical BPA.
    """
    masses = dst.mass_function(bpa)
    terms = []
    for label in bpa.frame.elements:
        singleton = frozenset((label,))
        lo = dst.bel_m(masses, singleton)
        hi = dst.pl_m(masses, singleton)
        terms.append(1.0 - math.sqrt(lo * lo + (hi - 1.0) * (hi - 1.0)))
    return math.fsum(terms)
