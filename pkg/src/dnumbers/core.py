"""Frames with non-exclusive elements, D numbers, and their belief/plausibility measures.

A frame holds an ordered set of labeled elements plus one distinguished
"unknown" element X, together with the pairwise non-exclusivity degrees.
Subsets are plain integer bitmasks over the element indices 0..N-1, with
bit N reserved for X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

#: Tolerance for mass-sum validation.
MASS_TOL = 1e-9

#: Reserved label for the unknown element.
X_LABEL = "X"


@dataclass(frozen=True)
class Frame:
    """Ordered element labels, the unknown element X, and pairwise degrees.

    ``degrees`` maps index pairs (i, j) with i < j to a non-exclusivity
    degree in [0, 1]; index ``len(elements)`` stands for X. Absent pairs
    default to 0 (pure exclusivity). Instances are immutable; build them
    with :func:`build_frame`.
    """

    elements: tuple[str, ...]
    unknown_cardinality: int | None
    degrees: dict[tuple[int, int], float] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def x_index(self) -> int:
        return len(self.elements)

    @property
    def x_mask(self) -> int:
        return 1 << len(self.elements)

    @property
    def theta_mask(self) -> int:
        """Mask of all known elements (X excluded)."""
        return (1 << len(self.elements)) - 1

    @property
    def full_mask(self) -> int:
        """Mask of the whole frame including X."""
        return (1 << (len(self.elements) + 1)) - 1

    def lookup(self, i: int, j: int) -> float:
        """Stored singleton-pair degree; 1 on the diagonal, 0 if absent."""
        if i == j:
            return 1.0
        key = (i, j) if i < j else (j, i)
        return self.degrees.get(key, 0.0)

    def nonexclusivity(self, a: int, b: int) -> float:
        """Non-exclusivity degree between two nonempty subsets.

        1 whenever the subsets intersect; otherwise the maximum stored
        degree over all element pairs drawn from the two sets.
        """
        if a == 0 or b == 0:
            raise ValueError("non-exclusivity is undefined for the empty set")
        if a & b:
            return 1.0
        best = 0.0
        for i in iter_indices(a):
            for j in iter_indices(b):
                best = max(best, self.lookup(i, j))
        return best

    def index_of(self, label: str) -> int:
        if label == X_LABEL:
            return self.x_index
        try:
            return self.elements.index(label)
        except ValueError:
            raise ValueError(f"unknown label {label!r}") from None

    def subset(self, labels) -> int:
        """Bitmask for a collection of labels ("X" allowed)."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        """Labels of a subset mask, frame order, X last."""
        out = [self.elements[i] for i in range(self.size) if mask >> i & 1]
        if mask & self.x_mask:
            out.append(X_LABEL)
        return tuple(out)


def iter_indices(mask: int):
    """Indices of the set bits of a mask, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def build_frame(labels, unknown_cardinality="unknown", degrees=()) -> Frame:
    """Build a validated frame.

    ``labels`` is the ordered list of element names. ``unknown_cardinality``
    is an integer >= 2 or the string "unknown". ``degrees`` is an iterable
    of ((label_a, label_b), p) pairs; labels may include the reserved "X".
    The symmetric closure is taken and identical-label pairs are forced
    to degree 1.
    """
    labels = tuple(labels)
    if not labels:
        raise ValueError("a frame needs at least one element")
    seen = set()
    for label in labels:
        if not label:
            raise ValueError("element labels must be nonempty")
        if label == X_LABEL:
            raise ValueError(f"{X_LABEL!r} is reserved for the unknown element")
        if label in seen:
            raise ValueError(f"duplicate label {label!r}")
        seen.add(label)

    if unknown_cardinality in ("unknown", None):
        card: int | None = None
    else:
        card = int(unknown_cardinality)
        if card < 2:
            raise ValueError("unknown cardinality must be at least 2")

    frame = Frame(labels, card, {})
    table: dict[tuple[int, int], float] = {}
    for (la, lb), p in degrees:
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"degree {p} for pair ({la!r}, {lb!r}) outside [0, 1]")
        i, j = frame.index_of(la), frame.index_of(lb)
        if i == j:
            continue  # forced to 1, never stored
        key = (i, j) if i < j else (j, i)
        if key in table and table[key] != p:
            raise ValueError(f"conflicting degrees for pair ({la!r}, {lb!r})")
        if p > 0.0:
            table[key] = p
    frame.degrees.update(table)
    return frame


@dataclass(frozen=True)
class DNumber:
    """A mass assignment over nonempty subsets of the frame.

    ``masses`` maps subset masks to positive masses in canonical
    (ascending-mask) order. Total mass is at most 1; ``completed`` is
    true when it equals 1 within :data:`MASS_TOL`. Instances are
    immutable; build them with :func:`build_dnumber`.
    """

    frame: Frame
    masses: dict[int, float]
    completed: bool

    @property
    def total_mass(self) -> float:
        return math.fsum(self.masses.values())


def build_dnumber(frame: Frame, entries) -> DNumber:
    """Build a raw D number from (mask, mass) entries.

    Duplicate subsets are merged, zero masses dropped. The total mass
    must not exceed 1.
    """
    merged: dict[int, float] = {}
    for mask, mass in entries:
        mass = float(mass)
        if mass < 0.0:
            raise ValueError(f"negative mass {mass}")
        if mask == 0:
            raise ValueError("mass on the empty set: D(∅) must be 0")
        if mask & ~frame.full_mask:
            raise ValueError(f"subset mask {mask:#x} outside the frame")
        merged[mask] = merged.get(mask, 0.0) + mass
    masses = {m: v for m, v in sorted(merged.items()) if v > 0.0}
    total = math.fsum(masses.values())
    if total > 1.0 + MASS_TOL:
        raise ValueError(f"total mass {total} exceeds 1")
    return DNumber(frame, masses, completed=abs(total - 1.0) <= MASS_TOL)


def complete(d: DNumber) -> DNumber:
    """Assign the residual mass 1 - ΣD(B) to the singleton {X}.

    Already-complete inputs are returned unchanged, which makes the
    operation idempotent.
    """
    if d.completed:
        return d
    residual = 1.0 - d.total_mass
    x = d.frame.x_mask
    merged = dict(d.masses)
    merged[x] = merged.get(x, 0.0) + residual
    masses = dict(sorted(merged.items()))
    return DNumber(d.frame, masses, completed=True)


def _require_completed(d: DNumber) -> None:
    if not d.completed:
        raise ValueError("operation requires a completed D number")


def bel(d: DNumber, a: int) -> float:
    """Belief of subset ``a``: total mass of focal sets contained in it."""
    _require_completed(d)
    if a == 0:
        return 0.0
    return math.fsum(v for m, v in d.masses.items() if m & ~a == 0)


def pl(d: DNumber, a: int) -> float:
    """Plausibility of subset ``a``: mass weighted by non-exclusivity.

    Reduces to the classical plausibility when all stored degrees are 0.
    """
    _require_completed(d)
    if a == 0:
        return 0.0
    frame = d.frame
    return math.fsum(frame.nonexclusivity(m, a) * v for m, v in d.masses.items())


@dataclass(frozen=True)
class BeliefInterval:
    """Support range [Bel(A), Pl(A)] for a proposition."""

    lower: float
    upper: float

    def __post_init__(self):
        if not (-MASS_TOL <= self.lower <= self.upper + MASS_TOL
                and self.upper <= 1.0 + MASS_TOL):
            raise ValueError(f"malformed belief interval [{self.lower}, {self.upper}]")

    def contains(self, other: "BeliefInterval", tol: float = 1e-12) -> bool:
        return (self.lower <= other.lower + tol
                and other.upper <= self.upper + tol)


def belief_interval(d: DNumber, a: int) -> BeliefInterval:
    """Belief interval [bel, pl] of subset ``a``."""
    return BeliefInterval(bel(d, a), pl(d, a))


def is_bpa(d: DNumber) -> bool:
    """True iff ``d`` is a classical basic probability assignment.

    Requires completed input with no mass touching X and a fully
    exclusive frame.
    """
    if not d.completed:
        return False
    if any(m & d.frame.x_mask for m in d.masses):
        return False
    return all(v == 0.0 for v in d.frame.degrees.values())
