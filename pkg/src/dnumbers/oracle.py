"""Brute-force reference measures, instance generation, and theorem checkers.

Everything here recomputes results by literal enumeration on small frames
so the production routines in :mod:`.core` and :mod:`.measures` can be
checked against an independent path.
"""

from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass, field

from . import dst, measures
from .core import (
    BeliefInterval,
    DNumber,
    Frame,
    bel,
    belief_interval,
    build_dnumber,
    build_frame,
    complete,
    iter_indices,
    pl,
)
from .document import document_dict

#: Largest frame size for which exhaustive subset enumeration is allowed.
ENUMERATION_CAP = 6

ORACLE_TOL = 1e-12
RANGE_TOL = 1e-9


@dataclass(frozen=True)
class GeneratorConfig:
    frame_size: int = 3
    focal_count: int = 3
    completeness: str = "random"      # complete | incomplete | random
    exclusivity: str = "random-degrees"  # exclusive | random-degrees
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.frame_size <= ENUMERATION_CAP:
            raise ValueError(f"frame size must be in [1, {ENUMERATION_CAP}]")
        if self.focal_count < 1:
            raise ValueError("focal count must be at least 1")
        if self.focal_count > 2 ** self.frame_size - 1:
            raise ValueError(
                f"focal count {self.focal_count} infeasible on a frame of "
                f"size {self.frame_size}")
        if self.completeness not in ("complete", "incomplete", "random"):
            raise ValueError(f"bad completeness {self.completeness!r}")
        if self.exclusivity not in ("exclusive", "random-degrees"):
            raise ValueError(f"bad exclusivity {self.exclusivity!r}")


@dataclass
class CheckReport:
    """Outcome of a property run over generated or enumerated instances."""

    name: str
    trials: int = 0
    failures: list[dict] = field(default_factory=list)
    max_violation: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, violation: float, tol: float, counterexample: dict) -> None:
        self.max_violation = max(self.max_violation, violation)
        if violation > tol:
            self.failures.append(counterexample)


def trial_rng(seed: int, index: int) -> random.Random:
    """Deterministic per-trial RNG derived from (seed, trial index)."""
    return random.Random(f"{seed}:{index}")


def generate_raw(config: GeneratorConfig, rng: random.Random | None = None,
                 ) -> tuple[Frame, DNumber]:
    """One random frame and raw (possibly incomplete) D number."""
    if rng is None:
        rng = random.Random(config.seed)
    n = config.frame_size
    labels = list(string.ascii_lowercase[:n])

    degrees = []
    if config.exclusivity == "random-degrees":
        everything = labels + ["X"]
        for i in range(len(everything)):
            for j in range(i + 1, len(everything)):
                degrees.append(((everything[i], everything[j]), rng.random()))
    frame = build_frame(labels, 2, degrees)

    focal = rng.sample(range(1, 2 ** n), config.focal_count)
    weights = [-math.log(1.0 - rng.random()) for _ in focal]
    scale = sum(weights)

    completeness = config.completeness
    if completeness == "random":
        completeness = rng.choice(["complete", "incomplete"])
    total = 1.0 if completeness == "complete" else max(rng.random(), 1e-6)

    entries = [(m, w / scale * total) for m, w in zip(focal, weights)]
    return frame, build_dnumber(frame, entries)


def generate(config: GeneratorConfig, rng: random.Random | None = None) -> DNumber:
    """One random completed D number, reproducible by seed."""
    _, d = generate_raw(config, rng)
    return complete(d)


def _check_enumerable(frame: Frame) -> None:
    if frame.size > ENUMERATION_CAP:
        raise ValueError(f"enumeration limited to frames of size {ENUMERATION_CAP}")


def oracle_bel_pl(d: DNumber, a: int) -> BeliefInterval:
    """Belief interval by literal definition.

    Bel enumerates subsets of ``a``; Pl enumerates all focal sets and
    applies the two-branch rule (1 on intersection, pairwise-max degree on
    disjointness) directly from the stored singleton degrees.
    """
    _check_enumerable(d.frame)
    if not d.completed:
        raise ValueError("oracle requires a completed D number")
    lower = 0.0
    for b in range(1, d.frame.full_mask + 1):
        if b & ~a == 0:
            lower += d.masses.get(b, 0.0)
    upper = 0.0
    if a != 0:
        for b, mass in d.masses.items():
            if b & a:
                upper += mass
            else:
                u = max(d.frame.lookup(i, j)
                        for i in iter_indices(b) for j in iter_indices(a))
                upper += u * mass
    return BeliefInterval(min(lower, 1.0), min(upper, 1.0))


def check_range(trials: int, config: GeneratorConfig) -> CheckReport:
    """Theorem: 0 <= KU <= N and 0 <= UU coefficient <= 1."""
    report = CheckReport("range", trials)
    n = config.frame_size
    for t in range(trials):
        d = generate(config, trial_rng(config.seed, t))
        k = measures.ku(d)
        u = measures.uu_coefficient(d)
        violation = max(0.0, -k, k - n, -u, u - 1.0)
        report.record(violation, RANGE_TOL, _counterexample(d, trial=t, ku=k, uu=u))
    return report


def _mix_with_vacuous(d: DNumber, weight: float) -> DNumber:
    """Blend a completed D number with the vacuous one (mass on Θ ∪ {X})."""
    entries = [(m, (1.0 - weight) * v) for m, v in d.masses.items()]
    entries.append((d.frame.full_mask, weight))
    return complete(build_dnumber(d.frame, entries))


def _intervals_nested(inner: DNumber, outer: DNumber) -> bool:
    for a in range(1, inner.frame.full_mask + 1):
        if not belief_interval(outer, a).contains(belief_interval(inner, a)):
            return False
    return True


def check_monotonicity(trials: int, config: GeneratorConfig) -> CheckReport:
    """Theorem: interval nesting for every subset implies KU and UU ordering.

    Unconditioned random pairs essentially never nest, so each generated
    instance is paired with its blend with the vacuous D number; the
    nesting filter still runs exhaustively before asserting.
    """
    report = CheckReport("monotonicity")
    attempts = 0
    while report.trials < trials and attempts < 10 * trials:
        rng = trial_rng(config.seed, attempts)
        attempts += 1
        d1 = generate(config, rng)
        d2 = _mix_with_vacuous(d1, rng.random())
        if not _intervals_nested(d1, d2):
            continue
        report.trials += 1
        violation = max(
            0.0,
            measures.ku(d1) - measures.ku(d2),
            measures.uu_coefficient(d1) - measures.uu_coefficient(d2),
        )
        report.record(violation, RANGE_TOL,
                      _counterexample(d1, pair=document_dict(d2.frame, d2)))
    if report.trials < trials:
        report.notes.append(
            f"only {report.trials} of {trials} pairs passed the nesting filter")
    return report


def check_set_consistency(frame: Frame) -> CheckReport:
    """Theorem: D(A) = 1 with A ⊆ Θ gives KU = |A| + Σ degrees to Θ \\ A.

    Holds for |A| >= 2. For singleton A the implemented KU formula yields
    only the degree sum (the |A| term vanishes because the singleton's
    interval is [1, 1]); that value is recorded as a note, not a failure.
    """
    _check_enumerable(frame)
    report = CheckReport("set-consistency")
    for a in range(1, frame.theta_mask + 1):
        d = complete(build_dnumber(frame, [(a, 1.0)]))
        size = sum(1 for _ in iter_indices(a))
        outside = [i for i in range(frame.size) if not a >> i & 1]
        degree_sum = math.fsum(frame.nonexclusivity(1 << i, a) for i in outside)
        observed = measures.ku(d)
        if size == 1:
            report.notes.append(
                f"|A| = 1 deviation: A = {{{', '.join(frame.labels_of(a))}}}: "
                f"observed KU = {observed:.7f} (degree sum), "
                f"set-consistency formula would give {1 + degree_sum:.7f}")
            if abs(observed - degree_sum) > RANGE_TOL:
                report.failures.append(
                    _counterexample(d, expected=degree_sum, observed=observed))
            continue
        report.trials += 1
        expected = size + degree_sum
        report.record(abs(observed - expected), RANGE_TOL,
                      _counterexample(d, expected=expected, observed=observed))
    return report


def check_degeneration(trials: int, config: GeneratorConfig | None = None,
                       ) -> CheckReport:
    """Classical BPAs: all Bel/Pl routes and both KU routes must agree."""
    if config is None:
        config = GeneratorConfig(frame_size=4, focal_count=5,
                                 completeness="complete", exclusivity="exclusive")
    report = CheckReport("degeneration", trials)
    for t in range(trials):
        d = generate(config, trial_rng(config.seed, t))
        masses = dst.mass_function(d)
        worst = 0.0
        for a in range(1, d.frame.theta_mask + 1):
            labels = frozenset(d.frame.labels_of(a))
            reference = BeliefInterval(dst.bel_m(masses, labels),
                                       dst.pl_m(masses, labels))
            slow = oracle_bel_pl(d, a)
            for lo, hi in ((bel(d, a), pl(d, a)), (slow.lower, slow.upper)):
                worst = max(worst, abs(lo - reference.lower),
                            abs(hi - reference.upper))
        worst = max(worst, abs(measures.ku(d) - measures.dst_ku_reference(d)))
        report.record(worst, ORACLE_TOL, _counterexample(d, trial=t))
    return report


def check_oracle_equivalence(trials: int, config: GeneratorConfig) -> CheckReport:
    """Core belief intervals equal the literal-definition oracle, all subsets."""
    report = CheckReport("oracle", trials)
    for t in range(trials):
        d = generate(config, trial_rng(config.seed, t))
        worst = 0.0
        for a in range(1, d.frame.full_mask + 1):
            fast = belief_interval(d, a)
            slow = oracle_bel_pl(d, a)
            worst = max(worst, abs(fast.lower - slow.lower),
                        abs(fast.upper - slow.upper))
        report.record(worst, ORACLE_TOL, _counterexample(d, trial=t))
    return report


def _counterexample(d: DNumber, **context) -> dict:
    doc = document_dict(d.frame, d)
    doc.update(context)
    return doc
