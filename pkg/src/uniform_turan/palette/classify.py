"""Combine certificate memberships into bounds on the uniform Turan density."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..hypergraph import ThreeGraph
from .dstar import d_star
from .kinds import PropertyKind
from .solver import DEFAULT_MAX_VERTICES, DEFAULT_TIMEOUT_MS, SolveResult, Status, solve


@dataclass(frozen=True)
class Bound:
    label: str   # "0", "1/4", "d*" or "1"
    value: float

    def to_dict(self) -> dict:
        return {"label": self.label, "value": self.value}


ZERO = Bound("0", 0.0)
QUARTER = Bound("1/4", 0.25)
ONE = Bound("1", 1.0)


@dataclass(frozen=True)
class ClassificationReport:
    memberships: dict[PropertyKind, SolveResult]
    lower_bound: Bound
    upper_bound: Bound
    rationale: tuple[str, ...] = field(default=())

    @property
    def verdict(self) -> str:
        if self.upper_bound.value == 0:
            return "exact 0"
        if self.lower_bound.label == self.upper_bound.label == "1/4":
            return "exact 1/4"
        return f"between {self.lower_bound.label} and {self.upper_bound.label}"

    def to_dict(self) -> dict:
        return {
            "memberships": {k.value: r.to_dict() for k, r in self.memberships.items()},
            "lower_bound": self.lower_bound.to_dict(),
            "upper_bound": self.upper_bound.to_dict(),
            "verdict": self.verdict,
            "rationale": list(self.rationale),
        }


def classify(F: ThreeGraph, *, max_vertices: int = DEFAULT_MAX_VERTICES,
             timeout_ms: int | None = DEFAULT_TIMEOUT_MS, threads: int = 1) -> ClassificationReport:
    """Run every certificate search and apply the bound implications.

    - vanishing certificate            -> density 0
    - no CLUBS certificate             -> density >= 1/4
    - SPADES certificate               -> density <= 1/4
    - five-color certificate           -> density <= d*
    Search errors (guard, timeout) propagate.
    """
    results = {k: solve(F, k, max_vertices=max_vertices, timeout_ms=timeout_ms, threads=threads)
               for k in PropertyKind}
    sat = {k: r.status is Status.SAT for k, r in results.items()}
    why = []

    lower = ZERO
    if not sat[PropertyKind.CLUBS]:
        lower = QUARTER
        why.append("no CLUBS certificate: the random two-coloring construction avoids F, so the density is >= 1/4")

    if sat[PropertyKind.VANISHING]:
        upper = ZERO
        why.append("vanishing certificate found: the density is 0")
    else:
        upper = ONE
        if sat[PropertyKind.SPADES]:
            upper = QUARTER
            why.append("SPADES certificate found: the density is <= 1/4")
        if sat[PropertyKind.FIVE_COLOR]:
            ds = d_star().value
            if ds < upper.value:
                upper = Bound("d*", ds)
            why.append("five-color certificate found: the density is <= d*")
        if upper is ONE:
            why.append("no upper-bound certificate applies: trivial bound 1")

    if lower.value > upper.value:
        raise AssertionError(f"inconsistent bounds {lower} > {upper}; a solver result is wrong")
    return ClassificationReport(results, lower, upper, tuple(why))
