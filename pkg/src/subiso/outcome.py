"""Result and statistics types shared by all matching engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Mapping


@dataclass
class SearchStats:
    """Search-effort counters populated by every engine.

    ``candidates_total`` sums the sizes of all candidate sets built for
    the check (one per query vertex, or one per cover path).  ``order``
    records the unit processing order actually used: query vertex indices
    for the vertex-at-a-time engines, cover-path vertex tuples for the
    path engine.
    """

    recursive_calls: int = 0
    feasibility_failures: int = 0
    candidates_total: int = 0
    index_seconds: float = 0.0
    order: tuple = ()
    state_clean: bool = True

    def merge(self, other: "SearchStats") -> None:
        self.recursive_calls += other.recursive_calls
        self.feasibility_failures += other.feasibility_failures
        self.candidates_total += other.candidates_total
        self.index_seconds += other.index_seconds
        self.state_clean = self.state_clean and other.state_clean


@dataclass
class MatchOutcome:
    """Verdict of one containment check, plus optional witness(es)."""

    found: bool
    witness: Optional[Mapping] = None
    witnesses: Optional[list[Mapping]] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def witness_count(self) -> int:
        return len(self.witnesses) if self.witnesses is not None else (
            1 if self.found else 0)

    def __bool__(self) -> bool:
        return self.found


MODES = ("boolean", "witness", "count-all")


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode
