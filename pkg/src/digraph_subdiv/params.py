"""Fixed parameters of an extraction run and the resulting core report.

Every fractional threshold is compared by cross-multiplying integers; the
exact rationals are exposed only for reporting and for the trace checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .digraph import DiGraph


@dataclass(frozen=True)
class Params:
    """Original order ``n`` and outdegree parameter ``d``, fixed for the whole run."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 0 or self.d < 0:
            raise ValueError(f"invalid parameters n={self.n}, d={self.d}")
        if self.n > 0 and self.d > self.n - 1:
            raise ValueError(f"d={self.d} exceeds n-1={self.n - 1}")

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.d, self.n)

    @property
    def alpha_prime(self) -> Fraction:
        return Fraction(self.d * self.d, 4 * self.n * self.n)

    @property
    def kappa_threshold(self) -> Fraction:
        """d^2/(4n); also the required number of high-indegree vertices."""
        return Fraction(self.d * self.d, 4 * self.n)

    @property
    def kappa_needed(self) -> int:
        """Smallest integer k with 4nk >= d^2."""
        return -(-self.d * self.d // (4 * self.n)) if self.n else 0

    def high_indegree(self, indegree: int) -> bool:
        return 2 * indegree >= self.d

    def kappa_ok(self, k: int) -> bool:
        return 4 * self.n * k >= self.d * self.d

    def outdegree_ok(self, delta: int) -> bool:
        return 2 * delta > self.d

    def count_ok(self, count: int) -> bool:
        return 4 * self.n * count >= self.d * self.d


def describe_ratio(num: int, den: int) -> str:
    """``num/den (decimal)`` for key-value reports."""
    if den == 0:
        return f"{num}/0 (undefined)"
    return f"{num}/{den} ({num / den:.4f})"


@dataclass
class CoreReport:
    """Outcome of checking conditions (i)-(iii) on a candidate core.

    ``vertices`` lists the core's vertices in original ids; position ``k``
    is vertex ``k`` of ``graph``.  ``uncuttable_pairs`` counts checked pairs
    joined by an edge, which satisfy (ii) by the separator definition;
    ``capped_below`` counts those among them whose cap ``|H| - 2`` is itself
    below the threshold.
    """

    params: Params
    vertices: tuple[int, ...]
    graph: DiGraph
    min_out_degree: int
    high_indegree_count: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    mode: str
    checked_pairs: tuple[tuple[int, int], ...] = ()
    failures: tuple[tuple[int, int, int], ...] = ()
    uncuttable_pairs: int = 0
    capped_below: int = 0
    seed: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii

    def lines(self) -> list[str]:
        p = self.params
        out = [
            f"n {p.n}",
            f"d {p.d}",
            f"core_order {len(self.vertices)}",
            f"core_min_outdeg {self.min_out_degree}",
            f"cond_i {_flag(self.cond_i)} 2*min_outdeg={2 * self.min_out_degree} > d={p.d}",
            f"kappa_threshold {describe_ratio(p.d * p.d, 4 * p.n)}",
            f"cond_ii {_flag(self.cond_ii)} mode={self.mode}"
            + (f" seed={self.seed}" if self.seed is not None else "")
            + f" pairs={len(self.checked_pairs)} failures={len(self.failures)}"
            + f" uncuttable={self.uncuttable_pairs} capped_below={self.capped_below}",
            f"high_indegree_count {self.high_indegree_count}",
            f"cond_iii {_flag(self.cond_iii)} 4n*count={4 * p.n * self.high_indegree_count}"
            f" >= d^2={p.d * p.d}",
        ]
        for x, y, k in self.failures[:20]:
            out.append(f"failure {x} {y} kappa={k}")
        out.extend(f"note {note}" for note in self.notes)
        return out


def _flag(b: bool) -> str:
    return "pass" if b else "FAIL"
