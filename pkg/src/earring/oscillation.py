"""The oscillation number of a loop and its behaviour under free reduction.

On the edge-path of a word the loop sits at the basepoint between letters
and passes the far point of the first circle exactly once per letter of
index 1, so the oscillation number is the count of such letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .text import format_word
from .word_core import ReducedWord, Word, reduce

__all__ = [
    "ReductionTrace",
    "MonotonicityError",
    "oscillation_number",
    "min_oscillation_in_class",
    "cancellable_positions",
    "cancel_at",
    "verify_reduction_monotone",
]


def oscillation_number(w: Word) -> int:
    return sum(1 for c in w.codes if c == 1 or c == -1)


def min_oscillation_in_class(w: Word) -> int:
    """Least oscillation over all words equal to ``w`` in the free group.

    Every representative reduces to the same normal form by deleting
    letters, so the normal form is the minimizer.
    """
    return oscillation_number(reduce(w))


def cancellable_positions(codes: tuple[int, ...]) -> list[int]:
    return [i for i in range(len(codes) - 1) if codes[i] == -codes[i + 1]]


def cancel_at(codes: tuple[int, ...], i: int) -> tuple[int, ...]:
    if not (0 <= i < len(codes) - 1 and codes[i] == -codes[i + 1]):
        raise ValueError(f"no cancelling pair at position {i}")
    return codes[:i] + codes[i + 2 :]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[tuple[Word, int], ...]

    @property
    def words(self) -> list[Word]:
        return [w for w, _ in self.steps]

    @property
    def counts(self) -> list[int]:
        return [m for _, m in self.steps]

    def is_monotone(self) -> bool:
        counts = self.counts
        return all(a >= b for a, b in zip(counts, counts[1:]))

    def to_json(self) -> str:
        return json.dumps(
            {"steps": [{"word": format_word(w), "oscillation": m} for w, m in self.steps]}
        )


class MonotonicityError(AssertionError):
    def __init__(self, trace: ReductionTrace):
        self.trace = trace
        super().__init__(f"oscillation increased along reduction: {trace.counts}")


def verify_reduction_monotone(w: Word, seed: int) -> ReductionTrace:
    """Reduce ``w`` one random cancellation at a time, recording oscillation.

    Raises :class:`MonotonicityError` if any step raises the count, and
    ``AssertionError`` if the terminal word is not ``reduce(w)``.
    """
    rng = np.random.default_rng(seed)
    codes = w.codes
    steps = [(w, oscillation_number(w))]
    while True:
        pos = cancellable_positions(codes)
        if not pos:
            break
        codes = cancel_at(codes, pos[int(rng.integers(len(pos)))])
        cur = Word._trusted(codes)
        steps.append((cur, oscillation_number(cur)))
        if steps[-1][1] > steps[-2][1]:
            raise MonotonicityError(ReductionTrace(tuple(steps)))
    final = ReducedWord._trusted(codes)
    steps[-1] = (final, steps[-1][1])
    if final != reduce(w):
        raise AssertionError(f"random reduction ended at {final!r}, expected {reduce(w)!r}")
    return ReductionTrace(tuple(steps))
