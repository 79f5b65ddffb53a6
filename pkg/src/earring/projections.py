"""Erasure retractions, truncated inverse-limit elements and their metric."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .text import format_word, parse_word
from .word_core import EMPTY, ReducedWord, Word, reduce

__all__ = [
    "CoherentSequence",
    "DistanceValue",
    "CoordinateStatus",
    "LimitReport",
    "collapse_above",
    "erase_above",
    "erase_top",
    "phi_truncated",
    "trivial",
    "check_coherence",
    "distance",
    "sequence_limit_report",
]


def collapse_above(w: Word, k: int) -> Word:
    """The retracted loop itself: letters with index > k become constant
    segments at the basepoint.  No reduction, so the path keeps every visit
    it makes inside the first k circles."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return Word._trusted(tuple(c for c in w.codes if -k <= c <= k))


def erase_above(w: Word, k: int) -> ReducedWord:
    """Collapse every circle with index > k to the basepoint, then reduce."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return EMPTY
    if w.max_index <= k:
        return reduce(w)
    return reduce(Word._trusted(tuple(c for c in w.codes if -k <= c <= k)))


def erase_top(w: ReducedWord, n: int) -> ReducedWord:
    """Bonding map F_n -> F_{n-1} of the inverse system."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if w.max_index > n:
        raise ValueError(f"word uses index {w.max_index} > {n}")
    return erase_above(w, n - 1)


class CoherentSequence:
    """Depth-K truncation ``(a_1, ..., a_K)`` of an inverse-limit element.

    Entry ``k`` must be reduced and use only indices ``<= k``.  Compatibility
    under the bonding maps is *not* enforced here; test it with
    :func:`check_coherence`.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Word]):
        if len(entries) < 1:
            raise ValueError("depth must be >= 1")
        checked = []
        for k, e in enumerate(entries, start=1):
            if not isinstance(e, ReducedWord):
                e = ReducedWord(e)
            if e.max_index > k:
                raise ValueError(f"entry {k} uses index {e.max_index} > {k}")
            checked.append(e)
        object.__setattr__(self, "entries", tuple(checked))

    @classmethod
    def _trusted(cls, entries: tuple[ReducedWord, ...]):
        self = object.__new__(cls)
        object.__setattr__(self, "entries", entries)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("CoherentSequence is immutable")

    @property
    def depth(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> ReducedWord:
        """Entry at depth ``k`` (1-based)."""
        if not 1 <= k <= len(self.entries):
            raise IndexError(f"depth {k} outside 1..{len(self.entries)}")
        return self.entries[k - 1]

    def __eq__(self, other) -> bool:
        if isinstance(other, CoherentSequence):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"CoherentSequence(depth={self.depth})"

    def is_identity(self) -> bool:
        return not any(self.entries)

    def to_text(self) -> str:
        lines = [f"depth {self.depth}"]
        lines.extend(format_word(e) for e in self.entries)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "CoherentSequence":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines:
            raise ValueError("empty input")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "depth":
            raise ValueError(f"expected header 'depth K', got {lines[0]!r}")
        depth = int(head[1])
        body = lines[1:]
        if len(body) != depth:
            raise ValueError(f"header says depth {depth} but {len(body)} entries follow")
        return cls([parse_word(ln) for ln in body])

    def to_json(self) -> str:
        return json.dumps({"depth": self.depth, "entries": [format_word(e) for e in self.entries]})

    @classmethod
    def from_json(cls, data) -> "CoherentSequence":
        if isinstance(data, str):
            data = json.loads(data)
        entries = [parse_word(s) for s in data["entries"]]
        if data["depth"] != len(entries):
            raise ValueError(f"depth {data['depth']} does not match {len(entries)} entries")
        return cls(entries)


def trivial(depth: int) -> CoherentSequence:
    """The identity element truncated at ``depth``."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    return CoherentSequence._trusted((EMPTY,) * depth)


def phi_truncated(w: Word, K: int) -> CoherentSequence:
    """``(R_1 w, ..., R_K w)``: the image of ``w`` in the inverse limit, to depth K.

    Built top-down: entry ``k-1`` is the bonding image of entry ``k``, which
    is the same object whenever entry ``k`` does not use index ``k``.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    entries: list[ReducedWord] = [EMPTY] * K
    cur = erase_above(w, K)
    top = cur.max_index
    for k in range(K, 0, -1):
        if top > k:
            cur = erase_above(cur, k)
            top = cur.max_index
        entries[k - 1] = cur
    return CoherentSequence._trusted(tuple(entries))


def check_coherence(a: CoherentSequence) -> bool:
    entries = a.entries
    for k in range(2, len(entries) + 1):
        upper, lower = entries[k - 1], entries[k - 2]
        if upper is lower:
            continue
        if upper.max_index > k or erase_top(upper, k) != lower:
            return False
    return True


@functools.total_ordering
@dataclass(frozen=True)
class DistanceValue:
    """Exact distance ``2**log2_distance``, or ``None`` for agreement.

    Agreement through the shared depth sorts below every ``2**-k``.
    """

    log2_distance: Optional[int]

    @property
    def equal(self) -> bool:
        return self.log2_distance is None

    def _key(self) -> float:
        return float("-inf") if self.log2_distance is None else self.log2_distance

    def __lt__(self, other: "DistanceValue") -> bool:
        if not isinstance(other, DistanceValue):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return "equal" if self.log2_distance is None else f"2^{self.log2_distance}"


def distance(a: CoherentSequence, b: CoherentSequence) -> DistanceValue:
    """Product ultrametric ``2**-k`` where k is the first depth of disagreement."""
    if a.depth != b.depth:
        raise ValueError(f"depth mismatch: {a.depth} vs {b.depth}")
    for k, (x, y) in enumerate(zip(a.entries, b.entries), start=1):
        if x is not y and x != y:
            return DistanceValue(-k)
    return DistanceValue(None)


@dataclass(frozen=True)
class CoordinateStatus:
    depth: int
    stable: bool
    value: Optional[ReducedWord]
    position: Optional[int]  # 1-based index into the list where the terminal run starts


@dataclass(frozen=True)
class LimitReport:
    depth: int
    coordinates: tuple[CoordinateStatus, ...]
    limit: Optional[CoherentSequence]


def sequence_limit_report(
    seq: Sequence[CoherentSequence], depth: Optional[int] = None, min_run: int = 2
) -> LimitReport:
    """Coordinatewise stabilization of a finite list of truncated sequences.

    A coordinate counts as stable when its terminal run of equal values has
    at least ``min_run`` members (or covers the whole list).  Nothing is
    extrapolated past the end of the list.
    """
    if not seq:
        raise ValueError("sequence must be nonempty")
    if depth is None:
        depth = seq[0].depth
    for i, a in enumerate(seq, start=1):
        if a.depth != depth:
            raise ValueError(f"member {i} has depth {a.depth}, expected {depth}")
    if min_run < 1:
        raise ValueError(f"min_run must be >= 1, got {min_run}")
    n = len(seq)
    coords = []
    for k in range(depth):
        last = seq[-1].entries[k]
        start = n - 1
        while start > 0 and seq[start - 1].entries[k] == last:
            start -= 1
        run = n - start
        if run >= min_run or start == 0:
            coords.append(CoordinateStatus(k + 1, True, last, start + 1))
        else:
            coords.append(CoordinateStatus(k + 1, False, None, None))
    limit = None
    if all(c.stable for c in coords):
        limit = CoherentSequence._trusted(tuple(c.value for c in coords))
    return LimitReport(depth, tuple(coords), limit)
